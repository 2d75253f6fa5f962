#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qca {

/// Integer Laurent polynomial in q^{1/2}.
///
/// Exponents are counted in half units: the term with half-exponent h is
/// c * q^{h/2}. Storage is dense between the lowest and highest nonzero
/// half-exponent; the zero polynomial has no storage. Values are immutable
/// from the caller's point of view and every operation returns a fresh value.
class QLaurent {
public:
  using Term = std::pair<std::int64_t, mpz_class>;

  QLaurent() = default;
  explicit QLaurent(long constant);
  explicit QLaurent(const mpz_class& constant);

  /// c * q^{h/2}
  static QLaurent monomial(std::int64_t h, const mpz_class& c = 1);
  /// Builds from (half-exponent, coefficient) pairs; repeated exponents add up.
  static QLaurent from_terms(const std::vector<Term>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Single nonzero term.
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Units of Z[q^{+-1/2}] are exactly +-q^{h/2}.
  bool is_unit() const;

  /// Lowest / highest half-exponent carrying a nonzero coefficient.
  /// Precondition: nonzero.
  std::int64_t low() const { return low_; }
  std::int64_t high() const {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const mpz_class& leading_coeff() const { return coeffs_.back(); }
  const mpz_class& trailing_coeff() const { return coeffs_.front(); }

  mpz_class coeff(std::int64_t h) const;
  std::size_t num_terms() const;
  /// Nonzero terms in ascending half-exponent order.
  std::vector<Term> terms() const;

  /// Multiplies by q^{dh/2}.
  QLaurent shifted(std::int64_t dh) const;
  /// Replaces q^{h/2} by q^{-h/2}.
  QLaurent bar() const;
  /// Replaces q^{h/2} by q^{factor*h/2}; factor 0 collapses to q = 1.
  QLaurent scale_exponents(std::int64_t factor) const;
  /// Value at q = 1.
  mpz_class at_one() const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& other);
  QLaurent& operator-=(const QLaurent& other);
  QLaurent& operator*=(const QLaurent& other);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent& operator*=(const mpz_class& scalar);

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  /// Total order used for canonical sorting: by term count, then by the
  /// ascending term list.
  friend std::strong_ordering compare(const QLaurent& a, const QLaurent& b);

  /// Renders as signed terms "c*q^(e)" in descending order, e.g.
  /// "1*q^(1/2) + 1*q^(-1/2)"; zero renders as "0".
  std::string to_string() const;
  /// Inverse of to_string. Also accepts the bare forms "q", "q^(e)", "c".
  static QLaurent parse(std::string_view text);
  /// Compact rendering for people: "q + 1 + q^(-1)", "q^(1/2) + q^(-1/2)".
  std::string to_pretty_string() const;

  /// Raw dense storage (coefficient of q^{(low+i)/2} at index i).
  const std::vector<mpz_class>& dense() const { return coeffs_; }

private:
  QLaurent(std::int64_t low, std::vector<mpz_class> coeffs);
  void trim();

  std::int64_t low_ = 0;
  std::vector<mpz_class> coeffs_;

  friend class QRational;
  friend std::optional<QLaurent> exact_divide(const QLaurent&, const QLaurent&);
  friend QLaurent gcd(const QLaurent&, const QLaurent&);
};

/// bar(q^{h/2}) = q^{-h/2}; a ring involution.
inline QLaurent coeff_bar(const QLaurent& a) { return a.bar(); }

/// Exact quotient a / b in Z[q^{+-1/2}], or nullopt when b does not divide a.
/// Throws DivisionByZero when b is zero.
std::optional<QLaurent> exact_divide(const QLaurent& a, const QLaurent& b);

/// Greatest common divisor, normalized to lowest half-exponent 0 and positive
/// leading coefficient. gcd(0, 0) = 0.
QLaurent gcd(const QLaurent& a, const QLaurent& b);

/// Centered t-binomial coefficient [r choose p]_t evaluated at t = q^{dhalf/2}.
/// Zero when p < 0 or p > r.
QLaurent gauss_binom(std::int64_t r, std::int64_t p, std::int64_t dhalf);

/// Element of the fraction field Q(q^{1/2}) in reduced normal form: numerator
/// and denominator coprime, denominator with lowest half-exponent 0 and
/// positive leading coefficient.
class QRational {
public:
  QRational() : den_(1) {}
  QRational(QLaurent value); // NOLINT: Laurent polynomials embed
  QRational(QLaurent num, QLaurent den);

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Z[q^{+-1/2}].
  bool is_laurent() const { return den_.is_one(); }
  /// Precondition: is_laurent().
  const QLaurent& to_laurent() const;

  QRational operator-() const;
  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b);
  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  friend bool operator==(const QRational& a, const QRational& b) = default;

  std::string to_string() const;

private:
  void normalize();

  QLaurent num_;
  QLaurent den_;
};

/// Reduced fraction a / b. Throws DivisionByZero when b is zero.
QRational qrational_divide(const QLaurent& a, const QLaurent& b);

} // namespace qca
