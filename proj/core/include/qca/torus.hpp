#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qca/intmat.hpp"
#include "qca/qlaurent.hpp"

namespace qca {

/// A lattice point of Z^m.
using Exponent = IntVector;

enum class Sign : int { plus = 1, minus = -1 };

constexpr int sign_value(Sign s) { return static_cast<int>(s); }
constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Skew-symmetric integer bilinear form on Z^m.
class SkewForm {
public:
  /// Throws PreconditionViolation unless `entries` is skew-symmetric.
  explicit SkewForm(IntMatrix entries);

  std::size_t dim() const { return entries_.rows(); }
  const IntMatrix& matrix() const { return entries_; }

  /// Lambda(e, f) = e^T Lambda f.
  std::int64_t operator()(std::span<const std::int64_t> e,
                          std::span<const std::int64_t> f) const {
    return entries_.bilinear(e, f);
  }
  /// The row vector Lambda(b, .).
  IntVector row_of(std::span<const std::int64_t> b) const {
    return entries_.apply_left(b);
  }

  friend bool operator==(const SkewForm& a, const SkewForm& b) = default;

private:
  IntMatrix entries_;
};

using SkewFormPtr = std::shared_ptr<const SkewForm>;

inline SkewFormPtr make_form(IntMatrix entries) {
  return std::make_shared<const SkewForm>(std::move(entries));
}

/// Symmetric integer matrix Sigma, read as the quadratic form c -> Sigma(c, c).
class GradingMatrix {
public:
  /// Throws PreconditionViolation unless `entries` is symmetric.
  explicit GradingMatrix(IntMatrix entries);

  std::size_t dim() const { return entries_.rows(); }
  const IntMatrix& matrix() const { return entries_; }
  std::int64_t degree(std::span<const std::int64_t> c) const {
    return entries_.bilinear(c, c);
  }

  friend bool operator==(const GradingMatrix& a, const GradingMatrix& b) = default;

private:
  IntMatrix entries_;
};

/// Element of the based quantum torus T(Lambda): a finite Z[q^{+-1/2}]-linear
/// combination of basis elements X^e, multiplied by
/// X^e X^f = q^{Lambda(e,f)/2} X^{e+f}.
///
/// Terms are kept in a map ordered lexicographically by exponent, so the last
/// entry is the lex-leading term. No stored coefficient is zero.
class TorusElement {
public:
  using TermMap = std::map<Exponent, QLaurent>;

  explicit TorusElement(SkewFormPtr form);
  TorusElement(SkewFormPtr form, TermMap terms);

  static TorusElement basis(SkewFormPtr form, Exponent e, QLaurent coeff = QLaurent(1));
  static TorusElement constant(SkewFormPtr form, QLaurent c);

  const SkewFormPtr& form() const { return form_; }
  std::size_t dim() const { return form_->dim(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Exactly one term.
  bool is_monomial() const { return terms_.size() == 1; }
  QLaurent coeff(const Exponent& e) const;
  /// Lex-maximal term. Precondition: nonzero.
  const TermMap::value_type& leading() const { return *terms_.rbegin(); }

  /// Multiplies every coefficient by a central scalar.
  TorusElement scaled(const QLaurent& c) const;
  /// Multiplies by q^{dh/2}.
  TorusElement shifted(std::int64_t dh) const;

  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& other);
  TorusElement& operator-=(const TorusElement& other);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);

  friend bool operator==(const TorusElement& a, const TorusElement& b);
  /// Total order on elements over the same form, used for canonical sorting:
  /// term count, then terms from the lex-leading one downwards.
  friend std::strong_ordering compare(const TorusElement& a, const TorusElement& b);

  /// Lossless rendering "c*X^(e_1,...,e_m)" joined by " + ".
  std::string to_string() const;
  /// Human-oriented rendering with a chosen basis symbol, e.g.
  /// "Y^(1,-2) + (q^(1/2) + q^(-1/2))*Y^(0,-2)".
  std::string render(const std::string& symbol = "X") const;

private:
  void check_same_form(const TorusElement& other, const char* what) const;

  SkewFormPtr form_;
  TermMap terms_;
};

bool same_form(const SkewForm& a, const SkewForm& b);

/// 1 * X^e. Throws DimensionMismatch when dim(e) != m.
TorusElement basis_elem(const SkewFormPtr& form, const Exponent& e);

inline TorusElement torus_mul(const TorusElement& a, const TorusElement& b) { return a * b; }

/// Non-negative power; negative powers are allowed for monomials with unit
/// coefficient. Throws NonInvertibleEntry otherwise.
TorusElement power(const TorusElement& x, std::int64_t n);

/// Termwise coefficient bar; exponent vectors unchanged.
TorusElement bar(const TorusElement& x);

/// q^{r/2} X^c -> q^{-(r + Sigma(c,c))/2} X^c.
TorusElement twisted_bar(const TorusElement& x, const GradingMatrix& sigma);

/// Common value of Sigma(c,c) over the support. Throws ZeroElement or
/// Inhomogeneous.
std::int64_t deg_sigma(const TorusElement& x, const GradingMatrix& sigma);

/// Positive generator of {Lambda(b, e) : e in Z^m}. Throws KernelVector.
std::int64_t d_of_b(const SkewForm& form, const Exponent& b);

/// prod_{p=1}^{r} (1 + q^{eps (2p-1) d(b)/2} X^{eps b}).
TorusElement p_element(const SkewFormPtr& form, const Exponent& b, Sign eps, std::int64_t r);

/// sum_{p=0}^{r} [r choose p]_{q^{d(b)/2}} X^{e + eps p b}, where
/// Lambda(b, e) = -r d(b). Throws PositiveDegree when Lambda(b, e) > 0.
TorusElement rho_poly(const SkewFormPtr& form, const Exponent& b, Sign eps, const Exponent& e);

/// The unique q with a * q = n. Throws NotDivisible when no quotient exists in
/// the torus, NonIntegralQuotient when the quotient only exists with
/// coefficients outside Z[q^{+-1/2}].
TorusElement solve_left(const TorusElement& a, const TorusElement& n);

/// LLL-reduced Z-basis of ker Lambda; its monomials span the center.
std::vector<Exponent> center_kernel(const SkewForm& form);

} // namespace qca
