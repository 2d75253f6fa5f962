#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qca/intmat.hpp"
#include "qca/pairs.hpp"
#include "qca/seeds.hpp"

namespace qca {

/// Symmetrizable generalized Cartan matrix with its symmetrizer.
struct CartanData {
  IntMatrix a;
  IntVector d;

  std::size_t rank() const { return a.rows(); }
  /// a_{ij} with 1-based indices.
  std::int64_t at(std::size_t i, std::size_t j) const { return a(i - 1, j - 1); }
  friend bool operator==(const CartanData&, const CartanData&) = default;
};

/// Checks a_ii = 2, a_ij <= 0 and a_ij = 0 <=> a_ji = 0 (NotCartan), then
/// either verifies the given d or computes the componentwise minimal one
/// (NotSymmetrizable).
CartanData validate_cartan(const IntMatrix& a, std::optional<IntVector> d = std::nullopt);

/// sum_j mcoef_j omega_j + sum_j ccoef_j alpha_j, kept formally.
struct FormalWeight {
  IntVector mcoef;
  IntVector ccoef;

  static FormalWeight zero(std::size_t r) { return {IntVector(r, 0), IntVector(r, 0)}; }
  static FormalWeight omega(std::size_t r, std::size_t j);
  static FormalWeight alpha(std::size_t r, std::size_t j);

  FormalWeight& operator+=(const FormalWeight& o);
  FormalWeight& operator-=(const FormalWeight& o);
  friend FormalWeight operator+(FormalWeight a, const FormalWeight& b) { return a += b; }
  friend FormalWeight operator-(FormalWeight a, const FormalWeight& b) { return a -= b; }
  friend bool operator==(const FormalWeight&, const FormalWeight&) = default;
};

/// gamma(alpha_i^vee) = mcoef_i + sum_j a_ij ccoef_j.
std::int64_t coroot_value(const CartanData& cd, std::size_t i, const FormalWeight& w);

/// (gamma | delta) for gamma in the root span (zero mcoef), using
/// (alpha_j | delta) = d_j delta(alpha_j^vee).
std::int64_t root_pairing(const CartanData& cd, const FormalWeight& root_part,
                          const FormalWeight& delta);

/// s_i(gamma) = gamma - gamma(alpha_i^vee) alpha_i.
FormalWeight reflect(const CartanData& cd, std::size_t i, const FormalWeight& w);

/// Sequence over +-[1, r] with the nearest-same-letter neighbours k^+ and k^-
/// and the exchangeable set.
class DoubleWord {
public:
  /// Throws PreconditionViolation for zero letters or letters outside +-[1, r].
  DoubleWord(std::vector<std::int64_t> entries, std::size_t r);

  std::size_t size() const { return entries_.size(); }
  std::size_t rank() const { return r_; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  /// i_k, 1-based.
  std::int64_t at(std::size_t k) const { return entries_.at(k - 1); }
  std::size_t letter(std::size_t k) const;
  int sign(std::size_t k) const { return at(k) > 0 ? 1 : -1; }
  /// Smallest l > k with |i_l| = |i_k|, or m + 1.
  std::size_t kplus(std::size_t k) const { return kplus_.at(k - 1); }
  /// The l with l^+ = k, or 0.
  std::size_t kminus(std::size_t k) const { return kminus_.at(k - 1); }
  const std::vector<std::size_t>& ex() const { return ex_; }
  bool is_exchangeable(std::size_t k) const;

private:
  std::vector<std::int64_t> entries_;
  std::size_t r_;
  std::vector<std::size_t> kplus_, kminus_, ex_;
};

/// pi_eps[a, b] w = s_{eps i_a} ... s_{eps i_b} w, where s_{-i} is the identity.
FormalWeight pi_eps(const CartanData& cd, const DoubleWord& dw, std::size_t a, std::size_t b,
                    Sign eps, const FormalWeight& w);

/// eta_kl; zero unless 1 <= l <= k <= m. The optional shifts are added to the
/// two fundamental weights and must be W-invariant (zero on every coroot).
std::int64_t eta(const CartanData& cd, const DoubleWord& dw, std::size_t k, std::size_t l,
                 const FormalWeight* shift_k = nullptr, const FormalWeight* shift_l = nullptr);

struct LambdaSigma {
  SkewFormPtr lambda;
  GradingMatrix sigma;
};

LambdaSigma lambda_sigma_matrices(const CartanData& cd, const DoubleWord& dw);

/// Entry b_pk of the six-case formula, defined for all p, k in [1, m].
std::int64_t btilde_entry(const CartanData& cd, const DoubleWord& dw, std::size_t p,
                          std::size_t k);
ExchangeMatrix btilde_matrix(const CartanData& cd, const DoubleWord& dw);
/// m x m matrix of btilde_entry over every column, ex or not.
IntMatrix btilde_all_columns(const CartanData& cd, const DoubleWord& dw);

/// Same matrix through b_pk = s_pk - s_{p,k+} - s_{p+,k} + s_{p+,k+}. The sign
/// of the fictitious letter i_{m+1} used when p^+ = m + 1 is selectable.
ExchangeMatrix btilde_via_s(const CartanData& cd, const DoubleWord& dw,
                            Sign sentinel = Sign::plus);

enum class WordCondition { strong, weak, neither };

const char* to_string(WordCondition c);

WordCondition check_word_condition(const CartanData& cd, const DoubleWord& dw);

struct CartanIdentityReport {
  CompatiblePair pair;
  GradingMatrix sigma;
  WordCondition condition;
};

/// Checks sum_p b_pk lambda_pl = 2 delta_kl d_{|i_k|} and sum_p b_pk sigma_pl = 0
/// for every l and k in ex. Throws PreconditionViolation when neither word
/// condition holds and IdentityFailure naming (k, l) otherwise.
CartanIdentityReport verify_cartan_identities(const CartanData& cd, const DoubleWord& dw);

/// Checks sum_p b_pk eta_pl = delta_{k+, l} d_{|i_k|} for all k with k^+ <= m
/// and all l, with b extended to every column. Throws IdentityFailure.
void verify_b_eta_identity(const CartanData& cd, const DoubleWord& dw);

/// Graded initial seed over (Lambda(i), B~(i), Sigma(i)).
QuantumSeed seed_from_cartan(const CartanData& cd, const DoubleWord& dw);

} // namespace qca
