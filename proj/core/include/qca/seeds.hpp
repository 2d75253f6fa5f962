#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qca/pairs.hpp"
#include "qca/torus.hpp"

namespace qca {

/// A quantum seed. The frame holds the m cluster and frozen variables
/// expanded in the torus of the initial seed; `pair` and `sigma` are the
/// current (mutated) data.
struct QuantumSeed {
  CompatiblePair pair;
  SkewFormPtr initial_form;
  std::optional<GradingMatrix> initial_sigma;
  std::vector<TorusElement> frame;
  std::optional<GradingMatrix> sigma;
  std::vector<std::size_t> history;

  std::size_t m() const { return pair.m(); }
  const std::vector<std::size_t>& ex() const { return pair.ex(); }
  /// Frame entry with 1-based label i.
  const TorusElement& x(std::size_t i) const { return frame.at(i - 1); }
};

/// Equality of pair, frame and grading; history is ignored.
bool operator==(const QuantumSeed& a, const QuantumSeed& b);

/// frame[i] = X^{e_i}. Throws NotGraded when sigma is given and B~^T sigma != 0.
QuantumSeed initial_seed(const CompatiblePair& p,
                         std::optional<GradingMatrix> sigma = std::nullopt);

/// M(c) = q^{(1/2) sum_{l<k} c_k c_l lambda_kl} X_1^{c_1} ... X_m^{c_m} in the
/// initial torus. Throws NonInvertibleEntry for a negative exponent on a
/// multi-term entry.
TorusElement frame_eval(const QuantumSeed& s, std::span<const std::int64_t> c);

struct MutationOptions {
  /// Re-check quasi-commutation of the new entry with the rest of the frame
  /// and its bar-invariance.
  bool verify = true;
  /// Also compute the new entry through rho_poly for both signs and require
  /// agreement with the exchange-relation quotient.
  bool cross_check = false;
};

/// Mutation in direction k. Throws InvalidDirection, LaurentViolation when the
/// exchange-relation quotient is not a Laurent polynomial, and
/// InvariantViolation / BarViolation when verification is on and fails.
QuantumSeed mutate(const QuantumSeed& s, std::size_t k, const MutationOptions& opt = {});

/// Right-hand side of the exchange relation X_k X'_k = N in the initial torus.
TorusElement exchange_rhs(const QuantumSeed& s, std::size_t k);

/// X'_k recomputed from X^{e_k} rho(X^{E_eps e_k}) for the given sign.
TorusElement mutated_entry_via_rho(const QuantumSeed& s, std::size_t k, Sign eps);

/// t with a b = q^{t/2} b a, or nullopt.
std::optional<std::int64_t> quasi_commutation_exponent(const TorusElement& a,
                                                       const TorusElement& b);

/// Adjacent variable X'_k = X^{-e_k + [b^k]_+} + X^{-e_k + [-b^k]_+} in the
/// torus of the seed's current Lambda.
TorusElement adjacent_variable(const CompatiblePair& p, std::size_t k);

struct QuasiCommutatorReport {
  bool quasi_commute = false;
  /// For quasi-commuting entries r is the exponent of X'_j X'_k = q^{r/2} X'_k X'_j.
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  Exponent e;
};

/// Finds X'_j X'_k - q^{r/2} X'_k X'_j = (q^{s/2} - q^{t/2}) X^e with e >= 0,
/// or certifies quasi-commutation when b_jk = 0. Throws ShapeViolation when
/// neither holds.
QuasiCommutatorReport quasi_commutator_check(const QuantumSeed& s, std::size_t j, std::size_t k);

struct StandardMonomial {
  IntVector a;
  IntVector a_prime;
  TorusElement value;
};

/// X_1^{a_1} ... X_n^{a_n} (X'_1)^{a'_1} ... (X'_n)^{a'_n} over ex, entries in
/// [0, bound] and a_k a'_k = 0, in the seed's current torus.
std::vector<StandardMonomial> standard_monomials(const QuantumSeed& s, std::int64_t bound);

/// Box of frozen exponents allowed in relation coefficients; indices are
/// 1-based labels outside ex. Empty means coefficients in Z[q^{+-1/2}].
struct FrozenWindow {
  std::vector<std::size_t> indices;
  IntVector lo;
  IntVector hi;
};

struct IndependenceVerdict {
  bool independent = true;
  /// Column (monomial index, frozen shift) for each witness coordinate.
  std::vector<std::pair<std::size_t, Exponent>> columns;
  /// Nontrivial relation, first nonzero coordinate normalized to 1.
  std::vector<QRational> witness;
  std::size_t rank = 0;
};

IndependenceVerdict independence_test(const std::vector<TorusElement>& mons,
                                      const FrozenWindow& window = {});

struct GradingReport {
  IntVector degrees;
};

/// Every frame entry is deg-homogeneous for the initial Sigma with degree
/// Sigma_current(e_i, e_i). Throws PreconditionViolation for ungraded seeds,
/// Inhomogeneous or InvariantViolation naming the offending index.
GradingReport grading_check(const QuantumSeed& s);

/// Throws BarViolation naming the first frame entry not fixed by bar.
void bar_check(const QuantumSeed& s);

/// Seed with exchangeable positions reordered so the frame entries at ex are
/// increasing; Lambda, B~ and Sigma are permuted along.
QuantumSeed canonical_form(const QuantumSeed& s);
/// Byte string identifying the canonical form.
std::string canonical_key(const QuantumSeed& s);

struct ExchangeGraph {
  struct Edge {
    std::size_t from;
    std::size_t direction;
    std::size_t to;
  };
  std::vector<QuantumSeed> vertices;
  std::vector<Edge> edges;
  std::vector<std::size_t> depth;
  std::size_t initial = 0;
  bool truncated = false;
};

struct ExploreOptions {
  std::size_t max_seeds = 10000;
  std::size_t max_depth = 64;
  /// 0 or 1 runs sequentially; more splits each frontier across tasks.
  std::size_t threads = 1;
  MutationOptions mutation{};
};

/// Breadth-first closure under mutation with deduplication by canonical form.
/// The output does not depend on the thread count.
ExchangeGraph explore(const QuantumSeed& s, const ExploreOptions& opt = {});

/// Compatible pair of the rank 2 algebra with parameters (b, c):
/// Lambda = [[0,1],[-1,0]], B = [[0,b],[-c,0]].
CompatiblePair rank2_pair(std::int64_t b, std::int64_t c);

} // namespace qca
