#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qca/intmat.hpp"
#include "qca/torus.hpp"

namespace qca {

/// Extended exchange matrix: m rows indexed by [1, m], columns labeled by the
/// sorted exchangeable set ex (1-based). Row and column arguments of the
/// accessors below are 1-based labels, never storage positions.
class ExchangeMatrix {
public:
  /// Throws PreconditionViolation on malformed ex and NotSkewSymmetrizable when
  /// the principal part admits no positive symmetrizer.
  ExchangeMatrix(std::vector<std::size_t> ex, IntMatrix entries);

  std::size_t m() const { return entries_.rows(); }
  std::size_t n() const { return entries_.cols(); }
  const std::vector<std::size_t>& ex() const { return ex_; }
  const IntMatrix& matrix() const { return entries_; }

  bool is_exchangeable(std::size_t k) const;
  /// Storage column of label k. Throws InvalidDirection when k is not in ex.
  std::size_t column_of(std::size_t k) const;
  /// b_{ik}
  std::int64_t operator()(std::size_t i, std::size_t k) const {
    return entries_(i - 1, column_of(k));
  }
  /// b^k as a vector of length m.
  IntVector column(std::size_t k) const { return entries_.col(column_of(k)); }
  /// Rows restricted to ex.
  IntMatrix principal() const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) = default;

private:
  std::vector<std::size_t> ex_;
  IntMatrix entries_;
};

/// (Lambda, B~) with B~^T Lambda = (D | 0); d[c] is the diagonal entry for the
/// column label ex[c].
struct CompatiblePair {
  SkewFormPtr lambda;
  ExchangeMatrix btilde;
  IntVector d;

  std::size_t m() const { return btilde.m(); }
  const std::vector<std::size_t>& ex() const { return btilde.ex(); }
};

bool operator==(const CompatiblePair& a, const CompatiblePair& b);

/// Componentwise minimal positive d with diag(d) B skew-symmetric, or nullopt.
std::optional<IntVector> is_skew_symmetrizable(const IntMatrix& b);

IntMatrix matrix_mutate(const IntMatrix& b, std::span<const std::size_t> ex, std::size_t k);
ExchangeMatrix matrix_mutate(const ExchangeMatrix& bt, std::size_t k);

/// m x m matrix E_eps for direction k.
IntMatrix e_matrix(const ExchangeMatrix& bt, std::size_t k, Sign eps);
/// n x n matrix F_eps for direction k, rows and columns in ex order.
IntMatrix f_matrix(const ExchangeMatrix& bt, std::size_t k, Sign eps);

/// Verifies B~^T Lambda = (D | 0) with positive D. Throws NotCompatible naming
/// the first offending (j, i), NonPositiveD, or DimensionMismatch.
CompatiblePair check_compatible(const SkewFormPtr& lambda, const ExchangeMatrix& bt);

/// (E^T Lambda E, mu_k(B~)); the result keeps d.
CompatiblePair pair_mutate(const CompatiblePair& p, std::size_t k, Sign eps = Sign::plus);

/// Sigma' = E^T Sigma E. Throws NotGraded unless B~^T Sigma = 0.
GradingMatrix sigma_mutate(const GradingMatrix& sigma, const ExchangeMatrix& bt,
                           std::size_t k, Sign eps = Sign::plus);

/// True when B~^T Sigma = 0.
bool is_graded(const GradingMatrix& sigma, const ExchangeMatrix& bt);

struct AcyclicityReport {
  bool acyclic = true;
  /// Labels i_1 -> i_2 -> ... -> i_t -> i_1 when cyclic.
  std::vector<std::size_t> cycle;
};

/// Oriented cycles of the digraph on ex with an edge i -> j whenever b_ij > 0.
AcyclicityReport is_acyclic(const ExchangeMatrix& bt);

/// A skew-symmetric Lambda with B~^T Lambda = (D | 0). Among all integer
/// solutions found near the closest-vector point, the one with smallest max
/// |entry| and then lexicographically smallest row-major entries is returned.
/// Throws PreconditionViolation when rank(B~) < n and NoSolution when the
/// integer system is infeasible.
SkewFormPtr find_compatible_lambda(const ExchangeMatrix& bt, std::span<const std::int64_t> d);

} // namespace qca
