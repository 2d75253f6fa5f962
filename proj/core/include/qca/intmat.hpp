#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qca {

using IntVector = std::vector<std::int64_t>;

/// Dense row-major integer matrix. Matrices in this library are small
/// (at most a few dozen rows), so entries are machine integers and
/// algorithms that can blow up intermediate values work over mpz_class.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  /// Throws PreconditionViolation on ragged input.
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> to_rows() const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_skew_symmetric() const;
  bool is_symmetric() const;

  /// Submatrix with the given row and column indices (0-based).
  IntMatrix select(std::span<const std::size_t> rows,
                   std::span<const std::size_t> cols) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  /// A * v
  IntVector apply(std::span<const std::int64_t> v) const;
  /// v^T * A
  IntVector apply_left(std::span<const std::int64_t> v) const;
  /// u^T * A * v
  std::int64_t bilinear(std::span<const std::int64_t> u,
                        std::span<const std::int64_t> v) const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

/// Rank over Q, via column-style Hermite reduction.
std::size_t rank(const IntMatrix& a);

/// Z-basis of the saturated right kernel {x in Z^cols : A x = 0},
/// LLL-reduced. Empty when the kernel is trivial.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

struct IntegerSolution {
  IntVector particular;
  std::vector<IntVector> kernel; ///< LLL-reduced basis of the homogeneous lattice
};

/// All integer solutions of A x = b, or nullopt when none exist.
std::optional<IntegerSolution> solve_integer(const IntMatrix& a,
                                             std::span<const std::int64_t> b);

/// In-place LLL reduction (delta = 3/4) of linearly independent integer rows.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis);

std::int64_t gcd_of(std::span<const std::int64_t> values);

/// Narrowing with overflow check; throws Overflow.
std::int64_t to_int64(const mpz_class& v);

} // namespace qca
