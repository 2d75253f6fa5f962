#include "qca/intmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw PreconditionViolation("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw PreconditionViolation("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows_; ++i)
    out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](auto x) { return x == 0; });
}

bool IntMatrix::is_skew_symmetric() const {
  if (!is_square())
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i))
        return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square())
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i))
        return false;
  return true;
}

IntMatrix IntMatrix::select(std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols) const {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("IntMatrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("IntMatrix sum: shapes differ");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i)
    c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("IntMatrix difference: shapes differ");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i)
    c.data_[i] -= b.data_[i];
  return c;
}

IntVector IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_)
    throw DimensionMismatch("IntMatrix::apply: vector length");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] += (*this)(i, j) * v[j];
  return out;
}

IntVector IntMatrix::apply_left(std::span<const std::int64_t> v) const {
  if (v.size() != rows_)
    throw DimensionMismatch("IntMatrix::apply_left: vector length");
  IntVector out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0)
      continue;
    for (std::size_t j = 0; j < cols_; ++j)
      out[j] += v[i] * (*this)(i, j);
  }
  return out;
}

std::int64_t IntMatrix::bilinear(std::span<const std::int64_t> u,
                                 std::span<const std::int64_t> v) const {
  IntVector left = apply_left(u);
  if (v.size() != cols_)
    throw DimensionMismatch("IntMatrix::bilinear: vector length");
  std::int64_t s = 0;
  for (std::size_t j = 0; j < cols_; ++j)
    s += left[j] * v[j];
  return s;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p())
    throw Overflow("integer value " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values)
    g = std::gcd(g, v);
  return g;
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

struct ColumnHermite {
  ZMat h;                          // rows x cols, A * U
  ZMat u;                          // cols x cols, unimodular
  std::vector<std::size_t> pivot_rows;
};

void swap_cols(ZMat& m, std::size_t a, std::size_t b) {
  for (auto& row : m)
    std::swap(row[a], row[b]);
}

// col[dst] -= factor * col[src]
void sub_col(ZMat& m, std::size_t dst, std::size_t src, const mpz_class& factor) {
  for (auto& row : m)
    row[dst] -= factor * row[src];
}

void negate_col(ZMat& m, std::size_t c) {
  for (auto& row : m)
    row[c] = -row[c];
}

ColumnHermite column_hermite(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  ColumnHermite r;
  r.h.assign(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      r.h[i][j] = a(i, j);
  r.u.assign(cols, std::vector<mpz_class>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    r.u[j][j] = 1;

  std::size_t p = 0;
  for (std::size_t i = 0; i < rows && p < cols; ++i) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = p; j < cols; ++j)
        if (r.h[i][j] != 0 &&
            (best == cols || abs(r.h[i][j]) < abs(r.h[i][best])))
          best = j;
      if (best == cols)
        break;
      if (best != p) {
        swap_cols(r.h, best, p);
        swap_cols(r.u, best, p);
      }
      bool clean = true;
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (r.h[i][j] == 0)
          continue;
        mpz_class qt;
        mpz_fdiv_q(qt.get_mpz_t(), r.h[i][j].get_mpz_t(), r.h[i][p].get_mpz_t());
        sub_col(r.h, j, p, qt);
        sub_col(r.u, j, p, qt);
        if (r.h[i][j] != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (r.h[i][p] == 0)
      continue;
    if (r.h[i][p] < 0) {
      negate_col(r.h, p);
      negate_col(r.u, p);
    }
    r.pivot_rows.push_back(i);
    ++p;
  }
  return r;
}

std::vector<IntVector> to_int_rows(const ZMat& rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) {
    IntVector v;
    for (const auto& x : r)
      v.push_back(to_int64(x));
    out.push_back(std::move(v));
  }
  return out;
}

// First nonzero entry positive, for deterministic output.
void orient(std::vector<mpz_class>& v) {
  for (const auto& x : v) {
    if (x == 0)
      continue;
    if (x < 0)
      for (auto& y : v)
        y = -y;
    return;
  }
}

ZMat kernel_columns(const ColumnHermite& ch, std::size_t cols) {
  ZMat basis;
  for (std::size_t j = ch.pivot_rows.size(); j < cols; ++j) {
    std::vector<mpz_class> v(cols);
    for (std::size_t i = 0; i < cols; ++i)
      v[i] = ch.u[i][j];
    basis.push_back(std::move(v));
  }
  if (!basis.empty())
    lll_reduce(basis);
  for (auto& v : basis)
    orient(v);
  return basis;
}

} // namespace

std::size_t rank(const IntMatrix& a) { return column_hermite(a).pivot_rows.size(); }

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  return to_int_rows(kernel_columns(column_hermite(a), a.cols()));
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a,
                                             std::span<const std::int64_t> b) {
  if (b.size() != a.rows())
    throw DimensionMismatch("solve_integer: right-hand side length");
  const std::size_t cols = a.cols();
  ColumnHermite ch = column_hermite(a);
  const std::size_t rk = ch.pivot_rows.size();

  std::vector<mpz_class> y(cols);
  for (std::size_t j = 0; j < rk; ++j) {
    const std::size_t pr = ch.pivot_rows[j];
    mpz_class rhs = b[pr];
    for (std::size_t l = 0; l < j; ++l)
      rhs -= ch.h[pr][l] * y[l];
    if (!mpz_divisible_p(rhs.get_mpz_t(), ch.h[pr][j].get_mpz_t()))
      return std::nullopt;
    mpz_divexact(y[j].get_mpz_t(), rhs.get_mpz_t(), ch.h[pr][j].get_mpz_t());
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < rk; ++j)
      s += ch.h[i][j] * y[j];
    if (s != b[i])
      return std::nullopt;
  }
  IntegerSolution sol;
  for (std::size_t i = 0; i < cols; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < rk; ++j)
      s += ch.u[i][j] * y[j];
    sol.particular.push_back(to_int64(s));
  }
  sol.kernel = to_int_rows(kernel_columns(ch, cols));
  return sol;
}

void lll_reduce(std::vector<std::vector<mpz_class>>& basis) {
  const std::size_t n = basis.size();
  if (n == 0)
    return;
  const std::size_t dim = basis[0].size();
  auto dot = [dim](const auto& x, const auto& y) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < dim; ++i)
      s += mpq_class(x[i]) * mpq_class(y[i]);
    return s;
  };

  std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(dim));
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> norm(n);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < dim; ++t)
        star[i][t] = basis[i][t];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = norm[j] == 0 ? mpq_class(0) : dot(basis[i], star[j]) / norm[j];
        for (std::size_t t = 0; t < dim; ++t)
          star[i][t] -= mu[i][j] * star[j][t];
      }
      norm[i] = dot(star[i], star[i]);
    }
  };

  gram_schmidt();
  const mpq_class delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      mpq_class m = mu[k][j];
      // nearest integer to m
      mpz_class r;
      mpq_class shifted = m + mpq_class(1, 2);
      mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
      if (r != 0) {
        for (std::size_t t = 0; t < dim; ++t)
          basis[k][t] -= r * basis[j][t];
        for (std::size_t l = 0; l <= j; ++l)
          mu[k][l] -= mpq_class(r) * (l == j ? mpq_class(1) : mu[j][l]);
      }
    }
    if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

} // namespace qca
