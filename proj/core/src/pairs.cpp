#include "qca/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

ExchangeMatrix::ExchangeMatrix(std::vector<std::size_t> ex, IntMatrix entries)
    : ex_(std::move(ex)), entries_(std::move(entries)) {
  if (ex_.size() != entries_.cols())
    throw DimensionMismatch("ExchangeMatrix: ex has " + std::to_string(ex_.size()) +
                            " labels but the matrix has " +
                            std::to_string(entries_.cols()) + " columns");
  for (std::size_t c = 0; c < ex_.size(); ++c) {
    if (ex_[c] < 1 || ex_[c] > entries_.rows())
      throw PreconditionViolation("ExchangeMatrix: label " + std::to_string(ex_[c]) +
                                  " outside [1, m]");
    if (c > 0 && ex_[c] <= ex_[c - 1])
      throw PreconditionViolation("ExchangeMatrix: ex must be strictly increasing");
  }
  if (!is_skew_symmetrizable(principal()))
    throw NotSkewSymmetrizable("ExchangeMatrix: principal part " +
                               principal().to_string() + " is not skew-symmetrizable");
}

bool ExchangeMatrix::is_exchangeable(std::size_t k) const {
  return std::binary_search(ex_.begin(), ex_.end(), k);
}

std::size_t ExchangeMatrix::column_of(std::size_t k) const {
  auto it = std::lower_bound(ex_.begin(), ex_.end(), k);
  if (it == ex_.end() || *it != k)
    throw InvalidDirection("direction " + std::to_string(k) + " is not exchangeable");
  return static_cast<std::size_t>(it - ex_.begin());
}

IntMatrix ExchangeMatrix::principal() const {
  std::vector<std::size_t> rows(ex_.size()), cols(ex_.size());
  for (std::size_t c = 0; c < ex_.size(); ++c) {
    rows[c] = ex_[c] - 1;
    cols[c] = c;
  }
  return entries_.select(rows, cols);
}

bool operator==(const CompatiblePair& a, const CompatiblePair& b) {
  return *a.lambda == *b.lambda && a.btilde == b.btilde && a.d == b.d;
}

std::optional<IntVector> is_skew_symmetrizable(const IntMatrix& b) {
  if (!b.is_square())
    throw PreconditionViolation("is_skew_symmetrizable: matrix is not square");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0)
      return std::nullopt;
    for (std::size_t j = 0; j < n; ++j)
      if ((b(i, j) == 0) != (b(j, i) == 0) || b(i, j) * b(j, i) > 0)
        return std::nullopt;
  }
  // Propagate d_j = d_i * b_ij / (-b_ji) over each connected component, then
  // clear denominators and divide by the content.
  std::vector<mpq_class> ratio(n, 0);
  std::vector<int> component(n, -1);
  int ncomp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0)
      continue;
    std::vector<std::size_t> members{root};
    component[root] = ncomp;
    ratio[root] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t i = members[head];
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0)
          continue;
        mpq_class want = ratio[i] * b(i, j) / mpq_class(-b(j, i));
        want.canonicalize();
        if (component[j] < 0) {
          component[j] = ncomp;
          ratio[j] = want;
          members.push_back(j);
        } else if (ratio[j] != want) {
          return std::nullopt;
        }
      }
    }
    mpz_class lcm = 1;
    for (auto i : members)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), ratio[i].get_den_mpz_t());
    mpz_class g = 0;
    for (auto i : members) {
      ratio[i] *= lcm;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ratio[i].get_num_mpz_t());
    }
    for (auto i : members)
      ratio[i] /= g;
    ++ncomp;
  }
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i)
    d[i] = to_int64(ratio[i].get_num());
  return d;
}

IntMatrix matrix_mutate(const IntMatrix& b, std::span<const std::size_t> ex, std::size_t k) {
  auto it = std::find(ex.begin(), ex.end(), k);
  if (it == ex.end())
    throw InvalidDirection("direction " + std::to_string(k) + " is not exchangeable");
  const std::size_t kc = static_cast<std::size_t>(it - ex.begin());
  const std::size_t kr = k - 1;
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == kr || j == kc)
        out(i, j) = -b(i, j);
      else
        out(i, j) = b(i, j) +
                    (std::abs(b(i, kc)) * b(kr, j) + b(i, kc) * std::abs(b(kr, j))) / 2;
    }
  return out;
}

ExchangeMatrix matrix_mutate(const ExchangeMatrix& bt, std::size_t k) {
  return ExchangeMatrix(bt.ex(), matrix_mutate(bt.matrix(), bt.ex(), k));
}

IntMatrix e_matrix(const ExchangeMatrix& bt, std::size_t k, Sign eps) {
  const std::size_t kc = bt.column_of(k);
  const int s = sign_value(eps);
  IntMatrix e = IntMatrix::identity(bt.m());
  for (std::size_t i = 0; i < bt.m(); ++i)
    e(i, k - 1) = (i == k - 1) ? -1 : std::max<std::int64_t>(0, -s * bt.matrix()(i, kc));
  return e;
}

IntMatrix f_matrix(const ExchangeMatrix& bt, std::size_t k, Sign eps) {
  const std::size_t kc = bt.column_of(k);
  const int s = sign_value(eps);
  IntMatrix f = IntMatrix::identity(bt.n());
  for (std::size_t j = 0; j < bt.n(); ++j)
    f(kc, j) = (j == kc) ? -1 : std::max<std::int64_t>(0, s * bt.matrix()(k - 1, j));
  return f;
}

CompatiblePair check_compatible(const SkewFormPtr& lambda, const ExchangeMatrix& bt) {
  if (!lambda)
    throw PreconditionViolation("check_compatible: null form");
  if (lambda->dim() != bt.m())
    throw DimensionMismatch("check_compatible: Lambda is " + std::to_string(lambda->dim()) +
                            "x" + std::to_string(lambda->dim()) + " but B~ has " +
                            std::to_string(bt.m()) + " rows");
  const IntMatrix prod = bt.matrix().transpose() * lambda->matrix();
  IntVector d(bt.n());
  for (std::size_t c = 0; c < bt.n(); ++c) {
    const std::size_t j = bt.ex()[c];
    for (std::size_t i = 1; i <= bt.m(); ++i) {
      const std::int64_t v = prod(c, i - 1);
      if (i == j)
        continue;
      if (v != 0)
        throw NotCompatible("check_compatible: (B~^T Lambda)(" + std::to_string(j) + ", " +
                            std::to_string(i) + ") = " + std::to_string(v) +
                            ", expected 0");
    }
    d[c] = prod(c, j - 1);
    if (d[c] == 0)
      throw NotCompatible("check_compatible: (B~^T Lambda)(" + std::to_string(j) + ", " +
                          std::to_string(j) + ") = 0, expected a positive entry");
    if (d[c] < 0)
      throw NonPositiveD("check_compatible: d_" + std::to_string(j) + " = " +
                         std::to_string(d[c]) + " is negative");
  }
  return CompatiblePair{lambda, bt, std::move(d)};
}

CompatiblePair pair_mutate(const CompatiblePair& p, std::size_t k, Sign eps) {
  const IntMatrix e = e_matrix(p.btilde, k, eps);
  SkewFormPtr lambda = make_form(e.transpose() * p.lambda->matrix() * e);
  ExchangeMatrix bt = matrix_mutate(p.btilde, k);
  CompatiblePair out = check_compatible(lambda, bt);
  if (out.d != p.d)
    throw InternalError("pair_mutate: mutation changed d");
  return out;
}

bool is_graded(const GradingMatrix& sigma, const ExchangeMatrix& bt) {
  if (sigma.dim() != bt.m())
    throw DimensionMismatch("grading matrix rank differs from the number of rows of B~");
  return (bt.matrix().transpose() * sigma.matrix()).is_zero();
}

GradingMatrix sigma_mutate(const GradingMatrix& sigma, const ExchangeMatrix& bt,
                           std::size_t k, Sign eps) {
  if (!is_graded(sigma, bt))
    throw NotGraded("sigma_mutate: B~^T Sigma is not zero");
  const IntMatrix e = e_matrix(bt, k, eps);
  return GradingMatrix(e.transpose() * sigma.matrix() * e);
}

AcyclicityReport is_acyclic(const ExchangeMatrix& bt) {
  const IntMatrix b = bt.principal();
  const std::size_t n = b.rows();
  enum Color { white, grey, black };
  std::vector<Color> color(n, white);
  std::vector<std::size_t> parent(n, n);
  AcyclicityReport report;

  for (std::size_t root = 0; root < n && report.acyclic; ++root) {
    if (color[root] != white)
      continue;
    // Iterative DFS; the stack holds (vertex, next neighbour to try).
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = grey;
    while (!stack.empty() && report.acyclic) {
      auto& [v, next] = stack.back();
      if (next == n) {
        color[v] = black;
        stack.pop_back();
        continue;
      }
      const std::size_t w = next++;
      if (b(v, w) <= 0)
        continue;
      if (color[w] == grey) {
        report.acyclic = false;
        std::vector<std::size_t> cyc;
        for (std::size_t u = v; u != w; u = parent[u])
          cyc.push_back(u);
        cyc.push_back(w);
        std::reverse(cyc.begin(), cyc.end());
        for (auto u : cyc)
          report.cycle.push_back(bt.ex()[u]);
      } else if (color[w] == white) {
        color[w] = grey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return report;
}

namespace {

// Solves the square rational system M t = rhs; M is assumed invertible.
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> m,
                                      std::vector<mpq_class> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0)
      ++p;
    if (p == n)
      throw InternalError("solve_rational: singular Gram matrix");
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0)
        continue;
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j)
        m[r][j] -= f * m[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c)
    rhs[c] /= m[c][c];
  return rhs;
}

std::int64_t round_nearest(const mpq_class& x) {
  mpz_class num = 2 * x.get_num() + x.get_den();
  mpz_class den = 2 * x.get_den();
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return to_int64(out);
}

} // namespace

SkewFormPtr find_compatible_lambda(const ExchangeMatrix& bt, std::span<const std::int64_t> d) {
  const std::size_t m = bt.m(), n = bt.n();
  if (d.size() != n)
    throw DimensionMismatch("find_compatible_lambda: d must have one entry per column");
  for (auto x : d)
    if (x <= 0)
      throw PreconditionViolation("find_compatible_lambda: d must be positive");
  if (rank(bt.matrix()) != n)
    throw PreconditionViolation("find_compatible_lambda: B~ does not have full column rank");

  // Unknown u(i, j) for i > j is lambda_ij; lambda_ji = -lambda_ij.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      unknowns.emplace_back(i, j);
  auto unknown_index = [&](std::size_t i, std::size_t j) {
    return i * (i - 1) / 2 + j;
  };

  // Equation (c, i): sum_k b_{k, c} lambda_{k, i} = delta_{i, ex[c]} d_c.
  IntMatrix a(n * m, unknowns.size());
  IntVector rhs(n * m, 0);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t row = c * m + i;
      for (std::size_t k = 0; k < m; ++k) {
        const std::int64_t b = bt.matrix()(k, c);
        if (b == 0 || k == i)
          continue;
        if (k > i)
          a(row, unknown_index(k, i)) += b;
        else
          a(row, unknown_index(i, k)) -= b;
      }
      if (i + 1 == bt.ex()[c])
        rhs[row] = d[c];
    }

  auto sol = solve_integer(a, rhs);
  if (!sol)
    throw NoSolution("find_compatible_lambda: no integer skew-symmetric solution");

  const auto& x0 = sol->particular;
  const auto& ker = sol->kernel;
  const std::size_t kd = ker.size();

  auto assemble = [&](const std::vector<std::int64_t>& t) {
    IntVector x = x0;
    for (std::size_t v = 0; v < kd; ++v)
      for (std::size_t u = 0; u < x.size(); ++u)
        x[u] += t[v] * ker[v][u];
    return x;
  };
  auto to_matrix = [&](const IntVector& x) {
    IntMatrix l(m, m);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto [i, j] = unknowns[u];
      l(i, j) = x[u];
      l(j, i) = -x[u];
    }
    return l;
  };
  // Objective: smallest max |entry|, then lexicographically smallest row-major
  // matrix.
  auto key = [&](const IntVector& x) {
    IntMatrix l = to_matrix(x);
    std::int64_t mx = 0;
    IntVector flat;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        mx = std::max(mx, std::abs(l(i, j)));
        flat.push_back(l(i, j));
      }
    return std::make_pair(mx, flat);
  };

  std::vector<std::int64_t> center(kd, 0);
  if (kd > 0) {
    // Real minimizer of |x0 + K^T t|_2, rounded.
    std::vector<std::vector<mpq_class>> gram(kd, std::vector<mpq_class>(kd, 0));
    std::vector<mpq_class> g(kd, 0);
    for (std::size_t v = 0; v < kd; ++v) {
      for (std::size_t w = 0; w < kd; ++w) {
        std::int64_t s = 0;
        for (std::size_t u = 0; u < x0.size(); ++u)
          s += ker[v][u] * ker[w][u];
        gram[v][w] = s;
      }
      std::int64_t s = 0;
      for (std::size_t u = 0; u < x0.size(); ++u)
        s += ker[v][u] * x0[u];
      g[v] = -s;
    }
    auto t = solve_rational(gram, g);
    for (std::size_t v = 0; v < kd; ++v)
      center[v] = round_nearest(t[v]);
  }

  std::vector<std::int64_t> best_t = center;
  auto best_key = key(assemble(best_t));

  // Exhaustive search in a box around the rounded point, radius chosen so the
  // box stays small, followed by unit-step descent.
  std::int64_t radius = 0;
  for (std::int64_t r : {3, 2, 1}) {
    double count = std::pow(2.0 * static_cast<double>(r) + 1.0, static_cast<double>(kd));
    if (count <= 60000.0) {
      radius = r;
      break;
    }
  }
  if (radius > 0) {
    std::vector<std::int64_t> off(kd, -radius);
    while (true) {
      std::vector<std::int64_t> t(kd);
      for (std::size_t v = 0; v < kd; ++v)
        t[v] = center[v] + off[v];
      auto k = key(assemble(t));
      if (k < best_key) {
        best_key = std::move(k);
        best_t = t;
      }
      std::size_t v = 0;
      while (v < kd && off[v] == radius)
        off[v++] = -radius;
      if (v == kd)
        break;
      ++off[v];
    }
  }
  for (bool improved = kd > 0; improved;) {
    improved = false;
    for (std::size_t v = 0; v < kd; ++v)
      for (std::int64_t step : {-1, 1}) {
        auto t = best_t;
        t[v] += step;
        auto k = key(assemble(t));
        if (k < best_key) {
          best_key = std::move(k);
          best_t = std::move(t);
          improved = true;
        }
      }
  }

  SkewFormPtr lambda = make_form(to_matrix(assemble(best_t)));
  CompatiblePair check = check_compatible(lambda, bt);
  if (!std::equal(check.d.begin(), check.d.end(), d.begin()))
    throw InternalError("find_compatible_lambda: solution has the wrong diagonal");
  return lambda;
}

} // namespace qca
