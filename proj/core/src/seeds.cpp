#include "qca/seeds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

bool operator==(const QuantumSeed& a, const QuantumSeed& b) {
  return a.pair == b.pair && a.frame == b.frame && a.sigma == b.sigma;
}

QuantumSeed initial_seed(const CompatiblePair& p, std::optional<GradingMatrix> sigma) {
  if (sigma && !is_graded(*sigma, p.btilde))
    throw NotGraded("initial_seed: B~^T Sigma is not zero");
  QuantumSeed s{p, p.lambda, sigma, {}, sigma, {}};
  const std::size_t m = p.m();
  for (std::size_t i = 0; i < m; ++i) {
    Exponent e(m, 0);
    e[i] = 1;
    s.frame.push_back(TorusElement::basis(p.lambda, std::move(e)));
  }
  return s;
}

TorusElement frame_eval(const QuantumSeed& s, std::span<const std::int64_t> c) {
  const std::size_t m = s.m();
  if (c.size() != m)
    throw DimensionMismatch("frame_eval: exponent length differs from seed rank");
  const IntMatrix& lam = s.pair.lambda->matrix();
  std::int64_t h = 0;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < k; ++l)
      h += c[k] * c[l] * lam(k, l);
  TorusElement out = TorusElement::constant(s.initial_form, QLaurent::monomial(h));
  for (std::size_t i = 0; i < m; ++i) {
    if (c[i] == 0)
      continue;
    if (c[i] < 0 && !s.frame[i].is_monomial())
      throw NonInvertibleEntry("frame_eval: negative exponent " + std::to_string(c[i]) +
                               " on the multi-term entry " + std::to_string(i + 1));
    out = out * power(s.frame[i], c[i]);
  }
  return out;
}

TorusElement exchange_rhs(const QuantumSeed& s, std::size_t k) {
  const std::size_t m = s.m();
  const IntVector b = s.pair.btilde.column(k);
  Exponent vplus(m, 0), vminus(m, 0), ek(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] > 0)
      vplus[i] = b[i];
    else
      vminus[i] = -b[i];
  }
  ek[k - 1] = 1;
  const SkewForm& lam = *s.pair.lambda;
  return frame_eval(s, vplus).shifted(lam(ek, vplus)) +
         frame_eval(s, vminus).shifted(lam(ek, vminus));
}

namespace {

TorusElement divide_or_throw(const TorusElement& a, const TorusElement& n, std::size_t k) {
  try {
    return solve_left(a, n);
  } catch (const NotDivisible& e) {
    throw LaurentViolation("mutation at " + std::to_string(k) +
                           ": exchange relation has no quotient in the torus (" + e.what() +
                           ")");
  } catch (const NonIntegralQuotient& e) {
    throw LaurentViolation("mutation at " + std::to_string(k) +
                           ": quotient has non-integral coefficients (" + e.what() + ")");
  }
}

} // namespace

TorusElement mutated_entry_via_rho(const QuantumSeed& s, std::size_t k, Sign eps) {
  const std::size_t m = s.m();
  const IntMatrix e = e_matrix(s.pair.btilde, k, eps);
  const Exponent b = s.pair.btilde.column(k);
  // X^{e_k} rho(X^{E e_k}) in the seed's own torus, then pushed to the initial
  // torus through the frame.
  Exponent ek(m, 0);
  ek[k - 1] = 1;
  const TorusElement local =
      TorusElement::basis(s.pair.lambda, ek) * rho_poly(s.pair.lambda, b, eps, e.col(k - 1));
  TorusElement n(s.initial_form);
  for (const auto& [g, c] : local.terms())
    n += frame_eval(s, g).scaled(c);
  return divide_or_throw(s.frame[k - 1], n, k);
}

QuantumSeed mutate(const QuantumSeed& s, std::size_t k, const MutationOptions& opt) {
  s.pair.btilde.column_of(k); // throws InvalidDirection
  QuantumSeed out = s;
  TorusElement fresh = divide_or_throw(s.frame[k - 1], exchange_rhs(s, k), k);

  if (opt.cross_check) {
    for (Sign eps : {Sign::plus, Sign::minus}) {
      if (!(mutated_entry_via_rho(s, k, eps) == fresh))
        throw InvariantViolation("mutation at " + std::to_string(k) +
                                 ": rho path with sign " +
                                 std::to_string(sign_value(eps)) +
                                 " disagrees with the exchange relation");
    }
    if (!(pair_mutate(s.pair, k, Sign::plus) == pair_mutate(s.pair, k, Sign::minus)))
      throw InvariantViolation("mutation at " + std::to_string(k) +
                               ": Lambda' depends on the sign");
  }

  out.pair = pair_mutate(s.pair, k);
  if (s.sigma)
    out.sigma = sigma_mutate(*s.sigma, s.pair.btilde, k);
  out.frame[k - 1] = std::move(fresh);
  out.history.push_back(k);

  if (opt.verify) {
    const TorusElement& xk = out.frame[k - 1];
    if (!(bar(xk) == xk))
      throw BarViolation("mutation at " + std::to_string(k) +
                         ": new variable is not bar-invariant: " + xk.to_string());
    const IntMatrix& lam = out.pair.lambda->matrix();
    for (std::size_t i = 0; i < out.m(); ++i) {
      if (i == k - 1)
        continue;
      const TorusElement lhs = xk * out.frame[i];
      const TorusElement rhs = (out.frame[i] * xk).shifted(2 * lam(k - 1, i));
      if (!(lhs == rhs))
        throw InvariantViolation("mutation at " + std::to_string(k) + ": entries " +
                                 std::to_string(k) + " and " + std::to_string(i + 1) +
                                 " violate quasi-commutation with lambda = " +
                                 std::to_string(lam(k - 1, i)));
    }
  }
  return out;
}

std::optional<std::int64_t> quasi_commutation_exponent(const TorusElement& a,
                                                       const TorusElement& b) {
  if (a.is_zero() || b.is_zero())
    throw PreconditionViolation("quasi_commutation_exponent: zero argument");
  const TorusElement ab = a * b;
  const TorusElement ba = b * a;
  const auto& [e, c_ab] = ab.leading();
  const QLaurent c_ba = ba.coeff(e);
  if (c_ba.is_zero())
    return std::nullopt;
  const std::int64_t t = c_ab.low() - c_ba.low();
  if (ab == ba.shifted(t))
    return t;
  return std::nullopt;
}

TorusElement adjacent_variable(const CompatiblePair& p, std::size_t k) {
  const std::size_t m = p.m();
  const IntVector b = p.btilde.column(k);
  Exponent plus(m, 0), minus(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    plus[i] = std::max<std::int64_t>(0, b[i]);
    minus[i] = std::max<std::int64_t>(0, -b[i]);
  }
  plus[k - 1] -= 1;
  minus[k - 1] -= 1;
  return TorusElement::basis(p.lambda, plus) + TorusElement::basis(p.lambda, minus);
}

QuasiCommutatorReport quasi_commutator_check(const QuantumSeed& s, std::size_t j, std::size_t k) {
  if (j == k)
    throw PreconditionViolation("quasi_commutator_check: j and k must differ");
  const TorusElement xj = adjacent_variable(s.pair, j);
  const TorusElement xk = adjacent_variable(s.pair, k);
  QuasiCommutatorReport report;
  if (s.pair.btilde(j, k) == 0) {
    auto t = quasi_commutation_exponent(xj, xk);
    if (!t)
      throw ShapeViolation("quasi_commutator_check: b_jk = 0 but X'_" + std::to_string(j) + " and X'_" +
                           std::to_string(k) + " do not quasi-commute");
    report.quasi_commute = true;
    report.r = *t;
    return report;
  }
  const TorusElement p1 = xj * xk;
  const TorusElement p2 = xk * xj;
  std::vector<std::int64_t> candidates;
  for (const auto& [g, c2] : p2.terms()) {
    const QLaurent c1 = p1.coeff(g);
    if (!c1.is_zero() && c1.is_monomial() && c2.is_monomial())
      candidates.push_back(c1.low() - c2.low());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::int64_t r : candidates) {
    const TorusElement diff = p1 - p2.shifted(r);
    if (!diff.is_monomial())
      continue;
    const auto& [e, c] = diff.leading();
    const auto terms = c.terms();
    if (terms.size() != 2 || terms[0].second * terms[1].second != -1)
      continue;
    if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x < 0; }))
      continue;
    report.r = r;
    const bool first_positive = terms[0].second > 0;
    report.s = first_positive ? terms[0].first : terms[1].first;
    report.t = first_positive ? terms[1].first : terms[0].first;
    report.e = e;
    return report;
  }
  throw ShapeViolation("quasi_commutator_check: no normal form for X'_" + std::to_string(j) + " X'_" +
                       std::to_string(k) + " with b_jk = " +
                       std::to_string(s.pair.btilde(j, k)));
}

std::vector<StandardMonomial> standard_monomials(const QuantumSeed& s, std::int64_t bound) {
  if (bound < 0)
    throw PreconditionViolation("standard_monomials: negative bound");
  const auto& ex = s.ex();
  const std::size_t n = ex.size(), m = s.m();
  std::vector<TorusElement> gens;
  for (auto k : ex) {
    Exponent e(m, 0);
    e[k - 1] = 1;
    gens.push_back(TorusElement::basis(s.pair.lambda, e));
  }
  for (auto k : ex)
    gens.push_back(adjacent_variable(s.pair, k));

  std::vector<StandardMonomial> out;
  IntVector a(2 * n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = a[i] * a[n + i] == 0;
    if (ok) {
      TorusElement v = TorusElement::constant(s.pair.lambda, QLaurent(1));
      for (std::size_t i = 0; i < 2 * n; ++i)
        if (a[i] > 0)
          v = v * power(gens[i], a[i]);
      out.push_back({IntVector(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n)),
                     IntVector(a.begin() + static_cast<std::ptrdiff_t>(n), a.end()),
                     std::move(v)});
    }
    // Odometer with the last coordinate fastest.
    std::size_t i = 2 * n;
    while (i > 0 && a[i - 1] == bound)
      a[--i] = 0;
    if (i == 0)
      break;
    ++a[i - 1];
  }
  return out;
}

IndependenceVerdict independence_test(const std::vector<TorusElement>& mons,
                                      const FrozenWindow& window) {
  IndependenceVerdict verdict;
  if (mons.empty())
    return verdict;
  const SkewFormPtr& form = mons.front().form();
  const std::size_t m = form->dim();
  if (window.lo.size() != window.indices.size() || window.hi.size() != window.indices.size())
    throw DimensionMismatch("independence_test: window bounds do not match its indices");
  for (auto i : window.indices)
    if (i < 1 || i > m)
      throw PreconditionViolation("independence_test: window index out of range");

  std::vector<Exponent> shifts;
  {
    IntVector cur = window.lo;
    while (true) {
      Exponent f(m, 0);
      for (std::size_t t = 0; t < cur.size(); ++t)
        f[window.indices[t] - 1] = cur[t];
      shifts.push_back(f);
      std::size_t t = 0;
      while (t < cur.size() && cur[t] == window.hi[t])
        cur[t] = window.lo[t], ++t;
      if (t == cur.size())
        break;
      ++cur[t];
    }
  }

  std::vector<TorusElement> cols;
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (const auto& f : shifts) {
      cols.push_back(TorusElement::basis(form, f) * mons[i]);
      verdict.columns.emplace_back(i, f);
    }

  std::map<Exponent, std::size_t> row_index;
  for (const auto& c : cols)
    for (const auto& [e, x] : c.terms())
      row_index.try_emplace(e, 0);
  std::size_t r = 0;
  for (auto& [e, idx] : row_index)
    idx = r++;
  const std::size_t nrows = row_index.size(), ncols = cols.size();
  std::vector<std::vector<QRational>> a(nrows, std::vector<QRational>(ncols));
  for (std::size_t j = 0; j < ncols; ++j)
    for (const auto& [e, x] : cols[j].terms())
      a[row_index.at(e)][j] = QRational(x);

  // Reduced row echelon form over the fraction field.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < nrows; ++c) {
    std::size_t p = row;
    while (p < nrows && a[p][c].is_zero())
      ++p;
    if (p == nrows)
      continue;
    std::swap(a[p], a[row]);
    const QRational inv = QRational(QLaurent(1)) / a[row][c];
    for (std::size_t j = c; j < ncols; ++j)
      a[row][j] = a[row][j] * inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || a[i][c].is_zero())
        continue;
      const QRational f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!a[row][j].is_zero())
          a[i][j] = a[i][j] - f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  verdict.rank = pivot_col.size();
  if (verdict.rank == ncols)
    return verdict;

  verdict.independent = false;
  std::size_t free_col = 0;
  for (std::size_t t = 0; t <= pivot_col.size(); ++t) {
    if (t == pivot_col.size() || pivot_col[t] != t) {
      free_col = t;
      break;
    }
  }
  verdict.witness.assign(ncols, QRational());
  verdict.witness[free_col] = QRational(QLaurent(1));
  for (std::size_t t = 0; t < pivot_col.size(); ++t)
    if (pivot_col[t] < free_col)
      verdict.witness[pivot_col[t]] = -a[t][free_col];
  auto first = std::find_if(verdict.witness.begin(), verdict.witness.end(),
                            [](const QRational& x) { return !x.is_zero(); });
  const QRational lead = *first;
  for (auto& x : verdict.witness)
    x = x / lead;
  return verdict;
}

GradingReport grading_check(const QuantumSeed& s) {
  if (!s.sigma || !s.initial_sigma)
    throw PreconditionViolation("grading_check: seed carries no grading");
  GradingReport report;
  const std::size_t m = s.m();
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t deg;
    try {
      deg = deg_sigma(s.frame[i], *s.initial_sigma);
    } catch (const Inhomogeneous& e) {
      throw Inhomogeneous("grading_check: entry " + std::to_string(i + 1) + ": " + e.what());
    }
    const std::int64_t want = s.sigma->matrix()(i, i);
    if (deg != want)
      throw InvariantViolation("grading_check: entry " + std::to_string(i + 1) +
                               " has degree " + std::to_string(deg) + ", expected " +
                               std::to_string(want));
    report.degrees.push_back(deg);
  }
  return report;
}

void bar_check(const QuantumSeed& s) {
  for (std::size_t i = 0; i < s.m(); ++i)
    if (!(bar(s.frame[i]) == s.frame[i]))
      throw BarViolation("bar_check: entry " + std::to_string(i + 1) +
                         " is not bar-invariant: " + s.frame[i].to_string());
}

QuantumSeed canonical_form(const QuantumSeed& s) {
  const auto& ex = s.ex();
  const std::size_t m = s.m(), n = ex.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare(s.frame[ex[a] - 1], s.frame[ex[b] - 1]) < 0;
  });
  // perm[new position] = old position (0-based rows), colperm likewise.
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t c = 0; c < n; ++c)
    perm[ex[c] - 1] = ex[order[c]] - 1;

  auto permute_square = [&](const IntMatrix& x) {
    IntMatrix y(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        y(i, j) = x(perm[i], perm[j]);
    return y;
  };
  const IntMatrix& b = s.pair.btilde.matrix();
  IntMatrix bp(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < n; ++c)
      bp(i, c) = b(perm[i], order[c]);
  IntVector d(n);
  for (std::size_t c = 0; c < n; ++c)
    d[c] = s.pair.d[order[c]];

  QuantumSeed out = s;
  out.pair = CompatiblePair{make_form(permute_square(s.pair.lambda->matrix())),
                            ExchangeMatrix(ex, std::move(bp)), std::move(d)};
  if (s.sigma)
    out.sigma = GradingMatrix(permute_square(s.sigma->matrix()));
  for (std::size_t i = 0; i < m; ++i)
    out.frame[i] = s.frame[perm[i]];
  return out;
}

std::string canonical_key(const QuantumSeed& s) {
  const QuantumSeed c = canonical_form(s);
  std::ostringstream os;
  for (const auto& x : c.frame)
    os << x.to_string() << "\n";
  os << c.pair.lambda->matrix().to_string() << "\n" << c.pair.btilde.matrix().to_string();
  if (c.sigma)
    os << "\n" << c.sigma->matrix().to_string();
  return os.str();
}

CompatiblePair rank2_pair(std::int64_t b, std::int64_t c) {
  if (b < 1 || c < 1)
    throw PreconditionViolation("rank2_pair: b and c must be positive");
  return check_compatible(make_form(IntMatrix{{0, 1}, {-1, 0}}),
                          ExchangeMatrix({1, 2}, IntMatrix{{0, b}, {-c, 0}}));
}

} // namespace qca
