#include "qca/cartan.hpp"

#include <algorithm>
#include <string>

#include "qca/error.hpp"

namespace qca {

CartanData validate_cartan(const IntMatrix& a, std::optional<IntVector> d) {
  if (!a.is_square() || a.rows() == 0)
    throw PreconditionViolation("validate_cartan: need a nonempty square matrix");
  const std::size_t r = a.rows();
  for (std::size_t i = 0; i < r; ++i) {
    if (a(i, i) != 2)
      throw NotCartan("validate_cartan: a_" + std::to_string(i + 1) + std::to_string(i + 1) +
                      " = " + std::to_string(a(i, i)) + ", expected 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j)
        continue;
      if (a(i, j) > 0)
        throw NotCartan("validate_cartan: positive off-diagonal entry at (" +
                        std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        throw NotCartan("validate_cartan: zero pattern not symmetric at (" +
                        std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    }
  }
  if (d) {
    if (d->size() != r)
      throw DimensionMismatch("validate_cartan: d has the wrong length");
    for (std::size_t i = 0; i < r; ++i) {
      if ((*d)[i] <= 0)
        throw NotSymmetrizable("validate_cartan: d must be positive");
      for (std::size_t j = 0; j < r; ++j)
        if ((*d)[i] * a(i, j) != (*d)[j] * a(j, i))
          throw NotSymmetrizable("validate_cartan: d_i a_ij != d_j a_ji at (" +
                                 std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    }
    return {a, *d};
  }
  // d_i a_ij = d_j a_ji for i < j is the skew-symmetrizability of the matrix
  // obtained by negating the lower triangle.
  IntMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      b(i, j) = i < j ? a(i, j) : (i > j ? -a(i, j) : 0);
  auto sym = is_skew_symmetrizable(b);
  if (!sym)
    throw NotSymmetrizable("validate_cartan: " + a.to_string() + " is not symmetrizable");
  return {a, *sym};
}

FormalWeight FormalWeight::omega(std::size_t r, std::size_t j) {
  FormalWeight w = zero(r);
  w.mcoef.at(j - 1) = 1;
  return w;
}

FormalWeight FormalWeight::alpha(std::size_t r, std::size_t j) {
  FormalWeight w = zero(r);
  w.ccoef.at(j - 1) = 1;
  return w;
}

FormalWeight& FormalWeight::operator+=(const FormalWeight& o) {
  for (std::size_t i = 0; i < mcoef.size(); ++i) {
    mcoef[i] += o.mcoef[i];
    ccoef[i] += o.ccoef[i];
  }
  return *this;
}

FormalWeight& FormalWeight::operator-=(const FormalWeight& o) {
  for (std::size_t i = 0; i < mcoef.size(); ++i) {
    mcoef[i] -= o.mcoef[i];
    ccoef[i] -= o.ccoef[i];
  }
  return *this;
}

namespace {

void check_weight(const CartanData& cd, const FormalWeight& w) {
  if (w.mcoef.size() != cd.rank() || w.ccoef.size() != cd.rank())
    throw DimensionMismatch("formal weight length differs from the Cartan rank");
}

} // namespace

std::int64_t coroot_value(const CartanData& cd, std::size_t i, const FormalWeight& w) {
  check_weight(cd, w);
  std::int64_t v = w.mcoef.at(i - 1);
  for (std::size_t j = 0; j < cd.rank(); ++j)
    v += cd.a(i - 1, j) * w.ccoef[j];
  return v;
}

std::int64_t root_pairing(const CartanData& cd, const FormalWeight& root_part,
                          const FormalWeight& delta) {
  check_weight(cd, root_part);
  if (std::any_of(root_part.mcoef.begin(), root_part.mcoef.end(),
                  [](std::int64_t x) { return x != 0; }))
    throw InternalError("root_pairing: first argument has a nonzero omega part");
  std::int64_t s = 0;
  for (std::size_t j = 1; j <= cd.rank(); ++j)
    s += root_part.ccoef[j - 1] * cd.d[j - 1] * coroot_value(cd, j, delta);
  return s;
}

FormalWeight reflect(const CartanData& cd, std::size_t i, const FormalWeight& w) {
  if (i < 1 || i > cd.rank())
    throw PreconditionViolation("reflect: index " + std::to_string(i) + " out of range");
  FormalWeight out = w;
  out.ccoef[i - 1] -= coroot_value(cd, i, w);
  return out;
}

DoubleWord::DoubleWord(std::vector<std::int64_t> entries, std::size_t r)
    : entries_(std::move(entries)), r_(r) {
  const std::size_t m = entries_.size();
  for (auto x : entries_)
    if (x == 0 || static_cast<std::size_t>(x < 0 ? -x : x) > r)
      throw PreconditionViolation("DoubleWord: letter " + std::to_string(x) +
                                  " outside +-[1, " + std::to_string(r) + "]");
  kplus_.assign(m, m + 1);
  kminus_.assign(m, 0);
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t l = k + 1; l <= m; ++l)
      if (letter(l) == letter(k)) {
        kplus_[k - 1] = l;
        kminus_[l - 1] = k;
        break;
      }
  for (std::size_t k = 1; k <= m; ++k)
    if (kminus_[k - 1] >= 1 && kplus_[k - 1] <= m)
      ex_.push_back(k);
}

std::size_t DoubleWord::letter(std::size_t k) const {
  const std::int64_t x = at(k);
  return static_cast<std::size_t>(x < 0 ? -x : x);
}

bool DoubleWord::is_exchangeable(std::size_t k) const {
  return std::binary_search(ex_.begin(), ex_.end(), k);
}

namespace {

void check_word(const CartanData& cd, const DoubleWord& dw) {
  if (dw.rank() != cd.rank())
    throw DimensionMismatch("double word rank " + std::to_string(dw.rank()) +
                            " differs from Cartan rank " + std::to_string(cd.rank()));
}

} // namespace

FormalWeight pi_eps(const CartanData& cd, const DoubleWord& dw, std::size_t a, std::size_t b,
                    Sign eps, const FormalWeight& w) {
  check_word(cd, dw);
  if (a < 1 || a > b || b > dw.size())
    throw PreconditionViolation("pi_eps: need 1 <= a <= b <= m, got [" + std::to_string(a) +
                                ", " + std::to_string(b) + "]");
  FormalWeight out = w;
  for (std::size_t t = b; t >= a; --t) {
    if (sign_value(eps) * dw.at(t) > 0)
      out = reflect(cd, dw.letter(t), out);
    if (t == 1)
      break;
  }
  if (out.mcoef != w.mcoef)
    throw InternalError("pi_eps: reflections changed the omega part");
  return out;
}

std::int64_t eta(const CartanData& cd, const DoubleWord& dw, std::size_t k, std::size_t l,
                 const FormalWeight* shift_k, const FormalWeight* shift_l) {
  check_word(cd, dw);
  const std::size_t m = dw.size();
  if (!(1 <= l && l <= k && k <= m))
    return 0;
  const std::size_t r = cd.rank();
  for (const FormalWeight* g : {shift_k, shift_l})
    if (g)
      for (std::size_t i = 1; i <= r; ++i)
        if (coroot_value(cd, i, *g) != 0)
          throw PreconditionViolation("eta: weight shift is not W-invariant");

  FormalWeight wk = FormalWeight::omega(r, dw.letter(k));
  if (shift_k)
    wk += *shift_k;
  FormalWeight wl = FormalWeight::omega(r, dw.letter(l));
  if (shift_l)
    wl += *shift_l;
  const FormalWeight diff =
      pi_eps(cd, dw, l, k, Sign::minus, wk) - pi_eps(cd, dw, l, k, Sign::plus, wk);
  if (std::any_of(diff.mcoef.begin(), diff.mcoef.end(), [](std::int64_t x) { return x != 0; }))
    throw InternalError("eta: difference weight has a nonzero omega part");
  return root_pairing(cd, diff, wl);
}

LambdaSigma lambda_sigma_matrices(const CartanData& cd, const DoubleWord& dw) {
  check_word(cd, dw);
  const std::size_t m = dw.size();
  // eta_{k, l^+} for all k, l; l^+ = m + 1 gives zero.
  IntMatrix e(m, m);
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t l = 1; l <= m; ++l)
      e(k - 1, l - 1) = eta(cd, dw, k, dw.kplus(l));
  IntMatrix lam(m, m), sig(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      lam(k, l) = e(k, l) - e(l, k);
      sig(k, l) = e(k, l) + e(l, k);
    }
  if (!lam.is_skew_symmetric() || !sig.is_symmetric())
    throw InternalError("lambda_sigma_matrices: symmetry broken");
  return {make_form(std::move(lam)), GradingMatrix(std::move(sig))};
}

std::int64_t btilde_entry(const CartanData& cd, const DoubleWord& dw, std::size_t p,
                          std::size_t k) {
  const std::size_t kp = dw.kplus(k), pp = dw.kplus(p);
  const int ek = dw.sign(k), ep = dw.sign(p);
  const std::int64_t a = cd.at(dw.letter(p), dw.letter(k));
  const std::size_t m = dw.size();
  auto sign_at = [&](std::size_t t) { return t <= m ? dw.sign(t) : 0; };
  if (p == dw.kminus(k))
    return -ek;
  if ((p < k && k < pp && pp < kp && ek == sign_at(pp)) ||
      (p < k && k < kp && kp < pp && ek == -sign_at(kp)))
    return -ek * a;
  if ((k < p && p < kp && kp < pp && ep == sign_at(kp)) ||
      (k < p && p < pp && pp < kp && ep == -sign_at(pp)))
    return ep * a;
  if (p == kp)
    return ep;
  return 0;
}

IntMatrix btilde_all_columns(const CartanData& cd, const DoubleWord& dw) {
  check_word(cd, dw);
  const std::size_t m = dw.size();
  IntMatrix b(m, m);
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t k = 1; k <= m; ++k)
      b(p - 1, k - 1) = btilde_entry(cd, dw, p, k);
  return b;
}

ExchangeMatrix btilde_matrix(const CartanData& cd, const DoubleWord& dw) {
  check_word(cd, dw);
  const std::size_t m = dw.size();
  const auto& ex = dw.ex();
  IntMatrix b(m, ex.size());
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t c = 0; c < ex.size(); ++c)
      b(p - 1, c) = btilde_entry(cd, dw, p, ex[c]);
  return ExchangeMatrix(ex, std::move(b));
}

ExchangeMatrix btilde_via_s(const CartanData& cd, const DoubleWord& dw, Sign sentinel) {
  check_word(cd, dw);
  const std::size_t m = dw.size();
  const auto& ex = dw.ex();
  // 4 s_{xy}, where x, y in [1, m + 1] and index m + 1 stands for a copy of
  // the letter `owner` with the chosen sign.
  auto s4 = [&](std::size_t x, std::size_t y, std::size_t owner) -> std::int64_t {
    auto sign_of = [&](std::size_t t) {
      return t <= m ? dw.sign(t) : sign_value(sentinel) * dw.sign(owner);
    };
    auto letter_of = [&](std::size_t t) { return t <= m ? dw.letter(t) : dw.letter(owner); };
    const std::int64_t sgn = x > y ? 1 : (x < y ? -1 : 0);
    return sgn * (sign_of(x) + sign_of(y)) * cd.at(letter_of(x), letter_of(y));
  };
  IntMatrix b(m, ex.size());
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t c = 0; c < ex.size(); ++c) {
      const std::size_t k = ex[c], kp = dw.kplus(k), pp = dw.kplus(p);
      const std::int64_t v = s4(p, k, p) - s4(p, kp, p) - s4(pp, k, p) + s4(pp, kp, p);
      if (v % 4 != 0)
        throw InternalError("btilde_via_s: non-integral entry at (" + std::to_string(p) +
                            ", " + std::to_string(k) + ")");
      b(p - 1, c) = v / 4;
    }
  return ExchangeMatrix(ex, std::move(b));
}

const char* to_string(WordCondition c) {
  switch (c) {
  case WordCondition::strong:
    return "strong";
  case WordCondition::weak:
    return "weak";
  case WordCondition::neither:
    return "neither";
  }
  return "?";
}

WordCondition check_word_condition(const CartanData& cd, const DoubleWord& dw) {
  check_word(cd, dw);
  const std::size_t m = dw.size();
  bool strong = true;
  for (std::size_t p = 1; p <= m && strong; ++p) {
    if (dw.kminus(p) != 0)
      continue;
    for (std::size_t k = 1; k < p; ++k)
      if (dw.is_exchangeable(k) && cd.at(dw.letter(p), dw.letter(k)) < 0) {
        strong = false;
        break;
      }
  }
  if (strong)
    return WordCondition::strong;

  for (std::size_t p = 1; p <= m; ++p) {
    if (dw.kminus(p) != 0)
      continue;
    for (std::size_t j = 1; j <= cd.rank(); ++j) {
      if (cd.at(dw.letter(p), j) >= 0)
        continue;
      std::vector<std::size_t> ks;
      for (std::size_t k = 1; k < p; ++k)
        if (dw.letter(k) == j)
          ks.push_back(k);
      if (ks.size() < 2)
        continue;
      for (std::size_t t = 2; t < ks.size(); ++t)
        if (dw.sign(ks[t]) != dw.sign(ks[1]))
          return WordCondition::neither;
      const std::size_t kt = ks.back();
      if (dw.is_exchangeable(kt) && dw.sign(kt) != -dw.sign(p))
        return WordCondition::neither;
    }
  }
  return WordCondition::weak;
}

CartanIdentityReport verify_cartan_identities(const CartanData& cd, const DoubleWord& dw) {
  const WordCondition cond = check_word_condition(cd, dw);
  if (cond == WordCondition::neither)
    throw PreconditionViolation("verify_cartan_identities: the double word satisfies neither the "
                                "strong nor the weak condition");
  auto [lambda, sigma] = lambda_sigma_matrices(cd, dw);
  ExchangeMatrix bt = btilde_matrix(cd, dw);
  const std::size_t m = dw.size();
  const IntMatrix bl = bt.matrix().transpose() * lambda->matrix();
  const IntMatrix bs = bt.matrix().transpose() * sigma.matrix();
  for (std::size_t c = 0; c < bt.n(); ++c) {
    const std::size_t k = bt.ex()[c];
    for (std::size_t l = 1; l <= m; ++l) {
      const std::int64_t want = l == k ? 2 * cd.d[dw.letter(k) - 1] : 0;
      if (bl(c, l - 1) != want)
        throw IdentityFailure("verify_cartan_identities: sum_p b_pk lambda_pl = " +
                              std::to_string(bl(c, l - 1)) + " at (k, l) = (" +
                              std::to_string(k) + ", " + std::to_string(l) + "), expected " +
                              std::to_string(want));
      if (bs(c, l - 1) != 0)
        throw IdentityFailure("verify_cartan_identities: sum_p b_pk sigma_pl = " +
                              std::to_string(bs(c, l - 1)) + " at (k, l) = (" +
                              std::to_string(k) + ", " + std::to_string(l) + ")");
    }
  }
  CompatiblePair pair = check_compatible(lambda, bt);
  for (std::size_t c = 0; c < bt.n(); ++c)
    if (pair.d[c] != 2 * cd.d[dw.letter(bt.ex()[c]) - 1])
      throw InternalError("verify_cartan_identities: unexpected diagonal");
  return {std::move(pair), std::move(sigma), cond};
}

void verify_b_eta_identity(const CartanData& cd, const DoubleWord& dw) {
  const std::size_t m = dw.size();
  const IntMatrix b = btilde_all_columns(cd, dw);
  IntMatrix e(m, m);
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t l = 1; l <= m; ++l)
      e(p - 1, l - 1) = eta(cd, dw, p, l);
  const IntMatrix prod = b.transpose() * e;
  for (std::size_t k = 1; k <= m; ++k) {
    if (dw.kplus(k) > m)
      continue;
    for (std::size_t l = 1; l <= m; ++l) {
      const std::int64_t want = dw.kplus(k) == l ? cd.d[dw.letter(k) - 1] : 0;
      if (prod(k - 1, l - 1) != want)
        throw IdentityFailure("verify_b_eta_identity: sum_p b_pk eta_pl = " +
                              std::to_string(prod(k - 1, l - 1)) + " at (k, l) = (" +
                              std::to_string(k) + ", " + std::to_string(l) + "), expected " +
                              std::to_string(want));
    }
  }
}

QuantumSeed seed_from_cartan(const CartanData& cd, const DoubleWord& dw) {
  CartanIdentityReport rep = verify_cartan_identities(cd, dw);
  return initial_seed(rep.pair, rep.sigma);
}

} // namespace qca
