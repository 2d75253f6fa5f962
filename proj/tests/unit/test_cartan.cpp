#include <doctest.h>

#include "fixtures.hpp"
#include "qca/cartan.hpp"
#include "qca/corpus.hpp"
#include "qca/error.hpp"

using namespace qca;

namespace {

CartanData a2() { return validate_cartan(IntMatrix{{2, -1}, {-1, 2}}); }

DoubleWord sl3_word() { return DoubleWord({1, 2, 1, 2, 1, -1, -2, -1}, 2); }

} // namespace

TEST_CASE("Cartan validation") {
  CHECK(a2().d == IntVector{1, 1});
  CHECK(validate_cartan(IntMatrix{{2, -2}, {-1, 2}}).d == IntVector{1, 2});
  CHECK(validate_cartan(IntMatrix{{2, -1}, {-3, 2}}).d == IntVector{3, 1});
  CHECK(validate_cartan(IntMatrix{{2, -2}, {-2, 2}}).d == IntVector{1, 1});
  CHECK(validate_cartan(IntMatrix{{2, -1}, {-1, 2}}, IntVector{2, 2}).d == IntVector{2, 2});
  CHECK_THROWS_AS(validate_cartan(IntMatrix{{2, -1}, {-1, 2}}, IntVector{1, 2}), NotSymmetrizable);
  CHECK_THROWS_AS(validate_cartan(IntMatrix{{1, -1}, {-1, 2}}), NotCartan);
  CHECK_THROWS_AS(validate_cartan(IntMatrix{{2, 1}, {1, 2}}), NotCartan);
  CHECK_THROWS_AS(validate_cartan(IntMatrix{{2, -1}, {0, 2}}), NotCartan);
  CHECK_THROWS_AS(validate_cartan(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}}),
                  NotSymmetrizable);
}

TEST_CASE("formal weights and reflections") {
  const CartanData cd = a2();
  const FormalWeight w1 = FormalWeight::omega(2, 1), a1 = FormalWeight::alpha(2, 1),
                     a2w = FormalWeight::alpha(2, 2);
  CHECK(coroot_value(cd, 1, w1) == 1);
  CHECK(coroot_value(cd, 2, w1) == 0);
  CHECK(coroot_value(cd, 1, a1) == 2);
  CHECK(coroot_value(cd, 2, a1) == -1);
  CHECK(reflect(cd, 1, w1) == w1 - a1);
  CHECK(reflect(cd, 2, w1) == w1);
  CHECK(reflect(cd, 1, reflect(cd, 1, w1)) == w1);
  CHECK(reflect(cd, 1, a2w) == a1 + a2w);
  CHECK(root_pairing(cd, a1, a1) == 2);
  CHECK(root_pairing(cd, a1, a2w) == -1);

  const DoubleWord dw = sl3_word();
  CHECK(pi_eps(cd, dw, 1, 3, Sign::plus, w1) == w1 - a1 - a2w);
  CHECK(pi_eps(cd, dw, 6, 8, Sign::plus, w1) == w1);
  CHECK(pi_eps(cd, dw, 6, 6, Sign::minus, w1) == w1 - a1);
}

TEST_CASE("double words") {
  const DoubleWord dw = sl3_word();
  CHECK(dw.size() == 8);
  CHECK(dw.letter(6) == 1);
  CHECK(dw.sign(6) == -1);
  const std::vector<std::size_t> kplus{3, 4, 5, 7, 6, 8, 9, 9};
  for (std::size_t k = 1; k <= 8; ++k)
    CHECK(dw.kplus(k) == kplus[k - 1]);
  CHECK(dw.kminus(1) == 0);
  CHECK(dw.kminus(7) == 4);
  CHECK(dw.ex() == std::vector<std::size_t>{3, 4, 5, 6});
  CHECK_THROWS_AS(DoubleWord({1, 0}, 2), PreconditionViolation);
  CHECK_THROWS_AS(DoubleWord({1, 3}, 2), PreconditionViolation);
}

TEST_CASE("SL3 word matrices") {
  const CartanData cd = a2();
  const DoubleWord dw = sl3_word();
  CHECK(btilde_matrix(cd, dw) == test::sl3_exchange());
  const auto [lambda, sigma] = lambda_sigma_matrices(cd, dw);
  CHECK(lambda->matrix() == test::sl3_lambda());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      CHECK(sigma.matrix()(i, j) == lambda->matrix()(i, j));
  CHECK(btilde_via_s(cd, dw, Sign::plus) == btilde_matrix(cd, dw));
  CHECK(btilde_via_s(cd, dw, Sign::minus) == btilde_matrix(cd, dw));
  CHECK(check_word_condition(cd, dw) == WordCondition::strong);

  const CartanIdentityReport rep = verify_cartan_identities(cd, dw);
  CHECK(rep.pair.d == IntVector{2, 2, 2, 2});
  CHECK(rep.condition == WordCondition::strong);
  verify_b_eta_identity(cd, dw);

  const QuantumSeed s = seed_from_cartan(cd, dw);
  CHECK(s.pair == test::sl3_pair());
  REQUIRE(s.sigma.has_value());
  CHECK(*s.sigma == sigma);
}

TEST_CASE("word conditions") {
  const CartanData cd = a2();
  const DoubleWord weak({1, 1, -2, 1}, 2);
  CHECK(check_word_condition(cd, weak) == WordCondition::weak);
  CHECK(verify_cartan_identities(cd, weak).condition == WordCondition::weak);
  const DoubleWord neither({2, 2, -2, 1}, 2);
  CHECK(check_word_condition(cd, neither) == WordCondition::neither);
  CHECK_THROWS_AS(verify_cartan_identities(cd, neither), PreconditionViolation);
  CHECK_THROWS_AS(seed_from_cartan(cd, neither), PreconditionViolation);
  const DoubleWord short_word({1, 2}, 2);
  CHECK(short_word.ex().empty());
  CHECK(check_word_condition(cd, short_word) == WordCondition::strong);
  CHECK(std::string(to_string(WordCondition::weak)) == "weak");
}

TEST_CASE("s-entries vanish for opposite signs") {
  // b_pk through s agrees with the direct formula on words mixing signs
  const CartanData cd = a2();
  const DoubleWord dw({1, -1, 2, -2, 1, -2}, 2);
  CHECK(btilde_via_s(cd, dw, Sign::plus) == btilde_matrix(cd, dw));
  CHECK(btilde_via_s(cd, dw, Sign::minus) == btilde_matrix(cd, dw));
}

TEST_CASE("eta ignores W-invariant shifts") {
  // alpha_1 + alpha_2 is W-invariant for the affine A1 matrix
  const CartanData cd = validate_cartan(IntMatrix{{2, -2}, {-2, 2}});
  const DoubleWord dw({1, 2, 1, 2, 1, 2}, 2);
  const FormalWeight delta = FormalWeight::alpha(2, 1) + FormalWeight::alpha(2, 2);
  CHECK(coroot_value(cd, 1, delta) == 0);
  CHECK(coroot_value(cd, 2, delta) == 0);
  const FormalWeight twice = delta + delta;
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t l = 1; l <= k; ++l) {
      CHECK(eta(cd, dw, k, l, &delta, nullptr) == eta(cd, dw, k, l));
      CHECK(eta(cd, dw, k, l, &delta, &twice) == eta(cd, dw, k, l));
    }
  CHECK(eta(cd, dw, 1, 2) == 0);
  const FormalWeight bad = FormalWeight::alpha(2, 1);
  CHECK_THROWS_AS(eta(cd, dw, 2, 1, &bad, nullptr), PreconditionViolation);
}

TEST_CASE("corpus words satisfy the identities") {
  for (const auto& w : word_corpus(100, 99)) {
    CAPTURE(w.type);
    const auto [lambda, sigma] = lambda_sigma_matrices(w.cartan, w.word);
    CHECK(lambda->matrix().is_skew_symmetric());
    CHECK(sigma.matrix().is_symmetric());
    CHECK(check_word_condition(w.cartan, w.word) == WordCondition::strong);
    CHECK(btilde_via_s(w.cartan, w.word) == btilde_matrix(w.cartan, w.word));
    CHECK_NOTHROW(verify_cartan_identities(w.cartan, w.word));
    CHECK_NOTHROW(verify_b_eta_identity(w.cartan, w.word));
  }
}

TEST_CASE("rank 2 words give the rank 2 pairs") {
  // For each (b, c) some short word of the matching type has a 2 x 2 principal
  // part equal to [[0, b], [-c, 0]] up to swapping the two labels.
  const std::vector<std::tuple<IntMatrix, std::int64_t, std::int64_t>> types{
      {IntMatrix{{2, -1}, {-1, 2}}, 1, 1},
      {IntMatrix{{2, -1}, {-2, 2}}, 1, 2},
      {IntMatrix{{2, -1}, {-3, 2}}, 1, 3}};
  for (const auto& [a, b, c] : types) {
    const CartanData cd = validate_cartan(a);
    const IntMatrix want{{0, b}, {-c, 0}}, swapped{{0, -c}, {b, 0}};
    bool found = false;
    for (std::size_t len = 4; len <= 7 && !found; ++len) {
      std::vector<std::int64_t> word(len, 1);
      for (std::size_t code = 0; code < (std::size_t{1} << (2 * len)) && !found; ++code) {
        for (std::size_t i = 0; i < len; ++i) {
          const std::size_t digit = (code >> (2 * i)) & 3;
          word[i] = (digit & 1 ? -1 : 1) * static_cast<std::int64_t>(1 + (digit >> 1));
        }
        const DoubleWord dw(word, 2);
        if (dw.ex().size() != 2 || check_word_condition(cd, dw) != WordCondition::strong)
          continue;
        const IntMatrix p = btilde_matrix(cd, dw).principal();
        if (p == want || p == swapped) {
          found = true;
          CHECK_NOTHROW(verify_cartan_identities(cd, dw));
        }
      }
    }
    CHECK(found);
  }
}

TEST_CASE("corpus is reproducible") {
  const auto a = word_corpus(20, 5), b = word_corpus(20, 5);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].word.entries() == b[i].word.entries());
  const auto cases = mutation_corpus(50, 5);
  CHECK(cases.size() == 50);
  for (const auto& c : cases) {
    CHECK_FALSE(c.directions.empty());
    CHECK(c.directions.size() <= 6);
    for (std::size_t i = 0; i + 1 < c.directions.size(); ++i)
      CHECK(c.directions[i] != c.directions[i + 1]);
  }
}
