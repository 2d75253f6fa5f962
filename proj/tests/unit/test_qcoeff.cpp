#include <doctest.h>

#include <random>

#include "qca/error.hpp"
#include "qca/qlaurent.hpp"
#include "qca/torus.hpp"

using namespace qca;

namespace {

QLaurent q(const char* text) { return QLaurent::parse(text); }

QLaurent random_laurent(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms), h(-6, 6), c(-5, 5);
  std::vector<QLaurent::Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    terms.push_back({h(rng), c(rng)});
  return QLaurent::from_terms(terms);
}

QLaurent random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    QLaurent x = random_laurent(rng);
    if (!x.is_zero())
      return x;
  }
}

} // namespace

TEST_CASE("laurent arithmetic and parsing") {
  const QLaurent a = q("q^(1/2) + q^(-1/2)");
  CHECK(a.low() == -1);
  CHECK(a.high() == 1);
  CHECK(a.num_terms() == 2);
  CHECK(a * a == q("q + 2 + q^(-1)"));
  CHECK(a - a == QLaurent());
  CHECK(q("3*q^2 - q^(-3/2)").coeff(4) == 3);
  CHECK(q("3*q^2 - q^(-3/2)").coeff(-3) == -1);
  CHECK(q("q").to_string() == "1*q^(1)");
  CHECK(q("2 - q^(1/2)").to_pretty_string() == "-q^(1/2) + 2");
  CHECK(QLaurent::parse(q("5*q^(7/2) - 2*q^(-1)").to_string()) == q("5*q^(7/2) - 2*q^(-1)"));
  CHECK(q("q^2 + q^(-1/2)").bar() == q("q^(-2) + q^(1/2)"));
  CHECK(q("q + 1 + q^(-1)").at_one() == 3);
  CHECK_THROWS_AS(QLaurent::parse("q^(1/3)"), ParseError);
  CHECK_THROWS_AS(QLaurent::parse(""), ParseError);
}

TEST_CASE("bar is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const QLaurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK(coeff_bar(a * b) == coeff_bar(a) * coeff_bar(b));
    CHECK(coeff_bar(a + b) == coeff_bar(a) + coeff_bar(b));
    CHECK(coeff_bar(coeff_bar(a)) == a);
  }
}

TEST_CASE("exact division") {
  const QLaurent a = q("q + 1 + q^(-1)"), b = q("q^(1/2) - q^(-1/2)");
  CHECK(*exact_divide(a * b, b) == a);
  CHECK_FALSE(exact_divide(a, b).has_value());
  CHECK(*exact_divide(q("2*q^3"), q("q")) == q("2*q^2"));
  CHECK_THROWS_AS(exact_divide(a, QLaurent()), DivisionByZero);
}

TEST_CASE("gauss binomial values") {
  CHECK(gauss_binom(1, 1, 5) == QLaurent(1));
  CHECK(gauss_binom(2, 1, 1) == q("q^(1/2) + q^(-1/2)"));
  CHECK(gauss_binom(3, 1, 1) == q("q + 1 + q^(-1)"));
  CHECK(gauss_binom(3, 1, 2) == q("q^2 + 1 + q^(-2)"));
  CHECK(gauss_binom(4, 2, 1) == q("q^2 + q + 2 + q^(-1) + q^(-2)"));
  CHECK(gauss_binom(3, 4, 1).is_zero());
  CHECK(gauss_binom(3, -1, 1).is_zero());
  CHECK(gauss_binom(5, 2, 0) == QLaurent(10));
  CHECK_THROWS_AS(gauss_binom(-1, 0, 1), PreconditionViolation);
}

TEST_CASE("gauss binomial symmetry") {
  for (std::int64_t r = 0; r <= 8; ++r)
    for (std::int64_t p = 0; p <= r; ++p)
      for (std::int64_t d = 1; d <= 3; ++d) {
        const QLaurent g = gauss_binom(r, p, d);
        CHECK(g == gauss_binom(r, r - p, d));
        CHECK(coeff_bar(g) == g);
        CHECK(g.at_one() == gauss_binom(r, p, 0).at_one());
      }
}

TEST_CASE("t-binomial formula with a commuting variable") {
  // x is X^(1) in the torus with zero form.
  const SkewFormPtr flat = make_form(IntMatrix(1, 1));
  const TorusElement x = basis_elem(flat, {1});
  for (std::int64_t d = 1; d <= 3; ++d)
    for (std::int64_t r = 0; r <= 8; ++r) {
      TorusElement lhs = TorusElement::constant(flat, QLaurent(1));
      for (std::int64_t p = 0; p < r; ++p)
        lhs = lhs * (TorusElement::constant(flat, QLaurent(1)) +
                     x.scaled(QLaurent::monomial((r - 1 - 2 * p) * d)));
      TorusElement rhs(flat);
      for (std::int64_t p = 0; p <= r; ++p)
        rhs += basis_elem(flat, {p}).scaled(gauss_binom(r, p, d));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("gcd over Z[q^(1/2)]") {
  const QLaurent a = q("q^(1/2) + 1"), b = q("q^(1/2) - 1"), c = q("2*q + 3");
  CHECK(gcd(a * c, b * c) == c);
  CHECK(gcd(a, b).is_one());
}

TEST_CASE("fraction normal form is canonical") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const QLaurent a = random_laurent(rng), b = random_nonzero(rng), c = random_nonzero(rng);
    const QRational x(a, b), y(a * c, b * c);
    CHECK(x == y);
    CHECK(x.num() == y.num());
    CHECK(x.den() == y.den());
  }
  const QRational half(QLaurent(1), QLaurent(2));
  CHECK_FALSE(half.is_laurent());
  CHECK_THROWS_AS(half.to_laurent(), NonIntegralQuotient);
  CHECK((half + half).to_laurent() == QLaurent(1));
  CHECK(QRational(q("q - 1"), q("q^(1/2) - 1")).to_laurent() == q("q^(1/2) + 1"));
  CHECK(QRational(q("q^(3/2)"), q("q")).to_laurent() == q("q^(1/2)"));
  CHECK_THROWS_AS(QRational(QLaurent(1), QLaurent()), DivisionByZero);
  CHECK_THROWS_AS(half / QRational(), DivisionByZero);
  CHECK(qrational_divide(q("q + 2 + q^(-1)"), q("q^(1/2) + q^(-1/2)")).to_laurent() ==
        q("q^(1/2) + q^(-1/2)"));
}
