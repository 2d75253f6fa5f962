#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qca/error.hpp"
#include "qca/torus.hpp"

using namespace qca;

namespace {

const SkewFormPtr& plane() {
  static const SkewFormPtr f = make_form(IntMatrix{{0, 1}, {-1, 0}});
  return f;
}

QLaurent q(const char* t) { return QLaurent::parse(t); }

TorusElement random_element(std::mt19937_64& rng, const SkewFormPtr& form) {
  std::uniform_int_distribution<int> nterms(1, 3), e(-2, 2), h(-3, 3), c(-3, 3);
  TorusElement x(form);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exponent v(form->dim());
    for (auto& vi : v)
      vi = e(rng);
    x += TorusElement::basis(form, v, QLaurent::monomial(h(rng), c(rng)));
  }
  return x;
}

} // namespace

TEST_CASE("skew form and grading validation") {
  CHECK_THROWS_AS(SkewForm(IntMatrix{{0, 1}, {1, 0}}), PreconditionViolation);
  CHECK_THROWS_AS(GradingMatrix(IntMatrix{{0, 1}, {-1, 0}}), PreconditionViolation);
  CHECK_THROWS_AS(basis_elem(plane(), {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("multiplication law") {
  const auto x1 = basis_elem(plane(), {1, 0}), x2 = basis_elem(plane(), {0, 1});
  CHECK(x1 * x2 == basis_elem(plane(), {1, 1}).shifted(1));
  CHECK(x2 * x1 == basis_elem(plane(), {1, 1}).shifted(-1));
  CHECK(x1 * x2 == (x2 * x1).shifted(2));
  CHECK(quasi_commutation_exponent(x1, x2) == 2);
  CHECK(power(x1, 3) == basis_elem(plane(), {3, 0}));
  CHECK(power(x1, -2) * power(x1, 2) == TorusElement::constant(plane(), QLaurent(1)));
  CHECK(power(x1 * x2, 2) == basis_elem(plane(), {2, 2}).shifted(2));
  CHECK(power(basis_elem(plane(), {1, 1}), 2) == basis_elem(plane(), {2, 2}));
  CHECK_THROWS_AS(power(x1 + x2, -1), NonInvertibleEntry);

  const SkewFormPtr other = make_form(IntMatrix{{0, 2}, {-2, 0}});
  CHECK_THROWS_AS(x1 * basis_elem(other, {1, 0}), PreconditionViolation);
}

TEST_CASE("associativity over random triples") {
  std::mt19937_64 rng(2024);
  const SkewFormPtr f3 = make_form(IntMatrix{{0, 1, -2}, {-1, 0, 3}, {2, -3, 0}});
  for (int i = 0; i < 200; ++i) {
    const SkewFormPtr& f = i % 2 ? plane() : f3;
    const auto a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("extreme exponents of a product") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(rng, plane()), b = random_element(rng, plane());
    if (a.is_zero() || b.is_zero())
      continue;
    const auto p = a * b;
    Exponent top(2), bottom(2);
    for (int k = 0; k < 2; ++k) {
      top[k] = a.leading().first[k] + b.leading().first[k];
      bottom[k] = a.terms().begin()->first[k] + b.terms().begin()->first[k];
    }
    CHECK(p.leading().first == top);
    CHECK(p.terms().begin()->first == bottom);
  }
}

TEST_CASE("bar involutions and degrees") {
  const auto x = TorusElement::basis(plane(), {1, 2}, q("q^(1/2)")) +
                 TorusElement::basis(plane(), {0, 1}, q("3"));
  CHECK(bar(bar(x)) == x);
  CHECK(bar(x).coeff({1, 2}) == q("q^(-1/2)"));
  const GradingMatrix sigma(IntMatrix{{1, 0}, {0, 1}});
  CHECK(twisted_bar(basis_elem(plane(), {1, 1}), sigma) == basis_elem(plane(), {1, 1}).shifted(-2));
  CHECK(twisted_bar(twisted_bar(x, sigma), sigma) == x);
  const GradingMatrix flat(IntMatrix{{0, 0}, {0, 0}});
  CHECK(deg_sigma(x, flat) == 0);
  CHECK_THROWS_AS(deg_sigma(x, sigma), Inhomogeneous);
  CHECK_THROWS_AS(deg_sigma(TorusElement(plane()), sigma), ZeroElement);
  CHECK(deg_sigma(basis_elem(plane(), {2, 1}), sigma) == 5);
}

TEST_CASE("d(b), P-elements and rho") {
  CHECK(d_of_b(*plane(), {1, 0}) == 1);
  CHECK(d_of_b(*plane(), {2, 0}) == 2);
  CHECK_THROWS_AS(d_of_b(*make_form(IntMatrix(2, 2)), {1, 0}), KernelVector);

  const auto p2 = p_element(plane(), {1, 0}, Sign::plus, 2);
  const auto expected = TorusElement::constant(plane(), QLaurent(1)) +
                        TorusElement::basis(plane(), {1, 0}, q("q^(1/2) + q^(3/2)")) +
                        TorusElement::basis(plane(), {2, 0}, q("q^2"));
  CHECK(p2 == expected);
  CHECK(p_element(plane(), {1, 0}, Sign::plus, 0) == TorusElement::constant(plane(), QLaurent(1)));

  const auto r = rho_poly(plane(), {1, 0}, Sign::plus, {0, -2});
  CHECK(r == test::parse_expansion(plane(), "Y^{(0,-2)} + (q^{1/2}+q^{-1/2}) Y^{(1,-2)} + Y^{(2,-2)}"));
  CHECK(rho_poly(plane(), {1, 0}, Sign::plus, {3, 0}) == basis_elem(plane(), {3, 0}));
  CHECK_THROWS_AS(rho_poly(plane(), {1, 0}, Sign::plus, {0, 1}), PositiveDegree);
}

TEST_CASE("left division") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(rng, plane()), b = random_element(rng, plane());
    if (a.is_zero())
      continue;
    CHECK(solve_left(a, a * b) == b);
  }
  const auto one = TorusElement::constant(plane(), QLaurent(1));
  const auto x1 = basis_elem(plane(), {1, 0});
  CHECK_THROWS_AS(solve_left(one + x1, one), NotDivisible);
  CHECK_THROWS_AS(solve_left(one.scaled(QLaurent(2)) + x1.scaled(QLaurent(2)), one + x1),
                  NonIntegralQuotient);
  CHECK_THROWS_AS(solve_left(TorusElement(plane()), one), DivisionByZero);
  CHECK(solve_left(one + x1, TorusElement(plane())).is_zero());
}

TEST_CASE("center lattice") {
  const SkewForm lam(test::sl3_lambda());
  const auto basis = center_kernel(lam);
  CHECK(basis.size() == 2);
  const SkewFormPtr f = make_form(test::sl3_lambda());
  for (const auto& c : basis) {
    const auto z = basis_elem(f, c);
    for (std::size_t i = 0; i < 8; ++i) {
      Exponent e(8, 0);
      e[i] = 1;
      CHECK(z * basis_elem(f, e) == basis_elem(f, e) * z);
    }
  }
  CHECK(center_kernel(*plane()).empty());
}

TEST_CASE("rendering") {
  const auto x = TorusElement::basis(plane(), {1, -2}, QLaurent(1)) +
                 TorusElement::basis(plane(), {0, -2}, q("q^(1/2) + q^(-1/2)"));
  CHECK(x.render("Y") == "Y^(1,-2) + (q^(1/2) + q^(-1/2))*Y^(0,-2)");
}
