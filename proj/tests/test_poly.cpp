#include <doctest.h>

#include <random>
#include <set>

#include "stringcone/jsonio.hpp"
#include "stringcone/poly.hpp"

using namespace stringcone;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int vars) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-2, 2), coeff(-3, 3);
  LaurentPoly p(vars, Chart::X);
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    ExponentVec e(vars);
    for (int j = 0; j < vars; ++j) e[j] = expo(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  // (x1 + x2)(x1 - x2) = x1^2 - x2^2
  const LaurentPoly x1 = LaurentPoly::variable(2, 1);
  const LaurentPoly x2 = LaurentPoly::variable(2, 2);
  const LaurentPoly prod = (x1 + x2) * (x1 - x2);
  LaurentPoly expected(2, Chart::X);
  expected.add_term({2, 0}, 1);
  expected.add_term({0, 2}, -1);
  CHECK(prod == expected);

  const LaurentPoly p = x1 + x2 * x2;
  CHECK((p - p).is_zero());
  CHECK((p + (-p)).is_zero());

  // divide_by_monomial shifts exponents.
  LaurentPoly q(2, Chart::X);
  q.add_term({1, -1}, 1);
  q.add_term({1, 0}, 1);
  const LaurentPoly shifted = divide_by_monomial(q, {1, 0});
  LaurentPoly expected2(2, Chart::X);
  expected2.add_term({0, -1}, 1);
  expected2.add_term({0, 0}, 1);
  CHECK(shifted == expected2);

  CHECK_THROWS_AS(x1 + LaurentPoly::variable(3, 1), invalid_input);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 60; ++iter) {
    const LaurentPoly a = random_poly(rng, 3);
    const LaurentPoly b = random_poly(rng, 3);
    const LaurentPoly c = random_poly(rng, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    const LaurentPoly a = random_poly(rng, 3);
    LaurentPoly b = random_poly(rng, 3);
    if (b.is_zero()) b = LaurentPoly::constant(3, 1);
    CHECK(divide_exact(a * b, b) == a);
  }
  const LaurentPoly x = LaurentPoly::variable(1, 1);
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  CHECK_THROWS_AS(divide_exact(one, one + x), not_divisible);
}

TEST_CASE("monomial substitution") {
  // A2 torus map rows for the word (1,2,1).
  const IntMatrix E{{-1, 1, -1}, {0, -1, 1}, {0, 0, -1}};
  LaurentPoly p(3, Chart::X);
  p.add_term({0, -1, 0}, 1);  // X2^{-1}
  const LaurentPoly image = substitute_monomials(p, E);
  LaurentPoly expected(3, Chart::x);
  expected.add_term({0, 1, -1}, 1);  // x2 x3^{-1}
  CHECK(image == expected);

  LaurentPoly q(3, Chart::X);
  q.add_term({0, -1, 0}, 1);
  q.add_term({-1, -1, 0}, 1);  // X1^{-1} X2^{-1}
  const LaurentPoly image2 = substitute_monomials(q, E);
  LaurentPoly expected2(3, Chart::x);
  expected2.add_term({0, 1, -1}, 1);
  expected2.add_term({1, 0, 0}, 1);  // x1
  CHECK(image2 == expected2);

  const IntMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(substitute_monomials(q, id) == q.with_chart(Chart::x));

  CHECK_THROWS_AS(substitute_monomials(q, IntMatrix{{1}}), invalid_input);
  CHECK_THROWS_AS(substitute_monomials(image, E), invalid_input);  // x-chart input

  // Substituting with E then F equals substituting once with E*F.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int iter = 0; iter < 20; ++iter) {
    const LaurentPoly a = random_poly(rng, 3);
    IntMatrix e(3, IntVector(3)), f(3, IntVector(3)), ef(3, IntVector(3, 0));
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) {
        e[r][s] = entry(rng);
        f[r][s] = entry(rng);
      }
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        for (int k = 0; k < 3; ++k) ef[r][s] += e[r][k] * f[k][s];
    const LaurentPoly two_step =
        substitute_monomials(substitute_monomials(a, e).with_chart(Chart::X), f);
    CHECK(two_step == substitute_monomials(a, ef));
  }
}

TEST_CASE("tropicalization") {
  LaurentPoly p(3, Chart::x);
  p.add_term({1, 0, 0}, 1);
  p.add_term({0, 1, -1}, 1);
  const TropicalForm f = tropicalize(p);
  REQUIRE(f.forms.size() == 2);
  CHECK(eval_tropical(f, {0, 1, 0}) == 0);
  CHECK(eval_tropical(f, {5, 0, 2}) == -2);

  LaurentPoly mono = LaurentPoly::variable(3, 3, 1, Chart::x);
  const TropicalForm fm = tropicalize(mono);
  REQUIRE(fm.forms.size() == 1);
  CHECK(eval_tropical(fm, {7, 8, 9}) == 9);

  LaurentPoly neg(2, Chart::x);
  neg.add_term({1, 0}, -1);
  CHECK_THROWS_AS(tropicalize(neg), invalid_input);

  // min-plus morphisms: eval(pq) = eval(p) + eval(q), eval(p+q) = min.
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> expo(-2, 2), coeff(1, 3), pt(-3, 3);
  for (int iter = 0; iter < 30; ++iter) {
    LaurentPoly a(2, Chart::x), b(2, Chart::x);
    for (int t = 0; t < 3; ++t) {
      a.add_term({expo(rng), expo(rng)}, coeff(rng));
      b.add_term({expo(rng), expo(rng)}, coeff(rng));
    }
    const std::vector<long long> t{pt(rng), pt(rng)};
    CHECK(eval_tropical(tropicalize(a * b), t) ==
          eval_tropical(tropicalize(a), t) + eval_tropical(tropicalize(b), t));
    CHECK(eval_tropical(tropicalize(a + b), t) ==
          std::min(eval_tropical(tropicalize(a), t), eval_tropical(tropicalize(b), t)));
    // With positive coefficients the product support is the Minkowski sum.
    std::set<ExponentVec> minkowski;
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        (void)ca;
        (void)cb;
        minkowski.insert({ea[0] + eb[0], ea[1] + eb[1]});
      }
    std::set<ExponentVec> prod_support;
    const LaurentPoly ab = a * b;
    for (const auto& [e, coef] : ab.terms()) {
      (void)coef;
      prod_support.insert(e);
    }
    CHECK(prod_support == minkowski);
  }
}

TEST_CASE("multiplicity-free predicate") {
  LaurentPoly p(3, Chart::x);
  p.add_term({1, 0, 0}, 1);
  p.add_term({0, 1, -1}, 1);
  CHECK(is_multiplicity_free(p));

  LaurentPoly q(2, Chart::x);
  q.add_term({-2, 1}, 1);
  CHECK_FALSE(is_multiplicity_free(q));

  CHECK(is_multiplicity_free(LaurentPoly(4, Chart::x)));
}

TEST_CASE("polynomial json round trip") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 25; ++iter) {
    LaurentPoly p = random_poly(rng, 4);
    p.add_term({1, 2, -1, 0}, make_rational(3, 7));
    const json j = poly_to_json(p);
    CHECK(poly_from_json(j) == p);
  }
}

TEST_CASE("error paths") {
  LaurentPoly p(2, Chart::x);
  p.add_term({1, 0}, 1);
  CHECK_THROWS_AS(divide_by_monomial(p, {1, 0, 0}), invalid_input);
  const TropicalForm empty = tropicalize(LaurentPoly(2, Chart::x));
  CHECK(empty.forms.empty());
  CHECK_THROWS_AS(eval_tropical(empty, {0, 0}), invalid_input);
  CHECK_THROWS_AS(eval_tropical(tropicalize(p), {0, 0, 0}), invalid_input);
}
