#include <doctest.h>

#include <random>

#include "kinkzeta/exact_poly.hpp"

using namespace kinkzeta;

namespace {

RationalPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-9, 9), e(0, 3);
  RationalPoly r;
  for (int i = 0; i < 5; ++i)
    r += RationalPoly::monomial(BigRational(c(rng), 1 + e(rng)), {e(rng), e(rng), e(rng)});
  return r;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * RationalPoly(1) == a);
  }
}

TEST_CASE("evaluation is a homomorphism") {
  std::mt19937 rng(3);
  const std::vector<BigRational> pt = {BigRational(2, 3), BigRational(-5, 7), BigRational(9, 4)};
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("derivative, substitution and printing") {
  const auto z = RationalPoly::variable(kVarZ), p = RationalPoly::variable(kVarP);
  const auto f = pow(z, 3) * p + RationalPoly(BigRational(1, 2)) * z;
  CHECK(f.derivative(kVarZ) == RationalPoly(3) * pow(z, 2) * p + RationalPoly(BigRational(1, 2)));
  CHECK(f.substitute(kVarZ, BigRational(2)) == RationalPoly(8) * p + RationalPoly(1));
  CHECK(f.degree(kVarZ) == 3);
  CHECK((p * p + p).to_string() == "p^2 + p");
}

TEST_CASE("exact linear solve and its failure modes") {
  // x3 + x4 = 3, x3 - x4 = 1
  AffineRelation a{{{3, 1}, {4, 1}}, -3}, b{{{3, 1}, {4, -1}}, -1};
  const auto sol = solve_exact_linear({a, b});
  CHECK(sol.at(3) == 2);
  CHECK(sol.at(4) == 1);
  AffineRelation c{{{3, 1}}, -1}, d{{{3, 1}}, -2};
  CHECK_THROWS_AS(solve_exact_linear({c, d}), InconsistentSystem);
  CHECK_THROWS_AS(solve_exact_linear({a}), UnderdeterminedSystem);
}

TEST_CASE("univariate factorization tools") {
  // (p + 3)^2 p (p - 1/2)
  const UniPoly f = {0, BigRational(-9, 2), 6, BigRational(11, 2), 1};
  auto roots = rational_roots(f);
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -3);
  CHECK(roots[1] == 0);
  CHECK(roots[2] == BigRational(1, 2));
  const auto sq = squarefree_decomposition(f);
  REQUIRE(sq.size() >= 2);
  CHECK(sq[1] == UniPoly{3, 1});
  CHECK(uni_gcd(f, uni_derivative(f)) == UniPoly{3, 1});
}
