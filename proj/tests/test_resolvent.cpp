#include <doctest.h>

#include <cmath>

#include "kinkzeta/resolvent.hpp"
#include "kinkzeta/spectral_oracle.hpp"

using namespace kinkzeta;

namespace {

RationalPoly uni_p(std::vector<long> c) {
  RationalPoly r;
  for (std::size_t i = 0; i < c.size(); ++i) r += RationalPoly(c[i]) * RationalPoly::variable(kVarP, int(i));
  return r;
}

}  // namespace

TEST_CASE("symbolic P and Q satisfy the bilinear identity") {
  for (CaseId id : {CaseId::A, CaseId::B, CaseId::C, CaseId::D}) {
    const auto& s = symbolic_resolvent(id);
    const auto c = make_case(id, 1, 0.5);
    CHECK(bilinear_identity(c.rho, c.u_exact, s.P, s.Q).is_zero());
  }
  CHECK(symbolic_resolvent(CaseId::A).Q == uni_p({0, 0, 1, 1}));
  CHECK(symbolic_resolvent(CaseId::A).P == RationalPoly::variable(kVarP) + RationalPoly::variable(kVarZ));
  CHECK(symbolic_resolvent(CaseId::C).Q == uni_p({0, 0, 36, 33, 10, 1}));
}

TEST_CASE("diagonal resolvent values and the Wronskian") {
  const auto a = solve_PQ(make_case(CaseId::A, 1));
  const auto c = solve_PQ(make_case(CaseId::C, 1));
  CHECK(eval_diag_green(a, 1.0, 0.0) == doctest::Approx(0.707107).epsilon(1e-6));
  CHECK(eval_diag_green(c, 1.0, 0.0) == doctest::Approx(0.894427).epsilon(1e-6));
  const auto fc = make_case(CaseId::A, 1);
  CHECK(wronskian_green([&](double x) { return fc.u(x); }, 1.0, 0.0) == doctest::Approx(0.707107).epsilon(1e-6));
}

TEST_CASE("Hermite equation residual") {
  for (CaseId id : {CaseId::A, CaseId::B, CaseId::C, CaseId::D}) {
    const auto c = make_case(id, 1.2, 0.6);
    const auto res = solve_PQ(c);
    for (double x : {-1.0, 0.0, 0.4, 2.0}) CHECK(std::abs(hermite_residual(c, res.branches.max_root() + 1, x)) < 1e-5);
  }
}

TEST_CASE("scaling law G_b(p, x) = G_1(p / b^2, b x) / b") {
  const auto r1 = solve_PQ(make_case(CaseId::C, 1));
  const double b = 1.7;
  const auto rb = solve_PQ(make_case(CaseId::C, b));
  for (double p : {1.0, 3.0, 10.0})
    for (double x : {0.0, 0.3, 1.5})
      CHECK(eval_diag_green(rb, p * b * b, x) == doctest::Approx(eval_diag_green(r1, p, b * x) / b).epsilon(1e-12));
}

TEST_CASE("large-p asymptotics 1 / (2 sqrt p)") {
  const auto r = solve_PQ(make_case(CaseId::D, 1, 0.6));
  const double p = 1e8;
  CHECK(eval_diag_green(r, p, 0.3) * 2 * std::sqrt(p) == doctest::Approx(1).epsilon(1e-7));
}

TEST_CASE("branch points of case D at k = 0.6") {
  const auto r = solve_PQ(make_case(CaseId::D, 1, 0.6));
  const std::vector<double> expect = {-3.11454, -3, -1.08, 0, 0.394537};
  REQUIRE(r.branches.roots.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(r.branches.roots[i] == doctest::Approx(expect[i]).epsilon(1e-5).scale(1));
  CHECK(exact_modulus(0.6) == BigRational(3, 5));
  CHECK_THROWS_AS(eval_diag_green(r, 0.0, 0.0), BranchError);
}

TEST_CASE("kink split into vacuum and localized parts") {
  const auto s = split_constant_kink(solve_PQ(make_case(CaseId::A, 1)));
  CHECK(s.G_c(1, 0) == doctest::Approx(1 / (2 * std::sqrt(2.0))));
  CHECK(s.G_k(1, 0) == doctest::Approx(1 / (2 * std::sqrt(2.0))));
  CHECK(std::abs(s.G_k(1, 30)) < 1e-20);
}
