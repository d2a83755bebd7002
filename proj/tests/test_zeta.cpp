#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kinkzeta/zeta_engine.hpp"

using namespace kinkzeta;

TEST_CASE("Bromwich trace of case A equals erf") {
  for (double t : {0.01, 0.3, 1.0, 7.0}) CHECK(gamma_t_bromwich(make_case(CaseId::A, 1), t) == doctest::Approx(std::erf(std::sqrt(t))).epsilon(1e-12));
}

TEST_CASE("residue census: one pole term per double root") {
  for (CaseId id : {CaseId::A, CaseId::C}) {
    const auto lt = laplace_trace(make_case(id, 1));
    const auto d = gamma_t_bromwich_detail(lt, 0.5);
    CHECK(d.residues.size() == lt.res.branches.double_roots().size());
  }
  CHECK(laplace_trace(make_case(CaseId::A, 1)).res.branches.double_roots().size() == 1);
  CHECK(laplace_trace(make_case(CaseId::C, 1)).res.branches.double_roots().size() == 2);
}

TEST_CASE("Mellin transform of a constant background") {
  const MellinZeta z(dimension_lift(heat_trace_constant(1.0), 3), 1.0);
  CHECK(z(0.3) == doctest::Approx(zeta_constant_background(0.3, 3, 1.0, 1.0)).epsilon(1e-9));
}

TEST_CASE("vacuum minus itself has vanishing zeta") {
  HeatTrace zero;
  zero.eval = [](double) { return 0.0; };
  zero.decay_rate = 1;
  zero.large_t = {0, 0};
  const MellinZeta z(zero, 1.0);
  for (double s : {-0.3, 0.2, 0.7}) CHECK(z(s) == 0.0);
  CHECK(z.derivative_at_zero() == 0.0);
}

TEST_CASE("closed and numeric SG-kink corrections agree") {
  for (int d = 1; d <= 4; ++d) {
    const auto r = delta_epsilon(d, 1.0, 1.0);
    CHECK(r.numeric.delta_eps == doctest::Approx(r.closed.delta_eps).epsilon(1e-9).scale(1e-9));
  }
  CHECK(delta_epsilon(3, 1.0, 1.0).closed.delta_eps == doctest::Approx(0.0795775).epsilon(1e-6));
  CHECK(delta_epsilon(1, 1.0, 1.0).closed.delta_eps == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  CHECK(delta_epsilon(1, 0.5, 1.0).closed.delta_eps == doctest::Approx(0).scale(1).epsilon(1e-12));
}

TEST_CASE("mass-scale dependence follows -zeta(0) ln M") {
  const double M = 3.7;
  const auto a = delta_epsilon(1, 1.0, M), b = delta_epsilon(1, 1.0, 1.0);
  CHECK(a.closed.delta_eps - b.closed.delta_eps == doctest::Approx(-b.closed.zeta0 * std::log(M)).epsilon(1e-10));
}

TEST_CASE("periodic SG zeta'(0) approaches the kink value as k -> 1") {
  const auto r = periodic_zeta_numeric(make_case(CaseId::B, 1, 0.99), 1, {0.0});
  CHECK(r.refinement_change < 1e-8);
  CHECK(std::abs(r.zeta_prime0 - 2 * std::log(2.0)) < 0.1);
  CHECK(r.zeta0 == doctest::Approx(-1).epsilon(1e-6));
}
