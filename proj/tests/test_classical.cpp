#include <doctest.h>

#include <cmath>

#include "kinkzeta/classical.hpp"

using namespace kinkzeta;

TEST_CASE("equation of motion and first integral") {
  for (Model model : {Model::SG, Model::Phi4}) {
    for (Kind kind : {Kind::Kink, Kind::Antikink, Kind::Periodic}) {
      const auto f = make_family(ModelParams(model, 1.3, 0.7), kind, kind == Kind::Periodic ? 0.6 : 0.0);
      double ref = NAN;
      for (double x = -4; x <= 4; x += 0.5) {
        CHECK(std::abs(eom_residual(f, x)) < 1e-5);
        const auto pt = profile_point(f, x);
        const double w = 0.5 * pt.dphi * pt.dphi - potential(f.params, pt.phi);
        if (std::isnan(ref)) ref = w;
        CHECK(w == doctest::Approx(ref).epsilon(1e-12).scale(1));
      }
    }
  }
}

TEST_CASE("kink energies: quadrature against closed form") {
  const auto sg = classical_energy(make_family(ModelParams(Model::SG, 1, 1), Kind::Kink));
  CHECK(sg.quadrature == doctest::Approx(16.0 / 3).epsilon(1e-12));
  REQUIRE(sg.paper_closed_form);
  CHECK(*sg.paper_closed_form == 16.0);
  const auto phi4 = classical_energy(make_family(ModelParams(Model::Phi4, 2, 0.5), Kind::Kink));
  CHECK(phi4.quadrature == doctest::Approx(phi4.closed_form).epsilon(1e-10));
}

TEST_CASE("periodic SG energy tends to the kink energy") {
  const ModelParams p(Model::SG, 1, 1);
  const auto kink = classical_energy(make_family(p, Kind::Kink));
  const auto per = classical_energy(make_family(p, Kind::Periodic, 0.999999));
  CHECK(per.quadrature == doctest::Approx(kink.quadrature).epsilon(1e-5));
}

TEST_CASE("fluctuation cases match V'' on the profile") {
  for (Model model : {Model::SG, Model::Phi4}) {
    for (Kind kind : {Kind::Kink, Kind::Periodic}) {
      const auto f = make_family(ModelParams(model, 1.1, 1), kind, kind == Kind::Periodic ? 0.7 : 0.0);
      const auto c = fluctuation_case(f);
      for (double x = -3; x <= 3; x += 0.4)
        CHECK(c.u(x) == doctest::Approx(potential_d2(f.params, profile(f, x))).epsilon(1e-10).scale(1));
    }
  }
}

TEST_CASE("vacuum masses and cell lengths") {
  CHECK(make_case(CaseId::A, 2).vacuum_mass2() == doctest::Approx(4));
  CHECK(make_case(CaseId::C, 1).vacuum_mass2() == doctest::Approx(4));
  CHECK(make_case(CaseId::D, 1, 0.6).vacuum_mass2() == doctest::Approx(2 * 1.36));
  CHECK(make_case(CaseId::B, 1, 0.0001).cell_length() == doctest::Approx(M_PI).epsilon(1e-6));
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(Modulus(1.5), std::domain_error);
  CHECK_THROWS_AS(ModelParams(Model::SG, -1, 1), std::domain_error);
  CHECK_THROWS(parse_model("xy"));
  CHECK_THROWS_AS(classical_energy(make_family(ModelParams(), Kind::Vacuum)), std::domain_error);
}
