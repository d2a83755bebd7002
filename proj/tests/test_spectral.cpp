#include <doctest.h>

#include <cmath>

#include "kinkzeta/spectral_oracle.hpp"

using namespace kinkzeta;

TEST_CASE("constant potential: discrete spectrum and Wronskian") {
  const auto g = Grid1D::dirichlet(-10, 10, 400);
  const auto fd = fd_spectrum([](double) { return 2.0; }, g);
  const auto free = free_spectrum(g, 2.0);
  REQUIRE(fd.eigenvalues.size() == free.size());
  for (std::size_t i = 0; i < free.size(); ++i) CHECK(fd.eigenvalues[i] == doctest::Approx(free[i]).epsilon(1e-10));
  for (double p : {0.5, 1.0, 4.0})
    CHECK(wronskian_green([](double) { return 2.0; }, p, 0.3) == doctest::Approx(0.5 / std::sqrt(p + 2)).epsilon(1e-9));
}

TEST_CASE("second-order convergence on the sech^2 bound states") {
  const auto c = make_case(CaseId::C, 1);
  auto lam = [&](int n) {
    return fd_spectrum([&](double x) { return c.u(x); }, Grid1D::dirichlet(-12, 12, n)).eigenvalues[1];
  };
  const double l1 = lam(241), l2 = lam(481), l3 = lam(961);
  const double ratio = (l1 - l2) / (l2 - l3);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
  CHECK(l3 == doctest::Approx(3).epsilon(1e-4));
}

TEST_CASE("Lame band edges of case B") {
  // -d^2 + 2 k^2 sn^2 - 1: edges k^2 - 1, 0, k^2
  const auto e = band_edges(make_case(CaseId::B, 1, 0.6));
  REQUIRE(e.size() >= 3);
  CHECK(e[0] == doctest::Approx(-0.64).epsilon(1e-4));
  CHECK(std::abs(e[1]) < 1e-4);
  CHECK(e[2] == doctest::Approx(0.36).epsilon(1e-4));
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] >= e[i - 1]);
}

TEST_CASE("FD heat trace of case A against erf") {
  const auto c = make_case(CaseId::A, 1);
  const auto tr = heat_trace_fd(c, {0.5, 2.0});
  CHECK(tr.gamma[0] == doctest::Approx(std::erf(std::sqrt(0.5))).epsilon(1e-3));
  CHECK(tr.gamma[1] == doctest::Approx(std::erf(std::sqrt(2.0))).epsilon(1e-3));
}

TEST_CASE("grid validation") {
  CHECK_THROWS(fd_spectrum([](double) { return 0.0; }, Grid1D::dirichlet(0, 1, 1)));
}
