#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kinkzeta/special_functions.hpp"
#include "kinkzeta/verify/oracles.hpp"

namespace sp = kinkzeta::special;
namespace oc = kinkzeta::oracle;

TEST_CASE("complete integrals against the trapezoid oracle") {
  for (double k : {0.0, 0.1, 0.5, 0.6, 0.9, 0.99, 0.999}) {
    CHECK(sp::elliptic_K(k) == doctest::Approx(oc::elliptic_K(k)).epsilon(1e-13));
    CHECK(sp::elliptic_E(k) == doctest::Approx(oc::elliptic_E(k)).epsilon(1e-13));
  }
  CHECK(sp::elliptic_K(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(sp::elliptic_E(1.0) == 1.0);
}

TEST_CASE("Legendre relation") {
  for (double k : {0.05, 0.3, 0.6, 0.8, 0.95}) {
    const double kp = std::sqrt(1 - k * k);
    const double K = sp::elliptic_K(k), Kp = sp::elliptic_K(kp);
    const double E = sp::elliptic_E(k), Ep = sp::elliptic_E(kp);
    CHECK(E * Kp + Ep * K - K * Kp == doctest::Approx(std::numbers::pi / 2).epsilon(1e-13));
  }
}

TEST_CASE("sn^2 + cn^2 = 1 and dn^2 + k^2 sn^2 = 1") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-30, 30), uk(0, 1);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = ux(rng), k = uk(rng);
    const auto j = sp::jacobi_sn_cn_dn(x, k);
    worst = std::max(worst, std::abs(j.sn * j.sn + j.cn * j.cn - 1));
    worst = std::max(worst, std::abs(j.dn * j.dn + k * k * j.sn * j.sn - 1));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("sn has period 4K, cn(K) = 0") {
  for (double k : {0.2, 0.6, 0.9, 0.99}) {
    const double K = sp::elliptic_K(k);
    CHECK(std::abs(sp::jacobi_sn_cn_dn(K, k).cn) < 1e-12);
    CHECK(sp::jacobi_sn_cn_dn(K, k).sn == doctest::Approx(1).epsilon(1e-13));
    for (double x : {0.1, 0.7, 1.9}) {
      CHECK(sp::jacobi_sn_cn_dn(x + 4 * K, k).sn == doctest::Approx(sp::jacobi_sn_cn_dn(x, k).sn).epsilon(1e-11));
    }
  }
}

TEST_CASE("Jacobi functions against the Newton amplitude oracle") {
  for (double k : {0.0, 1e-5, 0.3, 0.6, 0.95, 0.999999}) {
    for (double x = -5; x <= 5; x += 0.37) {
      const auto a = sp::jacobi_sn_cn_dn(x, k);
      const auto b = oc::jacobi(x, k);
      CHECK(std::abs(a.sn - b.sn) < 1e-12);
      CHECK(std::abs(a.cn - b.cn) < 1e-12);
      CHECK(std::abs(a.dn - b.dn) < 1e-12);
    }
  }
}

TEST_CASE("hyperbolic limit at k = 1") {
  const auto j = sp::jacobi_sn_cn_dn(0.8, 1.0);
  CHECK(j.sn == doctest::Approx(std::tanh(0.8)));
  CHECK(j.cn == doctest::Approx(1 / std::cosh(0.8)));
}

TEST_CASE("erf and digamma") {
  for (double x = -6; x <= 6; x += 0.25) CHECK(std::abs(sp::erf(x) - oc::erf(x)) < 2e-16 * 4);
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.0, 40.0}) {
    CHECK(sp::digamma(x) == doctest::Approx(oc::digamma(x)).epsilon(1e-13));
    CHECK(sp::digamma(x + 1) == doctest::Approx(sp::digamma(x) + 1 / x).epsilon(1e-13));
  }
  CHECK(sp::digamma(1.0) == doctest::Approx(-0.5772156649015329).epsilon(1e-15));
  CHECK(sp::log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
}

TEST_CASE("long double instantiation") {
  const long double K = sp::elliptic_K(0.5L);
  CHECK(std::abs(double(K) - sp::elliptic_K(0.5)) < 1e-15);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(sp::elliptic_K(1.0), std::domain_error);
  CHECK_THROWS_AS(sp::elliptic_E(1.5), std::domain_error);
  CHECK_THROWS_AS(sp::jacobi_sn_cn_dn(std::nan(""), 0.5), std::domain_error);
}
