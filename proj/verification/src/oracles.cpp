#include "kinkzeta/verify/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace kinkzeta::oracle {

using std::numbers::pi;

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                    double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, tol / 2, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, tol / 2, depth - 1);
}

double trapezoid_quarter(const std::function<double(double)>& f) {
  // Even, pi-periodic integrands: the endpoint-weighted trapezoid rule on
  // [0, pi/2] is spectrally accurate.
  int n = 8;
  auto rule = [&](int n) {
    const double h = pi / 2 / n;
    double s = 0.5 * (f(0) + f(pi / 2));
    for (int i = 1; i < n; ++i) s += f(i * h);
    return s * h;
  };
  double prev = rule(n);
  for (int iter = 0; iter < 20; ++iter) {
    n *= 2;
    const double next = rule(n);
    if (std::abs(next - prev) <= 1e-15 * std::abs(next)) return next;
    prev = next;
  }
  return prev;
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton on P_n.
struct GaussRule {
  std::vector<double> x, w;
  explicit GaussRule(int n) {
    for (int i = 1; i <= n; ++i) {
      double z = std::cos(pi * (i - 0.25) / (n + 0.5)), dp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1, p1 = z;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2 * j - 1) * z * p1 - (j - 1) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x.push_back(z);
      w.push_back(2 / ((1 - z * z) * dp * dp));
    }
  }
};

double composite_gauss(const std::function<double(double)>& f, double a, double b, int panels) {
  static const GaussRule rule(24);
  const double width = (b - a) / panels;
  double sum = 0;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * width;
    for (std::size_t i = 0; i < rule.x.size(); ++i) sum += rule.w[i] * f(mid + 0.5 * width * rule.x[i]);
  }
  return sum * width / 2;
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  return simpson_step(f, a, fa, b, fb, m, fm, (b - a) / 6 * (fa + 4 * fm + fb), tol, 50);
}

double elliptic_K(double k) {
  if (!(k >= 0 && k < 1)) throw std::domain_error("oracle::elliptic_K: 0 <= k < 1");
  return trapezoid_quarter([k](double t) { return 1 / std::sqrt(1 - k * k * std::sin(t) * std::sin(t)); });
}

double elliptic_E(double k) {
  if (!(k >= 0 && k <= 1)) throw std::domain_error("oracle::elliptic_E: 0 <= k <= 1");
  return trapezoid_quarter([k](double t) { return std::sqrt(1 - k * k * std::sin(t) * std::sin(t)); });
}

namespace {

double incomplete_F(double phi, double k, double K) {
  const double j = std::round(phi / pi);
  const double r = phi - j * pi;
  auto f = [k](double t) { return 1 / std::sqrt(1 - k * k * std::sin(t) * std::sin(t)); };
  return 2 * j * K + composite_gauss(f, 0, r, 16);
}

}  // namespace

double elliptic_F(double phi, double k) { return incomplete_F(phi, k, elliptic_K(k)); }

SnCnDn jacobi(double x, double k) {
  const double K = elliptic_K(k);
  // F(phi + pi) = F(phi) + 2K: reduce to phi in [-pi/2, pi/2].
  const double j = std::round(x / (2 * K));
  const double xr = x - 2 * K * j;
  double lo = -pi / 2, hi = pi / 2;
  double phi = pi / 2 * xr / K;
  for (int i = 0; i < 200; ++i) {
    const double s = std::sin(phi);
    const double f = incomplete_F(phi, k, K) - xr;
    if (f > 0) hi = phi; else lo = phi;
    double next = phi - f * std::sqrt(1 - k * k * s * s);
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    const double step = next - phi;
    phi = next;
    if (std::abs(step) < 1e-15 * (1 + std::abs(phi)) || hi - lo < 1e-16) break;
  }
  const double sign = std::fmod(std::abs(j), 2.0) == 1 ? -1 : 1;
  const double s = std::sin(phi);
  return {sign * s, sign * std::cos(phi), std::sqrt(1 - k * k * s * s)};
}

double erf(double x) {
  if (std::abs(x) <= 2) {
    long double sum = 0, term = x;
    const long double x2 = static_cast<long double>(x) * x;
    for (int n = 0; n < 200; ++n) {
      const long double add = term / (2 * n + 1);
      sum += add;
      if (std::abs(add) < 1e-22L * std::abs(sum)) break;
      term *= -x2 / (n + 1);
    }
    return static_cast<double>(sum * 2 / std::sqrt(static_cast<long double>(pi)));
  }
  // erfc(z) = exp(-z^2)/sqrt(pi) * 1/(z + 1/2/(z + 1/(z + 3/2/(z + ...)))), modified Lentz.
  const long double z = std::abs(x);
  const long double tiny = 1e-300L;
  long double f = z, C = z, D = 0;
  for (int n = 1; n < 500; ++n) {
    const long double an = n / 2.0L;
    D = z + an * D;
    if (std::abs(D) < tiny) D = tiny;
    C = z + an / C;
    if (std::abs(C) < tiny) C = tiny;
    D = 1 / D;
    const long double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1) < 1e-20L) break;
  }
  const long double erfc = std::exp(-z * z) / std::sqrt(static_cast<long double>(pi)) / f;
  const double value = static_cast<double>(1 - erfc);
  return x < 0 ? -value : value;
}

double digamma(double x) {
  if (!(x > 0)) throw std::domain_error("oracle::digamma: x > 0");
  long double acc = 0, y = x;
  while (y < 12) {
    acc -= 1 / y;
    y += 1;
  }
  // Bernoulli numbers B_2 .. B_16.
  static const long double B[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30,
                                  5.0L / 66, -691.0L / 2730, 7.0L / 6, -3617.0L / 510};
  long double series = std::log(y) - 1 / (2 * y);
  long double yp = y * y;
  for (int n = 1; n <= 8; ++n) {
    series -= B[n - 1] / (2 * n * yp);
    yp *= y * y;
  }
  return static_cast<double>(acc + series);
}

}  // namespace kinkzeta::oracle
