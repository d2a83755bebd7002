// Reference implementations that share no code with the library: plain
// quadratures and series, written for accuracy rather than speed.

#ifndef KINKZETA_VERIFY_ORACLES_HPP
#define KINKZETA_VERIFY_ORACLES_HPP

#include <functional>

namespace kinkzeta::oracle {

/// Adaptive Simpson with Richardson correction.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

/// K(k) and E(k) by the trapezoid rule on [0, pi/2], exponentially
/// convergent for these periodic integrands.
double elliptic_K(double k);
double elliptic_E(double k);

/// Incomplete integral F(phi, k).
double elliptic_F(double phi, double k);

struct SnCnDn {
  double sn, cn, dn;
};

/// Jacobi functions through the amplitude: F(am(x), k) = x solved by Newton.
SnCnDn jacobi(double x, double k);

/// Maclaurin series for |x| <= 2, continued fraction for erfc beyond.
double erf(double x);

/// Recurrence up to x >= 12 followed by the asymptotic series.
double digamma(double x);

}  // namespace kinkzeta::oracle

#endif  // KINKZETA_VERIFY_ORACLES_HPP
