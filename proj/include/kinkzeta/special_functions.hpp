// Special-function kernel: complete elliptic integrals, Jacobi elliptic
// functions, error function, log-gamma and digamma.
//
// All functions are templated on the real scalar type and are pure; they can
// be called concurrently without synchronization.

#ifndef KINKZETA_SPECIAL_FUNCTIONS_HPP
#define KINKZETA_SPECIAL_FUNCTIONS_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace kinkzeta::special {

template <typename Real>
struct Jacobi {
  Real sn;
  Real cn;
  Real dn;
};

namespace detail {

template <typename Real>
void require_finite(Real x, const char* what) {
  if (!std::isfinite(x))
    throw std::domain_error(std::string(what) + ": argument must be finite");
}

template <typename Real>
void require_modulus(Real k, bool allow_one, const char* what) {
  require_finite(k, what);
  if (k < Real(0) || k > Real(1) || (!allow_one && k == Real(1)))
    throw std::domain_error(std::string(what) + ": modulus outside " +
                            (allow_one ? "[0, 1]" : "[0, 1)"));
}

// k' = sqrt(1 - k^2) without cancellation near k = 1.
template <typename Real>
Real complementary(Real k) {
  return std::sqrt((Real(1) - k) * (Real(1) + k));
}

}  // namespace detail

/// Complete elliptic integral of the first kind K(k), 0 <= k < 1, by the
/// arithmetic-geometric mean K = pi / (2 AGM(1, k')).
template <typename Real>
Real elliptic_K(Real k) {
  detail::require_modulus(k, false, "elliptic_K");
  Real a = 1;
  Real b = detail::complementary(k);
  const Real tol = std::numeric_limits<Real>::epsilon();
  while (std::abs(a - b) > tol * a) {
    const Real next = (a + b) / 2;
    b = std::sqrt(a * b);
    a = next;
  }
  return std::numbers::pi_v<Real> / (2 * a);
}

/// Complete elliptic integral of the second kind E(k), 0 <= k <= 1.
///
/// Uses the AGM sequence with E = K (1 - sum_n 2^(n-1) c_n^2), c_0 = k.
template <typename Real>
Real elliptic_E(Real k) {
  detail::require_modulus(k, true, "elliptic_E");
  if (k == Real(1)) return Real(1);
  Real a = 1;
  Real b = detail::complementary(k);
  Real c = k;
  Real weight = Real(0.5);
  Real sum = weight * c * c;
  const Real tol = std::numeric_limits<Real>::epsilon();
  while (std::abs(a - b) > tol * a) {
    c = (a - b) / 2;
    const Real next = (a + b) / 2;
    b = std::sqrt(a * b);
    a = next;
    weight *= 2;
    sum += weight * c * c;
  }
  const Real K = std::numbers::pi_v<Real> / (2 * a);
  return K * (Real(1) - sum);
}

/// Jacobi elliptic functions sn, cn, dn of real argument x and modulus k.
///
/// Descending Landen (Bulirsch) transformation for general k, a first-order
/// series in k^2 when k^2 < 1e-8, and the hyperbolic limit for k = 1.
template <typename Real>
Jacobi<Real> jacobi_sn_cn_dn(Real x, Real k) {
  detail::require_finite(x, "jacobi_sn_cn_dn");
  detail::require_modulus(k, true, "jacobi_sn_cn_dn");

  if (k == Real(1)) {
    const Real sech = Real(1) / std::cosh(x);
    return {std::tanh(x), sech, sech};
  }

  const Real k2 = k * k;
  if (k2 < Real(1e-8)) {
    const Real s = std::sin(x);
    const Real c = std::cos(x);
    const Real shift = (k2 / 4) * (x - s * c);
    return {s - shift * c, c + shift * s, Real(1) - (k2 / 2) * s * s};
  }

  constexpr int kMaxLevels = 16;
  const Real tol = std::sqrt(std::numeric_limits<Real>::epsilon()) / 10;
  std::array<Real, kMaxLevels> em{};
  std::array<Real, kMaxLevels> en{};
  Real mc = (Real(1) - k) * (Real(1) + k);
  Real a = 1;
  Real c = 1;
  int level = 0;
  for (; level < kMaxLevels; ++level) {
    em[level] = a;
    mc = std::sqrt(mc);
    en[level] = mc;
    c = (a + mc) / 2;
    if (std::abs(a - mc) <= tol * a) break;
    mc *= a;
    a = c;
  }
  if (level == kMaxLevels) --level;

  const Real u = x * c;
  Real sn = std::sin(u);
  Real cn = std::cos(u);
  Real dn = 1;
  if (sn != Real(0)) {
    a = cn / sn;
    c *= a;
    for (int l = level; l >= 0; --l) {
      const Real b = em[l];
      a *= c;
      c *= dn;
      dn = (en[l] + a) / (b + a);
      a = c / b;
    }
    a = Real(1) / std::sqrt(c * c + Real(1));
    sn = sn < Real(0) ? -a : a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

template <typename Real>
Real erf(Real x) {
  detail::require_finite(x, "erf");
  return std::erf(x);
}

/// ln Gamma(x) for x > 0.
template <typename Real>
Real log_gamma(Real x) {
  detail::require_finite(x, "log_gamma");
  if (x <= Real(0)) throw std::domain_error("log_gamma: argument must be positive");
  return boost::math::lgamma(x);
}

/// psi(x) = Gamma'(x)/Gamma(x); poles at the non-positive integers.
template <typename Real>
Real digamma(Real x) {
  detail::require_finite(x, "digamma");
  if (x <= Real(0) && x == std::floor(x))
    throw std::domain_error("digamma: pole at non-positive integer");
  return boost::math::digamma(x);
}

}  // namespace kinkzeta::special

#endif  // KINKZETA_SPECIAL_FUNCTIONS_HPP
