// Closed-form diagonal Green functions G(p, x) = P(p, z) / (2 sqrt(Q(p)))
// for the four fluctuation cases.
//
// P and Q are found in exact arithmetic at b = 1 with kappa = k^2 left
// symbolic, by requiring the bilinear identity
//
//   rho (2 P P'' - P'^2) + rho' P P' - (p + u) P^2 + Q = 0,   ' = d/dz,
//
// to hold identically.  The physical scale is restored through
// G(p, x; b) = G(p / b^2, x; 1) / b.

#ifndef KINKZETA_RESOLVENT_HPP
#define KINKZETA_RESOLVENT_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "kinkzeta/classical.hpp"
#include "kinkzeta/exact_poly.hpp"

namespace kinkzeta {

class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact P(p, z, kappa) and Q(p, kappa) at b = 1.
struct SymbolicResolvent {
  CaseId case_id;
  int n;
  RationalPoly P;
  RationalPoly Q;
};

/// Generic staged solver: P monic of degree n in p, Q monic of degree 2n+1.
/// Throws InconsistentSystem if no such pair exists for this rho and u.
SymbolicResolvent solve_bilinear(const RationalPoly& rho, const RationalPoly& u, int n);

/// rho (2 P P'' - P'^2) + rho' P P' - (p + u) P^2 + Q.
RationalPoly bilinear_identity(const RationalPoly& rho, const RationalPoly& u,
                               const RationalPoly& P, const RationalPoly& Q);

/// Cached symbolic solution per case.
const SymbolicResolvent& symbolic_resolvent(CaseId id);

struct BranchData {
  std::vector<double> roots;        // distinct, ascending
  std::vector<int> multiplicities;  // parallel to roots

  double max_root() const { return roots.back(); }
  std::vector<double> simple_roots() const;
  std::vector<double> double_roots() const;
};

struct DiagonalResolvent {
  FluctuationCase fcase;
  CaseId case_id = CaseId::A;
  int n = 1;
  RationalPoly P;  // b = 1, symbolic kappa
  RationalPoly Q;
  double b = 1;
  /// pz[j][a]: coefficient of z^a in P_j at b = 1 and numeric kappa.
  std::vector<std::vector<double>> pz;
  /// Q at b = 1 and numeric kappa, ascending powers of p.
  std::vector<double> q;
  /// Roots of Q at physical scale b.
  BranchData branches;

  /// P(p, z) at physical scale.
  template <typename Scalar>
  Scalar numerator(Scalar p, double z) const;
  /// sqrt(Q(p)) at physical scale, each simple-root factor on its principal
  /// branch.  For real p below a root pass p + i0 as a complex number.
  std::complex<double> sqrt_Q(std::complex<double> p) const;
};

DiagonalResolvent solve_PQ(const FluctuationCase& c);

/// G(p, x).  Real p must lie above every root of Q (BranchError otherwise).
template <typename Scalar>
Scalar eval_diag_green(const DiagonalResolvent& res, Scalar p, double x);

/// |2 G G'' - G'^2 - 4 (u + p) G^2 + 1| with five-point derivatives in x.
double hermite_residual(const std::function<double(double)>& G,
                        const std::function<double(double)>& u, double p, double x,
                        double h = 4e-3);
double hermite_residual(const FluctuationCase& c, double p, double x);

/// Roots of Q with multiplicity at the case's numeric kappa and scale b.
BranchData q_roots(const DiagonalResolvent& res);

/// Rational value of k read from its shortest decimal representation.
BigRational exact_modulus(double k);

struct KinkSplit {
  std::function<double(double, double)> G_c;  // (p, x)
  std::function<double(double, double)> G_k;
};

/// G = G_c + G_k for case A.
KinkSplit split_constant_kink(const DiagonalResolvent& res);

template <typename Scalar>
Scalar DiagonalResolvent::numerator(Scalar p, double z) const {
  // sum_j b^{2j} P_j(z) p^{n-j}
  Scalar acc = 0;
  double scale = 1;
  const double b2 = b * b;
  for (int j = 0; j <= n; ++j) {
    double pj = 0;
    for (std::size_t a = pz[j].size(); a-- > 0;) pj = pj * z + pz[j][a];
    acc = acc * p + Scalar(scale * pj);
    scale *= b2;
  }
  return acc;
}

template <typename Scalar>
Scalar eval_diag_green(const DiagonalResolvent& res, Scalar p, double x) {
  const double z = res.fcase.z(x);
  if constexpr (std::is_floating_point_v<Scalar>) {
    if (!(p > res.branches.max_root()))
      throw BranchError("eval_diag_green: p must exceed the largest root of Q");
    return res.numerator(p, z) / (2 * res.sqrt_Q(std::complex<double>(p, 0)).real());
  } else {
    return res.numerator(p, z) / (2.0 * res.sqrt_Q(p));
  }
}

}  // namespace kinkzeta

#endif  // KINKZETA_RESOLVENT_HPP
