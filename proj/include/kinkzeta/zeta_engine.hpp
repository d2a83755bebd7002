// Heat traces from the resolvents, Mellin-transform zeta functions and the
// one-loop corrections.

#ifndef KINKZETA_ZETA_ENGINE_HPP
#define KINKZETA_ZETA_ENGINE_HPP

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kinkzeta/classical.hpp"
#include "kinkzeta/resolvent.hpp"
#include "kinkzeta/spectral_oracle.hpp"

namespace kinkzeta {

/// Moments of sn over the half-period [0, K] and the cn moments derived
/// from them by cn^2 = 1 - sn^2.
struct PeriodMoments {
  double k = 0;
  double K = 0;
  double E = 0;
  double I0 = 0;   // int dx = K
  double I1 = 0;   // int sn^2 dx
  double I2 = 0;   // int sn^4 dx
  double cn2 = 0;  // int cn^2 dx
  double cn4 = 0;  // int cn^4 dx
};

PeriodMoments period_moments(double k);

/// Laplace transform of the trace,
///   gamma_hat(p) = N(p) / (2 sqrt(Q(p))) - w_vac / (2 sqrt(p + nu)),
/// with N collecting the x-integrals of P over the line (kinks, z-dependent
/// part only) or over one potential period.
struct LaplaceTrace {
  DiagonalResolvent res;
  std::vector<double> numerator;  // ascending powers of p
  double vacuum_weight = 0;
  double nu = 0;

  std::complex<double> operator()(std::complex<double> p) const;
  /// gamma_hat(base + delta) with each branch factor formed as
  /// (base - r) + delta, exact when base is itself a branch point.
  std::complex<double> near(double base, std::complex<double> delta) const;
  /// Weight of exp(r t) contributed by the pole at a double root r.
  double residue(double r) const;
};

LaplaceTrace laplace_trace(const FluctuationCase& c, bool regularize = true);

/// gamma_hat at a complex or real point off the spectrum image.
std::complex<double> gamma_hat(const FluctuationCase& c, std::complex<double> p);
double gamma_hat(const FluctuationCase& c, double p);

/// erf(b sqrt(t)).
double gamma_t_closed(double t, double b);

struct BromwichOptions {
  bool regularize = true;         // periodic: subtract the vacuum per cell
  bool drop_lowest_band = false;  // periodic: replace the lowest band by 1
  double tolerance = 1e-12;
};

struct BromwichResult {
  double value = 0;
  std::vector<std::pair<double, double>> residues;  // (root, weight)
  std::vector<std::pair<double, double>> cuts;      // integrated intervals
  double cut_integral = 0;
};

BromwichResult gamma_t_bromwich_detail(const LaplaceTrace& lt, double t, const BromwichOptions& opt = {});
double gamma_t_bromwich(const FluctuationCase& c, double t, const BromwichOptions& opt = {});

struct PowerTerm {
  double coeff = 0;
  double power = 0;
};

enum class TraceForm { ClosedErf, BromwichSampled, ConstantPotential };

struct HeatTrace {
  CaseId case_id = CaseId::A;
  int d = 1;
  TraceForm form = TraceForm::ClosedErf;
  std::function<double(double)> eval;
  /// Small-t expansion subtracted on (0, 1].
  std::vector<PowerTerm> small_t;
  /// Optional gamma - small_t on (0, 1] without cancellation.
  std::function<double(double)> remainder;
  /// Power of the first term not in small_t.
  double remainder_power = 1;
  /// Behaviour as t -> inf, subtracted on [1, inf).
  PowerTerm large_t;
  /// Exponential rate at which gamma approaches large_t.
  double decay_rate = 1;
  /// Optional (t, gamma) table, filled by sample().
  std::vector<std::pair<double, double>> samples;
  std::string subtraction;

  double operator()(double t) const { return eval(t); }
  void sample(const std::vector<double>& ts);
};

/// Kink trace erf(b sqrt(t)) of case A.
HeatTrace heat_trace_closed_sg_kink(double b);
/// exp(-nu t): one mode of a constant potential.
HeatTrace heat_trace_constant(double nu);
/// Bromwich trace of any case.  Periodic cases are per cell, vacuum
/// subtracted, with the lowest band replaced by a unit constant.
HeatTrace heat_trace_bromwich(const FluctuationCase& c);

/// gamma_d(t) = gamma_1(t) (4 pi t)^{-(d-1)/2}.
HeatTrace dimension_lift(const HeatTrace& g1, int d);

struct MellinOptions {
  double t_min = 1e-10;
  double t_max = 0;  // 0: chosen from the decay rate
  int panels_low = 24;
  int panels_high = 24;
  double h = 1e-4;  // step of the s-derivative
};

/// Samples gamma once on a Gauss-Legendre grid in ln t and evaluates the
/// analytically continued zeta(s) for any s from those samples.
class MellinZeta {
 public:
  MellinZeta(const HeatTrace& g, double M, const MellinOptions& opt = {});

  double operator()(double s) const;
  double at_zero() const;
  /// Central difference with one Richardson step.
  double derivative_at_zero() const;

 private:
  std::vector<double> u_, w_, low_rem_, high_rem_;
  std::vector<bool> low_;
  std::vector<PowerTerm> small_t_;
  PowerTerm large_t_;
  double remainder_power_;
  double M_;
  double h_;
};

double mellin_zeta(const HeatTrace& g, double s, double M, const MellinOptions& opt = {});

struct ZetaAtZero {
  double value;
  double derivative;
};

/// -4 (4 pi)^{-d/2} m^{d-1-2s} M^{2s} Gamma(s+1-d/2) / ((2s+1-d) Gamma(s)).
double zeta_closed_sg_kink(double s, int d, double m, double M);
ZetaAtZero zeta_closed_sg_kink_at_zero(int d, double m, double M);

/// (4 pi)^{(1-d)/2} Gamma(s+(1-d)/2)/Gamma(s) nu^{(d-1-2s)/2} M^{2s}.
double zeta_constant_background(double s, int d, double nu, double M);
ZetaAtZero zeta_constant_background_at_zero(int d, double nu, double M);

enum class CorrectionPath { ClosedForm, NumericMellin };
std::string to_string(CorrectionPath p);

struct CorrectionResult {
  CaseId case_id = CaseId::A;
  int d = 1;
  double m = 1;
  double M = 1;
  double zeta0 = 0;
  double zeta_prime0 = 0;
  double delta_eps = 0;  // -zeta_prime0 / 2
  CorrectionPath path = CorrectionPath::ClosedForm;
  bool includes_background = false;
};

struct CorrectionPair {
  CorrectionResult closed;
  CorrectionResult numeric;
};

/// SG-kink correction by differentiating the closed zeta at s = 0 and by
/// numeric Mellin transform of the lifted erf trace.
CorrectionPair delta_epsilon(int d, double m, double M, bool include_background = false,
                             const MellinOptions& opt = {});

struct PeriodicZetaResult {
  CaseId case_id;
  int d;
  double k;
  std::vector<double> s;
  std::vector<double> zeta;
  double zeta0 = 0;
  double zeta_prime0 = 0;
  /// zeta'(0) with doubled panels and widened t range.
  double zeta_prime0_refined = 0;
  double refinement_change = 0;  // relative
  std::string provenance;
};

PeriodicZetaResult periodic_zeta_numeric(const FluctuationCase& c, int d,
                                         const std::vector<double>& s_grid, double M = 1,
                                         const MellinOptions& opt = {});

}  // namespace kinkzeta

#endif  // KINKZETA_ZETA_ENGINE_HPP
