// Static solutions of the sine-Gordon and phi^4 models, their first
// integrals, fluctuation potentials and energies.

#ifndef KINKZETA_CLASSICAL_HPP
#define KINKZETA_CLASSICAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinkzeta/exact_poly.hpp"

namespace kinkzeta {

enum class Model { SG, Phi4 };
enum class Kind { Kink, Antikink, Periodic, Vacuum };
enum class CaseId { A, B, C, D };
enum class ZMap { Sech2, Cn2 };

std::string to_string(Model m);
std::string to_string(Kind k);
std::string to_string(CaseId c);
Model parse_model(const std::string& s);
Kind parse_kind(const std::string& s);
CaseId parse_case(const std::string& s);

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Elliptic modulus; 0 <= k <= 1, with k = 1 the separatrix.
class Modulus {
 public:
  Modulus() = default;
  explicit Modulus(double k);
  double value() const { return k_; }
  double kappa() const { return k_ * k_; }
  bool degenerate() const { return k_ == 1.0; }

 private:
  double k_ = 0;
};

struct ModelParams {
  Model model = Model::SG;
  double m = 1;
  double g = 1;

  ModelParams() = default;
  ModelParams(Model model, double m, double g);
};

struct SolutionFamily {
  ModelParams params;
  Kind kind = Kind::Kink;
  Modulus k;      // periodic only
  double W = 0;   // first-integral constant
  double Phi = 0; // SG period of the potential in phi; zero for phi^4
};

SolutionFamily make_family(const ModelParams& params, Kind kind, double k = 0);

/// V(phi).  SG: (2m^4/3g)(1 + cos(beta phi)), beta = sqrt(3g/2)/m.
/// phi^4: (g/4)(phi^2 - m^2/g)^2.  Both vanish on the vacua.
double potential(const ModelParams& p, double phi);
double potential_d1(const ModelParams& p, double phi);
double potential_d2(const ModelParams& p, double phi);
double vacuum_field(const ModelParams& p);

/// W with (phi')^2 = 2V(phi) + 2W.
double first_integral_W(const SolutionFamily& f);

struct ProfilePoint {
  double phi;
  double dphi;
};

ProfilePoint profile_point(const SolutionFamily& f, double x);
double profile(const SolutionFamily& f, double x);

/// |phi'' - V'(phi)| with phi'' from a five-point stencil of step h.
double eom_residual(const SolutionFamily& f, double x, double h = 1e-3);

/// Amplitude constant c in phi = c arcsin(tanh(mx)) for the SG kink.
double sg_amplitude(const ModelParams& p);

struct PrefactorCandidate {
  std::string label;
  double c;
  double max_residual;
};

/// Candidate SG amplitude constants, each scored by the equation-of-motion
/// residual of c arcsin(tanh(mx)) on x in [-6/m, 6/m].
std::vector<PrefactorCandidate> sg_prefactor_candidates(const ModelParams& p);

struct FluctuationCase {
  CaseId id = CaseId::A;
  double b = 1;
  Modulus k;
  double u0 = 0;
  double u1 = 0;
  ZMap z_map = ZMap::Sech2;
  /// rho(z) at b = 1, exact in (z, kappa).
  RationalPoly rho;
  /// u(z) at b = 1, exact in (z, kappa).
  RationalPoly u_exact;

  double kappa() const { return k.kappa(); }
  double z(double x) const;
  double u(double x) const { return u0 + u1 * z(x); }
  bool periodic() const { return z_map == ZMap::Cn2; }
  /// Length of one potential period, 2K(k)/b; infinite for kinks.
  double cell_length() const;
  /// Mass squared of the vacuum comparison operator.
  double vacuum_mass2() const;
};

/// Fluctuation case from its scale b directly.
FluctuationCase make_case(CaseId id, double b, double k = 0);

/// Fluctuation case of a kink or periodic family, with b derived from m.
FluctuationCase fluctuation_case(const SolutionFamily& f);

double fluctuation_potential(const FluctuationCase& c, double x);

struct EnergyResult {
  double quadrature;
  double quadrature_error;
  /// Closed form consistent with the potential and first integral.
  double closed_form;
  /// Closed form as printed in the literature, where one exists.
  std::optional<double> paper_closed_form;
};

/// Energy of a kink over the line, or of a periodic solution over one
/// period of its potential (twice the half-period integral).  The density
/// is (phi')^2/2 + V(phi), which vanishes on the vacua.
EnergyResult classical_energy(const SolutionFamily& f);

/// Energy density (phi')^2/2 + V(phi) at x.
double energy_density(const SolutionFamily& f, double x);

}  // namespace kinkzeta

#endif  // KINKZETA_CLASSICAL_HPP
