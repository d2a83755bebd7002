#include "kinkzeta/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "kinkzeta/special_functions.hpp"

namespace kinkzeta {

using std::numbers::pi;

std::string to_string(Model m) { return m == Model::SG ? "sg" : "phi4"; }

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Kink: return "kink";
    case Kind::Antikink: return "antikink";
    case Kind::Periodic: return "periodic";
    case Kind::Vacuum: return "vacuum";
  }
  return "?";
}

std::string to_string(CaseId c) { return std::string(1, static_cast<char>('A' + static_cast<int>(c))); }

Model parse_model(const std::string& s) {
  if (s == "sg") return Model::SG;
  if (s == "phi4") return Model::Phi4;
  throw std::invalid_argument("unknown model '" + s + "'");
}

Kind parse_kind(const std::string& s) {
  if (s == "kink") return Kind::Kink;
  if (s == "antikink") return Kind::Antikink;
  if (s == "periodic") return Kind::Periodic;
  if (s == "vacuum") return Kind::Vacuum;
  throw std::invalid_argument("unknown kind '" + s + "'");
}

CaseId parse_case(const std::string& s) {
  if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'D') return static_cast<CaseId>(s[0] - 'A');
  throw std::invalid_argument("unknown case '" + s + "'");
}

Modulus::Modulus(double k) : k_(k) {
  if (!std::isfinite(k) || k < 0 || k > 1)
    throw std::domain_error("modulus must lie in [0, 1]");
}

ModelParams::ModelParams(Model model_, double m_, double g_) : model(model_), m(m_), g(g_) {
  if (!(m > 0) || !(g > 0) || !std::isfinite(m) || !std::isfinite(g))
    throw std::domain_error("m and g must be positive");
}

namespace {

double sg_beta(const ModelParams& p) { return std::sqrt(1.5 * p.g) / p.m; }

}  // namespace

double sg_amplitude(const ModelParams& p) { return 2.0 / sg_beta(p); }

SolutionFamily make_family(const ModelParams& params, Kind kind, double k) {
  SolutionFamily f;
  f.params = params;
  f.kind = kind;
  if (kind == Kind::Periodic) {
    if (!(k > 0) || k > 1) throw std::domain_error("periodic family needs 0 < k <= 1");
    f.k = Modulus(k);
  }
  if (params.model == Model::SG) f.Phi = 2 * pi / sg_beta(params);
  f.W = first_integral_W(f);
  return f;
}

double potential(const ModelParams& p, double phi) {
  if (p.model == Model::SG) {
    const double m4 = std::pow(p.m, 4);
    return 2 * m4 / (3 * p.g) * (1 + std::cos(sg_beta(p) * phi));
  }
  const double s = phi * phi - p.m * p.m / p.g;
  return p.g / 4 * s * s;
}

double potential_d1(const ModelParams& p, double phi) {
  if (p.model == Model::SG) {
    const double beta = sg_beta(p);
    return -2 * std::pow(p.m, 4) / (3 * p.g) * beta * std::sin(beta * phi);
  }
  return p.g * phi * phi * phi - p.m * p.m * phi;
}

double potential_d2(const ModelParams& p, double phi) {
  if (p.model == Model::SG) return -p.m * p.m * std::cos(sg_beta(p) * phi);
  return 3 * p.g * phi * phi - p.m * p.m;
}

double vacuum_field(const ModelParams& p) {
  if (p.model == Model::SG) return pi / sg_beta(p);
  return p.m / std::sqrt(p.g);
}

double first_integral_W(const SolutionFamily& f) {
  const auto& p = f.params;
  const double m4 = std::pow(p.m, 4);
  switch (f.kind) {
    case Kind::Kink:
    case Kind::Antikink:
    case Kind::Vacuum:
      return 0;
    case Kind::Periodic: {
      const double kappa = f.k.kappa();
      if (p.model == Model::SG) return 4 * (kappa - 1) * m4 / (3 * p.g);
      const double r = (1 - kappa) / (1 + kappa);
      return -r * r * m4 / (4 * p.g);
    }
  }
  return 0;
}

ProfilePoint profile_point(const SolutionFamily& f, double x) {
  const auto& p = f.params;
  const double sign = f.kind == Kind::Antikink ? -1.0 : 1.0;
  if (f.kind == Kind::Vacuum) return {vacuum_field(p), 0.0};

  if (p.model == Model::SG) {
    const double c = sg_amplitude(p);
    const double m = p.m;
    if (f.kind == Kind::Periodic) {
      const double k = f.k.value();
      const auto j = special::jacobi_sn_cn_dn(m * x, k);
      return {c * std::asin(k * j.sn), c * m * k * j.cn};
    }
    const double sech = 1 / std::cosh(m * x);
    return {sign * c * std::asin(std::tanh(m * x)), sign * c * m * sech};
  }

  const double amp = std::sqrt(2 / p.g);
  if (f.kind == Kind::Periodic) {
    const double k = f.k.value();
    const double b = p.m / std::sqrt(1 + k * k);
    const auto j = special::jacobi_sn_cn_dn(b * x, k);
    return {amp * k * b * j.sn, amp * k * b * b * j.cn * j.dn};
  }
  const double b = p.m / std::sqrt(2.0);
  const double sech = 1 / std::cosh(b * x);
  return {sign * amp * b * std::tanh(b * x), sign * amp * b * b * sech * sech};
}

double profile(const SolutionFamily& f, double x) { return profile_point(f, x).phi; }

namespace {

double second_derivative(const SolutionFamily& f, double x, double h) {
  const double fm2 = profile(f, x - 2 * h), fm1 = profile(f, x - h), f0 = profile(f, x),
               fp1 = profile(f, x + h), fp2 = profile(f, x + 2 * h);
  return (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
}

}  // namespace

double eom_residual(const SolutionFamily& f, double x, double h) {
  if (f.kind == Kind::Vacuum) return std::abs(potential_d1(f.params, vacuum_field(f.params)));
  return std::abs(second_derivative(f, x, h) - potential_d1(f.params, profile(f, x)));
}

std::vector<PrefactorCandidate> sg_prefactor_candidates(const ModelParams& p) {
  const double m = p.m, g = p.g;
  std::vector<PrefactorCandidate> out = {
      {"sqrt(2/(3g))", std::sqrt(2 / (3 * g)), 0},
      {"2m*sqrt(2/(3g))", 2 * m * std::sqrt(2 / (3 * g)), 0},
      {"2m*2/(3g)", 4 * m / (3 * g), 0},
  };
  const double h = 1e-3;
  for (auto& cand : out) {
    auto phi = [&](double x) { return cand.c * std::asin(std::tanh(m * x)); };
    double worst = 0;
    for (int i = 0; i <= 240; ++i) {
      const double x = (-6 + 0.05 * i) / m;
      const double d2 = (-phi(x - 2 * h) + 16 * phi(x - h) - 30 * phi(x) + 16 * phi(x + h) -
                         phi(x + 2 * h)) / (12 * h * h);
      worst = std::max(worst, std::abs(d2 - potential_d1(p, phi(x))));
    }
    cand.max_residual = worst;
  }
  return out;
}

double FluctuationCase::z(double x) const {
  if (z_map == ZMap::Sech2) {
    const double s = 1 / std::cosh(b * x);
    return s * s;
  }
  const double cn = special::jacobi_sn_cn_dn(b * x, k.value()).cn;
  return cn * cn;
}

double FluctuationCase::cell_length() const {
  if (z_map == ZMap::Sech2) return INFINITY;
  return 2 * special::elliptic_K(k.value()) / b;
}

double FluctuationCase::vacuum_mass2() const {
  switch (id) {
    case CaseId::A:
    case CaseId::B:
      return b * b;
    case CaseId::C:
      return 4 * b * b;
    case CaseId::D:
      return 2 * (1 + kappa()) * b * b;
  }
  return 0;
}

FluctuationCase make_case(CaseId id, double b, double k) {
  if (!(b > 0) || !std::isfinite(b)) throw std::domain_error("case scale b must be positive");
  FluctuationCase c;
  c.id = id;
  c.b = b;
  const RationalPoly z = RationalPoly::variable(kVarZ);
  const RationalPoly kap = RationalPoly::variable(kVarKappa);
  const RationalPoly one(1L);
  const double b2 = b * b;
  if (id == CaseId::B || id == CaseId::D) {
    if (!(k > 0) || k >= 1) throw std::domain_error("periodic case needs 0 < k < 1");
    c.k = Modulus(k);
    c.z_map = ZMap::Cn2;
    c.rho = z * (one - z) * (one - kap + kap * z);
  } else {
    c.z_map = ZMap::Sech2;
    c.rho = z * z * (one - z);
  }
  const double kappa = c.kappa();
  switch (id) {
    case CaseId::A:
      c.u0 = b2;
      c.u1 = -2 * b2;
      c.u_exact = one - RationalPoly(2L) * z;
      break;
    case CaseId::B:
      c.u0 = (2 * kappa - 1) * b2;
      c.u1 = -2 * kappa * b2;
      c.u_exact = RationalPoly(2L) * kap - one - RationalPoly(2L) * kap * z;
      break;
    case CaseId::C:
      c.u0 = 4 * b2;
      c.u1 = -6 * b2;
      c.u_exact = RationalPoly(4L) - RationalPoly(6L) * z;
      break;
    case CaseId::D:
      c.u0 = (5 * kappa - 1) * b2;
      c.u1 = -6 * kappa * b2;
      c.u_exact = RationalPoly(5L) * kap - one - RationalPoly(6L) * kap * z;
      break;
  }
  return c;
}

FluctuationCase fluctuation_case(const SolutionFamily& f) {
  const auto& p = f.params;
  if (f.kind == Kind::Vacuum) throw std::domain_error("vacuum has no fluctuation case");
  if (f.kind == Kind::Periodic) {
    const double k = f.k.value();
    if (p.model == Model::SG) return make_case(CaseId::B, p.m, k);
    return make_case(CaseId::D, p.m / std::sqrt(1 + k * k), k);
  }
  if (p.model == Model::SG) return make_case(CaseId::A, p.m);
  return make_case(CaseId::C, p.m / std::sqrt(2.0));
}

double fluctuation_potential(const FluctuationCase& c, double x) {
  if (!std::isfinite(x)) throw std::domain_error("fluctuation_potential: x must be finite");
  return c.u(x);
}

double energy_density(const SolutionFamily& f, double x) {
  const auto pt = profile_point(f, x);
  return 0.5 * pt.dphi * pt.dphi + potential(f.params, pt.phi);
}

namespace {

double closed_energy(const SolutionFamily& f) {
  const auto& p = f.params;
  const double m = p.m, g = p.g;
  if (f.kind == Kind::Vacuum) return 0;
  if (p.model == Model::SG) {
    if (f.kind != Kind::Periodic) return 16 * m * m * m / (3 * g);
    const double k = f.k.value(), kappa = f.k.kappa();
    const double E = special::elliptic_E(k);
    if (f.k.degenerate()) return 16 * m * m * m / (3 * g);
    const double K = special::elliptic_K(k);
    return 8 * m * m * m / (3 * g) * (2 * E - (1 - kappa) * K);
  }
  if (f.kind != Kind::Periodic) return 2 * std::sqrt(2.0) / 3 * m * m * m / g;
  const double k = f.k.value(), kappa = f.k.kappa();
  const double b = m / std::sqrt(1 + kappa);
  const double b3 = b * b * b;
  if (f.k.degenerate()) return 8 * b3 / (3 * g);
  const double K = special::elliptic_K(k), E = special::elliptic_E(k);
  return 4 * b3 / (3 * g) * ((1 + kappa) * E - (1 - kappa) * K) +
         (1 - kappa) * (1 - kappa) * b3 * K / (2 * g);
}

std::optional<double> paper_energy(const SolutionFamily& f) {
  const auto& p = f.params;
  if (p.model != Model::SG || f.kind == Kind::Vacuum) return std::nullopt;
  const double m2g = p.m * p.m / p.g;
  if (f.kind != Kind::Periodic) return 16 * m2g;
  const double k = f.k.value(), kappa = f.k.kappa();
  const double K = f.k.degenerate() ? 0.0 : special::elliptic_K(k);
  const double tail = f.k.degenerate() ? 0.0 : (1 - kappa) * K;
  return 8 * m2g * (tail + 2 * special::elliptic_E(k));
}

}  // namespace

EnergyResult classical_energy(const SolutionFamily& f) {
  if (f.kind == Kind::Vacuum) throw std::domain_error("classical_energy: vacuum family");
  using boost::math::quadrature::gauss_kronrod;
  auto density = [&](double x) { return energy_density(f, x); };
  const auto& p = f.params;
  double value = 0, error = 0;

  if (f.kind == Kind::Periodic) {
    const double k = f.k.value();
    const double b = p.model == Model::SG ? p.m : p.m / std::sqrt(1 + k * k);
    if (f.k.degenerate()) throw std::domain_error("classical_energy: k = 1 is the kink");
    const double half = special::elliptic_K(k) / b;
    // Split the half-period so the peak at x = 0 sits on a panel edge.
    const double cut = std::min(half, 4 / b);
    double e1 = 0, e2 = 0;
    const double v1 = gauss_kronrod<double, 61>::integrate(density, 0.0, cut, 20, 1e-12, &e1);
    const double v2 = cut < half ? gauss_kronrod<double, 61>::integrate(density, cut, half, 20, 1e-12, &e2) : 0.0;
    value = 2 * (v1 + v2);
    error = 2 * (e1 + e2);
  } else {
    const double b = p.model == Model::SG ? p.m : p.m / std::sqrt(2.0);
    const double L = 40 / b;
    double e1 = 0, e2 = 0;
    const double v1 = gauss_kronrod<double, 61>::integrate(density, -L, 0.0, 20, 1e-15, &e1);
    const double v2 = gauss_kronrod<double, 61>::integrate(density, 0.0, L, 20, 1e-15, &e2);
    value = v1 + v2;
    error = e1 + e2;
  }
  if (!std::isfinite(value) || error > 1e-10 * std::abs(value))
    throw QuadratureError("energy quadrature did not converge");
  return {value, error, closed_energy(f), paper_energy(f)};
}

}  // namespace kinkzeta
