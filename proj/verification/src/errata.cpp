#include "kinkzeta/verify/errata.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "kinkzeta/classical.hpp"
#include "kinkzeta/resolvent.hpp"
#include "kinkzeta/special_functions.hpp"
#include "kinkzeta/spectral_oracle.hpp"
#include "kinkzeta/verify/oracles.hpp"
#include "kinkzeta/zeta_engine.hpp"

namespace kinkzeta::verify {

using std::numbers::pi;

namespace {

ErratumEntry entry(std::string tag, std::string printed, std::string implemented, std::string oracle,
                   double printed_error, double implemented_error, double tol) {
  ErratumEntry e{std::move(tag), std::move(printed), std::move(implemented), std::move(oracle),
                 printed_error, implemented_error, false};
  e.passed = implemented_error <= tol && printed_error > 10 * tol;
  return e;
}

// Largest distance from any of `edges` to the nearest of `roots`.
double worst_match(const std::vector<double>& edges, const std::vector<double>& roots) {
  double worst = 0;
  for (double e : edges) {
    double best = INFINITY;
    for (double r : roots) best = std::min(best, std::abs(e - r));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<double> real_roots(const UniPoly& q) {
  std::vector<double> out;
  for (const auto& z : approximate_roots(q))
    if (std::abs(z.imag()) < 1e-9) out.push_back(z.real());
  return out;
}

// Spectral parameters p = -lambda at the FD Bloch band edges.
std::vector<double> fd_edges_p(const FluctuationCase& c) {
  std::vector<double> out;
  for (double e : band_edges(c)) out.push_back(-e);
  return out;
}

UniPoly uni(std::initializer_list<double> ascending) {
  UniPoly q;
  for (double c : ascending) q.emplace_back(c);
  return q;
}

ErratumEntry hermite_sign() {
  const double nu = 0.7, p = 1.3;
  const auto G = [&](double) { return 1 / (2 * std::sqrt(p + nu)); };
  const auto u = [&](double) { return nu; };
  const double implemented = hermite_residual(G, u, p, 0.2);
  const double g = G(0);
  const double printed = std::abs(-4 * (nu - p) * g * g + 1);
  return entry("(Hermit)", "2GG'' - G'^2 - 4(u - p)G^2 + 1 = 0", "2GG'' - G'^2 - 4(u + p)G^2 + 1 = 0",
               "constant potential u = 0.7 with G = 1/(2 sqrt(p + u)) at p = 1.3", printed, implemented,
               1e-8);
}

ErratumEntry qrez() {
  const auto c = make_case(CaseId::B, 1.0, 0.6);
  const double kappa = 0.36;
  const auto edges = fd_edges_p(c);
  // p (p^2 + (1 - k^2)) (p - k^2) = p^4 - k^2 p^3 + (1 - k^2) p^2 - k^2 (1 - k^2) p
  const auto printed_q = uni({0, -kappa * (1 - kappa), 1 - kappa, -kappa, 1});
  const auto res = solve_PQ(c);
  return entry("(Qrez)", "Q = p(p^2 + (1-k^2)b^2)(p - k^2 b^2), degree 4",
               "Q = p(p - (1-k^2)b^2)(p + k^2 b^2), degree 3",
               "FD Bloch band edges of case B at k = 0.6 against the real roots of Q",
               worst_match(edges, real_roots(printed_q)), worst_match(edges, res.branches.roots), 1e-3);
}

ErratumEntry q_coefficients() {
  const auto c = make_case(CaseId::D, 1.0, 0.6);
  const double k2 = 0.36, k4 = k2 * k2, k6 = k4 * k2;
  const auto printed_q = uni({0, -27 * k2 * (1 - k2), -9 * (1 - 3 * k2 - 3 * k4 - k6),
                              3 * (1 + k2 + k4), 5 * (1 + k2), 1});
  const auto res = solve_PQ(c);
  const auto edges = fd_edges_p(c);
  return entry("(q)",
               "q3 = 3(1+k^2+k^4)b^4, q2 = -9(1-3k^2-3k^4-k^6)b^6, q1 = -27k^2(1-k^2)b^8",
               "q3 = 3(1+9k^2+k^4)b^4, q2 = -9(1-3k^2-3k^4+k^6)b^6, q1 = -27k^2(1-k^2)^2 b^8",
               "FD Bloch band edges of case D at k = 0.6; k -> 1 must give q3 = 33 b^4",
               worst_match(edges, real_roots(printed_q)), worst_match(edges, res.branches.roots), 1e-3);
}

ErratumEntry last_root() {
  const double k2 = 0.36;
  const auto c = make_case(CaseId::D, 1.0, 0.6);
  const auto edges = fd_edges_p(c);
  const double top = *std::max_element(edges.begin(), edges.end());
  const double s = std::sqrt(1 - k2 + k2 * k2);
  const double printed = -(2 * s - 1 - k2);
  const double implemented = solve_PQ(c).branches.max_root();
  return entry("(p_i)", "largest root -(2 sqrt(1-k^2+k^4) - 1 - k^2) b^2",
               "largest root +(2 sqrt(1-k^2+k^4) - 1 - k^2) b^2",
               "top FD band edge of case D at k = 0.6", std::abs(printed - top),
               std::abs(implemented - top), 1e-3);
}

ErratumEntry inty() {
  const double k = 0.6;
  const double K = special::elliptic_K(k);
  const double length = oracle::adaptive_simpson([](double) { return 1.0; }, 0, K, 1e-14);
  const auto pm = period_moments(k);
  const auto sn2 = [k](double x) {
    const double s = special::jacobi_sn_cn_dn(x, k).sn;
    return s * s;
  };
  const double i1 = oracle::adaptive_simpson(sn2, 0, K, 1e-13);
  const double i2 = oracle::adaptive_simpson([&](double x) { return sn2(x) * sn2(x); }, 0, K, 1e-13);
  const double implemented =
      std::max({std::abs(pm.I0 - length), std::abs(pm.I1 - i1), std::abs(pm.I2 - i2)});
  return entry("(inty)", "int_0^K dx = 2K(k)", "int_0^K dx = K(k); the sn^2 and sn^4 moments as printed",
               "quadrature of 1, sn^2 and sn^4 over [0, K] at k = 0.6", std::abs(2 * K - length),
               implemented, 1e-9);
}

ErratumEntry gamkp() {
  const double b = 1.5, p = 0.8;
  const auto res = solve_PQ(make_case(CaseId::A, b));
  const auto split = split_constant_kink(res);
  const double integral =
      oracle::adaptive_simpson([&](double x) { return split.G_k(p, x); }, -40 / b, 40 / b, 1e-13);
  const double printed = b / (p * std::sqrt(p + 1.0));  // k of the kink is 1
  const double implemented = b / (p * std::sqrt(p + b * b));
  return entry("(gamkp)", "gamma_k(p) = b/(p sqrt(p + k^2))", "gamma_k(p) = b/(p sqrt(p + b^2))",
               "quadrature of G_k(p, x) over the line at b = 1.5, p = 0.8",
               std::abs(printed - integral) / integral, std::abs(implemented - integral) / integral,
               1e-9);
}

ErratumEntry zeta_lf() {
  const int d = 3;
  const double m = 1.3, s = 0.3;
  const double numeric = mellin_zeta(dimension_lift(heat_trace_closed_sg_kink(m), d), s, 1.0);
  const double implemented = zeta_closed_sg_kink(s, d, m, 1.0);
  const double printed = implemented * std::pow(4 * pi, d);
  return entry("(zetaLf)", "-4 (4 pi)^{d/2} m^{d-1-2s} Gamma(s+1-d/2)/((2s+1-d)Gamma(s))",
               "-4 (4 pi)^{-d/2} m^{d-1-2s} Gamma(s+1-d/2)/((2s+1-d)Gamma(s))",
               "numeric Mellin transform of erf(m sqrt t)(4 pi t)^{-1} at d = 3, s = 0.3, m = 1.3",
               std::abs(printed - numeric) / std::abs(numeric),
               std::abs(implemented - numeric) / std::abs(numeric), 1e-7);
}

ErratumEntry sg_prefactor() {
  const ModelParams params(Model::SG, 1.3, 0.7);
  double printed = INFINITY, implemented = INFINITY;
  for (const auto& cand : sg_prefactor_candidates(params)) {
    if (cand.label == "2m*sqrt(2/(3g))") {
      implemented = cand.max_residual;
    } else {
      printed = std::min(printed, cand.max_residual);
    }
  }
  return entry("(kink)/(varphi)", "amplitude sqrt(2/(3g)) in (kink), 2m 2/(3g) in (varphi)",
               "amplitude 2m sqrt(2/(3g)) = 2/beta",
               "equation-of-motion residual of c arcsin(tanh(mx)) on [-6/m, 6/m], m = 1.3, g = 0.7",
               printed, implemented, 1e-6);
}

ErratumEntry w_zero() {
  const double m = 1.3, g = 0.7;
  const ModelParams params(Model::SG, m, g);
  const double v0 = potential(params, 0.0);
  const double printed = -3 * std::pow(m, 4) / (3 * g);
  const double implemented = -4 * std::pow(m, 4) / (3 * g);
  // phi = 0 is static, so (phi')^2 = 2V + 2W must vanish there.
  return entry("(0)", "phi = 0 with W = -3m^4/(3g)", "phi = 0 with W = -4m^4/(3g)",
               "first integral (phi')^2 = 2V(0) + 2W = 0 for the constant solution, m = 1.3, g = 0.7",
               std::abs(2 * v0 + 2 * printed), std::abs(2 * v0 + 2 * implemented), 1e-12);
}

ErratumEntry wphi4cond() {
  const double m = 1.7, g = 0.6;
  const auto fam = make_family(ModelParams(Model::Phi4, m, g), Kind::Periodic, 1e-6);
  const double w = first_integral_W(fam);
  return entry("(Wphi4cond)", "-m^2/(4g) <= W <= 0", "-m^4/(4g) <= W <= 0",
               "W of the periodic family as k -> 0 (small oscillations about phi = 0), m = 1.7, g = 0.6",
               std::abs(w + m * m / (4 * g)), std::abs(w + std::pow(m, 4) / (4 * g)), 1e-9);
}

ErratumEntry rho_pairing() {
  const double k = 0.6, kappa = k * k, b = 1.0;
  double printed = 0, implemented = 0;
  for (double x = 0.05; x < 3.0; x += 0.173) {
    const auto j = special::jacobi_sn_cn_dn(b * x, k);
    const double z = j.cn * j.cn;
    const double dz = -2 * b * j.cn * j.sn * j.dn;
    printed = std::max(printed, std::abs(dz * dz - 4 * b * b * z * z * (1 - z)));
    implemented = std::max(implemented, std::abs(dz * dz - 4 * b * b * z * (1 - z) * (1 - kappa + kappa * z)));
  }
  return entry("rho table", "rho = z^2(1-z) for A,B and z(1-z)(1-k^2+k^2 z) for C,D",
               "rho = z^2(1-z) for z = sech^2 (A,C) and z(1-z)(1-k^2+k^2 z) for z = cn^2 (B,D)",
               "(z')^2 = 4 b^2 rho(z) for z = cn^2(bx; 0.6)", printed, implemented, 1e-12);
}

ErratumEntry cnphi4_table() {
  const double m = 1.2, g = 0.9, k = 0.6;
  const auto fam = make_family(ModelParams(Model::Phi4, m, g), Kind::Periodic, k);
  const auto c = fluctuation_case(fam);
  const double b = c.b, kappa = k * k;
  double printed = 0, implemented = 0;
  for (double x = -2; x < 2; x += 0.21) {
    const double v2 = potential_d2(fam.params, profile(fam, x));
    const double z = c.z(x);
    printed = std::max(printed, std::abs(v2 - b * b * (5 * kappa - 6 * kappa * z)));
    implemented = std::max(implemented, std::abs(v2 - ((5 * kappa - 1) * b * b - 6 * kappa * b * b * z)));
  }
  return entry("u table, case D", "u = b^2(5k^2 - 6k^2 z)", "u = (5k^2 - 1)b^2 - 6k^2 b^2 z as in (cnphi4)",
               "V''(phi(x)) on the phi^4 periodic profile, m = 1.2, g = 0.9, k = 0.6", printed,
               implemented, 1e-9);
}

ErratumEntry sjac() {
  const double m = 1.3, k = 0.6;
  double printed = 0, implemented = 0;
  for (double x = -2; x < 2; x += 0.19) {
    const auto j = special::jacobi_sn_cn_dn(m * x, k);
    const double z = k * j.sn;
    const double dz = k * m * j.cn * j.dn;
    printed = std::max(printed, std::abs(dz * dz - m * m * (1 - z * z) * k * k));
    implemented = std::max(implemented, std::abs(dz * dz - m * m * (1 - z * z) * (k * k - z * z)));
  }
  return entry("(sJac)", "(z')^2 = m^2 (1 - z^2)(1 + 3gW/(4m^4))", "(z')^2 = m^2 (1 - z^2)(k^2 - z^2)",
               "z = k sn(mx; k) substituted directly, m = 1.3, k = 0.6", printed, implemented, 1e-12);
}

ErratumEntry ekink() {
  const auto fam = make_family(ModelParams(Model::SG, 1.3, 0.7), Kind::Kink);
  const auto e = classical_energy(fam);
  return entry("(Ekink)", "E_k = 16 m^2/g", "E_k = 16 m^3/(3g)",
               "quadrature of (phi')^2/2 + V over the line, m = 1.3, g = 0.7",
               std::abs(e.paper_closed_form.value() - e.quadrature) / e.quadrature,
               std::abs(e.closed_form - e.quadrature) / e.quadrature, 1e-8);
}

ErratumEntry eper() {
  const auto fam = make_family(ModelParams(Model::SG, 1.3, 0.7), Kind::Periodic, 0.6);
  const auto e = classical_energy(fam);
  return entry("(Eper)", "E_p = (8m^2/g)[(1-k^2)K + 2E]", "E_p = (8m^3/(3g))[2E - (1-k^2)K] per potential period",
               "quadrature of (phi')^2/2 + V over one potential period, m = 1.3, g = 0.7, k = 0.6",
               std::abs(e.paper_closed_form.value() - e.quadrature) / e.quadrature,
               std::abs(e.closed_form - e.quadrature) / e.quadrature, 1e-8);
}

ErratumEntry case_labels() {
  const double m = 1.3, g = 0.7;
  const auto fam = make_family(ModelParams(Model::SG, m, g), Kind::Kink);
  const auto a = make_case(CaseId::A, m);
  const auto c = make_case(CaseId::C, m);
  double printed = 0, implemented = 0;
  for (double x = -3; x < 3; x += 0.23) {
    const double v2 = potential_d2(fam.params, profile(fam, x));
    implemented = std::max(implemented, std::abs(v2 - a.u(x)));
    printed = std::max(printed, std::abs(v2 - c.u(x)));
  }
  return entry("section 4 labels", "cases A,B for phi^4 and C,D for SG",
               "A,B are SG (kink, periodic); C,D are phi^4, as in the rho and u tables",
               "V''(phi) on the SG kink against u_A and u_C with b = m", printed, implemented, 1e-9);
}

ErratumEntry c_label() {
  const auto& sc = symbolic_resolvent(CaseId::C);
  const double q5 = sc.Q.coefficient(kVarP, 5).evaluate_double({});
  const double q4 = sc.Q.coefficient(kVarP, 4).evaluate_double({});
  return entry("case C list", "q_5 = 10 b^2", "q_4 = 10 b^2 (Q is monic, q_5 = 1)",
               "exact solution of the bilinear identity for case C", std::abs(q5 - 10),
               std::abs(q4 - 10), 1e-15);
}

ErratumEntry hatgamma() {
  const auto c = make_case(CaseId::D, 1.0, 0.6);
  const auto res = solve_PQ(c);
  const double p = 1.0;
  const double integral = oracle::adaptive_simpson(
      [&](double x) { return eval_diag_green(res, p, x); }, 0, c.cell_length(), 1e-13);
  const double implemented = laplace_trace(c, false)(std::complex<double>(p, 0)).real();
  const double printed = implemented * 2 / 3;
  return entry("(hatgammap)", "gamma_hat = int P/(3 sqrt Q) dx", "gamma_hat = int P/(2 sqrt Q) dx",
               "quadrature of G(1, x) over one period of case D, k = 0.6",
               std::abs(printed - integral) / integral, std::abs(implemented - integral) / integral,
               1e-8);
}

}  // namespace

std::vector<ErratumEntry> errata_ledger() {
  return {hermite_sign(), qrez(),   q_coefficients(), last_root(),   inty(),        gamkp(),
          zeta_lf(),      sg_prefactor(), w_zero(),   wphi4cond(),   rho_pairing(), cnphi4_table(),
          sjac(),         ekink(),  eper(),           case_labels(), c_label(),     hatgamma()};
}

}  // namespace kinkzeta::verify
