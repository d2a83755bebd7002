#include "kinkzeta/resolvent.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

namespace kinkzeta {

namespace {

const RationalPoly kP = RationalPoly::variable(kVarP);

RationalPoly bilinear_D(const RationalPoly& rho, const RationalPoly& P) {
  const RationalPoly P1 = poly_diff_z(P);
  const RationalPoly P2 = poly_diff_z(P1);
  return rho * (RationalPoly(2L) * P * P2 - P1 * P1) + poly_diff_z(rho) * P * P1;
}

RationalPoly full_form(const RationalPoly& rho, const RationalPoly& u, const RationalPoly& P) {
  return (kP + u) * P * P - bilinear_D(rho, P);
}

// Groups the z^{>=1} coefficients of `full` by (z, p, kappa) monomial; each
// group is a polynomial in the unknowns alone and must vanish.
std::vector<RationalPoly> z_equations(const RationalPoly& full) {
  std::map<std::array<int, 3>, RationalPoly> groups;
  for (const auto& [e, c] : full.terms()) {
    auto at = [&](std::size_t i) { return i < e.size() ? e[i] : 0; };
    if (at(kVarZ) == 0) continue;
    RationalPoly::Exponents rest = e;
    for (std::size_t i = 0; i < 3 && i < rest.size(); ++i) rest[i] = 0;
    groups[{at(kVarZ), at(kVarP), at(kVarKappa)}] += RationalPoly::monomial(c, rest);
  }
  std::vector<RationalPoly> out;
  for (auto& [k, v] : groups)
    if (!v.is_zero()) out.push_back(std::move(v));
  return out;
}

}  // namespace

RationalPoly bilinear_identity(const RationalPoly& rho, const RationalPoly& u,
                               const RationalPoly& P, const RationalPoly& Q) {
  return bilinear_D(rho, P) - (kP + u) * P * P + Q;
}

SymbolicResolvent solve_bilinear(const RationalPoly& rho, const RationalPoly& u, int n) {
  if (n < 1) throw std::domain_error("solve_bilinear: n must be positive");
  constexpr int kFirstUnknown = 3;
  int next_unknown = kFirstUnknown;
  const RationalPoly kappa = RationalPoly::variable(kVarKappa);

  RationalPoly P = RationalPoly::variable(kVarP, n);
  for (int j = 1; j <= n; ++j) {
    const RationalPoly T = full_form(rho, u, P).coefficient(kVarP, 2 * n + 1 - j);
    const RationalPoly T0 = T.substitute(kVarZ, BigRational(0));
    RationalPoly beta;
    for (int e = 0; e <= 2 * j; ++e)
      beta += RationalPoly::variable(next_unknown++) * pow(kappa, e);
    const RationalPoly Pj = (T0 - T) * RationalPoly(BigRational(1, 2)) + beta;
    P += Pj * RationalPoly::variable(kVarP, n - j);
  }

  RationalPoly full = full_form(rho, u, P);
  std::vector<RationalPoly> eqs = z_equations(full);
  std::map<int, BigRational> solved;

  for (;;) {
    std::vector<AffineRelation> affine;
    for (const auto& e : eqs)
      if (auto rel = as_affine(e, kFirstUnknown)) affine.push_back(std::move(*rel));
    if (affine.empty()) break;
    const LinearReduction red = reduce_linear(affine);
    if (red.determined.empty()) break;
    for (const auto& [var, value] : red.determined) {
      solved[var] = value;
      for (auto& e : eqs) e = e.substitute(var, value);
      P = P.substitute(var, value);
      full = full.substitute(var, value);
    }
    std::erase_if(eqs, [](const RationalPoly& e) { return e.is_zero(); });
  }

  for (const auto& e : eqs)
    if (e.is_constant() && !e.is_zero())
      throw InconsistentSystem("bilinear identity has no solution with the assumed degrees");
  if (P.num_vars() > kFirstUnknown || !eqs.empty()) {
    if (!eqs.empty() && P.num_vars() <= kFirstUnknown)
      throw InconsistentSystem("bilinear identity has no solution with the assumed degrees");
    throw UnderdeterminedSystem("bilinear identity leaves free constants in P");
  }
  if (full.degree(kVarZ) > 0)
    throw InconsistentSystem("Q retains z dependence");
  if (full.degree(kVarP) != 2 * n + 1 || full.coefficient(kVarP, 2 * n + 1) != RationalPoly(1L))
    throw InconsistentSystem("Q is not monic of degree 2n+1");
  return {CaseId::A, n, P, full};
}

const SymbolicResolvent& symbolic_resolvent(CaseId id) {
  static std::array<std::once_flag, 4> once;
  static std::array<SymbolicResolvent, 4> cache;
  const auto i = static_cast<std::size_t>(id);
  std::call_once(once[i], [&] {
    const FluctuationCase c = make_case(id, 1.0, 0.5);
    const int n = (id == CaseId::A || id == CaseId::B) ? 1 : 2;
    cache[i] = solve_bilinear(c.rho, c.u_exact, n);
    cache[i].case_id = id;
  });
  return cache[i];
}

std::vector<double> BranchData::simple_roots() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (multiplicities[i] % 2 == 1) out.push_back(roots[i]);
  return out;
}

std::vector<double> BranchData::double_roots() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (multiplicities[i] >= 2) out.push_back(roots[i]);
  return out;
}

std::complex<double> DiagonalResolvent::sqrt_Q(std::complex<double> p) const {
  std::complex<double> acc = 1;
  for (std::size_t i = 0; i < branches.roots.size(); ++i) {
    const std::complex<double> f = p - branches.roots[i];
    const int mult = branches.multiplicities[i];
    for (int e = 0; e < mult / 2; ++e) acc *= f;
    if (mult % 2 == 1) acc *= std::sqrt(f);
  }
  return acc;
}

BigRational exact_modulus(double k) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), k);
  std::string s(buf.data(), res.ptr);
  // Expand an exponent form into a plain fraction.
  int exp10 = 0;
  if (const auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    exp10 = std::stoi(s.substr(epos + 1));
    s = s.substr(0, epos);
  }
  std::string digits;
  int frac = 0;
  bool after_point = false;
  for (char ch : s) {
    if (ch == '.') {
      after_point = true;
      continue;
    }
    digits += ch;
    if (after_point) ++frac;
  }
  mpz_class num(digits, 10);
  mpz_class den = 1;
  const int shift = frac - exp10;
  mpz_class ten = 10;
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::abs(shift)));
  if (shift >= 0) {
    den = scale;
  } else {
    num *= scale;
  }
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

double newton_polish(const std::vector<double>& c, double x) {
  for (int it = 0; it < 4; ++it) {
    double v = 0, d = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      d = d * x + v;
      v = v * x + c[i];
    }
    if (d == 0) break;
    const double step = v / d;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

// Real roots of a monic square-free polynomial with no rational roots left.
std::vector<double> real_roots_numeric(const UniPoly& f) {
  const int deg = static_cast<int>(f.size()) - 1;
  std::vector<double> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = BigRational(f[i] / f.back()).get_d();
  std::vector<double> out;
  if (deg == 1) {
    out.push_back(BigRational(-f[0] / f[1]).get_d());
  } else if (deg == 2) {
    const double B = c[1], C = c[0];
    const double disc = B * B - 4 * C;
    if (disc >= 0) {
      const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
      if (q != 0) out.push_back(q);
      if (q != 0) out.push_back(C / q);
      else out.push_back(0.0);
    }
  } else if (deg == 3) {
    const double a = c[2], b = c[1], cc = c[0];
    const double Qv = (a * a - 3 * b) / 9;
    const double Rv = (2 * a * a * a - 9 * a * b + 27 * cc) / 54;
    if (Rv * Rv < Qv * Qv * Qv) {
      const double th = std::acos(Rv / std::sqrt(Qv * Qv * Qv));
      const double s = -2 * std::sqrt(Qv);
      for (int i = 0; i < 3; ++i)
        out.push_back(s * std::cos((th + 2 * std::numbers::pi * (i - 1)) / 3) - a / 3);
    } else {
      const double A = -std::copysign(std::cbrt(std::abs(Rv) + std::sqrt(Rv * Rv - Qv * Qv * Qv)), Rv);
      const double Bv = A == 0 ? 0 : Qv / A;
      out.push_back(A + Bv - a / 3);
    }
  } else {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (int i = 0; i < deg; ++i) {
      const auto ev = es.eigenvalues()[i];
      if (std::abs(ev.imag()) <= 1e-9 * (1 + std::abs(ev.real()))) out.push_back(ev.real());
    }
  }
  for (auto& x : out) x = newton_polish(c, x);
  return out;
}

}  // namespace

BranchData q_roots(const DiagonalResolvent& res) {
  const BigRational k = exact_modulus(res.fcase.k.value());
  const BigRational kappa = k * k;
  const UniPoly q = to_univariate(res.Q.substitute(kVarKappa, kappa), kVarP);

  std::vector<std::pair<double, int>> found;
  const auto factors = squarefree_decomposition(q);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int mult = static_cast<int>(i) + 1;
    UniPoly f = factors[i];
    if (f.size() <= 1) continue;
    for (const auto& r : rational_roots(f)) {
      found.emplace_back(r.get_d(), mult);
      f = uni_divide_exact(f, UniPoly{-r, 1});
    }
    if (f.size() > 1)
      for (double r : real_roots_numeric(f)) found.emplace_back(r, mult);
  }
  std::sort(found.begin(), found.end());
  BranchData out;
  const double b2 = res.b * res.b;
  for (const auto& [r, m] : found) {
    out.roots.push_back(r * b2);
    out.multiplicities.push_back(m);
  }
  return out;
}

DiagonalResolvent solve_PQ(const FluctuationCase& c) {
  const SymbolicResolvent& sym = symbolic_resolvent(c.id);
  DiagonalResolvent res;
  res.fcase = c;
  res.case_id = c.id;
  res.n = sym.n;
  res.P = sym.P;
  res.Q = sym.Q;
  res.b = c.b;
  const double kappa = c.kappa();
  const std::vector<double> point = {0.0, 0.0, kappa};
  res.pz.assign(sym.n + 1, {});
  for (int j = 0; j <= sym.n; ++j) {
    const RationalPoly Pj = sym.P.coefficient(kVarP, sym.n - j);
    const int dz = std::max(Pj.degree(kVarZ), 0);
    for (int a = 0; a <= dz; ++a)
      res.pz[j].push_back(Pj.coefficient(kVarZ, a).evaluate_double(point));
  }
  for (int i = 0; i <= 2 * sym.n + 1; ++i)
    res.q.push_back(sym.Q.coefficient(kVarP, i).evaluate_double(point));
  res.branches = q_roots(res);
  return res;
}

double hermite_residual(const std::function<double(double)>& G,
                        const std::function<double(double)>& u, double p, double x, double h) {
  const double gm2 = G(x - 2 * h), gm1 = G(x - h), g0 = G(x), gp1 = G(x + h), gp2 = G(x + 2 * h);
  const double d1 = (gm2 - 8 * gm1 + 8 * gp1 - gp2) / (12 * h);
  const double d2 = (-gm2 + 16 * gm1 - 30 * g0 + 16 * gp1 - gp2) / (12 * h * h);
  return std::abs(2 * g0 * d2 - d1 * d1 - 4 * (u(x) + p) * g0 * g0 + 1);
}

double hermite_residual(const FluctuationCase& c, double p, double x) {
  const DiagonalResolvent res = solve_PQ(c);
  return hermite_residual([&](double y) { return eval_diag_green(res, p, y); },
                          [&](double y) { return c.u(y); }, p, x);
}

KinkSplit split_constant_kink(const DiagonalResolvent& res) {
  if (res.case_id != CaseId::A) throw std::domain_error("split_constant_kink: case A only");
  const double b = res.b;
  const FluctuationCase c = res.fcase;
  KinkSplit s;
  s.G_c = [b](double p, double) { return 1 / (2 * std::sqrt(p + b * b)); };
  s.G_k = [b, c](double p, double x) { return b * b * c.z(x) / (2 * p * std::sqrt(p + b * b)); };
  return s;
}

}  // namespace kinkzeta
