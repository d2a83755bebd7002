#include "kinkzeta/spectral_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

namespace kinkzeta {

using std::numbers::pi;

Grid1D Grid1D::dirichlet(double x_min, double x_max, int n) {
  return {x_min, x_max, n, Boundary::Dirichlet, 0};
}

Grid1D Grid1D::bloch(double x_min, double period, int n, double theta) {
  return {x_min, x_min + period, n, theta == 0 ? Boundary::Periodic : Boundary::Bloch, theta};
}

double Grid1D::h() const {
  return bc == Boundary::Dirichlet ? (x_max - x_min) / (n - 1) : (x_max - x_min) / n;
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> xs;
  const double step = h();
  if (bc == Boundary::Dirichlet) {
    for (int i = 1; i < n - 1; ++i) xs.push_back(x_min + i * step);
  } else {
    for (int i = 0; i < n; ++i) xs.push_back(x_min + i * step);
  }
  return xs;
}

SpectrumResult fd_spectrum(const Potential& u, const Grid1D& grid, const std::string& tag) {
  if (grid.n < 64) throw std::domain_error("fd_spectrum: need at least 64 nodes");
  const std::vector<double> xs = grid.nodes();
  const auto N = static_cast<Eigen::Index>(xs.size());
  const double h2 = grid.h() * grid.h();
  SpectrumResult out;
  out.grid = grid;
  out.potential_tag = tag;

  if (grid.bc == Boundary::Dirichlet) {
    Eigen::VectorXd diag(N), sub(N - 1);
    for (Eigen::Index i = 0; i < N; ++i) diag(i) = 2 / h2 + u(xs[i]);
    sub.setConstant(-1 / h2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("tridiagonal eigensolver failed");
    out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + N);
    return out;
  }

  const double c = std::cos(grid.theta), s = std::sin(grid.theta);
  if (std::abs(s) < 1e-15) {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
      H(i, i) = 2 / h2 + u(xs[i]);
      if (i + 1 < N) H(i, i + 1) = H(i + 1, i) = -1 / h2;
    }
    H(N - 1, 0) += -c / h2;
    H(0, N - 1) += -c / h2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("Bloch eigensolver failed");
    out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + N);
  } else {
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
      H(i, i) = 2 / h2 + u(xs[i]);
      if (i + 1 < N) H(i, i + 1) = H(i + 1, i) = -1 / h2;
    }
    const std::complex<double> phase(c, s);
    H(N - 1, 0) += -phase / h2;
    H(0, N - 1) += -std::conj(phase) / h2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("Bloch eigensolver failed");
    out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + N);
  }
  return out;
}

std::vector<double> free_spectrum(const Grid1D& grid, double nu) {
  const double h = grid.h();
  std::vector<double> ev;
  if (grid.bc == Boundary::Dirichlet) {
    const int N = grid.n - 2;
    for (int j = 1; j <= N; ++j) {
      const double s = std::sin(j * pi / (2.0 * (N + 1)));
      ev.push_back(4 / (h * h) * s * s + nu);
    }
  } else {
    for (int j = 0; j < grid.n; ++j) {
      const double s = std::sin((grid.theta + 2 * pi * j) / (2.0 * grid.n));
      ev.push_back(4 / (h * h) * s * s + nu);
    }
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> band_edges(const FluctuationCase& c, int n_per_cell) {
  if (!c.periodic()) throw std::domain_error("band_edges: periodic case required");
  const int gaps = c.id == CaseId::B ? 1 : 2;
  const double L = c.cell_length();
  auto u = [&](double x) { return c.u(x); };
  const auto e0 = fd_spectrum(u, Grid1D::bloch(0, L, n_per_cell, 0), "bloch0").eigenvalues;
  const auto epi = fd_spectrum(u, Grid1D::bloch(0, L, n_per_cell, pi), "blochpi").eigenvalues;
  std::vector<double> edges;
  for (int j = 0; j <= gaps; ++j) {
    edges.push_back(std::min(e0[j], epi[j]));
    if (j < gaps) edges.push_back(std::max(e0[j], epi[j]));
  }
  return edges;
}

namespace {

double paired_trace(const std::vector<double>& ev, const std::vector<double>& ev0, double t) {
  double sum = 0;
  for (std::size_t j = 0; j < ev.size(); ++j) sum += std::exp(-ev[j] * t) - std::exp(-ev0[j] * t);
  return sum;
}

std::vector<double> kink_trace(const FluctuationCase& c, const std::vector<double>& ts,
                               double half_width, double h) {
  const int n = static_cast<int>(std::lround(2 * half_width / h)) + 1;
  const Grid1D grid = Grid1D::dirichlet(-half_width, half_width, n);
  const auto ev = fd_spectrum([&](double x) { return c.u(x); }, grid).eigenvalues;
  const auto ev0 = free_spectrum(grid, c.vacuum_mass2());
  std::vector<double> out;
  for (double t : ts) out.push_back(paired_trace(ev, ev0, t));
  return out;
}

}  // namespace

FdTrace heat_trace_fd(const FluctuationCase& c, const std::vector<double>& ts,
                      const FdTraceOptions& opt) {
  for (double t : ts)
    if (!(t > 0)) throw std::domain_error("heat_trace_fd: t must be positive");
  FdTrace out;
  out.t = ts;

  if (!c.periodic()) {
    const double half = opt.box_half_width / c.b;
    const double h = 2 * half / (opt.n_box - 1);
    out.gamma = kink_trace(c, ts, half, h);
    if (opt.domain_doubling) {
      const auto wide = kink_trace(c, ts, 2 * half, h);
      double worst = 0;
      for (std::size_t i = 0; i < ts.size(); ++i) worst = std::max(worst, std::abs(wide[i] - out.gamma[i]));
      if (worst > opt.doubling_tolerance)
        out.warning = "box truncation: doubling the box changes the trace by " + std::to_string(worst);
    }
    return out;
  }

  const double L = c.cell_length();
  const double nu = c.vacuum_mass2();
  auto u = [&](double x) { return c.u(x); };
  out.gamma.assign(ts.size(), 0.0);
  const int half = opt.n_theta / 2;
  for (int i = 0; i <= half; ++i) {
    const double theta = 2 * pi * i / opt.n_theta;
    const double weight = (i == 0 || i == half) ? 1.0 : 2.0;
    const Grid1D grid = Grid1D::bloch(0, L, opt.n_cell, theta);
    const auto ev = fd_spectrum(u, grid).eigenvalues;
    const auto ev0 = free_spectrum(grid, nu);
    for (std::size_t k = 0; k < ts.size(); ++k)
      out.gamma[k] += weight * paired_trace(ev, ev0, ts[k]) / opt.n_theta;
  }
  return out;
}

double heat_trace_fd(const FluctuationCase& c, double t, const FdTraceOptions& opt) {
  return heat_trace_fd(c, std::vector<double>{t}, opt).gamma.front();
}

double wronskian_green(const Potential& u, double p, double x, const WronskianOptions& opt) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 1>;
  auto rhs = [&](const State& y, State& dy, double s) { dy[0] = u(s) + p - y[0] * y[0]; };
  auto start = [&](double s) { return std::sqrt(std::max(u(s) + p, 0.25)); };

  auto run = [&](double from, double to, double y0) {
    State y = {y0};
    auto stepper = odeint::make_controlled(opt.tolerance, opt.tolerance,
                                           odeint::runge_kutta_dopri5<State>());
    const double dt = to > from ? 1e-3 : -1e-3;
    odeint::integrate_adaptive(stepper, rhs, y, from, to, dt);
    if (!std::isfinite(y[0])) throw ConvergenceError("wronskian_green: Riccati integration overflowed");
    return y[0];
  };
  const double y_plus = run(x + opt.span, x, -start(x + opt.span));
  const double y_minus = run(x - opt.span, x, start(x - opt.span));
  const double w = y_minus - y_plus;
  if (!(w > 0)) throw ConvergenceError("wronskian_green: p is not in the resolvent set");
  return 1 / w;
}

}  // namespace kinkzeta
