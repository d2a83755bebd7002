// Finite-difference spectra of L = -d^2/dx^2 + u(x): Dirichlet boxes, Bloch
// cells, regularized heat traces and Wronskian Green functions.

#ifndef KINKZETA_SPECTRAL_ORACLE_HPP
#define KINKZETA_SPECTRAL_ORACLE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinkzeta/classical.hpp"

namespace kinkzeta {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Boundary { Dirichlet, Periodic, Bloch };

struct Grid1D {
  double x_min = 0;
  double x_max = 1;
  int n = 64;
  Boundary bc = Boundary::Dirichlet;
  double theta = 0;  // Bloch phase per cell

  static Grid1D dirichlet(double x_min, double x_max, int n);
  /// One cell [x_min, x_min + period) sampled at n nodes.
  static Grid1D bloch(double x_min, double period, int n, double theta);

  double h() const;
  /// Nodes carrying unknowns: the interior for Dirichlet, all n otherwise.
  std::vector<double> nodes() const;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  Grid1D grid;
  std::string potential_tag;
};

using Potential = std::function<double(double)>;

/// Eigenvalues of the three-point discretization of -d^2/dx^2 + u.
SpectrumResult fd_spectrum(const Potential& u, const Grid1D& grid, const std::string& tag = "");

/// Eigenvalues of the free operator -d^2/dx^2 + nu on the same grid,
/// in closed form.
std::vector<double> free_spectrum(const Grid1D& grid, double nu);

/// The 2n+1 Bloch band edges of a periodic case, ascending.
std::vector<double> band_edges(const FluctuationCase& c, int n_per_cell = 512);

struct FdTraceOptions {
  double box_half_width = 20;  // in units of 1/b
  int n_box = 4000;
  int n_cell = 256;
  int n_theta = 64;
  bool domain_doubling = true;  // kinks only
  double doubling_tolerance = 1e-6;
};

struct FdTrace {
  std::vector<double> t;
  std::vector<double> gamma;
  std::optional<std::string> warning;
};

/// sum_j exp(-lambda_j t) - exp(-lambda0_j t) on a shared grid, with
/// lambda0 the free operator shifted by the vacuum mass squared.  Kinks
/// use a Dirichlet box; periodic cases are per cell and averaged over
/// Bloch phases.
FdTrace heat_trace_fd(const FluctuationCase& c, const std::vector<double>& ts,
                      const FdTraceOptions& opt = {});
double heat_trace_fd(const FluctuationCase& c, double t, const FdTraceOptions& opt = {});

struct WronskianOptions {
  double span = 60;  // integration length on each side of x
  double tolerance = 1e-13;
};

/// Diagonal of (L + p)^{-1} from the log-derivatives y = psi'/psi of the
/// solutions decaying at -inf and +inf: G = 1 / (y_minus - y_plus).
double wronskian_green(const Potential& u, double p, double x, const WronskianOptions& opt = {});

}  // namespace kinkzeta

#endif  // KINKZETA_SPECTRAL_ORACLE_HPP
