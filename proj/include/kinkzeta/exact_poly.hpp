// Exact rational polynomial algebra.
//
// A RationalPoly is a sparse map from exponent vectors to rationals.  The
// first three variable slots are reserved for z, p and kappa = k^2; further
// slots hold unknowns introduced by the resolvent solver.

#ifndef KINKZETA_EXACT_POLY_HPP
#define KINKZETA_EXACT_POLY_HPP

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kinkzeta {

using BigRational = mpq_class;

inline constexpr int kVarZ = 0;
inline constexpr int kVarP = 1;
inline constexpr int kVarKappa = 2;

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnderdeterminedSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RationalPoly {
 public:
  // Exponents with trailing zeros trimmed, so equal monomials compare equal
  // regardless of how many variables were in play.
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, BigRational>;

  RationalPoly() = default;
  RationalPoly(long c);  // NOLINT(google-explicit-constructor)
  RationalPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)

  static RationalPoly variable(int var, int power = 1);
  static RationalPoly monomial(const BigRational& c, Exponents e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  /// Highest exponent of `var`; -1 for the zero polynomial.
  int degree(int var) const;
  /// Total degree in the variables with index >= first_var.
  int total_degree_from(int first_var) const;
  /// Largest variable slot used, plus one.
  int num_vars() const;

  /// Coefficient of var^deg, as a polynomial in the remaining variables.
  RationalPoly coefficient(int var, int deg) const;
  RationalPoly derivative(int var) const;
  RationalPoly substitute(int var, const RationalPoly& value) const;
  RationalPoly substitute(int var, const BigRational& value) const;
  /// Divide by var^power; throws std::domain_error if not exact.
  RationalPoly divide_by_variable(int var, int power = 1) const;

  /// Evaluate with values[i] assigned to variable i; missing slots read 0.
  BigRational evaluate(const std::vector<BigRational>& values) const;
  double evaluate_double(const std::vector<double>& values) const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly operator-() const;

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Canonical text: descending p, then z, then kappa, then unknowns.
  std::string to_string() const;

 private:
  void add_term(Exponents e, const BigRational& c);
  static void trim(Exponents& e);

  Terms terms_;
};

RationalPoly pow(const RationalPoly& a, int n);

/// d/dz, acting on the z exponent only.
RationalPoly poly_diff_z(const RationalPoly& a);

/// Coefficient of p^deg_p as a polynomial in (z, kappa, ...).
RationalPoly extract_coeff(const RationalPoly& a, int deg_p);

std::string to_string(const BigRational& q);

// Affine relation sum_i coeffs[i] * x_i + constant = 0.
struct AffineRelation {
  std::map<int, BigRational> coeffs;
  BigRational constant = 0;
};

/// Outcome of reducing a linear system: every unknown whose value is fixed
/// by the system, whether or not the rest of it is determined.
struct LinearReduction {
  std::map<int, BigRational> determined;
  std::vector<int> free_unknowns;
};

/// Exact Gauss-Jordan elimination.  Throws InconsistentSystem when the
/// relations contradict each other.
LinearReduction reduce_linear(const std::vector<AffineRelation>& relations);

/// Solves a system that must determine every unknown appearing in it.
/// Throws InconsistentSystem or UnderdeterminedSystem.
std::map<int, BigRational> solve_exact_linear(const std::vector<AffineRelation>& relations);

/// Reads `poly` as an affine function of the variables with index >=
/// first_unknown.  Returns nullopt if it is not affine in them or if any
/// coefficient still depends on lower variables.
std::optional<AffineRelation> as_affine(const RationalPoly& poly, int first_unknown);

// Dense univariate polynomial, coefficient i multiplies x^i.
using UniPoly = std::vector<BigRational>;

UniPoly to_univariate(const RationalPoly& poly, int var);
void normalize(UniPoly& a);
UniPoly uni_derivative(const UniPoly& a);
UniPoly uni_gcd(UniPoly a, UniPoly b);
/// Quotient of exact division; throws std::domain_error on a remainder.
UniPoly uni_divide_exact(const UniPoly& a, const UniPoly& b);

/// Yun square-free decomposition: a = c * prod_i factors[i]^(i+1) with each
/// factor square-free and monic.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& a);

/// Rational roots of a square-free polynomial, ascending.  Candidates are
/// read off floating-point root estimates against the divisors of the
/// leading coefficient, then confirmed exactly; if that coefficient exceeds
/// `max_lead_bits` the search is skipped and the result is empty.
std::vector<BigRational> rational_roots(const UniPoly& a, int max_lead_bits = 62);

/// All complex roots by Durand-Kerner iteration in double precision.
std::vector<std::complex<double>> approximate_roots(const UniPoly& a);

}  // namespace kinkzeta

#endif  // KINKZETA_EXACT_POLY_HPP
