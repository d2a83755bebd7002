#include "kinkzeta/exact_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace kinkzeta {

RationalPoly::RationalPoly(long c) {
  if (c != 0) terms_[{}] = c;
}

RationalPoly::RationalPoly(const BigRational& c) { add_term({}, c); }

void RationalPoly::trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

void RationalPoly::add_term(Exponents e, const BigRational& c) {
  BigRational q = c;
  q.canonicalize();
  if (q == 0) return;
  trim(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(q));
    return;
  }
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

RationalPoly RationalPoly::variable(int var, int power) {
  Exponents e(var + 1, 0);
  e[var] = power;
  return monomial(1, std::move(e));
}

RationalPoly RationalPoly::monomial(const BigRational& c, Exponents e) {
  for (int x : e)
    if (x < 0) throw std::domain_error("RationalPoly: negative exponent");
  RationalPoly r;
  r.add_term(std::move(e), c);
  return r;
}

bool RationalPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int RationalPoly::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, var < static_cast<int>(e.size()) ? e[var] : 0);
  return d;
}

int RationalPoly::total_degree_from(int first_var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (std::size_t i = first_var; i < e.size(); ++i) t += e[i];
    d = std::max(d, t);
  }
  return d;
}

int RationalPoly::num_vars() const {
  int n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
  return n;
}

RationalPoly RationalPoly::coefficient(int var, int deg) const {
  RationalPoly r;
  for (const auto& [e, c] : terms_) {
    const int have = var < static_cast<int>(e.size()) ? e[var] : 0;
    if (have != deg) continue;
    Exponents f = e;
    if (var < static_cast<int>(f.size())) f[var] = 0;
    r.add_term(std::move(f), c);
  }
  return r;
}

RationalPoly RationalPoly::derivative(int var) const {
  RationalPoly r;
  for (const auto& [e, c] : terms_) {
    if (var >= static_cast<int>(e.size()) || e[var] == 0) continue;
    Exponents f = e;
    const int n = f[var]--;
    r.add_term(std::move(f), c * n);
  }
  return r;
}

RationalPoly RationalPoly::substitute(int var, const RationalPoly& value) const {
  RationalPoly r;
  std::map<int, RationalPoly> powers;
  for (const auto& [e, c] : terms_) {
    const int n = var < static_cast<int>(e.size()) ? e[var] : 0;
    Exponents f = e;
    if (n > 0) f[var] = 0;
    RationalPoly term = monomial(c, std::move(f));
    if (n > 0) {
      auto it = powers.find(n);
      if (it == powers.end()) it = powers.emplace(n, pow(value, n)).first;
      term *= it->second;
    }
    r += term;
  }
  return r;
}

RationalPoly RationalPoly::substitute(int var, const BigRational& value) const {
  RationalPoly r;
  for (const auto& [e, c] : terms_) {
    const int n = var < static_cast<int>(e.size()) ? e[var] : 0;
    Exponents f = e;
    BigRational factor = 1;
    if (n > 0) {
      f[var] = 0;
      mpz_pow_ui(factor.get_num_mpz_t(), value.get_num_mpz_t(), n);
      mpz_pow_ui(factor.get_den_mpz_t(), value.get_den_mpz_t(), n);
      factor.canonicalize();
    }
    r.add_term(std::move(f), c * factor);
  }
  return r;
}

RationalPoly RationalPoly::divide_by_variable(int var, int power) const {
  RationalPoly r;
  for (const auto& [e, c] : terms_) {
    const int n = var < static_cast<int>(e.size()) ? e[var] : 0;
    if (n < power) throw std::domain_error("divide_by_variable: not divisible");
    Exponents f = e;
    f[var] -= power;
    r.add_term(std::move(f), c);
  }
  return r;
}

BigRational RationalPoly::evaluate(const std::vector<BigRational>& values) const {
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) {
    BigRational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= values.size()) {
        t = 0;
        break;
      }
      for (int j = 0; j < e[i]; ++j) t *= values[i];
    }
    sum += t;
  }
  return sum;
}

double RationalPoly::evaluate_double(const std::vector<double>& values) const {
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      t *= i < values.size() ? std::pow(values[i], e[i]) : 0.0;
    }
    sum += t;
  }
  return sum;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  *this = *this * o;
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      RationalPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

RationalPoly pow(const RationalPoly& a, int n) {
  if (n < 0) throw std::domain_error("pow: negative exponent");
  RationalPoly r(1L);
  RationalPoly base = a;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

RationalPoly poly_diff_z(const RationalPoly& a) { return a.derivative(kVarZ); }

RationalPoly extract_coeff(const RationalPoly& a, int deg_p) {
  if (deg_p < 0) throw std::domain_error("extract_coeff: negative degree");
  return a.coefficient(kVarP, deg_p);
}

std::string to_string(const BigRational& q) { return q.get_str(); }

namespace {

std::string var_name(std::size_t i) {
  switch (i) {
    case kVarZ: return "z";
    case kVarP: return "p";
    case kVarKappa: return "kappa";
    default: return "c" + std::to_string(i - 3);
  }
}

int exp_at(const RationalPoly::Exponents& e, std::size_t i) {
  return i < e.size() ? e[i] : 0;
}

}  // namespace

std::string RationalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  const int nv = num_vars();
  // Sort key: p, z, kappa, then the unknowns, all descending.
  std::vector<std::size_t> key_vars = {kVarP, kVarZ, kVarKappa};
  for (int i = 3; i < nv; ++i) key_vars.push_back(i);
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    for (std::size_t v : key_vars) {
      const int x = exp_at(a->first, v), y = exp_at(b->first, v);
      if (x != y) return x > y;
    }
    return false;
  });

  std::ostringstream out;
  bool first = true;
  for (auto* t : order) {
    BigRational c = t->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v : key_vars) {
      const int n = exp_at(t->first, v);
      if (n == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (n > 1) mono += "^" + std::to_string(n);
    }
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << "*" << mono;
    }
  }
  return out.str();
}

LinearReduction reduce_linear(const std::vector<AffineRelation>& relations) {
  std::set<int> unknown_set;
  for (const auto& r : relations)
    for (const auto& [i, c] : r.coeffs)
      if (c != 0) unknown_set.insert(i);
  const std::vector<int> unknowns(unknown_set.begin(), unknown_set.end());
  std::map<int, std::size_t> column;
  for (std::size_t j = 0; j < unknowns.size(); ++j) column[unknowns[j]] = j;
  const std::size_t ncol = unknowns.size();

  // Augmented rows [A | -b].
  std::vector<std::vector<BigRational>> rows;
  rows.reserve(relations.size());
  for (const auto& r : relations) {
    std::vector<BigRational> row(ncol + 1, 0);
    for (const auto& [i, c] : r.coeffs)
      if (c != 0) row[column[i]] = c;
    row[ncol] = -r.constant;
    rows.push_back(std::move(row));
  }

  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncol && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const BigRational inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const BigRational f = rows[r][col];
      for (std::size_t c = col; c <= ncol; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][ncol] != 0)
      throw InconsistentSystem("linear system is inconsistent");

  LinearReduction out;
  std::vector<bool> is_pivot(ncol, false);
  for (std::size_t r = 0; r < rank; ++r) {
    const auto col = static_cast<std::size_t>(pivot_col_of_row[r]);
    is_pivot[col] = true;
    bool fixed = true;
    for (std::size_t c = 0; c < ncol; ++c)
      if (c != col && rows[r][c] != 0) fixed = false;
    if (fixed) out.determined[unknowns[col]] = rows[r][ncol];
  }
  for (std::size_t c = 0; c < ncol; ++c)
    if (!out.determined.count(unknowns[c])) out.free_unknowns.push_back(unknowns[c]);
  return out;
}

std::map<int, BigRational> solve_exact_linear(const std::vector<AffineRelation>& relations) {
  LinearReduction red = reduce_linear(relations);
  if (!red.free_unknowns.empty())
    throw UnderdeterminedSystem("linear system leaves " +
                                std::to_string(red.free_unknowns.size()) +
                                " unknown(s) free");
  return red.determined;
}

std::optional<AffineRelation> as_affine(const RationalPoly& poly, int first_unknown) {
  AffineRelation rel;
  for (const auto& [e, c] : poly.terms()) {
    int degree = 0;
    int which = -1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (static_cast<int>(i) < first_unknown) return std::nullopt;
      degree += e[i];
      which = static_cast<int>(i);
    }
    if (degree == 0) {
      rel.constant += c;
    } else if (degree == 1) {
      rel.coeffs[which] += c;
    } else {
      return std::nullopt;
    }
  }
  return rel;
}

UniPoly to_univariate(const RationalPoly& poly, int var) {
  UniPoly out;
  for (const auto& [e, c] : poly.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != var && e[i] != 0)
        throw std::domain_error("to_univariate: polynomial has other variables");
    const int n = exp_at(e, var);
    if (static_cast<int>(out.size()) <= n) out.resize(n + 1, 0);
    out[n] += c;
  }
  normalize(out);
  return out;
}

void normalize(UniPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UniPoly uni_derivative(const UniPoly& a) {
  UniPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
  normalize(d);
  return d;
}

namespace {

// Polynomial long division; returns quotient, leaves remainder in `a`.
UniPoly divide(UniPoly& a, const UniPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  normalize(a);
  if (a.size() < b.size()) return {};
  UniPoly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const BigRational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    normalize(a);
  }
  return q;
}

UniPoly monic(UniPoly a) {
  normalize(a);
  if (a.empty()) return a;
  const BigRational lead = a.back();
  for (auto& x : a) x /= lead;
  return a;
}

}  // namespace

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    divide(a, b);
    std::swap(a, b);
  }
  return monic(a);
}

UniPoly uni_divide_exact(const UniPoly& a, const UniPoly& b) {
  UniPoly rem = a;
  UniPoly q = divide(rem, b);
  if (!rem.empty()) throw std::domain_error("uni_divide_exact: nonzero remainder");
  normalize(q);
  return q;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& input) {
  UniPoly a = monic(input);
  if (a.size() <= 1) return {};
  std::vector<UniPoly> factors;
  UniPoly a1 = uni_derivative(a);
  UniPoly g = uni_gcd(a, a1);
  UniPoly b = uni_divide_exact(a, g);
  UniPoly c = uni_divide_exact(a1, g);
  UniPoly d = c;
  {
    UniPoly bd = uni_derivative(b);
    for (std::size_t i = 0; i < d.size() || i < bd.size(); ++i) {
      if (i >= d.size()) d.push_back(0);
      if (i < bd.size()) d[i] -= bd[i];
    }
    normalize(d);
  }
  while (b.size() > 1) {
    UniPoly f = uni_gcd(b, d);
    factors.push_back(f);
    b = uni_divide_exact(b, f);
    c = uni_divide_exact(d, f);
    UniPoly bd = uni_derivative(b);
    d = c;
    for (std::size_t i = 0; i < d.size() || i < bd.size(); ++i) {
      if (i >= d.size()) d.push_back(0);
      if (i < bd.size()) d[i] -= bd[i];
    }
    normalize(d);
  }
  while (!factors.empty() && factors.back().size() <= 1) factors.pop_back();
  return factors;
}

std::vector<std::complex<double>> approximate_roots(const UniPoly& input) {
  UniPoly a = monic(input);
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) return {};
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i].get_d();
  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1 + radius;

  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 1;
    for (int i = n - 1; i >= 0; --i) v = v * x + c[i];
    return v;
  };
  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  for (int i = 0; i < n; ++i) z[i] = radius * std::pow(seed, i);
  for (int iter = 0; iter < 500; ++iter) {
    double change = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const std::complex<double> step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (change < 1e-15) break;
  }
  return z;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> primes;
  // Trial division is capped; a large cofactor is kept as if prime, which can
  // only hide candidates, never produce a wrong root.
  for (mpz_class p = 2; p * p <= n && p < 1000000; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> out = {1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

BigRational horner(const UniPoly& a, const BigRational& x) {
  BigRational v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

}  // namespace

std::vector<BigRational> rational_roots(const UniPoly& input, int max_lead_bits) {
  UniPoly a = input;
  normalize(a);
  std::vector<BigRational> roots;
  if (a.size() <= 1) return roots;

  // Primitive integer form.
  mpz_class lcm_den = 1;
  for (const auto& x : a) lcm_den = lcm(lcm_den, mpz_class(x.get_den()));
  std::vector<mpz_class> ints;
  for (const auto& x : a) ints.push_back(mpz_class(x * lcm_den));
  mpz_class g = 0;
  for (const auto& x : ints) g = gcd(g, x);
  mpz_class lead = ints.back() / g;

  while (a.size() > 1 && a[0] == 0) {
    roots.push_back(0);
    a.erase(a.begin());
  }
  if (a.size() <= 1) return roots;
  if (mpz_sizeinbase(lead.get_mpz_t(), 2) > static_cast<std::size_t>(max_lead_bits)) return roots;

  const auto dens = divisors(lead);
  std::set<BigRational> found;
  for (const auto& est : approximate_roots(a)) {
    if (std::abs(est.imag()) > 1e-6 * (1 + std::abs(est.real()))) continue;
    for (const auto& d : dens) {
      const double scaled = est.real() * d.get_d();
      if (std::abs(scaled) > 1e15) continue;
      BigRational cand(mpz_class(static_cast<long>(std::llround(scaled))), d);
      cand.canonicalize();
      if (horner(a, cand) == 0) {
        found.insert(cand);
        break;
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace kinkzeta
