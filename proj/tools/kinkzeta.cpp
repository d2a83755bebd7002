// kinkzeta: classical solutions, resolvents, spectra, heat traces, zeta
// functions and one-loop corrections from the command line.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kinkzeta/classical.hpp"
#include "kinkzeta/io.hpp"
#include "kinkzeta/resolvent.hpp"
#include "kinkzeta/spectral_oracle.hpp"
#include "kinkzeta/verify/acceptance.hpp"
#include "kinkzeta/verify/errata.hpp"
#include "kinkzeta/zeta_engine.hpp"

using namespace kinkzeta;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kDomain = 2, kOracle = 3, kUsage = 64 };

struct RunConfig {
  std::string command;
  std::string model = "sg";
  std::string kind = "kink";
  std::string case_id;
  double m = 1;
  double g = 1;
  double k = 0.6;
  int d = 1;
  double M = 1;
  std::string m_grid;
  std::string t_grid = "0.2:5:25";
  std::string s_grid = "-0.4:0.4:9";
  std::string grid;
  bool include_background = false;
  std::string format;  // csv, json, or empty for the command's default
  std::string out;
  std::string suite = "all";
  bool json_flag = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json config_echo(const RunConfig& c) {
  return {{"command", c.command},   {"model", c.model}, {"kind", c.kind},   {"case", c.case_id},
          {"m", c.m},               {"g", c.g},         {"k", c.k},         {"d", c.d},
          {"M", c.M},               {"m_grid", c.m_grid}, {"t_grid", c.t_grid}, {"s_grid", c.s_grid},
          {"grid", c.grid},         {"include_background", c.include_background}, {"suite", c.suite}};
}

json meta(const RunConfig& c) { return {{"version", kVersion}, {"config", config_echo(c)}}; }

std::string format_of(const RunConfig& c, const std::string& fallback) {
  if (c.json_flag) return "json";
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

void emit_sidecar(const RunConfig& c, const json& extra = json::object()) {
  if (c.out.empty() || c.out == "-") return;
  json m = meta(c);
  for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
  io::write_text(c.out + ".meta.json", m.dump(2) + "\n");
}

void emit_table(const RunConfig& c, const io::Table& t, const std::string& fallback,
                const json& extra = json::object()) {
  if (format_of(c, fallback) == "json") {
    json j = io::table_to_json(t, meta(c));
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    io::write_text(c.out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    io::write_csv(os, t);
    io::write_text(c.out, os.str());
  }
  emit_sidecar(c, extra);
}

void emit_json(const RunConfig& c, json body) {
  body["meta"] = meta(c);
  io::write_text(c.out, body.dump(2) + "\n");
  emit_sidecar(c);
}

SolutionFamily family_of(const RunConfig& c) {
  const Kind kind = parse_kind(c.kind);
  return make_family(ModelParams(parse_model(c.model), c.m, c.g), kind, kind == Kind::Periodic ? c.k : 0.0);
}

// Case from --case with b from --m, or from the model family.
FluctuationCase case_of(const RunConfig& c) {
  if (c.case_id.empty()) return fluctuation_case(family_of(c));
  const CaseId id = parse_case(c.case_id);
  const Model model = id == CaseId::A || id == CaseId::B ? Model::SG : Model::Phi4;
  const Kind kind = id == CaseId::A || id == CaseId::C ? Kind::Kink : Kind::Periodic;
  return fluctuation_case(make_family(ModelParams(model, c.m, c.g), kind, kind == Kind::Periodic ? c.k : 0.0));
}

int cmd_profile(const RunConfig& c) {
  const auto f = family_of(c);
  const double m = c.m;
  const auto xs = io::parse_grid(c.grid.empty() ? io::format_double(-6 / m) + ":" + io::format_double(6 / m) + ":121" : c.grid);
  io::Table t{{"x", "phi", "dphi", "u", "density"}, {}};
  for (double x : xs) {
    const auto pt = profile_point(f, x);
    t.add({x, pt.phi, pt.dphi, potential_d2(f.params, pt.phi), energy_density(f, x)});
  }
  emit_table(c, t, "csv", {{"W", first_integral_W(f)}});
  return kOk;
}

int cmd_energy(const RunConfig& c) {
  const auto f = family_of(c);
  const auto e = classical_energy(f);
  if (format_of(c, "json") == "csv") {
    io::Table t{{"quadrature", "quadrature_error", "closed_form", "paper_closed_form"}, {}};
    t.add({e.quadrature, e.quadrature_error, e.closed_form, e.paper_closed_form.value_or(NAN)});
    emit_table(c, t, "csv");
    return kOk;
  }
  json j = {{"model", c.model}, {"kind", c.kind}, {"quadrature", e.quadrature},
            {"quadrature_error", e.quadrature_error}, {"closed_form", e.closed_form}};
  j["paper_closed_form"] = e.paper_closed_form ? json(*e.paper_closed_form) : json(nullptr);
  emit_json(c, j);
  return kOk;
}

int cmd_resolvent(const RunConfig& c) {
  const auto fc = case_of(c);
  const auto& sym = symbolic_resolvent(fc.id);
  const auto res = solve_PQ(fc);
  if (format_of(c, "json") == "csv") {
    io::Table t{{"root", "multiplicity"}, {}};
    for (std::size_t i = 0; i < res.branches.roots.size(); ++i)
      t.add({res.branches.roots[i], double(res.branches.multiplicities[i])});
    emit_table(c, t, "csv");
    return kOk;
  }
  json roots = json::array();
  for (std::size_t i = 0; i < res.branches.roots.size(); ++i)
    roots.push_back({{"value", res.branches.roots[i]}, {"multiplicity", res.branches.multiplicities[i]}});
  json j = {{"case", to_string(fc.id)}, {"n", sym.n}, {"b", fc.b},
            {"P", sym.P.to_string()},  {"Q", sym.Q.to_string()}, {"roots", roots}};
  if (fc.periodic()) {
    const BigRational k = exact_modulus(fc.k.value());
    j["k"] = fc.k.value();
    j["k_exact"] = to_string(k);
    j["Q_at_k"] = sym.Q.substitute(kVarKappa, BigRational(k * k)).to_string();
  }
  j["note"] = "P and Q at b = 1 in p, z and kappa = k^2; roots scaled by b^2";
  emit_json(c, j);
  return kOk;
}

int cmd_spectrum(const RunConfig& c) {
  const auto fc = case_of(c);
  Grid1D grid;
  if (fc.periodic()) {
    const int n = c.grid.empty() ? 512 : static_cast<int>(io::parse_grid(c.grid).size());
    grid = Grid1D::bloch(0, fc.cell_length(), n, 0);
  } else if (c.grid.empty()) {
    grid = Grid1D::dirichlet(-20 / fc.b, 20 / fc.b, 4000);
  } else {
    const auto xs = io::parse_grid(c.grid);
    grid = Grid1D::dirichlet(xs.front(), xs.back(), static_cast<int>(xs.size()));
  }
  const auto s = fd_spectrum([&](double x) { return fc.u(x); }, grid, to_string(fc.id));
  io::Table t{{"index", "eigenvalue"}, {}};
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) t.add({double(i), s.eigenvalues[i]});
  json extra = {{"h", grid.h()}, {"nodes", grid.n}, {"boundary", fc.periodic() ? "periodic" : "dirichlet"}};
  if (fc.periodic()) extra["band_edges"] = band_edges(fc);
  emit_table(c, t, "csv", extra);
  return kOk;
}

int cmd_heat_trace(const RunConfig& c) {
  const auto fc = case_of(c);
  const auto ts = io::parse_grid(c.t_grid);
  const auto fd = heat_trace_fd(fc, ts);
  const auto lt = laplace_trace(fc);
  const auto ref = io::parallel_map(ts, [&](double t) {
    return fc.id == CaseId::A ? gamma_t_closed(t, fc.b) : gamma_t_bromwich_detail(lt, t).value;
  });
  io::Table t{{"t", "gamma_fd", "gamma_closed"}, {}};
  for (std::size_t i = 0; i < ts.size(); ++i) t.add({ts[i], fd.gamma[i], ref[i]});
  json extra = {{"gamma_closed", fc.id == CaseId::A ? "erf(b sqrt t)" : "Bromwich inversion"}};
  if (fd.warning) {
    extra["warning"] = *fd.warning;
    std::cerr << "warning: " << *fd.warning << "\n";
  }
  emit_table(c, t, "csv", extra);
  return kOk;
}

int cmd_zeta(const RunConfig& c) {
  const auto fc = case_of(c);
  const auto ss = io::parse_grid(c.s_grid);
  json extra;
  io::Table t;
  if (fc.periodic()) {
    const auto r = periodic_zeta_numeric(fc, c.d, ss, c.M);
    t.columns = {"s", "zeta"};
    for (std::size_t i = 0; i < ss.size(); ++i) t.add({ss[i], r.zeta[i]});
    extra = {{"zeta0", r.zeta0},
             {"zeta_prime0", r.zeta_prime0},
             {"zeta_prime0_refined", r.zeta_prime0_refined},
             {"refinement_change", r.refinement_change},
             {"provenance", r.provenance}};
  } else {
    const HeatTrace g1 = fc.id == CaseId::A ? heat_trace_closed_sg_kink(fc.b) : heat_trace_bromwich(fc);
    const MellinZeta z(dimension_lift(g1, c.d), c.M);
    t.columns = fc.id == CaseId::A ? std::vector<std::string>{"s", "zeta", "zeta_closed"}
                                   : std::vector<std::string>{"s", "zeta"};
    for (double s : ss) {
      if (fc.id == CaseId::A) {
        t.add({s, z(s), zeta_closed_sg_kink(s, c.d, fc.b, c.M)});
      } else {
        t.add({s, z(s)});
      }
    }
    extra = {{"zeta0", z.at_zero()}, {"zeta_prime0", z.derivative_at_zero()}};
  }
  emit_table(c, t, "csv", extra);
  return kOk;
}

int cmd_correction(const RunConfig& c) {
  if (c.d < 1 || c.d > 4) throw std::domain_error("--d must lie in 1..4");
  const bool single = c.m_grid.empty();
  const std::vector<double> ms = single ? std::vector<double>{c.m} : io::parse_grid(c.m_grid);
  const auto pairs = io::parallel_map(ms, [&](double m) { return delta_epsilon(c.d, m, c.M, c.include_background); });
  if (single && format_of(c, "json") == "json") {
    const auto& p = pairs.front();
    emit_json(c, {{"case", "A"},
                  {"d", c.d},
                  {"m", c.m},
                  {"M", c.M},
                  {"zeta0", p.closed.zeta0},
                  {"zeta_prime0", p.closed.zeta_prime0},
                  {"delta_eps", p.closed.delta_eps},
                  {"delta_eps_numeric", p.numeric.delta_eps},
                  {"zeta_prime0_numeric", p.numeric.zeta_prime0},
                  {"includes_background", c.include_background}});
    return kOk;
  }
  io::Table t{{"d", "m", "zeta0", "zeta_prime0", "delta_eps_closed", "delta_eps_numeric"}, {}};
  for (std::size_t i = 0; i < ms.size(); ++i)
    t.add({double(c.d), ms[i], pairs[i].closed.zeta0, pairs[i].closed.zeta_prime0, pairs[i].closed.delta_eps,
           pairs[i].numeric.delta_eps});
  emit_table(c, t, "csv", {{"includes_background", c.include_background}});
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  const auto results = verify::run_suite(c.suite);
  bool ok = true;
  json rows = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    ok = ok && r.passed;
    text << verify::summary_line(r) << "\n";
    for (const auto& d : r.details) text << "    " << d << "\n";
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"details", r.details}});
  }
  if (format_of(c, "csv") == "json") {
    emit_json(c, {{"criteria", rows}, {"passed", ok}});
  } else {
    io::write_text(c.out, text.str());
  }
  return ok ? kOk : kOracle;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int cmd_errata(const RunConfig& c) {
  const auto ledger = verify::errata_ledger();
  bool ok = true;
  for (const auto& e : ledger) ok = ok && e.passed;
  if (format_of(c, "json") == "json") {
    json entries = json::array();
    for (const auto& e : ledger)
      entries.push_back({{"tag", e.tag}, {"printed", e.printed}, {"implemented", e.implemented},
                         {"oracle", e.oracle}, {"printed_error", e.printed_error},
                         {"implemented_error", e.implemented_error}, {"passed", e.passed}});
    emit_json(c, {{"entries", entries}, {"count", ledger.size()}, {"all_passed", ok}});
  } else {
    std::ostringstream os;
    os << "tag,printed,implemented,oracle,printed_error,implemented_error,passed\n";
    for (const auto& e : ledger)
      os << csv_quote(e.tag) << ',' << csv_quote(e.printed) << ',' << csv_quote(e.implemented) << ','
         << csv_quote(e.oracle) << ',' << io::format_double(e.printed_error) << ','
         << io::format_double(e.implemented_error) << ',' << (e.passed ? 1 : 0) << '\n';
    io::write_text(c.out, os.str());
    emit_sidecar(c);
  }
  return ok ? kOk : kOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinks, periodic solutions and their one-loop zeta-function corrections"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.set_config("--config", "", "Read flags from a TOML/INI file; command-line flags win");
  RunConfig c;

  app.add_option("--model", c.model, "sg|phi4")->check(CLI::IsMember({"sg", "phi4"}));
  app.add_option("--kind", c.kind, "kink|antikink|periodic|vacuum")
      ->check(CLI::IsMember({"kink", "antikink", "periodic", "vacuum"}));
  app.add_option("--case", c.case_id, "Fluctuation case A|B|C|D")->check(CLI::IsMember({"A", "B", "C", "D"}));
  app.add_option("--m", c.m, "Mass parameter");
  app.add_option("--g", c.g, "Coupling");
  app.add_option("--k", c.k, "Elliptic modulus of periodic solutions");
  app.add_option("--d", c.d, "Space dimension");
  app.add_option("--M", c.M, "Mass scale of the zeta function");
  app.add_option("--m-grid", c.m_grid, "a:b:n");
  app.add_option("--t-grid", c.t_grid, "a:b:n");
  app.add_option("--s-grid", c.s_grid, "a:b:n");
  app.add_option("--grid", c.grid, "Spatial grid a:b:n");
  app.add_flag("--include-background", c.include_background, "Add the constant-background zeta");
  app.add_option("--format", c.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--json", c.json_flag, "Same as --format json");
  app.add_option("--out", c.out, "Output path; stdout if omitted");
  app.add_option("--suite", c.suite, "verify: all, 1..9 or a suite name");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"profile", "Classical profile, fluctuation potential and energy density on an x grid"},
      {"energy", "Classical energy by quadrature and in closed form"},
      {"resolvent", "Exact P, Q and the branch points of the diagonal resolvent"},
      {"spectrum", "Finite-difference eigenvalues of the fluctuation operator"},
      {"heat-trace", "Regularized heat trace: finite differences against the resolvent"},
      {"zeta", "Zeta function on an s grid with zeta(0) and zeta'(0)"},
      {"correction", "One-loop correction of the sine-Gordon kink"},
      {"verify", "Run acceptance criteria"},
      {"errata", "Ledger of printed formulas that fail their oracle"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    if (c.command == "profile") return cmd_profile(c);
    if (c.command == "energy") return cmd_energy(c);
    if (c.command == "resolvent") return cmd_resolvent(c);
    if (c.command == "spectrum") return cmd_spectrum(c);
    if (c.command == "heat-trace") return cmd_heat_trace(c);
    if (c.command == "zeta") return cmd_zeta(c);
    if (c.command == "correction") return cmd_correction(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "errata") return cmd_errata(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
