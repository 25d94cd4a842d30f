// The `pdm` command line: spectrum, figure1, eigenfunction, verify.
#pragma once

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pdm/analytic.hpp"
#include "pdm/core_model.hpp"
#include "pdm/hamiltonian.hpp"
#include "pdm/report_io.hpp"
#include "pdm/solver.hpp"
#include "pdm/verification.hpp"

namespace pdm::cli {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string cases = "all";
  std::optional<double> gamma_tilde;
  std::optional<double> gamma;
  std::optional<double> hbar, m0, k;
  int n_max = 4;
  int n = 0;
  double y_min = -12.0;
  double y_max = 12.0;
  long points = 4001;
  std::string format;  // empty: command default
  std::string out;
  bool no_oracle = false;
  std::string suite = "all";
  std::uint64_t seed = VerifyConfig{}.seed;
  bool inject_wrong_gauge = false;

  Grid grid() const {
    if (points < 3) throw UsageError("--points must be at least 3");
    try {
      return Grid::make(y_min, y_max, static_cast<std::size_t>(points));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  std::vector<CaseId> case_list() const {
    if (cases == "all") return {CaseId::A, CaseId::B, CaseId::C};
    try {
      const CaseId id = parse_case(cases);
      if (id == CaseId::Custom) throw std::invalid_argument("custom");
      return {id};
    } catch (const std::invalid_argument&) {
      throw UsageError("--case must be one of a, b, c, all");
    }
  }

  std::string format_or(const std::string& fallback) const {
    const std::string f = format.empty() ? fallback : format;
    if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
    return f;
  }
};

/// Resolves the scaled deformation; warnings go to err.
inline double resolve_gamma_tilde(const RunConfig& cfg, std::ostream& err, double fallback) {
  if (cfg.gamma_tilde) {
    if (cfg.gamma) err << "warning: both --gamma and --gamma-tilde given; using --gamma-tilde\n";
    return *cfg.gamma_tilde;
  }
  if (!cfg.gamma) return fallback;
  const int supplied = (cfg.hbar ? 1 : 0) + (cfg.m0 ? 1 : 0) + (cfg.k ? 1 : 0);
  if (supplied != 0 && supplied != 3) {
    err << "warning: --hbar, --m0 and --k are used only when all three are given; using 1\n";
  }
  ModelParameters p = ModelParameters::from_gamma_tilde(0.0);
  if (supplied == 3) {
    try {
      p = ModelParameters::make(*cfg.hbar, *cfg.m0, *cfg.k, 0.0);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  p.gamma = *cfg.gamma;
  return p.gamma_tilde();
}

inline io::ConfigEcho echo(const RunConfig& cfg, double gamma_tilde) {
  io::ConfigEcho e;
  e.emplace_back("command", cfg.command);
  e.emplace_back("case", cfg.cases);
  e.emplace_back("gamma_tilde", gamma_tilde);
  e.emplace_back("n_max", static_cast<std::int64_t>(cfg.n_max));
  if (cfg.command == "eigenfunction") e.emplace_back("n", static_cast<std::int64_t>(cfg.n));
  e.emplace_back("y_min", cfg.y_min);
  e.emplace_back("y_max", cfg.y_max);
  e.emplace_back("points", static_cast<std::int64_t>(cfg.points));
  if (cfg.command == "spectrum") e.emplace_back("oracle", !cfg.no_oracle);
  if (cfg.command == "verify") {
    e.emplace_back("suite", cfg.suite);
    e.emplace_back("seed", static_cast<std::int64_t>(cfg.seed));
    e.emplace_back("inject_wrong_gauge", cfg.inject_wrong_gauge);
  }
  return e;
}

inline void emit(const std::string& format, const io::ConfigEcho& config, const io::Table& table,
                 std::ostream& os) {
  if (format == "json") io::write_json(os, config, table);
  else io::write_csv(os, table);
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

// -- spectrum --------------------------------------------------------------

inline io::Table spectrum_table(const RunConfig& cfg, double g, std::ostream& err) {
  if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
  const auto levels = static_cast<unsigned>(cfg.n_max) + 1;
  const bool oracle = !cfg.no_oracle;
  io::Table t;
  t.columns = {"case", "n", "E_closed_form"};
  if (oracle) t.columns.insert(t.columns.end(), {"E_numeric", "abs_diff"});
  t.columns.push_back("threshold");

  const Grid grid = cfg.grid();
  for (CaseId id : cfg.case_list()) {
    std::vector<io::Cell> closed(levels, io::Null{});
    io::Cell threshold = io::Null{};
    if (g >= 0.0) {
      for (unsigned n = 0; n < levels; ++n) closed[n] = energy_level(id, n, g);
      if (g > 0.0) threshold = energy_threshold(id, g);
      else threshold = std::numeric_limits<double>::infinity();
    } else {
      for (unsigned n = 0; n < levels; ++n) {
        try {
          closed[n] = negative_gamma_state(id, n, g).energy();
        } catch (const UnverifiedContinuation& e) {
          err << "warning: " << e.what() << '\n';
        }
      }
    }
    std::vector<double> numeric;
    if (oracle && g >= 0.0) {
      const auto dual = build_dual(CaseSpec::preset(id, g), MassProfile(g), PotentialProfile(g));
      if (grid.n_points % 2 == 1 && grid.n_points >= 5) {
        numeric = richardson_spectrum(dual, grid, levels).extrapolated;
      } else {
        err << "warning: even point count; reporting unextrapolated eigenvalues\n";
        numeric = lowest_eigenvalues(discretize_dual(dual, grid), levels);
      }
    }
    for (unsigned n = 0; n < levels; ++n) {
      std::vector<io::Cell> row{std::string(1, case_letter(id)), static_cast<std::int64_t>(n), closed[n]};
      if (oracle) {
        if (numeric.empty()) {
          row.insert(row.end(), {io::Null{}, io::Null{}});
        } else {
          row.emplace_back(numeric[n]);
          row.emplace_back(std::abs(numeric[n] - std::get<double>(closed[n])));
        }
      }
      row.push_back(threshold);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

// -- figure1 ---------------------------------------------------------------

inline io::Table figure1_potentials(double g, const Grid& grid) {
  const MassProfile mass(g);
  const PotentialProfile pot(g);
  const DualHamiltonian dual_b(CaseSpec::b(), pot);
  const DualHamiltonian dual_c(CaseSpec::c(g), pot);
  grid.require_inside(mass.positivity_domain());
  io::Table t;
  t.columns = {"y", "V_a", "W_b_effective", "W_c_effective"};
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double y = grid.node(i);
    if (!mass.positivity_domain().contains(y)) continue;
    t.rows.push_back({y, pot.V(y), effective_potential_over_case_a(dual_b, y),
                      effective_potential_over_case_a(dual_c, y)});
  }
  return t;
}

inline io::Table figure1_levels(double g, unsigned levels) {
  io::Table t;
  t.columns = {"case", "n", "E"};
  for (CaseId id : {CaseId::A, CaseId::B, CaseId::C}) {
    for (unsigned n = 0; n < levels; ++n) {
      t.rows.push_back({std::string(1, case_letter(id)), static_cast<std::int64_t>(n), energy_level(id, n, g)});
    }
  }
  return t;
}

// -- eigenfunction ---------------------------------------------------------

inline io::Table eigenfunction_table(const RunConfig& cfg, double g) {
  const auto ids = cfg.case_list();
  if (ids.size() != 1) throw UsageError("eigenfunction needs a single --case (a, b or c)");
  if (cfg.n < 0) throw UsageError("--n must be >= 0");
  const auto n = static_cast<unsigned>(cfg.n);
  const Grid grid = cfg.grid();
  const EigenState st = g >= 0.0 ? make_eigenstate(ids.front(), n, g)
                                 : negative_gamma_state(ids.front(), n, g);
  grid.require_inside(st.domain());
  io::Table t;
  t.columns = {"y", "re_psi", "im_psi", "re_omega", "rho"};
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double y = grid.node(i);
    if (!st.domain().contains(y)) continue;
    const auto psi = st.psi(y);
    t.rows.push_back({y, psi.real(), psi.imag(), st.omega_real(y), st.density(y)});
  }
  return t;
}

// -- verify ----------------------------------------------------------------

inline std::vector<CheckReport> verify_reports(const RunConfig& cfg, double g) {
  if (cfg.suite != "all") {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
      throw UsageError("unknown suite '" + cfg.suite + "'");
    }
  }
  if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
  VerifyConfig vc;
  vc.gamma_tilde = g;
  vc.levels = static_cast<unsigned>(cfg.n_max) + 1;
  vc.spectrum_grid = cfg.grid();
  vc.seed = cfg.seed;
  vc.inject_wrong_gauge = cfg.inject_wrong_gauge;
  return run_suites(cfg.suite, vc);
}

inline void summarize(const std::vector<CheckReport>& reports, std::ostream& err) {
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (r.passed) continue;
    ++failed;
    err << "FAIL " << r.check_name << " case " << r.case_id << " gamma_tilde "
        << io::format_double(r.gamma_tilde, 9);
    if (r.n >= 0) err << " n " << r.n;
    err << ": measured " << io::format_double(r.measured, 9)
        << (r.bound == Bound::Upper ? " > " : " < ") << io::format_double(r.tolerance, 9);
    if (!r.note.empty()) err << " (" << r.note << ")";
    err << '\n';
  }
  err << "verify: " << reports.size() << " checks, " << reports.size() - failed << " passed, "
      << failed << " failed\n";
}

// -- entry point -----------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Position-dependent-mass oscillators: closed forms, dual operators, checks", "pdm"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--case", cfg.cases, "a, b, c or all");
    sub->add_option("--gamma-tilde", cfg.gamma_tilde, "scaled deformation");
    sub->add_option("--gamma", cfg.gamma, "dimensional deformation");
    sub->add_option("--hbar", cfg.hbar, "hbar for --gamma conversion");
    sub->add_option("--m0", cfg.m0, "m0 for --gamma conversion");
    sub->add_option("--k", cfg.k, "spring constant for --gamma conversion");
    sub->add_option("--n-max", cfg.n_max, "highest level");
    sub->add_option("--y-min", cfg.y_min, "grid start");
    sub->add_option("--y-max", cfg.y_max, "grid end");
    sub->add_option("--points", cfg.points, "grid points");
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("--out", cfg.out, "output path (directory for figure1)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "closed-form and numeric energy levels");
  add_common(spectrum);
  spectrum->add_flag("--no-oracle", cfg.no_oracle, "skip the finite-difference eigenvalues");

  auto* figure1 = app.add_subcommand("figure1", "potential curves and the five lowest levels");
  add_common(figure1);

  auto* eigen = app.add_subcommand("eigenfunction", "sampled eigenfunction and density");
  add_common(eigen);
  eigen->add_option("--n", cfg.n, "level");

  auto* verify = app.add_subcommand("verify", "run property suites");
  add_common(verify);
  verify->add_option("--suite", cfg.suite, "suite name or all");
  verify->add_option("--seed", cfg.seed, "seed for random test functions");
  verify->add_flag("--inject-wrong-gauge", cfg.inject_wrong_gauge, "use g = 1 in case b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::ostringstream buf;
    if (spectrum->parsed()) {
      cfg.command = "spectrum";
      const double g = resolve_gamma_tilde(cfg, err, 0.1);
      emit(cfg.format_or("csv"), echo(cfg, g), spectrum_table(cfg, g, err), buf);
      write_output(cfg.out, buf.str(), out);
    } else if (figure1->parsed()) {
      cfg.command = "figure1";
      const double g = resolve_gamma_tilde(cfg, err, 0.1);
      if (!(g > 0.0)) throw UsageError("figure1 needs gamma_tilde > 0");
      if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
      const std::string fmt = cfg.format_or("csv");
      const std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
      std::filesystem::create_directories(dir);
      std::ostringstream pot, lev;
      emit(fmt, echo(cfg, g), figure1_potentials(g, cfg.grid()), pot);
      emit(fmt, echo(cfg, g), figure1_levels(g, static_cast<unsigned>(cfg.n_max) + 1), lev);
      write_output((dir / ("potentials." + fmt)).string(), pot.str(), out);
      write_output((dir / ("levels." + fmt)).string(), lev.str(), out);
    } else if (eigen->parsed()) {
      cfg.command = "eigenfunction";
      if (cfg.cases == "all") cfg.cases = "a";
      const double g = resolve_gamma_tilde(cfg, err, 0.1);
      emit(cfg.format_or("csv"), echo(cfg, g), eigenfunction_table(cfg, g), buf);
      write_output(cfg.out, buf.str(), out);
    } else {
      cfg.command = "verify";
      const double g = resolve_gamma_tilde(cfg, err, 0.1);
      const auto reports = verify_reports(cfg, g);
      emit(cfg.format_or("json"), echo(cfg, g), io::report_table(reports), buf);
      write_output(cfg.out, buf.str(), out);
      summarize(reports, err);
      for (const auto& r : reports) {
        if (!r.passed) return kVerifyFailed;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace pdm::cli
