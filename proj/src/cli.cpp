#include "oham/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "oham/error.hpp"
#include "oham/reference.hpp"
#include "oham/residual.hpp"
#include "oham/series.hpp"

namespace oham::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  int example = 0;
  std::string config_path;
  int order = 2;
  std::string c0 = "optimal";
  std::string strategy = "frozen";
  int m_points = 100;
  std::string grid = "0:1:0.1";
  std::string format;
  std::string out_path;
  int norm_grid = 201;
  double from = -1.5;
  double to = -0.1;
  int steps = 15;
  bool serial = false;
};

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

std::string problem_label(const Options& o) {
  return o.example ? "example " + std::to_string(o.example) : o.config_path;
}

ProblemSpec load(const Options& o) {
  if (o.example) return builtin(o.example);
  return load_problem(o.config_path);
}

SolverConfig make_config(const Options& o, bool need_c0) {
  SolverConfig config;
  if (o.order < 1) throw UsageError("--order must be >= 1");
  config.order = o.order;
  const auto strategy = parse_strategy(o.strategy);
  if (!strategy) throw UsageError("--p-strategy must be frozen, partial-sum or expansion");
  config.p_strategy = *strategy;
  if (o.m_points < 2) throw UsageError("--m-points must be >= 2");
  config.residual_points = o.m_points;
  if (o.norm_grid < 2) throw UsageError("--norm-grid must be >= 2");
  config.norm_grid = o.norm_grid;
  config.parallel_scan = !o.serial;
  if (need_c0 && o.c0 != "optimal") {
    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(o.c0, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.c0.size() || !std::isfinite(value) || value == 0.0) {
      throw UsageError("--c0 must be 'optimal' or a finite nonzero number");
    }
    config.c0_mode = C0Fixed{value};
  }
  return config;
}

Format resolve_format(const Options& o) {
  if (o.format == "csv") return Format::Csv;
  if (o.format == "md") return Format::Markdown;
  if (o.format.empty()) return o.out_path.empty() ? Format::Markdown : Format::Csv;
  throw UsageError("--format must be csv or md");
}

double resolve_c0(const ProblemSpec& spec, const SolverConfig& config) {
  return optimize_c0(spec, config).c0;
}

std::string cmd_solve(const Options& o) {
  const ProblemSpec spec = load(o);
  const SolverConfig config = make_config(o, true);
  const auto grid = parse_grid(o.grid);
  ResultTable table = result_table(spec, config, grid);
  table.source = problem_label(o);
  return render_table(table, resolve_format(o));
}

std::string cmd_sweep(const Options& o) {
  const ProblemSpec spec = load(o);
  const SolverConfig config = make_config(o, false);
  if (!(o.from < 0.0) || !(o.to < 0.0)) throw UsageError("sweep range must lie in (-inf, 0)");
  if (o.steps < 2) throw UsageError("--steps must be >= 2");
  const auto c0s = linspace(o.from, o.to, o.steps);
  const auto samples = scan_residuals(spec, config, c0s);
  return render_sweep(samples, resolve_format(o));
}

std::string cmd_residual(const Options& o) {
  const ProblemSpec spec = load(o);
  const SolverConfig config = make_config(o, true);
  const C0Optimum opt = optimize_c0(spec, config);
  return render_residual(opt.report, resolve_format(o));
}

std::string cmd_diagnose(const Options& o) {
  const ProblemSpec spec = load(o);
  const SolverConfig config = make_config(o, true);
  const double c0 = resolve_c0(spec, config);
  const HomotopySeries series = build_series(spec, config, c0);
  const ConvergenceReport report = measure_deltas(series, config.norm_grid);
  const auto grid = parse_grid(o.grid);
  const BoundCheck check = check_bound(series, report, grid);
  std::string text = render_diagnostics(report, check, c0, config.p_strategy, resolve_format(o));
  if (resolve_format(o) == Format::Markdown) text = "# Convergence diagnostics: " + problem_label(o) + "\n\n" + text;
  return text;
}

std::string cmd_compare(const Options& o) {
  SolverConfig config = make_config(o, false);
  if (resolve_format(o) != Format::Markdown) throw UsageError("compare only renders markdown");
  return discrepancy_report(config);
}

void add_problem(CLI::App* app, Options& o) {
  auto* ex = app->add_option("--example", o.example, "Built-in problem 1..4")->check(CLI::Range(1, 4));
  auto* cfg = app->add_option("--config", o.config_path, "Problem config file");
  ex->excludes(cfg);
  cfg->excludes(ex);
}

void add_solver(CLI::App* app, Options& o, bool with_c0) {
  app->add_option("--order", o.order, "Series order n (default 2)");
  if (with_c0) app->add_option("--c0", o.c0, "optimal | <float> (default optimal)");
  app->add_option("--p-strategy", o.strategy, "frozen | partial-sum | expansion (default frozen)");
  app->add_option("--m-points", o.m_points, "Residual points M (default 100)");
  app->add_flag("--serial", o.serial, "Run the c0 scan on one thread");
}

void add_output(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "csv | md (default md to stdout, csv to files)");
  app->add_option("--out", o.out_path, "Output file (default stdout)");
}

std::string fixed(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string cell(const std::optional<double>& v, Format f) {
  if (!v) return f == Format::Csv ? "" : "-";
  return f == Format::Csv ? format_csv_number(*v) : format_md_number(*v);
}

std::string error_marker(const std::string& message) {
  if (message.find("nonlocal coefficient") != std::string::npos) return "nonpositive_alpha";
  if (message.find("not finite") != std::string::npos) return "overflow";
  return "failed";
}

}  // namespace

std::string format_csv_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  return fixed("%.14e", v);
}

std::string format_md_number(double v) {
  if (v == 0.0) v = 0.0;
  return fixed("%.9g", v);
}

std::string render_table(const ResultTable& table, Format format) {
  std::string out;
  if (format == Format::Csv) {
    out += "x,exact,adm,oham,err_adm,err_oham\n";
    for (const auto& r : table.rows) {
      out += format_csv_number(r.x) + "," + cell(r.exact, format) + "," + format_csv_number(r.adm) + "," +
             format_csv_number(r.oham) + "," + cell(r.err_adm, format) + "," + cell(r.err_oham, format) + "\n";
    }
    return out;
  }
  out += "# " + (table.source.empty() ? std::string("problem") : table.source) + "\n\n";
  out += "order " + std::to_string(table.order) + ", p-strategy " + std::string(to_string(table.strategy)) +
         ", M = " + std::to_string(table.residual_points) + "\n\n";
  out += "- ADM: c0 = " + format_md_number(table.c0_adm) + ", E = " + format_md_number(table.E_adm) + "\n";
  out += "- OHAM: c0 = " + format_md_number(table.c0_oham) + ", E = " + format_md_number(table.E_oham) + "\n\n";
  out += "| x | y(x) | ADM psi_n(x) | OHAM phi_n(x) | abs(y - psi_n) | abs(y - phi_n) |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const auto& r : table.rows) {
    out += "| " + format_md_number(r.x) + " | " + cell(r.exact, format) + " | " + format_md_number(r.adm) + " | " +
           format_md_number(r.oham) + " | " + cell(r.err_adm, format) + " | " + cell(r.err_oham, format) + " |\n";
  }
  return out;
}

std::string render_sweep(std::span<const ScanSample> samples, Format format) {
  bool any_error = false;
  for (const auto& s : samples) any_error |= !s.E.has_value();
  std::string out;
  if (format == Format::Csv) {
    out += any_error ? "c0,E,error\n" : "c0,E\n";
    for (const auto& s : samples) {
      out += format_csv_number(s.c0) + "," + cell(s.E, format);
      if (any_error) out += "," + (s.E ? std::string() : error_marker(s.error));
      out += "\n";
    }
    return out;
  }
  out += "| c0 | E |\n|---|---|\n";
  for (const auto& s : samples) {
    out += "| " + format_md_number(s.c0) + " | " + (s.E ? format_md_number(*s.E) : error_marker(s.error)) + " |\n";
  }
  return out;
}

std::string render_residual(const ResidualReport& report, Format format) {
  if (format == Format::Csv) {
    return "c0,E,p_of_phi\n" + format_csv_number(report.c0) + "," + format_csv_number(report.E) + "," +
           format_csv_number(report.p_of_phi) + "\n";
  }
  std::string out;
  out += "- c0 = " + format_md_number(report.c0) + "\n";
  out += "- E = " + format_md_number(report.E) + "\n";
  out += "- p[phi] = " + format_md_number(report.p_of_phi) + "\n\n";
  out += "| x | N[phi](x) |\n|---|---|\n";
  for (const auto& [x, r] : report.pointwise) out += "| " + format_md_number(x) + " | " + format_md_number(r) + " |\n";
  return out;
}

std::string render_diagnostics(const ConvergenceReport& report, const BoundCheck& check, double c0,
                               PStrategy strategy, Format format) {
  auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
  std::string out;
  if (format == Format::Csv) {
    out += "field,value\n";
    out += "order," + std::to_string(report.order) + "\n";
    out += "c0," + format_csv_number(c0) + "\n";
    out += "p_strategy," + std::string(to_string(strategy)) + "\n";
    for (std::size_t k = 0; k < report.norms.size(); ++k) {
      out += "norm_" + std::to_string(k) + "," + format_csv_number(report.norms[k]) + "\n";
    }
    for (std::size_t k = 0; k < report.deltas.size(); ++k) {
      out += "delta_" + std::to_string(k) + "," + cell(report.deltas[k], format) + "\n";
    }
    out += "k0," + (report.k0 ? std::to_string(*report.k0) : std::string()) + "\n";
    out += "delta_max," + format_csv_number(report.delta_max) + "\n";
    out += "bound," + cell(report.bound, format) + "\n";
    out += "observed_max_error," + cell(check.observed, format) + "\n";
    out += std::string("flagged,") + (check.flagged ? "1" : "0") + "\n";
    return out;
  }
  out += "order " + std::to_string(report.order) + ", c0 = " + format_md_number(c0) + ", p-strategy " +
         std::string(to_string(strategy)) + "\n\n";
  out += "| k | max abs y_k | delta_k |\n|---|---|---|\n";
  for (std::size_t k = 0; k < report.norms.size(); ++k) {
    const std::string delta = k < report.deltas.size() ? cell(report.deltas[k], format) : "";
    out += "| " + std::to_string(k) + " | " + format_md_number(report.norms[k]) + " | " + delta + " |\n";
  }
  out += "\n- k0: " + opt_int(report.k0) + "\n";
  out += "- delta_max: " + format_md_number(report.delta_max) + "\n";
  out += "- all delta_k < 1 from k0: " + std::string(report.k0 ? "yes" : "no") + "\n";
  out += "- truncation bound: " + (report.bound ? format_md_number(*report.bound) : std::string("none")) + "\n";
  if (check.observed) {
    out += "- observed max error: " + format_md_number(*check.observed) + "\n";
    if (check.bound) {
      out += std::string("- error within bound: ") + (check.flagged ? "no (flagged)" : "yes") + "\n";
    }
  }
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError("--grid must look like a:b:step");
    parts.push_back(v);
  }
  if (parts.size() != 3) throw DomainError("--grid must look like a:b:step");
  const double a = parts[0], b = parts[1], step = parts[2];
  if (!(a >= 0.0 && b <= 1.0 && a <= b && step > 0.0)) throw DomainError("--grid needs 0 <= a <= b <= 1 and step > 0");
  const double count = std::round((b - a) / step);
  if (std::abs(count * step - (b - a)) > 1e-9 * std::max(1.0, b - a) || count > 1e6) {
    throw DomainError("--grid step must divide b - a");
  }
  const int n = static_cast<int>(count);
  std::vector<double> grid;
  for (int i = 0; i <= n; ++i) grid.push_back(n == 0 ? a : (i == n ? b : a + (b - a) * i / n));
  return grid;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Series solutions of nonlocal elliptic boundary value problems by optimal homotopy analysis", "oham"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Compare ADM and OHAM against the exact solution on a grid");
  add_problem(solve, o);
  add_solver(solve, o, true);
  solve->add_option("--grid", o.grid, "a:b:step (default 0:1:0.1)");
  add_output(solve, o);

  auto* sweep = app.add_subcommand("sweep", "Tabulate E_n(c0) over an equispaced c0 range");
  add_problem(sweep, o);
  add_solver(sweep, o, false);
  sweep->add_option("--from", o.from, "First c0 (default -1.5)");
  sweep->add_option("--to", o.to, "Last c0 (default -0.1)");
  sweep->add_option("--steps", o.steps, "Number of samples (default 15)");
  add_output(sweep, o);

  auto* residual = app.add_subcommand("residual", "Averaged squared residual E_n at one c0");
  add_problem(residual, o);
  add_solver(residual, o, true);
  add_output(residual, o);

  auto* diagnose = app.add_subcommand("diagnose", "Contraction ratios and the truncation error bound");
  add_problem(diagnose, o);
  add_solver(diagnose, o, true);
  diagnose->add_option("--norm-grid", o.norm_grid, "Grid points for sup-norms (default 201)");
  diagnose->add_option("--grid", o.grid, "Grid for the observed error (default 0:1:0.1)");
  add_output(diagnose, o);

  auto* compare = app.add_subcommand("compare", "Compare against the published tables under every p-strategy");
  compare->add_option("--m-points", o.m_points, "Residual points M (default 100)");
  add_output(compare, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  }

  const bool needs_problem = !compare->parsed();
  if (needs_problem && (o.example == 0) == o.config_path.empty()) {
    err << "error: exactly one of --example or --config is required\n";
    return kUsage;
  }

  std::string text;
  try {
    if (solve->parsed()) text = cmd_solve(o);
    if (sweep->parsed()) text = cmd_sweep(o);
    if (residual->parsed()) text = cmd_residual(o);
    if (diagnose->parsed()) text = cmd_diagnose(o);
    if (compare->parsed()) text = cmd_compare(o);
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kParse;
  } catch (const InvariantError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kParse;
  } catch (const OptimizationInfeasible& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kInfeasible;
  } catch (const DomainError& e) {
    // bad --grid and similar argument values surface here
    const std::string what = e.what();
    err << "error: " << one_line(what) << "\n";
    return what.starts_with("--") ? kUsage : kSolver;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kSolver;
  }

  if (o.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write '" << o.out_path << "'\n";
    return kOutput;
  }
  return kOk;
}

}  // namespace oham::cli
