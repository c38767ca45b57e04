#include "oham/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "oham/analysis.hpp"
#include "oham/error.hpp"
#include "oham/problem.hpp"
#include "oham/residual.hpp"

namespace oham {
namespace {

std::vector<ReferenceCase> make_cases() {
  std::vector<ReferenceCase> cases(4);
  cases[0].example = 1;
  cases[0].c0 = -0.505595;
  cases[0].rows = {
      {0.0, 0.000, 0.0000000000, 0.000}, {0.1, 0.001, -0.062559671, 0.001}, {0.2, 0.008, -0.115267240, 0.008},
      {0.3, 0.027, -0.148270607, 0.027}, {0.4, 0.064, -0.151717670, 0.064}, {0.5, 0.125, -0.115756328, 0.125},
      {0.6, 0.216, -0.030534480, 0.216}, {0.7, 0.343, 0.1137999760, 0.343}, {0.8, 0.512, 0.3270991400, 0.512},
      {0.9, 0.729, 0.6192151140, 0.729}, {1.0, 1.000, 1.0000000000, 1.000},
  };
  cases[0].phi_coeffs = {0.0, 7.7e-16, 0.0, 1.0};

  cases[1].example = 2;
  cases[1].c0 = -0.819014;
  cases[1].rows = {
      {0.0, 1.000000000, 1.000000000, 1.000000000}, {0.1, 0.953462589, 0.954516555, 0.953715758},
      {0.2, 0.912870929, 0.914909713, 0.913348055}, {0.3, 0.877058019, 0.879819116, 0.877702187},
      {0.4, 0.845154255, 0.848286083, 0.845886767}, {0.5, 0.816496581, 0.819638873, 0.817233417},
      {0.6, 0.790569415, 0.793406404, 0.791235825}, {0.7, 0.766964989, 0.769254375, 0.767504100},
      {0.8, 0.745355992, 0.746938889, 0.745731089}, {0.9, 0.725476250, 0.726273545, 0.725667948},
      {1.0, 0.707106781, 0.707106781, 0.707106781},
  };
  cases[1].phi_coeffs = {1.0, -0.4973, 0.3737, -0.3060, 0.2235, -0.1258, 0.05148, -0.0153, 0.0033, -0.00055, 0.0000646};

  cases[2].example = 3;
  cases[2].c0 = -0.933697;
  cases[2].rows = {
      {0.0, 1.000000000, 1.000000000, 1.000000000}, {0.1, 0.953462589, 0.954139200, 0.953840089},
      {0.2, 0.912870929, 0.914044009, 0.913485384}, {0.3, 0.877058019, 0.878552757, 0.877813154},
      {0.4, 0.845154255, 0.846797874, 0.845969674}, {0.5, 0.816496581, 0.818128147, 0.817301384},
      {0.6, 0.790569415, 0.792049712, 0.791302438}, {0.7, 0.766964989, 0.768181846, 0.767575192},
      {0.8, 0.745355992, 0.746224331, 0.745800843}, {0.9, 0.725476250, 0.725933776, 0.725717917},
      {1.0, 0.707106781, 0.707106781, 0.707106781},
  };
  cases[2].phi_coeffs = {1.0,       -0.495211, 0.362361,  -0.280911, 0.195035, -0.107115,
                         0.043453,  -0.01294,  0.002854,  -0.000464, 0.000054};

  cases[3].example = 4;
  cases[3].c0 = -0.612671;
  cases[3].rows = {
      {0.0, 1.000000000, 1.000000000, 1.000000000}, {0.1, 0.909090909, 0.914550054, 0.908713383},
      {0.2, 0.833333333, 0.844849352, 0.832746652}, {0.3, 0.769230769, 0.785573674, 0.768603045},
      {0.4, 0.714285714, 0.733317575, 0.713705107}, {0.5, 0.666666667, 0.686029523, 0.666157571},
      {0.6, 0.625000000, 0.642573190, 0.624561470}, {0.7, 0.588235294, 0.602393994, 0.587870965},
      {0.8, 0.555555556, 0.565272431, 0.555285414}, {0.9, 0.526315789, 0.531148042, 0.526170109},
      {1.0, 0.500000000, 0.500000000, 0.500000000},
  };
  cases[3].phi_coeffs = {1.0,      -1.00399,   0.995127,   -0.90086,   0.655261,
                         -0.338986, 0.115228, -0.0246916, 0.00308645, -0.00017147};
  return cases;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

const ReferenceCase& reference_case(int example) {
  static const std::vector<ReferenceCase> cases = make_cases();
  if (example < 1 || example > 4) throw DomainError("no reference data for example " + std::to_string(example));
  return cases[example - 1];
}

std::string discrepancy_report(const SolverConfig& base) {
  constexpr std::array kStrategies{PStrategy::Frozen, PStrategy::PartialSum, PStrategy::Expansion};
  std::string out;
  out += "# Comparison with the published order-2 tables\n\n";
  out += "Residual points M = " + std::to_string(base.residual_points) +
         ". Differences are taken on the published 11-point grid; `pub` columns are the published values.\n";

  for (int ex = 1; ex <= 4; ++ex) {
    const ReferenceCase& ref = reference_case(ex);
    const ProblemSpec spec = builtin(ex);
    out += "\n## Example " + std::to_string(ex) + "\n\n";
    out += "| strategy | c0 | pub c0 | max err OHAM | pub max err OHAM | max err ADM | pub max err ADM "
           "| max abs(ADM - pub ADM) | max abs(OHAM - pub OHAM) |\n";
    out += "|---|---|---|---|---|---|---|---|---|\n";

    double pub_err_oham = 0.0;
    double pub_err_adm = 0.0;
    std::vector<double> grid;
    for (const auto& row : ref.rows) {
      grid.push_back(row.x);
      const double y = *exact_eval(spec, row.x);
      pub_err_oham = std::max(pub_err_oham, std::abs(y - row.oham));
      pub_err_adm = std::max(pub_err_adm, std::abs(y - row.adm));
    }

    std::string coeff_lines;
    for (PStrategy strategy : kStrategies) {
      SolverConfig config = base;
      config.order = ref.order;
      config.p_strategy = strategy;
      config.c0_mode = C0Optimize{};
      try {
        const ResultTable table = result_table(spec, config, grid);
        double err_oham = 0.0, err_adm = 0.0, d_adm = 0.0, d_oham = 0.0;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
          err_oham = std::max(err_oham, table.rows[i].err_oham.value_or(0.0));
          err_adm = std::max(err_adm, table.rows[i].err_adm.value_or(0.0));
          d_adm = std::max(d_adm, std::abs(table.rows[i].adm - ref.rows[i].adm));
          d_oham = std::max(d_oham, std::abs(table.rows[i].oham - ref.rows[i].oham));
        }
        out += "| " + std::string(to_string(strategy)) + " | " + fmt("%.6f", table.c0_oham) + " | " +
               fmt("%.6f", ref.c0) + " | " + fmt("%.3e", err_oham) + " | " + fmt("%.3e", pub_err_oham) + " | " +
               fmt("%.3e", err_adm) + " | " + fmt("%.3e", pub_err_adm) + " | " + fmt("%.3e", d_adm) + " | " +
               fmt("%.3e", d_oham) + " |\n";

        const HomotopySeries series = build_series(spec, config, table.c0_oham);
        const Polynomial phi = partial_sum(series, ref.order);
        coeff_lines += "| " + std::string(to_string(strategy)) + " |";
        for (std::size_t i = 0; i < ref.phi_coeffs.size(); ++i) coeff_lines += " " + fmt("%.6g", phi[i]) + " |";
        coeff_lines += "\n";
      } catch (const Error& e) {
        out += "| " + std::string(to_string(strategy)) + " | failed: " + e.what() + " | | | | | | | |\n";
      }
    }

    out += "\nLeading coefficients of the OHAM partial sum (x^0 upward):\n\n| source |";
    for (std::size_t i = 0; i < ref.phi_coeffs.size(); ++i) out += " x^" + std::to_string(i) + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < ref.phi_coeffs.size(); ++i) out += "---|";
    out += "\n| published |";
    for (double c : ref.phi_coeffs) out += " " + fmt("%.6g", c) + " |";
    out += "\n" + coeff_lines;
  }
  return out;
}

}  // namespace oham
