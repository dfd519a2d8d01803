// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qmeter/montecarlo.hpp"
#include "qmeter/phase_covariant.hpp"
#include "qmeter/qudit.hpp"
#include "qmeter/scenario.hpp"
#include "qmeter/serialize.hpp"
#include "qmeter/universal_qubit.hpp"

namespace {

using namespace qmeter;
using nlohmann::json;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
}

std::string pc_curve_csv(int n, int grid) {
  std::ostringstream csv;
  csv << "a,eta,P_I,P_S,P_RS\n";
  for (const TradeoffPoint& pt : pc_tradeoff_curve(n, grid)) {
    csv << format_double(pt.a) << ',' << format_double(pt.eta) << ','
        << format_double(pt.p_i) << ',' << format_double(pt.p_s) << ','
        << format_double(pt.p_rs) << '\n';
  }
  return csv.str();
}

std::string pc_table_csv(int n_max) {
  std::ostringstream csv;
  csv << "N,P_S_max,P_I_unamb\n";
  for (int n = 1; n <= n_max; ++n)
    csv << n << ',' << format_double(pc_ps_max(n)) << ','
        << format_double(pc_pi_unambiguous(n)) << '\n';
  return csv.str();
}

std::string um_curve_csv(int grid) {
  std::ostringstream csv;
  csv << "P_I,P_S,P_RS\n";
  for (int i = 0; i < grid; ++i) {
    const double p_i = (2.0 / 3.0) * i / (grid - 1);
    const double p_s = um_ps_of_pi(p_i);
    csv << format_double(p_i) << ',' << format_double(p_s) << ','
        << format_double(p_s / (1.0 - p_i)) << '\n';
  }
  return csv.str();
}

// Mixes each element with depolarizing noise; completeness survives but
// optimality certificates must fail. Forced-failure fixture for exit codes.
void perturb_povm(Povm& povm, double eps) {
  const int dim = povm.layout.total_dim();
  for (auto& e : povm.elements) {
    const double tr = e.op.trace().real();
    e.op = (1.0 - eps) * e.op + (eps * tr / dim) * Matrix::Identity(dim, dim);
  }
}

int run_validate(const std::string& scenario_spec, double perturb) {
  Scenario sc = build_scenario(scenario_spec);
  if (perturb > 0.0) perturb_povm(sc.povm, perturb);
  PovmReport report = validate_povm(sc.povm, 1e-10);
  json out;
  out["scenario"] = scenario_spec;
  out["povm"] = report_to_json(report);
  bool ok = report.pass;
  if (sc.lagrange_a.has_value()) {
    ExtremalCertificate cert =
        verify_extremal(sc.povm, sc.r_plus, sc.r_minus, *sc.lagrange_a);
    out["certificate"] = certificate_to_json(cert);
    ok = ok && cert.pass;
  }
  out["pass"] = ok;
  std::cout << out.dump(2) << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"programmable quantum multimeter toolkit"};
  app.require_subcommand(1);
  std::string output;

  int pc_n = 2, pc_grid = 51, table_n_max = 6, um_grid = 51;
  int qd_d = 2, qd_samples = 20;
  std::uint64_t seed = 1;
  std::string scenario;
  double perturb = 0.0;
  std::uint64_t trials = 100000;
  int threads = 0;

  auto* pc_curve = app.add_subcommand("pc-curve", "phase-covariant tradeoff curve CSV");
  pc_curve->add_option("-o,--output", output, "output file (default stdout)");
  pc_curve->add_option("--n", pc_n, "program copies N")->required()->check(CLI::PositiveNumber);
  pc_curve->add_option("--grid", pc_grid, "grid points")->check(CLI::Range(2, 100000));

  auto* pc_table = app.add_subcommand("pc-table", "closed-form rate table CSV");
  pc_table->add_option("-o,--output", output, "output file (default stdout)");
  pc_table->add_option("--n-max", table_n_max, "largest N")->required()->check(CLI::PositiveNumber);

  auto* um_curve = app.add_subcommand("um-curve", "universal-qubit P_S(P_I) curve CSV");
  um_curve->add_option("-o,--output", output, "output file (default stdout)");
  um_curve->add_option("--grid", um_grid, "grid points")->check(CLI::Range(2, 100000));

  auto* qd_check = app.add_subcommand("qd-check", "qudit universality report JSON");
  qd_check->add_option("-o,--output", output, "output file (default stdout)");
  qd_check->add_option("--d", qd_d, "qudit dimension")->required()->check(CLI::Range(2, 4));
  qd_check->add_option("--samples", qd_samples, "Haar samples")->check(CLI::PositiveNumber);
  qd_check->add_option("--seed", seed, "RNG seed");

  auto* validate = app.add_subcommand("validate", "POVM validation + extremal certificate JSON");
  validate->add_option("-o,--output", output, "output file (default stdout)");
  validate->add_option("--scenario", scenario, "scenario spec, e.g. pc-interp:2:0.9:0")->required();
  validate->add_option("--perturb", perturb, "depolarizing mix-in for negative controls")
      ->check(CLI::Range(0.0, 1.0));

  auto* mc = app.add_subcommand("mc", "Monte Carlo Born-rule sampling JSON");
  mc->add_option("-o,--output", output, "output file (default stdout)");
  mc->add_option("--scenario", scenario, "scenario spec")->required();
  mc->add_option("--trials", trials, "trial count")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "RNG seed");
  mc->add_option("--threads", threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (pc_curve->parsed()) {
      write_output(output, pc_curve_csv(pc_n, pc_grid));
    } else if (pc_table->parsed()) {
      write_output(output, pc_table_csv(table_n_max));
    } else if (um_curve->parsed()) {
      write_output(output, um_curve_csv(um_grid));
    } else if (qd_check->parsed()) {
      UniversalityReport rep = qd_universality_check(qd_d, qd_samples, seed);
      write_output(output, universality_report_to_json(rep).dump(2) + "\n");
      return rep.pass ? 0 : 1;
    } else if (validate->parsed()) {
      return run_validate(scenario, perturb);
    } else if (mc->parsed()) {
      SimConfig config{trials, seed, scenario, threads};
      SimReport rep = simulate(config);
      write_output(output, sim_report_to_json(rep).dump(2) + "\n");
      std::ostringstream table;
      table << std::left << std::setw(14) << "rate" << std::right << std::setw(12)
            << "estimate" << std::setw(12) << "std.err" << std::setw(12) << "analytic"
            << '\n';
      auto row = [&table](const char* name, double hat, double se, double ref) {
        table << std::left << std::setw(14) << name << std::right << std::fixed
              << std::setprecision(6) << std::setw(12) << hat << std::setw(12) << se
              << std::setw(12) << ref << '\n';
      };
      row("success", rep.p_success_hat, rep.p_success_se, rep.analytic.p_success);
      row("inconclusive", rep.p_inconclusive_hat, rep.p_inconclusive_se,
          rep.analytic.p_inconclusive);
      row("error", rep.p_error_hat, rep.p_error_se, rep.analytic.p_error);
      std::cerr << table.str();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
