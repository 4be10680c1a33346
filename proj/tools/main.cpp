// splitgeom command-line driver: verification suites, flat-model sweeps,
// Nahm-Schmid runs and degeneracy scans. Exit codes: 0 pass, 1 check
// failure, 2 usage/config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitgeom/errors.hpp"
#include "splitgeom/nahm.hpp"
#include "splitgeom/suites.hpp"
#include "splitgeom/version.hpp"

namespace {

using nlohmann::json;
using namespace splitgeom;

json calibration_json(const Calibration& cal) {
  return json{{"sign_table", cal.table.sigma},
              {"bracket_sign", cal.bracket_sign},
              {"moment_sign", cal.moment_sign},
              {"metric_eps", cal.metric_eps},
              {"potential_factor", cal.potential_factor},
              {"deta_factor", cal.deta_factor},
              {"normality_eps", cal.normality_eps}};
}

json suite_json(const SuiteReport& rep, const json& params) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  return json{{"tool", "splitgeom"},
              {"version", SPLITGEOM_VERSION},
              {"calibration", calibration_json(calibration())},
              {"suite", rep.suite},
              {"params", params},
              {"checks", checks},
              {"pass", rep.pass()}};
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << body;
}

void emit_report(const SuiteReport& rep, const json& params, const std::string& out_path) {
  write_text(out_path, suite_json(rep, params).dump(2) + "\n");
  for (const auto& c : rep.checks) {
    std::fprintf(stderr, "[%s] %-28s residual %.3e  tol %.3e\n", c.pass ? "PASS" : "FAIL",
                 c.name.c_str(), c.residual, c.tolerance);
  }
}

LieAlgebra load_algebra(const std::string& which) {
  if (which == "su2") return LieAlgebra::su2();
  LieAlgebra g = LieAlgebra::from_json_file(which);
  AlgebraReport rep = g.check();
  if (!rep.ok) throw std::invalid_argument("algebra file fails the invariant checks: " + which);
  return g;
}

NahmState load_init(const LieAlgebra& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open init file: " + path);
  json j;
  in >> j;
  NahmState s = NahmState::zero(g);
  auto read = [&](const char* key, LieVector& dst) {
    if (!j.contains(key)) return;
    const auto& arr = j.at(key);
    if (static_cast<int>(arr.size()) != g.dim())
      throw std::invalid_argument(std::string("init field ") + key + " has wrong length");
    for (int k = 0; k < g.dim(); ++k) dst[k] = arr[k].get<double>();
  };
  read("T0", s.T0);
  read("T1", s.T1);
  read("T2", s.T2);
  read("T3", s.T3);
  return s;
}

std::string trajectory_csv(const NahmTrajectory& traj) {
  const LieAlgebra& g = *traj.algebra;
  std::string out = "t";
  for (int comp = 0; comp < 4; ++comp)
    for (int k = 0; k < g.dim(); ++k)
      out += ",T" + std::to_string(comp) + "_" + std::to_string(k);
  out += ",conserved\r\n";
  for (int i = 0; i < static_cast<int>(traj.states.size()); ++i) {
    const NahmState& s = traj.states[i];
    out += format_double(traj.time(i));
    const LieVector* comps[4] = {&s.T0, &s.T1, &s.T2, &s.T3};
    for (const LieVector* c : comps)
      for (double v : *c) out += "," + format_double(v);
    out += "," + format_double(conserved(g, s)) + "\r\n";
  }
  return out;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"splitgeom: split-quaternion geometry and Nahm-Schmid toolkit"};
  app.set_version_flag("--version", SPLITGEOM_VERSION);
  app.set_config("--config", "", "TOML/INI config file; command-line flags win");
  app.require_subcommand(1);

  // verify-algebra
  auto* alg = app.add_subcommand("verify-algebra", "split-quaternion algebra invariant suite");
  std::uint64_t alg_seed = 0;
  int alg_pairs = 10000;
  bool alg_inject = false;
  std::string alg_out;
  alg->add_option("--seed", alg_seed, "random seed");
  alg->add_option("--pairs", alg_pairs, "random pairs for the norm check")
      ->check(CLI::PositiveNumber);
  alg->add_flag("--inject-sign-flip", alg_inject,
                "negative control: flip the i*s product entry; the suite must fail");
  alg->add_option("--out", alg_out, "JSON report path (default stdout)");

  // flat-obstruction
  auto* flat = app.add_subcommand("flat-obstruction",
                                  "per-point rho0 / ||rho2|| sweep on the flat model");
  int flat_n = 1, flat_points = 1000;
  std::uint64_t flat_seed = 0;
  std::string flat_out;
  flat->add_option("--n", flat_n, "module index: points live in B^(n+1)")
      ->check(CLI::NonNegativeNumber);
  flat->add_option("--points", flat_points, "number of sample points")->check(CLI::PositiveNumber);
  flat->add_option("--seed", flat_seed, "random seed");
  flat->add_option("--out", flat_out, "CSV path (default stdout)");

  // verify-sasakian
  auto* sas = app.add_subcommand("verify-sasakian",
                                 "split 3-Sasakian verification on the unit pseudo-sphere");
  int sas_n = 1, sas_points = 100;
  std::uint64_t sas_seed = 0;
  std::string sas_out;
  sas->add_option("--n", sas_n, "module index: the sphere sits in B^(n+1)")
      ->check(CLI::PositiveNumber);
  sas->add_option("--points", sas_points, "number of sphere points")->check(CLI::PositiveNumber);
  sas->add_option("--seed", sas_seed, "random seed");
  sas->add_option("--out", sas_out, "JSON report path (default stdout)");

  // calibrate
  auto* calib = app.add_subcommand("calibrate", "emit the calibrated sign constants");
  std::string calib_out;
  calib->add_option("--out", calib_out, "JSON path (default stdout)");

  // nahm
  auto* nahm = app.add_subcommand("nahm", "Nahm-Schmid runs and scans");
  nahm->require_subcommand(1);

  auto* run = nahm->add_subcommand("run", "integrate from an initial state and emit CSV");
  std::string run_algebra = "su2", run_init, run_out;
  int run_steps = 1000;
  double run_length = 1.0;
  bool run_reduced = false;
  run->add_option("--algebra", run_algebra, "'su2' or a structure-constant JSON file");
  run->add_option("--init", run_init, "initial state JSON {\"T0\":[...],...}")->required();
  run->add_option("--steps", run_steps, "RK4 steps")->check(CLI::Range(2, 100000000));
  run->add_option("--length", run_length, "integration length")->check(CLI::PositiveNumber);
  run->add_flag("--reduced", run_reduced, "drop the [T0, .] terms");
  run->add_option("--out", run_out, "CSV path (default stdout)");

  auto* scan = nahm->add_subcommand("degeneracy-scan",
                                    "scan det / min singular value of the endpoint map");
  std::string scan_family = "const-t2", scan_algebra = "su2", scan_out, scan_roots_out;
  double scan_from = 0.5, scan_to = 4.0;
  int scan_samples = 100, scan_steps = 1000;
  scan->add_option("--family", scan_family, "const-t1 or const-t2")
      ->check(CLI::IsMember({"const-t1", "const-t2"}));
  scan->add_option("--algebra", scan_algebra, "'su2' or a structure-constant JSON file");
  scan->add_option("--from", scan_from, "parameter range start");
  scan->add_option("--to", scan_to, "parameter range end");
  scan->add_option("--samples", scan_samples, "grid samples")->check(CLI::Range(2, 10000000));
  scan->add_option("--steps", scan_steps, "RK4 steps per trajectory")
      ->check(CLI::Range(8, 100000000));
  scan->add_option("--out", scan_out, "CSV path (default stdout)");
  scan->add_option("--roots-out", scan_roots_out, "refined-roots CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (alg->parsed()) {
    SuiteReport rep = algebra_suite(alg_seed, alg_pairs, alg_inject);
    emit_report(rep, json{{"seed", alg_seed}, {"pairs", alg_pairs}, {"inject", alg_inject}},
                alg_out);
    return rep.pass() ? 0 : 1;
  }

  if (flat->parsed()) {
    auto rows = flat_obstruction_rows(flat_n, flat_points, flat_seed);
    std::string csv = "index,metric_hh,rho0,rho0_err,rho2_maxnorm\r\n";
    bool ok = true;
    for (const auto& r : rows) {
      csv += std::to_string(r.index) + "," + format_double(r.metric_hh) + "," +
             format_double(r.rho0) + "," + format_double(r.rho0_err) + "," +
             format_double(r.rho2_maxnorm) + "\r\n";
      ok = ok && r.rho2_maxnorm <= 1e-10 && r.rho0_err <= 1e-12;
    }
    write_text(flat_out, csv);
    return ok ? 0 : 1;
  }

  if (sas->parsed()) {
    SuiteReport rep = sasakian_suite(sas_n, sas_points, sas_seed);
    emit_report(rep, json{{"n", sas_n}, {"points", sas_points}, {"seed", sas_seed}}, sas_out);
    return rep.pass() ? 0 : 1;
  }

  if (calib->parsed()) {
    json j{{"tool", "splitgeom"},
           {"version", SPLITGEOM_VERSION},
           {"calibration", calibration_json(calibration())}};
    write_text(calib_out, j.dump(2) + "\n");
    return 0;
  }

  if (run->parsed()) {
    LieAlgebra g = load_algebra(run_algebra);
    NahmState init = load_init(g, run_init);
    NahmTrajectory traj = integrate(g, init, run_length, run_steps, run_reduced);
    write_text(run_out, trajectory_csv(traj));
    return 0;
  }

  if (scan->parsed()) {
    LieAlgebra g = load_algebra(scan_algebra);
    ScanFamily family = scan_family == "const-t1" ? ScanFamily::ConstT1 : ScanFamily::ConstT2;
    ScanResult result = degeneracy_scan(g, family, scan_from, scan_to, scan_samples, scan_steps);
    std::string csv = "param,det,min_singular_value\r\n";
    for (const auto& s : result.samples)
      csv += format_double(s.param) + "," + format_double(s.det) + "," +
             format_double(s.min_singular_value) + "\r\n";
    write_text(scan_out, csv);
    std::string roots = "root\r\n";
    for (double r : result.roots) roots += format_double(r) + "\r\n";
    if (!scan_roots_out.empty()) write_text(scan_roots_out, roots);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
