// blaschke-verify: command-line front end over the C API.
// stdout carries the report JSON only; diagnostics go to stderr.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "blaschke/blaschke.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const char* text) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot write " + path);
  out << text;
}

bool input_error(bv_status s) {
  switch (s) {
    case BV_ERR_INVALID_ARGUMENT:
    case BV_ERR_OFF_CIRCLE:
    case BV_ERR_NON_ATOMIC_MEASURE:
    case BV_ERR_EMPTY_MEASURE:
    case BV_ERR_NOT_NORMALIZED:
    case BV_ERR_NOT_A_CONTRACTION:
    case BV_ERR_DIMENSION_MISMATCH:
    case BV_ERR_ZERO_ON_BOUNDARY:
    case BV_ERR_PARSE:
      return true;
    default:
      return false;
  }
}

// Turns a failed status into an exit code, printing the message.
int report_error(bv_status s) {
  std::cerr << "error: " << bv_last_error_message() << "\n";
  return input_error(s) ? kExitInput : kExitFail;
}

struct Output {
  std::string json_path;
  std::string csv_path;
};

int emit(bv_report_set* set, const Output& out) {
  std::cout << bv_report_set_json(set) << "\n";
  if (!out.json_path.empty()) write_file(out.json_path, bv_report_set_json(set));
  if (!out.csv_path.empty()) write_file(out.csv_path, bv_report_set_csv(set));
  std::size_t failed = 0;
  for (std::size_t i = 0; i < bv_report_set_size(set); ++i) {
    bv_report_info info{};
    bv_report_set_get(set, i, &info);
    if (!info.pass) {
      ++failed;
      std::cerr << "FAIL " << info.name << " lhs=" << info.lhs << " rhs=" << info.rhs << " slack=" << info.slack
                << "\n";
    }
  }
  std::cerr << bv_report_set_size(set) << " checks, " << failed << " failed\n";
  const bool pass = bv_report_set_all_passed(set) != 0;
  bv_report_set_free(set);
  return pass ? kExitPass : kExitFail;
}

template <class F>
int finish(bv_status s, bv_report_set* set, const Output& out, F cleanup) {
  cleanup();
  if (s != BV_OK) return report_error(s);
  return emit(set, out);
}

std::pair<std::string, double> parse_tol(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw BadInput("--tol expects NAME=VALUE, got '" + spec + "'");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(spec.substr(eq + 1), &used);
  } catch (const std::exception&) {
    throw BadInput("bad tolerance value in '" + spec + "'");
  }
  if (used != spec.size() - eq - 1) throw BadInput("bad tolerance value in '" + spec + "'");
  return {spec.substr(0, eq), v};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for Blaschke-type bounds on zeros of Cauchy transforms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bv_version()));

  Output out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--json-out", out.json_path, "Also write the report JSON here");
    sub->add_option("--csv-out", out.csv_path, "Write one CSV row per check here");
  };

  std::string path;
  std::string mode = "shifted";
  auto* verify_measure = app.add_subcommand("verify-measure", "Check a measure file (theorem or corollary bound)");
  verify_measure->add_option("path", path, "Measure JSON")->required();
  verify_measure->add_option("--mode", mode, "direct: h = K mu; shifted: h = 1 + w K sigma")
      ->check(CLI::IsMember({"direct", "shifted"}));
  add_output(verify_measure);

  auto* verify_system = app.add_subcommand("verify-system", "Check a contraction system file");
  verify_system->add_option("path", path, "System JSON {A, phi, psi}")->required();
  add_output(verify_system);

  std::string which;
  std::uint64_t seed = 42;
  int instances = 100;
  int max_atoms = 8;
  int max_dim = 10;
  std::vector<std::string> tols;
  auto* random_suite = app.add_subcommand("random-suite", "Run a seeded randomized suite");
  random_suite->add_option("which", which, "thm1, thm2, thm3, schur, dilation, realline or all")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "schur", "dilation", "realline", "all"}));
  random_suite->add_option("--seed", seed, "Seed of the instance stream");
  random_suite->add_option("--instances", instances, "Instances per suite")->check(CLI::PositiveNumber);
  random_suite->add_option("--max-atoms", max_atoms, "Maximum atoms per measure")->check(CLI::PositiveNumber);
  random_suite->add_option("--max-dim", max_dim, "Maximum matrix dimension")->check(CLI::PositiveNumber);
  random_suite->add_option("--tol", tols, "Tolerance override NAME=VAL (repeatable)");
  add_output(random_suite);

  int order = 1;
  auto* dilate = app.add_subcommand("dilate", "Unitary dilation round trip of a system");
  dilate->add_option("path", path, "System JSON {A, phi, psi}")->required();
  dilate->add_option("--order", order, "Dilation order N")->check(CLI::PositiveNumber);
  add_output(dilate);

  auto* jensen = app.add_subcommand("jensen", "Jensen / H1 chain for a polynomial with h(0) = 1");
  jensen->add_option("path", path, "JSON {coeffs: [...]}")->required();
  add_output(jensen);

  auto* schur = app.add_subcommand("schur-chain", "Schur-basis chain for a pair (A, L)");
  schur->add_option("path", path, "JSON {A, L}")->required();
  add_output(schur);

  auto* real_line = app.add_subcommand("real-line", "Real-line variant for atoms on the line");
  real_line->add_option("path", path, "JSON {atoms: [{s, weight}]}")->required();
  add_output(real_line);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    bv_report_set* set = nullptr;
    if (verify_measure->parsed()) {
      bv_measure* m = nullptr;
      if (bv_status s = bv_measure_from_json(slurp(path).c_str(), &m); s != BV_OK) return report_error(s);
      const bv_status s = bv_verify_measure(m, mode == "direct" ? BV_MODE_DIRECT : BV_MODE_SHIFTED, &set);
      return finish(s, set, out, [&] { bv_measure_free(m); });
    }
    if (verify_system->parsed() || dilate->parsed()) {
      bv_system* sys = nullptr;
      if (bv_status s = bv_system_from_json(slurp(path).c_str(), &sys); s != BV_OK) return report_error(s);
      const bv_status s = verify_system->parsed() ? bv_verify_system(sys, &set) : bv_dilate(sys, order, &set);
      return finish(s, set, out, [&] { bv_system_free(sys); });
    }
    if (random_suite->parsed()) {
      bv_suite_config* cfg = nullptr;
      if (bv_status s = bv_suite_config_create(&cfg); s != BV_OK) return report_error(s);
      bv_status s = bv_suite_config_set_seed(cfg, seed);
      if (s == BV_OK) s = bv_suite_config_set_instances(cfg, instances);
      if (s == BV_OK) s = bv_suite_config_set_max_atoms(cfg, max_atoms);
      if (s == BV_OK) s = bv_suite_config_set_max_dim(cfg, max_dim);
      for (const std::string& t : tols) {
        if (s != BV_OK) break;
        const auto [name, value] = parse_tol(t);
        s = bv_suite_config_set_tolerance(cfg, name.c_str(), value);
      }
      if (s == BV_OK) s = bv_random_suite(cfg, which.c_str(), &set);
      return finish(s, set, out, [&] { bv_suite_config_free(cfg); });
    }
    const std::string text = slurp(path);
    bv_status s = BV_OK;
    if (jensen->parsed()) s = bv_jensen(text.c_str(), &set);
    if (schur->parsed()) s = bv_schur_chain(text.c_str(), &set);
    if (real_line->parsed()) s = bv_real_line(text.c_str(), &set);
    return finish(s, set, out, [] {});
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
