#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zbw/config.hpp"
#include "zbw/quadrature.hpp"
#include "zbw/scenarios.hpp"
#include "zbw/verify.hpp"

namespace {

// exit codes: 0 success, 1 check failure, 2 config error, 3 computation error
constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kConfigError = 2;
constexpr int kComputationError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zbw::ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::string frame = "natural";
  long seed = -1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "flat key = value configuration file");
  cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--frame", opts.frame, "output unit frame: SI or natural")
      ->check(CLI::IsMember({"SI", "natural"}))
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "override the config seed");
}

int run_one(const std::string& scenario, const CommonOpts& opts) {
  const std::string text =
      opts.config_path.empty() ? std::string() : read_file(opts.config_path);
  zbw::ScenarioConfig cfg = zbw::parse_config(text, scenario);
  cfg.output_dir = opts.out_dir;
  cfg.si_output = opts.frame == "SI";
  if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);

  const zbw::ScenarioArtifacts art = zbw::run_scenario(cfg);
  if (!art.csv_path.empty()) std::cout << "wrote " << art.csv_path << "\n";
  std::cout << "wrote " << art.json_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zbwlab: trembling-motion observables in commutative and "
               "noncommutative phase space"};
  app.require_subcommand(1);

  CommonOpts opts;
  const char* scenarios[] = {"zbw-traj", "moment", "nc-moment", "landau",
                             "graphene-traj"};
  for (const char* name : scenarios) {
    CLI::App* cmd = app.add_subcommand(name, std::string("run the ") + name +
                                                 " scenario and emit CSV + JSON");
    add_common(cmd, opts);
  }

  CLI::App* verify = app.add_subcommand("verify", "run the oracle suite");
  std::string module = "all";
  std::string json_path;
  verify->add_option("--module", module, "restrict to one module")
      ->capture_default_str();
  verify->add_option("--json", json_path, "write the machine-readable report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      const zbw::VerifyReport report = zbw::run_verify(module);
      std::cout << zbw::verify_report_text(report);
      if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << zbw::verify_report_json(report);
      }
      return report.all_passed() ? kOk : kCheckFailure;
    }
    for (const char* name : scenarios)
      if (app.get_subcommand(name)->parsed()) return run_one(name, opts);
  } catch (const zbw::ConfigError& err) {
    std::cerr << "config error";
    if (err.line_number > 0) std::cerr << " (line " << err.line_number << ")";
    std::cerr << ": " << err.what() << "\n";
    return kConfigError;
  } catch (const zbw::QuadratureError& err) {
    std::cerr << "computation error: " << err.what()
              << " (best estimate " << err.best_estimate.value << ")\n";
    return kComputationError;
  } catch (const std::exception& err) {
    std::cerr << "computation error: " << err.what() << "\n";
    return kComputationError;
  }
  return kConfigError;
}
