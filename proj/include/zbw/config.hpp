#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "zbw/constants.hpp"
#include "zbw/dirac_packet.hpp"

namespace zbw {

enum class Scenario { ZbwTraj, Moment, NcMoment, Landau, GrapheneTraj, Verify };

const char* scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_number(line) {}
  int line_number;
};

struct TimeGrid {
  double start = 0.0;
  double end = 0.0;
  int samples = 1;
};

/// Fully typed scenario configuration with defaults filled in. Produced from
/// a flat `key = value` document; dotted prefixes namespace the modules and
/// unknown keys are rejected.
struct ScenarioConfig {
  Scenario scenario = Scenario::Verify;
  TimeGrid time_grid;
  std::uint64_t seed = 20219;
  std::string output_dir = ".";
  bool si_output = false;  // default: natural frame output
  PhysicalConstants constants = load_constants();

  // zbw-traj
  double zbw_phi0 = 0.0;
  double zbw_r_o = 137.035999;  // lambda_c units; Bohr-radius scale default
  Eigen::Vector3d zbw_theta = Eigen::Vector3d::Zero();

  // moment
  Spin moment_spin = Spin::Up;

  // nc-moment
  Spin ncm_spin = Spin::Up;
  Eigen::Vector3d ncm_theta = Eigen::Vector3d(0.0, 0.0, 1.0);  // lambda_c^2 units
  double ncm_r_o = 137.035999;

  // landau
  double landau_b3 = 1.0;    // T
  double landau_p3 = 0.0;    // kg m/s
  int landau_k_max = 3;
  int landau_n_max = 6;
  double landau_charge_sign = -1.0;  // electron
  double landau_eta3 = 0.0;          // optional NC companion table, kg^2 m^2/s^2

  // graphene
  bool graphene_si = false;
  double graphene_L_over_ell = 4.0;
  double graphene_k0x_ell = 1.0;
  double graphene_b_eta = 8.6e-14;  // T, SI mode
  double graphene_ell_si = 0.0;     // m, SI mode
  double graphene_k0x_si = 0.0;     // 1/m, SI mode
  double graphene_u = 0.7071067811865476;
  double graphene_d = 0.7071067811865476;
  int graphene_m_max = 32;
  int graphene_m0 = -1;  // >= 0 selects a single-level trajectory

  // verify
  std::string verify_module = "all";
};

/// Parses a flat key = value document (UTF-8, '#' comments) into a typed
/// config for the named scenario. Throws ConfigError with a line number on
/// malformed input, unknown keys, type mismatches or invariant violations.
ScenarioConfig parse_config(const std::string& text, const std::string& scenario);

}  // namespace zbw
