#include "zbw/scenarios.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "zbw/graphene.hpp"
#include "zbw/io_util.hpp"
#include "zbw/nc_momentum_landau.hpp"
#include "zbw/nc_space_moment.hpp"
#include "zbw/time_series.hpp"
#include "zbw/verify.hpp"
#include "zbw/zbw_commutative.hpp"

namespace zbw {

namespace {

using nlohmann::json;

std::vector<double> grid_points(const TimeGrid& g) {
  std::vector<double> t(static_cast<std::size_t>(g.samples));
  if (g.samples == 1) {
    t[0] = g.start;
    return t;
  }
  const double step = (g.end - g.start) / (g.samples - 1);
  for (int i = 0; i < g.samples; ++i) t[static_cast<std::size_t>(i)] = g.start + step * i;
  return t;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to '" + path + "'");
}

std::string csv_from_columns(const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string csv_from_time_series(const TimeSeries& ts) {
  std::vector<std::string> header{"t"};
  header.insert(header.end(), ts.channel_names.begin(), ts.channel_names.end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < ts.samples(); ++i) {
    std::vector<std::string> row{format_double(ts.t[i])};
    for (const auto& channel : ts.channels) row.push_back(format_double(channel[i]));
    rows.push_back(std::move(row));
  }
  return csv_from_columns(header, rows);
}

json units_json(const TimeSeries& ts) {
  json j;
  j["t"] = ts.time_unit;
  for (std::size_t c = 0; c < ts.channel_names.size(); ++c)
    j[ts.channel_names[c]] = ts.channel_units[c];
  return j;
}

json constants_json(const PhysicalConstants& k) {
  json j;
  j["hbar"] = k.hbar;
  j["c"] = k.c;
  j["m_e"] = k.m_e;
  j["e"] = k.e;
  j["alpha_fsc"] = k.alpha_fsc;
  j["gamma_euler"] = k.gamma_euler;
  j["lambda_c"] = k.lambda_c;
  j["v_f_default"] = k.v_f_default;
  return j;
}

json common_sidecar(const ScenarioConfig& cfg, const char* frame) {
  json j;
  j["library_version"] = "0.1.0";
  j["scenario"] = scenario_name(cfg.scenario);
  j["frame"] = frame;
  j["seed"] = cfg.seed;
  j["constants"] = constants_json(cfg.constants);
  json grid;
  grid["start"] = cfg.time_grid.start;
  grid["end"] = cfg.time_grid.end;
  grid["samples"] = cfg.time_grid.samples;
  j["time_grid"] = grid;
  return j;
}

struct Emitted {
  std::string csv;
  json sidecar;
};

Emitted emit_zbw_traj(const ScenarioConfig& cfg) {
  const PhysicalConstants& k = cfg.constants;
  const double t_to_natural =
      cfg.si_output ? 1.0 / si_unit(UnitFrame::dirac_natural(), Dimension::Time, k) : 1.0;
  const double len_out = cfg.si_output ? k.lambda_c : 1.0;

  TimeSeries ts;
  ts.frame = cfg.si_output ? FrameKind::SI : FrameKind::DiracNatural;
  ts.time_unit = cfg.si_output ? "s" : "hbar/(m_e c^2)";
  const std::string len_unit = cfg.si_output ? "m" : "lambda_c";
  for (const char* name : {"x", "y", "z"}) ts.add_channel(name, len_unit);
  for (const double t : grid_points(cfg.time_grid)) {
    const ZbwTrajectoryPoint pt = trajectory_fixed_phi(cfg.zbw_phi0, t * t_to_natural);
    ts.t.push_back(t);
    ts.channels[0].push_back(pt.x * len_out);
    ts.channels[1].push_back(pt.y * len_out);
    ts.channels[2].push_back(pt.z * len_out);
  }

  Emitted e;
  e.csv = csv_from_time_series(ts);
  e.sidecar = common_sidecar(cfg, cfg.si_output ? "SI" : "DiracNatural");
  e.sidecar["units"] = units_json(ts);
  e.sidecar["phi0"] = cfg.zbw_phi0;
  e.sidecar["r_o_lambda_c"] = cfg.zbw_r_o;
  e.sidecar["amplitude_I"] = amplitude_I(cfg.zbw_r_o);
  e.sidecar["amplitude_J"] = amplitude_J();
  e.sidecar["circle_radius"] = 0.5 * len_out;
  e.sidecar["omega_zbw_si"] = zbw_frequency(k);
  e.sidecar["theta"] = {cfg.zbw_theta[0], cfg.zbw_theta[1], cfg.zbw_theta[2]};
  e.sidecar["theta_note"] =
      "position expectations are unchanged by space noncommutativity: the Bopp "
      "correction -theta_ij <p_j>/(2 hbar) vanishes because <p> = 0";
  return e;
}

Emitted emit_moment(const ScenarioConfig& cfg) {
  const PhysicalConstants& k = cfg.constants;
  const double t_to_natural =
      cfg.si_output ? 1.0 / si_unit(UnitFrame::dirac_natural(), Dimension::Time, k) : 1.0;
  // moments are charge x length (Gaussian convention); the SI scale is |e| lambda_c
  const double mu_out = cfg.si_output ? std::abs(k.e) * k.lambda_c : 1.0;

  TimeSeries ts;
  ts.frame = cfg.si_output ? FrameKind::SI : FrameKind::DiracNatural;
  ts.time_unit = cfg.si_output ? "s" : "hbar/(m_e c^2)";
  const std::string mu_unit = cfg.si_output ? "C m" : "|e| lambda_c";
  for (const char* name : {"mu_x", "mu_y", "mu_z"}) ts.add_channel(name, mu_unit);
  for (const double t : grid_points(cfg.time_grid)) {
    const Eigen::Vector3d mu = magnetic_moment(cfg.moment_spin, t * t_to_natural);
    ts.t.push_back(t);
    for (int i = 0; i < 3; ++i)
      ts.channels[static_cast<std::size_t>(i)].push_back(mu[i] * mu_out);
  }

  Emitted e;
  e.csv = csv_from_time_series(ts);
  e.sidecar = common_sidecar(cfg, cfg.si_output ? "SI" : "DiracNatural");
  e.sidecar["units"] = units_json(ts);
  e.sidecar["spin"] = cfg.moment_spin == Spin::Up ? "up" : "down";
  e.sidecar["moment_unit"] = cfg.si_output ? "C m (charge x length)" : "|e| lambda_c";
  e.sidecar["time_average_z"] =
      (cfg.moment_spin == Spin::Up ? -0.5 : 0.5) * mu_out;
  e.sidecar["omega_zbw_si"] = zbw_frequency(k);
  return e;
}

Emitted emit_nc_moment(const ScenarioConfig& cfg) {
  const PhysicalConstants& k = cfg.constants;
  const double t_to_natural =
      cfg.si_output ? 1.0 / si_unit(UnitFrame::dirac_natural(), Dimension::Time, k) : 1.0;
  const double mu_out = cfg.si_output ? std::abs(k.e) * k.lambda_c : 1.0;

  TimeSeries ts;
  ts.frame = cfg.si_output ? FrameKind::SI : FrameKind::DiracNatural;
  ts.time_unit = cfg.si_output ? "s" : "hbar/(m_e c^2)";
  const std::string mu_unit = cfg.si_output ? "C m" : "|e| lambda_c";
  for (const char* name : {"mu_c_x", "mu_c_y", "mu_c_z", "mu_nc_x", "mu_nc_y",
                           "mu_nc_z", "mu_tot_x", "mu_tot_y", "mu_tot_z"})
    ts.add_channel(name, mu_unit);
  for (const double t : grid_points(cfg.time_grid)) {
    const MomentResult m =
        moment_with_nc(cfg.ncm_spin, cfg.ncm_theta, t * t_to_natural, cfg.ncm_r_o);
    ts.t.push_back(t);
    std::size_t c = 0;
    for (const auto* v : {&m.commutative, &m.nc_correction, &m.total})
      for (int i = 0; i < 3; ++i) ts.channels[c++].push_back((*v)[i] * mu_out);
  }

  Emitted e;
  e.csv = csv_from_time_series(ts);
  e.sidecar = common_sidecar(cfg, cfg.si_output ? "SI" : "DiracNatural");
  e.sidecar["units"] = units_json(ts);
  e.sidecar["spin"] = cfg.ncm_spin == Spin::Up ? "up" : "down";
  e.sidecar["theta_lambda_c2"] = {cfg.ncm_theta[0], cfg.ncm_theta[1], cfg.ncm_theta[2]};
  e.sidecar["r_o_lambda_c"] = cfg.ncm_r_o;
  e.sidecar["moment_unit"] = cfg.si_output ? "C m (charge x length)" : "|e| lambda_c";

  // one-loop comparison table, Dirac natural units
  const Eigen::Vector3d loop = oneloop_reference(cfg.ncm_theta, cfg.ncm_spin, k);
  const Eigen::Vector3d loop_spin =
      oneloop_reference(Eigen::Vector3d::Zero(), cfg.ncm_spin, k);
  json cmp;
  cmp["oneloop_total"] = {loop[0], loop[1], loop[2]};
  cmp["oneloop_gyration_z"] = loop_spin[2];
  cmp["oneloop_theta_term"] = {loop[0] - loop_spin[0], loop[1] - loop_spin[1],
                               loop[2] - loop_spin[2]};
  const Eigen::Vector3d leading_avg =
      nc_moment(cfg.ncm_spin, cfg.ncm_theta, M_PI / 2.0, cfg.ncm_r_o);  // 1 - cos = 1
  cmp["leading_order_time_average"] = {leading_avg[0], leading_avg[1], leading_avg[2]};
  cmp["magnitude_ratio_leading_over_oneloop"] = leading_vs_oneloop_ratio(cfg.ncm_r_o, k);
  cmp["units_note"] =
      "both entries in Dirac natural units (|e| lambda_c); the printed forms are "
      "not dimensionally parallel in one unit system, so only this bookkeeping "
      "is reported";
  e.sidecar["oneloop_comparison"] = cmp;
  return e;
}

Emitted emit_landau(const ScenarioConfig& cfg) {
  const PhysicalConstants& k = cfg.constants;
  const double mc2 = k.m_e * k.c * k.c;
  const double e_out = cfg.si_output ? 1.0 : 1.0 / mc2;
  const double charge = cfg.landau_charge_sign * std::abs(k.e);
  const double eta3 =
      cfg.landau_eta3 != 0.0 ? cfg.landau_eta3 : std::abs(k.e) * k.hbar * cfg.landau_b3;

  std::vector<std::vector<std::string>> rows;
  for (int kk = 0; kk <= cfg.landau_k_max; ++kk) {
    const LandauLevel level =
        landau_level(kk, cfg.landau_p3, cfg.landau_b3, charge, k, cfg.landau_n_max);
    const double e_nc = nc_landau_energy_k(eta3, cfg.landau_p3, kk, k);
    std::ostringstream states;
    for (std::size_t i = 0; i < level.degenerate_states.size(); ++i) {
      const auto& st = level.degenerate_states[i];
      if (i) states << ';';
      states << '(' << st.n << ',' << st.l << ',' << (st.s3 > 0 ? "up" : "down") << ')';
    }
    rows.push_back({std::to_string(kk), format_double(level.energy * e_out),
                    format_double(e_nc * e_out),
                    std::to_string(level.degenerate_states.size()),
                    "\"" + states.str() + "\""});
  }

  Emitted e;
  e.csv = csv_from_columns({"k", "energy", "nc_energy", "degeneracy", "states"}, rows);
  e.sidecar = common_sidecar(cfg, cfg.si_output ? "SI" : "DiracNatural");
  e.sidecar["B3_tesla"] = cfg.landau_b3;
  e.sidecar["p3_si"] = cfg.landau_p3;
  e.sidecar["charge"] = cfg.landau_charge_sign < 0 ? "electron" : "positron";
  e.sidecar["n_max"] = cfg.landau_n_max;
  e.sidecar["eta3_si"] = eta3;
  e.sidecar["b_eta_magnitude_tesla"] = eta3 / (std::abs(k.e) * k.hbar);
  e.sidecar["magnetic_radius_m"] = magnetic_radius(cfg.landau_b3, k);
  e.sidecar["energy_unit"] = cfg.si_output ? "J" : "m_e c^2";
  e.sidecar["nc_energy_note"] =
      "nc_energy is the momentum-NC spectrum for eta3 (default: the eta "
      "equivalent of B3); it carries no electric charge";
  return e;
}

Emitted emit_graphene(const ScenarioConfig& cfg) {
  const PhysicalConstants& k = cfg.constants;
  GrapheneConfig gc =
      cfg.graphene_si
          ? GrapheneConfig::si(cfg.graphene_b_eta, cfg.graphene_ell_si,
                               cfg.graphene_k0x_si, k.v_f_default, cfg.graphene_m_max, k)
          : GrapheneConfig::natural(cfg.graphene_L_over_ell, cfg.graphene_k0x_ell,
                                    cfg.graphene_m_max, cfg.graphene_u, cfg.graphene_d);
  gc.u = cfg.graphene_u;
  gc.d = cfg.graphene_d;
  validate(gc);
  if (cfg.si_output != cfg.graphene_si)
    throw ConfigError(
        "graphene frame mismatch: SI output needs the SI keys (graphene.B_eta/ell/k0x) "
        "and natural output the natural ones");

  const SeriesCoefficients sc = series_coefficients(gc);
  TimeSeries ts;
  ts.frame = cfg.graphene_si ? FrameKind::SI : FrameKind::GrapheneNatural;
  ts.time_unit = cfg.graphene_si ? "s" : "1/Omega";
  const std::string len_unit = cfg.graphene_si ? "m" : "L";
  const std::string vel_unit = cfg.graphene_si ? "m/s" : "L Omega";
  ts.add_channel("r1", len_unit);
  ts.add_channel("r2", len_unit);
  ts.add_channel("v1", vel_unit);
  ts.add_channel("v2", vel_unit);
  for (const double t : grid_points(cfg.time_grid)) {
    PlanarSample r, v;
    if (cfg.graphene_m0 >= 0) {
      r = single_level_position(sc, cfg.graphene_m0, t);
      const int m0 = cfg.graphene_m0;
      v.c1 = sc.v_f * (sc.alpha_plus[m0] * std::cos(sc.omega_cyc[m0] * t) +
                       sc.alpha_minus[m0] * std::cos(sc.omega_zbw[m0] * t));
      v.c2 = sc.v_f * (sc.beta_plus[m0] * std::sin(sc.omega_cyc[m0] * t) +
                       sc.beta_minus[m0] * std::sin(sc.omega_zbw[m0] * t));
    } else {
      r = position_series(sc, t);
      v = velocity_series(sc, t);
    }
    ts.t.push_back(t);
    ts.channels[0].push_back(r.c1);
    ts.channels[1].push_back(r.c2);
    ts.channels[2].push_back(v.c1);
    ts.channels[3].push_back(v.c2);
  }

  Emitted e;
  e.csv = csv_from_time_series(ts);
  e.sidecar = common_sidecar(cfg, cfg.graphene_si ? "SI" : "GrapheneNatural");
  e.sidecar["units"] = units_json(ts);
  e.sidecar["omega"] = sc.omega;
  e.sidecar["magnetic_radius"] = gc.magnetic_radius();
  e.sidecar["g_factor"] = gc.g_factor();
  e.sidecar["ell"] = gc.ell;
  e.sidecar["k0x"] = gc.k0x;
  e.sidecar["v_f"] = gc.v_f;
  e.sidecar["u"] = gc.u;
  e.sidecar["d"] = gc.d;
  e.sidecar["m_max"] = gc.m_max;
  e.sidecar["single_level_m0"] = cfg.graphene_m0;

  json table;
  auto to_array = [](const Eigen::VectorXd& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
  };
  table["alpha_plus"] = to_array(sc.alpha_plus);
  table["alpha_minus"] = to_array(sc.alpha_minus);
  table["beta_plus"] = to_array(sc.beta_plus);
  table["beta_minus"] = to_array(sc.beta_minus);
  table["omega_cyc"] = to_array(sc.omega_cyc);
  table["omega_zbw"] = to_array(sc.omega_zbw);
  table["v_diag"] = to_array(sc.v_diag);
  e.sidecar["coefficients"] = table;

  const PlanarSample probe = position_series(sc, 0.0);
  e.sidecar["truncation_tail_r1"] = probe.tail1;
  e.sidecar["truncation_tail_r2"] = probe.tail2;

  const double v00 = sc.v_diag[0];
  const double v01 = overlap(0, 1, gc);
  e.sidecar["v00_quadrature"] = v00;
  e.sidecar["v01_quadrature"] = v01;
  e.sidecar["v00_printed_form"] = printed_v00(gc);
  e.sidecar["v01_over_v00_printed"] = printed_v01_over_v00(gc);
  e.sidecar["zero_level_amplitudes"] = {4.0 * gc.v_f * v00 / sc.omega,
                                        4.0 * gc.v_f * v01 / sc.omega};
  const auto rough = rough_amplitude_estimates(gc);
  e.sidecar["rough_amplitude_estimates"] = {rough.first, rough.second};
  return e;
}

}  // namespace

ScenarioArtifacts run_scenario(const ScenarioConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  ScenarioArtifacts art;

  if (cfg.scenario == Scenario::Verify) {
    const VerifyReport report = run_verify(cfg.verify_module);
    art.json_path = (fs::path(cfg.output_dir) / "verify_report.json").string();
    art.json_bytes = verify_report_json(report);
    art.verify_passed = report.all_passed();
    write_file(art.json_path, art.json_bytes);
    return art;
  }

  Emitted e;
  switch (cfg.scenario) {
    case Scenario::ZbwTraj: e = emit_zbw_traj(cfg); break;
    case Scenario::Moment: e = emit_moment(cfg); break;
    case Scenario::NcMoment: e = emit_nc_moment(cfg); break;
    case Scenario::Landau: e = emit_landau(cfg); break;
    case Scenario::GrapheneTraj: e = emit_graphene(cfg); break;
    case Scenario::Verify: break;  // handled above
  }

  const std::string stem = scenario_name(cfg.scenario);
  art.csv_path = (fs::path(cfg.output_dir) / (stem + std::string(".csv"))).string();
  art.json_path = (fs::path(cfg.output_dir) / (stem + std::string(".json"))).string();
  art.csv_bytes = e.csv;
  art.json_bytes = e.sidecar.dump(2) + "\n";
  write_file(art.csv_path, art.csv_bytes);
  write_file(art.json_path, art.json_bytes);
  return art;
}

}  // namespace zbw
