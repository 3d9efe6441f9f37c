#include "zbw/config.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace zbw {

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::ZbwTraj: return "zbw-traj";
    case Scenario::Moment: return "moment";
    case Scenario::NcMoment: return "nc-moment";
    case Scenario::Landau: return "landau";
    case Scenario::GrapheneTraj: return "graphene-traj";
    case Scenario::Verify: return "verify";
  }
  return "unknown";
}

Scenario scenario_from_name(const std::string& name) {
  if (name == "zbw-traj") return Scenario::ZbwTraj;
  if (name == "moment") return Scenario::Moment;
  if (name == "nc-moment") return Scenario::NcMoment;
  if (name == "landau") return Scenario::Landau;
  if (name == "graphene-traj") return Scenario::GrapheneTraj;
  if (name == "verify") return Scenario::Verify;
  throw ConfigError("unknown scenario '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, const std::string& key, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size())
      throw ConfigError("trailing characters after number for key '" + key + "'", line);
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("expected a number for key '" + key + "', got '" + value + "'",
                      line);
  }
}

long parse_integer(const std::string& value, const std::string& key, int line) {
  const double v = parse_number(value, key, line);
  if (v != std::floor(v))
    throw ConfigError("expected an integer for key '" + key + "'", line);
  return static_cast<long>(v);
}

Spin parse_spin(const std::string& value, const std::string& key, int line) {
  if (value == "up") return Spin::Up;
  if (value == "down") return Spin::Down;
  throw ConfigError("expected 'up' or 'down' for key '" + key + "'", line);
}

struct KeyState {
  bool graphene_ell_set = false;
  bool graphene_ratio_set = false;
  bool graphene_b_eta_set = false;
  bool graphene_k0x_si_set = false;
  bool const_override = false;
  double hbar, c, m_e, v_f;
};

}  // namespace

ScenarioConfig parse_config(const std::string& text, const std::string& scenario) {
  ScenarioConfig cfg;
  cfg.scenario = scenario_from_name(scenario);

  // scenario-appropriate time-grid defaults (natural-frame periods)
  switch (cfg.scenario) {
    case Scenario::ZbwTraj:
      cfg.time_grid = {0.0, M_PI, 100};  // one trembling period, w_zbw = 2
      break;
    case Scenario::Moment:
    case Scenario::NcMoment:
      cfg.time_grid = {0.0, M_PI, 128};
      break;
    case Scenario::GrapheneTraj:
      cfg.time_grid = {0.0, 2.0 * M_PI, 256};  // one Omega period
      break;
    default:
      cfg.time_grid = {0.0, 0.0, 1};
      break;
  }

  KeyState state;
  const PhysicalConstants defaults = load_constants();
  state.hbar = defaults.hbar;
  state.c = defaults.c;
  state.m_e = defaults.m_e;
  state.v_f = defaults.v_f_default;

  using Setter = std::function<void(const std::string&, int)>;
  std::map<std::string, Setter> setters;

  // common keys
  setters["time.start"] = [&](const std::string& v, int ln) {
    cfg.time_grid.start = parse_number(v, "time.start", ln);
  };
  setters["time.end"] = [&](const std::string& v, int ln) {
    cfg.time_grid.end = parse_number(v, "time.end", ln);
  };
  setters["time.samples"] = [&](const std::string& v, int ln) {
    cfg.time_grid.samples = static_cast<int>(parse_integer(v, "time.samples", ln));
  };
  setters["seed"] = [&](const std::string& v, int ln) {
    cfg.seed = static_cast<std::uint64_t>(parse_integer(v, "seed", ln));
  };
  setters["const.hbar"] = [&](const std::string& v, int ln) {
    state.hbar = parse_number(v, "const.hbar", ln);
    state.const_override = true;
  };
  setters["const.c"] = [&](const std::string& v, int ln) {
    state.c = parse_number(v, "const.c", ln);
    state.const_override = true;
  };
  setters["const.m_e"] = [&](const std::string& v, int ln) {
    state.m_e = parse_number(v, "const.m_e", ln);
    state.const_override = true;
  };
  setters["const.v_f"] = [&](const std::string& v, int ln) {
    state.v_f = parse_number(v, "const.v_f", ln);
    state.const_override = true;
  };

  switch (cfg.scenario) {
    case Scenario::ZbwTraj:
      setters["zbw.phi0"] = [&](const std::string& v, int ln) {
        cfg.zbw_phi0 = parse_number(v, "zbw.phi0", ln);
      };
      setters["zbw.r_o"] = [&](const std::string& v, int ln) {
        cfg.zbw_r_o = parse_number(v, "zbw.r_o", ln);
      };
      for (int i = 0; i < 3; ++i) {
        setters["zbw.theta" + std::to_string(i + 1)] = [&cfg, i](const std::string& v,
                                                                 int ln) {
          cfg.zbw_theta[i] = parse_number(v, "zbw.theta", ln);
        };
      }
      break;
    case Scenario::Moment:
      setters["moment.spin"] = [&](const std::string& v, int ln) {
        cfg.moment_spin = parse_spin(v, "moment.spin", ln);
      };
      break;
    case Scenario::NcMoment:
      setters["ncmoment.spin"] = [&](const std::string& v, int ln) {
        cfg.ncm_spin = parse_spin(v, "ncmoment.spin", ln);
      };
      setters["ncmoment.r_o"] = [&](const std::string& v, int ln) {
        cfg.ncm_r_o = parse_number(v, "ncmoment.r_o", ln);
      };
      for (int i = 0; i < 3; ++i) {
        setters["ncmoment.theta" + std::to_string(i + 1)] =
            [&cfg, i](const std::string& v, int ln) {
              cfg.ncm_theta[i] = parse_number(v, "ncmoment.theta", ln);
            };
      }
      break;
    case Scenario::Landau:
      setters["landau.B3"] = [&](const std::string& v, int ln) {
        cfg.landau_b3 = parse_number(v, "landau.B3", ln);
      };
      setters["landau.p3"] = [&](const std::string& v, int ln) {
        cfg.landau_p3 = parse_number(v, "landau.p3", ln);
      };
      setters["landau.k_max"] = [&](const std::string& v, int ln) {
        cfg.landau_k_max = static_cast<int>(parse_integer(v, "landau.k_max", ln));
      };
      setters["landau.n_max"] = [&](const std::string& v, int ln) {
        cfg.landau_n_max = static_cast<int>(parse_integer(v, "landau.n_max", ln));
      };
      setters["landau.charge"] = [&](const std::string& v, int ln) {
        if (v == "electron") cfg.landau_charge_sign = -1.0;
        else if (v == "positron") cfg.landau_charge_sign = 1.0;
        else throw ConfigError("landau.charge must be 'electron' or 'positron'", ln);
      };
      setters["landau.eta3"] = [&](const std::string& v, int ln) {
        cfg.landau_eta3 = parse_number(v, "landau.eta3", ln);
      };
      break;
    case Scenario::GrapheneTraj:
      setters["graphene.L_over_ell"] = [&](const std::string& v, int ln) {
        cfg.graphene_L_over_ell = parse_number(v, "graphene.L_over_ell", ln);
        state.graphene_ratio_set = true;
      };
      setters["graphene.k0x_ell"] = [&](const std::string& v, int ln) {
        cfg.graphene_k0x_ell = parse_number(v, "graphene.k0x_ell", ln);
      };
      setters["graphene.ell"] = [&](const std::string& v, int ln) {
        cfg.graphene_ell_si = parse_number(v, "graphene.ell", ln);
        state.graphene_ell_set = true;
      };
      setters["graphene.B_eta"] = [&](const std::string& v, int ln) {
        cfg.graphene_b_eta = parse_number(v, "graphene.B_eta", ln);
        state.graphene_b_eta_set = true;
      };
      setters["graphene.k0x"] = [&](const std::string& v, int ln) {
        cfg.graphene_k0x_si = parse_number(v, "graphene.k0x", ln);
        state.graphene_k0x_si_set = true;
      };
      setters["graphene.u"] = [&](const std::string& v, int ln) {
        cfg.graphene_u = parse_number(v, "graphene.u", ln);
      };
      setters["graphene.d"] = [&](const std::string& v, int ln) {
        cfg.graphene_d = parse_number(v, "graphene.d", ln);
      };
      setters["graphene.m_max"] = [&](const std::string& v, int ln) {
        cfg.graphene_m_max = static_cast<int>(parse_integer(v, "graphene.m_max", ln));
      };
      setters["graphene.m0"] = [&](const std::string& v, int ln) {
        cfg.graphene_m0 = static_cast<int>(parse_integer(v, "graphene.m0", ln));
      };
      break;
    case Scenario::Verify:
      setters["verify.module"] = [&](const std::string& v, int) {
        cfg.verify_module = v;
      };
      break;
  }

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", line);
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line);
    if (value.empty()) throw ConfigError("missing value for key '" + key + "'", line);
    auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError("unknown key '" + key + "' for scenario '" + scenario + "'",
                        line);
    it->second(value, line);
  }

  if (state.const_override)
    cfg.constants = make_constants(state.hbar, state.c, state.m_e, state.v_f);

  // validation
  if (cfg.time_grid.samples < 1) throw ConfigError("time.samples must be >= 1");
  if (cfg.time_grid.end < cfg.time_grid.start)
    throw ConfigError("time.end must be >= time.start");

  switch (cfg.scenario) {
    case Scenario::ZbwTraj:
      if (!(cfg.zbw_r_o > 0.0)) throw ConfigError("zbw.r_o must be > 0");
      break;
    case Scenario::NcMoment:
      if (!(cfg.ncm_r_o > 0.0)) throw ConfigError("ncmoment.r_o must be > 0");
      break;
    case Scenario::Landau:
      if (!(cfg.landau_b3 > 0.0)) throw ConfigError("landau.B3 must be > 0");
      if (cfg.landau_k_max < 0) throw ConfigError("landau.k_max must be >= 0");
      if (cfg.landau_n_max < 0) throw ConfigError("landau.n_max must be >= 0");
      break;
    case Scenario::GrapheneTraj: {
      cfg.graphene_si = state.graphene_b_eta_set;
      if (cfg.graphene_si) {
        if (!state.graphene_ell_set || !state.graphene_k0x_si_set)
          throw ConfigError(
              "graphene.B_eta requires graphene.ell (m) and graphene.k0x (1/m)");
        if (state.graphene_ratio_set)
          throw ConfigError(
              "graphene.L_over_ell conflicts with the SI keys graphene.B_eta/ell/k0x");
        if (!(cfg.graphene_ell_si > 0.0)) throw ConfigError("graphene.ell must be > 0");
      } else if (state.graphene_ell_set) {
        // natural mode: ell given in units of L
        if (!(cfg.graphene_ell_si > 0.0)) throw ConfigError("graphene.ell must be > 0");
        if (state.graphene_ratio_set)
          throw ConfigError("give either graphene.ell or graphene.L_over_ell, not both");
        if (!(cfg.graphene_ell_si < 1.0))
          throw ConfigError("graphene.ell in natural units must be < 1 (ell < L)");
        cfg.graphene_L_over_ell = 1.0 / cfg.graphene_ell_si;
      }
      if (!(cfg.graphene_L_over_ell > 1.0))
        throw ConfigError("graphene.L_over_ell must exceed 1");
      if (cfg.graphene_m_max < 1) throw ConfigError("graphene.m_max must be >= 1");
      if (std::abs(cfg.graphene_u * cfg.graphene_u + cfg.graphene_d * cfg.graphene_d -
                   1.0) > 1e-12)
        throw ConfigError("graphene.u^2 + graphene.d^2 must equal 1");
      if (cfg.graphene_m0 > cfg.graphene_m_max)
        throw ConfigError("graphene.m0 must not exceed graphene.m_max");
      break;
    }
    default:
      break;
  }
  return cfg;
}

}  // namespace zbw
