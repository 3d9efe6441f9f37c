// Acceptance suite: one line per criterion, nonzero exit code when any
// non-informational criterion fails. Everything runs against the library in
// Dirac/graphene natural units with SI numerology where stated.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "zbw/config.hpp"
#include "zbw/dirac_packet.hpp"
#include "zbw/graphene.hpp"
#include "zbw/nc_momentum_landau.hpp"
#include "zbw/nc_phase_space.hpp"
#include "zbw/nc_space_moment.hpp"
#include "zbw/quadrature.hpp"
#include "zbw/scenarios.hpp"
#include "zbw/zbw_commutative.hpp"

using namespace zbw;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("criterion %2d [%s] %s — %s\n", id, pass ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

void report_info(int id, const std::string& what, const std::string& detail) {
  std::printf("criterion %2d [INFO] %s — %s\n", id, what.c_str(), detail.c_str());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double lcg_unit(std::uint64_t& state) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  return static_cast<double>(state >> 11) * 0x1.0p-53;
}

void criterion_1_compton_scale() {
  const PhysicalConstants k = load_constants();
  const double lam_err = std::abs(k.lambda_c / 3.8616e-13 - 1.0);
  const double omega = zbw_frequency(k);
  const double omega_err = std::abs(omega / 1.6e21 - 1.0);
  report(1, lam_err <= 1e-3 && omega_err <= 0.05,
         "Compton wavelength and trembling frequency",
         "lambda_c = " + fmt(k.lambda_c) + " m (err " + fmt(lam_err) +
             "), w_zbw = " + fmt(omega) + " 1/s (err " + fmt(omega_err) + ")");
}

void criterion_2_amplitude_constants() {
  double worst = 0.0;
  for (const double r_o : {0.5, 1.0, 10.0, 137.0})
    worst = std::max(worst,
                     std::abs(amplitude_I_oracle(r_o).value / amplitude_I(r_o) - 1.0));
  const double j_val = std::abs(amplitude_J_oracle(1.0).value);
  report(2, worst <= 1e-8 && j_val <= 1e-12,
         "amplitude constant I vs quadrature, J integrand vanishes",
         "max rel gap " + fmt(worst) + " over four widths, |J| = " + fmt(j_val));
}

void criterion_3_circle_and_moment() {
  double circle = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ZbwTrajectoryPoint pt = trajectory_fixed_phi(0.41, i * M_PI / 50.0);
    circle = std::max(circle, std::abs(pt.x * pt.x + pt.y * pt.y - 0.25));
  }
  double mu_min = 1e300, mu_max = -1e300, anti = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double t = i * M_PI / 200.0;
    const Eigen::Vector3d up = magnetic_moment(Spin::Up, t);
    const Eigen::Vector3d dn = magnetic_moment(Spin::Down, t);
    mu_min = std::min(mu_min, std::abs(up[2]));
    mu_max = std::max(mu_max, std::abs(up[2]));
    anti = std::max(anti, (up + dn).norm());
  }
  const bool swing_ok = mu_min <= 1e-12 && std::abs(mu_max - 1.0) <= 1e-12;
  report(3, circle <= 1e-10 && swing_ok && anti == 0.0,
         "fixed-azimuth circle law and moment oscillation",
         "circle defect " + fmt(circle) + ", z moment swings 0.." + fmt(mu_max) +
             " |e|lambda_c, spin-flip residual " + fmt(anti));
}

void criterion_4_bracket_algebra() {
  const double hbar = 1.0;
  NCParams nc;
  nc.theta = Eigen::Vector3d(0.3, -0.7, 1.1);
  nc.eta = Eigen::Vector3d(-0.2, 0.5, 0.9);
  const BracketTable t = verify_brackets(nc, hbar);
  const Eigen::Matrix3d th = dual_matrix(nc.theta);
  const Eigen::Matrix3d et = dual_matrix(nc.eta);
  const Eigen::Matrix3d xp =
      hbar * Eigen::Matrix3d::Identity() + th * et.transpose() / (4.0 * hbar);
  auto gap = [](const Eigen::Matrix3d& got, const Eigen::Matrix3d& expect) {
    return (got - expect).cwiseAbs().maxCoeff() /
           std::max(expect.cwiseAbs().maxCoeff(), 1e-300);
  };
  const double worst =
      std::max({gap(t.xx, th), gap(t.pp, et), gap(t.xp, xp)});
  report(4, worst <= 1e-14,
         "Bopp-shift bracket table reproduces all three commutator families",
         "max rel gap " + fmt(worst) + " including the theta.eta/(4 hbar^2) mixing");
}

void criterion_5_nc_moment() {
  const PhysicalConstants k = load_constants();
  const double r_o = 1.0;
  const Eigen::Vector3d dirs[5] = {
      Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0),
      Eigen::Vector3d(1, 1, 1) / std::sqrt(3.0),
      Eigen::Vector3d(-0.4, 0.8, 0.45).normalized()};
  double worst = 0.0;
  for (const Spin spin : {Spin::Up, Spin::Down})
    for (const auto& dir : dirs)
      for (int it = 0; it < 8; ++it) {
        const double t = (it + 0.37) * M_PI / 8.0;
        const Eigen::Vector3d closed = nc_moment(spin, dir, t, r_o);
        const Eigen::Vector3d oracle = oracle_nc_moment(spin, dir, t, r_o);
        worst = std::max(worst, (closed - oracle).norm() / closed.norm());
      }

  const double bohr = 1.0 / k.alpha_fsc;
  const Eigen::Vector3d theta_z(0.0, 0.0, 1.0);
  const double leading_avg = nc_moment(Spin::Up, theta_z, M_PI / 4.0, bohr)[2];
  const Eigen::Vector3d loop_theta =
      oneloop_reference(theta_z, Spin::Up, k) -
      oneloop_reference(Eigen::Vector3d::Zero(), Spin::Up, k);
  const bool signs_oppose = leading_avg * loop_theta[2] < 0.0;

  // trajectories with and without theta are byte-identical
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "zbwlab_acceptance";
  fs::remove_all(base);
  ScenarioConfig plain = parse_config("", "zbw-traj");
  plain.output_dir = (base / "plain").string();
  ScenarioConfig with_theta =
      parse_config("zbw.theta1 = 0.5\nzbw.theta2 = -0.25\nzbw.theta3 = 1.5", "zbw-traj");
  with_theta.output_dir = (base / "theta").string();
  const bool bit_identical =
      run_scenario(plain).csv_bytes == run_scenario(with_theta).csv_bytes;

  report(5, worst <= 1e-6 && signs_oppose && bit_identical,
         "space-NC moment: closed form vs 3D quadrature, sign opposition, "
         "trajectory invariance",
         "max rel gap " + fmt(worst) + " over 5 x 8 x 2 grid, signs " +
             (signs_oppose ? "oppose" : "agree") + ", trajectories " +
             (bit_identical ? "bit-identical" : "differ"));
}

void criterion_6_landau_degeneracy() {
  const PhysicalConstants k = load_constants();
  std::uint64_t rng = 2028;
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const int kk = 1 + static_cast<int>(lcg_unit(rng) * 6);
    const double b3 = 0.2 + 10.0 * lcg_unit(rng);
    const double p3 = (lcg_unit(rng) - 0.5) * 4e-22;
    const int n_up = (kk - 1) + 2 * static_cast<int>(lcg_unit(rng) * 4);
    const int n_dn = kk + 2 * static_cast<int>(lcg_unit(rng) * 4);
    const double e_up =
        landau_energy({p3, b3, n_up, n_up - 2 * (kk - 1), 0.5, k.e}, k);
    const double e_dn = landau_energy({p3, b3, n_dn, n_dn - 2 * kk, -0.5, k.e}, k);
    worst = std::max(worst, std::abs(e_up / e_dn - 1.0));
  }

  const LandauLevel zero_e = landau_level(0, 0.0, 2.0, k.e, k);
  bool zero_ok = !zero_e.degenerate_states.empty();
  for (const auto& st : zero_e.degenerate_states) zero_ok &= st.s3 < 0 && st.l == st.n;
  const LandauLevel zero_p = landau_level(0, 0.0, 2.0, -k.e, k);
  for (const auto& st : zero_p.degenerate_states) zero_ok &= st.s3 > 0;

  double charge_gap = 0.0;
  const double eta3 = 1.7e-52;
  const double b_equiv = eta3 / (std::abs(k.e) * k.hbar);
  for (int n = 0; n <= 4; ++n)
    for (int l = -n; l <= n; l += 2)
      for (const double s3 : {0.5, -0.5}) {
        const double e_nc = nc_landau_energy(eta3, 0.0, n, l, s3, k);
        const double e_ref = landau_energy({0.0, b_equiv, n, l, s3, -k.e}, k);
        charge_gap = std::max(charge_gap, std::abs(e_nc / e_ref - 1.0));
      }

  report(6, worst <= 1e-14 && zero_ok && charge_gap == 0.0,
         "Landau degeneracy identity, zero-level lifting, NC charge independence",
         "degeneracy gap " + fmt(worst) + ", zero level " +
             (zero_ok ? "single-branch" : "wrong") + ", charge-substitution gap " +
             fmt(charge_gap));
}

void criterion_7_field_numerology() {
  const PhysicalConstants k = load_constants();
  const double b_eta = 8.6e-14;
  const double L = magnetic_radius(b_eta, k);
  const double omega = std::sqrt(2.0 * std::abs(k.e) * b_eta / k.hbar) * k.v_f_default;
  const double l_err = std::abs(L / 8.7e-2 - 1.0);
  const double o_err = std::abs(omega / 1.6e7 - 1.0);
  report(7, l_err <= 0.02 && o_err <= 0.02,
         "effective-field numerology from B_eta = 8.6e-14 T",
         "L = " + fmt(L) + " m (err " + fmt(l_err) + "), Omega = " + fmt(omega) +
             " 1/s (err " + fmt(o_err) + ")");
}

void criterion_8_zero_level() {
  const GrapheneConfig cfg = GrapheneConfig::natural(4.0, 1.0, 8);
  const SeriesCoefficients sc = series_coefficients(cfg);
  const double omega = big_omega(cfg);
  const bool coeff_ok = sc.alpha_plus[0] == sc.alpha_minus[0] &&
                        sc.omega_cyc[0] == omega && sc.omega_zbw[0] == omega;

  bool halving_ok = true;
  for (const double t : {0.3, 1.1, 2.9}) {
    const auto full = zero_level_closed_form(cfg, t, true);
    const auto half = zero_level_closed_form(cfg, t, false);
    halving_ok &= full.first == 2.0 * half.first && full.second == 2.0 * half.second;
  }

  const double a1 = 4.0 * cfg.v_f * overlap(0, 0, cfg) / omega;
  const double a2 = 4.0 * cfg.v_f * overlap(0, 1, cfg) / omega;
  double ellipse = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto r = zero_level_closed_form(cfg, i * 2.0 * M_PI / 100.0);
    ellipse = std::max(ellipse, std::abs((r.first / a1) * (r.first / a1) +
                                         (r.second / a2) * (r.second / a2) - 1.0));
  }
  report(8, coeff_ok && halving_ok && ellipse <= 1e-10,
         "graphene zero level: coefficient equality, exact halving, ellipse closure",
         std::string("alpha_0 equality ") + (coeff_ok ? "exact" : "broken") +
             ", halving " + (halving_ok ? "exact" : "broken") + ", ellipse defect " +
             fmt(ellipse));
}

void criterion_9_graphene_series() {
  const GrapheneConfig cfg = GrapheneConfig::natural(4.0, 1.0, 32);
  const SeriesCoefficients sc = series_coefficients(cfg);
  const double omega = big_omega(cfg);

  double prod_gap = 0.0;
  for (int m = 0; m <= cfg.m_max; ++m)
    prod_gap = std::max(
        prod_gap, std::abs(sc.omega_cyc[m] * sc.omega_zbw[m] - omega * omega));

  double deriv_gap = 0.0;
  const double h = 1e-3 * 2.0 * M_PI / sc.omega_zbw[cfg.m_max];
  const double scale =
      cfg.v_f * (sc.alpha_plus.cwiseAbs().sum() + sc.alpha_minus.cwiseAbs().sum());
  for (int i = 0; i < 20; ++i) {
    const double t = 0.07 + 0.29 * i;
    const PlanarSample v = velocity_series(sc, t);
    auto r = [&](double tt) { return position_series(sc, tt); };
    const double fd1 =
        (8.0 * (r(t + h).c1 - r(t - h).c1) - (r(t + 2 * h).c1 - r(t - 2 * h).c1)) /
        (12.0 * h);
    const double fd2 =
        (8.0 * (r(t + h).c2 - r(t - h).c2) - (r(t + 2 * h).c2 - r(t - 2 * h).c2)) /
        (12.0 * h);
    deriv_gap = std::max(deriv_gap, std::abs(v.c1 - fd1) / scale);
    deriv_gap = std::max(deriv_gap, std::abs(v.c2 - fd2) / scale);
  }

  const Eigen::VectorXd evals = truncated_hamiltonian_oracle(cfg, 72);
  double eig_gap = 0.0;
  const double hbar_omega = cfg.hbar * omega;
  for (int m = 0; m <= 18; ++m) {
    const double expect = hbar_omega * std::sqrt(static_cast<double>(m));
    double best_pos = 1e300, best_neg = 1e300;
    for (int i = 0; i < evals.size(); ++i) {
      best_pos = std::min(best_pos, std::abs(evals[i] - expect));
      best_neg = std::min(best_neg, std::abs(evals[i] + expect));
    }
    eig_gap = std::max(eig_gap, std::max(best_pos, best_neg) / hbar_omega);
  }

  report(9,
         deriv_gap <= 1e-6 && prod_gap <= 1e-12 * omega * omega && eig_gap <= 1e-6,
         "graphene series: derivative consistency, frequency products, ladder oracle",
         "derivative gap " + fmt(deriv_gap) + ", product gap " + fmt(prod_gap) +
             ", eigenvalue gap " + fmt(eig_gap) + " hbar Omega");
}

void criterion_10_printed_audit() {
  const PhysicalConstants k = load_constants();
  const GrapheneConfig cfg = GrapheneConfig::natural(4.0, 1.0, 8);
  const double v00 = overlap(0, 0, cfg);
  const double v01 = overlap(0, 1, cfg);
  report_info(10, "printed V00 vs quadrature",
              "quadrature " + fmt(v00) + ", printed form " + fmt(printed_v00(cfg)) +
                  " (rel gap " + fmt(std::abs(printed_v00(cfg) / v00 - 1.0)) + ")");
  report_info(10, "printed V01/V00 ratio vs quadrature",
              "quadrature " + fmt(v01 / v00) + ", printed " +
                  fmt(printed_v01_over_v00(cfg)) + " (rel gap " +
                  fmt(std::abs(printed_v01_over_v00(cfg) / (v01 / v00) - 1.0)) + ")");
  report_info(10, "one-loop vs leading-order magnitude ratio",
              "leading/one-loop = " +
                  fmt(leading_vs_oneloop_ratio(1.0 / k.alpha_fsc, k)) +
                  " at the Bohr width, Dirac natural units");
}

}  // namespace

int main() {
  criterion_1_compton_scale();
  criterion_2_amplitude_constants();
  criterion_3_circle_and_moment();
  criterion_4_bracket_algebra();
  criterion_5_nc_moment();
  criterion_6_landau_degeneracy();
  criterion_7_field_numerology();
  criterion_8_zero_level();
  criterion_9_graphene_series();
  criterion_10_printed_audit();

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
