#include <doctest.h>

#include <cmath>

#include "zbw/graphene.hpp"
#include "zbw/hermite.hpp"

using namespace zbw;

namespace {
GrapheneConfig natural_config(int m_max = 16) {
  return GrapheneConfig::natural(4.0, 1.0, m_max);
}

// overlap of the two zero-index Gaussians by completing the square
double analytic_v00(const GrapheneConfig& c) {
  const double L = c.magnetic_radius();
  const double L2 = L * L, l2 = c.ell * c.ell;
  const double q = L2 * L2 + L2 * l2 + l2 * l2;
  return L * l2 / (2.0 * std::sqrt((L2 + l2) * q)) *
         std::exp(-l2 * L2 * L2 * c.k0x * c.k0x / q);
}
}  // namespace

TEST_CASE("config invariants") {
  CHECK_THROWS_AS(GrapheneConfig::natural(0.9, 1.0), std::invalid_argument);
  GrapheneConfig bad = natural_config();
  bad.ell = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = natural_config();
  bad.ell = 1.5;  // exceeds the magnetic radius
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = natural_config();
  bad.m_max = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = natural_config();
  bad.u = 1.0;  // u^2 + d^2 != 1
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = natural_config();
  bad.b_eta = 2.0;  // inconsistent with eta3
  CHECK_THROWS_AS(big_omega(bad), std::invalid_argument);
}

TEST_CASE("angular frequency and energies") {
  const GrapheneConfig cfg = natural_config();
  const double omega = big_omega(cfg);
  CHECK(omega == doctest::Approx(1.0).epsilon(1e-14));  // by construction

  // quadrupling eta doubles Omega
  GrapheneConfig quad = cfg;
  quad.eta3 *= 4.0;
  quad.b_eta *= 4.0;
  quad.ell *= 0.5;  // keep L > ell
  CHECK(big_omega(quad) == doctest::Approx(2.0 * omega).epsilon(1e-12));

  // SI numerology from the printed field bound
  const PhysicalConstants k = load_constants();
  const GrapheneConfig si =
      GrapheneConfig::si(8.6e-14, 1e-2, 100.0, k.v_f_default, 4, k);
  CHECK(big_omega(si) == doctest::Approx(1.6e7).epsilon(0.02));
  CHECK(si.magnetic_radius() == doctest::Approx(8.75e-2).epsilon(2e-3));

  CHECK(graphene_energy(1, 0, cfg) == 0.0);
  CHECK(graphene_energy(-1, 0, cfg) == 0.0);
  CHECK(graphene_energy(1, 4, cfg) ==
        doctest::Approx(2.0 * cfg.hbar * omega).epsilon(1e-14));
  CHECK(graphene_energy(-1, 9, cfg) ==
        doctest::Approx(-3.0 * cfg.hbar * omega).epsilon(1e-14));
  CHECK_THROWS_AS(graphene_energy(2, 1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(graphene_energy(1, -1, cfg), std::invalid_argument);
}

TEST_CASE("overlap factors F_m") {
  const GrapheneConfig cfg = natural_config();

  SUBCASE("m = 0 is the bare product of the printed Gaussians") {
    const double L = cfg.magnetic_radius();
    const double L2 = L * L, l2 = cfg.ell * cfg.ell;
    for (const double kx : {-2.0, 0.0, 1.5, 6.0}) {
      const double pref =
          cfg.ell * std::sqrt(L / (2.0 * (L2 + l2) * std::sqrt(M_PI)));
      const double expect =
          pref * std::exp(-0.5 * l2 * (kx - cfg.k0x) * (kx - cfg.k0x)) *
          std::exp(-kx * kx * L2 * L2 / (2.0 * (L2 + l2)));
      CHECK(f_m(kx, 0, cfg) == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  SUBCASE("parity follows the Hermite factor when the packet is centred") {
    GrapheneConfig centred = cfg;
    centred.k0x = 0.0;
    for (const int m : {0, 1, 2, 3, 7}) {
      for (const double kx : {0.3, 1.1, 2.9}) {
        const double plus = f_m(kx, m, centred);
        const double minus = f_m(-kx, m, centred);
        CHECK(minus == doctest::Approx((m % 2 == 0 ? 1.0 : -1.0) * plus).epsilon(1e-12));
      }
    }
  }

  SUBCASE("large m evaluates finite through the log-space prefactor") {
    for (const double kx : {0.0, 2.0, 20.0, 60.0}) {
      const double v = f_m(kx, 50, cfg);
      CHECK(std::isfinite(v));
    }
    CHECK(std::isfinite(f_m(1.0, 128, cfg)));
  }

  CHECK(f_m(0.7, -1, cfg) == 0.0);  // F_{-1} convention
}

TEST_CASE("overlaps V_{m,m'}") {
  const GrapheneConfig cfg = natural_config();

  CHECK(overlap(-1, 3, cfg) == 0.0);
  CHECK(overlap(5, -1, cfg) == 0.0);

  // closed-form Gaussian integral as the frozen oracle for V00
  CHECK(overlap(0, 0, cfg) == doctest::Approx(analytic_v00(cfg)).epsilon(1e-10));

  // symmetry
  for (int m = 0; m <= 5; ++m)
    for (int mp = m; mp <= 5; ++mp)
      CHECK(overlap(m, mp, cfg) == doctest::Approx(overlap(mp, m, cfg)).epsilon(1e-12));

  // the printed V01/V00 ratio is sound; the printed V00 exponent is not
  const double v00 = overlap(0, 0, cfg);
  const double v01 = overlap(0, 1, cfg);
  CHECK(v01 / v00 == doctest::Approx(printed_v01_over_v00(cfg)).epsilon(1e-8));
  GrapheneConfig centred = cfg;
  centred.k0x = 0.0;
  CHECK(printed_v00(centred) == doctest::Approx(overlap(0, 0, centred)).epsilon(1e-10));
  CHECK(std::abs(printed_v00(cfg) / v00 - 1.0) > 1e-4);  // k0x != 0 exposes the typo

  // Gauss-Hermite route agrees with the adaptive route
  CHECK(overlap_gauss_hermite(2, 4, cfg) ==
        doctest::Approx(overlap(2, 4, cfg)).epsilon(1e-10));
}

TEST_CASE("series coefficients") {
  const GrapheneConfig cfg = natural_config(8);
  const SeriesCoefficients sc = series_coefficients(cfg);
  const double v00 = overlap(0, 0, cfg);

  CHECK(sc.alpha_plus[0] == sc.alpha_minus[0]);
  CHECK(sc.alpha_plus[0] == doctest::Approx(2.0 * v00).epsilon(1e-12));
  CHECK(sc.omega_cyc[0] == sc.omega_zbw[0]);
  CHECK(sc.omega_cyc[0] == doctest::Approx(sc.omega).epsilon(1e-14));
  CHECK(sc.omega_cyc[1] == doctest::Approx(sc.omega * (std::sqrt(2.0) - 1.0)));
  CHECK(sc.omega_zbw[1] == doctest::Approx(sc.omega * (std::sqrt(2.0) + 1.0)));
  CHECK(sc.omega_cyc[1] == doctest::Approx(0.41421 * sc.omega).epsilon(1e-4));
  CHECK(sc.omega_zbw[1] == doctest::Approx(2.41421 * sc.omega).epsilon(1e-4));

  // frequency ladders satisfy the difference-of-squares identity and the
  // fast branch dominates strictly for every m >= 1
  for (int m = 0; m <= cfg.m_max; ++m) {
    CHECK(sc.omega_cyc[m] * sc.omega_zbw[m] ==
          doctest::Approx(sc.omega * sc.omega).epsilon(1e-12));
    CHECK(sc.omega_cyc[m] > 0.0);
    if (m == 0)
      CHECK(sc.omega_zbw[m] == sc.omega_cyc[m]);
    else
      CHECK(sc.omega_zbw[m] > sc.omega_cyc[m]);
  }
}

TEST_CASE("velocity and position series") {
  const GrapheneConfig cfg = natural_config(16);
  const SeriesCoefficients sc = series_coefficients(cfg);

  // t = 0: v1 collapses to v_F sum(alpha+ + alpha-), v2 and r1 vanish
  const PlanarSample v0 = velocity_series(sc, 0.0);
  double alpha_sum = 0.0;
  for (int m = 0; m <= cfg.m_max; ++m) alpha_sum += sc.alpha_plus[m] + sc.alpha_minus[m];
  CHECK(v0.c1 == doctest::Approx(cfg.v_f * alpha_sum).epsilon(1e-13));
  CHECK(v0.c2 == 0.0);
  CHECK(position_series(sc, 0.0).c1 == 0.0);

  // velocity equals a five-point finite-difference derivative of position
  const double h = 1e-3 * 2.0 * M_PI / sc.omega_zbw[cfg.m_max];
  const double scale =
      cfg.v_f * (sc.alpha_plus.cwiseAbs().sum() + sc.alpha_minus.cwiseAbs().sum());
  for (int i = 0; i < 20; ++i) {
    const double t = 0.05 + 0.23 * i;
    const PlanarSample v = velocity_series(sc, t);
    auto r = [&](double tt) { return position_series(sc, tt); };
    const double fd1 =
        (8.0 * (r(t + h).c1 - r(t - h).c1) - (r(t + 2 * h).c1 - r(t - 2 * h).c1)) /
        (12.0 * h);
    const double fd2 =
        (8.0 * (r(t + h).c2 - r(t - h).c2) - (r(t + 2 * h).c2 - r(t - 2 * h).c2)) /
        (12.0 * h);
    CHECK(std::abs(v.c1 - fd1) / scale < 1e-6);
    CHECK(std::abs(v.c2 - fd2) / scale < 1e-6);
  }

  // the truncated sum is the term-by-term assembly of single levels
  const double t_probe = 1.37;
  PlanarSample assembled;
  for (int m0 = 0; m0 <= cfg.m_max; ++m0) {
    const PlanarSample one = single_level_position(sc, m0, t_probe);
    assembled.c1 += one.c1;
    assembled.c2 += one.c2;
  }
  const PlanarSample full = position_series(sc, t_probe);
  CHECK(assembled.c1 == doctest::Approx(full.c1).epsilon(1e-12));
  CHECK(assembled.c2 == doctest::Approx(full.c2).epsilon(1e-12));

  // doubling the truncation moves values by less than the reported tail
  const GrapheneConfig wide = natural_config(32);
  const SeriesCoefficients sc2 = series_coefficients(wide);
  const PlanarSample a = position_series(sc, t_probe);
  const PlanarSample b = position_series(sc2, t_probe);
  CHECK(std::abs(a.c1 - b.c1) <= a.tail1);
  CHECK(std::abs(a.c2 - b.c2) <= a.tail2);

  CHECK_THROWS_AS(single_level_position(sc, cfg.m_max + 1, 0.0),
                  std::invalid_argument);
}

TEST_CASE("zero-level closed form") {
  const GrapheneConfig cfg = natural_config(4);
  const SeriesCoefficients sc = series_coefficients(cfg);
  const double omega = big_omega(cfg);
  const double v00 = overlap(0, 0, cfg);
  const double v01 = overlap(0, 1, cfg);

  for (const double t : {0.0, 0.9, 2.7}) {
    const auto r = zero_level_closed_form(cfg, t);
    CHECK(r.first ==
          doctest::Approx(4.0 * cfg.v_f * v00 / omega * std::sin(omega * t))
              .epsilon(1e-12));
    CHECK(r.second ==
          doctest::Approx(4.0 * cfg.v_f * v01 / omega * std::cos(omega * t))
              .epsilon(1e-12));
    // matches the single-level restriction of the full series
    const PlanarSample single = single_level_position(sc, 0, t);
    CHECK(r.first == doctest::Approx(single.c1).epsilon(1e-12));
    CHECK(r.second == doctest::Approx(single.c2).epsilon(1e-12));

    // dropping the trembling terms halves both amplitudes exactly
    const auto halved = zero_level_closed_form(cfg, t, false);
    CHECK(halved.first == 0.5 * r.first);
    CHECK(halved.second == 0.5 * r.second);
  }

  // the orbit closes on the ellipse (r1/A1)^2 + (r2/A2)^2 = 1
  const double a1 = 4.0 * cfg.v_f * v00 / omega;
  const double a2 = 4.0 * cfg.v_f * v01 / omega;
  for (int i = 0; i < 40; ++i) {
    const double t = i * 2.0 * M_PI / 40.0;
    const auto r = zero_level_closed_form(cfg, t);
    CHECK(std::abs((r.first / a1) * (r.first / a1) +
                   (r.second / a2) * (r.second / a2) - 1.0) < 1e-10);
  }
}

TEST_CASE("truncated-basis diagonalization oracle") {
  const GrapheneConfig cfg = natural_config(4);
  const double hbar_omega = cfg.hbar * big_omega(cfg);
  const Eigen::VectorXd evals = truncated_hamiltonian_oracle(cfg, 48);

  // zero mode
  double best_zero = 1e300;
  for (int i = 0; i < evals.size(); ++i)
    best_zero = std::min(best_zero, std::abs(evals[i]));
  CHECK(best_zero < 1e-8 * hbar_omega);

  // +- hbar Omega sqrt(m) pattern for converged levels
  for (int m = 1; m <= 12; ++m) {
    const double expect = hbar_omega * std::sqrt(static_cast<double>(m));
    double best_pos = 1e300, best_neg = 1e300;
    for (int i = 0; i < evals.size(); ++i) {
      best_pos = std::min(best_pos, std::abs(evals[i] - expect));
      best_neg = std::min(best_neg, std::abs(evals[i] + expect));
    }
    CHECK(best_pos < 1e-6 * hbar_omega);
    CHECK(best_neg < 1e-6 * hbar_omega);
  }

  // basis doubling does not move converged levels
  const Eigen::VectorXd evals2 = truncated_hamiltonian_oracle(cfg, 96);
  for (int m = 0; m <= 12; ++m) {
    const double expect = hbar_omega * std::sqrt(static_cast<double>(m));
    auto closest = [expect](const Eigen::VectorXd& v) {
      double best = 1e300;
      for (int i = 0; i < v.size(); ++i)
        if (std::abs(v[i] - expect) < std::abs(best - expect)) best = v[i];
      return best;
    };
    CHECK(std::abs(closest(evals) - closest(evals2)) < 1e-10 * hbar_omega);
  }

  CHECK_THROWS_AS(truncated_hamiltonian_oracle(cfg, 1), std::invalid_argument);
}

TEST_CASE("diagonal overlaps decay for a packet narrower than the magnetic radius") {
  const GrapheneConfig cfg = natural_config(24);
  const SeriesCoefficients sc = series_coefficients(cfg);
  for (int m = 1; m <= cfg.m_max; ++m) CHECK(sc.v_diag[m] <= sc.v_diag[m - 1] + 1e-15);

  // and the tail bound shrinks as the truncation grows
  const PlanarSample t16 = position_series(series_coefficients(natural_config(16)), 0.0);
  const PlanarSample t24 = position_series(sc, 0.0);
  CHECK(t24.tail1 < t16.tail1);
}

TEST_CASE("rough amplitude remarks stay order-of-magnitude") {
  const GrapheneConfig cfg = natural_config(4);
  const auto rough = rough_amplitude_estimates(cfg);
  const double omega = big_omega(cfg);
  const double a1 = std::abs(4.0 * cfg.v_f * overlap(0, 0, cfg) / omega);
  CHECK(rough.first > 0.05 * a1);
  CHECK(rough.first < 20.0 * a1);
}
