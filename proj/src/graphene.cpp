#include "zbw/graphene.hpp"

#include <cmath>
#include <stdexcept>

#include "zbw/hermite.hpp"

namespace zbw {

double GrapheneConfig::magnetic_radius() const { return hbar / std::sqrt(eta3); }

double GrapheneConfig::g_factor() const {
  const double L = magnetic_radius();
  const double l4 = std::pow(L, 4) - std::pow(ell, 4);
  if (!(l4 > 0.0)) throw std::domain_error("g_factor: requires L > ell");
  return L * L * L / std::sqrt(l4);
}

GrapheneConfig GrapheneConfig::natural(double L_over_ell, double k0x_ell, int m_max,
                                       double u, double d) {
  if (!(L_over_ell > 1.0))
    throw std::invalid_argument("GrapheneConfig::natural: L/ell must exceed 1");
  GrapheneConfig c;
  c.hbar = 1.0;
  c.e_abs = 1.0;
  c.eta3 = 1.0;  // L = 1
  c.b_eta = 1.0;
  c.ell = 1.0 / L_over_ell;
  c.k0x = k0x_ell / c.ell;
  c.v_f = 1.0 / std::sqrt(2.0);  // Omega = 1 in these units
  c.u = u;
  c.d = d;
  c.m_max = m_max;
  validate(c);
  return c;
}

GrapheneConfig GrapheneConfig::si(double b_eta_tesla, double ell_m, double k0x_per_m,
                                  double v_f, int m_max, const PhysicalConstants& k) {
  GrapheneConfig c;
  c.hbar = k.hbar;
  c.e_abs = std::abs(k.e);
  c.b_eta = b_eta_tesla;
  c.eta3 = c.e_abs * c.hbar * b_eta_tesla;
  c.ell = ell_m;
  c.k0x = k0x_per_m;
  c.v_f = v_f;
  c.m_max = m_max;
  validate(c);
  return c;
}

void validate(const GrapheneConfig& config) {
  if (!(config.eta3 > 0.0))
    throw std::invalid_argument("graphene config: eta3 must be positive");
  if (!(config.ell > 0.0))
    throw std::invalid_argument("graphene config: ell must be positive");
  if (!(config.magnetic_radius() > config.ell))
    throw std::invalid_argument("graphene config: magnetic radius L must exceed ell");
  if (config.m_max < 1)
    throw std::invalid_argument("graphene config: m_max must be >= 1");
  if (std::abs(config.u * config.u + config.d * config.d - 1.0) > 1e-12)
    throw std::invalid_argument("graphene config: u^2 + d^2 must equal 1");
  const double eta_from_b = config.e_abs * config.hbar * config.b_eta;
  if (std::abs(eta_from_b - config.eta3) > 1e-12 * config.eta3)
    throw std::invalid_argument("graphene config: inconsistent (eta3, b_eta) pair");
}

double big_omega(const GrapheneConfig& config) {
  validate(config);
  const double from_field =
      std::sqrt(2.0 * config.e_abs * config.b_eta / config.hbar) * config.v_f;
  const double from_eta = std::sqrt(2.0 * config.eta3) * config.v_f / config.hbar;
  if (std::abs(from_field - from_eta) > 1e-12 * from_eta)
    throw std::invalid_argument("big_omega: the two defining forms disagree");
  return from_eta;
}

double graphene_energy(int s, int m, const GrapheneConfig& config) {
  if (s != 1 && s != -1) throw std::invalid_argument("graphene_energy: s must be +-1");
  if (m < 0) throw std::invalid_argument("graphene_energy: m must be >= 0");
  return s * config.hbar * big_omega(config) * std::sqrt(static_cast<double>(m));
}

double f_m(double kx, int m, const GrapheneConfig& config) {
  if (m == -1) return 0.0;  // F_{-1} convention
  if (m < -1) throw std::invalid_argument("f_m: m must be >= -1");
  const double L = config.magnetic_radius();
  const double ell = config.ell;
  const double L2 = L * L, l2 = ell * ell;
  if (!(L > ell)) throw std::domain_error("f_m: requires L > ell");
  const double g = config.g_factor();
  // prefactor ell sqrt(L (L^2-l^2)^m / (2^{m+1} (L^2+l^2)^{m+1} m! sqrt(pi)))
  // folded with the 1/sqrt(2^m m!) of the scaled Hermite function; what remains
  // in log space is safe for any m.
  const double log_ratio = m * (std::log(L2 - l2) - std::log(L2 + l2));
  const double log_pref = std::log(ell) + 0.5 * std::log(L) + 0.5 * log_ratio -
                          0.5 * std::log(2.0 * (L2 + l2)) - 0.25 * std::log(M_PI);
  const double x = kx * g;
  // total exponent: the two printed Gaussians plus the +x^2/2 freed by the
  // scaled recurrence
  const double expo = -0.5 * l2 * (kx - config.k0x) * (kx - config.k0x) -
                      kx * kx * L2 * L2 / (2.0 * (L2 + l2)) + 0.5 * x * x;
  const double h = hermite_scaled(m, x);
  if (h == 0.0) return 0.0;
  return std::exp(log_pref + expo) * h;
}

namespace {

LineMap overlap_map(const GrapheneConfig& config) {
  const double L = config.magnetic_radius();
  const double L2 = L * L, l2 = config.ell * config.ell;
  const double a = l2 + L2 * L2 / (L2 + l2);  // combined Gaussian stiffness
  LineMap map;
  map.center = l2 * config.k0x / a;
  map.scale = 1.0 / std::sqrt(a);
  return map;
}

}  // namespace

double overlap(int m, int m_prime, const GrapheneConfig& config, double tol) {
  if (m == -1 || m_prime == -1) return 0.0;
  auto integrand = [&](double kx) {
    return f_m(kx, m, config) * f_m(kx, m_prime, config);
  };
  return integrate_1d(integrand, tol, overlap_map(config)).value;
}

double overlap_gauss_hermite(int m, int m_prime, const GrapheneConfig& config,
                             int n_nodes) {
  if (m == -1 || m_prime == -1) return 0.0;
  auto integrand = [&](double kx) {
    return f_m(kx, m, config) * f_m(kx, m_prime, config);
  };
  return integrate_1d_hermite(integrand, n_nodes, overlap_map(config)).value;
}

SeriesCoefficients series_coefficients(const GrapheneConfig& config, double tol) {
  validate(config);
  const int mm = config.m_max;
  SeriesCoefficients sc;
  sc.m_max = mm;
  sc.v_f = config.v_f;
  sc.omega = big_omega(config);
  sc.alpha_plus.resize(mm + 1);
  sc.alpha_minus.resize(mm + 1);
  sc.beta_plus.resize(mm + 1);
  sc.beta_minus.resize(mm + 1);
  sc.omega_cyc.resize(mm + 1);
  sc.omega_zbw.resize(mm + 1);
  sc.v_diag.resize(mm + 1);
  for (int m = 0; m <= mm; ++m) {
    const double v_mm = overlap(m, m, config, tol);
    const double v_skew = overlap(m - 1, m + 1, config, tol);
    const double v_up = overlap(m, m + 1, config, tol);
    const double v_down = overlap(m, m - 1, config, tol);
    sc.v_diag[m] = v_mm;
    sc.alpha_plus[m] = 2.0 * (v_mm + v_skew);
    sc.alpha_minus[m] = 2.0 * (v_mm - v_skew);
    sc.beta_plus[m] = -2.0 * (v_up + v_down);
    sc.beta_minus[m] = -2.0 * (v_up - v_down);
    const double root_m = std::sqrt(static_cast<double>(m));
    const double root_m1 = std::sqrt(static_cast<double>(m + 1));
    sc.omega_cyc[m] = sc.omega * (root_m1 - root_m);
    sc.omega_zbw[m] = sc.omega * (root_m1 + root_m);
  }
  return sc;
}

namespace {

// truncation tail from the last two term magnitudes plus the geometric
// continuation they imply; the bare last-two-terms sum underestimates the
// slowly decaying 1/omega_cyc-amplified channel
double tail_estimate(double prev, double last) {
  const double base = prev + last;
  if (!(prev > 0.0) || !(last > 0.0)) return base;
  const double ratio = std::min(last / prev, 0.99);
  return base + last * ratio / (1.0 - ratio);
}

}  // namespace

PlanarSample velocity_series(const SeriesCoefficients& sc, double t) {
  PlanarSample s;
  for (int m = 0; m <= sc.m_max; ++m) {
    s.c1 += sc.alpha_plus[m] * std::cos(sc.omega_cyc[m] * t) +
            sc.alpha_minus[m] * std::cos(sc.omega_zbw[m] * t);
    s.c2 += sc.beta_plus[m] * std::sin(sc.omega_cyc[m] * t) +
            sc.beta_minus[m] * std::sin(sc.omega_zbw[m] * t);
  }
  s.c1 *= sc.v_f;
  s.c2 *= sc.v_f;
  auto mag1 = [&](int m) {
    return sc.v_f * (std::abs(sc.alpha_plus[m]) + std::abs(sc.alpha_minus[m]));
  };
  auto mag2 = [&](int m) {
    return sc.v_f * (std::abs(sc.beta_plus[m]) + std::abs(sc.beta_minus[m]));
  };
  const int prev = std::max(0, sc.m_max - 1);
  s.tail1 = tail_estimate(mag1(prev), mag1(sc.m_max));
  s.tail2 = tail_estimate(mag2(prev), mag2(sc.m_max));
  return s;
}

PlanarSample position_series(const SeriesCoefficients& sc, double t) {
  PlanarSample s;
  for (int m = 0; m <= sc.m_max; ++m) {
    s.c1 += sc.alpha_plus[m] / sc.omega_cyc[m] * std::sin(sc.omega_cyc[m] * t) +
            sc.alpha_minus[m] / sc.omega_zbw[m] * std::sin(sc.omega_zbw[m] * t);
    s.c2 -= sc.beta_plus[m] / sc.omega_cyc[m] * std::cos(sc.omega_cyc[m] * t) +
            sc.beta_minus[m] / sc.omega_zbw[m] * std::cos(sc.omega_zbw[m] * t);
  }
  s.c1 *= sc.v_f;
  s.c2 *= sc.v_f;
  auto mag1 = [&](int m) {
    return sc.v_f * (std::abs(sc.alpha_plus[m]) / sc.omega_cyc[m] +
                     std::abs(sc.alpha_minus[m]) / sc.omega_zbw[m]);
  };
  auto mag2 = [&](int m) {
    return sc.v_f * (std::abs(sc.beta_plus[m]) / sc.omega_cyc[m] +
                     std::abs(sc.beta_minus[m]) / sc.omega_zbw[m]);
  };
  const int prev = std::max(0, sc.m_max - 1);
  s.tail1 = tail_estimate(mag1(prev), mag1(sc.m_max));
  s.tail2 = tail_estimate(mag2(prev), mag2(sc.m_max));
  return s;
}

PlanarSample single_level_position(const SeriesCoefficients& sc, int m0, double t) {
  if (m0 < 0 || m0 > sc.m_max)
    throw std::invalid_argument("single_level_position: m0 out of range");
  PlanarSample s;
  s.c1 = sc.v_f * (sc.alpha_plus[m0] / sc.omega_cyc[m0] * std::sin(sc.omega_cyc[m0] * t) +
                   sc.alpha_minus[m0] / sc.omega_zbw[m0] * std::sin(sc.omega_zbw[m0] * t));
  s.c2 = -sc.v_f * (sc.beta_plus[m0] / sc.omega_cyc[m0] * std::cos(sc.omega_cyc[m0] * t) +
                    sc.beta_minus[m0] / sc.omega_zbw[m0] * std::cos(sc.omega_zbw[m0] * t));
  return s;
}

std::pair<double, double> zero_level_closed_form(const GrapheneConfig& config,
                                                 double t, bool keep_zbw, double tol) {
  const double omega = big_omega(config);
  const double v00 = overlap(0, 0, config, tol);
  const double v01 = overlap(0, 1, config, tol);
  // alpha_0^+ = alpha_0^- = 2 V00 and omega_0^cyc = omega_0^zbw = Omega, so
  // the trembling half carries exactly half the amplitude.
  const double factor = keep_zbw ? 4.0 : 2.0;
  const double r1 = factor * config.v_f * v00 / omega * std::sin(omega * t);
  const double r2 = factor * config.v_f * v01 / omega * std::cos(omega * t);
  return {r1, r2};
}

Eigen::VectorXd truncated_hamiltonian_oracle(const GrapheneConfig& config, int dim) {
  if (dim < 2) throw std::invalid_argument("truncated_hamiltonian_oracle: dim must be >= 2");
  validate(config);
  const double hbar_omega = config.hbar * big_omega(config);
  // H = v_F (sigma1 pi1 + sigma2 pi2) with pi1 - i pi2 = sqrt(2 hbar |eB|) a:
  // in the oscillator basis the two spinor blocks couple through a/a^dag.
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * dim, 2 * dim);
  for (int m = 1; m < dim; ++m) {
    const double amp = hbar_omega * std::sqrt(static_cast<double>(m));
    h(m - 1, dim + m) = amp;  // upper row, a
    h(dim + m, m - 1) = amp;  // lower row, a^dag
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  return solver.eigenvalues();
}

double printed_v00(const GrapheneConfig& config) {
  const double L = config.magnetic_radius();
  const double l = config.ell;
  const double L2 = L * L, l2 = l * l;
  const double q = std::pow(L, 4) + L2 * l2 + std::pow(l, 4);
  const double pref = L * l2 / (2.0 * std::sqrt((L2 + l2) * q));
  const double expo =
      l2 * config.k0x * config.k0x * (l2 - 1.0) * (L2 + l2) / q;  // as printed
  return pref * std::exp(expo);
}

double printed_v01_over_v00(const GrapheneConfig& config) {
  const double L = config.magnetic_radius();
  const double l2 = config.ell * config.ell;
  const double q = std::pow(L, 4) + L * L * l2 + l2 * l2;
  return L * L * L * l2 * config.k0x * std::sqrt(2.0) / q;
}

std::pair<double, double> rough_amplitude_estimates(const GrapheneConfig& config) {
  const double l2 = config.ell * config.ell;
  const double damp =
      std::exp(-l2 * config.k0x * config.k0x * config.eta3 / (config.hbar * config.hbar));
  const double a1 = l2 * std::sqrt(config.eta3) / config.hbar * damp;
  const double a2 = l2 * l2 * config.k0x * config.eta3 / (config.hbar * config.hbar) * damp;
  return {a1, a2};
}

}  // namespace zbw
