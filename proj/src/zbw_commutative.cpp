#include "zbw/zbw_commutative.hpp"

#include <cmath>
#include <stdexcept>

namespace zbw {

namespace {
constexpr double kElectronCharge = -1.0;

// squared momentum profile (2/(pi p_o^2))^{3/2} e^{-2 p^2/p_o^2}
double profile_sq(double p, double p_o) {
  return std::pow(2.0 / (M_PI * p_o * p_o), 1.5) * std::exp(-2.0 * p * p / (p_o * p_o));
}
}  // namespace

double zbw_frequency(const PhysicalConstants& k) {
  return 2.0 * k.m_e * k.c * k.c / k.hbar;
}

double amplitude_I(double r_o) {
  if (!(r_o > 0.0)) throw std::invalid_argument("amplitude_I: r_o must be > 0");
  return -1.0 / std::sqrt(8.0 * M_PI) / r_o;
}

QuadratureResult amplitude_I_oracle(double r_o, double tol) {
  const double p_o = 2.0 / r_o;
  auto g = [p_o](double p, double theta) {
    const double s = std::sin(theta);
    // -2 f^2/(2 m_e c) p^3 sin^2(theta), natural units
    return -2.0 * profile_sq(p, p_o) / 2.0 * p * p * p * s * s;
  };
  return integrate_radial_polar(g, p_o, tol);
}

double amplitude_J() { return 0.0; }

QuadratureResult amplitude_J_oracle(double r_o, double tol) {
  const double p_o = 2.0 / r_o;
  auto g = [p_o](double p, double theta) {
    return -M_PI * profile_sq(p, p_o) / 2.0 * p * p * p * std::sin(2.0 * theta);
  };
  return integrate_radial_polar(g, p_o, tol);
}

ZbwTrajectoryPoint trajectory_fixed_phi(double phi0, double t) {
  const double w_zbw_t = 2.0 * t;  // w_zbw = 2 in natural units
  ZbwTrajectoryPoint pt;
  pt.t = t;
  pt.x = 0.5 * std::sin(w_zbw_t + phi0);
  pt.y = 0.5 * std::cos(w_zbw_t + phi0);
  pt.z = 0.0;  // the J constant vanishes identically
  return pt;
}

Eigen::Vector2d trajectory_phi_integrand(double phi, double t, double r_o) {
  const double weight = amplitude_I(r_o) * 0.5;
  const double w_zbw_t = 2.0 * t;
  return {weight * std::sin(w_zbw_t + phi), weight * std::cos(w_zbw_t + phi)};
}

Eigen::Vector3d magnetic_moment(Spin spin, double t) {
  const double sign = spin == Spin::Up ? 1.0 : -1.0;
  const double mu3 = sign * (kElectronCharge / 2.0) * (1.0 - std::cos(2.0 * t));
  return {0.0, 0.0, mu3};
}

}  // namespace zbw
