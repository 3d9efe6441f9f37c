#include "zbw/nc_space_moment.hpp"

#include <cmath>
#include <stdexcept>

#include "zbw/quadrature.hpp"
#include "zbw/spinor_algebra.hpp"
#include "zbw/zbw_commutative.hpp"

namespace zbw {

namespace {
constexpr double kElectronCharge = -1.0;
}

Eigen::Vector3d nc_moment(Spin spin, const Eigen::Vector3d& theta, double t, double r_o) {
  if (!(r_o > 0.0)) throw std::invalid_argument("nc_moment: r_o must be > 0");
  const double w_zbw_t = 2.0 * t;
  const double osc = 1.0 - std::cos(w_zbw_t);
  const double sin_t = std::sin(w_zbw_t);
  const double spin_sign = spin == Spin::Up ? 1.0 : -1.0;
  // (lambda_c/r_o)^2 generalizes the Bohr-radius alpha^2 coefficient.
  const double coeff = -kElectronCharge / (2.0 * r_o * r_o);
  Eigen::Vector3d mu;
  mu[0] = coeff * (theta[0] * osc + spin_sign * 0.5 * theta[1] * sin_t);
  mu[1] = coeff * (theta[1] * osc - spin_sign * 0.5 * theta[0] * sin_t);
  mu[2] = coeff * theta[2] * osc;
  return mu;
}

Eigen::Vector3d oracle_nc_moment(Spin spin, const Eigen::Vector3d& theta, double t,
                                 double r_o, double tol) {
  const DiracPacket packet = build_packet({r_o, spin});
  const std::array<Matrix4c, 3> alpha = {dirac_alpha(1), dirac_alpha(2), dirac_alpha(3)};
  FnSphericalVec g = [&](double p, double th, double phi, Eigen::VectorXd& out) {
    const double st = std::sin(th);
    const Eigen::Vector3d pv(p * st * std::cos(phi), p * st * std::sin(phi),
                             p * std::cos(th));
    const Spinor4 phi_t = packet.mode(pv, t);
    // [alpha x (p x theta)]_i = sum_k alpha_k (theta_k p_i - theta_i p_k)
    for (int i = 0; i < 3; ++i) {
      double val = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double geom = theta[k] * pv[i] - theta[i] * pv[k];
        if (geom == 0.0) continue;
        val += geom * std::real(phi_t.dot(alpha[static_cast<std::size_t>(k)] * phi_t));
      }
      out[i] = val;
    }
  };
  VectorQuadratureResult r = integrate_spherical_vec(g, 3, packet.p_o, tol);
  return (kElectronCharge / 4.0) * r.value;  // hbar = 1
}

MomentResult moment_with_nc(Spin spin, const Eigen::Vector3d& theta, double t, double r_o) {
  MomentResult m;
  m.commutative = magnetic_moment(spin, t);
  m.nc_correction = nc_moment(spin, theta, t, r_o);
  m.total = m.commutative + m.nc_correction;
  return m;
}

Eigen::Vector3d oneloop_reference(const Eigen::Vector3d& theta, Spin spin,
                                  const PhysicalConstants& k) {
  const double spin_sign = spin == Spin::Up ? 1.0 : -1.0;
  const double gyration = 1.0 + k.alpha_fsc / (2.0 * M_PI);
  const double theta_coeff = k.alpha_fsc * k.gamma_euler / (3.0 * M_PI);
  Eigen::Vector3d mu = Eigen::Vector3d::Zero();
  mu[2] = spin_sign * gyration;
  mu += theta_coeff * theta;  // theta in lambda_c^2; m_e c/(lambda_c^2 hbar-scale) = 1
  return (kElectronCharge / 2.0) * mu;
}

double leading_vs_oneloop_ratio(double r_o, const PhysicalConstants& k) {
  // time average of (1 - cos) over a period is 1
  const double leading = 1.0 / (2.0 * r_o * r_o);
  const double oneloop = k.alpha_fsc * k.gamma_euler / (6.0 * M_PI);
  return leading / oneloop;
}

double zeeman_shift(const Eigen::Vector3d& theta, const Eigen::Vector3d& B,
                    double form_factor, const PhysicalConstants& k) {
  const double prefactor =
      kElectronCharge * k.alpha_fsc * k.gamma_euler / (6.0 * M_PI);
  return prefactor * (1.0 - form_factor * k.m_p_over_m_e) * theta.dot(B);
}

}  // namespace zbw
