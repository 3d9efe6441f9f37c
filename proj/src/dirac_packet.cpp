#include "zbw/dirac_packet.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "zbw/quadrature.hpp"

namespace zbw {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};
constexpr double kElectronCharge = -1.0;  // units of |e|

Eigen::Vector3d spherical_point(double p, double theta, double phi) {
  const double st = std::sin(theta);
  return {p * st * std::cos(phi), p * st * std::sin(phi), p * std::cos(theta)};
}

}  // namespace

double DiracPacket::profile(const Eigen::Vector3d& p) const {
  const double norm = std::pow(2.0 / (M_PI * p_o * p_o), 0.75);
  return norm * std::exp(-p.squaredNorm() / (p_o * p_o));
}

Spinor4 DiracPacket::amplitude_plus(const Eigen::Vector3d& p) const {
  const double f = profile(p);
  Spinor4 s;
  for (int i = 0; i < 4; ++i) s[i] = c_plus[static_cast<std::size_t>(i)].eval(p) * f;
  return s;
}

Spinor4 DiracPacket::amplitude_minus(const Eigen::Vector3d& p) const {
  const double f = profile(p);
  Spinor4 s;
  for (int i = 0; i < 4; ++i) s[i] = c_minus[static_cast<std::size_t>(i)].eval(p) * f;
  return s;
}

Spinor4 DiracPacket::mode(const Eigen::Vector3d& p, double t) const {
  const double f = profile(p);
  const C em = std::exp(-kI * omega * t);
  const C ep = std::exp(kI * omega * t);
  Spinor4 s;
  for (int i = 0; i < 4; ++i) {
    const auto k = static_cast<std::size_t>(i);
    s[i] = (c_plus[k].eval(p) * em + c_minus[k].eval(p) * ep) * f;
  }
  return s;
}

Spinor4 DiracPacket::mode_derivative(int axis, const Eigen::Vector3d& p, double t) const {
  const double f = profile(p);
  const C em = std::exp(-kI * omega * t);
  const C ep = std::exp(kI * omega * t);
  const auto a = static_cast<std::size_t>(axis);
  Spinor4 s;
  for (int i = 0; i < 4; ++i) {
    const auto k = static_cast<std::size_t>(i);
    s[i] = (dc_plus[a][k].eval(p) * em + dc_minus[a][k].eval(p) * ep) * f;
  }
  return s;
}

DiracPacket build_packet(const PacketSpec& spec) {
  if (!(spec.r_o > 0.0)) throw std::invalid_argument("build_packet: r_o must be > 0");
  DiracPacket pk;
  pk.spec = spec;
  pk.p_o = 2.0 / spec.r_o;
  pk.K = 0.5;
  pk.omega = 1.0;
  pk.non_relativistic_ok = (1.0 / spec.r_o) < 0.1;

  const Poly3 zero;
  const Poly3 one = Poly3::constant(1.0);
  const Poly3 p1 = Poly3::axis(0);
  const Poly3 p2 = Poly3::axis(1);
  const Poly3 p3 = Poly3::axis(2);
  const Poly3 p_plus = p1 + p2 * kI;    // p1 + i p2
  const Poly3 p_minus = p1 - p2 * kI;   // p1 - i p2

  // Lower components carry K (sigma.p chi); the negative-energy amplitude is
  // the negated lower block with vanishing upper block.
  if (spec.spin == Spin::Up) {
    pk.c_plus = {one, zero, p3 * C(pk.K), p_plus * C(pk.K)};
    pk.c_minus = {zero, zero, p3 * C(-pk.K), p_plus * C(-pk.K)};
  } else {
    pk.c_plus = {zero, one, p_minus * C(pk.K), p3 * C(-pk.K)};
    pk.c_minus = {zero, zero, p_minus * C(-pk.K), p3 * C(pk.K)};
  }

  // d/dp_j [q(p) f(p)] = (dq/dp_j - 2 p_j q / p_o^2) f(p)
  const double gauss_coeff = -2.0 / (pk.p_o * pk.p_o);
  for (int j = 0; j < 3; ++j) {
    const Poly3 pj = Poly3::axis(j);
    for (int i = 0; i < 4; ++i) {
      const auto a = static_cast<std::size_t>(j);
      const auto k = static_cast<std::size_t>(i);
      pk.dc_plus[a][k] = pk.c_plus[k].derivative(j) + pj * pk.c_plus[k] * C(gauss_coeff);
      pk.dc_minus[a][k] = pk.c_minus[k].derivative(j) + pj * pk.c_minus[k] * C(gauss_coeff);
    }
  }
  return pk;
}

Eigen::Vector3d expectation_velocity(const DiracPacket& packet, double t, double tol) {
  const std::array<Matrix4c, 3> alpha = {dirac_alpha(1), dirac_alpha(2), dirac_alpha(3)};
  FnSphericalVec g = [&](double p, double th, double phi, Eigen::VectorXd& out) {
    const Eigen::Vector3d pv = spherical_point(p, th, phi);
    const Spinor4 phi_t = packet.mode(pv, t);
    for (int i = 0; i < 3; ++i)
      out[i] = std::real(phi_t.dot(alpha[static_cast<std::size_t>(i)] * phi_t));
  };
  VectorQuadratureResult r = integrate_spherical_vec(g, 3, packet.p_o, tol);
  return r.value;  // units of c
}

Eigen::Vector3d expectation_grad_cross_alpha(const DiracPacket& packet, double t,
                                             double tol) {
  const std::array<Matrix4c, 3> alpha = {dirac_alpha(1), dirac_alpha(2), dirac_alpha(3)};
  // (grad_p x alpha)_i = eps_ijk d/dp_j (alpha_k .); both real and imaginary
  // parts are integrated, the imaginary part only as a sanity channel.
  FnSphericalVec g = [&](double p, double th, double phi, Eigen::VectorXd& out) {
    const Eigen::Vector3d pv = spherical_point(p, th, phi);
    const Spinor4 phi_t = packet.mode(pv, t);
    std::array<Spinor4, 3> dphi;
    for (int j = 0; j < 3; ++j)
      dphi[static_cast<std::size_t>(j)] = packet.mode_derivative(j, pv, t);
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const int k = (i + 2) % 3;
      const C curl = phi_t.dot(alpha[static_cast<std::size_t>(k)] * dphi[static_cast<std::size_t>(j)]) -
                     phi_t.dot(alpha[static_cast<std::size_t>(j)] * dphi[static_cast<std::size_t>(k)]);
      const C val = kI * (kElectronCharge / 2.0) * curl;
      out[i] = std::real(val);
      out[i + 3] = std::imag(val);
    }
  };
  VectorQuadratureResult r = integrate_spherical_vec(g, 6, packet.p_o, tol);
  return r.value.head<3>();
}

double alpha_p_expectation(const DiracPacket& packet, int i, int j, double t, double tol) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::out_of_range("alpha_p_expectation: indices must be 1..3");
  const Matrix4c a = dirac_alpha(i);
  FnSpherical g = [&](double p, double th, double phi) {
    const Eigen::Vector3d pv = spherical_point(p, th, phi);
    const Spinor4 phi_t = packet.mode(pv, t);
    return std::real(phi_t.dot(a * phi_t)) * pv[j - 1];
  };
  return integrate_spherical(g, packet.p_o, tol).value;
}

double packet_norm(const DiracPacket& packet, double t, double tol) {
  FnSpherical g = [&](double p, double th, double phi) {
    const Eigen::Vector3d pv = spherical_point(p, th, phi);
    return packet.mode(pv, t).squaredNorm();
  };
  return integrate_spherical(g, packet.p_o, tol).value;
}

Eigen::Vector3d momentum_expectation(const DiracPacket& packet, double t, double tol) {
  FnSphericalVec g = [&](double p, double th, double phi, Eigen::VectorXd& out) {
    const Eigen::Vector3d pv = spherical_point(p, th, phi);
    const double density = packet.mode(pv, t).squaredNorm();
    for (int i = 0; i < 3; ++i) out[i] = density * pv[i];
  };
  VectorQuadratureResult r = integrate_spherical_vec(g, 3, packet.p_o, tol);
  return r.value;
}

Spinor4 dirac_residual(const DiracPacket& packet, const Eigen::Vector3d& p, double t) {
  Matrix4c h = dirac_gamma0();  // m_e c^2 = 1
  for (int i = 1; i <= 3; ++i) h += p[i - 1] * dirac_alpha(i);
  const double f = packet.profile(p);
  const C em = std::exp(-kI * packet.omega * t);
  const C ep = std::exp(kI * packet.omega * t);
  Spinor4 cp, cm;
  for (int i = 0; i < 4; ++i) {
    const auto k = static_cast<std::size_t>(i);
    cp[i] = packet.c_plus[k].eval(p) * f;
    cm[i] = packet.c_minus[k].eval(p) * f;
  }
  const Spinor4 phi_t = cp * em + cm * ep;
  const Spinor4 i_dt = packet.omega * (cp * em - cm * ep);  // i hbar d/dt
  return h * phi_t - i_dt;
}

Spinor4 expected_residual(const DiracPacket& packet, const Eigen::Vector3d& p, double t) {
  // The truncation drops exactly (p^2 / 2 m_e) chi from each energy branch.
  const double f = packet.profile(p);
  const C em = std::exp(-kI * packet.omega * t);
  const C ep = std::exp(kI * packet.omega * t);
  Spinor4 r = Spinor4::Zero();
  const int row = packet.spec.spin == Spin::Up ? 0 : 1;
  r[row] = 0.5 * p.squaredNorm() * f * (em - ep);
  return r;
}

}  // namespace zbw
