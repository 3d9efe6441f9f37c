#include "zbw/nc_phase_space.hpp"

namespace zbw {

Eigen::Matrix3d dual_matrix(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, v[2], -v[1],
      -v[2], 0.0, v[0],
       v[1], -v[0], 0.0;
  return m;
}

PhasePoint bopp_shift(const PhasePoint& prime, const NCParams& nc, double hbar) {
  const Eigen::Matrix3d th = dual_matrix(nc.theta);
  const Eigen::Matrix3d et = dual_matrix(nc.eta);
  PhasePoint out;
  out.x = prime.x - th * prime.p / (2.0 * hbar);
  out.p = prime.p + et * prime.x / (2.0 * hbar);
  return out;
}

namespace {

// 6-vector of coefficients of a linear phase-space observable over
// (x'_1..3, p'_1..3); canonical Poisson bracket of two such observables is
// the constant f^T J g.
using Coeff6 = Eigen::Matrix<double, 6, 1>;

double poisson(const Coeff6& f, const Coeff6& g) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += f[i] * g[i + 3] - f[i + 3] * g[i];
  return s;
}

}  // namespace

BracketTable verify_brackets(const NCParams& nc, double hbar) {
  const Eigen::Matrix3d th = dual_matrix(nc.theta);
  const Eigen::Matrix3d et = dual_matrix(nc.eta);

  // rows of the shift: x_i = e_i . x' - (theta row_i/2hbar) . p',
  //                    p_i = (eta row_i/2hbar) . x' + e_i . p'
  std::array<Coeff6, 3> x_coeff, p_coeff;
  for (int i = 0; i < 3; ++i) {
    Coeff6 cx = Coeff6::Zero();
    cx[i] = 1.0;
    cx.tail<3>() = -th.row(i).transpose() / (2.0 * hbar);
    x_coeff[static_cast<std::size_t>(i)] = cx;

    Coeff6 cp = Coeff6::Zero();
    cp[i + 3] = 1.0;
    cp.head<3>() = et.row(i).transpose() / (2.0 * hbar);
    p_coeff[static_cast<std::size_t>(i)] = cp;
  }

  BracketTable table;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto a = static_cast<std::size_t>(i);
      const auto b = static_cast<std::size_t>(j);
      // [A, B] = i hbar {A, B} for linear observables
      table.xx(i, j) = hbar * poisson(x_coeff[a], x_coeff[b]);
      table.pp(i, j) = hbar * poisson(p_coeff[a], p_coeff[b]);
      table.xp(i, j) = hbar * poisson(x_coeff[a], p_coeff[b]);
    }
  }
  return table;
}

SymplecticStructure build_symplectic(const NCParams& nc, double hbar) {
  const Eigen::Matrix3d th = dual_matrix(nc.theta);
  const Eigen::Matrix3d et = dual_matrix(nc.eta);
  const Eigen::Matrix3d mixed =
      hbar * Eigen::Matrix3d::Identity() + th * et.transpose() / (4.0 * hbar);
  SymplecticStructure s;
  s.alpha.block<3, 3>(0, 0) = th;
  s.alpha.block<3, 3>(0, 3) = mixed;
  s.alpha.block<3, 3>(3, 0) = -mixed.transpose();
  s.alpha.block<3, 3>(3, 3) = et;
  return s;
}

PhaseFunction nc_hamiltonian(PhaseFunction h, const NCParams& nc, double hbar) {
  return [h = std::move(h), nc, hbar](const PhasePoint& prime) {
    return h(bopp_shift(prime, nc, hbar));
  };
}

}  // namespace zbw
