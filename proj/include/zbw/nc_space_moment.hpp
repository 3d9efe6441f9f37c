#pragma once

#include <Eigen/Dense>

#include "zbw/constants.hpp"
#include "zbw/dirac_packet.hpp"

namespace zbw {

/// Commutative/noncommutative split of the magnetic moment; the total is the
/// componentwise sum by construction.
struct MomentResult {
  Eigen::Vector3d commutative;
  Eigen::Vector3d nc_correction;
  Eigen::Vector3d total;
};

/// Leading-order space-NC correction to the magnetic moment, closed form.
/// theta in lambda_c^2 units, r_o in lambda_c units, result in |e| lambda_c
/// units with e = -1 folded in. The Bohr-radius choice r_o = lambda_c/alpha
/// reproduces the alpha_fsc^2 coefficient; general r_o carries
/// (lambda_c/r_o)^2.
Eigen::Vector3d nc_moment(Spin spin, const Eigen::Vector3d& theta, double t, double r_o);

/// Same quantity evaluated as (e/4 hbar) <alpha x (p x theta)> by spherical
/// quadrature over the truncated packet. Independent of the closed-form path.
Eigen::Vector3d oracle_nc_moment(Spin spin, const Eigen::Vector3d& theta, double t,
                                 double r_o, double tol = 1e-9);

/// Commutative closed form plus NC correction.
MomentResult moment_with_nc(Spin spin, const Eigen::Vector3d& theta, double t, double r_o);

/// One-loop vertex-correction reference value
/// (e lambda_c/2)[(1 + alpha/2pi) sigma_z +- (m_e c alpha gamma_E/(3 pi
/// lambda_c^2)) theta], evaluated in Dirac natural units for comparison only.
Eigen::Vector3d oneloop_reference(const Eigen::Vector3d& theta, Spin spin,
                                  const PhysicalConstants& k);

/// |time-averaged leading-order z correction| / |one-loop theta term z| for a
/// unit theta_3, reported (never asserted close to one).
double leading_vs_oneloop_ratio(double r_o, const PhysicalConstants& k);

/// Hydrogen Zeeman energy shift (e alpha gamma_E/(6 pi lambda_c))
/// (1 - f m_p/m_e) theta.B in Dirac natural units (theta in lambda_c^2,
/// B in the natural field unit, result in m_e c^2).
double zeeman_shift(const Eigen::Vector3d& theta, const Eigen::Vector3d& B,
                    double form_factor, const PhysicalConstants& k);

}  // namespace zbw
