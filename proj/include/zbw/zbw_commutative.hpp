#pragma once

#include <Eigen/Dense>

#include "zbw/constants.hpp"
#include "zbw/dirac_packet.hpp"
#include "zbw/quadrature.hpp"

namespace zbw {

/// Trembling-motion angular frequency 2 m_e c^2 / hbar, in 1/s.
double zbw_frequency(const PhysicalConstants& k);

/// Closed-form Fourier amplitude constant -(8 pi)^{-1/2} lambda_c / r_o.
/// r_o in lambda_c units; the result is dimensionless.
double amplitude_I(double r_o);

/// Defining (p, theta) double integral of the amplitude constant, evaluated
/// by nested adaptive quadrature. Dirac natural units.
QuadratureResult amplitude_I_oracle(double r_o, double tol = 1e-11);

/// The z-channel amplitude constant; the polar integral of sin(2 theta)
/// vanishes identically, so this is exactly zero.
double amplitude_J();

QuadratureResult amplitude_J_oracle(double r_o, double tol = 1e-11);

struct ZbwTrajectoryPoint {
  double t;        // Dirac natural time
  double x, y, z;  // lambda_c units
};

/// Fixed-azimuth Fourier component of the position expectation: a circle of
/// radius lambda_c/2 at the trembling frequency, unit-weight convention.
/// The z-component is exactly zero (the J constant vanishes).
ZbwTrajectoryPoint trajectory_fixed_phi(double phi0, double t);

/// The I-weighted integrand of the azimuthally decomposed (x, y) expectation
/// at azimuth phi, i.e. the quantity whose phi-integral gives the full-domain
/// expectation (which vanishes).
Eigen::Vector2d trajectory_phi_integrand(double phi, double t, double r_o);

/// Closed-form magnetic moment (0, 0, +-(e lambda_c/2)(1 - cos(w_zbw t))),
/// upper sign spin-up. Units of |e| lambda_c with e = -1 folded in.
Eigen::Vector3d magnetic_moment(Spin spin, double t);

}  // namespace zbw
