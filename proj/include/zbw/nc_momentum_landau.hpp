#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zbw/constants.hpp"

namespace zbw {

/// Effective uniform field induced by momentum noncommutativity,
/// B_eta = eta/(e hbar) componentwise with the signed charge. SI units.
Eigen::Vector3d effective_field(const Eigen::Vector3d& eta, const PhysicalConstants& k);

/// Symmetric-gauge potential of the effective field,
/// A_eta = (eta x r)/(2 e hbar); curl A_eta = B_eta for the linear map.
Eigen::Vector3d effective_vector_potential(const Eigen::Vector3d& eta,
                                           const Eigen::Vector3d& r,
                                           const PhysicalConstants& k);

/// Generalized kinetic momentum pi_eta = p - e A_eta = p - (eta x r)/(2 hbar);
/// the charge cancels.
Eigen::Vector3d nc_generalized_momentum(const Eigen::Vector3d& p,
                                        const Eigen::Vector3d& eta,
                                        const Eigen::Vector3d& r,
                                        const PhysicalConstants& k);

/// Magnetic radius sqrt(hbar/|e B|).
double magnetic_radius(double B, const PhysicalConstants& k);

/// One relativistic Landau state of a charged Dirac particle in a uniform
/// field along z. l is restricted to -n, -n+2, ..., n-2, n.
struct LandauQuery {
  double p3 = 0.0;     // kg m/s
  double B3 = 0.0;     // T, must be positive for the printed branch form
  int n = 0;           // non-negative oscillator number
  int l = 0;           // angular momentum quantum number, L3 = hbar l
  double s3 = 0.5;     // spin projection in units of hbar, +-1/2
  double charge = 0.0; // C, signed
};

bool landau_query_valid(const LandauQuery& q);

/// Positive root of E^2 = m^2 c^4 + p3^2 c^2 + c^2 |e| hbar B3 (n - l + 1)
/// - 2 c^2 e B3 s3. Throws for an invalid (n, l, s3) combination or B3 <= 0.
double landau_energy(const LandauQuery& q, const PhysicalConstants& k);

/// Landau level in the collapsed k-form E^2 = m^2 c^4 + p3^2 c^2
/// + 2 k c^2 |e| hbar B3, with the (n, l, s3) states mapping to it. At k = 0
/// a single spin branch survives: spin-down for negative charge, spin-up for
/// positive.
struct LandauState {
  int n;
  int l;
  double s3;  // units of hbar
};

struct LandauLevel {
  int k = 0;
  double energy = 0.0;  // J
  std::vector<LandauState> degenerate_states;
};

LandauLevel landau_level(int k, double p3, double B3, double charge,
                         const PhysicalConstants& k_const, int n_max = 6);

/// Momentum-NC Landau spectrum: the external-field solution with the
/// effective field substituted. The substitution cancels the charge, leaving
/// E^2 = m^2 c^4 + p3^2 c^2 + c^2 |eta3| (n - l + 1) - 2 c^2 eta3 s3 / hbar,
/// manifestly independent of the sign of the electric charge.
double nc_landau_energy(double eta3, double p3, int n, int l, double s3,
                        const PhysicalConstants& k);

/// k-form of the NC spectrum.
double nc_landau_energy_k(double eta3, double p3, int k,
                          const PhysicalConstants& k_const);

}  // namespace zbw
