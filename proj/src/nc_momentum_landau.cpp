#include "zbw/nc_momentum_landau.hpp"

#include <cmath>
#include <stdexcept>

namespace zbw {

Eigen::Vector3d effective_field(const Eigen::Vector3d& eta, const PhysicalConstants& k) {
  return eta / (k.e * k.hbar);
}

Eigen::Vector3d effective_vector_potential(const Eigen::Vector3d& eta,
                                           const Eigen::Vector3d& r,
                                           const PhysicalConstants& k) {
  return eta.cross(r) / (2.0 * k.e * k.hbar);
}

Eigen::Vector3d nc_generalized_momentum(const Eigen::Vector3d& p,
                                        const Eigen::Vector3d& eta,
                                        const Eigen::Vector3d& r,
                                        const PhysicalConstants& k) {
  return p - eta.cross(r) / (2.0 * k.hbar);
}

double magnetic_radius(double B, const PhysicalConstants& k) {
  if (B == 0.0) throw std::invalid_argument("magnetic_radius: B must be nonzero");
  return std::sqrt(k.hbar / std::abs(k.e * B));
}

bool landau_query_valid(const LandauQuery& q) {
  if (q.n < 0) return false;
  if (q.l < -q.n || q.l > q.n) return false;
  if ((q.n - q.l) % 2 != 0) return false;
  if (std::abs(q.s3) != 0.5) return false;
  return true;
}

double landau_energy(const LandauQuery& q, const PhysicalConstants& k) {
  if (!landau_query_valid(q))
    throw std::invalid_argument("landau_energy: invalid (n, l, s3) combination");
  if (!(q.B3 > 0.0))
    throw std::invalid_argument("landau_energy: B3 must be positive");
  const double c2 = k.c * k.c;
  const double mc2 = k.m_e * c2;
  const double e2 = mc2 * mc2 + q.p3 * q.p3 * c2 +
                    c2 * std::abs(q.charge) * k.hbar * q.B3 * (q.n - q.l + 1) -
                    2.0 * c2 * q.charge * q.B3 * (q.s3 * k.hbar);
  if (e2 < 0.0) throw std::domain_error("landau_energy: negative E^2");
  return std::sqrt(e2);
}

LandauLevel landau_level(int k, double p3, double B3, double charge,
                         const PhysicalConstants& k_const, int n_max) {
  if (k < 0) throw std::invalid_argument("landau_level: k must be >= 0");
  if (!(B3 > 0.0)) throw std::invalid_argument("landau_level: B3 must be positive");
  const double c2 = k_const.c * k_const.c;
  const double mc2 = k_const.m_e * c2;
  LandauLevel level;
  level.k = k;
  level.energy = std::sqrt(mc2 * mc2 + p3 * p3 * c2 +
                           2.0 * k * c2 * std::abs(charge) * k_const.hbar * B3);

  // Negative charge: spin-up branch n - l = 2(k-1), spin-down n - l = 2k.
  // Positive charge swaps the branches. The k = 0 up-branch would need
  // n - l < 0 and is excluded, which lifts the zero-level degeneracy.
  const bool negative = charge < 0.0;
  const double up = 0.5, down = -0.5;
  const int gap_up = negative ? 2 * (k - 1) : 2 * k;
  const int gap_down = negative ? 2 * k : 2 * (k - 1);
  for (int n = 0; n <= n_max; ++n) {
    if (gap_up >= 0 && n - gap_up >= -n) {
      const int l = n - gap_up;
      if (l >= -n && l <= n) level.degenerate_states.push_back({n, l, up});
    }
    if (gap_down >= 0) {
      const int l = n - gap_down;
      if (l >= -n && l <= n) level.degenerate_states.push_back({n, l, down});
    }
  }
  return level;
}

double nc_landau_energy(double eta3, double p3, int n, int l, double s3,
                        const PhysicalConstants& k) {
  LandauQuery probe;
  probe.n = n;
  probe.l = l;
  probe.s3 = s3;
  if (!landau_query_valid(probe))
    throw std::invalid_argument("nc_landau_energy: invalid (n, l, s3) combination");
  const double c2 = k.c * k.c;
  const double mc2 = k.m_e * c2;
  // |e| B_eta -> |eta|/hbar and e B_eta -> eta/hbar: the charge cancels.
  const double e2 = mc2 * mc2 + p3 * p3 * c2 +
                    c2 * std::abs(eta3) * (n - l + 1) -
                    2.0 * c2 * eta3 * s3;
  if (e2 < 0.0) throw std::domain_error("nc_landau_energy: negative E^2");
  return std::sqrt(e2);
}

double nc_landau_energy_k(double eta3, double p3, int k,
                          const PhysicalConstants& k_const) {
  if (k < 0) throw std::invalid_argument("nc_landau_energy_k: k must be >= 0");
  const double c2 = k_const.c * k_const.c;
  const double mc2 = k_const.m_e * c2;
  return std::sqrt(mc2 * mc2 + p3 * p3 * c2 + 2.0 * k * c2 * std::abs(eta3));
}

}  // namespace zbw
