#pragma once

#include <Eigen/Dense>
#include <functional>

namespace zbw {

/// Noncommutativity parameters: the axial duals of the antisymmetric
/// coordinate (theta, length^2) and momentum (eta, momentum^2) tensors,
/// theta_ij = eps_ijk theta_k and eta_ij = eps_ijk eta_k.
struct NCParams {
  Eigen::Vector3d theta = Eigen::Vector3d::Zero();
  Eigen::Vector3d eta = Eigen::Vector3d::Zero();
};

struct PhasePoint {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
};

/// Antisymmetric dual matrix M_ij = eps_ijk v_k.
Eigen::Matrix3d dual_matrix(const Eigen::Vector3d& v);

/// Linear map from canonical (primed) variables to the noncommuting ones:
/// x_i = x'_i - theta_ij p'_j/(2 hbar), p_i = p'_i + eta_ij x'_j/(2 hbar).
PhasePoint bopp_shift(const PhasePoint& prime, const NCParams& nc, double hbar);

/// Commutator tables induced by the shift on linear coordinate functions;
/// entry (i, j) is the coefficient of i in [A_i, B_j], so xx = theta_ij,
/// pp = eta_ij and xp = hbar(delta_ij + theta_ik eta_jk/(4 hbar^2)).
struct BracketTable {
  Eigen::Matrix3d xx, pp, xp;
};

BracketTable verify_brackets(const NCParams& nc, double hbar);

/// Generalized symplectic structure assembled from the exact commutator
/// blocks: [[theta_ij, M_ij], [-M_ji, eta_ij]] with
/// M = hbar I + theta_ik eta_jk/(4 hbar). Antisymmetric by construction and
/// canonical in the commutative limit.
struct SymplecticStructure {
  Eigen::Matrix<double, 6, 6> alpha;
};

SymplecticStructure build_symplectic(const NCParams& nc, double hbar);

using PhaseFunction = std::function<double(const PhasePoint&)>;

/// H composed with the shift: the Hamiltonian keeps its commutative
/// functional form and is evaluated at the shifted arguments.
PhaseFunction nc_hamiltonian(PhaseFunction h, const NCParams& nc, double hbar);

}  // namespace zbw
