#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace zbw {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Spinor4 = Eigen::Vector4cd;

/// Pauli matrix sigma_i, i in 1..3.
inline Matrix2c pauli(int i) {
  const std::complex<double> im(0.0, 1.0);
  Matrix2c s;
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -im, im, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("pauli: index must be 1..3");
  }
  return s;
}

/// Dirac alpha_i in the block representation: off-diagonal sigma_i blocks.
inline Matrix4c dirac_alpha(int i) {
  const Matrix2c s = pauli(i);
  Matrix4c a = Matrix4c::Zero();
  a.block<2, 2>(0, 2) = s;
  a.block<2, 2>(2, 0) = s;
  return a;
}

/// gamma_0 = diag(I, -I).
inline Matrix4c dirac_gamma0() {
  Matrix4c g = Matrix4c::Zero();
  g.block<2, 2>(0, 0) = Matrix2c::Identity();
  g.block<2, 2>(2, 2) = -Matrix2c::Identity();
  return g;
}

/// {a, b} = ab + ba.
template <typename DerivedA, typename DerivedB>
auto anticommutator(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("anticommutator: dimension mismatch");
  return (a * b + b * a).eval();
}

template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("commutator: dimension mismatch");
  return (a * b - b * a).eval();
}

}  // namespace zbw
