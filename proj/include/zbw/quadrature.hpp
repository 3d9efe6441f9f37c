#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace zbw {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

struct VectorQuadratureResult {
  Eigen::VectorXd value;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Thrown when refinement is exhausted; carries the best estimate so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_estimate(best) {}
  QuadratureResult best_estimate;
};

using Fn1D = std::function<double(double)>;

/// Center/scale hint for whole-line integrands; the real line is mapped to a
/// finite interval through x = center + scale*sinh(u) before subdivision.
struct LineMap {
  double center = 0.0;
  double scale = 1.0;
};

/// Adaptive Gauss-Kronrod (7-15) on a finite interval.
QuadratureResult integrate_interval(const Fn1D& f, double a, double b, double tol);

/// Adaptive quadrature over the whole real line for integrands with Gaussian
/// decay, via the exponential sinh substitution.
QuadratureResult integrate_1d(const Fn1D& f, double tol, LineMap map = {});

struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Hermite rule (weight e^{-x^2} on the real line), nodes/weights by
/// Golub-Welsch. Cached per n.
const GaussRule& gauss_hermite_rule(int n);

/// Gauss-Legendre rule on [-1, 1]. Cached per n.
const GaussRule& gauss_legendre_rule(int n);

/// Fixed-node integral of f against the weight e^{-x^2}.
double integrate_hermite_weighted(const Fn1D& f, int n);

/// Fixed-node integral of a Gaussian-decay f over the real line using the
/// Gauss-Hermite grid with the weight divided back out. Algorithmically
/// independent of the adaptive path.
QuadratureResult integrate_1d_hermite(const Fn1D& f, int n, LineMap map = {});

using FnSpherical = std::function<double(double p, double theta, double phi)>;
using FnSphericalVec =
    std::function<void(double p, double theta, double phi, Eigen::VectorXd& out)>;

/// Spherical momentum-space integral of g(p, theta, phi) p^2 sin(theta) over
/// p in [0, inf), theta in [0, pi], phi in [0, 2pi). Tensor-product rule
/// (Gauss-Legendre radial/polar, periodic trapezoid azimuthal) with order
/// doubling until the level-to-level change meets tol; p_scale sets the
/// radial truncation for exp(-2 p^2/p_scale^2)-decay integrands.
QuadratureResult integrate_spherical(const FnSpherical& g, double p_scale, double tol);

/// Vector-valued variant; all components are integrated in one traversal.
VectorQuadratureResult integrate_spherical_vec(const FnSphericalVec& g, int ncomp,
                                               double p_scale, double tol);

/// Nested adaptive double integral of g(p, theta) over p in [0, inf),
/// theta in [0, pi]. No measure factors are supplied; the caller's integrand
/// carries them.
QuadratureResult integrate_radial_polar(
    const std::function<double(double, double)>& g, double p_scale, double tol);

struct MonteCarloResult {
  double value = 0.0;
  double std_error = 0.0;
  long evaluations = 0;
  std::string algorithm;
};

/// Monte-Carlo average of g over an isotropic 3D Gaussian with the given
/// per-axis standard deviation, i.e. an estimate of the integral of g times
/// the normalized Gaussian density. Deterministic per (n, seed); the
/// generator identifier is reported in the result.
MonteCarloResult monte_carlo_gaussian(
    const std::function<double(const Eigen::Vector3d&)>& g, long n,
    std::uint64_t seed, double sigma_per_axis);

}  // namespace zbw
