#include "zbw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace zbw {
namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct PanelResult {
  double kronrod = 0.0;
  double error = 0.0;
};

PanelResult gk15(const Fn1D& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = 0.0;
  double resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    if (i == 7) {
      const double fc = f(c);
      ++evals;
      resk += kWgk[7] * fc;
      resg += kWg[3] * fc;
      break;
    }
    const double x = h * kXgk[i];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    evals += 2;
    resk += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
  }
  PanelResult r;
  r.kronrod = resk * h;
  r.error = std::abs((resk - resg) * h);
  return r;
}

struct Panel {
  double a, b;
  double value, error;
};

QuadratureResult adaptive_gk(const Fn1D& f, double a, double b, double tol,
                             int max_panels) {
  long evals = 0;
  std::vector<Panel> panels;
  PanelResult first = gk15(f, a, b, evals);
  panels.push_back({a, b, first.kronrod, first.error});

  auto total_error = [&panels] {
    double s = 0.0;
    for (const auto& p : panels) s += p.error;
    return s;
  };
  auto total_value = [&panels] {
    double s = 0.0;
    for (const auto& p : panels) s += p.value;
    return s;
  };

  while (total_error() > tol && static_cast<int>(panels.size()) < max_panels) {
    // split the worst panel
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    PanelResult left = gk15(f, p.a, mid, evals);
    PanelResult right = gk15(f, mid, p.b, evals);
    panels[worst] = {p.a, mid, left.kronrod, left.error};
    panels.push_back({mid, p.b, right.kronrod, right.error});
  }

  QuadratureResult r{total_value(), total_error(), evals};
  if (r.error_estimate > tol && static_cast<int>(panels.size()) >= max_panels)
    throw QuadratureError("adaptive quadrature did not reach tolerance", r);
  return r;
}

std::mutex g_rule_mutex;

GaussRule golub_welsch(const Eigen::VectorXd& subdiag, double mu0) {
  const int n = static_cast<int>(subdiag.size()) + 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(Eigen::VectorXd::Zero(n), subdiag,
                                Eigen::ComputeEigenvectors);
  GaussRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureResult integrate_interval(const Fn1D& f, double a, double b, double tol) {
  return adaptive_gk(f, a, b, tol, 4000);
}

QuadratureResult integrate_1d(const Fn1D& f, double tol, LineMap map) {
  // x = center + scale*sinh(u): Gaussian decay in x becomes doubly
  // exponential decay in u, so a fixed u-window covers the line.
  const double U = std::asinh(45.0);
  auto g = [&f, &map](double u) {
    const double s = std::sinh(u);
    return f(map.center + map.scale * s) * map.scale * std::cosh(u);
  };
  return adaptive_gk(g, -U, U, tol, 4000);
}

const GaussRule& gauss_hermite_rule(int n) {
  if (n < 1 || n > 200) throw std::invalid_argument("gauss_hermite_rule: n out of range");
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Jacobi matrix for Hermite: zero diagonal, subdiag sqrt(k/2).
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  GaussRule rule = golub_welsch(sub, std::sqrt(M_PI));
  return cache.emplace(n, std::move(rule)).first->second;
}

const GaussRule& gauss_legendre_rule(int n) {
  if (n < 1 || n > 1024) throw std::invalid_argument("gauss_legendre_rule: n out of range");
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  GaussRule rule = golub_welsch(sub, 2.0);
  return cache.emplace(n, std::move(rule)).first->second;
}

double integrate_hermite_weighted(const Fn1D& f, int n) {
  const GaussRule& rule = gauss_hermite_rule(n);
  double acc = 0.0;
  for (int i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

QuadratureResult integrate_1d_hermite(const Fn1D& f, int n, LineMap map) {
  const GaussRule& rule = gauss_hermite_rule(n);
  double acc = 0.0;
  for (int i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    acc += rule.weights[i] * std::exp(x * x) * f(map.center + map.scale * x);
  }
  const GaussRule& half = gauss_hermite_rule(n / 2);
  double acc_half = 0.0;
  for (int i = 0; i < half.nodes.size(); ++i) {
    const double x = half.nodes[i];
    acc_half += half.weights[i] * std::exp(x * x) * f(map.center + map.scale * x);
  }
  QuadratureResult r;
  r.value = map.scale * acc;
  r.error_estimate = std::abs(map.scale * (acc - acc_half));
  r.evaluations = n + n / 2;
  return r;
}

namespace {

struct SphericalLevel {
  int n_radial, n_polar, n_azimuth;
};

const SphericalLevel kLevels[] = {
    {32, 16, 8}, {48, 24, 16}, {64, 32, 24}, {96, 48, 32}, {128, 64, 48}, {192, 96, 64}};

Eigen::VectorXd spherical_pass(const FnSphericalVec& g, int ncomp, double p_scale,
                               const SphericalLevel& lvl, long& evals) {
  const double p_max = 8.0 * p_scale;
  const GaussRule& rad = gauss_legendre_rule(lvl.n_radial);
  const GaussRule& pol = gauss_legendre_rule(lvl.n_polar);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(ncomp);
  Eigen::VectorXd sample(ncomp);
  const double dphi = 2.0 * M_PI / lvl.n_azimuth;
  for (int ir = 0; ir < lvl.n_radial; ++ir) {
    const double p = 0.5 * p_max * (rad.nodes[ir] + 1.0);
    const double wp = 0.5 * p_max * rad.weights[ir] * p * p;
    for (int it = 0; it < lvl.n_polar; ++it) {
      const double th = 0.5 * M_PI * (pol.nodes[it] + 1.0);
      const double wt = 0.5 * M_PI * pol.weights[it] * std::sin(th);
      for (int ip = 0; ip < lvl.n_azimuth; ++ip) {
        const double phi = dphi * ip;
        g(p, th, phi, sample);
        ++evals;
        acc += (wp * wt * dphi) * sample;
      }
    }
  }
  return acc;
}

}  // namespace

VectorQuadratureResult integrate_spherical_vec(const FnSphericalVec& g, int ncomp,
                                               double p_scale, double tol) {
  long evals = 0;
  Eigen::VectorXd prev;
  for (const auto& lvl : kLevels) {
    Eigen::VectorXd cur = spherical_pass(g, ncomp, p_scale, lvl, evals);
    if (prev.size() > 0) {
      const double delta = (cur - prev).cwiseAbs().maxCoeff();
      if (delta <= tol) return {cur, delta, evals};
    }
    prev = std::move(cur);
  }
  QuadratureResult best{prev.size() ? prev[0] : 0.0, tol, evals};
  throw QuadratureError("spherical quadrature did not converge", best);
}

QuadratureResult integrate_spherical(const FnSpherical& g, double p_scale, double tol) {
  FnSphericalVec wrap = [&g](double p, double th, double phi, Eigen::VectorXd& out) {
    out[0] = g(p, th, phi);
  };
  VectorQuadratureResult v = integrate_spherical_vec(wrap, 1, p_scale, tol);
  return {v.value[0], v.error_estimate, v.evaluations};
}

QuadratureResult integrate_radial_polar(
    const std::function<double(double, double)>& g, double p_scale, double tol) {
  long evals = 0;
  const double U = std::asinh(45.0);
  auto outer = [&](double theta) {
    auto inner = [&](double u) {
      const double p = p_scale * std::sinh(u);
      ++evals;
      return g(p, theta) * p_scale * std::cosh(u);
    };
    return adaptive_gk(inner, 0.0, U, tol / 64.0, 2000).value;
  };
  QuadratureResult r = adaptive_gk(outer, 0.0, M_PI, tol, 2000);
  r.evaluations = evals;
  return r;
}

namespace {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// uniform in (0, 1]
inline double u01(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

MonteCarloResult monte_carlo_gaussian(
    const std::function<double(const Eigen::Vector3d&)>& g, long n,
    std::uint64_t seed, double sigma_per_axis) {
  if (n < 1) throw std::invalid_argument("monte_carlo_gaussian: n must be >= 1");
  std::uint64_t state = seed;
  double mean = 0.0;
  double m2 = 0.0;
  for (long i = 0; i < n; ++i) {
    // Box-Muller, two pairs per sample; the fourth normal is discarded.
    const double a1 = u01(splitmix64_next(state));
    const double a2 = u01(splitmix64_next(state));
    const double b1 = u01(splitmix64_next(state));
    const double b2 = u01(splitmix64_next(state));
    const double r1 = std::sqrt(-2.0 * std::log(a1));
    const double r2 = std::sqrt(-2.0 * std::log(b1));
    Eigen::Vector3d p(r1 * std::cos(2.0 * M_PI * a2), r1 * std::sin(2.0 * M_PI * a2),
                      r2 * std::cos(2.0 * M_PI * b2));
    p *= sigma_per_axis;
    const double v = g(p);
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  MonteCarloResult r;
  r.value = mean;
  r.std_error = n > 1 ? std::sqrt(m2 / (static_cast<double>(n) - 1.0) /
                                  static_cast<double>(n))
                      : 0.0;
  r.evaluations = n;
  r.algorithm = "splitmix64-boxmuller-v1";
  return r;
}

}  // namespace zbw
