#pragma once

#include <cmath>
#include <stdexcept>

namespace zbw {

/// Physicists' Hermite polynomial H_m(x) by the three-term recurrence
/// H_{m+1} = 2x H_m - 2m H_{m-1}. Safe in double up to m of a few hundred;
/// pair with a log-space prefactor for normalized evaluations.
inline double hermite_h(int m, double x) {
  if (m < 0) throw std::invalid_argument("hermite_h: m must be >= 0");
  double hm1 = 0.0;
  double h = 1.0;
  for (int k = 0; k < m; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

/// Scaled Hermite function H_m(x) e^{-x^2/2} / sqrt(2^m m!), evaluated by the
/// stable normalized recurrence. Bounded for all (m, x); underflows smoothly
/// to zero in the tails instead of overflowing.
inline double hermite_scaled(int m, double x) {
  if (m < 0) throw std::invalid_argument("hermite_scaled: m must be >= 0");
  double hm1 = 0.0;
  double h = std::exp(-0.5 * x * x);
  for (int k = 0; k < m; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * x * h -
                        std::sqrt(k / (k + 1.0)) * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

}  // namespace zbw
