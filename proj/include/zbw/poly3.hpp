#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

namespace zbw {

/// Sparse trivariate polynomial in the momentum components with complex
/// coefficients. The Gaussian wave-packet amplitudes are (polynomial x
/// Gaussian profile), so momentum derivatives close on this type and no
/// numerical differentiation is ever needed.
class Poly3 {
 public:
  using Exponents = std::array<int, 3>;
  using Coeff = std::complex<double>;
  struct Term {
    Exponents exps;
    Coeff coeff;
  };

  Poly3() = default;

  static Poly3 constant(Coeff c) {
    Poly3 p;
    if (c != Coeff(0.0, 0.0)) p.terms_.push_back({{0, 0, 0}, c});
    return p;
  }

  /// The coordinate monomial p_axis, axis in 0..2.
  static Poly3 axis(int axis, Coeff scale = Coeff(1.0, 0.0)) {
    Poly3 p;
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = 1;
    p.terms_.push_back({e, scale});
    p.normalize();
    return p;
  }

  Poly3 operator+(const Poly3& other) const {
    Poly3 r = *this;
    r.terms_.insert(r.terms_.end(), other.terms_.begin(), other.terms_.end());
    r.normalize();
    return r;
  }

  Poly3 operator-(const Poly3& other) const { return *this + other * Coeff(-1.0, 0.0); }

  Poly3 operator*(Coeff s) const {
    Poly3 r = *this;
    for (auto& t : r.terms_) t.coeff *= s;
    r.normalize();
    return r;
  }

  Poly3 operator*(const Poly3& other) const {
    Poly3 r;
    for (const auto& a : terms_)
      for (const auto& b : other.terms_)
        r.terms_.push_back({{a.exps[0] + b.exps[0], a.exps[1] + b.exps[1],
                             a.exps[2] + b.exps[2]},
                            a.coeff * b.coeff});
    r.normalize();
    return r;
  }

  /// d/dp_axis.
  Poly3 derivative(int axis) const {
    Poly3 r;
    const auto ax = static_cast<std::size_t>(axis);
    for (const auto& t : terms_) {
      if (t.exps[ax] == 0) continue;
      Exponents e = t.exps;
      const double n = static_cast<double>(e[ax]);
      e[ax] -= 1;
      r.terms_.push_back({e, t.coeff * n});
    }
    r.normalize();
    return r;
  }

  /// Complex conjugate; the variables are real, so conjugating the
  /// coefficients conjugates the polynomial.
  Poly3 conjugated() const {
    Poly3 r = *this;
    for (auto& t : r.terms_) t.coeff = std::conj(t.coeff);
    return r;
  }

  Coeff eval(const Eigen::Vector3d& p) const {
    Coeff acc(0.0, 0.0);
    for (const auto& t : terms_) {
      double mono = 1.0;
      for (int a = 0; a < 3; ++a)
        for (int k = 0; k < t.exps[static_cast<std::size_t>(a)]; ++k) mono *= p[a];
      acc += t.coeff * mono;
    }
    return acc;
  }

  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  void normalize() {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      bool merged = false;
      for (auto& o : out) {
        if (o.exps == t.exps) {
          o.coeff += t.coeff;
          merged = true;
          break;
        }
      }
      if (!merged) out.push_back(t);
    }
    terms_.clear();
    for (const auto& t : out)
      if (std::abs(t.coeff) != 0.0) terms_.push_back(t);
  }

  std::vector<Term> terms_;
};

inline Poly3 operator*(Poly3::Coeff s, const Poly3& p) { return p * s; }

}  // namespace zbw
