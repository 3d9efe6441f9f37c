#include "zbw/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace zbw {

PhysicalConstants load_constants() {
  PhysicalConstants k{};
  k.hbar = 1.054571817e-34;
  k.c = 299792458.0;
  k.m_e = 9.1093837015e-31;
  k.e = -1.602176634e-19;
  k.alpha_fsc = 7.2973525693e-3;
  k.gamma_euler = 0.5772156649015329;
  k.lambda_c = k.hbar / (k.m_e * k.c);
  k.v_f_default = 1.0e6;
  k.m_p_over_m_e = 1836.15267343;
  return k;
}

PhysicalConstants make_constants(double hbar, double c, double m_e, double v_f) {
  PhysicalConstants k = load_constants();
  k.hbar = hbar;
  k.c = c;
  k.m_e = m_e;
  k.v_f_default = v_f;
  k.lambda_c = hbar / (m_e * c);
  return k;
}

double si_unit(const UnitFrame& frame, Dimension dim, const PhysicalConstants& k) {
  switch (frame.kind) {
    case FrameKind::SI:
      return 1.0;
    case FrameKind::DiracNatural: {
      const double mc2 = k.m_e * k.c * k.c;
      switch (dim) {
        case Dimension::Length: return k.lambda_c;
        case Dimension::Time: return k.hbar / mc2;
        case Dimension::Momentum: return k.m_e * k.c;
        case Dimension::Energy: return mc2;
        case Dimension::Frequency: return mc2 / k.hbar;
        case Dimension::MagneticField:
          // Schwinger-scale field: |e| B0 lambda_c^2 ~ action, B0 = m^2 c^3/(|e| hbar)
          return k.m_e * k.m_e * k.c * k.c * k.c / (std::abs(k.e) * k.hbar);
      }
      break;
    }
    case FrameKind::GrapheneNatural: {
      if (!(frame.graphene_length > 0.0) || !(frame.graphene_omega > 0.0))
        throw std::invalid_argument("GrapheneNatural frame requires positive L and Omega scales");
      const double L = frame.graphene_length;
      const double om = frame.graphene_omega;
      switch (dim) {
        case Dimension::Length: return L;
        case Dimension::Time: return 1.0 / om;
        case Dimension::Momentum: return k.hbar / L;
        case Dimension::Energy: return k.hbar * om;
        case Dimension::Frequency: return om;
        case Dimension::MagneticField: return k.hbar / (std::abs(k.e) * L * L);
      }
      break;
    }
  }
  throw std::invalid_argument("unsupported dimension");
}

double convert(double value, Dimension dim, const UnitFrame& from,
               const UnitFrame& to, const PhysicalConstants& k) {
  if (from.kind == to.kind && from.graphene_length == to.graphene_length &&
      from.graphene_omega == to.graphene_omega)
    return value;
  return value * (si_unit(from, dim, k) / si_unit(to, dim, k));
}

const char* frame_name(FrameKind kind) {
  switch (kind) {
    case FrameKind::SI: return "SI";
    case FrameKind::DiracNatural: return "DiracNatural";
    case FrameKind::GrapheneNatural: return "GrapheneNatural";
  }
  return "unknown";
}

const char* dimension_name(Dimension dim) {
  switch (dim) {
    case Dimension::Length: return "length";
    case Dimension::Time: return "time";
    case Dimension::Momentum: return "momentum";
    case Dimension::Energy: return "energy";
    case Dimension::Frequency: return "frequency";
    case Dimension::MagneticField: return "magnetic_field";
  }
  return "unknown";
}

}  // namespace zbw
