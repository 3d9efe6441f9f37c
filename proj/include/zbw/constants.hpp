#pragma once

#include <string>

namespace zbw {

/// CODATA-style physical constants. Single source of truth for every
/// dimensioned quantity entering the closed forms; the electron charge is
/// kept signed (negative) throughout.
struct PhysicalConstants {
  double hbar;          // J s
  double c;             // m/s
  double m_e;           // kg
  double e;             // C, signed; e < 0 for the electron
  double alpha_fsc;     // fine-structure constant, dimensionless
  double gamma_euler;   // Euler-Mascheroni constant, dimensionless
  double lambda_c;      // m, reduced Compton wavelength hbar/(m_e c)
  double v_f_default;   // m/s, graphene Fermi velocity
  double m_p_over_m_e;  // proton/electron mass ratio
};

PhysicalConstants load_constants();

/// Rebuild the constant set with overridden primaries; lambda_c is
/// recomputed so the derived-value invariant stays intact.
PhysicalConstants make_constants(double hbar, double c, double m_e, double v_f);

enum class FrameKind { SI, DiracNatural, GrapheneNatural };

enum class Dimension { Length, Time, Momentum, Energy, Frequency, MagneticField };

/// A linear unit frame: one SI scale factor per supported dimension.
///
/// DiracNatural measures lengths in lambda_c, momenta in m_e c and times in
/// hbar/(m_e c^2); GrapheneNatural measures lengths in the magnetic radius L
/// and times in 1/Omega and must be constructed with those two scales.
struct UnitFrame {
  FrameKind kind = FrameKind::SI;
  double graphene_length = 0.0;  // L in metres, GrapheneNatural only
  double graphene_omega = 0.0;   // Omega in 1/s, GrapheneNatural only

  static UnitFrame si() { return {FrameKind::SI}; }
  static UnitFrame dirac_natural() { return {FrameKind::DiracNatural}; }
  static UnitFrame graphene_natural(double length_m, double omega_per_s) {
    return {FrameKind::GrapheneNatural, length_m, omega_per_s};
  }
};

/// SI value of one frame unit of `dim`. Throws std::invalid_argument for a
/// GrapheneNatural frame without its scales.
double si_unit(const UnitFrame& frame, Dimension dim, const PhysicalConstants& k);

/// Exact linear rescaling between frames.
double convert(double value, Dimension dim, const UnitFrame& from,
               const UnitFrame& to, const PhysicalConstants& k);

const char* frame_name(FrameKind kind);
const char* dimension_name(Dimension dim);

}  // namespace zbw
