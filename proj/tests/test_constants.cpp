#include <doctest.h>

#include <cmath>

#include "zbw/constants.hpp"
#include "zbw/zbw_commutative.hpp"

using namespace zbw;

TEST_CASE("constants carry the electron scales") {
  const PhysicalConstants k = load_constants();
  CHECK(k.lambda_c == doctest::Approx(k.hbar / (k.m_e * k.c)).epsilon(1e-12));
  CHECK(k.lambda_c == doctest::Approx(3.86e-13).epsilon(5e-3));
  CHECK(k.lambda_c == doctest::Approx(3.8616e-13).epsilon(1e-3));
  CHECK(k.alpha_fsc > 7.29e-3);
  CHECK(k.alpha_fsc < 7.30e-3);
  CHECK(k.e < 0.0);
  CHECK(std::abs(k.e) == doctest::Approx(1.602e-19).epsilon(1e-3));
  CHECK(zbw_frequency(k) == doctest::Approx(1.6e21).epsilon(0.05));
  CHECK(zbw_frequency(k) == doctest::Approx(1.553e21).epsilon(1e-3));
}

TEST_CASE("constant overrides recompute the derived wavelength") {
  const PhysicalConstants base = load_constants();
  const PhysicalConstants doubled =
      make_constants(base.hbar, base.c, 2.0 * base.m_e, base.v_f_default);
  CHECK(doubled.lambda_c == doctest::Approx(base.lambda_c / 2.0).epsilon(1e-14));
  CHECK(zbw_frequency(doubled) ==
        doctest::Approx(2.0 * zbw_frequency(base)).epsilon(1e-14));
}

TEST_CASE("frame conversions are exact rescalings") {
  const PhysicalConstants k = load_constants();
  const UnitFrame si = UnitFrame::si();
  const UnitFrame dirac = UnitFrame::dirac_natural();

  CHECK(convert(k.lambda_c, Dimension::Length, si, dirac, k) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(convert(0.0, Dimension::Energy, dirac, si, k) == 0.0);

  const double omega = 1.6e7;
  const UnitFrame graphene = UnitFrame::graphene_natural(8.75e-2, omega);
  CHECK(convert(1.0 / omega, Dimension::Time, si, graphene, k) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // round trip across every dimension and frame pair
  const Dimension dims[] = {Dimension::Length,    Dimension::Time,
                            Dimension::Momentum,  Dimension::Energy,
                            Dimension::Frequency, Dimension::MagneticField};
  const UnitFrame frames[] = {si, dirac, graphene};
  for (const auto& a : frames)
    for (const auto& b : frames)
      for (const auto d : dims) {
        const double x = 0.8191;
        CHECK(convert(convert(x, d, a, b, k), d, b, a, k) ==
              doctest::Approx(x).epsilon(1e-12));
      }

  // natural trembling frequency is 2 in its own frame
  CHECK(convert(zbw_frequency(k), Dimension::Frequency, si, dirac, k) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("graphene frame requires its scales") {
  const PhysicalConstants k = load_constants();
  UnitFrame bad;
  bad.kind = FrameKind::GrapheneNatural;
  CHECK_THROWS_AS(si_unit(bad, Dimension::Length, k), std::invalid_argument);
}
