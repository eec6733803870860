#include <cmath>
#include <numbers>

#include "cylfocus/analytic.hpp"
#include "cylfocus/errors.hpp"
#include "doctest.h"

using namespace cylfocus;
using std::numbers::pi;

namespace {

constexpr double kLambda = 0.05;
const CylinderSpec kShort{20 * kLambda, 40 * kLambda, 2 * pi / kLambda};
const CylinderSpec kUnit{1.0, 10.0, 40 * pi};

}  // namespace

TEST_CASE("axial gains at known foci") {
    CHECK(axial_gain(Component::x, 0.0, kShort) == doctest::Approx(8 - 8 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(axial_gain(Component::x, 0.0, kShort) == doctest::Approx(2.34315).epsilon(1e-5));
    CHECK(axial_gain(Component::x, 10 * kLambda, kShort) == doctest::Approx(2.20349).epsilon(1e-5));
    CHECK(axial_gain(Component::y, 10 * kLambda, kShort) ==
          axial_gain(Component::x, 10 * kLambda, kShort));
    CHECK(axial_gain(Component::z, 0.0, kShort) == doctest::Approx(4 * pi / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("axial gains: symmetry, long-array limits and edge halving") {
    for (double z : {0.1, 1.3, 4.9, 7.0}) {
        CHECK(axial_gain(Component::x, z, kUnit) == axial_gain(Component::x, -z, kUnit));
        CHECK(axial_gain(Component::z, z, kUnit) == axial_gain(Component::z, -z, kUnit));
    }
    double prev_x = 0, prev_z = 0;
    for (double len : {1.0, 10.0, 100.0, 1e4, 1e6}) {
        const CylinderSpec s{1.0, len, 1.0};
        const double gx = axial_gain(Component::x, 0.0, s);
        const double gz = axial_gain(Component::z, 0.0, s);
        CHECK(gx > prev_x);
        CHECK(gz > prev_z);
        prev_x = gx;
        prev_z = gz;
    }
    CHECK(prev_x == doctest::Approx(8.0).epsilon(1e-5));
    CHECK(prev_z == doctest::Approx(4 * pi).epsilon(1e-5));

    const CylinderSpec very_long{1.0, 1e5, 1.0};
    CHECK(axial_gain(Component::z, 5e4, very_long) / axial_gain(Component::z, 0, very_long) ==
          doctest::Approx(0.5).epsilon(1e-4));
    // Outside the array the gain keeps falling.
    CHECK(axial_gain(Component::z, 6.0, kUnit) < axial_gain(Component::z, 5.0, kUnit));
    CHECK(axial_gain(Component::x, 8.0, kUnit) < axial_gain(Component::x, 6.0, kUnit));
    CHECK(axial_gain(Component::x, 8.0, kUnit) > 0.0);
}

TEST_CASE("transverse gains at special offsets") {
    CHECK(transverse_gain(Component::x, Axis::x, 1.0, kUnit) == 8.0);
    CHECK(transverse_gain(Component::x, Axis::x, 0.3, kUnit) == 8.0);
    CHECK(transverse_gain(Component::x, Axis::x, 1e6, kUnit) == doctest::Approx(4 * pi).epsilon(1e-5));
    CHECK(transverse_gain(Component::x, Axis::y, 0.0, kShort) ==
          doctest::Approx(axial_gain(Component::x, 0.0, kShort)).epsilon(1e-14));
    CHECK(transverse_gain(Component::x, Axis::y, 1e-8, kShort) ==
          doctest::Approx(2.34315).epsilon(1e-5));
    for (double len : {0.5, 3.0, 40.0}) {
        const CylinderSpec s{1.0, len, 1.0};
        CHECK(transverse_gain(Component::z, Axis::x, 0.0, s) == axial_gain(Component::z, 0.0, s));
        CHECK(transverse_gain(Component::z, Axis::x, 0.0, s) ==
              doctest::Approx(4 * pi * len / std::sqrt(len * len + 4)).epsilon(1e-14));
    }
    CHECK(transverse_gain(Component::z, Axis::y, 0.7, kUnit) ==
          transverse_gain(Component::z, Axis::x, 0.7, kUnit));
}

TEST_CASE("transverse gain continuity") {
    // Ex along x is continuous through the ring.
    CHECK(transverse_gain(Component::x, Axis::x, 1.0 + 1e-9, kUnit) == doctest::Approx(8.0).epsilon(1e-6));
    // Ex along y: both branches agree at the ring.
    CHECK(transverse_gain(Component::x, Axis::y, 1.0 - 1e-12, kUnit) ==
          doctest::Approx(transverse_gain(Component::x, Axis::y, 1.0 + 1e-12, kUnit)).epsilon(1e-9));
}

TEST_CASE("transverse gain domain") {
    CHECK_THROWS_AS(transverse_gain(Component::x, Axis::x, -0.1, kUnit), DomainError);
    CHECK_THROWS_AS(transverse_gain(Component::y, Axis::x, 0.1, kUnit), DomainError);
    CHECK_THROWS_AS(transverse_gain(Component::x, Axis::z, 0.1, kUnit), DomainError);
    CHECK_THROWS_AS(axial_gain(Component::z, 0.0, CylinderSpec{0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("closed forms agree with the quadrature oracle") {
    for (double z : {-7.0, -5.0, -2.2, 0.0, 0.9, 4.99, 6.5}) {
        CAPTURE(z);
        CHECK(quadrature_gain(Component::x, {0, 0, z}, kUnit) ==
              doctest::Approx(axial_gain(Component::x, z, kUnit)).epsilon(1e-9));
        CHECK(quadrature_gain(Component::y, {0, 0, z}, kUnit) ==
              doctest::Approx(axial_gain(Component::x, z, kUnit)).epsilon(1e-9));
        CHECK(quadrature_gain(Component::z, {0, 0, z}, kUnit) ==
              doctest::Approx(axial_gain(Component::z, z, kUnit)).epsilon(1e-9));
    }
    for (double off : {0.2, 0.75, 1.4, 2.5}) {
        CAPTURE(off);
        CHECK(quadrature_gain(Component::z, {off, 0, 0}, kUnit) ==
              doctest::Approx(transverse_gain(Component::z, Axis::x, off, kUnit)).epsilon(1e-9));
        CHECK(quadrature_gain(Component::x, {0, off, 0}, kUnit) ==
              doctest::Approx(transverse_gain(Component::x, Axis::y, off, kUnit)).epsilon(1e-9));
        const CylinderSpec very_long{1.0, 1000.0, 1.0};
        CHECK(quadrature_gain(Component::x, {off, 0, 0}, very_long) ==
              doctest::Approx(transverse_gain(Component::x, Axis::x, off, very_long)).epsilon(0.02));
    }
}

TEST_CASE("beam profiles") {
    const ProfileFormula ez_depth{Component::z, Direction::depth, true};
    const ProfileFormula ez_width{Component::z, Direction::width_x, true};
    const ProfileFormula ex_depth{Component::x, Direction::depth, false};
    const ProfileFormula ex_wx{Component::x, Direction::width_x, false};
    const ProfileFormula ex_wy{Component::x, Direction::width_y, false};
    CHECK(beam_profile(ez_width, 0.0, kUnit) == doctest::Approx(4 * pi));
    CHECK(beam_profile(ex_depth, 0.0, kUnit) == doctest::Approx(4.0));
    CHECK(beam_profile(ex_wx, 0.0, kUnit) == 8.0);
    CHECK(beam_profile(ex_wy, 0.0, kUnit) == 8.0);
    const double s = 5.0 / std::sqrt(26.0);
    CHECK(beam_profile(ez_depth, 0.0, kUnit) == doctest::Approx(4 * pi * s));
    // Ex profiles approach the origin value continuously.
    CHECK(beam_profile(ex_wx, 1e-9, kUnit) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(beam_profile(ex_wy, 1e-9, kUnit) == doctest::Approx(4.0).epsilon(1e-6));
    // Calibration doubles the off-focus Ex branches so they meet the focal value.
    const ProfileFormula cal_wx{Component::x, Direction::width_x, true};
    CHECK(beam_profile(cal_wx, 1e-9, kUnit) == doctest::Approx(8.0).epsilon(1e-6));
    // Ez width: first null at k delta = pi.
    CHECK(beam_profile(ez_width, 0.5 / (40 * pi) * 2 * pi, kUnit) < 1e-12);

    CHECK_FALSE(is_valid({Component::y, Direction::depth, true}));
    CHECK_FALSE(is_valid({Component::z, Direction::width_y, true}));
    CHECK_THROWS_AS(beam_profile({Component::z, Direction::width_y, true}, 0.1, kUnit), DomainError);
    CHECK_THROWS_AS(beam_profile(ez_depth, -0.1, kUnit), DomainError);
}
