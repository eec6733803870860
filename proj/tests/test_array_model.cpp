#include <cmath>
#include <numbers>

#include "cylfocus/array_model.hpp"
#include "cylfocus/errors.hpp"
#include "doctest.h"

using namespace cylfocus;

TEST_CASE("elements per ring from the circumference") {
    CHECK(resolve_elements_per_ring(1.0, 0.025) == 251);
    CHECK(resolve_elements_per_ring(0.01, 0.025) == 3);
    CHECK(resolve_elements_per_ring(0.05, 0.025) == 13);
}

TEST_CASE("wavelength from frequency or explicit value") {
    ArrayConfig c;
    c.frequency_hz = 6e9;
    CHECK(wavelength_of(c) == doctest::Approx(0.0499654097).epsilon(1e-9));
    c.frequency_hz.reset();
    c.wavelength_m = 0.05;
    CHECK(wavelength_of(c) == 0.05);
}

TEST_CASE("reference array geometry") {
    const ElementSet el = build_array(reference_config(401));
    CHECK(el.elements_per_ring() == 251);
    CHECK(el.num_rings() == 401);
    CHECK(el.size() == 251u * 401u);
    CHECK(el.radius() == doctest::Approx(1.0));
    CHECK(el.ring_spacing() == doctest::Approx(0.025));
    CHECK(el.array_length() == doctest::Approx(10.0));
    CHECK(el.continuum_scale() == doctest::Approx(1597.9156).epsilon(1e-7));
    CHECK(el.polarization() == Vec3{0, 0, 1});

    Vec3 sum{};
    for (const auto& p : el.positions()) {
        CHECK(std::hypot(p.x, p.y) == doctest::Approx(1.0).epsilon(1e-14));
        sum = sum + p;
    }
    CHECK(std::fabs(sum.x) < 1e-9);
    CHECK(std::fabs(sum.y) < 1e-9);
    CHECK(std::fabs(sum.z) < 1e-9);

    // Ring-major, axially symmetric about z = 0.
    const auto pos = el.positions();
    const std::size_t n = 251;
    for (int m = 0; m < 401; ++m) {
        const double z = pos[m * n].z;
        CHECK(z == doctest::Approx(-pos[(400 - m) * n].z));
        CHECK(pos[m * n + 17].z == z);
    }
    CHECK(pos[0].z == doctest::Approx(-5.0));
}

TEST_CASE("angles start one step past the x axis") {
    ArrayConfig c = reference_config(1);
    c.elements_per_ring = 4;
    const ElementSet el = build_array(c);
    const auto pos = el.positions();
    CHECK(pos[0].x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(pos[0].y == doctest::Approx(1.0));
    CHECK(pos[3].x == doctest::Approx(1.0));
    CHECK(pos[0].z == 0.0);
}

TEST_CASE("configuration validation names the offending field") {
    auto field_of = [](const ArrayConfig& c) {
        try {
            validate(c);
        } catch (const ConfigError& e) {
            return e.field();
        }
        return std::string{};
    };
    ArrayConfig c = reference_config(3);
    CHECK(field_of(c).empty());
    c.num_rings = 0;
    CHECK(field_of(c) == "num_rings");
    c = reference_config(3);
    c.elements_per_ring = 2;
    CHECK(field_of(c) == "elements_per_ring");
    c = reference_config(3);
    c.e0_v_per_m = 0.0;
    CHECK(field_of(c) == "e0_v_per_m");
    c = reference_config(3);
    c.ring_spacing_lambda = -1;
    CHECK(field_of(c) == "ring_spacing_lambda");
    c = reference_config(3);
    c.wavelength_m.reset();
    c.frequency_hz.reset();
    CHECK_FALSE(field_of(c).empty());
    CHECK_THROWS_AS(build_array(c), ConfigError);
}
