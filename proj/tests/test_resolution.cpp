#include <cmath>
#include <numbers>
#include <vector>

#include "cylfocus/array_model.hpp"
#include "cylfocus/errors.hpp"
#include "cylfocus/resolution.hpp"
#include "cylfocus/specfun.hpp"
#include "doctest.h"

using namespace cylfocus;
using std::numbers::pi;

namespace {

Profile1D sampled(double lo, double hi, int n, double (*f)(double)) {
    std::vector<double> x, y;
    for (int i = 0; i < n; ++i) {
        x.push_back(lo + (hi - lo) * i / (n - 1));
        y.push_back(f(x.back()));
    }
    return Profile1D(std::move(x), std::move(y), ProfileMeta{});
}

double sinc_abs(double x) { return std::fabs(specfun::sinc(x)); }

}  // namespace

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(Profile1D({0, 1}, {1, 1}, {}), DomainError);
    CHECK_THROWS_AS(Profile1D({0, 1, 1}, {1, 2, 1}, {}), DomainError);
    CHECK_THROWS_AS(Profile1D({0, 1, 2}, {1, -2, 1}, {}), DomainError);
    CHECK_THROWS_AS(Profile1D({0, 1, 2}, {1, NAN, 1}, {}), DomainError);
    CHECK_THROWS_AS(Profile1D({0, 1, 2}, {1, 2}, {}), DomainError);
    CHECK_THROWS_AS(find_peak(Profile1D({0, 1, 2}, {1, 1, 1}, {})), NumericError);
}

TEST_CASE("parabolic peak refinement is exact for a parabola") {
    const Profile1D p = sampled(-1, 1, 21, [](double x) { return 5.0 - (x - 0.037) * (x - 0.037); });
    const Peak pk = find_peak(p);
    CHECK(pk.offset == doctest::Approx(0.037).epsilon(1e-12));
    CHECK(pk.value == doctest::Approx(5.0).epsilon(1e-12));
    CHECK_FALSE(pk.at_boundary);
}

TEST_CASE("half-power width and first sidelobe of sinc") {
    const Profile1D p = sampled(-15, 15, 6001, sinc_abs);
    const HalfPowerWidth w = half_power_width(p);
    CHECK(w.full == doctest::Approx(2 * 1.3915573782515102).epsilon(1e-5));
    CHECK(w.left == doctest::Approx(-w.right).epsilon(1e-9));
    const auto lobes = sidelobes(p);
    REQUIRE_FALSE(lobes.empty());
    CHECK(lobes.front().level_db == doctest::Approx(-13.2614588840).epsilon(1e-4));
    CHECK(std::fabs(lobes.front().offset) == doctest::Approx(4.4934094579).epsilon(1e-4));
    for (std::size_t i = 1; i < lobes.size(); ++i) {
        CHECK(lobes[i].level_db <= lobes[i - 1].level_db);
    }

    // Function form: bisection to the exact root.
    const double fw = half_power_width(sinc_abs, 0.01, 10.0, 1e-12);
    CHECK(fw == doctest::Approx(2 * 1.3915573782515102).epsilon(1e-11));
}

TEST_CASE("sinc sidelobe in wavelengths for k = 2 pi / lambda") {
    const double lambda = 0.05;
    const double k = 2 * pi / lambda;
    std::vector<double> x, y;
    for (int i = -400; i <= 400; ++i) {
        x.push_back(i * 0.005 * lambda);
        y.push_back(std::fabs(specfun::sinc(k * x.back())));
    }
    const auto lobes = sidelobes(Profile1D(x, y, {}));
    REQUIRE_FALSE(lobes.empty());
    CHECK(std::fabs(lobes.front().offset) / lambda == doctest::Approx(0.715).epsilon(2e-3));
    CHECK(lobes.front().level_db == doctest::Approx(-13.26).epsilon(1e-3));
}

TEST_CASE("a Gaussian has no sidelobes and its known width") {
    const Profile1D p = sampled(-5, 5, 2001, [](double x) { return std::exp(-x * x); });
    CHECK(sidelobes(p).empty());
    CHECK(half_power_width(p).full == doctest::Approx(2 * std::sqrt(std::log(2.0) / 2)).epsilon(1e-4));
}

TEST_CASE("boundary peak is mirrored") {
    const Profile1D p = sampled(0, 5, 1001, [](double x) { return std::exp(-x * x); });
    const Peak pk = find_peak(p);
    CHECK(pk.at_boundary);
    CHECK(half_power_width(p).full == doctest::Approx(2 * std::sqrt(std::log(2.0) / 2)).epsilon(1e-4));
}

TEST_CASE("width of a triangular profile") {
    const Profile1D p = sampled(-3, 3, 601, [](double x) { return std::max(0.0, 1.0 - std::fabs(x) / 2); });
    CHECK(half_power_width(p).full == doctest::Approx(4 * (1 - 1 / std::sqrt(2.0))).epsilon(1e-9));
}

TEST_CASE("width scales with the abscissa") {
    const Profile1D a = sampled(-10, 10, 2001, sinc_abs);
    std::vector<double> x2;
    for (double v : a.offsets()) {
        x2.push_back(3.0 * v);
    }
    const Profile1D b(x2, a.values(), {});
    CHECK(half_power_width(b).full == doctest::Approx(3 * half_power_width(a).full).epsilon(1e-12));
}

TEST_CASE("no crossing in range") {
    const Profile1D p = sampled(-0.1, 0.1, 11, [](double x) { return 2.0 - x * x; });
    CHECK_THROWS_AS(half_power_width(p), NumericError);
}

TEST_CASE("analytic resolution widths at the reference geometry") {
    const ElementSet el = build_array(reference_config(401));
    const ResolutionOptions opt{3.0, 0.005, 1};
    struct Row {
        Component c;
        Direction d;
        double width;
    };
    const Row rows[] = {{Component::z, Direction::depth, 0.4517},
                        {Component::z, Direction::width_x, 0.4429},
                        {Component::x, Direction::depth, 0.30787},
                        {Component::x, Direction::width_x, 0.54836},
                        {Component::x, Direction::width_y, 0.80302}};
    for (const auto& r : rows) {
        const auto rep = resolution_report(r.c, r.d, ProfileSource::analytic, el, opt);
        CHECK(rep.width_lambda == doctest::Approx(r.width).epsilon(2e-4));
    }
    // Ez width: k delta = 1.39156 on each side.
    const auto ez = resolution_report(Component::z, Direction::width_x, ProfileSource::analytic, el, opt);
    CHECK(ez.width_lambda == doctest::Approx(1.3915573782515102 / pi).epsilon(1e-6));
    CHECK_THROWS_AS(resolution_report(Component::z, Direction::depth, ProfileSource::quadrature, el, opt),
                    ConfigError);
}

TEST_CASE("numeric Ez width converges under grid refinement") {
    const ElementSet el = build_array(reference_config(41));
    const auto coarse = resolution_report(Component::z, Direction::width_x, ProfileSource::numeric, el,
                                          {1.0, 0.01, 1});
    const auto fine = resolution_report(Component::z, Direction::width_x, ProfileSource::numeric, el,
                                        {1.0, 0.0025, 1});
    CHECK(std::fabs(coarse.width_lambda - fine.width_lambda) < 1e-3);
    CHECK(std::fabs(fine.peak_offset) < 1e-6);
}
