#include <cmath>
#include <functional>
#include <numbers>

#include "cylfocus/errors.hpp"
#include "cylfocus/specfun.hpp"
#include "doctest.h"

using namespace cylfocus::specfun;
using std::numbers::pi;

namespace {

// Composite Simpson rule, used as an oracle independent of the library code.
double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

double k_oracle(double m) {
    return simpson([m](double t) { return 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); },
                   0.0, pi / 2);
}

double e_oracle(double m) {
    return simpson([m](double t) { return std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0,
                   pi / 2);
}

// Integral representations of H0 and H1 over [0, pi/2].
double h0_oracle(double x) {
    return 2.0 / pi * simpson([x](double t) { return std::sin(x * std::sin(t)); }, 0.0, pi / 2);
}

double h1_oracle(double x) {
    return 2.0 * x / pi *
           simpson([x](double t) { return std::cos(t) * std::cos(t) * std::sin(x * std::sin(t)); },
                   0.0, pi / 2);
}

double si_oracle(double x) {
    return simpson([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x, 200000);
}

}  // namespace

TEST_CASE("elliptic integrals match direct integration") {
    for (double m : {-20.0, -4.0, -1.0, -0.3, 0.0, 0.1, 0.5, 0.75, 0.9, 0.99}) {
        CAPTURE(m);
        CHECK(ellip_k(m) == doctest::Approx(k_oracle(m)).epsilon(1e-11));
        CHECK(ellip_e(m) == doctest::Approx(e_oracle(m)).epsilon(1e-11));
    }
}

TEST_CASE("elliptic integrals at frozen high-precision values") {
    CHECK(ellip_k(0.5) == doctest::Approx(1.8540746773013719).epsilon(1e-14));
    CHECK(ellip_k(-4.0) == doctest::Approx(1.0094529099892116).epsilon(1e-14));
    CHECK(ellip_e(0.5) == doctest::Approx(1.3506438810476755).epsilon(1e-14));
    CHECK(ellip_k(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(ellip_e(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(ellip_e(1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("elliptic integral domain") {
    CHECK_THROWS_AS(ellip_k(1.0), cylfocus::DomainError);
    CHECK_THROWS_AS(ellip_k(1.5), cylfocus::DomainError);
    CHECK_THROWS_AS(ellip_e(1.01), cylfocus::DomainError);
    CHECK_THROWS_AS(ellip_k(std::nan("")), cylfocus::DomainError);
}

TEST_CASE("Legendre relation holds across the parameter range") {
    for (int i = 1; i < 100; ++i) {
        const double m = 0.01 * i;
        const double lhs = ellip_e(m) * ellip_k(1 - m) + ellip_e(1 - m) * ellip_k(m) -
                           ellip_k(m) * ellip_k(1 - m);
        CHECK(lhs == doctest::Approx(pi / 2).epsilon(1e-12));
    }
}

TEST_CASE("K grows and E shrinks monotonically in m") {
    double k_prev = ellip_k(-10.0);
    double e_prev = ellip_e(-10.0);
    for (double m = -9.9; m < 0.999; m += 0.1) {
        CHECK(ellip_k(m) > k_prev);
        CHECK(ellip_e(m) < e_prev);
        k_prev = ellip_k(m);
        e_prev = ellip_e(m);
    }
}

TEST_CASE("Struve functions match frozen high-precision values") {
    struct Row {
        double x, hm1, h0, h1;
    };
    const Row rows[] = {
        {0.5, 0.5844460281252403, 0.3095559145837547, 0.0521737442423411},
        {1, 0.4381624361656369, 0.5686566270482880, 0.1984573362019444},
        {2, -0.0101439559159808, 0.7908588495080959, 0.6467637282835621},
        {5, -0.1711921734264831, -0.1852168157766841, 0.8078119457940644},
        {10, -0.2552127197269568, 0.1187436836874613, 0.8918324920945381},
        {16, -0.1804343395083889, 0.1354493180818647, 0.8170541118759702},
        {20, 0.1639315880765385, 0.0943936980813235, 0.4726881842910429},
        {25, 0.0978161510406519, -0.1018248201600151, 0.5388036213269295},
        {30, -0.0851306059794086, -0.0960984215541621, 0.7217503783469900},
        {50, 0.0565413244221394, -0.0853376748261190, 0.5800784479454419},
    };
    for (const auto& r : rows) {
        CAPTURE(r.x);
        CHECK(std::fabs(struve_h(-1, r.x) - r.hm1) < 1e-11);
        CHECK(std::fabs(struve_h(0, r.x) - r.h0) < 1e-11);
        CHECK(std::fabs(struve_h(1, r.x) - r.h1) < 1e-11);
    }
}

TEST_CASE("Struve functions match their integral representations") {
    for (double x : {0.01, 0.3, 1.7, 4.0, 9.5, 15.9, 16.1, 24.9, 39.9, 40.1, 60.0}) {
        CAPTURE(x);
        CHECK(std::fabs(struve_h(0, x) - h0_oracle(x)) < 1e-10);
        CHECK(std::fabs(struve_h(1, x) - h1_oracle(x)) < 1e-10);
    }
}

TEST_CASE("Struve recurrence and origin values") {
    CHECK(struve_h(0, 0.0) == 0.0);
    CHECK(struve_h(1, 0.0) == 0.0);
    CHECK(struve_h(-1, 0.0) == doctest::Approx(2.0 / pi).epsilon(1e-15));
    for (int i = 0; i <= 600; ++i) {
        const double x = 0.1 * i;
        CHECK(std::fabs(struve_h(-1, x) + struve_h(1, x) - 2.0 / pi) < 1e-12);
    }
    // Continuity across the series/asymptotic switch.
    for (int order : {-1, 0, 1}) {
        for (double edge : {16.0, 40.0}) {
            CHECK(std::fabs(struve_h(order, edge) - struve_h(order, std::nextafter(edge, 100.0))) < 1e-13);
        }
    }
    CHECK_THROWS_AS(struve_h(2, 1.0), cylfocus::DomainError);
    CHECK_THROWS_AS(struve_h(0, -1.0), cylfocus::DomainError);
}

TEST_CASE("sine integral") {
    CHECK(sine_integral(0.0) == 0.0);
    CHECK(sine_integral(pi) == doctest::Approx(1.8519370519824662).epsilon(1e-14));
    CHECK(sine_integral(10.0) == doctest::Approx(1.6583475942188740).epsilon(1e-14));
    CHECK(sine_integral(0.5) == doctest::Approx(0.4931074180430667).epsilon(1e-14));
    CHECK(sine_integral(1000.0) == doctest::Approx(1.5702331219687712).epsilon(1e-14));
    CHECK(std::fabs(sine_integral(1000.0) - pi / 2) < 0.002);
    for (double x : {0.2, 1.5, 2.0, 2.5, 7.0, 40.0}) {
        CAPTURE(x);
        CHECK(sine_integral(x) == doctest::Approx(si_oracle(x)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(sine_integral(-1.0), cylfocus::DomainError);
}

TEST_CASE("sinc") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::fabs(sinc(pi)) < 1e-15);
    CHECK(sinc(1e-6) == doctest::Approx(1.0 - 1e-12 / 6).epsilon(1e-16));
    CHECK(sinc(-2.0) == sinc(2.0));
    CHECK(sinc(1.3915573782515102) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    // First sidelobe: extremum at tan x = x.
    CHECK(20 * std::log10(std::fabs(sinc(4.4934094579090642))) ==
          doctest::Approx(-13.2614588840).epsilon(1e-9));
}
