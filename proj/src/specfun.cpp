#include "cylfocus/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "cylfocus/errors.hpp"
#include "cylfocus/quadrature.hpp"

namespace cylfocus::specfun {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": non-finite argument");
    }
}

// Arithmetic-geometric mean iteration shared by K and E. Returns the
// converged mean; when `csum` is non-null it accumulates
// sum_{n>=1} 2^{n-1} c_n^2 with c_{n+1} = (a_n - g_n) / 2.
double agm(double a, double g, double* csum) {
    double weight = 1.0;
    for (int it = 0; it < 64; ++it) {
        const double c = 0.5 * (a - g);
        if (csum != nullptr) {
            *csum += weight * c * c;
            weight *= 2.0;
        }
        const double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
        if (std::fabs(c) <= 4.0 * std::numeric_limits<double>::epsilon() * a) {
            break;
        }
    }
    return a;
}

// Ascending series in extended precision; the alternating terms grow to
// ~1e8 near x = 25 so double would lose too many digits.
double struve_series(int order, double x) {
    using ld = long double;
    const ld half = static_cast<ld>(x) / 2;
    const ld q = half * half;
    const ld nu = order;
    const ld sqrt_pi = std::sqrt(std::numbers::pi_v<ld>);
    // Gamma(3/2) * Gamma(nu + 3/2) for nu in {-1, 0, 1}.
    ld gamma_prod = 0;
    switch (order) {
        case -1: gamma_prod = (sqrt_pi / 2) * sqrt_pi; break;
        case 0: gamma_prod = (sqrt_pi / 2) * (sqrt_pi / 2); break;
        default: gamma_prod = (sqrt_pi / 2) * (3 * sqrt_pi / 4); break;
    }
    ld term = std::pow(half, nu + 1) / gamma_prod;
    ld sum = term;
    for (int m = 0; m < 400; ++m) {
        term *= -q / ((m + 1.5L) * (m + nu + 1.5L));
        sum += term;
        if (m > half && std::fabs(term) < 1e-22L) {
            break;
        }
    }
    return static_cast<double>(sum);
}

double neumann(int order, double x) {
    switch (order) {
        case -1: return -std::cyl_neumann(1.0, x);
        case 0: return std::cyl_neumann(0.0, x);
        default: return std::cyl_neumann(1.0, x);
    }
}

// H_nu(x) = Y_nu(x) + (1/pi) sum_k Gamma(k+1/2) (x/2)^{nu-2k-1} / Gamma(nu+1/2-k),
// truncated at the smallest term.
double struve_asymptotic(int order, double x) {
    const double half = 0.5 * x;
    const double nu = order;
    double term = 0.0;
    switch (order) {
        case -1: term = -0.5 / (half * half); break;
        case 0: term = 1.0 / half; break;
        default: term = 2.0; break;
    }
    double sum = term;
    for (int k = 0; k < 60; ++k) {
        const double next = term * (k + 0.5) * (nu - 0.5 - k) / (half * half);
        if (std::fabs(next) >= std::fabs(term)) {
            break;
        }
        term = next;
        sum += term;
        if (std::fabs(term) < 1e-18) {
            break;
        }
    }
    return neumann(order, x) + sum / kPi;
}

// H_nu(x) - Y_nu(x) = 2 (x/2)^nu / (sqrt(pi) Gamma(nu + 1/2)) int_0^inf e^{-xt} (1+t^2)^{nu-1/2} dt.
// With s = x t the integrand is smooth and decays like e^{-s}; s > 45 adds nothing.
double struve_laplace(int order, double x) {
    const double nu = order;
    auto integrand = [&](double s) {
        const double t = s / x;
        return std::exp(-s) * std::pow(1.0 + t * t, nu - 0.5);
    };
    const quad::Result r = quad::integrate(integrand, 0.0, 45.0, 0.0, 1e-15, 200);
    double scale = 0.0;
    switch (order) {
        case -1: scale = -2.0 / (kPi * x); break;
        case 0: scale = 2.0 / kPi; break;
        default: scale = 2.0 * x / kPi; break;
    }
    return neumann(order, x) + scale * r.value / x;
}

// Series cancellation grows like e^x; the asymptotic tail shrinks like e^{-x}.
constexpr double kStruveSeriesMax = 16.0;
constexpr double kStruveAsymptoticMin = 40.0;

}  // namespace

double ellip_k(double m) {
    require_finite(m, "ellip_k");
    if (m >= 1.0) {
        throw DomainError("ellip_k: parameter must be < 1");
    }
    if (m < 0.0) {
        return ellip_k(m / (m - 1.0)) / std::sqrt(1.0 - m);
    }
    return kPi / (2.0 * agm(1.0, std::sqrt(1.0 - m), nullptr));
}

double ellip_e(double m) {
    require_finite(m, "ellip_e");
    if (m > 1.0) {
        throw DomainError("ellip_e: parameter must be <= 1");
    }
    if (m == 1.0) {
        return 1.0;
    }
    if (m < 0.0) {
        return std::sqrt(1.0 - m) * ellip_e(m / (m - 1.0));
    }
    double csum = 0.5 * m;
    const double a = agm(1.0, std::sqrt(1.0 - m), &csum);
    return kPi / (2.0 * a) * (1.0 - csum);
}

double struve_h(int order, double x) {
    require_finite(x, "struve_h");
    if (order < -1 || order > 1) {
        throw DomainError("struve_h: order must be -1, 0 or 1");
    }
    if (x < 0.0) {
        throw DomainError("struve_h: x must be >= 0");
    }
    if (x <= kStruveSeriesMax) {
        return struve_series(order, x);
    }
    return x < kStruveAsymptoticMin ? struve_laplace(order, x) : struve_asymptotic(order, x);
}

double sine_integral(double x) {
    require_finite(x, "sine_integral");
    if (x < 0.0) {
        throw DomainError("sine_integral: x must be >= 0");
    }
    if (x <= 2.0) {
        // sum (-1)^n x^{2n+1} / ((2n+1) (2n+1)!)
        const double x2 = x * x;
        double power = x;  // (-1)^n x^{2n+1} / (2n+1)!
        double sum = x;
        for (int n = 1; n < 40; ++n) {
            power *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
            const double term = power / (2.0 * n + 1.0);
            sum += term;
            if (std::fabs(term) < 1e-18 * std::fabs(sum)) {
                break;
            }
        }
        return sum;
    }
    // Modified Lentz evaluation of the continued fraction for E1(ix).
    using cd = std::complex<double>;
    constexpr double tiny = 1e-300;
    cd b(1.0, x);
    cd c(1.0 / tiny, 0.0);
    cd d = 1.0 / b;
    cd h = d;
    for (int i = 2; i < 100000; ++i) {
        const double a = -static_cast<double>((i - 1) * (i - 1));
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cd del = c * d;
        h *= del;
        if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < 1e-16) {
            break;
        }
    }
    h *= cd(std::cos(x), -std::sin(x));
    return 0.5 * kPi + h.imag();
}

double sinc(double x) {
    const double ax = std::fabs(x);
    if (ax < 1e-4) {
        const double x2 = ax * ax;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(ax) / ax;
}

}  // namespace cylfocus::specfun
