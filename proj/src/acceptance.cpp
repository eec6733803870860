#include "cylfocus/acceptance.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "cylfocus/analytic.hpp"
#include "cylfocus/array_model.hpp"
#include "cylfocus/commands.hpp"
#include "cylfocus/field_engine.hpp"
#include "cylfocus/resolution.hpp"
#include "cylfocus/specfun.hpp"

namespace cylfocus {
namespace {

constexpr double kPi = std::numbers::pi;

// Reference geometry: lambda = 0.05 m, R = 20 lambda = 1 m, d = lambda / 2.
constexpr int kRingsL200 = 401;    // L = 200 lambda = 10 R
constexpr int kRingsL20 = 41;      // L = 20 lambda = R
constexpr int kRingsLong = 4001;   // L = 2000 lambda = 100 R

std::string fixed(double v, int digits) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
    return std::string(buf, r.ptr);
}

std::string sci(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 2);
    return std::string(buf, r.ptr);
}

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::vector<double> column(const GainSweep& s, Component c, double scale) {
    std::vector<double> out;
    for (const auto& g : s.gains) {
        out.push_back(g.get(c) * scale);
    }
    return out;
}

// 1 and 2: on-axis constants and the polarization ratio.
std::pair<CriterionResult, CriterionResult> axial_constants(unsigned threads) {
    const ElementSet el = build_array(reference_config(kRingsL200));
    const double h = 0.5 * el.array_length();
    const auto t0 = std::chrono::steady_clock::now();
    const GainSweep sweep = sweep_gain(el, {Axis::z, -h, h, 201}, threads);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double norm = normalization_factor(el, Normalization::continuum);

    double dx = 0.0;
    double dy = 0.0;
    double dz = 0.0;
    double dratio = 0.0;
    int samples = 0;
    for (std::size_t i = 0; i < sweep.offsets.size(); ++i) {
        if (std::fabs(sweep.offsets[i]) > 0.8 * h * (1.0 + 1e-12)) {
            continue;
        }
        ++samples;
        const GainTriple& g = sweep.gains[i];
        dx = std::max(dx, std::fabs(g.gx * norm / 8.0 - 1.0));
        dy = std::max(dy, std::fabs(g.gy * norm / 8.0 - 1.0));
        dz = std::max(dz, std::fabs(g.gz * norm / (4.0 * kPi) - 1.0));
        dratio = std::max(dratio, std::fabs(g.gz / g.gx / (0.5 * kPi) - 1.0));
    }
    const bool fast = seconds < 60.0;
    const GainTriple centre = sweep.gains[100];

    CriterionResult c1{1, "Axial constants gx,gy = 8, gz = 4pi (+-2%), L = 200 lambda", false, ""};
    c1.passed = dx <= 0.02 && dy <= 0.02 && dz <= 0.02 && fast;
    c1.detail = "|z_f| <= 0.8 L/2 (" + std::to_string(samples) + " foci): max dev gx " +
                fixed(100 * dx, 2) + "%, gy " + fixed(100 * dy, 2) + "%, gz " + fixed(100 * dz, 2) +
                "%; centre gx " + fixed(centre.gx * norm, 4) + ", gz " + fixed(centre.gz * norm, 4) +
                "; 201-point sweep under 60 s: " + (fast ? "yes" : "no");

    CriterionResult c2{2, "Polarization ratio gz/gx = pi/2 (+-2%)", false, ""};
    c2.passed = dratio <= 0.02;
    c2.detail = "max dev " + fixed(100 * dratio, 2) + "% over the same foci; centre ratio " +
                fixed(centre.gz / centre.gx, 4) + " vs pi/2 = " + fixed(0.5 * kPi, 4);
    return {c1, c2};
}

// 3 and 4: absolute plateaus and the bathtub profile of Ex along x.
std::pair<CriterionResult, CriterionResult> plateaus(unsigned threads) {
    const ElementSet longer = build_array(reference_config(kRingsLong));
    const double r = longer.radius();
    const GainSweep inside = sweep_gain(longer, {Axis::x, -0.9 * r, 0.9 * r, 37}, threads);
    const std::vector<double> gx = column(inside, Component::x, 1.0);
    const std::vector<double> gz = column(inside, Component::z, 1.0);
    const double ex_plateau = mean(gx);
    const double ez_plateau = mean(gz);

    const ElementSet shorter = build_array(reference_config(kRingsL20));
    const GainSweep short_in = sweep_gain(shorter, {Axis::x, -0.9 * r, 0.9 * r, 37}, threads);
    const std::vector<double> gz_short = column(short_in, Component::z, 1.0);
    const double short_mean = mean(gz_short);
    double short_dev = 0.0;
    for (double v : gz_short) {
        short_dev = std::max(short_dev, std::fabs(v / short_mean - 1.0));
    }

    const double ex_err = std::fabs(ex_plateau / 12500.0 - 1.0);
    const double ez_err = std::fabs(ez_plateau / 20000.0 - 1.0);
    CriterionResult c3{3, "Absolute plateaus Ex ~ 12500 V/m, Ez ~ 20000 V/m (5%)", false, ""};
    c3.passed = ex_err <= 0.05 && ez_err <= 0.05 && short_dev <= 0.05;
    c3.detail = "L = 2000 lambda, |x_f| <= 0.9R: Ex " + fixed(ex_plateau, 1) + " V/m (" +
                fixed(100 * ex_err, 2) + "%), Ez " + fixed(ez_plateau, 1) + " V/m (" +
                fixed(100 * ez_err, 2) + "%); L = 20 lambda Ez interior within " +
                fixed(100 * short_dev, 2) + "% of its plateau " + fixed(short_mean, 1) + " V/m";

    const auto [lo, hi] = std::minmax_element(gx.begin(), gx.end());
    const double flatness = (*hi - *lo) / ex_plateau;
    const GainSweep outside = sweep_gain(longer, {Axis::x, 1.05 * r, 6.0 * r, 100}, threads);
    const std::vector<double> gx_out = column(outside, Component::x, 1.0);
    double rim = 0.0;
    double rim_at = 0.0;
    for (std::size_t i = 1; i + 1 < gx_out.size(); ++i) {
        if (gx_out[i] > gx_out[i - 1] && gx_out[i] >= gx_out[i + 1] && gx_out[i] > rim) {
            rim = gx_out[i];
            rim_at = outside.offsets[i];
        }
    }
    CriterionResult c4{4, "Bathtub: flat Ex inside (< 6%), higher rim outside", false, ""};
    c4.passed = flatness < 0.06 && rim > ex_plateau;
    c4.detail = "L = 2000 lambda: (max-min)/mean over |x_f| <= 0.9R = " + fixed(100 * flatness, 2) +
                "%; outside local max " + fixed(rim, 1) + " V/m at x_f = " + fixed(rim_at / r, 2) +
                " R vs plateau " + fixed(ex_plateau, 1) + " V/m";
    return {c3, c4};
}

CriterionResult edge_halving() {
    const ElementSet el = build_array(reference_config(kRingsL200));
    const CylinderSpec spec = CylinderSpec::from(el);
    const double h = 0.5 * el.array_length();
    const double a0 = axial_gain(Component::z, 0.0, spec);
    const double a_plus = axial_gain(Component::z, h, spec) / a0;
    const double a_minus = axial_gain(Component::z, -h, spec) / a0;
    const double n0 = focal_gain(el, {0, 0, 0}).gz;
    const double n_plus = focal_gain(el, {0, 0, h}).gz / n0;
    const double n_minus = focal_gain(el, {0, 0, -h}).gz / n0;
    double worst = 0.0;
    for (double v : {a_plus, a_minus, n_plus, n_minus}) {
        worst = std::max(worst, std::fabs(v - 0.5));
    }
    CriterionResult c{5, "Edge halving gz(+-L/2)/gz(0) = 0.5 +- 0.02", worst <= 0.02, ""};
    c.detail = "analytic " + fixed(a_plus, 4) + "/" + fixed(a_minus, 4) + ", numeric " +
               fixed(n_plus, 4) + "/" + fixed(n_minus, 4);
    return c;
}

CriterionResult oracle_agreement() {
    // Reference cylinder in meters: R = 1, L = 10, k = 40 pi.
    const CylinderSpec spec{1.0, 10.0, 40.0 * kPi};
    const CylinderSpec very_long{1.0, 1000.0, 40.0 * kPi};
    double e7 = 0.0, e8 = 0.0, e9 = 0.0, e10 = 0.0, e11 = 0.0;
    auto rel = [](double q, double a) { return std::fabs(q / a - 1.0); };
    for (int i = 0; i < 20; ++i) {
        const double zf = -7.0 + 14.0 * i / 19.0;  // spans beyond both ends
        e7 = std::max(e7, rel(quadrature_gain(Component::x, {0, 0, zf}, spec),
                              axial_gain(Component::x, zf, spec)));
        e8 = std::max(e8, rel(quadrature_gain(Component::z, {0, 0, zf}, spec),
                              axial_gain(Component::z, zf, spec)));
        const double off = 0.15 * i;  // 0 .. 2.85 R, never on the ring
        e11 = std::max(e11, rel(quadrature_gain(Component::z, {off, 0, 0}, spec),
                                transverse_gain(Component::z, Axis::x, off, spec)));
        e10 = std::max(e10, rel(quadrature_gain(Component::x, {0, off, 0}, spec),
                                transverse_gain(Component::x, Axis::y, off, spec)));
        // The Ex-along-x closed form describes an unbounded cylinder.
        e9 = std::max(e9, rel(quadrature_gain(Component::x, {off, 0, 0}, very_long),
                              transverse_gain(Component::x, Axis::x, off, very_long)));
    }
    CriterionResult c{6, "Closed forms vs quadrature oracle", false, ""};
    c.passed = e7 <= 1e-6 && e8 <= 1e-6 && e11 <= 1e-6 && e9 <= 0.05 && e10 <= 0.05;
    c.detail = "max rel err: Ex axial " + sci(e7) + ", Ez axial " + sci(e8) + ", Ez along x " +
               sci(e11) + " (tol 1e-6); Ex along x " + sci(e9) + " (L = 1000R), Ex along y " +
               sci(e10) + " (tol 5e-2)";
    return c;
}

struct ResolutionTarget {
    Component component;
    Direction direction;
    double expected;   // lambda
    double tolerance;  // lambda
    const char* label;
};

CriterionResult resolutions(unsigned threads) {
    const ElementSet el = build_array(reference_config(kRingsL200));
    const ResolutionTarget targets[] = {
        {Component::z, Direction::depth, 0.44, 0.02, "Ez depth"},
        {Component::z, Direction::width_x, 0.44, 0.02, "Ez width"},
        {Component::x, Direction::depth, 0.31, 0.02, "Ex depth"},
        {Component::x, Direction::width_x, 0.54, 0.03, "Ex width_x"},
        {Component::x, Direction::width_y, 0.84, 0.05, "Ex width_y"},
    };
    const ResolutionOptions analytic_opt{3.0, 0.005, threads};
    const ResolutionOptions numeric_opt{1.0, 0.005, threads};
    bool ok = true;
    std::string detail;
    for (const auto& t : targets) {
        const auto a = resolution_report(t.component, t.direction, ProfileSource::analytic, el,
                                         analytic_opt);
        const auto n = resolution_report(t.component, t.direction, ProfileSource::numeric, el,
                                         numeric_opt);
        const bool a_ok = std::fabs(a.width_lambda - t.expected) <= t.tolerance;
        const bool n_ok = std::fabs(n.width_lambda - a.width_lambda) <= 0.03;
        ok = ok && a_ok && n_ok;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += std::string(t.label) + " analytic " + fixed(a.width_lambda, 4) +
                  (a_ok ? "" : " (out of band)") + " numeric " + fixed(n.width_lambda, 4) +
                  (n_ok ? "" : " (off by " + fixed(std::fabs(n.width_lambda - a.width_lambda), 3) + ")");
    }
    return {7, "3-dB resolutions (lambda), L = 200 lambda", ok, detail};
}

CriterionResult special_functions() {
    using namespace specfun;
    double legendre = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double m = 0.1 * i;
        legendre = std::max(legendre, std::fabs(ellip_e(m) * ellip_k(1 - m) +
                                                ellip_e(1 - m) * ellip_k(m) -
                                                ellip_k(m) * ellip_k(1 - m) - 0.5 * kPi));
    }
    double struve = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.1 * i;
        struve = std::max(struve, std::fabs(struve_h(-1, x) + struve_h(1, x) - 2.0 / kPi));
    }
    const double si_far = sine_integral(1000.0);
    // Frozen reference values (independent high-precision evaluation).
    struct Point {
        double got, want, tol;
        bool relative;
    };
    const Point points[] = {
        {ellip_k(0.0), 0.5 * kPi, 1e-12, true},
        {ellip_k(0.5), 1.8540746773013719, 1e-12, true},
        {ellip_k(-4.0), 1.0094529099892116, 1e-12, true},
        {ellip_e(0.0), 0.5 * kPi, 1e-12, true},
        {ellip_e(1.0), 1.0, 1e-12, true},
        {ellip_e(0.5), 1.3506438810476755, 1e-12, true},
        {struve_h(0, 0.0), 0.0, 1e-10, false},
        {struve_h(-1, 0.0), 2.0 / kPi, 1e-10, false},
        {struve_h(0, 1.0), 0.56865662704828795, 1e-10, false},
        {sine_integral(0.0), 0.0, 1e-12, false},
        {sine_integral(kPi), 1.8519370519824662, 1e-12, false},
        {sinc(0.0), 1.0, 0.0, false},
        {sinc(kPi), 0.0, 1e-15, false},
        {sinc(1.3915576), 0.7071068, 1e-6, false},
    };
    int failed_points = 0;
    for (const auto& p : points) {
        const double err = p.relative ? std::fabs(p.got / p.want - 1.0) : std::fabs(p.got - p.want);
        if (!(err <= p.tol)) {
            ++failed_points;
        }
    }
    const bool si_ok = std::fabs(si_far - 0.5 * kPi) <= 0.002;
    CriterionResult c{8, "Special functions", false, ""};
    c.passed = legendre <= 1e-10 && struve <= 1e-9 && si_ok && failed_points == 0;
    c.detail = "Legendre " + sci(legendre) + ", H-1 + H1 - 2/pi " + sci(struve) + ", Si(1000) - pi/2 " +
               sci(si_far - 0.5 * kPi) + ", point values failed: " + std::to_string(failed_points) +
               "/" + std::to_string(std::size(points));
    return c;
}

CriterionResult cross_consistency() {
    double worst = 0.0;
    bool exact = true;
    for (double len : {2.0, 10.0, 40.0}) {
        const CylinderSpec spec{1.0, len, 40.0 * kPi};
        const double axial = axial_gain(Component::x, 0.0, spec);
        const double along_y = transverse_gain(Component::x, Axis::y, 0.0, spec);
        const double finite_x = quadrature_gain(Component::x, {1e-9, 0.0, 0.0}, spec);
        worst = std::max({worst, std::fabs(along_y - axial) / axial,
                          std::fabs(finite_x - axial) / axial});
        exact = exact && transverse_gain(Component::z, Axis::x, 0.0, spec) ==
                             axial_gain(Component::z, 0.0, spec);
    }
    CriterionResult c{9, "Cross-consistency at the origin", false, ""};
    c.passed = worst <= 1e-6 && exact;
    c.detail = "Ex: axial at 0 vs along-y at 0 vs quadrature at x_f = 0+: max rel diff " +
               sci(worst) + "; Ez along x at 0 == axial at 0 bitwise: " + (exact ? "yes" : "no");
    return c;
}

CriterionResult determinism() {
    const ElementSet el = build_array(reference_config(kRingsL200));
    const double h = 0.5 * el.array_length();
    const double lambda = el.wavelength();
    std::vector<double> offsets;
    for (int i = -30; i <= 30; ++i) {
        offsets.push_back(0.01 * i * lambda);
    }
    const GridSpec grid{Plane::xz, -lambda, lambda, 9, -lambda, lambda, 9, 0.0};
    auto produce = [&](unsigned threads) {
        return axial_gain_csv(el, {Axis::z, -h, h, 201}, Component::z, Normalization::raw, true,
                              threads) +
               beam_profile_csv(el, Component::x, Direction::depth, offsets,
                                Normalization::continuum, true, threads) +
               field_map_csv(el, {0, 0, 0}, Component::z, grid, Normalization::raw, threads);
    };
    const std::string ref = produce(1);
    bool same = true;
    for (unsigned t : {4u, 8u, 1u}) {
        same = same && produce(t) == ref;
    }
    return {10, "Determinism across 1/4/8 threads and reruns", same,
            "axial, beam-profile and field-map CSVs (" + std::to_string(ref.size()) + " bytes) " +
                (same ? "byte-identical" : "differ")};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned threads) {
    std::vector<CriterionResult> out;
    auto [c1, c2] = axial_constants(threads);
    out.push_back(c1);
    out.push_back(c2);
    auto [c3, c4] = plateaus(threads);
    out.push_back(c3);
    out.push_back(c4);
    out.push_back(edge_halving());
    out.push_back(oracle_agreement());
    out.push_back(resolutions(threads));
    out.push_back(special_functions());
    out.push_back(cross_consistency());
    out.push_back(determinism());
    return out;
}

std::string format_acceptance(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " | " << r.detail
            << '\n';
    }
    out << passed << "/" << results.size() << " criteria passed\n";
    return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

}  // namespace cylfocus
