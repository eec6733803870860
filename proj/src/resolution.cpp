#include "cylfocus/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cylfocus/errors.hpp"

namespace cylfocus {
namespace {

// Vertex of the parabola through three points with distinct abscissae.
// Falls back to the middle sample when the points are collinear.
std::pair<double, double> parabola_vertex(double x0, double y0, double x1, double y1, double x2,
                                          double y2) {
    const double d10 = x1 - x0;
    const double d12 = x1 - x2;
    const double den = d10 * (y1 - y2) - d12 * (y1 - y0);
    if (den == 0.0) {
        return {x1, y1};
    }
    const double xv = x1 - 0.5 * (d10 * d10 * (y1 - y2) - d12 * d12 * (y1 - y0)) / den;
    if (!(xv >= x0 && xv <= x2)) {
        return {x1, y1};
    }
    const double yv = y0 * (xv - x1) * (xv - x2) / ((x0 - x1) * (x0 - x2)) +
                      y1 * (xv - x0) * (xv - x2) / ((x1 - x0) * (x1 - x2)) +
                      y2 * (xv - x0) * (xv - x1) / ((x2 - x0) * (x2 - x1));
    return {xv, yv};
}

double interpolate_crossing(double x0, double y0, double x1, double y1, double level) {
    if (y1 == y0) {
        return 0.5 * (x0 + x1);
    }
    return x0 + (level - y0) * (x1 - x0) / (y1 - y0);
}

Vec3 direction_vector(Direction d) {
    switch (d) {
        case Direction::depth: return unit(Axis::z);
        case Direction::width_x: return unit(Axis::x);
        case Direction::width_y: return unit(Axis::y);
    }
    return {};
}

}  // namespace

std::string_view to_string(ProfileSource s) {
    switch (s) {
        case ProfileSource::numeric: return "numeric";
        case ProfileSource::analytic: return "analytic";
        case ProfileSource::quadrature: return "quadrature";
    }
    return "?";
}

Profile1D::Profile1D(std::vector<double> offsets, std::vector<double> values, ProfileMeta meta)
    : offsets_(std::move(offsets)), values_(std::move(values)), meta_(meta) {
    if (offsets_.size() != values_.size()) {
        throw DomainError("profile: offsets and values differ in length");
    }
    if (offsets_.size() < 3) {
        throw DomainError("profile: at least 3 samples required");
    }
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        if (!std::isfinite(offsets_[i]) || !std::isfinite(values_[i]) || values_[i] < 0.0) {
            throw DomainError("profile: sample " + std::to_string(i) + " is not finite and >= 0");
        }
        if (i > 0 && !(offsets_[i] > offsets_[i - 1])) {
            throw DomainError("profile: offsets must be strictly increasing");
        }
    }
}

Peak find_peak(const Profile1D& profile) {
    const auto& x = profile.offsets();
    const auto& v = profile.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    if (*lo == *hi) {
        throw NumericError("profile is flat; no peak");
    }
    const std::size_t i = static_cast<std::size_t>(hi - v.begin());
    Peak peak{x[i], v[i], i, i == 0 || i + 1 == v.size()};
    if (!peak.at_boundary) {
        const auto [xv, yv] = parabola_vertex(x[i - 1], v[i - 1], x[i], v[i], x[i + 1], v[i + 1]);
        peak.offset = xv;
        peak.value = std::max(yv, v[i]);
    }
    return peak;
}

HalfPowerWidth half_power_width(const Profile1D& profile) {
    const Peak peak = find_peak(profile);
    const auto& x = profile.offsets();
    const auto& v = profile.values();
    const double level = peak.value / std::sqrt(2.0);
    const std::size_t n = v.size();

    std::size_t j = peak.index;
    while (j + 1 < n && v[j + 1] >= level) {
        ++j;
    }
    const bool has_right = j + 1 < n;
    const double right = has_right ? interpolate_crossing(x[j], v[j], x[j + 1], v[j + 1], level) : 0.0;

    std::size_t i = peak.index;
    while (i > 0 && v[i - 1] >= level) {
        --i;
    }
    const bool has_left = i > 0;
    const double left = has_left ? interpolate_crossing(x[i], v[i], x[i - 1], v[i - 1], level) : 0.0;

    if (has_left && has_right) {
        return {left, right, right - left};
    }
    if (peak.index == 0 && has_right) {
        const double half = right - x.front();
        return {x.front() - half, right, 2.0 * half};
    }
    if (peak.index + 1 == n && has_left) {
        const double half = x.back() - left;
        return {left, x.back() + half, 2.0 * half};
    }
    throw NumericError("no 3-dB crossing within the sampled range");
}

double half_power_width(const std::function<double(double)>& f, double step, double max_offset,
                        double tol) {
    const double level = f(0.0) / std::sqrt(2.0);
    double a = 0.0;
    double b = step;
    while (f(b) >= level) {
        a = b;
        b += step;
        if (b > max_offset) {
            throw NumericError("no 3-dB crossing within the search range");
        }
    }
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        (f(mid) >= level ? a : b) = mid;
    }
    return a + b;  // 2 * midpoint
}

std::vector<Sidelobe> sidelobes(const Profile1D& profile) {
    const Peak peak = find_peak(profile);
    const auto& x = profile.offsets();
    const auto& v = profile.values();
    const std::size_t n = v.size();

    std::size_t right = peak.index;
    while (right + 1 < n && v[right + 1] <= v[right]) {
        ++right;
    }
    std::size_t left = peak.index;
    while (left > 0 && v[left - 1] <= v[left]) {
        --left;
    }

    std::vector<Sidelobe> out;
    auto scan = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            if (k == 0 || k + 1 >= n) {
                continue;
            }
            if (v[k] > v[k - 1] && v[k] >= v[k + 1] && v[k] > 0.0) {
                const auto [xv, yv] = parabola_vertex(x[k - 1], v[k - 1], x[k], v[k], x[k + 1], v[k + 1]);
                const double level = std::min(yv, peak.value);
                out.push_back({xv, 20.0 * std::log10(level / peak.value)});
            }
        }
    };
    scan(1, left);
    scan(right + 1, n - 1);
    std::stable_sort(out.begin(), out.end(), [](const Sidelobe& a, const Sidelobe& b) {
        return a.level_db > b.level_db;
    });
    return out;
}

Profile1D numeric_profile(const ElementSet& elements, Component component, Direction direction,
                          const ResolutionOptions& options) {
    if (!is_valid(ProfileFormula{component, direction, true})) {
        throw ConfigError("direction", "unsupported (component, direction) pair");
    }
    const double lambda = elements.wavelength();
    const double step = options.step_lambda * lambda;
    const int half = static_cast<int>(std::lround(options.span_lambda / options.step_lambda));
    if (half < 1) {
        throw ConfigError("span", "profile span must exceed one step");
    }
    const Vec3 dir = direction_vector(direction);
    std::vector<double> offsets;
    std::vector<Vec3> points;
    for (int i = -half; i <= half; ++i) {
        offsets.push_back(i * step);
        points.push_back((i * step) * dir);
    }
    const Weights w = conjugate_weights(elements, Vec3{}, component);
    const auto fields = fields_at(elements, w, points, options.threads);
    const double scale = normalization_factor(elements, Normalization::continuum);
    std::vector<double> values;
    values.reserve(fields.size());
    for (const auto& f : fields) {
        values.push_back(std::abs(f.get(component)) * scale);
    }
    return Profile1D(std::move(offsets), std::move(values),
                     {component, direction, ProfileSource::numeric, lambda});
}

Profile1D analytic_profile(const CylinderSpec& spec, double wavelength, Component component,
                           Direction direction, const ResolutionOptions& options) {
    const ProfileFormula formula{component, direction, true};
    if (!is_valid(formula)) {
        throw ConfigError("direction", "no closed form for this (component, direction) pair");
    }
    const int count = static_cast<int>(std::lround(options.span_lambda / options.step_lambda));
    if (count < 2) {
        throw ConfigError("span", "profile span must exceed two steps");
    }
    std::vector<double> offsets;
    std::vector<double> values;
    for (int i = 0; i <= count; ++i) {
        const double delta = i * options.step_lambda * wavelength;
        offsets.push_back(delta);
        values.push_back(beam_profile(formula, delta, spec));
    }
    return Profile1D(std::move(offsets), std::move(values),
                     {component, direction, ProfileSource::analytic, wavelength});
}

ResolutionReport resolution_report(Component component, Direction direction, ProfileSource source,
                                   const ElementSet& elements, const ResolutionOptions& options) {
    const double lambda = elements.wavelength();
    if (source == ProfileSource::quadrature) {
        throw ConfigError("source",
                          "quadrature profiles model focal amplitudes only; use numeric or analytic");
    }
    if (source == ProfileSource::numeric) {
        Profile1D profile = numeric_profile(elements, component, direction, options);
        const Peak peak = find_peak(profile);
        const HalfPowerWidth w = half_power_width(profile);
        auto lobes = sidelobes(profile);
        return {profile.meta(), peak.offset,  peak.value, peak.at_boundary,
                w.full,         w.full / lambda, std::move(lobes), std::move(profile)};
    }

    const CylinderSpec spec = CylinderSpec::from(elements);
    Profile1D profile = analytic_profile(spec, lambda, component, direction, options);
    const ProfileFormula formula{component, direction, true};
    const double width = half_power_width(
        [&](double delta) { return beam_profile(formula, delta, spec); },
        options.step_lambda * lambda, options.span_lambda * lambda, 1e-6 * lambda);
    auto lobes = sidelobes(profile);
    const double peak_value = beam_profile(formula, 0.0, spec);
    return {profile.meta(), 0.0,  peak_value, false, width, width / lambda, std::move(lobes),
            std::move(profile)};
}

}  // namespace cylfocus
