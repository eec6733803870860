#include "cylfocus/field_engine.hpp"

#include <cmath>

#include "cylfocus/errors.hpp"
#include "cylfocus/parallel.hpp"

namespace cylfocus {
namespace {

constexpr double kMinDistance = 1e-9;

[[noreturn]] void throw_on_element(const Vec3& p) {
    throw DomainError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
                      std::to_string(p.z) + ") coincides with an array element");
}

struct ElementGeometry {
    double dx;  // x - x_n
    double dy;  // y - y_n
    double dz;  // z_n - z
    double p;   // dx^2 + dy^2
    double r;
};

inline ElementGeometry geometry(const Vec3& element, const Vec3& point) {
    ElementGeometry g{};
    g.dx = point.x - element.x;
    g.dy = point.y - element.y;
    g.dz = element.z - point.z;
    g.p = g.dx * g.dx + g.dy * g.dy;
    g.r = std::sqrt(g.p + g.dz * g.dz);
    if (g.r < kMinDistance) {
        throw_on_element(point);
    }
    return g;
}

inline double amplitude_factor(const ElementGeometry& g, Component c) {
    switch (c) {
        case Component::x: return g.dz * g.dx;
        case Component::y: return g.dz * g.dy;
        case Component::z: return g.p;
    }
    return 0.0;
}

}  // namespace

std::string_view to_string(Component c) {
    switch (c) {
        case Component::x: return "x";
        case Component::y: return "y";
        case Component::z: return "z";
    }
    return "?";
}

std::string_view to_string(Axis a) {
    switch (a) {
        case Axis::x: return "x";
        case Axis::y: return "y";
        case Axis::z: return "z";
    }
    return "?";
}

std::string_view to_string(Normalization n) {
    return n == Normalization::raw ? "raw" : "continuum";
}

std::string_view to_string(Plane p) {
    switch (p) {
        case Plane::xy: return "xy";
        case Plane::xz: return "xz";
        case Plane::yz: return "yz";
    }
    return "?";
}

Vec3 unit(Axis a) {
    switch (a) {
        case Axis::x: return {1.0, 0.0, 0.0};
        case Axis::y: return {0.0, 1.0, 0.0};
        case Axis::z: return {0.0, 0.0, 1.0};
    }
    return {};
}

std::complex<double> EFieldSample::get(Component c) const {
    switch (c) {
        case Component::x: return ex;
        case Component::y: return ey;
        case Component::z: return ez;
    }
    return {};
}

double GainTriple::get(Component c) const {
    switch (c) {
        case Component::x: return gx;
        case Component::y: return gy;
        case Component::z: return gz;
    }
    return 0.0;
}

Weights conjugate_weights(const ElementSet& elements, const Vec3& focus, Component component) {
    const double k = elements.wavenumber();
    Weights w;
    w.values.reserve(elements.size());
    for (const Vec3& e : elements.positions()) {
        const ElementGeometry g = geometry(e, focus);
        const double sign = amplitude_factor(g, component) < 0.0 ? -1.0 : 1.0;
        w.values.push_back(std::polar(sign, k * g.r));
    }
    return w;
}

EFieldSample field_at(const ElementSet& elements, const Weights& weights, const Vec3& point) {
    if (weights.values.size() != elements.size()) {
        throw DomainError("weight count does not match element count");
    }
    const double k = elements.wavenumber();
    const auto positions = elements.positions();
    std::complex<double> ex;
    std::complex<double> ey;
    std::complex<double> ez;
    for (std::size_t n = 0; n < positions.size(); ++n) {
        const ElementGeometry g = geometry(positions[n], point);
        const double inv_r3 = 1.0 / (g.r * g.r * g.r);
        const std::complex<double> q = weights.values[n] * std::polar(inv_r3, -k * g.r);
        ex += q * (g.dz * g.dx);
        ey += q * (g.dz * g.dy);
        ez += q * g.p;
    }
    const double e0 = elements.amplitude_e0();
    return {e0 * ex, e0 * ey, e0 * ez};
}

std::vector<EFieldSample> fields_at(const ElementSet& elements, const Weights& weights,
                                    std::span<const Vec3> points, unsigned threads) {
    std::vector<EFieldSample> out(points.size());
    parallel_for(points.size(), threads,
                 [&](std::size_t i) { out[i] = field_at(elements, weights, points[i]); });
    return out;
}

GainTriple focal_gain(const ElementSet& elements, const Vec3& focus) {
    double sx = 0.0;
    double sy = 0.0;
    double sz = 0.0;
    for (const Vec3& e : elements.positions()) {
        const ElementGeometry g = geometry(e, focus);
        const double inv_r3 = 1.0 / (g.r * g.r * g.r);
        sx += std::fabs(g.dz * g.dx) * inv_r3;
        sy += std::fabs(g.dz * g.dy) * inv_r3;
        sz += g.p * inv_r3;
    }
    const double e0 = std::fabs(elements.amplitude_e0());
    return {e0 * sx, e0 * sy, e0 * sz};
}

double normalization_factor(const ElementSet& elements, Normalization mode) {
    if (mode == Normalization::raw) {
        return 1.0;
    }
    return 1.0 / (elements.continuum_scale() * elements.amplitude_e0());
}

std::vector<double> SweepLine::offsets() const {
    if (count < 2) {
        throw ConfigError("count", "sweep needs at least 2 samples");
    }
    if (!std::isfinite(start) || !std::isfinite(stop) || !(stop > start)) {
        throw ConfigError("range", "sweep range must satisfy start < stop");
    }
    std::vector<double> out(count);
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) {
        out[i] = start + i * step;
    }
    out.back() = stop;
    return out;
}

GainSweep sweep_gain(const ElementSet& elements, const SweepLine& line, unsigned threads) {
    GainSweep sweep;
    sweep.axis = line.axis;
    sweep.offsets = line.offsets();
    sweep.gains.resize(sweep.offsets.size());
    const Vec3 dir = unit(line.axis);
    parallel_for(sweep.offsets.size(), threads, [&](std::size_t i) {
        sweep.gains[i] = focal_gain(elements, sweep.offsets[i] * dir);
    });
    return sweep;
}

double GridSpec::u(int i) const {
    return u_count == 1 ? u_min : u_min + (u_max - u_min) * i / (u_count - 1);
}

double GridSpec::v(int j) const {
    return v_count == 1 ? v_min : v_min + (v_max - v_min) * j / (v_count - 1);
}

Vec3 GridSpec::point(int i, int j) const {
    const double a = u(i);
    const double b = v(j);
    switch (plane) {
        case Plane::xy: return {a, b, fixed};
        case Plane::xz: return {a, fixed, b};
        case Plane::yz: return {fixed, a, b};
    }
    return {};
}

FieldMap field_map(const ElementSet& elements, const Weights& weights, const GridSpec& grid,
                   unsigned threads) {
    if (grid.u_count < 1 || grid.v_count < 1) {
        throw ConfigError("grid", "grid needs at least one sample per direction");
    }
    if ((grid.u_count > 1 && !(grid.u_max > grid.u_min)) ||
        (grid.v_count > 1 && !(grid.v_max > grid.v_min))) {
        throw ConfigError("grid", "grid extents must be increasing");
    }
    std::vector<Vec3> points;
    points.reserve(static_cast<std::size_t>(grid.u_count) * grid.v_count);
    for (int j = 0; j < grid.v_count; ++j) {
        for (int i = 0; i < grid.u_count; ++i) {
            points.push_back(grid.point(i, j));
        }
    }
    return {grid, fields_at(elements, weights, points, threads)};
}

}  // namespace cylfocus
