#include "cylfocus/array_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cylfocus/errors.hpp"

namespace cylfocus {

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

ElementSet::ElementSet(std::vector<Vec3> positions, double wavelength, double radius,
                       double spacing, int elements_per_ring, int num_rings, double e0)
    : positions_(std::move(positions)),
      wavelength_(wavelength),
      wavenumber_(2.0 * std::numbers::pi / wavelength),
      radius_(radius),
      spacing_(spacing),
      elements_per_ring_(elements_per_ring),
      num_rings_(num_rings),
      e0_(e0) {}

double ElementSet::continuum_scale() const noexcept {
    return elements_per_ring_ / (2.0 * std::numbers::pi * spacing_);
}

int resolve_elements_per_ring(double radius, double spacing) {
    const double n = std::round(2.0 * std::numbers::pi * radius / spacing);
    return std::max(3, static_cast<int>(n));
}

double wavelength_of(const ArrayConfig& config) {
    if (config.wavelength_m.has_value() == config.frequency_hz.has_value()) {
        if (config.wavelength_m) {
            throw ConfigError("wavelength_m", "wavelength_m and frequency_hz are mutually exclusive");
        }
        throw ConfigError("wavelength_m", "wavelength or frequency required");
    }
    if (config.wavelength_m) {
        return *config.wavelength_m;
    }
    return kSpeedOfLight / *config.frequency_hz;
}

namespace {

void require_positive(double value, const char* field) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw ConfigError(field, "must be a finite positive number");
    }
}

}  // namespace

void validate(const ArrayConfig& config) {
    const double lambda = wavelength_of(config);
    if (config.wavelength_m) {
        require_positive(*config.wavelength_m, "wavelength_m");
    } else {
        require_positive(*config.frequency_hz, "frequency_hz");
    }
    require_positive(lambda, "wavelength_m");

    if (config.radius_m.has_value() == config.radius_lambda.has_value()) {
        if (config.radius_m) {
            throw ConfigError("radius_m", "radius_m and radius_lambda are mutually exclusive");
        }
        throw ConfigError("radius_lambda", "radius_lambda or radius_m required");
    }
    if (config.radius_m) {
        require_positive(*config.radius_m, "radius_m");
    } else {
        require_positive(*config.radius_lambda, "radius_lambda");
    }
    require_positive(config.ring_spacing_lambda, "ring_spacing_lambda");
    if (config.num_rings < 1) {
        throw ConfigError("num_rings", "must be >= 1");
    }
    if (config.elements_per_ring && *config.elements_per_ring < 3) {
        throw ConfigError("elements_per_ring", "must be >= 3 or \"auto\"");
    }
    require_positive(config.e0_v_per_m, "e0_v_per_m");
}

ElementSet build_array(const ArrayConfig& config) {
    validate(config);
    const double lambda = wavelength_of(config);
    const double radius = config.radius_m ? *config.radius_m : *config.radius_lambda * lambda;
    const double spacing = config.ring_spacing_lambda * lambda;
    const int n_ring = config.elements_per_ring.value_or(resolve_elements_per_ring(radius, spacing));
    const int m_rings = config.num_rings;

    std::vector<double> cos_t(n_ring);
    std::vector<double> sin_t(n_ring);
    for (int n = 1; n <= n_ring; ++n) {
        const double theta = 2.0 * std::numbers::pi * n / n_ring;
        cos_t[n - 1] = std::cos(theta);
        sin_t[n - 1] = std::sin(theta);
    }

    std::vector<Vec3> positions;
    positions.reserve(static_cast<std::size_t>(n_ring) * m_rings);
    for (int m = 0; m < m_rings; ++m) {
        // Twice the offset is an integer, so mirrored rings get exactly opposite z.
        const double z = 0.5 * (2 * m - (m_rings - 1)) * spacing;
        for (int n = 0; n < n_ring; ++n) {
            positions.push_back({radius * cos_t[n], radius * sin_t[n], z});
        }
    }
    return ElementSet(std::move(positions), lambda, radius, spacing, n_ring, m_rings,
                      config.e0_v_per_m);
}

ArrayConfig reference_config(int num_rings) {
    ArrayConfig config;
    config.wavelength_m = 0.05;
    config.radius_lambda = 20.0;
    config.ring_spacing_lambda = 0.5;
    config.num_rings = num_rings;
    return config;
}

}  // namespace cylfocus
