#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cylfocus {

inline constexpr double kSpeedOfLight = 299'792'458.0;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
double norm(const Vec3& v);

/// Physical description of a cylindrical dipole array. Exactly one of
/// wavelength/frequency and exactly one of radius/radius_lambda is set.
struct ArrayConfig {
    std::optional<double> wavelength_m;
    std::optional<double> frequency_hz;
    std::optional<double> radius_m;
    std::optional<double> radius_lambda;
    double ring_spacing_lambda = 0.5;
    int num_rings = 1;
    std::optional<int> elements_per_ring;  // nullopt means AUTO
    double e0_v_per_m = 1.0;

    friend bool operator==(const ArrayConfig&, const ArrayConfig&) = default;
};

/// Realized element positions of a validated configuration.
///
/// Positions are ring-major: ring m = 0..M-1 at z_m = (m - (M-1)/2) d,
/// element n = 1..N at angle 2 pi n / N. Immutable once built.
class ElementSet {
public:
    ElementSet(std::vector<Vec3> positions, double wavelength, double radius, double spacing,
               int elements_per_ring, int num_rings, double e0);

    std::span<const Vec3> positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }

    double wavelength() const noexcept { return wavelength_; }
    double wavenumber() const noexcept { return wavenumber_; }
    double radius() const noexcept { return radius_; }
    double ring_spacing() const noexcept { return spacing_; }
    int elements_per_ring() const noexcept { return elements_per_ring_; }
    int num_rings() const noexcept { return num_rings_; }
    double amplitude_e0() const noexcept { return e0_; }
    Vec3 polarization() const noexcept { return {0.0, 0.0, 1.0}; }

    /// L = (M-1) d, the span between the outermost rings.
    double array_length() const noexcept { return (num_rings_ - 1) * spacing_; }
    /// C = N / (2 pi d): element density of the continuum limit.
    double continuum_scale() const noexcept;

private:
    std::vector<Vec3> positions_;
    double wavelength_;
    double wavenumber_;
    double radius_;
    double spacing_;
    int elements_per_ring_;
    int num_rings_;
    double e0_;
};

/// round(2 pi radius / spacing), clamped below at 3.
int resolve_elements_per_ring(double radius, double spacing);

/// Wavelength in meters; c / frequency when the frequency is given.
/// Throws ConfigError unless exactly one of the two is set.
double wavelength_of(const ArrayConfig& config);

/// Throws ConfigError naming the first offending field.
void validate(const ArrayConfig& config);

ElementSet build_array(const ArrayConfig& config);

/// Reference geometry: lambda = 0.05 m, R = 20 lambda, d = lambda/2,
/// N = AUTO (251), with the given ring count.
ArrayConfig reference_config(int num_rings);

}  // namespace cylfocus
