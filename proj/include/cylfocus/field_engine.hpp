#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cylfocus/array_model.hpp"

namespace cylfocus {

enum class Component { x, y, z };
enum class Axis { x, y, z };
enum class Normalization { raw, continuum };

std::string_view to_string(Component c);
std::string_view to_string(Axis a);
std::string_view to_string(Normalization n);

/// Unit vector along an axis.
Vec3 unit(Axis a);

/// Complex field components at one observation point, in V/m when E0 is.
struct EFieldSample {
    std::complex<double> ex;
    std::complex<double> ey;
    std::complex<double> ez;

    std::complex<double> get(Component c) const;
};

/// Field magnitudes at the focus.
struct GainTriple {
    double gx = 0.0;
    double gy = 0.0;
    double gz = 0.0;

    double get(Component c) const;
};

/// Per-element unit-modulus excitation, in ElementSet order.
struct Weights {
    std::vector<std::complex<double>> values;
};

/// Conjugate-phase weights focusing `component` at `focus`.
///
/// Each element's channel coefficient for a component is a_n e^{-jkr_n}/r_n^3
/// with a real, signed geometric factor a_n (Ex: (z_n - z)(x - x_n),
/// Ey: (z_n - z)(y - y_n), Ez: P_n). The weight sign(a_n) e^{+jkr_n} cancels
/// the full phase, so every contribution arrives real and positive.
/// For Ez, a_n > 0 and the weights reduce to the plain e^{+jkr_n}.
///
/// Throws DomainError when the focus lies within 1e-9 m of an element.
Weights conjugate_weights(const ElementSet& elements, const Vec3& focus,
                          Component component = Component::z);

/// Direct summation of the three field components at `point`, accumulated
/// over elements in ring-major order.
EFieldSample field_at(const ElementSet& elements, const Weights& weights, const Vec3& point);

/// Many observation points; parallel across points only.
std::vector<EFieldSample> fields_at(const ElementSet& elements, const Weights& weights,
                                    std::span<const Vec3> points, unsigned threads = 0);

/// Per-component focal magnitudes with component-matched conjugate weights:
/// gc = E0 * sum_n |a_n| / r_n^3.
GainTriple focal_gain(const ElementSet& elements, const Vec3& focus);

/// Multiplier applied to raw sums: 1 in raw mode, 1/(C E0) in continuum mode.
double normalization_factor(const ElementSet& elements, Normalization mode);

struct SweepLine {
    Axis axis = Axis::z;
    double start = 0.0;  // meters
    double stop = 0.0;
    int count = 2;

    /// Evenly spaced offsets, both ends included.
    std::vector<double> offsets() const;
};

struct GainSweep {
    Axis axis = Axis::z;
    std::vector<double> offsets;  // meters along the axis
    std::vector<GainTriple> gains;
};

/// Focal gains with the focus stepped along a coordinate axis.
GainSweep sweep_gain(const ElementSet& elements, const SweepLine& line, unsigned threads = 0);

enum class Plane { xy, xz, yz };

std::string_view to_string(Plane p);

struct GridSpec {
    Plane plane = Plane::xz;
    double u_min = 0.0;
    double u_max = 0.0;
    int u_count = 1;
    double v_min = 0.0;
    double v_max = 0.0;
    int v_count = 1;
    double fixed = 0.0;  // coordinate normal to the plane

    /// Point at column i, row j.
    Vec3 point(int i, int j) const;
    double u(int i) const;
    double v(int j) const;
};

/// Row-major samples: index j * u_count + i.
struct FieldMap {
    GridSpec grid;
    std::vector<EFieldSample> samples;

    const EFieldSample& at(int i, int j) const {
        return samples[static_cast<std::size_t>(j) * grid.u_count + i];
    }
};

FieldMap field_map(const ElementSet& elements, const Weights& weights, const GridSpec& grid,
                   unsigned threads = 0);

}  // namespace cylfocus
