#pragma once

#include <string_view>

#include "cylfocus/array_model.hpp"
#include "cylfocus/errors.hpp"
#include "cylfocus/field_engine.hpp"

namespace cylfocus {

/// Continuum cylinder: radius R, length L, wavenumber k.
struct CylinderSpec {
    double radius = 1.0;
    double length = 0.0;
    double wavenumber = 1.0;

    static CylinderSpec from(const ElementSet& elements);
};

enum class Direction { depth, width_x, width_y };

std::string_view to_string(Direction d);

/// One of the five closed-form focal profiles. Valid pairs are
/// (z, depth), (z, width_x), (x, depth), (x, width_x), (x, width_y).
struct ProfileFormula {
    Component component = Component::z;
    Direction direction = Direction::depth;
    /// Doubles the delta != 0 branches of the Ex profiles so that their
    /// delta -> 0 limit equals the stated peak of 8.
    bool calibrated = false;
};

bool is_valid(const ProfileFormula& f);

class QuadratureError : public NumericError {
public:
    QuadratureError(const std::string& what, double estimate)
        : NumericError(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

/// C = N / (2 pi d).
double continuum_scale(const ElementSet& elements);

/// Continuum focal gain for a focus on the array axis at height z_f.
/// x and y: 8 - 4/sqrt(1+((L/2+z_f)/R)^2) - 4/sqrt(1+((L/2-z_f)/R)^2)
/// inside the array. z: 2 pi (S(L/2-z_f) + S(L/2+z_f)) with
/// S(t) = t / sqrt(R^2 + t^2). Both are continued past the ends as the
/// signed antiderivative difference.
double axial_gain(Component component, double z_f, const CylinderSpec& spec);

/// Continuum focal gain for a focus at distance `offset` from the axis
/// along `axis` in the z = 0 plane. Supported: component x along x or y,
/// component z along x or y (identical by rotational symmetry).
double transverse_gain(Component component, Axis axis, double offset, const CylinderSpec& spec);

/// Adaptive 2-D quadrature of the conjugate-phase amplitude integral
///   int_{-L/2}^{L/2} int_0^{2 pi} |a_c(theta, l)| / (P + (l - z)^2)^{3/2} dtheta dl
/// with a_x = (l - z)(x - R cos), a_y = (l - z)(y - R sin), a_z = P.
/// Throws QuadratureError when the requested relative tolerance is missed.
double quadrature_gain(Component component, const Vec3& focus, const CylinderSpec& spec,
                       double rel_tol = 1e-10);

/// Normalized focal profile at offset delta (meters) from the focus.
double beam_profile(const ProfileFormula& formula, double delta, const CylinderSpec& spec);

}  // namespace cylfocus
