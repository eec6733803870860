#include "cylfocus/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "cylfocus/quadrature.hpp"
#include "cylfocus/specfun.hpp"

namespace cylfocus {
namespace {

constexpr double kPi = std::numbers::pi;

void check(const CylinderSpec& s) {
    if (!(s.radius > 0.0) || !(s.length >= 0.0) || !(s.wavenumber > 0.0) ||
        !std::isfinite(s.radius) || !std::isfinite(s.length) || !std::isfinite(s.wavenumber)) {
        throw DomainError("cylinder spec needs R > 0, L >= 0, k > 0");
    }
}

double sign(double t) { return t < 0.0 ? -1.0 : 1.0; }

// int_0^t |s| R / (R^2 + s^2)^{3/2} ds, odd in t.
double axial_x_primitive(double t, double r) {
    return sign(t) * (1.0 - 1.0 / std::sqrt(1.0 + (t / r) * (t / r)));
}

// int_0^t R^2 / (R^2 + s^2)^{3/2} ds.
double axial_z_primitive(double t, double r) { return t / std::sqrt(r * r + t * t); }

}  // namespace

CylinderSpec CylinderSpec::from(const ElementSet& elements) {
    return {elements.radius(), elements.array_length(), elements.wavenumber()};
}

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::depth: return "depth";
        case Direction::width_x: return "width_x";
        case Direction::width_y: return "width_y";
    }
    return "?";
}

bool is_valid(const ProfileFormula& f) {
    if (f.component == Component::z) {
        return f.direction == Direction::depth || f.direction == Direction::width_x;
    }
    return f.component == Component::x;
}

double continuum_scale(const ElementSet& elements) { return elements.continuum_scale(); }

double axial_gain(Component component, double z_f, const CylinderSpec& spec) {
    check(spec);
    if (!std::isfinite(z_f)) {
        throw DomainError("axial_gain: non-finite focus");
    }
    const double h = 0.5 * spec.length;
    const double above = h - z_f;
    const double below = h + z_f;
    const double r = spec.radius;
    if (component == Component::z) {
        return 2.0 * kPi * (axial_z_primitive(above, r) + axial_z_primitive(below, r));
    }
    return 4.0 * (axial_x_primitive(above, r) + axial_x_primitive(below, r));
}

double transverse_gain(Component component, Axis axis, double offset, const CylinderSpec& spec) {
    check(spec);
    if (!std::isfinite(offset) || offset < 0.0) {
        throw DomainError("transverse_gain: offset must be finite and >= 0");
    }
    if (axis == Axis::z || component == Component::y) {
        throw DomainError("transverse_gain: supported pairs are (x|z, x|y)");
    }
    const double r = spec.radius;
    const double len = spec.length;

    if (component == Component::z) {
        if (offset == 0.0) {
            // Both elliptic parameters vanish; reduces to the axial value.
            return axial_gain(Component::z, 0.0, spec);
        }
        if (len == 0.0) {
            return 0.0;
        }
        const double inner = len * len + 4.0 * (offset - r) * (offset - r);
        const double outer = len * len + 4.0 * (offset + r) * (offset + r);
        const double m = 16.0 * r * offset;
        return 4.0 * specfun::ellip_k(-m / inner) * len / std::sqrt(inner) +
               4.0 * specfun::ellip_k(m / outer) * len / std::sqrt(outer);
    }

    if (axis == Axis::x) {
        const double kt = offset / r;
        if (kt <= 1.0) {
            return 8.0;
        }
        const double u = 4.0 * kt / ((1.0 + kt) * (1.0 + kt));
        if (u >= 1.0) {
            return 8.0;  // kt rounds onto the ring; the K term vanishes there
        }
        return 4.0 / kt * ((kt - 1.0) * specfun::ellip_k(u) + (1.0 + kt) * specfun::ellip_e(u));
    }

    // Along y. The bracket difference sqrt(A) - sqrt(B) is rewritten as
    // -16 R y / (sqrt(A) + sqrt(B)), which removes the 1/y singularity:
    // below the ring the result is 8 - 32 R / (sqrt(A) + sqrt(B)).
    const double y = offset;
    const double sa = std::sqrt(len * len + 4.0 * (y - r) * (y - r));
    const double sb = std::sqrt(len * len + 4.0 * (y + r) * (y + r));
    const double near = y <= r ? 8.0 : 8.0 * r / y;
    return near - 32.0 * r / (sa + sb);
}

double quadrature_gain(Component component, const Vec3& focus, const CylinderSpec& spec,
                       double rel_tol) {
    check(spec);
    if (!std::isfinite(focus.x) || !std::isfinite(focus.y) || !std::isfinite(focus.z)) {
        throw DomainError("quadrature_gain: non-finite focus");
    }
    const double h = 0.5 * spec.length;
    if (h == 0.0) {
        return 0.0;
    }
    const double r = spec.radius;
    const double x = focus.x;
    const double y = focus.y;
    const double zf = focus.z;

    std::vector<double> l_breaks{-h};
    if (zf > -h && zf < h) {
        l_breaks.push_back(zf);
    }
    l_breaks.push_back(h);

    std::vector<double> t_breaks{0.0, 2.0 * kPi};
    auto add_angle = [&](double t) {
        t = std::fmod(t, 2.0 * kPi);
        if (t < 0.0) {
            t += 2.0 * kPi;
        }
        t_breaks.push_back(t);
    };
    if (x != 0.0 || y != 0.0) {
        add_angle(std::atan2(y, x));  // closest approach to the focus
    }
    if (component == Component::x && std::fabs(x) <= r) {
        add_angle(std::acos(x / r));
        add_angle(-std::acos(x / r));
    }
    if (component == Component::y && std::fabs(y) <= r) {
        add_angle(std::asin(y / r));
        add_angle(kPi - std::asin(y / r));
    }
    std::sort(t_breaks.begin(), t_breaks.end());
    t_breaks.erase(std::unique(t_breaks.begin(), t_breaks.end()), t_breaks.end());

    // The inner integrals only need to sit well below the outer tolerance.
    const double inner_tol = std::min(1e-12, 1e-2 * rel_tol);
    double inner_error = 0.0;
    auto ring_integrand = [&](double theta) {
        const double dx = x - r * std::cos(theta);
        const double dy = y - r * std::sin(theta);
        const double p = dx * dx + dy * dy;
        double lateral = 0.0;
        switch (component) {
            case Component::x: lateral = std::fabs(dx); break;
            case Component::y: lateral = std::fabs(dy); break;
            case Component::z: lateral = p; break;
        }
        if (lateral == 0.0) {
            return 0.0;
        }
        auto along = [&](double l) {
            const double s = l - zf;
            const double d2 = p + s * s;
            const double axial = component == Component::z ? 1.0 : std::fabs(s);
            return axial / (d2 * std::sqrt(d2));
        };
        const quad::Result res = quad::integrate(along, l_breaks, 0.0, inner_tol, 2000);
        inner_error = std::max(inner_error, res.error / std::max(std::fabs(res.value), 1e-300));
        return lateral * res.value;
    };

    const quad::Result outer = quad::integrate(ring_integrand, t_breaks, 0.0, rel_tol, 4000);
    const double achieved = outer.error / std::max(std::fabs(outer.value), 1e-300);
    if (!outer.converged || inner_error > 0.1 * rel_tol) {
        std::ostringstream msg;
        msg << "quadrature did not converge: relative estimate " << std::max(achieved, inner_error)
            << " (requested " << rel_tol << ")";
        throw QuadratureError(msg.str(), std::max(achieved, inner_error));
    }
    return outer.value;
}

double beam_profile(const ProfileFormula& formula, double delta, const CylinderSpec& spec) {
    check(spec);
    if (!is_valid(formula)) {
        throw DomainError("beam_profile: unsupported (component, direction) pair");
    }
    if (!std::isfinite(delta) || delta < 0.0) {
        throw DomainError("beam_profile: delta must be finite and >= 0");
    }
    const double arg = delta * spec.wavenumber;
    const double scale = formula.calibrated ? 2.0 : 1.0;

    if (formula.component == Component::z) {
        if (formula.direction == Direction::width_x) {
            return 4.0 * kPi * std::fabs(specfun::sinc(arg));
        }
        // 2 pi |e^{-j 2 delta k s} - 1| / (delta k) == 4 pi s |sinc(delta k s)|,
        // s = sin(acos(R / sqrt((L/2)^2 + R^2))).
        const double h = 0.5 * spec.length;
        const double s = h / std::sqrt(h * h + spec.radius * spec.radius);
        return 4.0 * kPi * s * std::fabs(specfun::sinc(arg * s));
    }

    switch (formula.direction) {
        case Direction::depth:
            return scale * 2.0 * kPi * std::fabs(specfun::struve_h(-1, arg));
        case Direction::width_x:
            if (arg == 0.0) {
                return 8.0;
            }
            return scale * 2.0 * kPi * std::fabs(specfun::struve_h(0, arg)) / arg;
        case Direction::width_y:
            if (arg == 0.0) {
                return 8.0;
            }
            return scale * 4.0 * specfun::sine_integral(arg) / arg;
    }
    return 0.0;
}

}  // namespace cylfocus
