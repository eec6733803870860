#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "cylfocus/analytic.hpp"
#include "cylfocus/array_model.hpp"
#include "cylfocus/field_engine.hpp"

namespace cylfocus {

enum class ProfileSource { numeric, analytic, quadrature };

std::string_view to_string(ProfileSource s);

struct ProfileMeta {
    Component component = Component::z;
    Direction direction = Direction::depth;
    ProfileSource source = ProfileSource::numeric;
    double wavelength = 1.0;  // meters
};

/// Sampled 1-D focusing curve: strictly increasing offsets (meters) and
/// finite non-negative values, at least three samples.
class Profile1D {
public:
    Profile1D(std::vector<double> offsets, std::vector<double> values, ProfileMeta meta);

    const std::vector<double>& offsets() const noexcept { return offsets_; }
    const std::vector<double>& values() const noexcept { return values_; }
    const ProfileMeta& meta() const noexcept { return meta_; }
    std::size_t size() const noexcept { return offsets_.size(); }

private:
    std::vector<double> offsets_;
    std::vector<double> values_;
    ProfileMeta meta_;
};

struct Peak {
    double offset = 0.0;
    double value = 0.0;
    std::size_t index = 0;     // sample holding the maximum
    bool at_boundary = false;  // maximum sits on the first or last sample
};

struct HalfPowerWidth {
    double left = 0.0;   // crossing offsets, meters
    double right = 0.0;
    double full = 0.0;
};

struct Sidelobe {
    double offset = 0.0;    // meters
    double level_db = 0.0;  // 20 log10(value / peak), < 0
};

/// Global maximum refined by a parabola through the neighbouring samples.
/// Throws NumericError for a flat profile.
Peak find_peak(const Profile1D& profile);

/// Full width between the peak/sqrt(2) crossings, interpolated linearly
/// between bracketing samples. A peak on the first or last sample is taken
/// as the centre of a mirrored half-profile and the width is doubled.
/// Throws NumericError when a required crossing is missing.
HalfPowerWidth half_power_width(const Profile1D& profile);

/// Full 3-dB width of a profile f(delta) that is even about delta = 0 and
/// peaks there: twice the first positive crossing of f(0)/sqrt(2), bracketed
/// with `step` and bisected to `tol`. Searches up to `max_offset`.
double half_power_width(const std::function<double(double)>& f, double step, double max_offset,
                        double tol);

/// Local maxima outside the main lobe, loudest first. The main lobe ends at
/// the first local minimum on each side of the peak.
std::vector<Sidelobe> sidelobes(const Profile1D& profile);

struct ResolutionOptions {
    double span_lambda = 2.0;     // profile extends +-span (numeric) or 0..span (analytic)
    double step_lambda = 0.005;
    unsigned threads = 0;
};

struct ResolutionReport {
    ProfileMeta meta;
    double peak_offset = 0.0;  // meters
    double peak_value = 0.0;   // continuum-normalized
    bool boundary_peak = false;
    double width_m = 0.0;
    double width_lambda = 0.0;
    std::vector<Sidelobe> sidelobes;
    Profile1D profile;
};

/// Discrete-sum profile around a focus at the origin, with the focusing
/// weights matched to `component`, continuum-normalized.
Profile1D numeric_profile(const ElementSet& elements, Component component, Direction direction,
                          const ResolutionOptions& options);

/// Closed-form profile (calibrated) sampled on [0, span].
Profile1D analytic_profile(const CylinderSpec& spec, double wavelength, Component component,
                           Direction direction, const ResolutionOptions& options);

ResolutionReport resolution_report(Component component, Direction direction, ProfileSource source,
                                   const ElementSet& elements,
                                   const ResolutionOptions& options = {});

}  // namespace cylfocus
