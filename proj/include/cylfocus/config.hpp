#pragma once

#include <string>
#include <string_view>

#include "cylfocus/array_model.hpp"
#include "cylfocus/field_engine.hpp"

namespace cylfocus {

/// Array configuration plus the run parameters supplied on the command line.
struct RunConfig {
    ArrayConfig array;
    Axis axis = Axis::z;
    double range_start_lambda = 0.0;
    double range_stop_lambda = 0.0;
    int count = 2;
    Normalization normalization = Normalization::raw;
    std::string output_path = "-";
};

/// Parses the flat JSON object config:
///   wavelength_m | frequency_hz      exactly one
///   radius_lambda | radius_m         exactly one
///   ring_spacing_lambda              default 0.5
///   num_rings                        required, integer >= 1
///   elements_per_ring                integer >= 3 or "auto" (default)
///   e0_v_per_m                       default 1.0
/// Unknown keys are rejected. Throws ConfigError; parse errors name the line.
RunConfig parse_config(std::string_view text);

/// Serializes the array part of a config in the same schema.
std::string emit_config(const ArrayConfig& config);

RunConfig load_config(const std::string& path);

}  // namespace cylfocus
