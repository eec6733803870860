#include "cylfocus/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cylfocus/errors.hpp"

namespace cylfocus {
namespace {

using nlohmann::json;

double number(const json& value, const std::string& key) {
    if (!value.is_number()) {
        throw ConfigError(key, "must be a number");
    }
    const double v = value.get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError(key, "must be finite");
    }
    return v;
}

int integer(const json& value, const std::string& key) {
    if (!value.is_number_integer()) {
        throw ConfigError(key, "must be an integer");
    }
    const auto v = value.get<long long>();
    if (v < 0 || v > 100'000'000) {
        throw ConfigError(key, "out of range");
    }
    return static_cast<int>(v);
}

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("", "config parse error at " + line_col(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("", "config must be a JSON object");
    }

    RunConfig run;
    ArrayConfig& a = run.array;
    bool have_rings = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "wavelength_m") {
            a.wavelength_m = number(value, key);
        } else if (key == "frequency_hz") {
            a.frequency_hz = number(value, key);
        } else if (key == "radius_lambda") {
            a.radius_lambda = number(value, key);
        } else if (key == "radius_m") {
            a.radius_m = number(value, key);
        } else if (key == "ring_spacing_lambda") {
            a.ring_spacing_lambda = number(value, key);
        } else if (key == "num_rings") {
            a.num_rings = integer(value, key);
            have_rings = true;
        } else if (key == "elements_per_ring") {
            if (value.is_string()) {
                if (value.get<std::string>() != "auto") {
                    throw ConfigError(key, "must be an integer or \"auto\"");
                }
                a.elements_per_ring.reset();
            } else {
                a.elements_per_ring = integer(value, key);
            }
        } else if (key == "e0_v_per_m") {
            a.e0_v_per_m = number(value, key);
        } else {
            throw ConfigError(key, "unknown key");
        }
    }
    validate(a);
    if (!have_rings) {
        throw ConfigError("num_rings", "required");
    }
    return run;
}

std::string emit_config(const ArrayConfig& config) {
    json doc = json::object();
    if (config.wavelength_m) doc["wavelength_m"] = *config.wavelength_m;
    if (config.frequency_hz) doc["frequency_hz"] = *config.frequency_hz;
    if (config.radius_lambda) doc["radius_lambda"] = *config.radius_lambda;
    if (config.radius_m) doc["radius_m"] = *config.radius_m;
    doc["ring_spacing_lambda"] = config.ring_spacing_lambda;
    doc["num_rings"] = config.num_rings;
    if (config.elements_per_ring) {
        doc["elements_per_ring"] = *config.elements_per_ring;
    } else {
        doc["elements_per_ring"] = "auto";
    }
    doc["e0_v_per_m"] = config.e0_v_per_m;
    return doc.dump(2) + "\n";
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config", "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace cylfocus
