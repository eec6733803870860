#include "cylfocus/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cylfocus/errors.hpp"

namespace cylfocus {

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        value = 0.0;  // drop the sign of -0
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

Metadata array_metadata(const ElementSet& elements) {
    return {
        {"wavelength_m", format_number(elements.wavelength())},
        {"R", format_number(elements.radius())},
        {"L", format_number(elements.array_length())},
        {"N", std::to_string(elements.elements_per_ring())},
        {"M", std::to_string(elements.num_rings())},
        {"C", format_number(elements.continuum_scale())},
    };
}

void emit_csv(std::ostream& out, const Metadata& meta, const std::vector<CsvColumn>& columns) {
    const std::size_t rows = columns.empty() ? 0 : columns.front().values.size();
    for (const auto& c : columns) {
        if (c.values.size() != rows) {
            throw DomainError("csv: column '" + c.name + "' has inconsistent length");
        }
    }
    out << '#';
    for (const auto& [key, value] : meta) {
        out << ' ' << key << '=' << value;
    }
    out << '\n';
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c].name;
    }
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << format_number(columns[c].values[r]);
        }
        out << '\n';
    }
}

std::string emit_csv(const Metadata& meta, const std::vector<CsvColumn>& columns) {
    std::ostringstream out;
    emit_csv(out, meta, columns);
    return out.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
        throw ConfigError("output", "cannot write " + path);
    }
}

}  // namespace cylfocus
