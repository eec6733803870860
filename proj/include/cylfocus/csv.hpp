#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cylfocus/array_model.hpp"
#include "cylfocus/field_engine.hpp"

namespace cylfocus {

/// 9 significant digits with '.' as the decimal separator, whatever the locale.
std::string format_number(double value);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Metadata common to every file: wavelength_m, R, L, N, M, C.
Metadata array_metadata(const ElementSet& elements);

struct CsvColumn {
    std::string name;
    std::vector<double> values;
};

/// Writes `# k=v k=v ...`, the header row and one row per sample, '\n'
/// line endings. Throws DomainError on ragged columns.
void emit_csv(std::ostream& out, const Metadata& meta, const std::vector<CsvColumn>& columns);

std::string emit_csv(const Metadata& meta, const std::vector<CsvColumn>& columns);

/// Writes text to `path`, or to stdout for "-". Throws ConfigError on I/O failure.
void write_output(const std::string& path, const std::string& text);

}  // namespace cylfocus
