#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cylfocus/analytic.hpp"
#include "cylfocus/array_model.hpp"
#include "cylfocus/field_engine.hpp"
#include "cylfocus/resolution.hpp"

namespace cylfocus {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // `validate` with a failing criterion
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

// Producers of the CSV files written by the subcommands. Offsets are in
// wavelengths in the table and in meters in the metadata line.

/// Focus stepped along the array axis; gx, gy, gz plus optional closed forms.
std::string axial_gain_csv(const ElementSet& elements, const SweepLine& line, Component component,
                           Normalization mode, bool analytic, unsigned threads);

/// Focus stepped along x or y in the z = 0 plane.
std::string transverse_gain_csv(const ElementSet& elements, const SweepLine& line,
                                Component component, Normalization mode, bool analytic,
                                unsigned threads);

/// Field magnitudes around a focus at the origin, weights matched to
/// `component`, observation point stepped along `direction`.
std::string beam_profile_csv(const ElementSet& elements, Component component, Direction direction,
                             const std::vector<double>& offsets_m, Normalization mode,
                             bool analytic, unsigned threads);

std::string field_map_csv(const ElementSet& elements, const Vec3& focus, Component component,
                          const GridSpec& grid, Normalization mode, unsigned threads);

std::string resolution_text(const ResolutionReport& report, const ElementSet& elements);

/// Dispatches one subcommand (axial-gain, transverse-gain, beam-profile,
/// field-map, resolution, validate) with its arguments. Returns the exit code.
int run_subcommand(std::string_view name, const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

/// Full command line including the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cylfocus
