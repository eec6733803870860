#include "cylfocus/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cylfocus/acceptance.hpp"
#include "cylfocus/config.hpp"
#include "cylfocus/csv.hpp"
#include "cylfocus/errors.hpp"

namespace cylfocus {
namespace {

Metadata with_array(Metadata head, const ElementSet& elements) {
    auto tail = array_metadata(elements);
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

std::vector<double> in_lambda(const std::vector<double>& meters, double lambda) {
    std::vector<double> out;
    out.reserve(meters.size());
    for (double m : meters) {
        out.push_back(m / lambda);
    }
    return out;
}

struct GainColumns {
    std::vector<double> gx, gy, gz;
};

GainColumns split(const std::vector<GainTriple>& gains, double scale) {
    GainColumns c;
    for (const auto& g : gains) {
        c.gx.push_back(g.gx * scale);
        c.gy.push_back(g.gy * scale);
        c.gz.push_back(g.gz * scale);
    }
    return c;
}

// Closed forms are continuum-normalized; bring them to the requested units.
double analytic_scale(const ElementSet& elements, Normalization mode) {
    return mode == Normalization::raw ? elements.continuum_scale() * elements.amplitude_e0() : 1.0;
}

std::string range_meta(const SweepLine& line) {
    return format_number(line.start) + ":" + format_number(line.stop) + ":" +
           std::to_string(line.count);
}

}  // namespace

std::string axial_gain_csv(const ElementSet& elements, const SweepLine& line, Component component,
                           Normalization mode, bool analytic, unsigned threads) {
    SweepLine axial = line;
    axial.axis = Axis::z;
    const GainSweep sweep = sweep_gain(elements, axial, threads);
    const GainColumns g = split(sweep.gains, normalization_factor(elements, mode));
    std::vector<CsvColumn> cols{{"offset_lambda", in_lambda(sweep.offsets, elements.wavelength())},
                                {"gx", g.gx},
                                {"gy", g.gy},
                                {"gz", g.gz}};
    if (analytic) {
        const CylinderSpec spec = CylinderSpec::from(elements);
        const double s = analytic_scale(elements, mode);
        CsvColumn ax{"gx_analytic", {}};
        CsvColumn az{"gz_analytic", {}};
        for (double z : sweep.offsets) {
            ax.values.push_back(s * axial_gain(Component::x, z, spec));
            az.values.push_back(s * axial_gain(Component::z, z, spec));
        }
        cols.push_back(std::move(ax));
        cols.push_back(std::move(az));
    }
    const Metadata meta = with_array({{"component", std::string(to_string(component))},
                                      {"axis", "z"},
                                      {"normalization", std::string(to_string(mode))},
                                      {"range_m", range_meta(axial)}},
                                     elements);
    return emit_csv(meta, cols);
}

std::string transverse_gain_csv(const ElementSet& elements, const SweepLine& line,
                                Component component, Normalization mode, bool analytic,
                                unsigned threads) {
    if (line.axis == Axis::z) {
        throw ConfigError("axis", "transverse sweeps run along x or y");
    }
    const GainSweep sweep = sweep_gain(elements, line, threads);
    const GainColumns g = split(sweep.gains, normalization_factor(elements, mode));
    std::vector<CsvColumn> cols{{"offset_lambda", in_lambda(sweep.offsets, elements.wavelength())},
                                {"gx", g.gx},
                                {"gy", g.gy},
                                {"gz", g.gz}};
    if (analytic) {
        const CylinderSpec spec = CylinderSpec::from(elements);
        const double s = analytic_scale(elements, mode);
        CsvColumn ax{"gx_analytic", {}};
        CsvColumn az{"gz_analytic", {}};
        for (double off : sweep.offsets) {
            ax.values.push_back(s * transverse_gain(Component::x, line.axis, std::fabs(off), spec));
            az.values.push_back(s * transverse_gain(Component::z, line.axis, std::fabs(off), spec));
        }
        cols.push_back(std::move(ax));
        cols.push_back(std::move(az));
    }
    const Metadata meta = with_array({{"component", std::string(to_string(component))},
                                      {"axis", std::string(to_string(line.axis))},
                                      {"normalization", std::string(to_string(mode))},
                                      {"range_m", range_meta(line)}},
                                     elements);
    return emit_csv(meta, cols);
}

std::string beam_profile_csv(const ElementSet& elements, Component component, Direction direction,
                             const std::vector<double>& offsets_m, Normalization mode,
                             bool analytic, unsigned threads) {
    const ProfileFormula formula{component, direction, true};
    if (!is_valid(formula)) {
        throw ConfigError("direction", "unsupported (component, direction) pair");
    }
    const Vec3 dir = direction == Direction::depth     ? unit(Axis::z)
                     : direction == Direction::width_x ? unit(Axis::x)
                                                       : unit(Axis::y);
    std::vector<Vec3> points;
    for (double d : offsets_m) {
        points.push_back(d * dir);
    }
    const Weights w = conjugate_weights(elements, Vec3{}, component);
    const auto fields = fields_at(elements, w, points, threads);
    const double scale = normalization_factor(elements, mode);
    GainColumns g;
    for (const auto& f : fields) {
        g.gx.push_back(std::abs(f.ex) * scale);
        g.gy.push_back(std::abs(f.ey) * scale);
        g.gz.push_back(std::abs(f.ez) * scale);
    }
    std::vector<CsvColumn> cols{{"offset_lambda", in_lambda(offsets_m, elements.wavelength())},
                                {"gx", g.gx},
                                {"gy", g.gy},
                                {"gz", g.gz}};
    if (analytic) {
        const CylinderSpec spec = CylinderSpec::from(elements);
        const double s = analytic_scale(elements, mode);
        CsvColumn a{component == Component::x ? "gx_analytic" : "gz_analytic", {}};
        for (double d : offsets_m) {
            a.values.push_back(s * beam_profile(formula, std::fabs(d), spec));
        }
        cols.push_back(std::move(a));
    }
    const Metadata meta = with_array({{"component", std::string(to_string(component))},
                                      {"direction", std::string(to_string(direction))},
                                      {"normalization", std::string(to_string(mode))}},
                                     elements);
    return emit_csv(meta, cols);
}

std::string field_map_csv(const ElementSet& elements, const Vec3& focus, Component component,
                          const GridSpec& grid, Normalization mode, unsigned threads) {
    const Weights w = conjugate_weights(elements, focus, component);
    const FieldMap map = field_map(elements, w, grid, threads);
    const double scale = normalization_factor(elements, mode);
    const double lambda = elements.wavelength();
    std::vector<CsvColumn> cols{{"u_lambda", {}}, {"v_lambda", {}}, {"abs_ex", {}},
                                {"abs_ey", {}},   {"abs_ez", {}}};
    for (int j = 0; j < grid.v_count; ++j) {
        for (int i = 0; i < grid.u_count; ++i) {
            const EFieldSample& s = map.at(i, j);
            cols[0].values.push_back(grid.u(i) / lambda);
            cols[1].values.push_back(grid.v(j) / lambda);
            cols[2].values.push_back(std::abs(s.ex) * scale);
            cols[3].values.push_back(std::abs(s.ey) * scale);
            cols[4].values.push_back(std::abs(s.ez) * scale);
        }
    }
    const Metadata meta = with_array(
        {{"component", std::string(to_string(component))},
         {"plane", std::string(to_string(grid.plane))},
         {"focus_m", format_number(focus.x) + "," + format_number(focus.y) + "," +
                         format_number(focus.z)},
         {"fixed_m", format_number(grid.fixed)},
         {"normalization", std::string(to_string(mode))}},
        elements);
    return emit_csv(meta, cols);
}

std::string resolution_text(const ResolutionReport& report, const ElementSet& elements) {
    const double lambda = elements.wavelength();
    std::ostringstream out;
    const Metadata meta = with_array({{"component", std::string(to_string(report.meta.component))},
                                      {"direction", std::string(to_string(report.meta.direction))},
                                      {"source", std::string(to_string(report.meta.source))},
                                      {"normalization", "continuum"}},
                                     elements);
    emit_csv(out, meta,
             {{"peak_offset_lambda", {report.peak_offset / lambda}},
              {"peak_value", {report.peak_value}},
              {"width_3db_lambda", {report.width_lambda}},
              {"width_3db_m", {report.width_m}},
              {"boundary_peak", {report.boundary_peak ? 1.0 : 0.0}}});
    out << "sidelobe_offset_lambda,sidelobe_level_db\n";
    for (const auto& s : report.sidelobes) {
        out << format_number(s.offset / lambda) << ',' << format_number(s.level_db) << '\n';
    }
    return out.str();
}

namespace {

SweepLine parse_range(const std::string& text, double lambda, Axis axis) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        parts.push_back(item);
    }
    if (parts.size() != 3) {
        throw ConfigError("range", "expected start:stop:count, got '" + text + "'");
    }
    SweepLine line;
    line.axis = axis;
    try {
        std::size_t used = 0;
        line.start = std::stod(parts[0], &used) * lambda;
        if (used != parts[0].size()) throw std::invalid_argument("start");
        line.stop = std::stod(parts[1], &used) * lambda;
        if (used != parts[1].size()) throw std::invalid_argument("stop");
        line.count = std::stoi(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("count");
    } catch (const std::exception&) {
        throw ConfigError("range", "malformed number in '" + text + "'");
    }
    line.offsets();  // validates
    return line;
}

Vec3 parse_point(const std::string& text, double lambda) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used) * lambda);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("focus", "malformed coordinate in '" + text + "'");
        }
    }
    if (v.size() != 3) {
        throw ConfigError("focus", "expected x,y,z");
    }
    return {v[0], v[1], v[2]};
}

const std::map<std::string, Component> kComponents{
    {"x", Component::x}, {"y", Component::y}, {"z", Component::z}};
const std::map<std::string, Axis> kAxes{{"x", Axis::x}, {"y", Axis::y}, {"z", Axis::z}};
const std::map<std::string, Direction> kDirections{
    {"depth", Direction::depth}, {"width_x", Direction::width_x}, {"width_y", Direction::width_y}};
const std::map<std::string, Normalization> kNormalizations{
    {"raw", Normalization::raw}, {"continuum", Normalization::continuum}};
const std::map<std::string, ProfileSource> kSources{{"numeric", ProfileSource::numeric},
                                                    {"analytic", ProfileSource::analytic},
                                                    {"quadrature", ProfileSource::quadrature}};
const std::map<std::string, Plane> kPlanes{{"xy", Plane::xy}, {"xz", Plane::xz}, {"yz", Plane::yz}};

template <class E>
void enum_option(CLI::App* sub, const std::string& name, E& target,
                 const std::map<std::string, E>& table, const std::string& help) {
    // IsMember rewrites the input to the matching key, so the lookup is exact.
    sub->add_option_function<std::string>(
           name, [&target, &table](const std::string& s) { target = table.at(s); }, help)
        ->check(CLI::IsMember(table, CLI::ignore_case));
}

struct CommonOptions {
    std::string config;
    std::string output = "-";
    unsigned threads = 0;
    Normalization normalization = Normalization::raw;
};

void add_common(CLI::App* sub, CommonOptions& o, bool needs_config) {
    auto* cfg = sub->add_option("--config,-c", o.config, "Array configuration (flat JSON)");
    if (needs_config) {
        cfg->required();
    }
    sub->add_option("--output,-o", o.output, "Output file, '-' for stdout");
    sub->add_option("--threads,-j", o.threads, "Worker threads (0 = all cores)");
    enum_option(sub, "--normalization", o.normalization, kNormalizations, "raw | continuum");
}

std::string usage() {
    return "usage: cylfocus <subcommand> [options]\n"
           "subcommands: axial-gain, transverse-gain, beam-profile, field-map, resolution, validate\n"
           "run 'cylfocus <subcommand> --help' for options\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Near-field focusing of cylindrical dipole arrays", "cylfocus"};
    app.require_subcommand(1);

    CommonOptions common;
    Component component = Component::z;
    Axis axis = Axis::x;
    Direction direction = Direction::depth;
    ProfileSource source = ProfileSource::analytic;
    Plane plane = Plane::xz;
    std::string range;
    std::string u_range = "-1:1:41";
    std::string v_range = "-1:1:41";
    std::string focus_text = "0,0,0";
    double fixed_lambda = 0.0;
    double span_lambda = 2.0;
    double step_lambda = 0.005;
    bool analytic = false;

    auto component_opt = [&](CLI::App* sub) {
        enum_option(sub, "--component", component, kComponents, "x | y | z");
    };

    auto* axial = app.add_subcommand("axial-gain", "Focal gains with the focus on the array axis");
    add_common(axial, common, true);
    component_opt(axial);
    axial->add_option("--range", range, "start:stop:count in wavelengths")->required();
    axial->add_flag("--analytic", analytic, "Append closed-form columns");

    auto* trans = app.add_subcommand("transverse-gain", "Focal gains with the focus off axis");
    add_common(trans, common, true);
    component_opt(trans);
    enum_option(trans, "--axis", axis, kAxes, "x | y");
    trans->add_option("--range", range, "start:stop:count in wavelengths")->required();
    trans->add_flag("--analytic", analytic, "Append closed-form columns");

    auto* beam = app.add_subcommand("beam-profile", "Field magnitude around a focus at the origin");
    add_common(beam, common, true);
    component_opt(beam);
    enum_option(beam, "--direction", direction, kDirections, "depth | width_x | width_y");
    beam->add_option("--range", range, "start:stop:count in wavelengths")->required();
    beam->add_flag("--analytic", analytic, "Append the closed-form profile");

    auto* fmap = app.add_subcommand("field-map", "Field magnitudes on a planar grid");
    add_common(fmap, common, true);
    component_opt(fmap);
    enum_option(fmap, "--plane", plane, kPlanes, "xy | xz | yz");
    fmap->add_option("--u", u_range, "start:stop:count in wavelengths");
    fmap->add_option("--v", v_range, "start:stop:count in wavelengths");
    fmap->add_option("--fixed", fixed_lambda, "Coordinate normal to the plane, wavelengths");
    fmap->add_option("--focus", focus_text, "x,y,z in wavelengths");

    auto* res = app.add_subcommand("resolution", "Peak, 3-dB width and sidelobes of a profile");
    add_common(res, common, true);
    component_opt(res);
    enum_option(res, "--direction", direction, kDirections, "depth | width_x | width_y");
    enum_option(res, "--source", source, kSources, "numeric | analytic | quadrature");
    res->add_option("--span", span_lambda, "Profile half-span in wavelengths");
    res->add_option("--step", step_lambda, "Sample step in wavelengths");

    auto* val = app.add_subcommand("validate", "Run the acceptance suite");
    add_common(val, common, false);

    if (argc < 2) {
        err << usage();
        return kExitConfig;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    auto emit = [&](const std::string& text) {
        if (common.output == "-") {
            out << text;
        } else {
            write_output(common.output, text);
        }
    };

    try {
        if (val->parsed()) {
            const auto results = run_acceptance(common.threads);
            emit(format_acceptance(results));
            return all_passed(results) ? kExitOk : kExitFailed;
        }

        const RunConfig run = load_config(common.config);
        const ElementSet elements = build_array(run.array);
        const double lambda = elements.wavelength();
        std::string text;

        if (axial->parsed()) {
            text = axial_gain_csv(elements, parse_range(range, lambda, Axis::z), component,
                                  common.normalization, analytic, common.threads);
        } else if (trans->parsed()) {
            text = transverse_gain_csv(elements, parse_range(range, lambda, axis), component,
                                       common.normalization, analytic, common.threads);
        } else if (beam->parsed()) {
            const SweepLine line = parse_range(range, lambda, Axis::z);
            text = beam_profile_csv(elements, component, direction, line.offsets(),
                                    common.normalization, analytic, common.threads);
        } else if (fmap->parsed()) {
            const SweepLine u = parse_range(u_range, lambda, Axis::x);
            const SweepLine v = parse_range(v_range, lambda, Axis::x);
            GridSpec grid{plane, u.start, u.stop, u.count, v.start, v.stop, v.count,
                          fixed_lambda * lambda};
            text = field_map_csv(elements, parse_point(focus_text, lambda), component, grid,
                                 common.normalization, common.threads);
        } else if (res->parsed()) {
            ResolutionOptions opt{span_lambda, step_lambda, common.threads};
            text = resolution_text(resolution_report(component, direction, source, elements, opt),
                                   elements);
        }
        emit(text);
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}

int run_subcommand(std::string_view name, const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    static const std::vector<std::string_view> known{"axial-gain", "transverse-gain",
                                                     "beam-profile", "field-map",
                                                     "resolution", "validate"};
    if (std::find(known.begin(), known.end(), name) == known.end()) {
        err << "unknown subcommand '" << name << "'\n" << usage();
        return kExitConfig;
    }
    std::vector<std::string> storage{"cylfocus", std::string(name)};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) {
        argv.push_back(s.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cylfocus
