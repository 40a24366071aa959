// qlines: level lines of hyperbolic distance and harmonic measure, channel
// and obstacle streamlines, their distortion bounds, and empirical
// bounded-turning certification.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qlines/certify.hpp"
#include "qlines/flow.hpp"
#include "qlines/io.hpp"
#include "qlines/motion.hpp"
#include "qlines/obstacle.hpp"
#include "qlines/strip_geometry.hpp"

namespace fs = std::filesystem;
using namespace qlines;

namespace {

struct OutputSpec {
    std::string prefix;
    bool csv = true, json = true, svg = true;

    bool enabled() const { return !prefix.empty(); }
};

void parse_formats(const std::string& formats, OutputSpec& out) {
    if (formats.empty()) return;
    out.csv = formats.find("csv") != std::string::npos;
    out.json = formats.find("json") != std::string::npos;
    out.svg = formats.find("svg") != std::string::npos;
    if (!out.csv && !out.json && !out.svg)
        throw CLI::ValidationError("--formats", "expected a subset of csv,json,svg");
}

AnalyticMap map_by_name(const std::string& name) {
    if (name == "identity") return identity_map();
    if (name == "disk") return strip_to_disk();
    if (name == "two-slit") return two_slit_map();
    throw CLI::ValidationError("--map", "unknown map '" + name + "'");
}

Json curve_meta_json(const Curve& curve) {
    Json j;
    j["kind"] = curve.meta.kind;
    j["domain"] = curve.meta.domain;
    j["level"] = curve.meta.level;
    j["window"] = {curve.meta.window_min, curve.meta.window_max};
    j["points"] = curve.points.size();
    return j;
}

void emit(const Json& report, const OutputSpec& out) {
    if (out.enabled() && out.json) write_json(report, out.prefix + ".json");
    std::cout << report.dump(2) << '\n';
}

// -------------------------------------------------------------------------
// bounds

int run_bounds(const std::string& theorem, std::optional<double> c, std::optional<double> a,
               std::optional<double> b, std::optional<double> y0, bool symmetric,
               const OutputSpec& out) {
    BoundReport report;
    if (theorem == "level") {
        if (!c) throw CLI::ValidationError("--c", "required for --theorem level");
        report = level_line_bound(*c);
    } else if (theorem == "harmonic") {
        if (!a || !b) throw CLI::ValidationError("--a/--b", "required for --theorem harmonic");
        report = harmonic_level_bound(*a, *b);
    } else if (theorem == "symmetric") {
        if (!b) throw CLI::ValidationError("--b", "required for --theorem symmetric");
        report = symmetric_level_bound(*b);
    } else if (theorem == "channel") {
        if (!y0) throw CLI::ValidationError("--y0", "required for --theorem channel");
        Channel ch{identity_map(), symmetric};
        report = channel_bound(ch, *y0);
    } else {
        throw CLI::ValidationError("--theorem",
                                   "expected one of level, harmonic, symmetric, channel");
    }
    Json j;
    j["command"] = "bounds";
    j["inputs"] = to_json(report)["inputs"];
    j["K"] = report.K;
    j["theorem"] = std::string(to_string(report.theorem));
    j["quasiline"] = report.quasiline;
    j["warnings"] = report.warnings;
    emit(j, out);
    return 0;
}

// -------------------------------------------------------------------------
// curve tracing commands

void write_curves(const std::vector<std::pair<std::string, const Curve*>>& curves,
                  const OutputSpec& out, double wall_height, Json& report,
                  double view_x = 6.5, double view_y = 1.75) {
    if (!out.enabled()) return;
    if (out.csv) {
        for (const auto& [tag, curve] : curves)
            write_curve_csv(*curve, out.prefix + (tag.empty() ? "" : "_" + tag) + ".csv");
    }
    if (out.json) write_json(report, out.prefix + ".json");
    if (out.svg) {
        SvgWriter svg(-view_x, view_x, -view_y, view_y);
        if (wall_height > 0) svg.add_wall_lines(wall_height);
        for (const auto& [tag, curve] : curves) svg.add_curve(*curve, "#1f4e79");
        svg.write(out.prefix + ".svg");
    }
}

int run_level_line(const std::string& map_name, double c, int side, double x_min, double x_max,
                   int n, std::optional<double> verify_tol, const OutputSpec& out) {
    AnalyticMap psi = map_by_name(map_name);
    Curve curve = trace_hyperbolic_level(psi, c, side, x_min, x_max, n);
    BoundReport bound = level_line_bound(c);

    Json j;
    j["command"] = "level-line";
    j["inputs"] = {{"map", map_name}, {"c", c}, {"side", side},
                   {"x_min", x_min}, {"x_max", x_max}, {"n", n}};
    j["K"] = bound.K;
    j["theorem"] = std::string(to_string(bound.theorem));
    j["curve"] = curve_meta_json(curve);
    j["warnings"] = Json::array();
    if (verify_tol) {
        auto v = verify_level_distance(psi, curve, c, *verify_tol);
        j["verify"] = {{"max_error", v.max_error}, {"tol", v.tol}, {"pass", v.pass}};
        if (!v.pass) j["warnings"].push_back("level distance verification failed");
    }

    double wall = map_name == "identity" ? kHalfPi : 0.0;
    write_curves({{"", &curve}}, out, wall, j);
    if (!out.enabled() || !out.json) std::cout << j.dump(2) << '\n';
    return 0;
}

int run_harmonic_level(const std::string& map_name, double b, double x_min, double x_max, int n,
                       const OutputSpec& out) {
    AnalyticMap psi = map_by_name(map_name);
    Curve curve = trace_harmonic_level(psi, b, x_min, x_max, n);
    // distortion relative to the central level {h = 1/2}
    BoundReport bound = harmonic_level_bound(std::min(b, 0.5), std::max(b, 0.5));

    Json j;
    j["command"] = "harmonic-level";
    j["inputs"] = {{"map", map_name}, {"b", b}, {"x_min", x_min}, {"x_max", x_max}, {"n", n}};
    j["K"] = bound.K;
    j["theorem"] = std::string(to_string(bound.theorem));
    j["curve"] = curve_meta_json(curve);
    j["warnings"] = Json::array();

    write_curves({{"", &curve}}, out, map_name == "identity" ? kHalfPi : 0.0, j);
    if (!out.enabled() || !out.json) std::cout << j.dump(2) << '\n';
    return 0;
}

int run_streamlines(const std::string& map_name, std::vector<double> levels, double x_min,
                    double x_max, int n, const OutputSpec& out) {
    if (map_name == "disk") throw CLI::ValidationError("--map", "the disk is not a channel");
    Channel channel = make_channel(map_by_name(map_name), true);
    if (levels.empty()) levels = {-1.2, -0.8, -0.4, 0.0, 0.4, 0.8, 1.2};

    Json j;
    j["command"] = "streamlines";
    j["inputs"] = {{"map", map_name}, {"x_min", x_min}, {"x_max", x_max}, {"n", n}};
    j["streamlines"] = Json::array();

    std::vector<Streamline> lines;
    lines.reserve(levels.size());
    std::vector<std::pair<std::string, const Curve*>> named;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        lines.push_back(streamline(channel, levels[i], x_min, x_max, n));
        const auto& s = lines.back();
        Json entry;
        entry["y0"] = s.y0;
        entry["h_value"] = s.h_value;
        entry["K"] = s.bound.K;
        entry["theorem"] = std::string(to_string(s.bound.theorem));
        entry["symmetric"] = channel.symmetric;
        entry["quasiline"] = s.bound.quasiline;
        j["streamlines"].push_back(entry);
        named.emplace_back("y" + std::to_string(i), &lines.back().curve);
    }
    j["warnings"] = Json::array();

    write_curves(named, out, map_name == "identity" ? kHalfPi : 0.0, j, 6.5,
                 map_name == "identity" ? 1.75 : 5.0);
    if (!out.enabled() || !out.json) std::cout << j.dump(2) << '\n';
    return 0;
}

// -------------------------------------------------------------------------
// obstacle pipeline

int run_obstacle(std::optional<double> segment, const std::vector<double>& slits, double h,
                 double x_half, double tol, std::vector<double> levels, bool dump_field,
                 const OutputSpec& out) {
    if (slits.size() % 2 != 0)
        throw CLI::ValidationError("--slits", "expected an even number of endpoints");
    GridSpec grid = GridSpec::channel(x_half, h);
    if (segment) grid.add_vertical_segment(*segment);
    for (std::size_t k = 0; k + 1 < slits.size(); k += 2)
        grid.add_real_slit(slits[k], slits[k + 1]);

    ScalarField field = solve_stream_function(grid, tol);
    if (levels.empty())
        for (int k = 1; k <= 9; ++k) {
            levels.push_back(k * kPi / 20);
            levels.push_back(-k * kPi / 20);
        }

    Json j;
    j["command"] = "obstacle";
    j["inputs"] = {{"h", h},
                   {"x_half", x_half},
                   {"tol", tol},
                   {"segment", segment ? Json(*segment) : Json(nullptr)},
                   {"slits", slits}};
    j["solver"] = {{"iterations", field.iterations}, {"residual", field.residual}};
    j["levels"] = Json::array();

    std::vector<Curve> curves;
    curves.reserve(levels.size());
    std::vector<std::pair<std::string, const Curve*>> named;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        curves.push_back(extract_streamline(field, levels[i]));
        Json entry;
        entry["level"] = levels[i];
        if (grid.has_obstacle()) {
            BoundReport bound = obstacle_bound(curves.back(), levels[i]);
            entry["K"] = std::isfinite(bound.K) ? Json(bound.K) : Json(nullptr);
            entry["unbounded"] = !std::isfinite(bound.K);
            entry["theorem"] = std::string(to_string(bound.theorem));
            entry["upper_estimate"] = bound.upper_estimate;
            entry["warnings"] = bound.warnings;
        }
        j["levels"].push_back(entry);
        named.emplace_back("level" + std::to_string(i), &curves.back());
    }
    j["warnings"] = Json::array();

    if (out.enabled()) {
        if (dump_field && out.csv) write_field_csv(field, out.prefix + "_field.csv");
        if (out.csv)
            for (const auto& [tag, curve] : named)
                write_curve_csv(*curve, out.prefix + "_" + tag + ".csv");
        if (out.json) write_json(j, out.prefix + ".json");
        if (out.svg) {
            SvgWriter svg(-x_half - 0.3, x_half + 0.3, -1.75, 1.75);
            svg.add_wall_lines(grid.wall_height());
            if (segment)
                svg.add_segment(Complex(0, -*segment), Complex(0, *segment), "#b22222");
            for (std::size_t k = 0; k + 1 < slits.size(); k += 2)
                svg.add_segment(Complex(slits[k], 0), Complex(slits[k + 1], 0), "#b22222");
            for (const auto& [tag, curve] : named) svg.add_curve(*curve, "#1f4e79");
            svg.write(out.prefix + ".svg");
        }
    }
    if (!out.enabled() || !out.json) std::cout << j.dump(2) << '\n';
    return 0;
}

// -------------------------------------------------------------------------
// certification

int run_certify(const std::string& input, const OutputSpec& out) {
    Curve curve = read_curve_csv(input);
    TurningReport report = bounded_turning(curve);
    Json j;
    j["command"] = "certify";
    j["inputs"] = {{"input", input}};
    Json turning = to_json(report);
    for (auto& [key, value] : turning.items()) j[key] = value;
    j["warnings"] = Json::array();
    emit(j, out);
    return 0;
}

// -------------------------------------------------------------------------
// figures

int run_fig1(int max_c, OutputSpec out) {
    if (out.prefix.empty()) out.prefix = "fig1";
    auto psi = identity_map();

    Json j;
    j["command"] = "fig1";
    j["inputs"] = {{"max_c", max_c}};
    j["levels"] = Json::array();

    std::vector<Curve> curves;
    curves.reserve(1 + 2 * max_c);
    std::vector<std::pair<std::string, const Curve*>> named;
    curves.push_back(trace_hyperbolic_level(psi, 0.0, +1));
    named.emplace_back("c0", &curves.back());
    {
        Json entry;
        entry["c"] = 0.0;
        entry["K"] = 1.0;
        j["levels"].push_back(entry);
    }
    for (int c = 1; c <= max_c; ++c) {
        for (int side : {+1, -1}) {
            curves.push_back(trace_hyperbolic_level(psi, c, side));
            named.emplace_back("c" + std::to_string(c) + (side > 0 ? "u" : "d"), &curves.back());
        }
        Json entry;
        entry["c"] = c;
        entry["K"] = level_line_bound(c).K;
        j["levels"].push_back(entry);
    }
    j["warnings"] = Json::array();
    write_curves(named, out, kHalfPi, j);
    if (!out.enabled() || !out.json) std::cout << j.dump(2) << '\n';
    return 0;
}

int run_fig2(OutputSpec out) {
    if (out.prefix.empty()) out.prefix = "fig2";
    auto psi = two_slit_map();

    Json j;
    j["command"] = "fig2";
    j["inputs"] = {{"levels", "k/20 for k = 1..19"}};
    j["levels"] = Json::array();

    std::vector<Curve> curves;
    curves.reserve(19);
    std::vector<std::pair<std::string, const Curve*>> named;
    for (int k = 1; k <= 19; ++k) {
        double b = k / 20.0;
        curves.push_back(trace_harmonic_level(psi, b, -3.5, 3.5, 601));
        named.emplace_back("k" + std::to_string(k), &curves.back());

        Json entry;
        entry["k"] = k;
        entry["b"] = b;
        if (k >= 10) {
            entry["K"] = symmetric_level_bound(b).K;  // tan(k pi / 40)
        } else {
            // reflected level: the tangent bound of 1-b, i.e. cot(k pi / 40)
            entry["K"] = symmetric_level_bound(1.0 - b).K;
            entry["K_alt_coth"] = 1.0 / std::tanh(k * kPi / 40);
            entry["warning"] =
                "hyperbolic-cotangent variant reported alongside the tangent-reflection "
                "bound; the two disagree and only the latter matches the level identity";
        }
        j["levels"].push_back(entry);
    }
    j["warnings"] = Json::array();

    if (out.enabled()) {
        if (out.csv)
            for (const auto& [tag, curve] : named)
                write_curve_csv(*curve, out.prefix + "_" + tag + ".csv");
        if (out.json) write_json(j, out.prefix + ".json");
        if (out.svg) {
            SvgWriter svg(-6.0, 6.0, -4.5, 4.5);
            svg.add_segment(Complex(0, 0.5), Complex(0, 4.5), "#b22222");
            svg.add_segment(Complex(0, -0.5), Complex(0, -4.5), "#b22222");
            for (const auto& [tag, curve] : named) svg.add_curve(*curve, "#1f4e79");
            svg.write(out.prefix + ".svg");
        }
    } else {
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

int run_fig3(double h, double x_half, OutputSpec out) {
    if (out.prefix.empty()) out.prefix = "fig3";
    return run_obstacle(1.0, {}, h, x_half, 1e-9, {}, false, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"level lines, streamlines, and their distortion bounds"};
    app.require_subcommand(1);

    struct Common {
        std::string output, formats;
    };
    auto add_common = [](CLI::App* cmd, Common& c) {
        cmd->add_option("--output", c.output, "output path prefix");
        cmd->add_option("--formats", c.formats, "subset of csv,json,svg (default all)");
    };

    auto* bounds = app.add_subcommand("bounds", "evaluate a distortion bound");
    std::string theorem;
    bounds->add_option("--theorem", theorem, "level | harmonic | symmetric | channel")
        ->required();
    std::optional<double> c_opt, a_opt, b_opt, y0_opt;
    bool symmetric_flag = false;
    bounds->add_option("--c", c_opt, "hyperbolic level distance");
    bounds->add_option("--a", a_opt, "lower harmonic level");
    bounds->add_option("--b", b_opt, "upper harmonic level");
    bounds->add_option("--y0", y0_opt, "streamline strip height");
    bounds->add_flag("--symmetric", symmetric_flag, "channel symmetric across R");
    Common bounds_common;
    add_common(bounds, bounds_common);

    auto* level = app.add_subcommand("level-line", "trace a hyperbolic-distance level line");
    std::string level_map = "identity";
    double level_c = 1.0, level_xmin = -6.0, level_xmax = 6.0;
    int level_side = 1, level_n = 601;
    std::optional<double> level_verify;
    level->add_option("--map", level_map, "identity | disk | two-slit");
    level->add_option("--c", level_c, "level distance (>= 0)")->required();
    level->add_option("--side", level_side, "+1 or -1");
    level->add_option("--xmin", level_xmin);
    level->add_option("--xmax", level_xmax);
    level->add_option("--n", level_n, "sample count");
    level->add_option("--verify", level_verify, "verify level distance at this tolerance");
    Common level_common;
    add_common(level, level_common);

    auto* harm = app.add_subcommand("harmonic-level", "trace a harmonic-measure level line");
    std::string harm_map = "two-slit";
    double harm_b = 0.75, harm_xmin = -6.0, harm_xmax = 6.0;
    int harm_n = 601;
    harm->add_option("--map", harm_map, "identity | disk | two-slit");
    harm->add_option("--b", harm_b, "level in (0,1)")->required();
    harm->add_option("--xmin", harm_xmin);
    harm->add_option("--xmax", harm_xmax);
    harm->add_option("--n", harm_n, "sample count");
    Common harm_common;
    add_common(harm, harm_common);

    auto* stream = app.add_subcommand("streamlines", "trace channel streamlines");
    std::string stream_map = "two-slit";
    std::vector<double> stream_levels;
    double stream_xmin = -6.0, stream_xmax = 6.0;
    int stream_n = 601;
    stream->add_option("--map", stream_map, "identity | two-slit");
    stream->add_option("--y0", stream_levels, "strip heights (repeatable)");
    stream->add_option("--xmin", stream_xmin);
    stream->add_option("--xmax", stream_xmax);
    stream->add_option("--n", stream_n, "sample count");
    Common stream_common;
    add_common(stream, stream_common);

    auto* obs = app.add_subcommand("obstacle", "flow around an obstacle in the strip");
    std::optional<double> obs_segment;
    std::vector<double> obs_slits, obs_levels;
    double obs_h = kPi / 200, obs_xhalf = 6.0, obs_tol = 1e-9;
    bool obs_dump = false;
    obs->add_option("--segment", obs_segment, "vertical segment half-height");
    obs->add_option("--slits", obs_slits, "real slit endpoints x0 x1 [x0 x1 ...]");
    obs->add_option("--spacing", obs_h, "lattice spacing");
    obs->add_option("--xhalf", obs_xhalf, "truncation half-width");
    obs->add_option("--tol", obs_tol, "solver residual tolerance");
    obs->add_option("--levels", obs_levels, "stream levels (default +-k pi/20)");
    obs->add_flag("--dump-field", obs_dump, "also write the field matrix CSV");
    Common obs_common;
    add_common(obs, obs_common);

    auto* cert = app.add_subcommand("certify", "bounded-turning constant of a curve CSV");
    std::string cert_input;
    cert->add_option("--input", cert_input, "curve CSV path")->required();
    Common cert_common;
    add_common(cert, cert_common);

    auto* fig1 = app.add_subcommand("fig1", "integer level lines of the strip");
    int fig1_max_c = 5;
    fig1->add_option("--max-c", fig1_max_c, "largest integer level");
    Common fig1_common;
    add_common(fig1, fig1_common);

    auto* fig2 = app.add_subcommand("fig2", "two-slit harmonic level lines, k/20 levels");
    Common fig2_common;
    add_common(fig2, fig2_common);

    auto* fig3 = app.add_subcommand("fig3", "flow lines around the vertical segment");
    double fig3_h = kPi / 200, fig3_xhalf = 6.0;
    fig3->add_option("--spacing", fig3_h, "lattice spacing");
    fig3->add_option("--xhalf", fig3_xhalf, "truncation half-width");
    Common fig3_common;
    add_common(fig3, fig3_common);

    try {
        app.parse(argc, argv);

        auto out_of = [](const Common& c) {
            OutputSpec out;
            out.prefix = c.output;
            parse_formats(c.formats, out);
            return out;
        };

        if (bounds->parsed())
            return run_bounds(theorem, c_opt, a_opt, b_opt, y0_opt, symmetric_flag,
                              out_of(bounds_common));
        if (level->parsed())
            return run_level_line(level_map, level_c, level_side, level_xmin, level_xmax,
                                  level_n, level_verify, out_of(level_common));
        if (harm->parsed())
            return run_harmonic_level(harm_map, harm_b, harm_xmin, harm_xmax, harm_n,
                                      out_of(harm_common));
        if (stream->parsed())
            return run_streamlines(stream_map, stream_levels, stream_xmin, stream_xmax,
                                   stream_n, out_of(stream_common));
        if (obs->parsed())
            return run_obstacle(obs_segment, obs_slits, obs_h, obs_xhalf, obs_tol, obs_levels,
                                obs_dump, out_of(obs_common));
        if (cert->parsed()) return run_certify(cert_input, out_of(cert_common));
        if (fig1->parsed()) return run_fig1(fig1_max_c, out_of(fig1_common));
        if (fig2->parsed()) return run_fig2(out_of(fig2_common));
        if (fig3->parsed()) return run_fig3(fig3_h, fig3_xhalf, out_of(fig3_common));
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << " (residual " << e.residual() << ")\n";
        return 3;
    } catch (const ExtractionError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    }
}
