#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qlines/certify.hpp"
#include "qlines/obstacle.hpp"
#include "qlines/strip_geometry.hpp"
#include "qlines/types.hpp"

namespace qlines {

using Json = nlohmann::ordered_json;

/// Header `x,y,param`, one point per line, 17 significant decimal digits.
void write_curve_csv(const Curve& curve, const std::filesystem::path& path);
Curve read_curve_csv(const std::filesystem::path& path);

/// Matrix dump of a lattice field, one row per lattice row (top wall first).
void write_field_csv(const ScalarField& field, const std::filesystem::path& path);

Json to_json(const BoundReport& report);
Json to_json(const TurningReport& report);

void write_json(const Json& j, const std::filesystem::path& path);

/// Minimal polyline SVG with a fixed viewBox in problem coordinates
/// (y up); output depends only on the added primitives.
class SvgWriter {
public:
    SvgWriter(double x_min, double x_max, double y_min, double y_max, double pixels_per_unit = 80.0);

    void add_curve(const Curve& curve, const std::string& stroke);
    void add_segment(Complex a, Complex b, const std::string& stroke, bool dashed = false);
    void add_wall_lines(double height);  // dashed horizontal lines at +-height

    void write(const std::filesystem::path& path) const;

private:
    double px(double x) const;
    double py(double y) const;

    double x_min_, x_max_, y_min_, y_max_, scale_;
    std::string body_;
};

}  // namespace qlines
