#include "qlines/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qlines {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-identical across platforms
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

}  // namespace

void write_curve_csv(const Curve& curve, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "x,y,param\n";
    for (std::size_t i = 0; i < curve.points.size(); ++i)
        out << fmt17(curve.points[i].real()) << ',' << fmt17(curve.points[i].imag()) << ','
            << fmt17(curve.params[i]) << '\n';
}

Curve read_curve_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,y,param", 0) != 0)
        throw std::runtime_error("bad curve CSV header in " + path.string());
    Curve curve;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        double x, y, p;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &p) != 3)
            throw std::runtime_error("bad curve CSV line " + std::to_string(lineno) + " in " +
                                     path.string());
        curve.points.emplace_back(x, y);
        curve.params.push_back(p);
    }
    curve.meta.kind = "csv";
    if (!curve.params.empty()) {
        curve.meta.window_min = curve.params.front();
        curve.meta.window_max = curve.params.back();
    }
    curve.validate();
    return curve;
}

void write_field_csv(const ScalarField& field, const std::filesystem::path& path) {
    auto out = open_out(path);
    for (int j = field.spec.rows() - 1; j >= 0; --j) {
        for (int i = 0; i < field.spec.cols(); ++i) {
            if (i) out << ',';
            out << fmt17(field.at(i, j));
        }
        out << '\n';
    }
}

Json to_json(const BoundReport& report) {
    Json j;
    j["K"] = report.K;
    j["theorem"] = std::string(to_string(report.theorem));
    j["inputs"] = Json::object();
    for (const auto& [key, value] : report.inputs) j["inputs"][key] = value;
    j["quasiline"] = report.quasiline;
    j["upper_estimate"] = report.upper_estimate;
    j["warnings"] = report.warnings;
    return j;
}

Json to_json(const TurningReport& report) {
    Json j;
    j["C"] = report.C;
    j["witness"] = {report.witness_first, report.witness_second};
    j["n_pairs"] = report.n_pairs;
    j["n_skipped"] = report.n_skipped;
    j["sample_size"] = report.sample_size;
    j["window"] = {report.window_min, report.window_max};
    if (report.bound) j["bound"] = to_json(*report.bound);
    return j;
}

void write_json(const Json& j, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

SvgWriter::SvgWriter(double x_min, double x_max, double y_min, double y_max,
                     double pixels_per_unit)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max), scale_(pixels_per_unit) {}

double SvgWriter::px(double x) const { return (x - x_min_) * scale_; }
double SvgWriter::py(double y) const { return (y_max_ - y) * scale_; }

void SvgWriter::add_curve(const Curve& curve, const std::string& stroke) {
    std::ostringstream s;
    s << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\" points=\"";
    char buf[64];
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s%.3f,%.3f", i ? " " : "", px(curve.points[i].real()),
                      py(curve.points[i].imag()));
        s << buf;
    }
    s << "\"/>\n";
    body_ += s.str();
}

void SvgWriter::add_segment(Complex a, Complex b, const std::string& stroke, bool dashed) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"%s\" "
                  "stroke-width=\"1.5\"%s/>\n",
                  px(a.real()), py(a.imag()), px(b.real()), py(b.imag()), stroke.c_str(),
                  dashed ? " stroke-dasharray=\"6,4\"" : "");
    body_ += buf;
}

void SvgWriter::add_wall_lines(double height) {
    add_segment(Complex(x_min_, height), Complex(x_max_, height), "#888", true);
    add_segment(Complex(x_min_, -height), Complex(x_max_, -height), "#888", true);
}

void SvgWriter::write(const std::filesystem::path& path) const {
    auto out = open_out(path);
    double w = (x_max_ - x_min_) * scale_;
    double h = (y_max_ - y_min_) * scale_;
    char head[256];
    std::snprintf(head, sizeof(head),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 %.3f %.3f\">\n", w, h);
    out << "<!-- qlines figure -->\n" << head << body_ << "</svg>\n";
}

}  // namespace qlines
