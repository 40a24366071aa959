#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <limits>
#include <fstream>
#include <random>
#include <sstream>

#include "qlines/io.hpp"
#include "qlines/motion.hpp"

using namespace qlines;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / "qlines_io_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("curve CSV roundtrips bit-exactly, including awkward doubles") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> mag(-50.0, 50.0);
    std::uniform_real_distribution<double> tiny(-1e-9, 1e-9);
    Curve curve;
    for (int i = 0; i < 200; ++i) {
        curve.points.emplace_back(mag(rng) + tiny(rng), mag(rng) * tiny(rng));
        curve.params.push_back(i + tiny(rng));
    }
    curve.meta.kind = "random";

    auto path = temp_dir() / "roundtrip.csv";
    write_curve_csv(curve, path);
    Curve back = read_curve_csv(path);
    REQUIRE(back.points.size() == curve.points.size());
    for (std::size_t i = 0; i < back.points.size(); ++i) {
        CHECK(back.points[i] == curve.points[i]);  // 17 significant digits roundtrip doubles
        CHECK(back.params[i] == curve.params[i]);
    }

    // header and layout are fixed
    std::string text = slurp(path);
    CHECK(text.rfind("x,y,param\n", 0) == 0);
}

TEST_CASE("Curve::validate catches every structural defect") {
    Curve good;
    good.points = {Complex(0, 0), Complex(1, 0), Complex(2, 1)};
    good.params = {0, 1, 2};
    CHECK_NOTHROW(good.validate());

    Curve short_params = good;
    short_params.params.pop_back();
    CHECK_THROWS_AS(short_params.validate(), std::invalid_argument);

    Curve unsorted = good;
    unsorted.params = {0, 2, 1};
    CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);

    Curve repeated = good;
    repeated.points[1] = repeated.points[0];
    CHECK_THROWS_AS(repeated.validate(), std::invalid_argument);

    Curve infinite = good;
    infinite.points[2] = Complex(std::numeric_limits<double>::infinity(), 0);
    CHECK_THROWS_AS(infinite.validate(), std::invalid_argument);
}

TEST_CASE("curve CSV rejects malformed input") {
    auto dir = temp_dir();
    {
        std::ofstream bad(dir / "bad_header.csv");
        bad << "a,b,c\n1,2,3\n";
    }
    CHECK_THROWS(read_curve_csv(dir / "bad_header.csv"));
    {
        std::ofstream bad(dir / "bad_line.csv");
        bad << "x,y,param\n1,2\n";
    }
    CHECK_THROWS(read_curve_csv(dir / "bad_line.csv"));
    CHECK_THROWS(read_curve_csv(dir / "missing.csv"));
}

TEST_CASE("field CSV dump has one row per lattice row") {
    GridSpec g = GridSpec::channel(1.0, kPi / 10);
    ScalarField f = solve_stream_function(g, 1e-9);
    auto path = temp_dir() / "field.csv";
    write_field_csv(f, path);
    std::string text = slurp(path);
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == static_cast<std::size_t>(g.rows()));
}

TEST_CASE("bound and turning reports serialize with full precision") {
    auto bound = symmetric_level_bound(0.75);
    Json jb = to_json(bound);
    CHECK(jb["theorem"] == "SymmetricLevel");
    CHECK(jb["K"].get<double>() == bound.K);  // bit-exact through JSON
    CHECK(jb["quasiline"].get<bool>());
    CHECK(jb["inputs"]["b"].get<double>() == 0.75);

    Curve hairpin;
    hairpin.points = {Complex(0, 1), Complex(0, 0), Complex(0.1, 0), Complex(0.1, 1)};
    hairpin.params = {0, 1, 2, 3};
    auto turning = certify_against_bound(hairpin, bound);
    Json jt = to_json(turning);
    CHECK(jt["C"].get<double>() == turning.C);
    CHECK(jt["witness"][0].get<std::size_t>() == 0);
    CHECK(jt["witness"][1].get<std::size_t>() == 3);
    CHECK(jt["bound"]["K"].get<double>() == bound.K);
}

TEST_CASE("SVG output is deterministic and carries the expected primitives") {
    Curve line = trace_harmonic_level(identity_map(), 0.75, -2, 2, 21);
    auto render = [&](const fs::path& p) {
        SvgWriter svg(-2.2, 2.2, -1.8, 1.8);
        svg.add_wall_lines(kHalfPi);
        svg.add_curve(line, "#123456");
        svg.write(p);
    };
    auto dir = temp_dir();
    render(dir / "a.svg");
    render(dir / "b.svg");
    std::string a = slurp(dir / "a.svg"), b = slurp(dir / "b.svg");
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("<polyline") != std::string::npos);
    CHECK(a.find("stroke-dasharray") != std::string::npos);  // walls are dashed
    CHECK(a.find("</svg>") != std::string::npos);
}
