#include <doctest.h>

#include <cmath>

#include "qlines/conformal.hpp"

using namespace qlines;

namespace {
// interior lattice used for the AnalyticMap contract checks
const Complex kLatticeLo(-3.0, -1.4);
const Complex kLatticeHi(3.0, 1.4);
}  // namespace

TEST_CASE("strip_to_disk: values, boundary limit, inverse domain") {
    auto f = strip_to_disk();
    CHECK(std::abs(f(Complex(0, 0))) == 0.0);
    CHECK(f(Complex(1, 0)).real() == doctest::Approx(0.46211715726000974).epsilon(1e-15));
    CHECK(f(Complex(1, 0)).imag() == 0.0);

    // boundary to boundary: |w| -> 1 as z approaches the wall
    CHECK(std::abs(f(Complex(0.3, kHalfPi - 1e-9))) == doctest::Approx(1.0).epsilon(1e-8));

    CHECK_THROWS_AS(f.inverse(Complex(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(f.inverse(Complex(0.8, 0.7)), std::domain_error);

    auto checks = check_map_on_lattice(f, kLatticeLo, kLatticeHi, 20, 20);
    CHECK(checks.pass());
}

TEST_CASE("two_slit_map: boundary images and inverse branch") {
    auto f = two_slit_map();
    CHECK(std::abs(f(Complex(0, 0))) == 0.0);

    // the walls land on the slits: sinh(x + i pi/2)/2 = (i/2) cosh x
    for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
        Complex w = f(Complex(x, kHalfPi));
        CHECK(std::fabs(w.real()) < 1e-12);
        CHECK(w.imag() == doctest::Approx(std::cosh(x) / 2).epsilon(1e-14));
        Complex lower = f(Complex(x, -kHalfPi));
        CHECK(lower.imag() == doctest::Approx(-std::cosh(x) / 2).epsilon(1e-14));
    }
    // the real line stays real
    for (double x : {-4.0, -1.0, 0.5, 2.0}) CHECK(f(Complex(x, 0)).imag() == 0.0);

    CHECK_THROWS_AS(f.inverse(Complex(0.0, 0.75)), std::domain_error);  // on the upper slit
    CHECK_THROWS_AS(f.inverse(Complex(0.0, -0.5)), std::domain_error);  // slit endpoint

    auto checks = check_map_on_lattice(f, kLatticeLo, kLatticeHi, 20, 20);
    CHECK(checks.pass());
}

TEST_CASE("two_slit_map level lines trace hyperbola branches") {
    auto f = two_slit_map();
    for (double y0 : {kPi / 4, -kPi / 4, kPi / 3, -kPi / 3}) {
        double s = std::sin(y0), c = std::cos(y0);
        for (int k = 0; k <= 60; ++k) {
            double x = -3.0 + 6.0 * k / 60.0;
            Complex w = f(Complex(x, y0));
            double lhs = 2 * w.imag() / s, rhs = 2 * w.real() / c;
            CHECK(std::fabs(lhs * lhs - rhs * rhs - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("compose: identity, inverse pair, disk to two-slit plane") {
    auto f = two_slit_map();
    auto composed_with_id = compose(f, identity_map());
    for (double x : {-2.0, 0.3, 1.7})
        for (double y : {-1.0, 0.0, 0.9})
            CHECK(std::abs(composed_with_id(Complex(x, y)) - f(Complex(x, y))) == 0.0);

    auto disk = strip_to_disk();
    auto round = compose(inverted(disk), disk);  // strip -> strip
    auto checks = check_map_on_lattice(round, kLatticeLo, kLatticeHi, 20, 20);
    CHECK(checks.max_roundtrip_error <= 1e-9);
    for (double x : {-2.0, 0.0, 2.5})
        CHECK(std::abs(round(Complex(x, 0.5)) - Complex(x, 0.5)) < 1e-9);

    auto disk_to_slits = compose(two_slit_map(), inverted(strip_to_disk()));
    auto r2 = check_map_on_lattice(disk_to_slits, Complex(-0.8, -0.8), Complex(0.8, 0.8), 20, 20);
    CHECK(r2.max_roundtrip_error <= 1e-8);

    CHECK_THROWS_AS(compose(two_slit_map(), strip_to_disk()), ConfigError);
}

TEST_CASE("composition is associative pointwise") {
    auto a = strip_to_disk();
    auto b = inverted(a);
    auto c = two_slit_map();
    auto left = compose(compose(c, b), a);
    auto right = compose(c, compose(b, a));
    for (double x : {-2.0, -0.4, 1.1, 2.8})
        for (double y : {-1.2, 0.0, 0.7}) {
            Complex z(x, y);
            CHECK(std::abs(left(z) - right(z)) < 1e-12);
        }
}

TEST_CASE("newton_invert: identity, closed-form cross-check, branch safety") {
    auto id = identity_map();
    CHECK(std::abs(newton_invert(id, Complex(0.3, 0.2), Complex(0, 0)) - Complex(0.3, 0.2)) ==
          0.0);

    auto disk = strip_to_disk();
    Complex z = newton_invert(disk, Complex(std::tanh(0.5), 0.0), Complex(0.2, 0.1));
    CHECK(std::abs(z - Complex(1.0, 0.0)) < 1e-9);

    // distant seeds on sinh(z)/2 either land on the right branch or throw;
    // membership keeps every iterate inside the strip
    auto slits = two_slit_map();
    Complex target = slits(Complex(2.0, 0.7));
    for (Complex seed : {Complex(-5.0, -1.5), Complex(5.0, 1.5), Complex(0.0, 1.56)}) {
        try {
            Complex back = newton_invert(slits, target, seed);
            CHECK(slits.source().contains(back));
            CHECK(std::abs(slits(back) - target) <= 1e-10);
        } catch (const NumericError& e) {
            CHECK(e.residual() > 0.0);
        }
    }

    CHECK_THROWS_AS(newton_invert(disk, Complex(0.5, 0.0), Complex(0.0, 2.0)), std::domain_error);
}

TEST_CASE("reflect_across_line: identity, entire map symmetric in the line") {
    auto id_ext = reflect_across_line(identity_map(DomainDescriptor::strip()), kHalfPi);
    for (double x : {-2.0, 0.0, 1.5})
        for (double s : {0.1, 0.5, 1.2}) {
            Complex above(x, kHalfPi + s);
            CHECK(std::abs(id_ext(above) - above) == 0.0);
            Complex below(x, kHalfPi - s);
            CHECK(std::abs(id_ext(below) - below) == 0.0);
        }

    // f(z) = z + 0.1 sin(z - i pi/2) commutes with the reflection, so the
    // extension must reproduce the direct evaluation above the line
    auto upper = DomainDescriptor::user_channel(
        "upper-band", [](Complex z) { return z.imag() > 0.0 && z.imag() < kHalfPi + 1e-9; });
    auto f = AnalyticMap([](Complex z) { return z + 0.1 * std::sin(z - Complex(0, kHalfPi)); },
                         [](Complex z) { return 1.0 + 0.1 * std::cos(z - Complex(0, kHalfPi)); },
                         [](Complex w) { return w; },  // inverse unused here
                         upper, upper);
    auto ext = reflect_across_line(f, kHalfPi);
    for (double x : {-1.5, 0.2, 2.0})
        for (double s : {0.05, 0.4, 1.0}) {
            Complex z(x, kHalfPi + s);
            Complex direct = z + 0.1 * std::sin(z - Complex(0, kHalfPi));
            CHECK(std::abs(ext(z) - direct) < 1e-12);
            CHECK(std::abs(ext.derivative(z) - (1.0 + 0.1 * std::cos(z - Complex(0, kHalfPi)))) <
                  1e-12);
        }
    // continuity across the line
    for (double x : {-1.0, 0.0, 1.0})
        CHECK(std::abs(ext(Complex(x, kHalfPi + 1e-9)) - ext(Complex(x, kHalfPi - 1e-9))) < 1e-7);

    // a map moving the line up is rejected
    auto bad = AnalyticMap([](Complex z) { return z + Complex(0, 0.1); },
                           [](Complex) { return Complex(1, 0); },
                           [](Complex w) { return w - Complex(0, 0.1); },
                           DomainDescriptor::strip(), DomainDescriptor::strip());
    CHECK_THROWS_AS(reflect_across_line(bad, 0.0), ConfigError);
}

TEST_CASE("every canonical map satisfies the contract on the interior lattice") {
    for (const AnalyticMap& m : {identity_map(), strip_to_disk(), two_slit_map()}) {
        auto checks = check_map_on_lattice(m, kLatticeLo, kLatticeHi, 20, 20);
        CHECK(checks.max_roundtrip_error <= 1e-9);
        CHECK(checks.max_cr_residual_rel <= 1e-6);
        CHECK(checks.max_derivative_error_rel <= 1e-6);
    }
}
