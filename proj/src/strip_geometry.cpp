#include "qlines/strip_geometry.hpp"

#include <cmath>

namespace qlines {

namespace {

void require_finite_nonneg(double c, const char* who) {
    if (!std::isfinite(c) || c < 0.0)
        throw std::domain_error(std::string(who) + ": argument must be finite and >= 0");
}

void require_interior_height(double t, const char* who) {
    if (!std::isfinite(t) || std::fabs(t) >= kHalfPi - kHeightGuard)
        throw std::domain_error(std::string(who) + ": height is on or outside the strip boundary");
}

}  // namespace

std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::LevelLine: return "LevelLine";
        case Theorem::HarmonicLevel: return "HarmonicLevel";
        case Theorem::SymmetricLevel: return "SymmetricLevel";
        case Theorem::Channel: return "Channel";
        case Theorem::Obstacle: return "Obstacle";
    }
    return "?";
}

double offset_for_distance(double c) {
    require_finite_nonneg(c, "offset_for_distance");
    // gd(c) = atan(sinh c).  Bounded by pi/2 for all finite c.
    return std::atan(std::sinh(c));
}

double distance_for_offset(double t) {
    require_interior_height(t, "distance_for_offset");
    // asinh(tan t) is the antiderivative of sec evaluated from 0; it avoids the
    // cancellation of the textbook log((1+tan(t/2))/(1-tan(t/2))) form near the wall.
    return std::asinh(std::tan(std::fabs(t)));
}

double signed_distance_for_offset(double t) {
    require_interior_height(t, "signed_distance_for_offset");
    return std::asinh(std::tan(t));
}

LevelOffset LevelOffset::from_distance(double c) {
    if (!std::isfinite(c)) throw std::domain_error("LevelOffset: non-finite distance");
    double t = offset_for_distance(std::fabs(c));
    return {c, std::copysign(t, c)};
}

LevelOffset LevelOffset::from_height(double t) {
    double rho = distance_for_offset(t);
    return {std::copysign(rho, t), t};
}

double strip_distance(Complex z1, Complex z2) {
    require_interior_height(z1.imag(), "strip_distance");
    require_interior_height(z2.imag(), "strip_distance");
    Complex w1 = std::tanh(z1 / 2.0);
    Complex w2 = std::tanh(z2 / 2.0);
    double tau = std::abs((w1 - w2) / (1.0 - std::conj(w1) * w2));
    if (tau >= 1.0)
        throw std::domain_error("strip_distance: points too close to the boundary");
    // curvature -1 disk distance, log1p-form for small separations
    return std::log1p(2.0 * tau / (1.0 - tau));
}

BoundReport level_line_bound(double c) {
    require_finite_nonneg(c, "level_line_bound");
    BoundReport r;
    r.K = std::exp(c);
    r.theorem = Theorem::LevelLine;
    r.inputs["c"] = c;
    return r;
}

BoundReport harmonic_level_bound(double a, double b) {
    if (!(a > 0.0 && b < 1.0 && a <= b))
        throw std::domain_error("harmonic_level_bound: require 0 < a <= b < 1");
    BoundReport r;
    r.K = std::tan(b * kHalfPi) / std::tan(a * kHalfPi);
    r.theorem = Theorem::HarmonicLevel;
    r.inputs["a"] = a;
    r.inputs["b"] = b;
    return r;
}

BoundReport symmetric_level_bound(double b) {
    if (!(b >= 0.5 && b < 1.0))
        throw std::domain_error("symmetric_level_bound: require 1/2 <= b < 1");
    BoundReport r;
    // tan(pi/4) lands one ulp under 1; the identity level must give exactly 1
    r.K = b == 0.5 ? 1.0 : std::tan(b * kHalfPi);
    r.theorem = Theorem::SymmetricLevel;
    r.inputs["b"] = b;
    r.quasiline = true;
    return r;
}

}  // namespace qlines
