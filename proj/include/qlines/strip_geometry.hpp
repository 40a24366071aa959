#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qlines/types.hpp"

namespace qlines {

// Hyperbolic geometry of the strip S = { |Im z| < pi/2 } with the density
// |dz| / cos(y), curvature -1.  All distortion bounds of the level-line
// machinery are closed-form expressions in this metric.

/// Heights closer than this to the strip boundary are treated as outside;
/// beyond it exp(distance) overflows silently downstream.
constexpr double kHeightGuard = 1e-12;

/// Which statement a distortion bound comes from.
enum class Theorem {
    LevelLine,       // K <= e^c for the c-level line of a hyperbolic line
    HarmonicLevel,   // K <= tan(b pi/2) / tan(a pi/2) between harmonic levels
    SymmetricLevel,  // K <= tan(b pi/2), symmetric domain, b >= 1/2
    Channel,         // K <= exp(d_hyp(alpha_0, alpha)) for channel streamlines
    Obstacle,        // K <= exp(d_hyp(alpha, wall)) in the doubled obstructed channel
};

std::string_view to_string(Theorem t);

/// A named distortion bound with the parameters that produced it.
struct BoundReport {
    double K = 1.0;  // always >= 1; == 1 exactly on identity cases
    Theorem theorem = Theorem::LevelLine;
    std::map<std::string, double> inputs;
    bool quasiline = false;       // the conclusion is an absolute quasiline claim
    bool upper_estimate = false;  // inscribed-domain estimate, not the exact distance
    std::vector<std::string> warnings;
};

/// A hyperbolic distance from the real line paired with the Euclidean height
/// of the corresponding level line.  Signs mirror each other: the lower half
/// of the strip carries the negative pairing.
struct LevelOffset {
    double distance = 0.0;  // signed; |distance| is the hyperbolic distance
    double height = 0.0;    // signed Euclidean height, |height| < pi/2

    static LevelOffset from_distance(double c);
    static LevelOffset from_height(double t);
};

/// Height of the c-level line of R in S: t = gd(c), the Gudermannian.
/// Domain error for negative or non-finite c.
double offset_for_distance(double c);

/// Hyperbolic distance between R and R + it: log((1+tan(|t|/2))/(1-tan(|t|/2))).
/// Domain error for |t| >= pi/2 - kHeightGuard.
double distance_for_offset(double t);

/// Signed antiderivative of sec: odd in t, equals distance_for_offset for t >= 0.
double signed_distance_for_offset(double t);

/// Hyperbolic distance between two points of S, via the disk model
/// w = tanh(z/2).  Domain error if either point is on or outside the boundary.
double strip_distance(Complex z1, Complex z2);

/// K <= e^c for the c-level line of a hyperbolic line (relative motion bound).
BoundReport level_line_bound(double c);

/// K <= tan(b pi/2) / tan(a pi/2) between the harmonic-measure levels a <= b.
/// The b < 1/2 symmetric case is the caller's reduction (a,b) -> (1-b, 1-a).
BoundReport harmonic_level_bound(double a, double b);

/// K <= tan(b pi/2) for the level b >= 1/2 of a domain symmetric across R;
/// this is an absolute quasiline bound.
BoundReport symmetric_level_bound(double b);

}  // namespace qlines
