#pragma once

// Independent numerical oracles used by the tests.  Nothing here may call
// into the closed-form implementation paths being checked: distances come
// from adaptive quadrature of the strip density, inverses from bisection on
// the quadrature, disk distances from direct geodesic minimization, and
// turning constants from a plain cubic-time scan.

#include <complex>

#include "qlines/types.hpp"

namespace oracles {

/// Adaptive Gauss-Kronrod quadrature of the strip density: rho = int_a^b sec(y) dy.
double strip_distance_quadrature(double height_a, double height_b);

/// Height t solving int_0^t sec = c, by bisection on the quadrature.
double height_for_distance_bisection(double c);

/// Hyperbolic distance (curvature -1) from w to the diameter (-1,1) of the
/// unit disk, by golden-section minimization of the point distance along it.
double disk_distance_to_diameter(std::complex<double> w);

/// Bounded-turning constant by brute force over all pairs and all interior
/// points; cubic time, no incremental state.
double turning_constant_brute(const qlines::Curve& curve);

}  // namespace oracles
