#pragma once

#include <span>
#include <string>

#include "qlines/conformal.hpp"
#include "qlines/strip_geometry.hpp"
#include "qlines/types.hpp"

namespace qlines {

/// Translation flow in strip coordinates transported by psi: the point
/// psi(x) moves to psi(x + lambda).  Defined on the curve psi(R) and along
/// anything psi reaches, as long as the translated preimage stays in the strip.
struct StripMotion {
    AnalyticMap psi;  // strip -> Omega, psi(R) = gamma
};

/// psi(psi^-1(a) + lambda).  Domain error when the translated preimage
/// leaves the strip.
Complex motion_point(const StripMotion& motion, Complex lambda, Complex a);

/// Samples psi(x + i * side * gd(c)) over [x_min, x_max]: the image of the
/// c-level line of the hyperbolic distance from psi(R), on the chosen side.
Curve trace_hyperbolic_level(const AnalyticMap& psi, double c, int side, double x_min = -6.0,
                             double x_max = 6.0, int n = 601);

/// Samples psi(x + i pi (2b - 1) / 2): the image of the harmonic-measure
/// level line {h = b}, where h is 0 on the lower wall image and 1 on the upper.
Curve trace_harmonic_level(const AnalyticMap& psi, double b, double x_min = -6.0,
                           double x_max = 6.0, int n = 601);

struct LevelDistanceReport {
    double max_error = 0.0;
    std::size_t worst_index = 0;
    double tol = 0.0;
    bool pass = false;
};

/// For each curve point z, recovers the strip height of psi^-1(z) and
/// compares distance_for_offset(height) against the claimed level c.
LevelDistanceReport verify_level_distance(const AnalyticMap& psi, const Curve& curve, double c,
                                          double tol);

/// Spherical (chordal) distance on the Riemann sphere; non-finite values are
/// treated as the point at infinity.
double chordal_distance(Complex z, Complex w);

struct AxiomCheck {
    bool pass = false;
    double worst = 0.0;  // meaning depends on the axiom (see field comments below)
    std::size_t witness_lambda = 0;
    std::size_t witness_point = 0;
    std::size_t witness_point2 = 0;  // second index of an injectivity witness pair
    std::string note;
};

struct MotionAxiomReport {
    AxiomCheck identity_at_base;  // worst = max |Phi(0,a) - a|
    AxiomCheck injectivity;       // worst = min pairwise image gap (pass iff > 0)
    AxiomCheck holomorphy;        // worst = max relative Cauchy-Riemann residual in lambda
    AxiomCheck endpoint_fixing;   // worst = max chordal distance to the endpoint at the cutoff
    bool all_pass() const {
        return identity_at_base.pass && injectivity.pass && holomorphy.pass &&
               endpoint_fixing.pass;
    }
};

/// Checks the holomorphic-motion axioms on the given samples:
/// identity at lambda = 0 (tol 1e-10), injectivity per lambda (positive
/// minimum gap), holomorphy in lambda (relative CR residual <= 1e-5), and
/// endpoint fixing as a limit at the cutoff |x| = 12 (chordal tol 1e-3, or a
/// strictly decreasing approach over |x| in {6, 9, 12} for slowly escaping maps).
MotionAxiomReport verify_motion_axioms(const StripMotion& motion,
                                       std::span<const Complex> lambda_samples,
                                       std::span<const Complex> point_samples);

}  // namespace qlines
