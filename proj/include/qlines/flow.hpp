#pragma once

#include "qlines/conformal.hpp"
#include "qlines/strip_geometry.hpp"
#include "qlines/types.hpp"

namespace qlines {

/// A channel: conformal image of the strip whose ends escape to infinity.
struct Channel {
    AnalyticMap phi;         // strip -> channel, phi(x+iy) -> +-inf as x -> +-inf
    bool symmetric = false;  // channel symmetric across R with phi(R) = R
};

/// Builds a channel after checking the escape behaviour (|phi| increasing at
/// |x| in {6, 9, 12}) and, when claimed, the symmetry |Im phi(x)| <= 1e-9 on
/// sampled real x.  ConfigError when a check fails.
Channel make_channel(AnalyticMap phi, bool symmetric);

/// A sampled streamline with its normalized level and distortion bound.
struct Streamline {
    Curve curve;
    double y0 = 0.0;       // strip height in (-pi/2, pi/2)
    double h_value = 0.0;  // flow normalization h = 2 y0 / pi in (-1, 1)
    BoundReport bound;
};

/// K = exp(hyperbolic distance between the central streamline and the one at
/// height y0); conformally invariant, so independent of phi.  For symmetric
/// channels the report is additionally tagged as a quasiline bound.
BoundReport channel_bound(const Channel& channel, double y0);

/// phi(R + i y0) sampled over [x_min, x_max] with the bound attached.
Streamline streamline(const Channel& channel, double y0, double x_min = -6.0, double x_max = 6.0,
                      int n = 601);

}  // namespace qlines
