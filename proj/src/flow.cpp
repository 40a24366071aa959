#include "qlines/flow.hpp"

#include <cmath>

namespace qlines {

Channel make_channel(AnalyticMap phi, bool symmetric) {
    // escape: moduli must grow through the checkpoints on both ends.  The
    // relative margin rejects bounded maps (e.g. onto the disk) whose moduli
    // still creep up monotonically.
    for (int sign : {-1, 1}) {
        for (double y : {0.0, -1.0, 1.0}) {
            double prev = 0.0;
            for (double X : {6.0, 9.0, 12.0}) {
                double m = std::abs(phi(Complex(sign * X, y)));
                if (m <= prev * (1.0 + 1e-3))
                    throw ConfigError("make_channel: |phi| not escaping at x = " +
                                      std::to_string(sign * X) + ", y = " + std::to_string(y));
                prev = m;
            }
        }
    }
    if (symmetric) {
        for (int i = 0; i <= 24; ++i) {
            double x = -6.0 + 0.5 * i;
            double dev = std::fabs(phi(Complex(x, 0.0)).imag());
            if (dev > 1e-9)
                throw ConfigError("make_channel: claimed symmetric but |Im phi(" +
                                  std::to_string(x) + ")| = " + std::to_string(dev));
        }
    }
    return Channel{std::move(phi), symmetric};
}

BoundReport channel_bound(const Channel& channel, double y0) {
    if (!std::isfinite(y0) || std::fabs(y0) >= kHalfPi)
        throw std::domain_error("channel_bound: |y0| must be < pi/2");
    BoundReport r;
    r.K = std::exp(distance_for_offset(y0));
    r.theorem = Theorem::Channel;
    r.inputs["y0"] = y0;
    r.inputs["h_value"] = 2.0 * y0 / kPi;
    r.inputs["symmetric"] = channel.symmetric ? 1.0 : 0.0;
    // for symmetric channels the central streamline is R, so the conclusion
    // upgrades from a relative distortion bound to an absolute quasiline claim
    r.quasiline = channel.symmetric;
    return r;
}

Streamline streamline(const Channel& channel, double y0, double x_min, double x_max, int n) {
    if (!std::isfinite(y0) || std::fabs(y0) >= kHalfPi)
        throw std::domain_error("streamline: |y0| must be < pi/2 (wall or outside)");
    if (n < 2) throw std::domain_error("streamline: need at least 2 samples");
    Streamline s;
    s.y0 = y0;
    s.h_value = 2.0 * y0 / kPi;
    s.bound = channel_bound(channel, y0);
    s.curve.points.reserve(n);
    s.curve.params.reserve(n);
    for (int i = 0; i < n; ++i) {
        double x = x_min + (x_max - x_min) * i / (n - 1);
        s.curve.points.push_back(channel.phi(Complex(x, y0)));
        s.curve.params.push_back(x);
    }
    s.curve.meta.kind = "streamline";
    s.curve.meta.domain = channel.phi.target().name;
    s.curve.meta.level = y0;
    s.curve.meta.window_min = x_min;
    s.curve.meta.window_max = x_max;
    s.curve.validate();
    return s;
}

}  // namespace qlines
