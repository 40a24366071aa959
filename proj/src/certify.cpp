#include "qlines/certify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qlines {

namespace {

constexpr double kCoincidentTol = 1e-14;

}  // namespace

TurningReport bounded_turning(const Curve& curve) {
    if (curve.points.size() < 3)
        throw std::invalid_argument("bounded_turning: need at least 3 points");
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        if (curve.points[i] == curve.points[i - 1])
            throw std::invalid_argument("bounded_turning: consecutive points coincide");

    // uniform subsample above the cap, keeping both endpoints
    std::vector<Complex> pts;
    const std::size_t n = curve.points.size();
    if (n <= kTurningSampleCap) {
        pts = curve.points;
    } else {
        pts.reserve(kTurningSampleCap);
        for (std::size_t k = 0; k < kTurningSampleCap; ++k)
            pts.push_back(curve.points[k * (n - 1) / (kTurningSampleCap - 1)]);
    }

    TurningReport report;
    report.sample_size = pts.size();
    report.window_min = curve.params.front();
    report.window_max = curve.params.back();

    std::vector<double> px(pts.size()), py(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        px[k] = pts[k].real();
        py[k] = pts[k].imag();
    }

    double best = 1.0;
    std::size_t bi = 0, bj = pts.size() > 1 ? 1 : 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double diam2 = 0.0;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            // grow the subarc by one point; its diameter can only move up via
            // distances from the new point to the earlier ones
            const double xj = px[j], yj = py[j];
            for (std::size_t k = i; k < j; ++k) {
                double dx = px[k] - xj, dy = py[k] - yj;
                double d2 = dx * dx + dy * dy;
                if (d2 > diam2) diam2 = d2;
            }
            double cx = px[i] - xj, cy = py[i] - yj;
            double chord2 = cx * cx + cy * cy;
            if (chord2 < kCoincidentTol * kCoincidentTol) {
                ++report.n_skipped;
                continue;
            }
            ++report.n_pairs;
            double ratio2 = diam2 / chord2;
            if (ratio2 > best) {
                best = ratio2;
                bi = i;
                bj = j;
            }
        }
    }
    report.C = std::sqrt(best);
    report.witness_first = bi;
    report.witness_second = bj;
    return report;
}

TurningReport certify_against_bound(const Curve& curve, const BoundReport& bound) {
    TurningReport report = bounded_turning(curve);
    report.bound = bound;
    return report;
}

}  // namespace qlines
