#include "oracles.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

namespace oracles {

double strip_distance_quadrature(double height_a, double height_b) {
    // tanh-sinh clusters nodes at the interval ends, which resolves the
    // sec boundary layer however close the end sits to the wall
    static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    auto sec = [](double y) { return 1.0 / std::cos(y); };
    double sign = 1.0;
    if (height_a > height_b) {
        std::swap(height_a, height_b);
        sign = -1.0;
    }
    return sign * integrator.integrate(sec, height_a, height_b, 1e-12);
}

double height_for_distance_bisection(double c) {
    double lo = 0.0, hi = qlines::kHalfPi - 1e-15;
    for (int iter = 0; iter < 90 && hi - lo > 1e-17; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (strip_distance_quadrature(0.0, mid) < c)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double disk_distance_to_diameter(std::complex<double> w) {
    auto dist_to = [w](double x) {
        std::complex<double> p(x, 0.0);
        double tau = std::abs((w - p) / (1.0 - std::conj(p) * w));
        return std::log((1.0 + tau) / (1.0 - tau));
    };
    // golden-section over x in (-1, 1)
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = -1.0 + 1e-12, b = 1.0 - 1e-12;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = dist_to(x1), f2 = dist_to(x2);
    for (int iter = 0; iter < 200; ++iter) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = dist_to(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = dist_to(x2);
        }
        if (b - a < 1e-13) break;
    }
    return dist_to(0.5 * (a + b));
}

double turning_constant_brute(const qlines::Curve& curve) {
    const auto& p = curve.points;
    double best = 1.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            double chord = std::abs(p[i] - p[j]);
            if (chord < 1e-14) continue;
            double diam = 0.0;
            for (std::size_t a = i; a <= j; ++a)
                for (std::size_t b = a + 1; b <= j; ++b)
                    diam = std::max(diam, std::abs(p[a] - p[b]));
            best = std::max(best, diam / chord);
        }
    return best;
}

}  // namespace oracles
