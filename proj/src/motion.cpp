#include "qlines/motion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qlines {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kCrTol = 1e-5;
constexpr double kEndpointTol = 1e-3;
constexpr double kEndpointCutoff = 12.0;

Curve trace_height(const AnalyticMap& psi, double height, double x_min, double x_max, int n,
                   std::string kind, double level) {
    if (n < 2) throw std::domain_error("trace: need at least 2 samples");
    if (!(x_min < x_max)) throw std::domain_error("trace: empty x range");
    Curve curve;
    curve.points.reserve(n);
    curve.params.reserve(n);
    for (int i = 0; i < n; ++i) {
        double x = x_min + (x_max - x_min) * i / (n - 1);
        curve.points.push_back(psi(Complex(x, height)));
        curve.params.push_back(x);
    }
    curve.meta.kind = std::move(kind);
    curve.meta.domain = psi.target().name;
    curve.meta.level = level;
    curve.meta.window_min = x_min;
    curve.meta.window_max = x_max;
    curve.validate();
    return curve;
}

}  // namespace

Complex motion_point(const StripMotion& motion, Complex lambda, Complex a) {
    Complex zeta = motion.psi.inverse(a);
    Complex moved = zeta + lambda;
    if (!motion.psi.source().contains(moved))
        throw std::domain_error("motion_point: translated preimage leaves the strip");
    return motion.psi(moved);
}

Curve trace_hyperbolic_level(const AnalyticMap& psi, double c, int side, double x_min,
                             double x_max, int n) {
    if (!std::isfinite(c) || c < 0.0)
        throw std::domain_error("trace_hyperbolic_level: c must be finite and >= 0");
    if (side != 1 && side != -1)
        throw std::domain_error("trace_hyperbolic_level: side must be +1 or -1");
    double t = side * offset_for_distance(c);
    return trace_height(psi, t, x_min, x_max, n, "hyperbolic-level", c);
}

Curve trace_harmonic_level(const AnalyticMap& psi, double b, double x_min, double x_max, int n) {
    if (!(b > 0.0 && b < 1.0))
        throw std::domain_error("trace_harmonic_level: b must lie in (0,1)");
    double height = kHalfPi * (2.0 * b - 1.0);
    return trace_height(psi, height, x_min, x_max, n, "harmonic-level", b);
}

LevelDistanceReport verify_level_distance(const AnalyticMap& psi, const Curve& curve, double c,
                                          double tol) {
    LevelDistanceReport report;
    report.tol = tol;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        Complex zeta = psi.inverse(curve.points[i]);
        double err = std::fabs(distance_for_offset(zeta.imag()) - c);
        if (err > report.max_error) {
            report.max_error = err;
            report.worst_index = i;
        }
    }
    report.pass = report.max_error <= tol;
    return report;
}

double chordal_distance(Complex z, Complex w) {
    bool zi = !std::isfinite(z.real()) || !std::isfinite(z.imag());
    bool wi = !std::isfinite(w.real()) || !std::isfinite(w.imag());
    if (zi && wi) return 0.0;
    if (zi) std::swap(z, w), std::swap(zi, wi);
    if (wi) return 2.0 / std::sqrt(1.0 + std::norm(z));
    return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

MotionAxiomReport verify_motion_axioms(const StripMotion& motion,
                                       std::span<const Complex> lambda_samples,
                                       std::span<const Complex> point_samples) {
    MotionAxiomReport report;
    const auto& psi = motion.psi;

    // (i) identity at the basepoint
    {
        auto& ax = report.identity_at_base;
        for (std::size_t p = 0; p < point_samples.size(); ++p) {
            double err = std::abs(motion_point(motion, Complex(0, 0), point_samples[p]) -
                                  point_samples[p]);
            if (err > ax.worst) {
                ax.worst = err;
                ax.witness_point = p;
            }
        }
        ax.pass = ax.worst <= kIdentityTol;
    }

    // (ii) injectivity per lambda: images pairwise distinct
    {
        auto& ax = report.injectivity;
        double min_gap = std::numeric_limits<double>::infinity();
        std::vector<Complex> images(point_samples.size());
        for (std::size_t l = 0; l < lambda_samples.size(); ++l) {
            for (std::size_t p = 0; p < point_samples.size(); ++p)
                images[p] = motion_point(motion, lambda_samples[l], point_samples[p]);
            for (std::size_t a = 0; a < images.size(); ++a)
                for (std::size_t b = a + 1; b < images.size(); ++b) {
                    double gap = std::abs(images[a] - images[b]);
                    if (gap < min_gap) {
                        min_gap = gap;
                        ax.witness_lambda = l;
                        ax.witness_point = a;
                        ax.witness_point2 = b;
                    }
                }
        }
        ax.worst = min_gap;
        ax.pass = min_gap > 0.0;
    }

    // (iii) holomorphy in lambda: centered-difference Cauchy-Riemann residual
    {
        auto& ax = report.holomorphy;
        const double h = 1e-5;
        for (std::size_t l = 0; l < lambda_samples.size(); ++l) {
            Complex lam = lambda_samples[l];
            for (std::size_t p = 0; p < point_samples.size(); ++p) {
                Complex a = point_samples[p];
                Complex fx = (motion_point(motion, lam + h, a) - motion_point(motion, lam - h, a)) /
                             (2.0 * h);
                Complex fy = (motion_point(motion, lam + Complex(0, h), a) -
                              motion_point(motion, lam - Complex(0, h), a)) /
                             (2.0 * h);
                double dbar = 0.5 * std::abs(fx + Complex(0, 1) * fy);
                double dz = 0.5 * std::abs(fx - Complex(0, 1) * fy);
                double rel = dbar / std::max(dz, 1e-30);
                if (rel > ax.worst) {
                    ax.worst = rel;
                    ax.witness_lambda = l;
                    ax.witness_point = p;
                }
            }
        }
        ax.pass = ax.worst <= kCrTol;
    }

    // (iv) endpoint fixing: Phi(lambda, .) approaches the curve endpoints
    {
        auto& ax = report.endpoint_fixing;
        bool trend_ok = true;
        for (std::size_t l = 0; l < lambda_samples.size(); ++l) {
            Complex lam = lambda_samples[l];
            for (int sign : {-1, 1}) {
                Complex endpoint = psi(Complex(sign * 30.0, 0.0));
                double prev = std::numeric_limits<double>::infinity();
                double at_cutoff = 0.0;
                for (double x : {6.0, 9.0, kEndpointCutoff}) {
                    double d = chordal_distance(psi(Complex(sign * x, 0.0) + lam), endpoint);
                    if (d >= prev) trend_ok = false;
                    prev = d;
                    at_cutoff = d;
                }
                if (at_cutoff > ax.worst) {
                    ax.worst = at_cutoff;
                    ax.witness_lambda = l;
                }
            }
        }
        ax.pass = ax.worst <= kEndpointTol || trend_ok;
        ax.note = "ideal endpoints sampled at the finite cutoff |x| in {6, 9, 12}";
        if (ax.worst > kEndpointTol && trend_ok)
            ax.note += "; cutoff distance above tolerance but strictly decreasing in |x|";
    }

    return report;
}

}  // namespace qlines
