#include "qlines/conformal.hpp"

#include <cmath>

namespace qlines {

namespace {

constexpr double kNewtonTol = 1e-10;
constexpr double kDerivativeFloor = 1e-14;
constexpr int kMaxNewtonIter = 100;

}  // namespace

DomainDescriptor DomainDescriptor::strip(double margin) {
    DomainDescriptor d;
    d.kind = Kind::Strip;
    d.name = "strip";
    d.parameters = {margin};
    d.membership = [margin](Complex z) { return std::fabs(z.imag()) < kHalfPi - margin; };
    return d;
}

DomainDescriptor DomainDescriptor::disk(double margin) {
    DomainDescriptor d;
    d.kind = Kind::Disk;
    d.name = "disk";
    d.parameters = {margin};
    d.membership = [margin](Complex z) { return std::abs(z) < 1.0 - margin; };
    return d;
}

DomainDescriptor DomainDescriptor::half_plane(double margin) {
    DomainDescriptor d;
    d.kind = Kind::HalfPlane;
    d.name = "half-plane";
    d.parameters = {margin};
    d.membership = [margin](Complex z) { return z.imag() > margin; };
    return d;
}

DomainDescriptor DomainDescriptor::two_slit_plane(double margin) {
    DomainDescriptor d;
    d.kind = Kind::TwoSlitPlane;
    d.name = "two-slit-plane";
    d.parameters = {margin};
    d.membership = [margin](Complex z) {
        // excluded: the rays [i/2, i*inf) and [-i/2, -i*inf)
        return !(std::fabs(z.real()) <= margin && std::fabs(z.imag()) >= 0.5 - margin);
    };
    return d;
}

DomainDescriptor DomainDescriptor::user_channel(std::string name,
                                                std::function<bool(Complex)> membership) {
    DomainDescriptor d;
    d.kind = Kind::UserChannel;
    d.name = std::move(name);
    d.membership = std::move(membership);
    return d;
}

AnalyticMap identity_map(DomainDescriptor domain) {
    auto same = domain;
    return AnalyticMap([](Complex z) { return z; }, [](Complex) { return Complex(1.0, 0.0); },
                       [](Complex w) { return w; }, std::move(domain), std::move(same));
}

AnalyticMap strip_to_disk() {
    auto src = DomainDescriptor::strip();
    auto dst = DomainDescriptor::disk();
    auto dst_check = dst;
    return AnalyticMap(
        [](Complex z) { return std::tanh(z / 2.0); },
        [](Complex z) {
            Complex w = std::tanh(z / 2.0);
            return (1.0 - w * w) / 2.0;
        },
        [dst_check](Complex w) {
            if (!dst_check.contains(w))
                throw std::domain_error("strip_to_disk inverse: |w| >= 1");
            return std::log((1.0 + w) / (1.0 - w));  // 2 artanh(w)
        },
        std::move(src), std::move(dst));
}

AnalyticMap two_slit_map() {
    auto src = DomainDescriptor::strip();
    auto dst = DomainDescriptor::two_slit_plane();
    auto src_check = src;
    auto dst_check = dst;
    return AnalyticMap(
        [](Complex z) { return std::sinh(z) / 2.0; },
        [](Complex z) { return std::cosh(z) / 2.0; },
        [src_check, dst_check](Complex w) {
            if (!dst_check.contains(w))
                throw std::domain_error("two_slit_map inverse: point on a slit");
            // principal branch lands in |Im| <= pi/2; the membership post-check
            // rejects arguments whose preimage would sit on the walls
            Complex z = std::asinh(2.0 * w);
            if (!src_check.contains(z))
                throw std::domain_error("two_slit_map inverse: preimage on the strip boundary");
            return z;
        },
        std::move(src), std::move(dst));
}

AnalyticMap inverted(const AnalyticMap& map) {
    AnalyticMap inner = map;  // keep the original alive inside the closures
    return AnalyticMap([inner](Complex w) { return inner.inverse(w); },
                       [inner](Complex w) { return 1.0 / inner.derivative(inner.inverse(w)); },
                       [inner](Complex z) { return inner(z); }, map.target(), map.source());
}

AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner) {
    const auto it = inner.target().kind;
    const auto os = outer.source().kind;
    if (it != os && it != DomainDescriptor::Kind::UserChannel &&
        os != DomainDescriptor::Kind::UserChannel)
        throw ConfigError("compose: inner target '" + inner.target().name +
                          "' incompatible with outer source '" + outer.source().name + "'");
    AnalyticMap f = outer, g = inner;
    return AnalyticMap([f, g](Complex z) { return f(g(z)); },
                       [f, g](Complex z) { return f.derivative(g(z)) * g.derivative(z); },
                       [f, g](Complex w) { return g.inverse(f.inverse(w)); }, inner.source(),
                       outer.target());
}

Complex newton_invert(const AnalyticMap& map, Complex w, Complex seed) {
    if (!map.source().contains(seed))
        throw std::domain_error("newton_invert: seed outside source domain");
    Complex z = seed;
    double res = std::abs(map(z) - w);
    for (int iter = 0; iter < kMaxNewtonIter; ++iter) {
        if (res <= kNewtonTol) return z;
        Complex d = map.derivative(z);
        if (std::abs(d) < kDerivativeFloor)
            throw NumericError("newton_invert: derivative below 1e-14", res);
        Complex step = (map(z) - w) / d;
        bool advanced = false;
        double damping = 1.0;
        for (int halving = 0; halving < 40 && !advanced; ++halving) {
            Complex zn = z - damping * step;
            if (map.source().contains(zn)) {
                double rn = std::abs(map(zn) - w);
                if (rn < res) {
                    z = zn;
                    res = rn;
                    advanced = true;
                }
            }
            damping *= 0.5;
        }
        if (!advanced) throw NumericError("newton_invert: no admissible descent step", res);
    }
    if (res <= kNewtonTol) return z;
    throw NumericError("newton_invert: did not converge in 100 iterations", res);
}

AnalyticMap reflect_across_line(const AnalyticMap& map, double line_height) {
    const double k = line_height;
    const Complex two_ik(0.0, 2.0 * k);

    // the map must take Im z = k into the same horizontal line; sampled by
    // evaluation so a membership margin that excludes the line cannot make
    // the check vacuous
    double worst = 0.0, worst_x = 0.0;
    for (int i = 0; i <= 24; ++i) {
        double x = -6.0 + 0.5 * i;
        Complex w = map(Complex(x, k));
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw ConfigError("reflect_across_line: map not evaluatable on the line at x = " +
                              std::to_string(x));
        double dev = std::fabs(w.imag() - k);
        if (dev > worst) {
            worst = dev;
            worst_x = x;
        }
    }
    if (worst > 1e-8)
        throw ConfigError("reflect_across_line: line Im z = " + std::to_string(k) +
                          " not fixed; worst sample x = " + std::to_string(worst_x) +
                          " deviates by " + std::to_string(worst));

    AnalyticMap f = map;
    auto base = map.source();
    auto doubled_src = DomainDescriptor::user_channel(
        base.name + "+reflection", [base, k, two_ik](Complex z) {
            return z.imag() <= k ? base.contains(z) : base.contains(std::conj(z) + two_ik);
        });
    auto timg = map.target();
    auto doubled_dst = DomainDescriptor::user_channel(
        timg.name + "+reflection", [timg, k, two_ik](Complex w) {
            return w.imag() <= k ? timg.contains(w) : timg.contains(std::conj(w) + two_ik);
        });

    return AnalyticMap(
        [f, k, two_ik](Complex z) {
            if (z.imag() <= k) return f(z);
            return std::conj(f(std::conj(z) + two_ik)) + two_ik;
        },
        [f, k, two_ik](Complex z) {
            if (z.imag() <= k) return f.derivative(z);
            return std::conj(f.derivative(std::conj(z) + two_ik));
        },
        [f, k, two_ik](Complex w) {
            if (w.imag() <= k) return f.inverse(w);
            return std::conj(f.inverse(std::conj(w) + two_ik)) + two_ik;
        },
        std::move(doubled_src), std::move(doubled_dst));
}

MapCheckReport check_map_on_lattice(const AnalyticMap& map, Complex lo, Complex hi, int nx,
                                    int ny) {
    MapCheckReport r;
    const double h = 1e-5;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            Complex z(lo.real() + (hi.real() - lo.real()) * i / (nx - 1),
                      lo.imag() + (hi.imag() - lo.imag()) * j / (ny - 1));
            if (!map.source().contains(z)) continue;
            Complex w = map(z);
            Complex back = map.inverse(w);
            r.max_roundtrip_error = std::max(r.max_roundtrip_error, std::abs(back - z));

            Complex d = map.derivative(z);
            Complex dx = (map(z + h) - map(z - h)) / (2.0 * h);
            Complex dy = (map(z + Complex(0, h)) - map(z - Complex(0, h))) / (2.0 * h);
            double scale = std::max(std::abs(d), 1e-30);
            // d/dzbar = (d/dx + i d/dy) / 2 must vanish for analytic maps
            r.max_cr_residual_rel =
                std::max(r.max_cr_residual_rel, 0.5 * std::abs(dx + Complex(0, 1) * dy) / scale);
            r.max_derivative_error_rel =
                std::max(r.max_derivative_error_rel, std::abs(dx - d) / scale);
            r.max_derivative_error_rel =
                std::max(r.max_derivative_error_rel, std::abs(dy / Complex(0, 1) - d) / scale);
        }
    }
    return r;
}

}  // namespace qlines
