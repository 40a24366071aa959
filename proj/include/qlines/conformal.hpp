#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qlines/types.hpp"

namespace qlines {

/// Absolute margin used by membership tests; keeps Newton iterations and
/// quadrature away from the metric blow-up at the boundary.
constexpr double kBoundaryMargin = 1e-9;

struct DomainDescriptor {
    enum class Kind { Strip, Disk, HalfPlane, TwoSlitPlane, UserChannel };

    Kind kind = Kind::Strip;
    std::string name;
    std::vector<double> parameters;
    std::function<bool(Complex)> membership;

    bool contains(Complex z) const { return membership && membership(z); }

    static DomainDescriptor strip(double margin = kBoundaryMargin);
    static DomainDescriptor disk(double margin = kBoundaryMargin);
    static DomainDescriptor half_plane(double margin = kBoundaryMargin);
    static DomainDescriptor two_slit_plane(double margin = kBoundaryMargin);
    static DomainDescriptor user_channel(std::string name, std::function<bool(Complex)> membership);
};

/// Evaluatable conformal map with complex derivative and inverse.
/// Immutable after construction; evaluation is pure.
class AnalyticMap {
public:
    using Fn = std::function<Complex(Complex)>;

    AnalyticMap(Fn eval, Fn derivative, Fn inverse, DomainDescriptor source,
                DomainDescriptor target)
        : eval_(std::move(eval)),
          derivative_(std::move(derivative)),
          inverse_(std::move(inverse)),
          source_(std::move(source)),
          target_(std::move(target)) {}

    Complex operator()(Complex z) const { return eval_(z); }
    Complex derivative(Complex z) const { return derivative_(z); }
    Complex inverse(Complex w) const { return inverse_(w); }

    const DomainDescriptor& source() const { return source_; }
    const DomainDescriptor& target() const { return target_; }

private:
    Fn eval_, derivative_, inverse_;
    DomainDescriptor source_, target_;
};

/// The identity on a given domain.
AnalyticMap identity_map(DomainDescriptor domain = DomainDescriptor::strip());

/// z -> tanh(z/2), strip onto disk, real line onto (-1,1).
AnalyticMap strip_to_disk();

/// z -> sinh(z)/2, strip onto the plane minus the rays [i/2, i*inf) and
/// [-i/2, -i*inf); the walls map onto the slits, R onto R.
AnalyticMap two_slit_map();

/// The inverse map as a first-class AnalyticMap (domains swapped).
AnalyticMap inverted(const AnalyticMap& map);

/// outer after inner, with chain-rule derivative and reverse-composed inverse.
/// ConfigError if inner's target is incompatible with outer's source.
AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

/// Damped complex Newton solve of eval(z) = w starting from seed.
/// Iterates never leave the source domain.  NumericError on non-convergence
/// (carries the last residual) or when the derivative drops below 1e-14.
Complex newton_invert(const AnalyticMap& map, Complex w, Complex seed);

/// Schwarz reflection: extends a map fixing the horizontal line Im z = k
/// (setwise, onto a line of the same height) to the domain doubled across it.
/// ConfigError naming the worst sample if the line is not fixed within 1e-8.
AnalyticMap reflect_across_line(const AnalyticMap& map, double line_height);

/// Lattice diagnostics for the AnalyticMap contract: inverse roundtrip,
/// finite-difference Cauchy-Riemann residual, and derivative consistency.
struct MapCheckReport {
    double max_roundtrip_error = 0.0;
    double max_cr_residual_rel = 0.0;       // |d eval / d zbar| relative to |derivative|
    double max_derivative_error_rel = 0.0;  // centered difference vs derivative()
    bool pass(double roundtrip_tol = 1e-9, double cr_tol = 1e-6,
              double derivative_tol = 1e-6) const {
        return max_roundtrip_error <= roundtrip_tol && max_cr_residual_rel <= cr_tol &&
               max_derivative_error_rel <= derivative_tol;
    }
};

/// Runs the three checks on an nx-by-ny lattice over the rectangle [lo, hi]
/// (corners in source coordinates); lattice points outside the source domain
/// are skipped.
MapCheckReport check_map_on_lattice(const AnalyticMap& map, Complex lo, Complex hi, int nx,
                                    int ny);

}  // namespace qlines
