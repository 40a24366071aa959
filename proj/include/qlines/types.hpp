#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlines {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;

/// Thrown when an iterative routine fails to converge; carries the last residual.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

/// Thrown when pieces are wired together inconsistently (domain mismatch,
/// precondition violated on sampled data, unsupported configuration).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a level-set contour cannot be assembled into a single polyline.
class ExtractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Provenance attached to a traced curve.
struct CurveMeta {
    std::string kind;    // "hyperbolic-level", "harmonic-level", "streamline", ...
    std::string domain;  // name of the target domain
    double level = 0.0;  // c, b, y0 or stream level, depending on kind
    double window_min = 0.0;  // traced parameter window
    double window_max = 0.0;
    double obstacle_height = 0.0;  // max |Im| of obstacle cells, when applicable
};

/// Ordered polyline sample of a level line or streamline.
struct Curve {
    std::vector<Complex> points;
    std::vector<double> params;  // strip x-coordinates or arclength, strictly increasing
    CurveMeta meta;

    std::size_t size() const { return points.size(); }

    // Enforces the structural invariants: matching lengths, finite coordinates,
    // strictly increasing params, no two consecutive points equal.
    void validate() const;
};

}  // namespace qlines
