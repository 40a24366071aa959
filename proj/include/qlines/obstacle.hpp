#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qlines/strip_geometry.hpp"
#include "qlines/types.hpp"

namespace qlines {

enum class CellKind : unsigned char { Fluid, Wall, Obstacle };

/// Rectangular lattice over the truncated strip.  Columns are -M..M at
/// spacing h (x = i*h after shifting), rows -J..J with the walls snapped to
/// the outermost rows; the snap error |J*h - pi/2| is recorded and is at
/// most h/2.  The y = 0 row always exists, so masks symmetric across R stay
/// symmetric on the lattice.
class GridSpec {
public:
    /// Truncated strip |x| <= x_half (snapped to the lattice), no obstacle yet.
    static GridSpec channel(double x_half, double h);

    /// Marks the vertical segment x = 0, |y| <= half_height as obstacle.
    void add_vertical_segment(double half_height);

    /// Marks the real interval [x0, x1] (on y = 0) as obstacle.
    void add_real_slit(double x0, double x1);

    /// Marks the closed axis-aligned box [x0, x1] x [y0, y1] as obstacle.
    void add_box(double x0, double x1, double y0, double y1);

    int cols() const { return 2 * half_cols_ + 1; }
    int rows() const { return 2 * half_rows_ + 1; }
    double spacing() const { return h_; }
    double x(int i) const { return (i - half_cols_) * h_; }
    double y(int j) const { return (j - half_rows_) * h_; }
    double x_max() const { return half_cols_ * h_; }
    double wall_height() const { return half_rows_ * h_; }  // snapped pi/2
    double wall_snap_error() const { return snap_error_; }

    CellKind at(int i, int j) const { return mask_[idx(i, j)]; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * cols() + i; }

    bool has_obstacle() const;
    bool obstacle_symmetric() const;  // across R (row reflection)
    bool obstacle_connected() const;  // 4-neighbourhood
    double obstacle_height() const;   // max |y| over obstacle cells, 0 if none

    /// Structural checks: obstacle closure strictly inside the truncated strip.
    /// ConfigError on violation.
    void validate() const;

private:
    void mark_obstacle(int i, int j);

    double h_ = 0.0;
    int half_cols_ = 0;
    int half_rows_ = 0;
    double snap_error_ = 0.0;
    std::vector<CellKind> mask_;
};

/// A solved lattice field together with its convergence record.
struct ScalarField {
    GridSpec spec;
    std::vector<double> values;
    double residual = 0.0;  // final max update residual
    long iterations = 0;

    double at(int i, int j) const { return values[spec.idx(i, j)]; }
};

/// Solves the 5-point Laplace problem with Dirichlet data given by
/// boundary_value(x, y, kind) on Wall/Obstacle cells and on the far-end
/// columns (passed with kind Fluid); initial_value seeds the interior.
/// Red-black SOR; NumericError with the residual when the iteration cap is hit.
ScalarField solve_dirichlet(const GridSpec& spec,
                            const std::function<double(double, double, CellKind)>& boundary_value,
                            const std::function<double(double, double)>& initial_value,
                            double tol = 1e-9, long iteration_cap = 1000000);

/// Stream function of ideal flow in the obstructed channel: psi = +-wall
/// height on the walls, psi = y at the far ends, psi = 0 on the obstacle
/// (which must be symmetric across R; ConfigError otherwise, since the
/// streamline constant of an asymmetric obstacle is unknown here).
ScalarField solve_stream_function(const GridSpec& spec, double tol = 1e-9);

/// Marching contour of {psi = level}, assembled column by column into a
/// single monotone-in-x polyline spanning the truncation window.
/// ExtractionError if the contour fragments or runs into obstacle cells;
/// domain error for level = 0 with an obstacle present (that level splits).
Curve extract_streamline(const ScalarField& field, double level);

struct ModulusResult {
    double value = 0.0;
    double residual = 0.0;
    long iterations = 0;
    std::vector<std::string> warnings;
};

/// Conformal modulus of the ring (truncated strip) \ obstacle, computed as
/// the reciprocal Dirichlet energy of the potential with u = 0 on the
/// obstacle and u = 1 on walls and far ends.  Normalized so the round
/// annulus 1 < |z| < R has modulus log(R)/(2 pi).  When `widened` is given
/// (same h, larger truncation), a sensitivity warning is attached if the
/// value moves by at least tol.
ModulusResult ring_modulus(const GridSpec& spec, double tol, const GridSpec* widened = nullptr,
                           double solver_tol = 1e-9);

/// Modulus of the round annulus r_inner < |z| < r_outer on a square lattice;
/// calibration target log(r_outer/r_inner)/(2 pi).
double annulus_modulus(double r_inner, double r_outer, double h, double tol = 1e-8);

struct SlitGridParams {
    double x_half = 6.0;
    double h = kPi / 100.0;
    double solver_tol = 1e-9;
};

/// Mod of (strip \ [-r, r]) on the given lattice.
double slit_modulus(double r, const SlitGridParams& grid = {});

/// Bisection on r for Mod(strip \ [-r, r]) = target_mod, using the strict
/// monotonicity of the modulus in r.  ConfigError when the bracket does not
/// straddle the target; NumericError when the lattice cannot resolve it.
double find_matching_slit(double target_mod, double r_lo, double r_hi, double tol,
                          const SlitGridParams& grid = {});

/// Distortion bound for an obstructed-channel streamline homotopic to a wall,
/// via the widest horizontal sub-strip of the doubled domain that separates
/// the curve from the obstacle.  The hyperbolic metric only shrinks when the
/// domain grows, so this is an upper estimate, and the report says so.
/// Returns K = +inf (with a warning) when the curve's clearance does not
/// exceed the obstacle height, so no sub-strip exists.
BoundReport obstacle_bound(const Curve& streamline, double level);

}  // namespace qlines
