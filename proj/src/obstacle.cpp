#include "qlines/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace qlines {

namespace {

constexpr double kSnapEps = 1e-9;  // lattice-alignment slack for rasterization

// Red-black SOR for the 5-point Laplacian on a masked lattice.  `fixed`
// marks Dirichlet cells.  The stencil sum groups the vertical pair and the
// horizontal pair so the sweep commutes exactly with the lattice reflections;
// a symmetric problem therefore stays symmetric to the last bit.
struct SorResult {
    double residual;
    long iterations;
};

SorResult sor(std::vector<double>& u, const std::vector<unsigned char>& fixed, int W, int H,
              double tol, long iteration_cap) {
    double rj = 0.5 * (std::cos(kPi / (W - 1)) + std::cos(kPi / (H - 1)));
    double omega = 2.0 / (1.0 + std::sqrt(1.0 - rj * rj));
    for (long iter = 1; iter <= iteration_cap; ++iter) {
        double res = 0.0;
        for (int color = 0; color < 2; ++color) {
            for (int j = 1; j < H - 1; ++j) {
                std::size_t row = static_cast<std::size_t>(j) * W;
                int i0 = 1 + ((1 + j + color) & 1);
                for (int i = i0; i < W - 1; i += 2) {
                    std::size_t k = row + i;
                    if (fixed[k]) continue;
                    double avg =
                        0.25 * ((u[k - W] + u[k + W]) + (u[k - 1] + u[k + 1]));
                    double d = avg - u[k];
                    double ad = std::fabs(d);
                    if (ad > res) res = ad;
                    u[k] += omega * d;
                }
            }
        }
        if (res < tol) return {res, iter};
    }
    double res = 0.0;
    for (int j = 1; j < H - 1; ++j)
        for (int i = 1; i < W - 1; ++i) {
            std::size_t k = static_cast<std::size_t>(j) * W + i;
            if (fixed[k]) continue;
            res = std::max(res, std::fabs(0.25 * ((u[k - W] + u[k + W]) + (u[k - 1] + u[k + 1])) -
                                          u[k]));
        }
    throw NumericError("sor: iteration cap reached", res);
}

double dirichlet_energy(const std::vector<double>& u, int W, int H) {
    double D = 0.0;
    for (int j = 0; j < H; ++j)
        for (int i = 0; i + 1 < W; ++i) {
            double d = u[static_cast<std::size_t>(j) * W + i + 1] -
                       u[static_cast<std::size_t>(j) * W + i];
            D += d * d;
        }
    for (int j = 0; j + 1 < H; ++j)
        for (int i = 0; i < W; ++i) {
            double d = u[static_cast<std::size_t>(j + 1) * W + i] -
                       u[static_cast<std::size_t>(j) * W + i];
            D += d * d;
        }
    return D;
}

}  // namespace

GridSpec GridSpec::channel(double x_half, double h) {
    if (!(h > 0.0) || !(x_half > 0.0))
        throw std::domain_error("GridSpec::channel: need h > 0 and x_half > 0");
    GridSpec g;
    g.h_ = h;
    g.half_cols_ = static_cast<int>(std::lround(x_half / h));
    g.half_rows_ = static_cast<int>(std::lround(kHalfPi / h));
    if (g.half_cols_ < 2 || g.half_rows_ < 2)
        throw std::domain_error("GridSpec::channel: lattice too coarse");
    g.snap_error_ = std::fabs(g.half_rows_ * h - kHalfPi);
    g.mask_.assign(static_cast<std::size_t>(g.cols()) * g.rows(), CellKind::Fluid);
    for (int i = 0; i < g.cols(); ++i) {
        g.mask_[g.idx(i, 0)] = CellKind::Wall;
        g.mask_[g.idx(i, g.rows() - 1)] = CellKind::Wall;
    }
    return g;
}

void GridSpec::mark_obstacle(int i, int j) {
    if (i <= 0 || i >= cols() - 1 || j <= 0 || j >= rows() - 1)
        throw ConfigError("GridSpec: obstacle cell touches the lattice boundary");
    mask_[idx(i, j)] = CellKind::Obstacle;
}

void GridSpec::add_vertical_segment(double half_height) {
    if (!(half_height >= 0.0) || half_height >= wall_height())
        throw std::domain_error("add_vertical_segment: half_height outside the strip");
    for (int j = 0; j < rows(); ++j)
        if (std::fabs(y(j)) <= half_height + kSnapEps) mark_obstacle(half_cols_, j);
}

void GridSpec::add_real_slit(double x0, double x1) {
    if (!(x0 <= x1)) throw std::domain_error("add_real_slit: empty interval");
    for (int i = 0; i < cols(); ++i)
        if (x(i) >= x0 - kSnapEps && x(i) <= x1 + kSnapEps) mark_obstacle(i, half_rows_);
}

void GridSpec::add_box(double x0, double x1, double y0, double y1) {
    if (!(x0 <= x1 && y0 <= y1)) throw std::domain_error("add_box: empty box");
    for (int j = 0; j < rows(); ++j)
        for (int i = 0; i < cols(); ++i)
            if (x(i) >= x0 - kSnapEps && x(i) <= x1 + kSnapEps && y(j) >= y0 - kSnapEps &&
                y(j) <= y1 + kSnapEps)
                mark_obstacle(i, j);
}

bool GridSpec::has_obstacle() const {
    return std::find(mask_.begin(), mask_.end(), CellKind::Obstacle) != mask_.end();
}

bool GridSpec::obstacle_symmetric() const {
    for (int j = 0; j < rows(); ++j)
        for (int i = 0; i < cols(); ++i)
            if ((at(i, j) == CellKind::Obstacle) != (at(i, rows() - 1 - j) == CellKind::Obstacle))
                return false;
    return true;
}

bool GridSpec::obstacle_connected() const {
    std::vector<int> cells;
    for (int j = 0; j < rows(); ++j)
        for (int i = 0; i < cols(); ++i)
            if (at(i, j) == CellKind::Obstacle) cells.push_back(j * cols() + i);
    if (cells.empty()) return false;
    std::vector<unsigned char> seen(mask_.size(), 0);
    std::deque<int> queue{cells.front()};
    seen[cells.front()] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        int i = k % cols(), j = k / cols();
        const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
        for (int n = 0; n < 4; ++n) {
            int ii = i + di[n], jj = j + dj[n];
            if (ii < 0 || ii >= cols() || jj < 0 || jj >= rows()) continue;
            int kk = jj * cols() + ii;
            if (!seen[kk] && at(ii, jj) == CellKind::Obstacle) {
                seen[kk] = 1;
                ++reached;
                queue.push_back(kk);
            }
        }
    }
    return reached == cells.size();
}

double GridSpec::obstacle_height() const {
    double best = 0.0;
    for (int j = 0; j < rows(); ++j)
        for (int i = 0; i < cols(); ++i)
            if (at(i, j) == CellKind::Obstacle) best = std::max(best, std::fabs(y(j)));
    return best;
}

void GridSpec::validate() const {
    for (int j = 0; j < rows(); ++j)
        for (int i = 0; i < cols(); ++i) {
            if (at(i, j) != CellKind::Obstacle) continue;
            if (j <= 1 || j >= rows() - 2 || i <= 1 || i >= cols() - 2)
                throw ConfigError("GridSpec: obstacle closure not inside the truncated strip");
        }
}

ScalarField solve_dirichlet(const GridSpec& spec,
                            const std::function<double(double, double, CellKind)>& boundary_value,
                            const std::function<double(double, double)>& initial_value,
                            double tol, long iteration_cap) {
    if (!(tol > 0.0)) throw std::domain_error("solve_dirichlet: tol must be positive");
    spec.validate();
    const int W = spec.cols(), H = spec.rows();
    std::vector<double> u(static_cast<std::size_t>(W) * H, 0.0);
    std::vector<unsigned char> fixed(u.size(), 0);
    for (int j = 0; j < H; ++j)
        for (int i = 0; i < W; ++i) {
            std::size_t k = spec.idx(i, j);
            bool far_end = (i == 0 || i == W - 1);
            if (spec.at(i, j) != CellKind::Fluid || far_end) {
                fixed[k] = 1;
                u[k] = boundary_value(spec.x(i), spec.y(j), spec.at(i, j));
            } else {
                u[k] = initial_value(spec.x(i), spec.y(j));
            }
        }
    auto r = sor(u, fixed, W, H, tol, iteration_cap);
    return ScalarField{spec, std::move(u), r.residual, r.iterations};
}

ScalarField solve_stream_function(const GridSpec& spec, double tol) {
    if (spec.has_obstacle() && !spec.obstacle_symmetric())
        throw ConfigError(
            "solve_stream_function: asymmetric obstacle unsupported "
            "(its streamline constant is unknown)");
    const double yw = spec.wall_height();
    return solve_dirichlet(
        spec,
        [yw](double, double y, CellKind kind) {
            if (kind == CellKind::Wall) return y > 0 ? yw : -yw;
            if (kind == CellKind::Obstacle) return 0.0;  // obstacle rides the central streamline
            return y;                                    // far ends
        },
        [](double, double y) { return y; }, tol);
}

Curve extract_streamline(const ScalarField& field, double level) {
    const GridSpec& spec = field.spec;
    const double yw = spec.wall_height();
    if (!std::isfinite(level) || std::fabs(level) >= yw)
        throw std::domain_error("extract_streamline: level must lie strictly between the walls");
    if (spec.has_obstacle() && level == 0.0)
        throw std::domain_error(
            "extract_streamline: the 0-level splits around the obstacle; trace a nonzero level");

    Curve curve;
    curve.points.reserve(spec.cols());
    curve.params.reserve(spec.cols());
    for (int i = 0; i < spec.cols(); ++i) {
        double found_y = 0.0;
        int found = 0;
        for (int j = 0; j + 1 < spec.rows(); ++j) {
            double a = field.at(i, j) - level;
            double b = field.at(i, j + 1) - level;
            if (a == 0.0 && b == 0.0) continue;  // level plateau; neighbours will cross
            bool crosses = (a <= 0.0 && b > 0.0) || (a > 0.0 && b <= 0.0);
            if (!crosses) continue;
            bool lower_obs = spec.at(i, j) == CellKind::Obstacle;
            bool upper_obs = spec.at(i, j + 1) == CellKind::Obstacle;
            double frac = -a / (b - a);
            if ((lower_obs && upper_obs) || (lower_obs && frac <= 0.0) ||
                (upper_obs && frac >= 1.0))
                throw ExtractionError("extract_streamline: contour enters obstacle cells at x = " +
                                      std::to_string(spec.x(i)));
            double yc = spec.y(j) + frac * spec.spacing();
            if (found > 0 && std::fabs(yc - found_y) <= spec.spacing() * 1e-9) continue;
            ++found;
            found_y = yc;
        }
        if (found == 0)
            throw ExtractionError("extract_streamline: contour breaks at column x = " +
                                  std::to_string(spec.x(i)));
        if (found > 1)
            throw ExtractionError("extract_streamline: contour fragments at column x = " +
                                  std::to_string(spec.x(i)));
        curve.points.emplace_back(spec.x(i), found_y);
        curve.params.push_back(spec.x(i));
    }
    curve.meta.kind = "obstacle-streamline";
    curve.meta.domain = "strip";
    curve.meta.level = level;
    curve.meta.window_min = -spec.x_max();
    curve.meta.window_max = spec.x_max();
    // half a cell of rasterization slack on top of the marked cells
    curve.meta.obstacle_height =
        spec.has_obstacle() ? spec.obstacle_height() + spec.spacing() / 2.0 : 0.0;
    curve.validate();
    return curve;
}

ModulusResult ring_modulus(const GridSpec& spec, double tol, const GridSpec* widened,
                           double solver_tol) {
    if (!spec.has_obstacle())
        throw std::domain_error("ring_modulus: obstacle must be nonempty");
    if (!spec.obstacle_connected())
        throw ConfigError("ring_modulus: obstacle must be a single connected component");
    // u = 0 on the obstacle, u = 1 on walls and far ends (the far ends
    // approximate the wall component of the ring)
    auto run = [solver_tol](const GridSpec& g) {
        return solve_dirichlet(
            g,
            [](double, double, CellKind kind) { return kind == CellKind::Obstacle ? 0.0 : 1.0; },
            [](double, double) { return 1.0; }, solver_tol);
    };
    ScalarField f = run(spec);
    ModulusResult result;
    result.residual = f.residual;
    result.iterations = f.iterations;
    result.value = 1.0 / dirichlet_energy(f.values, spec.cols(), spec.rows());
    if (widened) {
        ScalarField g = run(*widened);
        double wide = 1.0 / dirichlet_energy(g.values, widened->cols(), widened->rows());
        if (std::fabs(wide - result.value) >= tol)
            result.warnings.push_back("truncation sensitivity " +
                                      std::to_string(std::fabs(wide - result.value)) +
                                      " at tol " + std::to_string(tol));
    }
    return result;
}

double annulus_modulus(double r_inner, double r_outer, double h, double tol) {
    if (!(0.0 < r_inner && r_inner < r_outer))
        throw std::domain_error("annulus_modulus: need 0 < r_inner < r_outer");
    int N = static_cast<int>(std::lround((r_outer + 2.0 * h) / h));
    int W = 2 * N + 1;
    std::vector<double> u(static_cast<std::size_t>(W) * W, 0.0);
    std::vector<unsigned char> fixed(u.size(), 0);
    const double log_ratio = std::log(r_outer / r_inner);
    for (int j = -N; j <= N; ++j)
        for (int i = -N; i <= N; ++i) {
            std::size_t k = static_cast<std::size_t>(j + N) * W + (i + N);
            double r = std::hypot(i * h, j * h);
            if (r <= r_inner) {
                u[k] = 0.0;
                fixed[k] = 1;
            } else if (r >= r_outer || std::abs(i) == N || std::abs(j) == N) {
                u[k] = 1.0;
                fixed[k] = 1;
            } else {
                u[k] = std::log(r / r_inner) / log_ratio;  // continuum warm start
            }
        }
    sor(u, fixed, W, W, tol, 1000000);
    return 1.0 / dirichlet_energy(u, W, W);
}

double slit_modulus(double r, const SlitGridParams& grid) {
    if (!(r > 0.0)) throw std::domain_error("slit_modulus: r must be positive");
    GridSpec g = GridSpec::channel(grid.x_half, grid.h);
    g.add_real_slit(-r, r);
    return ring_modulus(g, grid.solver_tol, nullptr, grid.solver_tol).value;
}

double find_matching_slit(double target_mod, double r_lo, double r_hi, double tol,
                          const SlitGridParams& grid) {
    if (!(r_lo > 0.0 && r_lo < r_hi))
        throw std::domain_error("find_matching_slit: need 0 < r_lo < r_hi");
    double mod_lo = slit_modulus(r_lo, grid);
    double mod_hi = slit_modulus(r_hi, grid);
    // modulus decreases in r
    if (!(mod_hi <= target_mod && target_mod <= mod_lo))
        throw ConfigError("find_matching_slit: bracket [" + std::to_string(r_lo) + ", " +
                          std::to_string(r_hi) + "] does not straddle the target modulus");
    double best_r = r_lo, best_err = std::fabs(mod_lo - target_mod);
    if (std::fabs(mod_hi - target_mod) < best_err) {
        best_r = r_hi;
        best_err = std::fabs(mod_hi - target_mod);
    }
    for (int iter = 0; iter < 60; ++iter) {
        double mid = 0.5 * (r_lo + r_hi);
        double mod_mid = slit_modulus(mid, grid);
        double err = std::fabs(mod_mid - target_mod);
        if (err < best_err) {
            best_err = err;
            best_r = mid;
        }
        if (err <= tol) return mid;
        if (mod_mid > target_mod)
            r_lo = mid;  // modulus too large -> slit too short
        else
            r_hi = mid;
        if (r_hi - r_lo < grid.h * 1e-6) break;
    }
    if (best_err <= tol) return best_r;
    throw NumericError("find_matching_slit: lattice cannot resolve the target modulus", best_err);
}

BoundReport obstacle_bound(const Curve& streamline, double level) {
    if (streamline.points.empty()) throw std::invalid_argument("obstacle_bound: empty curve");
    if (level == 0.0)
        throw std::domain_error("obstacle_bound: level 0 is not homotopic to a wall");
    const double sign = level > 0 ? 1.0 : -1.0;
    double clearance = std::numeric_limits<double>::infinity();
    for (Complex z : streamline.points) clearance = std::min(clearance, sign * z.imag());
    if (!(clearance > 0.0))
        throw std::domain_error(
            "obstacle_bound: streamline crosses the central line; not separated from the "
            "obstacle closure");

    const double c0 = streamline.meta.obstacle_height;
    BoundReport r;
    r.theorem = Theorem::Obstacle;
    r.quasiline = true;      // the conclusion is an absolute quasiline claim
    r.upper_estimate = true;  // inscribed sub-strip, not the exact doubled-domain distance
    r.inputs["level"] = level;
    r.inputs["min_wall_side_height"] = clearance;
    r.inputs["substrip_floor"] = c0;
    if (clearance <= c0) {
        r.K = std::numeric_limits<double>::infinity();
        r.warnings.push_back(
            "unbounded: streamline clearance does not exceed the obstacle height, "
            "no separating sub-strip exists");
        return r;
    }
    // widest horizontal sub-strip of the doubled domain avoiding the obstacle:
    // {c0 < Im < pi - c0} after doubling across the wall; rescale to the
    // standard strip and read the distance to the wall line off the height
    double scaled = (kHalfPi - clearance) * kHalfPi / (kHalfPi - c0);
    if (scaled >= kHalfPi - kHeightGuard) {
        r.K = std::numeric_limits<double>::infinity();
        r.warnings.push_back("unbounded: clearance too small to evaluate the sub-strip bound");
        return r;
    }
    r.K = std::exp(distance_for_offset(scaled));
    return r;
}

}  // namespace qlines
