#pragma once

#include <cstddef>
#include <optional>

#include "qlines/strip_geometry.hpp"
#include "qlines/types.hpp"

namespace qlines {

/// Empirical bounded-turning constant of a sampled curve: the largest ratio
/// diameter(subarc) / |chord| over scanned endpoint pairs.
struct TurningReport {
    double C = 1.0;  // >= 1 whenever at least one pair was scanned
    std::size_t witness_first = 0;   // subarc endpoints achieving C
    std::size_t witness_second = 0;  // (indices into the scanned sample)
    std::size_t n_pairs = 0;         // pairs scanned
    std::size_t n_skipped = 0;       // pairs skipped for coincident endpoints
    std::size_t sample_size = 0;     // points scanned after any subsampling
    double window_min = 0.0;         // parameter window the constant refers to
    double window_max = 0.0;
    std::optional<BoundReport> bound;  // attached theoretical K, if any
};

/// Curves longer than this are uniformly subsampled before the pair scan.
constexpr std::size_t kTurningSampleCap = 2000;

/// Scans all endpoint pairs of the (possibly subsampled) curve, maintaining
/// subarc diameters incrementally.  The sampled maximum is a lower bound for
/// the continuum constant; sample_size and the window disclose the
/// discretization.  Pairs closer than 1e-14 are skipped and counted.
TurningReport bounded_turning(const Curve& curve);

/// bounded_turning with the theoretical bound attached for side-by-side
/// reading.  No pass/fail semantics in either direction: C < K is not
/// guaranteed, and no quantitative C(K) relation is asserted.
TurningReport certify_against_bound(const Curve& curve, const BoundReport& bound);

}  // namespace qlines
