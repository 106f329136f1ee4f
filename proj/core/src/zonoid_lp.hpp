#pragma once

#include "projdepth/types.hpp"

namespace projdepth::detail {

struct ZonoidLpResult {
    double total_weight = 0.0; // optimal sum of weights, in {0} union [1, n]
    bool converged = false;
};

/// Maximizes sum(nu) subject to cols * nu = 0 and 0 <= nu_i <= 1, where
/// column i of `cols` is x_i - z. The zonoid depth is total_weight / n:
/// scaling an optimal nu by its sum gives convex weights lambda with
/// max lambda_i <= 1 / sum(nu), and conversely.
///
/// Dense bounded-variable primal simplex. nu = 0 is feasible (the right-hand
/// side is zero), so no phase-1 is needed; the start basis consists of d
/// artificial columns fixed to [0, 0] which are priced out and never re-enter.
/// Pivoting is deterministic: largest reduced cost with smallest-index
/// tie-break, falling back to Bland's rule after a run of degenerate steps so
/// cycling is impossible.
ZonoidLpResult zonoid_lp_max_weight(const Matrix& cols);

} // namespace projdepth::detail
