#pragma once

#include "projdepth/types.hpp"
#include "projdepth/univariate.hpp"

namespace projdepth {

/// Budget of univariate depth evaluations granted to one optimization run.
/// Single-owner mutable state: one counter per run, never shared.
struct EvalCounter {
    int limit = 0;
    int used = 0;

    bool exhausted() const { return used >= limit; }
};

/// Projections <p, x_i> of all sample points onto p. O(n*d).
UnivariateSample project(const Dataset& data, const Direction& p);

/// Projection <p, z> of a single point.
double project_point(const Vector& z, const Direction& p);

/// One evaluation of the objective phi_{z,X}(p): project, apply the kernel of
/// `notion`, and charge the counter by exactly one. Throws BudgetExhausted
/// (before evaluating) when the counter is already at its limit.
double projected_depth(DepthNotion notion, const Vector& z, const Dataset& data,
                       const Direction& p, EvalCounter& counter);

} // namespace projdepth
