#pragma once

#include "projdepth/types.hpp"

namespace projdepth {

// Exact multivariate depths, used as oracles for the sphere optimizers.

/// Closed-form Mahalanobis depth (1 + (z-mean)^T S^{-1} (z-mean))^{-1} with
/// covariance divisor n, via a symmetric positive-definite solve.
/// Throws SingularCovariance when S is not (numerically) invertible.
double exact_mahalanobis(const Vector& z, const Dataset& data);

/// Exact zonoid depth through a linear program: 1/(n t*) where t* minimizes
/// t over sum(lambda) = 1, X^T lambda = z, 0 <= lambda_i <= t. Returns 0 when
/// z lies outside the convex hull. Throws LpNumericalFailure if the solver
/// does not reach the 1e-9 feasibility tolerance.
double exact_zonoid(const Vector& z, const Dataset& data);

/// Exact bivariate halfspace (Tukey) depth by an angular sweep over the
/// directions of x_i - z, O(n log n). Always a multiple of 1/n; sample points
/// equal to z are counted in every closed halfspace.
double exact_halfspace_2d(const Vector& z, const Dataset& data);

} // namespace projdepth
