#pragma once

#include <vector>

#include "projdepth/types.hpp"

namespace projdepth {

// Deterministic primitives of the unit sphere S^{d-1}. All functions here are
// pure; angles are in radians.

/// Length of the shorter great-circle arc between u and v, in [0, pi].
/// Computed through the arcsin branches, which stay accurate where
/// arccos of the dot product does not (nearly parallel or antipodal inputs).
double great_circle_distance(const Direction& u, const Direction& v);

/// Applies to x the Householder reflection that maps e_1 to p.
/// For p = e_1 (within 1e-12 in the first coordinate) x is returned unchanged.
Vector householder_apply(const Vector& x, const Direction& p);

/// Point on the great circle through x and y at parameter t: the spherical
/// analogue of x + t(y - x), i.e. at great-circle distance t*d_g(x,y) from x.
/// With `bound` set, movement past the hemisphere boundary (|t*alpha| > pi/2)
/// is clamped to the boundary.
Direction great_circle_point(const Direction& x, const Direction& y, double t,
                             bool bound = false);

/// The j-th (0-based, j in [0, d-2]) column of the Householder matrix mapping
/// u to e_d. Together with u these columns form an orthonormal basis of R^d,
/// so they span the tangent space of the sphere at u. For u = e_d (within
/// 1e-9 in the last coordinate) the analytic limit e_j is returned.
Direction tangent_frame_direction(const Direction& u, Eigen::Index j);

/// Coordinatewise average of the points, renormalized to unit length.
/// Throws DegenerateMean when the average is (numerically) zero.
Direction naive_mean(const std::vector<Direction>& points);

/// Deterministic grid of at most `budget` directions from generalized
/// spherical coordinates, restricted to a hemisphere. For d >= 3 a product
/// grid with k = floor(budget^(1/(d-1))) values per angle is used
/// (polar angle in [0, pi/2], middle angles in [0, pi], last angle in
/// [0, 2pi)); throws GridTooCoarse when k < 2. For d = 2 the angles are
/// i*pi/budget, i = 0..budget-1, one point per line through the origin.
std::vector<Direction> spherical_grid(Eigen::Index d, int budget);

} // namespace projdepth
