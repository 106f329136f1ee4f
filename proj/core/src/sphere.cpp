#include "projdepth/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace projdepth {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_same_dim(const Direction& u, const Direction& v) {
    if (u.dim() != v.dim())
        throw DimensionMismatch("directions have different dimensions");
}

struct StableAngle {
    double alpha; // great-circle distance in [0, pi]
    double sina;  // sin(alpha), obtained as a byproduct
};

// alpha = 2*asin(|x-y|/2) for <x,y> >= 0, pi - 2*asin(|x+y|/2) otherwise.
StableAngle stable_angle(const Vector& x, const Vector& y, double dot) {
    StableAngle r;
    if (dot >= 0.0) {
        const double sum = (x - y).squaredNorm();
        r.alpha = 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(sum)));
        r.sina = std::sqrt(std::max(0.0, sum * (1.0 + dot) / 2.0));
    } else {
        const double sum = (x + y).squaredNorm();
        r.alpha = kPi - 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(sum)));
        r.sina = std::sqrt(std::max(0.0, sum * (1.0 - dot) / 2.0));
    }
    return r;
}

} // namespace

double great_circle_distance(const Direction& u, const Direction& v) {
    check_same_dim(u, v);
    const double dot = u.vec().dot(v.vec());
    return stable_angle(u.vec(), v.vec(), dot).alpha;
}

Vector householder_apply(const Vector& x, const Direction& p) {
    if (x.size() != p.dim())
        throw DimensionMismatch("householder_apply: dimension mismatch");
    if (std::abs(p[0] - 1.0) <= 1e-12)
        return x;
    const double lambda = (p.vec().dot(x) - x[0]) / (1.0 - p[0]);
    Vector r = x - lambda * p.vec();
    r[0] += lambda;
    return r;
}

Direction great_circle_point(const Direction& x, const Direction& y, double t,
                             bool bound) {
    check_same_dim(x, y);
    const double dot = x.vec().dot(y.vec());
    if (1.0 - std::abs(dot) <= 1e-12)
        throw DegenerateGeodesic("great circle through nearly parallel points");
    const StableAngle a = stable_angle(x.vec(), y.vec(), dot);

    double gx = (1.0 - t) * a.alpha;
    double gy = t * a.alpha;
    if (bound && std::abs(gy) > kPi / 2.0) {
        gy = std::copysign(kPi / 2.0, gy);
        gx = a.alpha - gy;
    }
    const Vector z =
        (std::sin(gx) / a.sina) * x.vec() + (std::sin(gy) / a.sina) * y.vec();
    return Direction::normalize(z);
}

Direction tangent_frame_direction(const Direction& u, Eigen::Index j) {
    const Eigen::Index d = u.dim();
    if (j < 0 || j >= d - 1)
        throw std::out_of_range("tangent_frame_direction: index out of range");
    // Continuous extension at the singular pole u = e_d.
    if (std::abs(u[d - 1] - 1.0) <= 1e-9)
        return Direction::axis(d, j);

    const double denom = 1.0 - u[d - 1];
    const double uj = u[j];
    Vector p(d);
    for (Eigen::Index i = 0; i + 1 < d; ++i)
        p[i] = -uj * u[i] / denom;
    p[j] += 1.0;
    p[d - 1] = uj;
    return Direction(std::move(p));
}

Direction naive_mean(const std::vector<Direction>& points) {
    if (points.empty())
        throw Error("naive_mean of an empty set");
    const Eigen::Index d = points.front().dim();
    Vector sum = Vector::Zero(d);
    for (const Direction& p : points) {
        if (p.dim() != d)
            throw DimensionMismatch("naive_mean: mixed dimensions");
        sum += p.vec();
    }
    const Vector avg = sum / static_cast<double>(points.size());
    if (avg.norm() <= 1e-12)
        throw DegenerateMean("average of sphere points is the zero vector");
    return Direction::normalize(avg);
}

namespace {

// Direction from generalized spherical coordinates:
// x_1 = cos(a_1), x_i = sin(a_1)..sin(a_{i-1}) cos(a_i), x_d = sin(a_1)..sin(a_{d-1}).
Vector from_angles(const std::vector<double>& angles) {
    const Eigen::Index d = static_cast<Eigen::Index>(angles.size()) + 1;
    Vector x(d);
    double run = 1.0;
    for (Eigen::Index i = 0; i + 1 < d; ++i) {
        x[i] = run * std::cos(angles[static_cast<size_t>(i)]);
        run *= std::sin(angles[static_cast<size_t>(i)]);
    }
    x[d - 1] = run;
    return x;
}

} // namespace

std::vector<Direction> spherical_grid(Eigen::Index d, int budget) {
    if (d < 2)
        throw DimensionMismatch("spherical_grid requires d >= 2");
    if (budget < 1)
        throw Error("spherical_grid requires a positive budget");

    std::vector<Direction> grid;
    if (d == 2) {
        grid.reserve(static_cast<size_t>(budget));
        for (int i = 0; i < budget; ++i) {
            const double phi = static_cast<double>(i) * kPi / budget;
            Vector v(2);
            v << std::cos(phi), std::sin(phi);
            grid.emplace_back(Direction::normalize(v));
        }
        return grid;
    }

    const Eigen::Index num_angles = d - 1;
    // Largest k with k^(d-1) <= budget, computed without floating-point slop.
    int k = 1;
    while (true) {
        double pw = 1.0;
        for (Eigen::Index i = 0; i < num_angles; ++i)
            pw *= static_cast<double>(k + 1);
        if (pw <= static_cast<double>(budget))
            ++k;
        else
            break;
    }
    if (k < 2)
        throw GridTooCoarse("budget admits fewer than two subdivisions per angle");

    // Angle axes: polar closed on [0, pi/2], middle closed on [0, pi],
    // last half-open on [0, 2pi) to avoid duplicate antipodal points.
    std::vector<std::vector<double>> axes(static_cast<size_t>(num_angles));
    for (Eigen::Index a = 0; a < num_angles; ++a) {
        std::vector<double>& vals = axes[static_cast<size_t>(a)];
        vals.resize(static_cast<size_t>(k));
        if (a == num_angles - 1) {
            for (int i = 0; i < k; ++i)
                vals[static_cast<size_t>(i)] = i * 2.0 * kPi / k;
        } else {
            const double hi = (a == 0) ? kPi / 2.0 : kPi;
            for (int i = 0; i < k; ++i)
                vals[static_cast<size_t>(i)] = i * hi / (k - 1);
        }
    }

    std::vector<double> angles(static_cast<size_t>(num_angles), 0.0);
    std::vector<int> idx(static_cast<size_t>(num_angles), 0);
    size_t total = 1;
    for (Eigen::Index a = 0; a < num_angles; ++a)
        total *= static_cast<size_t>(k);
    grid.reserve(total);
    for (size_t it = 0; it < total; ++it) {
        for (Eigen::Index a = 0; a < num_angles; ++a)
            angles[static_cast<size_t>(a)] =
                axes[static_cast<size_t>(a)][static_cast<size_t>(idx[static_cast<size_t>(a)])];
        grid.emplace_back(Direction::normalize(from_angles(angles)));
        // odometer increment, last axis fastest
        for (Eigen::Index a = num_angles - 1; a >= 0; --a) {
            if (++idx[static_cast<size_t>(a)] < k)
                break;
            idx[static_cast<size_t>(a)] = 0;
        }
    }
    return grid;
}

} // namespace projdepth
