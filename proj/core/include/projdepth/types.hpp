#pragma once

#include <Eigen/Core>
#include <cmath>
#include <utility>

#include "projdepth/errors.hpp"

namespace projdepth {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A point on the unit sphere S^{d-1}, d >= 2. The Euclidean norm is
/// guaranteed to be 1 within 1e-12.
class Direction {
public:
    explicit Direction(Vector coords) : coords_(std::move(coords)) {
        if (coords_.size() < 2)
            throw DimensionMismatch("Direction requires dimension >= 2");
        const double norm = coords_.norm();
        if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12)
            throw Error("Direction is not a unit vector");
    }

    /// Normalizes an arbitrary nonzero vector onto the sphere.
    static Direction normalize(const Vector& v) {
        const double norm = v.norm();
        if (!std::isfinite(norm) || norm < 1e-12)
            throw Error("cannot normalize a (numerically) zero vector");
        return Direction(Vector(v / norm));
    }

    /// The j-th canonical basis vector e_j (0-based) as a direction.
    static Direction axis(Eigen::Index d, Eigen::Index j) {
        Vector v = Vector::Zero(d);
        v[j] = 1.0;
        return Direction(std::move(v));
    }

    const Vector& vec() const { return coords_; }
    Eigen::Index dim() const { return coords_.size(); }
    double operator[](Eigen::Index i) const { return coords_[i]; }

private:
    Vector coords_;
};

/// A sample of n >= 2 observations in R^d, one per row. All entries finite.
class Dataset {
public:
    explicit Dataset(Matrix rows) : rows_(std::move(rows)) {
        if (rows_.rows() < 2 || rows_.cols() < 1)
            throw DimensionMismatch("Dataset requires n >= 2 rows and d >= 1 columns");
        if (!rows_.allFinite())
            throw Error("Dataset contains non-finite entries");
    }

    const Matrix& rows() const { return rows_; }
    Eigen::Index size() const { return rows_.rows(); }
    Eigen::Index dim() const { return rows_.cols(); }

    Vector mean() const { return rows_.colwise().mean().transpose(); }

private:
    Matrix rows_;
};

} // namespace projdepth
