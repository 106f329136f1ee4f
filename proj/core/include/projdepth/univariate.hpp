#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projdepth/errors.hpp"

namespace projdepth {

enum class DepthNotion {
    Mahalanobis,
    Zonoid,
    Halfspace,
    Projection,
    AsymProjection,
};

std::string to_string(DepthNotion notion);
DepthNotion parse_notion(const std::string& name);

/// A univariate data set (typically projections <p, x_i>). The sorted copy
/// and the mean are computed lazily on first use.
///
/// Median convention: average of the two central order statistics for even n.
class UnivariateSample {
public:
    explicit UnivariateSample(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& sorted() const;
    double mean() const;
    double median() const;

private:
    std::vector<double> values_;
    mutable std::optional<std::vector<double>> sorted_;
    mutable std::optional<double> mean_;
};

// The five univariate depth kernels. Each maps (zeta, sample) to [0, 1] and
// is invariant under affine maps y -> a*y + b, a != 0, of zeta and the sample
// jointly. Degenerate-spread conventions (zero variance / MAD / empty upper
// deviations): depth 1 at the center, 0 elsewhere.

/// Mahalanobis: (1 + (zeta - mean)^2 / s^2)^{-1} with variance divisor n.
double md1(double zeta, const UnivariateSample& y);

/// Halfspace (Tukey): min(#{y_i >= zeta}, #{y_i <= zeta}) / n. The two-sided
/// form makes minimizing over a hemisphere equivalent to the one-sided
/// definition over the full sphere. Always a multiple of 1/n.
double hd1(double zeta, const UnivariateSample& y);

/// Zonoid: sup{alpha in (0,1] : zeta inside the zonoid alpha-trimmed
/// interval}, with sup(empty) = 0. Solved exactly by inverting the
/// piecewise-linear trimmed-interval bounds over prefix sums of the sorted
/// sample, O(n log n).
double zd1(double zeta, const UnivariateSample& y);

/// Projection: (1 + |zeta - med| / MAD)^{-1}.
double pd1(double zeta, const UnivariateSample& y);

/// Asymmetric projection: min over both orientations sigma in {+1, -1} of
/// (1 + (sigma*zeta - med(sigma*Y))_+ / MAD+(sigma*Y))^{-1}, where MAD+ is the
/// median of the strictly positive deviations from the median. Evaluating
/// both signs keeps the kernel a genuine depth at d = 1, so the outer
/// minimization may stay restricted to a hemisphere.
double apd1(double zeta, const UnivariateSample& y);

double univariate_depth(DepthNotion notion, double zeta, const UnivariateSample& y);

} // namespace projdepth
