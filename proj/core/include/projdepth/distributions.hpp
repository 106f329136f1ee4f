#pragma once

#include <string>

#include "projdepth/rng.hpp"
#include "projdepth/types.hpp"

namespace projdepth {

enum class Family { Normal, T5, Cauchy, SkewNormal, Uniform01, Exponential };

std::string to_string(Family family);
Family parse_family(const std::string& name);

/// Benchmark distribution: family, dimension, and (for the skewed normal)
/// the skewness vector, defaulting to (5, 0, ..., 0).
struct DistributionSpec {
    Family family = Family::Normal;
    Eigen::Index dim = 2;
    double skew_delta1 = 5.0; // first component of the skewness vector

    static DistributionSpec make(Family f, Eigen::Index d) {
        return DistributionSpec{f, d, 5.0};
    }
};

/// n i.i.d. rows from the given distribution. The Student t draws divide a
/// normal vector by sqrt(chi2_nu / nu) for spherical symmetry (nu = 5 and 1);
/// the skewed normal uses the conditional sign-flip construction; uniform and
/// unit-rate exponential entries are coordinatewise independent.
Dataset generate_sample(const DistributionSpec& spec, int n, RngStream& rng);

/// Average of min(10, n) sample rows drawn without replacement; always inside
/// the convex hull, so every depth of it is strictly positive.
Vector pick_z(const Dataset& data, RngStream& rng);

} // namespace projdepth
