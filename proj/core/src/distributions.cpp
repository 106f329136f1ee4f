#include "projdepth/distributions.hpp"

#include <cmath>

namespace projdepth {

std::string to_string(Family family) {
    switch (family) {
    case Family::Normal: return "normal";
    case Family::T5: return "t5";
    case Family::Cauchy: return "cauchy";
    case Family::SkewNormal: return "skewnormal";
    case Family::Uniform01: return "uniform";
    case Family::Exponential: return "exponential";
    }
    throw Error("unknown distribution family");
}

Family parse_family(const std::string& name) {
    if (name == "normal") return Family::Normal;
    if (name == "t5") return Family::T5;
    if (name == "cauchy") return Family::Cauchy;
    if (name == "skewnormal") return Family::SkewNormal;
    if (name == "uniform") return Family::Uniform01;
    if (name == "exponential") return Family::Exponential;
    throw Error("unknown distribution family: " + name);
}

namespace {

double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

} // namespace

Dataset generate_sample(const DistributionSpec& spec, int n, RngStream& rng) {
    if (n < 1)
        throw Error("generate_sample requires n >= 1");
    const Eigen::Index d = spec.dim;
    if (d < 1)
        throw DimensionMismatch("generate_sample requires d >= 1");
    Matrix rows(n, d);

    switch (spec.family) {
    case Family::Normal:
        for (int i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                rows(i, j) = rng.next_normal();
        break;
    case Family::T5:
    case Family::Cauchy: {
        const double nu = spec.family == Family::T5 ? 5.0 : 1.0;
        for (int i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < d; ++j)
                rows(i, j) = rng.next_normal();
            const double chi2 = 2.0 * rng.next_gamma(nu / 2.0); // chi^2_nu
            rows.row(i) /= std::sqrt(chi2 / nu);
        }
        break;
    }
    case Family::SkewNormal:
        for (int i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < d; ++j)
                rows(i, j) = rng.next_normal();
            // delta^T Z with delta = (delta1, 0, ..., 0)
            const double dz = spec.skew_delta1 * rows(i, 0);
            const double u = rng.next_unit();
            if (u > std_normal_cdf(dz))
                rows.row(i) = -rows.row(i);
        }
        break;
    case Family::Uniform01:
        for (int i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                rows(i, j) = rng.next_unit();
        break;
    case Family::Exponential:
        for (int i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                rows(i, j) = -std::log(rng.next_unit_pos());
        break;
    }
    return Dataset(std::move(rows));
}

Vector pick_z(const Dataset& data, RngStream& rng) {
    const int n = static_cast<int>(data.size());
    const int k = std::min(10, n);
    const std::vector<int> idx = rnd_subset(k, n, rng);
    Vector z = Vector::Zero(data.dim());
    for (int i : idx)
        z += data.rows().row(i).transpose();
    return z / static_cast<double>(k);
}

} // namespace projdepth
