#include "projdepth/exact.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <vector>

#include "zonoid_lp.hpp"

namespace projdepth {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double exact_mahalanobis(const Vector& z, const Dataset& data) {
    if (z.size() != data.dim())
        throw DimensionMismatch("exact_mahalanobis: dimension mismatch");
    const Eigen::Index n = data.size();
    const Vector mean = data.mean();
    const Matrix centered = data.rows().rowwise() - mean.transpose();
    const Matrix cov = centered.transpose() * centered / static_cast<double>(n);

    Eigen::LLT<Matrix> llt(cov);
    if (llt.info() != Eigen::Success)
        throw SingularCovariance("covariance matrix is not positive definite");
    const Vector delta = z - mean;
    const Vector w = llt.solve(delta);
    const double scale = std::max(1.0, delta.cwiseAbs().maxCoeff());
    if ((cov * w - delta).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw SingularCovariance("covariance solve failed the residual check");
    const double q = std::max(0.0, delta.dot(w));
    return 1.0 / (1.0 + q);
}

double exact_zonoid(const Vector& z, const Dataset& data) {
    if (z.size() != data.dim())
        throw DimensionMismatch("exact_zonoid: dimension mismatch");
    const Eigen::Index n = data.size();
    Matrix cols = data.rows().transpose();
    cols.colwise() -= z;
    const detail::ZonoidLpResult lp = detail::zonoid_lp_max_weight(cols);
    if (!lp.converged)
        throw LpNumericalFailure("zonoid LP did not converge to feasibility tolerance");
    if (lp.total_weight < 0.5) // no nonzero feasible weight: z outside the hull
        return 0.0;
    return std::min(1.0, lp.total_weight / static_cast<double>(n));
}

double exact_halfspace_2d(const Vector& z, const Dataset& data) {
    if (data.dim() != 2)
        throw DimensionMismatch("exact_halfspace_2d requires d = 2");
    if (z.size() != 2)
        throw DimensionMismatch("exact_halfspace_2d: point dimension mismatch");
    const Eigen::Index n = data.size();

    std::vector<double> angles;
    angles.reserve(static_cast<size_t>(n));
    Eigen::Index coincident = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double dx = data.rows()(i, 0) - z[0];
        const double dy = data.rows()(i, 1) - z[1];
        if (dx == 0.0 && dy == 0.0)
            ++coincident;
        else
            angles.push_back(std::atan2(dy, dx));
    }
    const auto m = static_cast<Eigen::Index>(angles.size());
    if (m == 0)
        return 1.0;
    std::sort(angles.begin(), angles.end());

    // The minimal closed-halfspace count equals m minus the maximal number of
    // direction angles inside an open semicircle; that maximum is attained on
    // a half-open arc [theta_i, theta_i + pi).
    Eigen::Index best = 0;
    size_t j = 0;
    for (size_t i = 0; i < angles.size(); ++i) {
        if (j < i)
            j = i;
        while (j < i + angles.size() &&
               angles[j % angles.size()] + (j >= angles.size() ? 2.0 * kPi : 0.0) <
                   angles[i] + kPi)
            ++j;
        best = std::max<Eigen::Index>(best, static_cast<Eigen::Index>(j - i));
    }
    return static_cast<double>(coincident + m - best) / static_cast<double>(n);
}

} // namespace projdepth
