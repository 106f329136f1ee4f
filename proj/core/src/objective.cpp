#include "projdepth/objective.hpp"

namespace projdepth {

UnivariateSample project(const Dataset& data, const Direction& p) {
    if (data.dim() != p.dim())
        throw DimensionMismatch("project: dataset and direction dimensions differ");
    const Vector y = data.rows() * p.vec();
    return UnivariateSample(std::vector<double>(y.data(), y.data() + y.size()));
}

double project_point(const Vector& z, const Direction& p) {
    if (z.size() != p.dim())
        throw DimensionMismatch("project_point: dimension mismatch");
    return p.vec().dot(z);
}

double projected_depth(DepthNotion notion, const Vector& z, const Dataset& data,
                       const Direction& p, EvalCounter& counter) {
    if (counter.exhausted())
        throw BudgetExhausted();
    const UnivariateSample y = project(data, p);
    const double zeta = project_point(z, p);
    const double depth = univariate_depth(notion, zeta, y);
    ++counter.used;
    return depth;
}

} // namespace projdepth
