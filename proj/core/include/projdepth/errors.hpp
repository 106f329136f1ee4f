#pragma once

#include <stdexcept>
#include <string>

namespace projdepth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch final : Error {
    using Error::Error;
};

/// A great circle through x and y is requested but y is (numerically) +/-x.
struct DegenerateGeodesic final : Error {
    using Error::Error;
};

/// The coordinatewise average of sphere points is (numerically) the zero vector.
struct DegenerateMean final : Error {
    using Error::Error;
};

/// The evaluation budget does not admit even two subdivisions per angle.
struct GridTooCoarse final : Error {
    using Error::Error;
};

/// Fewer data points than the algorithm needs (e.g. n < d+1 simplex vertices).
struct DataTooSmall final : Error {
    using Error::Error;
};

struct SingularCovariance final : Error {
    using Error::Error;
};

struct LpNumericalFailure final : Error {
    using Error::Error;
};

/// Relative errors are undefined when an exact depth is (numerically) zero.
struct ExactNonPositive final : Error {
    using Error::Error;
};

/// Raised by the objective when the evaluation counter is already at its
/// limit. Signals the surrounding optimizer to stop; not a failure.
struct BudgetExhausted final : Error {
    BudgetExhausted() : Error("evaluation budget exhausted") {}
};

} // namespace projdepth
