#pragma once

#include <cstdint>
#include <vector>

#include "projdepth/types.hpp"

namespace projdepth {

/// Seeded deterministic random stream (xoshiro256++ state, seeded through
/// splitmix64). Identical seeds produce identical sequences; independent
/// substreams for parallel replications are derived with substream().
///
/// The variate recipes are pinned so that experiments replay bit-for-bit:
/// uniforms take the top 53 bits of the generator output, normals come in
/// Box-Muller pairs (the second of a pair is cached), gammas use the
/// Marsaglia-Tsang rejection method with the u^(1/alpha) boost for alpha < 1.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    /// Stream with state derived from (seed, a, b) by splitmix64 mixing.
    /// Distinct (a, b) pairs give independent streams under the same seed.
    RngStream substream(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();
    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit();
    /// Uniform on (0, 1]; safe as a logarithm argument.
    double next_unit_pos();
    /// Uniform integer in [0, n), unbiased (rejection sampling).
    std::uint64_t next_below(std::uint64_t n);
    /// Standard normal.
    double next_normal();
    /// Gamma(alpha, 1), alpha > 0.
    double next_gamma(double alpha);

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

/// Uniform direction on S^{d-1}, d >= 2: d standard normals, normalized.
Direction rnd_sphere(Eigen::Index d, RngStream& rng);

/// Draw from the spherical cap of radius eps (0 < eps <= pi/2) around p.
/// The great-circle distance to p is uniform on [0, eps]; the cross-section
/// is uniform on the corresponding small sphere.
Direction rnd_spherical_cap(const Direction& p, double eps, RngStream& rng);

/// Symmetric Dirichlet weights: d independent Gamma(alpha, 1) draws,
/// normalized to sum to one.
Vector rnd_dirichlet_sym(Eigen::Index d, double alpha, RngStream& rng);

/// k distinct indices in [0, n), uniform over k-subsets (partial
/// Fisher-Yates); the returned order is the draw order.
std::vector<int> rnd_subset(int k, int n, RngStream& rng);

} // namespace projdepth
