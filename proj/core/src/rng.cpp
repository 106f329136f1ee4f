#include "projdepth/rng.hpp"

#include <cmath>
#include <numeric>

#include "projdepth/sphere.hpp"

namespace projdepth {

namespace {

constexpr double kPi = 3.14159265358979323846;

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t x) {
    std::uint64_t s = x;
    return splitmix_next(s);
}

} // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& w : state_)
        w = splitmix_next(s);
}

RngStream RngStream::substream(std::uint64_t a, std::uint64_t b) const {
    // seed' = mix(mix(seed ^ mix(a)) ^ mix(b)); documented so experiments can
    // be reproduced outside this library.
    std::uint64_t derived = mix(mix(seed_ ^ mix(a)) ^ mix(b));
    return RngStream(derived);
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_unit_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

double RngStream::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double r = std::sqrt(-2.0 * std::log(next_unit_pos()));
    const double theta = 2.0 * kPi * next_unit();
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

double RngStream::next_gamma(double alpha) {
    if (!(alpha > 0.0))
        throw Error("next_gamma requires alpha > 0");
    if (alpha < 1.0) {
        const double g = next_gamma(alpha + 1.0);
        return g * std::pow(next_unit_pos(), 1.0 / alpha);
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_unit_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x)
            return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

namespace {

// Normals filled into a raw vector and normalized; also serves the S^0 and
// S^1 cross-section blocks inside the cap sampler, hence no d >= 2 check.
Vector raw_unit_vector(Eigen::Index d, RngStream& rng) {
    Vector x(d);
    for (;;) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            x[i] = rng.next_normal();
            s += x[i] * x[i];
        }
        if (s > 0.0) {
            x /= std::sqrt(s);
            return x;
        }
        // all-zero draw has measure zero; resample
    }
}

} // namespace

Direction rnd_sphere(Eigen::Index d, RngStream& rng) {
    if (d < 2)
        throw DimensionMismatch("rnd_sphere requires d >= 2");
    return Direction(raw_unit_vector(d, rng));
}

Direction rnd_spherical_cap(const Direction& p, double eps, RngStream& rng) {
    if (!(eps > 0.0) || eps > kPi / 2.0 + 1e-12)
        throw Error("cap radius must lie in (0, pi/2]");
    const Eigen::Index d = p.dim();
    const double phi = eps * rng.next_unit(); // polar angle ~ U[0, eps)
    Vector x(d);
    x[0] = std::cos(phi);
    const double r = std::sqrt(std::max(0.0, 1.0 - x[0] * x[0]));
    x.tail(d - 1) = r * raw_unit_vector(d - 1, rng);
    return Direction::normalize(householder_apply(x, p));
}

Vector rnd_dirichlet_sym(Eigen::Index d, double alpha, RngStream& rng) {
    if (d < 1)
        throw DimensionMismatch("rnd_dirichlet_sym requires d >= 1");
    if (!(alpha > 0.0))
        throw Error("Dirichlet parameter must be positive");
    Vector g(d);
    for (;;) {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            g[i] = rng.next_gamma(alpha);
            sum += g[i];
        }
        if (sum > 0.0)
            return g / sum;
    }
}

std::vector<int> rnd_subset(int k, int n, RngStream& rng) {
    if (k < 1 || k > n)
        throw Error("rnd_subset requires 1 <= k <= n");
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    pool.resize(static_cast<size_t>(k));
    return pool;
}

} // namespace projdepth
