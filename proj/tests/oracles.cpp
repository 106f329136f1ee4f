#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "projdepth/univariate.hpp"

namespace projdepth::testing {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Greedy trimmed bounds: cap each weight at 1/(n*alpha), stack the cap on the
// extreme values until the unit mass is spent.
std::pair<double, double> trimmed_interval(const std::vector<double>& sorted,
                                           double alpha) {
    const auto n = static_cast<double>(sorted.size());
    const double cap = 1.0 / (n * alpha);
    double hi = 0.0, lo = 0.0;
    double mass = 1.0;
    for (size_t i = sorted.size(); i-- > 0 && mass > 0.0;) {
        const double w = std::min(cap, mass);
        hi += w * sorted[i];
        mass -= w;
    }
    mass = 1.0;
    for (size_t i = 0; i < sorted.size() && mass > 0.0; ++i) {
        const double w = std::min(cap, mass);
        lo += w * sorted[i];
        mass -= w;
    }
    return {lo, hi};
}

} // namespace

double oracle_zonoid1d(double zeta, std::vector<double> values) {
    std::sort(values.begin(), values.end());
    if (zeta < values.front() || zeta > values.back())
        return 0.0;
    const auto inside = [&](double alpha) {
        const auto [lo, hi] = trimmed_interval(values, alpha);
        return lo <= zeta && zeta <= hi;
    };
    if (inside(1.0))
        return 1.0;
    double good = 1e-14, bad = 1.0; // inside at good, outside at bad
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (good + bad);
        if (inside(mid))
            good = mid;
        else
            bad = mid;
    }
    return good;
}

double oracle_zonoid2d(const Vector& z, const Dataset& data) {
    const auto value_at = [&](double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        std::vector<double> proj(static_cast<size_t>(data.size()));
        for (Eigen::Index i = 0; i < data.size(); ++i)
            proj[static_cast<size_t>(i)] = c * data.rows()(i, 0) + s * data.rows()(i, 1);
        return oracle_zonoid1d(c * z[0] + s * z[1], std::move(proj));
    };

    const int grid = 2048;
    double best_angle = 0.0, best = value_at(0.0);
    for (int i = 1; i < grid; ++i) {
        const double a = i * kPi / grid;
        const double v = value_at(a);
        if (v < best) {
            best = v;
            best_angle = a;
        }
    }
    // golden refinement around the best grid angle
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = best_angle - kPi / grid, b = best_angle + kPi / grid;
    double lam = ratio * a + (1.0 - ratio) * b;
    double mu = (1.0 - ratio) * a + ratio * b;
    double f1 = value_at(lam), f2 = value_at(mu);
    best = std::min({best, f1, f2});
    while (b - a > 1e-12) {
        if (f1 > f2) {
            a = lam;
            lam = mu;
            f1 = f2;
            mu = (1.0 - ratio) * a + ratio * b;
            f2 = value_at(mu);
        } else {
            b = mu;
            mu = lam;
            f2 = f1;
            lam = ratio * a + (1.0 - ratio) * b;
            f1 = value_at(lam);
        }
        best = std::min({best, f1, f2});
    }
    return best;
}

double oracle_halfspace2d(const Vector& z, const Dataset& data) {
    const Eigen::Index n = data.size();
    const auto count_closed = [&](double px, double py) {
        Eigen::Index c = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double s = (data.rows()(i, 0) - z[0]) * px +
                             (data.rows()(i, 1) - z[1]) * py;
            if (s >= 0.0)
                ++c;
        }
        return c;
    };
    Eigen::Index best = n;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double dx = data.rows()(i, 0) - z[0];
        const double dy = data.rows()(i, 1) - z[1];
        if (dx == 0.0 && dy == 0.0)
            continue;
        const double theta = std::atan2(dy, dx);
        for (const double off : {kPi / 2, -kPi / 2, kPi / 2 + 1e-7, kPi / 2 - 1e-7,
                                 -kPi / 2 + 1e-7, -kPi / 2 - 1e-7}) {
            const double a = theta + off;
            best = std::min(best, count_closed(std::cos(a), std::sin(a)));
        }
    }
    return static_cast<double>(best) / static_cast<double>(n);
}

double oracle_apd1(double zeta, std::vector<double> values) {
    const auto median_of = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        const size_t n = v.size();
        return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    };
    const auto one_side = [&](const std::vector<double>& ys, double point) {
        const double med = median_of(ys);
        std::vector<double> devs;
        for (double y : ys)
            if (y - med > 0.0)
                devs.push_back(y - med);
        const double part = std::max(point - med, 0.0);
        if (devs.empty())
            return part <= 0.0 ? 1.0 : 0.0;
        return 1.0 / (1.0 + part / median_of(devs));
    };
    std::vector<double> negated(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        negated[i] = -values[i];
    return std::min(one_side(values, zeta), one_side(negated, -zeta));
}

double ks_uniform(std::vector<double> values, double hi) {
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    double ks = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        const double f = std::clamp(values[i] / hi, 0.0, 1.0);
        ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return ks;
}

double ks_std_normal(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    double ks = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        const double f = 0.5 * std::erfc(-values[i] / std::sqrt(2.0));
        ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return ks;
}

} // namespace projdepth::testing
