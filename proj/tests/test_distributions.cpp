#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "projdepth/distributions.hpp"
#include "projdepth/exact.hpp"

using namespace projdepth;

TEST_CASE("skewed normal with delta = 0 is marginally standard normal") {
    RngStream rng(91);
    DistributionSpec spec{Family::SkewNormal, 2, 0.0};
    const Dataset data = generate_sample(spec, 10000, rng);
    for (int j = 0; j < 2; ++j) {
        std::vector<double> col(10000);
        for (int i = 0; i < 10000; ++i)
            col[static_cast<size_t>(i)] = data.rows()(i, j);
        CHECK(testing::ks_std_normal(std::move(col)) < 0.02);
    }
}

TEST_CASE("skewed normal with the default delta is skewed in the first axis") {
    RngStream rng(92);
    const Dataset data = generate_sample(DistributionSpec::make(Family::SkewNormal, 3),
                                         20000, rng);
    double m0 = 0, m1 = 0;
    for (int i = 0; i < 20000; ++i) {
        m0 += data.rows()(i, 0);
        m1 += data.rows()(i, 1);
    }
    m0 /= 20000;
    m1 /= 20000;
    CHECK(m0 > 0.5); // E X_1 = delta/sqrt(1+delta^2) * sqrt(2/pi) ~ 0.78
    CHECK(std::abs(m1) < 0.05);
}

TEST_CASE("uniform support and exponential positivity/mean") {
    RngStream rng(93);
    const Dataset u = generate_sample(DistributionSpec::make(Family::Uniform01, 4),
                                      5000, rng);
    CHECK(u.rows().minCoeff() >= 0.0);
    CHECK(u.rows().maxCoeff() <= 1.0);

    const Dataset e = generate_sample(DistributionSpec::make(Family::Exponential, 2),
                                      10000, rng);
    CHECK(e.rows().minCoeff() > 0.0);
    CHECK(std::abs(e.rows().mean() - 1.0) < 0.04);
}

TEST_CASE("normal sample covariance is close to the identity") {
    RngStream rng(94);
    const Dataset data = generate_sample(DistributionSpec::make(Family::Normal, 3),
                                         100000, rng);
    const Vector mean = data.mean();
    const Matrix centered = data.rows().rowwise() - mean.transpose();
    const Matrix cov = centered.transpose() * centered / 100000.0;
    CHECK((cov - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 0.03);
}

TEST_CASE("student draws are heavier tailed than the normal") {
    RngStream rng(95);
    const int n = 20000;
    const auto tail_share = [&](Family f) {
        const Dataset d = generate_sample(DistributionSpec::make(f, 1), n, rng);
        int far = 0;
        for (int i = 0; i < n; ++i)
            if (std::abs(d.rows()(i, 0)) > 3.0)
                ++far;
        return static_cast<double>(far) / n;
    };
    const double normal_share = tail_share(Family::Normal);
    const double t5_share = tail_share(Family::T5);
    const double cauchy_share = tail_share(Family::Cauchy);
    CHECK(t5_share > normal_share);
    CHECK(cauchy_share > t5_share);
}

TEST_CASE("pick_z: full-sample average, determinism, strictly positive depth") {
    RngStream rng(96);
    const Dataset small = generate_sample(DistributionSpec::make(Family::Normal, 3),
                                          10, rng);
    RngStream zr(1);
    const Vector z = pick_z(small, zr);
    CHECK((z - small.mean()).cwiseAbs().maxCoeff() <= 1e-12);

    const Dataset data = generate_sample(DistributionSpec::make(Family::Normal, 3),
                                         60, rng);
    RngStream za(5), zb(5);
    CHECK(pick_z(data, za) == pick_z(data, zb));
    CHECK(exact_zonoid(pick_z(data, za), data) > 0.0);
}
