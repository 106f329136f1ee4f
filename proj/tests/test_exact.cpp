#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "projdepth/exact.hpp"
#include "projdepth/distributions.hpp"
#include "projdepth/objective.hpp"
#include "projdepth/rng.hpp"

using namespace projdepth;

namespace {

Dataset random_data(Eigen::Index n, Eigen::Index d, RngStream& rng) {
    Matrix m(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            m(i, j) = rng.next_normal();
    return Dataset(std::move(m));
}

Dataset cross_data() {
    Matrix m(4, 2);
    m << 1, 0, -1, 0, 0, 1, 0, -1;
    return Dataset(std::move(m));
}

} // namespace

TEST_CASE("exact_mahalanobis basics") {
    RngStream rng(51);
    const Dataset data = random_data(40, 3, rng);
    CHECK(exact_mahalanobis(data.mean(), data) == doctest::Approx(1.0));

    // d = 1 closed form must coincide with the univariate kernel
    Matrix one(3, 1);
    one << -1, 0, 1;
    const Dataset line(one);
    Vector z1(1);
    z1 << 1.0;
    CHECK(exact_mahalanobis(z1, line) == doctest::Approx(0.4));

    Matrix flat(5, 2); // all points on a line: singular covariance
    flat << 0, 0, 1, 1, 2, 2, 3, 3, 4, 4;
    const Dataset degenerate(flat);
    Vector z2(2);
    z2 << 1, 1;
    CHECK_THROWS_AS(exact_mahalanobis(z2, degenerate), SingularCovariance);
}

TEST_CASE("Mahalanobis projection property: analytic argmin and MC upper bounds") {
    RngStream rng(52);
    const Dataset data = random_data(20, 5, rng);
    Vector z(5);
    for (int i = 0; i < 5; ++i)
        z[i] = 0.7 * rng.next_normal();
    const double exact = exact_mahalanobis(z, data);

    // minimizing direction is S^{-1}(z - mean): equality within 1e-12
    const Vector mean = data.mean();
    const Matrix centered = data.rows().rowwise() - mean.transpose();
    const Matrix cov = centered.transpose() * centered / static_cast<double>(data.size());
    const Vector pstar = cov.ldlt().solve(z - mean);
    EvalCounter counter{2000000, 0};
    const double at_star = projected_depth(DepthNotion::Mahalanobis, z, data,
                                           Direction::normalize(pstar), counter);
    CHECK(std::abs(at_star - exact) <= 1e-12);

    // every random projection is an upper bound
    double mc_min = 1.0;
    for (int i = 0; i < 1000000; ++i)
        mc_min = std::min(mc_min, projected_depth(DepthNotion::Mahalanobis, z, data,
                                                  rnd_sphere(5, rng), counter));
    CHECK(mc_min >= exact - 1e-12);
    CHECK(mc_min - exact <= 5e-3); // seeded; observed gap is ~2e-4
}

TEST_CASE("exact_zonoid basics") {
    RngStream rng(53);
    const Dataset data = random_data(30, 4, rng);
    CHECK(exact_zonoid(data.mean(), data) == doctest::Approx(1.0).epsilon(1e-9));

    const Dataset cross = cross_data();
    Vector vertex(2);
    vertex << 1, 0;
    CHECK(exact_zonoid(vertex, cross) == doctest::Approx(0.25).epsilon(1e-9));
    Vector outside(2);
    outside << 2, 2;
    CHECK(exact_zonoid(outside, cross) == 0.0);
}

TEST_CASE("exact_zonoid against the grid-refined projection oracle, d = 2") {
    RngStream rng(54);
    for (int rep = 0; rep < 20; ++rep) {
        const Dataset data = random_data(8, 2, rng);
        const Vector z = pick_z(data, rng);
        const double lp = exact_zonoid(z, data);
        const double oracle = testing::oracle_zonoid2d(z, data);
        CHECK(std::abs(lp - oracle) <= 1e-6);
    }
}

TEST_CASE("zd1 equals exact_zonoid on 1-D instances") {
    RngStream rng(55);
    for (int rep = 0; rep < 500; ++rep) {
        const int n = 2 + static_cast<int>(rng.next_below(15));
        Matrix m(n, 1);
        for (int i = 0; i < n; ++i)
            m(i, 0) = rng.next_normal();
        const Dataset data(m);
        const UnivariateSample y(
            std::vector<double>(m.data(), m.data() + n));
        Vector z(1);
        z << y.mean() + (rng.next_unit() - 0.4) * 2.0;
        CHECK(std::abs(zd1(z[0], y) - exact_zonoid(z, data)) <= 1e-9);
    }
}

TEST_CASE("exact_halfspace_2d: cross, outside point, brute-force agreement") {
    const Dataset cross = cross_data();
    CHECK(exact_halfspace_2d(Vector::Zero(2), cross) == 0.5);
    Vector z(2);
    z << 3, 3;
    CHECK(exact_halfspace_2d(z, cross) == 0.0);

    RngStream rng(56);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 7 + static_cast<int>(rng.next_below(20));
        const Dataset data = random_data(n, 2, rng);
        const Vector q = rep % 2 == 0 ? Vector(data.rows().row(0).transpose())
                                      : pick_z(data, rng);
        CHECK(exact_halfspace_2d(q, data) ==
              doctest::Approx(testing::oracle_halfspace2d(q, data)).epsilon(1e-12));
    }
}

TEST_CASE("exact_halfspace_2d counts coincident points in every halfspace") {
    Matrix m(5, 2);
    m << 0, 0, 0, 0, 1, 0, 0, 1, -1, -1;
    const Dataset data(m);
    const Vector z = Vector::Zero(2);
    // two coincident points always counted; of the rest at most one can be
    // excluded... verified against the brute-force oracle
    CHECK(exact_halfspace_2d(z, data) ==
          doctest::Approx(testing::oracle_halfspace2d(z, data)));
}

TEST_CASE("exact_halfspace_2d is affine invariant") {
    RngStream rng(57);
    Matrix a(2, 2);
    a << 2, 1, 0.5, -1;
    Vector b(2);
    b << 3, -2;
    for (int rep = 0; rep < 50; ++rep) {
        const Dataset data = random_data(25, 2, rng);
        const Vector z = pick_z(data, rng);
        Matrix tm = (a * data.rows().transpose()).transpose();
        tm.rowwise() += b.transpose();
        const Dataset tdata(tm);
        const Vector tz = a * z + b;
        CHECK(exact_halfspace_2d(z, data) == exact_halfspace_2d(tz, tdata));
    }
}
