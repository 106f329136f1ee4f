#include <doctest.h>

#include <cmath>

#include "projdepth/rng.hpp"
#include "projdepth/sphere.hpp"

using namespace projdepth;

namespace {
constexpr double kPi = 3.14159265358979323846;

Direction dir2(double x, double y) {
    Vector v(2);
    v << x, y;
    return Direction::normalize(v);
}
} // namespace

TEST_CASE("great_circle_distance on canonical pairs") {
    const Direction e1 = Direction::axis(3, 0);
    const Direction e2 = Direction::axis(3, 1);
    Vector m = -e1.vec();
    CHECK(great_circle_distance(e1, e1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(great_circle_distance(e1, Direction(m)) == doctest::Approx(kPi));
    CHECK(great_circle_distance(e1, e2) == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(great_circle_distance(e1, dir2(1, 0)), DimensionMismatch);
}

TEST_CASE("great-circle distance: symmetry and chord identity") {
    RngStream rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Direction u = rnd_sphere(4, rng);
        const Direction v = rnd_sphere(4, rng);
        const double duv = great_circle_distance(u, v);
        CHECK(duv == great_circle_distance(v, u)); // exact
        CHECK(duv >= 0.0);
        CHECK(duv <= kPi);
        const double chord = (u.vec() - v.vec()).norm();
        CHECK(std::abs(chord - 2.0 * std::sin(duv / 2.0)) <= 1e-9);
    }
}

TEST_CASE("householder_apply maps e1 to p and guards p = e1") {
    const Direction e2 = dir2(0, 1);
    Vector e1(2);
    e1 << 1, 0;
    CHECK((householder_apply(e1, e2) - e2.vec()).norm() <= 1e-15);

    Vector x(2);
    x << 0.3, -0.8;
    CHECK(householder_apply(x, dir2(1, 0)) == x); // guard branch, unchanged

    Vector y(2);
    y << 0, 1; // traced by hand: lambda = 1, first coord picks it up
    const Vector r = householder_apply(y, e2);
    CHECK(r[0] == doctest::Approx(1.0));
    CHECK(r[1] == doctest::Approx(0.0));
}

TEST_CASE("householder involution and isometry") {
    RngStream rng(12);
    for (int i = 0; i < 1000; ++i) {
        const Direction p = rnd_sphere(5, rng);
        Vector x(5);
        for (int j = 0; j < 5; ++j)
            x[j] = 3.0 * rng.next_normal();
        const Vector once = householder_apply(x, p);
        CHECK(std::abs(once.norm() - x.norm()) <= 1e-12 * std::max(1.0, x.norm()));
        CHECK((householder_apply(once, p) - x).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("great_circle_point endpoints, midpoint and bound clamp") {
    const Direction e1 = dir2(1, 0);
    const Direction e2 = dir2(0, 1);
    const Direction mid = great_circle_point(e1, e2, 0.5);
    CHECK(mid[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(mid[1] == doctest::Approx(std::sqrt(0.5)));
    CHECK((great_circle_point(e1, e2, 0.0).vec() - e1.vec()).norm() <= 1e-12);
    CHECK((great_circle_point(e1, e2, 1.0).vec() - e2.vec()).norm() <= 1e-12);

    // |t*alpha| > pi/2 clamps to the hemisphere boundary, which here is e2
    const Direction clamped = great_circle_point(e1, e2, 1.5, true);
    CHECK((clamped.vec() - e2.vec()).norm() <= 1e-12);
    // without the bound the point overshoots past e2
    const Direction overshot = great_circle_point(e1, e2, 1.5, false);
    CHECK(overshot[0] < -0.5);

    Vector anti = -e1.vec();
    CHECK_THROWS_AS(great_circle_point(e1, Direction(anti), 0.5), DegenerateGeodesic);
    CHECK_THROWS_AS(great_circle_point(e1, e1, 0.5), DegenerateGeodesic);
}

TEST_CASE("geodesic distance scaling d_g(x, gamma(t)) = t d_g(x, y)") {
    RngStream rng(13);
    for (int i = 0; i < 300; ++i) {
        const Direction x = rnd_sphere(4, rng);
        const Direction y = rnd_sphere(4, rng);
        const double dxy = great_circle_distance(x, y);
        if (dxy < 1e-6 || dxy > kPi - 1e-6)
            continue;
        for (const double t : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
            const Direction g = great_circle_point(x, y, t);
            CHECK(std::abs(g.vec().norm() - 1.0) <= 1e-10);
            CHECK(std::abs(great_circle_distance(x, g) - t * dxy) <= 1e-9);
        }
    }
}

TEST_CASE("tangent frame: pole limit and the d = 3 closed form") {
    CHECK((tangent_frame_direction(Direction::axis(4, 3), 0).vec() -
           Direction::axis(4, 0).vec()).norm() == 0.0);
    CHECK((tangent_frame_direction(Direction::axis(4, 3), 2).vec() -
           Direction::axis(4, 2).vec()).norm() == 0.0);

    // u = e_1 in R^3: the first frame direction evaluates to (0, 0, 1)
    const Direction u = Direction::axis(3, 0);
    const Direction p = tangent_frame_direction(u, 0);
    CHECK(p[0] == doctest::Approx(0.0));
    CHECK(p[1] == doctest::Approx(0.0));
    CHECK(p[2] == doctest::Approx(1.0));
    CHECK(std::abs(p.vec().dot(u.vec())) <= 1e-12);
}

TEST_CASE("tangent frame plus u is an orthonormal basis") {
    RngStream rng(14);
    for (int rep = 0; rep < 100; ++rep) {
        const Direction u = rnd_sphere(5, rng);
        Matrix basis(5, 5);
        basis.col(4) = u.vec();
        for (int j = 0; j < 4; ++j)
            basis.col(j) = tangent_frame_direction(u, j).vec();
        const Matrix gram = basis.transpose() * basis;
        CHECK((gram - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("naive_mean") {
    const Direction e1 = dir2(1, 0);
    const Direction e2 = dir2(0, 1);
    CHECK((naive_mean({e1}).vec() - e1.vec()).norm() <= 1e-15);
    const Direction m = naive_mean({e1, e2});
    CHECK(m[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(m[1] == doctest::Approx(std::sqrt(0.5)));
    CHECK_THROWS_AS(naive_mean({e1, dir2(-1, 0)}), DegenerateMean);
    CHECK_THROWS_AS(naive_mean({}), Error);
}

TEST_CASE("spherical_grid for d = 2 is one point per line") {
    const auto grid = spherical_grid(2, 4);
    REQUIRE(grid.size() == 4);
    for (int i = 0; i < 4; ++i) {
        const double phi = i * kPi / 4;
        CHECK(grid[static_cast<size_t>(i)][0] == doctest::Approx(std::cos(phi)));
        CHECK(grid[static_cast<size_t>(i)][1] == doctest::Approx(std::sin(phi)));
    }
}

TEST_CASE("spherical_grid for d = 3 and the coarse-budget refusal") {
    const auto grid = spherical_grid(3, 16); // k = 4 per angle
    CHECK(grid.size() == 16);
    for (const auto& p : grid)
        CHECK(std::abs(p.vec().norm() - 1.0) <= 1e-12);
    CHECK_THROWS_AS(spherical_grid(11, 1000), GridTooCoarse); // floor(1000^0.1) = 1

    // deterministic and reproducible
    const auto again = spherical_grid(3, 16);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(grid[i].vec() == again[i].vec());
}
