#include <doctest.h>

#include <cmath>

#include "projdepth/exact.hpp"
#include "projdepth/experiment.hpp"

using namespace projdepth;

namespace {

using Row = std::vector<std::optional<double>>;

} // namespace

TEST_CASE("ave_rank: plain, midranks, symmetry, missing columns") {
    CHECK(*ave_rank({Row{0.1, 0.2, 0.3}})[0] == 1.0);
    CHECK(*ave_rank({Row{0.1, 0.2, 0.3}})[1] == 2.0);
    CHECK(*ave_rank({Row{0.1, 0.2, 0.3}})[2] == 3.0);

    const auto tied = ave_rank({Row{0.1, 0.1, 0.3}});
    CHECK(*tied[0] == 1.5);
    CHECK(*tied[1] == 1.5);
    CHECK(*tied[2] == 3.0);

    const auto equal = ave_rank({Row{0.2, 0.2, 0.2}, Row{0.4, 0.4, 0.4}});
    for (int j = 0; j < 3; ++j)
        CHECK(*equal[static_cast<size_t>(j)] == 2.0); // (m+1)/2

    const auto missing = ave_rank({Row{0.3, std::nullopt, 0.1}});
    CHECK(*missing[0] == 2.0);
    CHECK(!missing[1]);
    CHECK(*missing[2] == 1.0);
}

TEST_CASE("ave_rank midranks sum to m(m+1)/2 per replication") {
    const Row r{0.5, 0.1, 0.5, 0.9, 0.1};
    const auto ranks = ave_rank({r});
    double sum = 0;
    for (const auto& v : ranks)
        sum += *v;
    CHECK(sum == 15.0);
}

TEST_CASE("perc_best: winners, tie credit, at least one winner per row") {
    const auto solo = perc_best({Row{0.1, 0.2}, Row{0.1, 0.3}});
    CHECK(*solo[0] == 100.0);
    CHECK(*solo[1] == 0.0);

    const auto tie = perc_best({Row{0.2, 0.2}});
    CHECK(*tie[0] == 100.0);
    CHECK(*tie[1] == 100.0);

    const auto rows = perc_best({Row{0.1, 0.4, 0.4}, Row{0.9, 0.2, 0.3}});
    double total = 0;
    for (const auto& v : rows)
        total += *v;
    CHECK(total >= 100.0);
}

TEST_CASE("error_stats") {
    const auto [mae0, mre0] = error_stats({0.5, 0.25}, {0.5, 0.25});
    CHECK(mae0 == 0.0);
    CHECK(mre0 == 0.0);
    const auto [mae1, mre1] = error_stats({0.55, 0.275}, {0.5, 0.25});
    CHECK(mre1 == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(mae1 == doctest::Approx(0.0375).epsilon(1e-12));
    CHECK_THROWS_AS(error_stats({0.5}, {0.0}), ExactNonPositive);
    CHECK_THROWS_AS(error_stats({0.5}, {0.1, 0.2}), Error);
}

TEST_CASE("run_experiment: determinism, shared data per cell, missing entries") {
    ExperimentConfig cfg;
    cfg.families = {Family::Normal};
    cfg.notions = {DepthNotion::Mahalanobis};
    cfg.dims = {15}; // GS and RGS must refuse this dimension at N = 1000
    cfg.sample_size = 40;
    cfg.budgets = {1000};
    cfg.replications = 2;
    cfg.seed = 424242;
    cfg.algorithms = ExperimentConfig::default_algorithms();

    const ExperimentResult r1 = run_experiment(cfg);
    const ExperimentResult r2 = run_experiment(cfg);
    REQUIRE(r1.runs.size() == 16);
    for (size_t i = 0; i < r1.runs.size(); ++i) {
        CHECK(r1.runs[i].value == r2.runs[i].value);
        CHECK(r1.runs[i].stream_seed == r2.runs[i].stream_seed);
    }

    // GS (index 1) and RGS (index 3) are missing, the others ran
    for (const RunRecord& rec : r1.runs) {
        const bool grid = rec.algorithm == 1 || rec.algorithm == 3;
        CHECK(rec.value.has_value() == !grid);
        CHECK(rec.exact.has_value()); // Mahalanobis oracle exists at any d
    }
    // within one replication every algorithm sees the same (dataset, z): the
    // oracle value is a function of those alone
    for (int rep = 0; rep < 2; ++rep) {
        const double e0 = *r1.runs[static_cast<size_t>(rep) * 8].exact;
        for (size_t a = 1; a < 8; ++a)
            CHECK(*r1.runs[static_cast<size_t>(rep) * 8 + a].exact == e0);
    }

    // stats rows exist with empty rank fields for the missing algorithms
    REQUIRE(r1.stats.size() == 1);
    CHECK(!r1.stats[0].per_algorithm[1].ave_rank.has_value());
    CHECK(!r1.stats[0].per_algorithm[1].mre.has_value());
    CHECK(r1.stats[0].per_algorithm[0].ave_rank.has_value());
    CHECK(r1.stats[0].per_algorithm[0].mre.has_value());
}

TEST_CASE("serial and parallel experiments produce identical runs") {
    ExperimentConfig cfg;
    cfg.families = {Family::Normal, Family::Uniform01};
    cfg.notions = {DepthNotion::Halfspace};
    cfg.dims = {2, 4};
    cfg.sample_size = 50;
    cfg.budgets = {100};
    cfg.replications = 3;
    cfg.seed = 7;
    cfg.algorithms = ExperimentConfig::default_algorithms();

    ExperimentConfig par = cfg;
    par.threads = 4;
    const ExperimentResult rs = run_experiment(cfg);
    const ExperimentResult rp = run_experiment(par);
    REQUIRE(rs.runs.size() == rp.runs.size());
    for (size_t i = 0; i < rs.runs.size(); ++i) {
        CHECK(rs.runs[i].value == rp.runs[i].value);
        CHECK(rs.runs[i].exact == rp.runs[i].exact);
        CHECK(rs.runs[i].evals == rp.runs[i].evals);
    }
}

TEST_CASE("aggregation is a pure function of the raw runs") {
    ExperimentConfig cfg;
    cfg.families = {Family::Exponential};
    cfg.notions = {DepthNotion::Zonoid};
    cfg.dims = {3};
    cfg.sample_size = 30;
    cfg.budgets = {60};
    cfg.replications = 3;
    cfg.seed = 99;
    cfg.algorithms = ExperimentConfig::default_algorithms();
    const ExperimentResult res = run_experiment(cfg);

    std::vector<CellStats> stats;
    std::vector<FlowPoint> flows;
    aggregate(cfg, res.cells, res.runs, stats, flows);
    REQUIRE(stats.size() == res.stats.size());
    for (size_t c = 0; c < stats.size(); ++c)
        for (size_t a = 0; a < stats[c].per_algorithm.size(); ++a) {
            CHECK(stats[c].per_algorithm[a].ave_rank ==
                  res.stats[c].per_algorithm[a].ave_rank);
            CHECK(stats[c].per_algorithm[a].mae == res.stats[c].per_algorithm[a].mae);
            CHECK(stats[c].per_algorithm[a].mre == res.stats[c].per_algorithm[a].mre);
        }
    REQUIRE(flows.size() == res.flows.size());
    for (size_t i = 0; i < flows.size(); ++i) {
        CHECK(flows[i].mean_gap == res.flows[i].mean_gap);
        CHECK(flows[i].eval_index == res.flows[i].eval_index);
    }

    // gaps are non-negative and some algorithm closes its gap at the budget
    double min_final_gap = 1e300;
    for (const FlowPoint& f : res.flows) {
        CHECK(f.mean_gap >= -1e-15);
        if (f.eval_index == 60)
            min_final_gap = std::min(min_final_gap, f.mean_gap);
    }
    CHECK(min_final_gap <= 1e-15);
}

TEST_CASE("landscape: symmetric data, antipodal symmetry, upper bound") {
    Matrix cross3(6, 3);
    cross3 << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
    const Dataset data(cross3);
    const Vector z = Vector::Zero(3);
    const auto flat = landscape(z, data, DepthNotion::Mahalanobis, 4);
    REQUIRE(flat.size() == 32); // m x 2m
    for (const auto& p : flat)
        CHECK(p.depth == 1.0); // center of a spherically symmetric cloud

    RngStream rng(101);
    Matrix m(40, 3);
    for (Eigen::Index i = 0; i < 40; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = rng.next_normal();
    const Dataset rd(m);
    Vector q(3);
    q << 0.3, -0.2, 0.5;
    const int res = 3;
    const auto grid = landscape(q, rd, DepthNotion::Zonoid, res);
    REQUIRE(grid.size() == 18);
    // antipodal pairs carry equal depth: (lat, lon) vs (-lat, lon + pi)
    const auto at = [&](int i, int j) { return grid[static_cast<size_t>(i * 2 * res + j)]; };
    for (int j = 0; j < res; ++j) {
        CHECK(at(0, j).depth == at(2, j + res).depth);
        CHECK(at(2, j).depth == at(0, j + res).depth);
    }
    const double exact = exact_zonoid(q, rd);
    for (const auto& p : grid)
        CHECK(p.depth >= exact - 1e-12);

    CHECK_THROWS_AS(landscape(Vector::Zero(2), Dataset(Matrix::Identity(4, 2)),
                              DepthNotion::Zonoid, 2),
                    DimensionMismatch);
}
