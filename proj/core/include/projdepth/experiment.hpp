#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "projdepth/approx.hpp"
#include "projdepth/distributions.hpp"
#include "projdepth/exact.hpp"

namespace projdepth {

/// One benchmark description: the cross product of distributions, depth
/// notions, dimensions, and budgets forms the cells; each cell is replicated
/// `replications` times. Every algorithm inside a (cell, replication) sees
/// the identical dataset and query point but owns an independent RNG stream
/// derived from the master seed, so serial and parallel execution produce
/// identical results.
struct ExperimentConfig {
    std::vector<Family> families = {Family::Normal, Family::T5, Family::Cauchy,
                                    Family::SkewNormal, Family::Uniform01,
                                    Family::Exponential};
    std::vector<DepthNotion> notions = {
        DepthNotion::Mahalanobis, DepthNotion::Zonoid, DepthNotion::Halfspace,
        DepthNotion::Projection, DepthNotion::AsymProjection};
    std::vector<Eigen::Index> dims = {5, 10, 15, 20};
    int sample_size = 1000;
    std::vector<int> budgets = {100, 1000, 10000};
    int replications = 5;
    std::uint64_t seed = 0;
    std::vector<ApproxConfig> algorithms; // budget overridden per cell
    double skew_delta1 = 5.0;
    int threads = 1;

    /// The eight algorithms with their tuned defaults.
    static std::vector<ApproxConfig> default_algorithms();

    void validate() const;
};

struct CellKey {
    Family family;
    DepthNotion notion;
    Eigen::Index dim;
    int sample_size;
    int budget;
};

/// One approximation run inside an experiment.
struct RunRecord {
    int cell;
    int replication;
    int algorithm; // index into ExperimentConfig::algorithms
    std::optional<double> value; // missing when the algorithm refused the cell
    std::optional<double> exact; // oracle value where one exists
    std::optional<int> evals;
    std::optional<double> time_ms;
    std::uint64_t stream_seed = 0;
    std::vector<TracePoint> trace;
};

struct AlgorithmCellStats {
    std::optional<double> ave_rank;
    std::optional<double> perc_best;
    std::optional<double> mae;
    std::optional<double> mre;
    std::optional<double> mean_time_ms;
};

struct CellStats {
    int cell;
    std::vector<AlgorithmCellStats> per_algorithm;
};

struct FlowPoint {
    int cell;
    int algorithm;
    int eval_index;
    double mean_gap; // mean over replications of best-so-far minus the
                     // replication-wide minimum across algorithms
};

struct ExperimentResult {
    std::vector<CellKey> cells;
    std::vector<std::string> algorithm_labels;
    std::vector<RunRecord> runs;   // ordered by (cell, replication, algorithm)
    std::vector<CellStats> stats;  // one entry per cell
    std::vector<FlowPoint> flows;
};

/// Midranks of each row of `values` (ascending; rank 1 = smallest = best),
/// averaged per column. Missing entries are excluded from their row's
/// ranking; a column that is missing everywhere yields nullopt.
std::vector<std::optional<double>>
ave_rank(const std::vector<std::vector<std::optional<double>>>& values);

/// Percentage of rows in which each column attains the row minimum; ties are
/// all credited.
std::vector<std::optional<double>>
perc_best(const std::vector<std::vector<std::optional<double>>>& values);

/// Mean signed error and mean relative error of approx against exact. Both
/// are >= -1e-12 whenever the approximations respect the upper-bound
/// property. Throws ExactNonPositive if some exact value is <= 1e-15.
std::pair<double, double> error_stats(const std::vector<double>& approx,
                                      const std::vector<double>& exact);

/// Runs the full experiment. Wall time covers the optimizer call only
/// (dataset generation, oracles, and aggregation excluded).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Re-derives the per-cell statistics and flow curves from raw runs; used by
/// run_experiment itself, exposed so aggregation is reproducible.
void aggregate(const ExperimentConfig& cfg, const std::vector<CellKey>& cells,
               const std::vector<RunRecord>& runs, std::vector<CellStats>& stats,
               std::vector<FlowPoint>& flows);

struct LandscapePoint {
    double lon;
    double lat;
    double depth;
};

/// Samples the projected-depth objective of (z, X) in R^3 over an m x 2m
/// longitude/latitude grid (lat in [-pi/2, pi/2], lon in [-pi, pi)), row-major
/// in lat-then-lon order. The export is plotting-tool agnostic.
std::vector<LandscapePoint> landscape(const Vector& z, const Dataset& data,
                                      DepthNotion notion, int resolution);

} // namespace projdepth
