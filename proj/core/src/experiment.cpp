#include "projdepth/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

namespace projdepth {

std::vector<ApproxConfig> ExperimentConfig::default_algorithms() {
    std::vector<ApproxConfig> algos(8);
    algos[0].algorithm = Algorithm::RS;
    algos[1].algorithm = Algorithm::GS;
    algos[2].algorithm = Algorithm::RRS;
    algos[3].algorithm = Algorithm::RGS;
    algos[4].algorithm = Algorithm::RaSi;
    algos[5].algorithm = Algorithm::SA;
    algos[6].algorithm = Algorithm::CD;
    algos[7].algorithm = Algorithm::NM;
    return algos;
}

void ExperimentConfig::validate() const {
    if (families.empty() || notions.empty() || dims.empty() || budgets.empty())
        throw Error("experiment needs at least one distribution, notion, dimension and budget");
    if (sample_size < 2)
        throw Error("sample size must be at least 2");
    if (replications < 1)
        throw Error("replication count must be positive");
    if (threads < 1)
        throw Error("thread count must be positive");
    if (algorithms.empty())
        throw Error("experiment needs at least one algorithm");
    for (const auto& a : algorithms)
        a.validate();
    for (Eigen::Index d : dims)
        if (d < 2)
            throw Error("dimensions must be >= 2");
    for (int b : budgets)
        if (b < 1)
            throw Error("budgets must be positive");
}

std::vector<std::optional<double>>
ave_rank(const std::vector<std::vector<std::optional<double>>>& values) {
    if (values.empty())
        return {};
    const size_t m = values.front().size();
    std::vector<double> sums(m, 0.0);
    std::vector<int> counts(m, 0);
    std::vector<std::pair<double, size_t>> row;
    for (const auto& r : values) {
        if (r.size() != m)
            throw Error("ave_rank: ragged value matrix");
        row.clear();
        for (size_t j = 0; j < m; ++j)
            if (r[j])
                row.emplace_back(*r[j], j);
        std::sort(row.begin(), row.end());
        size_t i = 0;
        while (i < row.size()) {
            size_t j = i;
            while (j + 1 < row.size() && row[j + 1].first == row[i].first)
                ++j;
            const double midrank = 0.5 * static_cast<double>(i + 1 + j + 1);
            for (size_t k = i; k <= j; ++k) {
                sums[row[k].second] += midrank;
                ++counts[row[k].second];
            }
            i = j + 1;
        }
    }
    std::vector<std::optional<double>> out(m);
    for (size_t j = 0; j < m; ++j)
        if (counts[j] > 0)
            out[j] = sums[j] / counts[j];
    return out;
}

std::vector<std::optional<double>>
perc_best(const std::vector<std::vector<std::optional<double>>>& values) {
    if (values.empty())
        return {};
    const size_t m = values.front().size();
    std::vector<int> wins(m, 0);
    std::vector<int> present(m, 0);
    for (const auto& r : values) {
        if (r.size() != m)
            throw Error("perc_best: ragged value matrix");
        double best = std::numeric_limits<double>::infinity();
        bool any = false;
        for (const auto& v : r)
            if (v) {
                best = std::min(best, *v);
                any = true;
            }
        if (!any)
            continue;
        for (size_t j = 0; j < m; ++j) {
            if (!r[j])
                continue;
            ++present[j];
            if (*r[j] == best)
                ++wins[j];
        }
    }
    std::vector<std::optional<double>> out(m);
    for (size_t j = 0; j < m; ++j)
        if (present[j] > 0)
            out[j] = 100.0 * wins[j] / present[j];
    return out;
}

std::pair<double, double> error_stats(const std::vector<double>& approx,
                                      const std::vector<double>& exact) {
    if (approx.size() != exact.size() || approx.empty())
        throw Error("error_stats: size mismatch or empty input");
    double mae = 0.0;
    for (size_t i = 0; i < approx.size(); ++i)
        mae += approx[i] - exact[i];
    mae /= static_cast<double>(approx.size());
    for (double e : exact)
        if (e <= 1e-15)
            throw ExactNonPositive("relative error undefined for exact depth <= 1e-15");
    double mre = 0.0;
    for (size_t i = 0; i < approx.size(); ++i)
        mre += (approx[i] - exact[i]) / exact[i];
    mre /= static_cast<double>(approx.size());
    return {mae, mre};
}

namespace {

// Improvement traces are stored sparsely; the best value reached by
// evaluation `idx` is the last trace entry at or before it.
double best_at(const std::vector<TracePoint>& trace, int idx) {
    double best = trace.front().best_value;
    for (const TracePoint& tp : trace) {
        if (tp.eval_index > idx)
            break;
        best = tp.best_value;
    }
    return best;
}

// Checkpoint indices 1, 2, 3, ... growing geometrically (~25%/step), always
// including the final budget.
std::vector<int> flow_checkpoints(int budget) {
    std::vector<int> cps;
    int c = 1;
    while (c < budget) {
        cps.push_back(c);
        c = std::max(c + 1, c + c / 4);
    }
    cps.push_back(budget);
    return cps;
}

std::optional<double> exact_oracle(DepthNotion notion, const Vector& z,
                                   const Dataset& data) {
    try {
        switch (notion) {
        case DepthNotion::Mahalanobis:
            return exact_mahalanobis(z, data);
        case DepthNotion::Zonoid:
            return exact_zonoid(z, data);
        case DepthNotion::Halfspace:
            if (data.dim() == 2)
                return exact_halfspace_2d(z, data);
            return std::nullopt;
        default:
            return std::nullopt;
        }
    } catch (const Error&) {
        return std::nullopt; // degenerate data; leave the oracle column empty
    }
}

} // namespace

void aggregate(const ExperimentConfig& cfg, const std::vector<CellKey>& cells,
               const std::vector<RunRecord>& runs, std::vector<CellStats>& stats,
               std::vector<FlowPoint>& flows) {
    const int reps = cfg.replications;
    const auto n_algos = cfg.algorithms.size();
    stats.clear();
    flows.clear();

    for (size_t c = 0; c < cells.size(); ++c) {
        const size_t base = c * static_cast<size_t>(reps) * n_algos;

        std::vector<std::vector<std::optional<double>>> values(
            static_cast<size_t>(reps),
            std::vector<std::optional<double>>(n_algos));
        for (int r = 0; r < reps; ++r)
            for (size_t a = 0; a < n_algos; ++a)
                values[static_cast<size_t>(r)][a] =
                    runs[base + static_cast<size_t>(r) * n_algos + a].value;

        const auto ranks = ave_rank(values);
        const auto pbest = perc_best(values);

        CellStats cs;
        cs.cell = static_cast<int>(c);
        cs.per_algorithm.resize(n_algos);
        for (size_t a = 0; a < n_algos; ++a) {
            AlgorithmCellStats& s = cs.per_algorithm[a];
            s.ave_rank = ranks[a];
            s.perc_best = pbest[a];

            std::vector<double> av, ev;
            double time_sum = 0.0;
            int time_count = 0;
            for (int r = 0; r < reps; ++r) {
                const RunRecord& rec = runs[base + static_cast<size_t>(r) * n_algos + a];
                if (rec.value && rec.exact) {
                    av.push_back(*rec.value);
                    ev.push_back(*rec.exact);
                }
                if (rec.time_ms) {
                    time_sum += *rec.time_ms;
                    ++time_count;
                }
            }
            if (!av.empty()) {
                try {
                    const auto [mae, mre] = error_stats(av, ev);
                    s.mae = mae;
                    s.mre = mre;
                } catch (const ExactNonPositive&) {
                    double mae = 0.0;
                    for (size_t i = 0; i < av.size(); ++i)
                        mae += av[i] - ev[i];
                    s.mae = mae / static_cast<double>(av.size());
                }
            }
            if (time_count > 0)
                s.mean_time_ms = time_sum / time_count;
        }
        stats.push_back(std::move(cs));

        // flow curves: per-replication gap against the best final value
        // reached by any algorithm on that replication
        const std::vector<int> cps = flow_checkpoints(cells[c].budget);
        std::vector<double> rep_min(static_cast<size_t>(reps),
                                    std::numeric_limits<double>::infinity());
        for (int r = 0; r < reps; ++r)
            for (size_t a = 0; a < n_algos; ++a) {
                const auto& v = runs[base + static_cast<size_t>(r) * n_algos + a].value;
                if (v)
                    rep_min[static_cast<size_t>(r)] =
                        std::min(rep_min[static_cast<size_t>(r)], *v);
            }
        for (size_t a = 0; a < n_algos; ++a) {
            for (int cp : cps) {
                double sum = 0.0;
                int count = 0;
                for (int r = 0; r < reps; ++r) {
                    const RunRecord& rec = runs[base + static_cast<size_t>(r) * n_algos + a];
                    if (!rec.value || rec.trace.empty())
                        continue;
                    sum += best_at(rec.trace, cp) - rep_min[static_cast<size_t>(r)];
                    ++count;
                }
                if (count > 0)
                    flows.push_back(FlowPoint{static_cast<int>(c), static_cast<int>(a),
                                              cp, sum / count});
            }
        }
    }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();

    ExperimentResult result;
    for (Family f : cfg.families)
        for (DepthNotion notion : cfg.notions)
            for (Eigen::Index d : cfg.dims)
                for (int budget : cfg.budgets)
                    result.cells.push_back(CellKey{f, notion, d, cfg.sample_size, budget});
    for (const auto& a : cfg.algorithms)
        result.algorithm_labels.push_back(to_string(a.algorithm));

    const int reps = cfg.replications;
    const auto n_algos = cfg.algorithms.size();
    result.runs.resize(result.cells.size() * static_cast<size_t>(reps) * n_algos);

    const RngStream master(cfg.seed);
    const auto family_id = [](Family f) { return static_cast<std::uint64_t>(f); };
    const auto notion_id = [](DepthNotion n) { return static_cast<std::uint64_t>(n); };

    const size_t n_tasks = result.cells.size() * static_cast<size_t>(reps);
    const auto run_task = [&](size_t task) {
        const size_t c = task / static_cast<size_t>(reps);
        const int rep = static_cast<int>(task % static_cast<size_t>(reps));
        const CellKey& key = result.cells[c];

        // dataset and query point depend on (family, d, n, replication) only,
        // so all notions and budgets compare on the same data
        RngStream data_rng = master.substream(1, family_id(key.family))
                                 .substream(static_cast<std::uint64_t>(key.dim),
                                            static_cast<std::uint64_t>(key.sample_size))
                                 .substream(static_cast<std::uint64_t>(rep), 0);
        RngStream z_rng = master.substream(2, family_id(key.family))
                              .substream(static_cast<std::uint64_t>(key.dim),
                                         static_cast<std::uint64_t>(key.sample_size))
                              .substream(static_cast<std::uint64_t>(rep), 0);

        DistributionSpec spec{key.family, key.dim, cfg.skew_delta1};
        const Dataset data = generate_sample(spec, key.sample_size, data_rng);
        const Vector z = pick_z(data, z_rng);
        const std::optional<double> exact = exact_oracle(key.notion, z, data);

        for (size_t a = 0; a < n_algos; ++a) {
            RunRecord& rec = result.runs[(c * static_cast<size_t>(reps) +
                                          static_cast<size_t>(rep)) * n_algos + a];
            rec.cell = static_cast<int>(c);
            rec.replication = rep;
            rec.algorithm = static_cast<int>(a);
            rec.exact = exact;

            ApproxConfig acfg = cfg.algorithms[a];
            acfg.budget = key.budget;
            RngStream algo_rng =
                master.substream(3, family_id(key.family))
                    .substream(static_cast<std::uint64_t>(key.dim),
                               static_cast<std::uint64_t>(key.sample_size))
                    .substream(notion_id(key.notion),
                               static_cast<std::uint64_t>(key.budget))
                    .substream(static_cast<std::uint64_t>(rep), a);
            rec.stream_seed = algo_rng.seed();

            try {
                const auto t0 = std::chrono::steady_clock::now();
                ApproxResult res = approximate(key.notion, z, data, acfg, algo_rng);
                const auto t1 = std::chrono::steady_clock::now();
                rec.value = res.value;
                rec.evals = res.evals_used;
                rec.time_ms =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
                rec.trace = std::move(res.trace);
            } catch (const GridTooCoarse&) {
                // recorded as missing, the experiment continues
            } catch (const DataTooSmall&) {
            }
        }
    };

    if (cfg.threads <= 1) {
        for (size_t task = 0; task < n_tasks; ++task)
            run_task(task);
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        const auto worker = [&]() {
            for (;;) {
                const size_t task = next.fetch_add(1);
                if (task >= n_tasks)
                    return;
                try {
                    run_task(task);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        const int k = std::min<int>(cfg.threads, static_cast<int>(n_tasks));
        pool.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    aggregate(cfg, result.cells, result.runs, result.stats, result.flows);
    return result;
}

std::vector<LandscapePoint> landscape(const Vector& z, const Dataset& data,
                                      DepthNotion notion, int resolution) {
    if (data.dim() != 3 || z.size() != 3)
        throw DimensionMismatch("landscape requires d = 3");
    if (resolution < 1)
        throw Error("landscape resolution must be positive");
    constexpr double pi = 3.14159265358979323846;
    const int m = resolution;
    EvalCounter counter{2 * m * m, 0};
    std::vector<LandscapePoint> out;
    out.reserve(static_cast<size_t>(2 * m * m));
    for (int i = 0; i < m; ++i) {
        const double lat = m == 1 ? 0.0 : -pi / 2.0 + i * pi / (m - 1);
        for (int j = 0; j < 2 * m; ++j) {
            const double lon = -pi + j * pi / m;
            Vector v(3);
            v << std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon),
                std::sin(lat);
            const Direction p = Direction::normalize(v);
            out.push_back(LandscapePoint{lon, lat,
                                         projected_depth(notion, z, data, p, counter)});
        }
    }
    return out;
}

} // namespace projdepth
