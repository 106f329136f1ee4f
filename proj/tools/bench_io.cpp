#include "bench_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "projdepth/io.hpp"

namespace projdepth::cli {

using nlohmann::json;

namespace {

class Violations {
public:
    void add(const std::string& path, const std::string& what) {
        messages_.push_back(path + ": " + what);
    }
    void raise_if_any() const {
        if (messages_.empty())
            return;
        std::ostringstream os;
        os << "invalid benchmark config:";
        for (const auto& m : messages_)
            os << "\n  " << m;
        throw Error(os.str());
    }

private:
    std::vector<std::string> messages_;
};

bool expect_positive_int(const json& j, const std::string& path, Violations& v,
                         int& out) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        v.add(path, "expected a positive integer");
        return false;
    }
    out = static_cast<int>(j.get<long long>());
    return true;
}

bool expect_number(const json& j, const std::string& path, Violations& v,
                   double& out) {
    if (!j.is_number()) {
        v.add(path, "expected a number");
        return false;
    }
    out = j.get<double>();
    return true;
}

SearchSpace parse_space(const std::string& s, const std::string& path, Violations& v) {
    if (s == "ec") return SearchSpace::Euclidean;
    if (s == "sp") return SearchSpace::Sphere;
    v.add(path, "expected \"ec\" or \"sp\"");
    return SearchSpace::Sphere;
}

StartRule parse_start(const std::string& s, const std::string& path, Violations& v) {
    if (s == "mn") return StartRule::Mean;
    if (s == "rn") return StartRule::Random;
    v.add(path, "expected \"mn\" or \"rn\"");
    return StartRule::Mean;
}

void apply_params(ApproxConfig& a, const json& p, const std::string& path,
                  Violations& v) {
    for (const auto& [key, value] : p.items()) {
        const std::string kp = path + "/" + key;
        if (key == "refinements") {
            expect_positive_int(value, kp, v, a.refinements);
        } else if (key == "shrink") {
            expect_number(value, kp, v, a.shrink);
        } else if (key == "dirichlet_alpha") {
            expect_number(value, kp, v, a.dirichlet_alpha);
        } else if (key == "cooling") {
            expect_number(value, kp, v, a.sa_cooling);
        } else if (key == "cap_divisor") {
            if (a.algorithm == Algorithm::NM)
                expect_number(value, kp, v, a.nm_cap_divisor);
            else
                expect_number(value, kp, v, a.sa_cap_divisor);
        } else if (key == "start") {
            if (value.is_string()) {
                const StartRule r = parse_start(value.get<std::string>(), kp, v);
                if (a.algorithm == Algorithm::NM)
                    a.nm_start = r;
                else
                    a.sa_start = r;
            } else {
                v.add(kp, "expected a string");
            }
        } else if (key == "space") {
            if (value.is_string()) {
                const SearchSpace s = parse_space(value.get<std::string>(), kp, v);
                if (a.algorithm == Algorithm::NM)
                    a.nm_space = s;
                else
                    a.cd_space = s;
            } else {
                v.add(kp, "expected a string");
            }
        } else if (key == "line_search") {
            if (value.is_string() && value.get<std::string>() == "eq")
                a.cd_line_search = LineSearchRule::Uniform;
            else if (value.is_string() && value.get<std::string>() == "gs")
                a.cd_line_search = LineSearchRule::Golden;
            else
                v.add(kp, "expected \"eq\" or \"gs\"");
        } else if (key == "uniform_steps") {
            expect_positive_int(value, kp, v, a.uniform_steps);
        } else if (key == "golden_tol") {
            expect_number(value, kp, v, a.golden_tol);
        } else if (key == "bound") {
            if (value.is_string() && (value.get<std::string>() == "y" ||
                                      value.get<std::string>() == "n"))
                a.nm_bound = value.get<std::string>() == "y";
            else if (value.is_boolean())
                a.nm_bound = value.get<bool>();
            else
                v.add(kp, "expected \"y\", \"n\" or a boolean");
        } else {
            v.add(kp, "unknown parameter");
        }
    }
}

} // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error(std::string("config is not valid JSON: ") + e.what());
    }

    Violations v;
    if (!j.is_object()) {
        v.add("/", "expected a JSON object");
        v.raise_if_any();
    }

    ExperimentConfig cfg;
    cfg.algorithms = ExperimentConfig::default_algorithms();

    static const char* known_keys[] = {
        "seed",    "replications", "n",       "distributions",
        "notions", "dimensions",   "budgets", "algorithms",
        "threads", "skewnormal_delta1", "params"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : known_keys)
            if (key == k)
                known = true;
        if (!known)
            v.add("/" + key, "unknown key");
    }

    if (!j.contains("seed"))
        v.add("/seed", "required");
    else if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
        v.add("/seed", "expected a non-negative integer");
    else
        cfg.seed = j["seed"].get<std::uint64_t>();

    if (!j.contains("replications"))
        v.add("/replications", "required");
    else
        expect_positive_int(j["replications"], "/replications", v, cfg.replications);

    if (j.contains("n"))
        expect_positive_int(j["n"], "/n", v, cfg.sample_size);
    if (j.contains("threads"))
        expect_positive_int(j["threads"], "/threads", v, cfg.threads);
    if (j.contains("skewnormal_delta1"))
        expect_number(j["skewnormal_delta1"], "/skewnormal_delta1", v, cfg.skew_delta1);

    if (j.contains("distributions")) {
        if (!j["distributions"].is_array() || j["distributions"].empty()) {
            v.add("/distributions", "expected a non-empty array of strings");
        } else {
            cfg.families.clear();
            for (size_t i = 0; i < j["distributions"].size(); ++i) {
                const json& e = j["distributions"][i];
                const std::string p = "/distributions/" + std::to_string(i);
                if (!e.is_string()) {
                    v.add(p, "expected a string");
                    continue;
                }
                try {
                    cfg.families.push_back(parse_family(e.get<std::string>()));
                } catch (const Error& err) {
                    v.add(p, err.what());
                }
            }
        }
    }

    if (j.contains("notions")) {
        if (!j["notions"].is_array() || j["notions"].empty()) {
            v.add("/notions", "expected a non-empty array of strings");
        } else {
            cfg.notions.clear();
            for (size_t i = 0; i < j["notions"].size(); ++i) {
                const json& e = j["notions"][i];
                const std::string p = "/notions/" + std::to_string(i);
                if (!e.is_string()) {
                    v.add(p, "expected a string");
                    continue;
                }
                try {
                    cfg.notions.push_back(parse_notion(e.get<std::string>()));
                } catch (const Error& err) {
                    v.add(p, err.what());
                }
            }
        }
    }

    if (j.contains("dimensions")) {
        if (!j["dimensions"].is_array() || j["dimensions"].empty()) {
            v.add("/dimensions", "expected a non-empty array of integers");
        } else {
            cfg.dims.clear();
            for (size_t i = 0; i < j["dimensions"].size(); ++i) {
                const json& e = j["dimensions"][i];
                const std::string p = "/dimensions/" + std::to_string(i);
                if (!e.is_number_integer() || e.get<long long>() < 2)
                    v.add(p, "expected an integer >= 2");
                else
                    cfg.dims.push_back(static_cast<Eigen::Index>(e.get<long long>()));
            }
        }
    }

    if (j.contains("budgets")) {
        if (!j["budgets"].is_array() || j["budgets"].empty()) {
            v.add("/budgets", "expected a non-empty array of positive integers");
        } else {
            cfg.budgets.clear();
            for (size_t i = 0; i < j["budgets"].size(); ++i) {
                const json& e = j["budgets"][i];
                const std::string p = "/budgets/" + std::to_string(i);
                int b = 0;
                if (expect_positive_int(e, p, v, b))
                    cfg.budgets.push_back(b);
            }
        }
    }

    if (j.contains("algorithms")) {
        if (!j["algorithms"].is_array() || j["algorithms"].empty()) {
            v.add("/algorithms", "expected a non-empty array of strings");
        } else {
            cfg.algorithms.clear();
            for (size_t i = 0; i < j["algorithms"].size(); ++i) {
                const json& e = j["algorithms"][i];
                const std::string p = "/algorithms/" + std::to_string(i);
                if (!e.is_string()) {
                    v.add(p, "expected a string");
                    continue;
                }
                try {
                    ApproxConfig a;
                    a.algorithm = parse_algorithm(e.get<std::string>());
                    cfg.algorithms.push_back(a);
                } catch (const Error& err) {
                    v.add(p, err.what());
                }
            }
        }
    }

    if (j.contains("params")) {
        if (!j["params"].is_object()) {
            v.add("/params", "expected an object keyed by algorithm name");
        } else {
            for (const auto& [key, value] : j["params"].items()) {
                const std::string p = "/params/" + key;
                Algorithm algo;
                try {
                    algo = parse_algorithm(key);
                } catch (const Error&) {
                    v.add(p, "unknown algorithm");
                    continue;
                }
                if (!value.is_object()) {
                    v.add(p, "expected an object");
                    continue;
                }
                for (auto& a : cfg.algorithms)
                    if (a.algorithm == algo)
                        apply_params(a, value, p, v);
            }
        }
    }

    v.raise_if_any();
    try {
        cfg.validate();
        for (const auto& a : cfg.algorithms)
            a.validate();
    } catch (const Error& e) {
        throw Error(std::string("invalid benchmark config: ") + e.what());
    }
    return cfg;
}

namespace {

std::string opt_str(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

} // namespace

void write_experiment_outputs(const ExperimentConfig& cfg,
                              const ExperimentResult& result,
                              const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    const auto cell_prefix = [&](int cell) {
        const CellKey& k = result.cells[static_cast<size_t>(cell)];
        std::ostringstream os;
        os << to_string(k.family) << ',' << to_string(k.notion) << ',' << k.dim
           << ',' << k.sample_size;
        return os.str();
    };

    {
        std::ofstream raw(fs::path(out_dir) / "raw.csv");
        if (!raw)
            throw Error("cannot write raw.csv in " + out_dir);
        raw << "distribution,notion,d,n,algo,N,rep,value,exact,evals,time_ms,seed\n";
        for (const RunRecord& r : result.runs) {
            const CellKey& k = result.cells[static_cast<size_t>(r.cell)];
            raw << cell_prefix(r.cell) << ','
                << result.algorithm_labels[static_cast<size_t>(r.algorithm)] << ','
                << k.budget << ',' << r.replication << ',' << opt_str(r.value) << ','
                << opt_str(r.exact) << ','
                << (r.evals ? std::to_string(*r.evals) : std::string()) << ','
                << opt_str(r.time_ms) << ',' << r.stream_seed << '\n';
        }
    }

    {
        std::ofstream stats(fs::path(out_dir) / "stats.csv");
        if (!stats)
            throw Error("cannot write stats.csv in " + out_dir);
        stats << "distribution,notion,d,n,N,algo,averank,percbest,mae,mre,mean_time_ms\n";
        for (const CellStats& cs : result.stats) {
            const CellKey& k = result.cells[static_cast<size_t>(cs.cell)];
            for (size_t a = 0; a < cs.per_algorithm.size(); ++a) {
                const AlgorithmCellStats& s = cs.per_algorithm[a];
                stats << cell_prefix(cs.cell) << ',' << k.budget << ','
                      << result.algorithm_labels[a] << ',' << opt_str(s.ave_rank)
                      << ',' << opt_str(s.perc_best) << ',' << opt_str(s.mae) << ','
                      << opt_str(s.mre) << ',' << opt_str(s.mean_time_ms) << '\n';
            }
        }
    }

    {
        std::ofstream flows(fs::path(out_dir) / "flows.csv");
        if (!flows)
            throw Error("cannot write flows.csv in " + out_dir);
        flows << "distribution,notion,d,n,N,algo,eval_index,mean_gap\n";
        for (const FlowPoint& f : result.flows) {
            const CellKey& k = result.cells[static_cast<size_t>(f.cell)];
            flows << cell_prefix(f.cell) << ',' << k.budget << ','
                  << result.algorithm_labels[static_cast<size_t>(f.algorithm)] << ','
                  << f.eval_index << ',' << format_double(f.mean_gap) << '\n';
        }
    }

    (void)cfg;
}

} // namespace projdepth::cli
