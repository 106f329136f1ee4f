#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "projdepth/approx.hpp"
#include "projdepth/exact.hpp"
#include "projdepth/experiment.hpp"
#include "projdepth/io.hpp"

#include "bench_io.hpp"

namespace {

using namespace projdepth;

struct DepthOptions {
    std::string data_file;
    std::string point;
    std::string notion = "halfspace";
    std::string algo = "nm";
    int budget = 1000;
    std::uint64_t seed = 0;
    bool exact = false;

    // algorithm parameters, defaulting to the tuned choices
    ApproxConfig params;
    std::string sa_start = "mn";
    std::string cd_space = "sp";
    std::string cd_ls = "gs";
    std::string nm_space = "sp";
    std::string nm_start = "mn";
    std::string nm_bound = "y";
};

StartRule start_from(const std::string& s) {
    if (s == "mn") return StartRule::Mean;
    if (s == "rn") return StartRule::Random;
    throw Error("start must be 'mn' or 'rn'");
}

SearchSpace space_from(const std::string& s) {
    if (s == "ec") return SearchSpace::Euclidean;
    if (s == "sp") return SearchSpace::Sphere;
    throw Error("space must be 'ec' or 'sp'");
}

int run_depth(const DepthOptions& opt) {
    const Dataset data = read_dataset_csv_file(opt.data_file);
    const Vector z = parse_point(opt.point);
    if (z.size() != data.dim())
        throw Error("point has dimension " + std::to_string(z.size()) +
                    " but the data has dimension " + std::to_string(data.dim()));
    const DepthNotion notion = parse_notion(opt.notion);

    if (opt.exact) {
        const auto t0 = std::chrono::steady_clock::now();
        double value;
        switch (notion) {
        case DepthNotion::Mahalanobis:
            value = exact_mahalanobis(z, data);
            break;
        case DepthNotion::Zonoid:
            value = exact_zonoid(z, data);
            break;
        case DepthNotion::Halfspace:
            if (data.dim() != 2)
                throw Error("exact halfspace depth is implemented for d = 2 only; "
                            "use an approximation algorithm for higher dimensions");
            value = exact_halfspace_2d(z, data);
            break;
        default:
            throw Error("no exact algorithm is available for the " + opt.notion +
                        " depth; drop --exact");
        }
        const auto t1 = std::chrono::steady_clock::now();
        std::cout << "depth=" << format_double(value, 12) << " method=exact"
                  << " time_ms="
                  << format_double(
                         std::chrono::duration<double, std::milli>(t1 - t0).count(), 4)
                  << "\n";
        return 0;
    }

    ApproxConfig cfg = opt.params;
    cfg.algorithm = parse_algorithm(opt.algo);
    cfg.budget = opt.budget;
    cfg.sa_start = start_from(opt.sa_start);
    cfg.cd_space = space_from(opt.cd_space);
    if (opt.cd_ls == "eq")
        cfg.cd_line_search = LineSearchRule::Uniform;
    else if (opt.cd_ls == "gs")
        cfg.cd_line_search = LineSearchRule::Golden;
    else
        throw Error("line search must be 'eq' or 'gs'");
    cfg.nm_space = space_from(opt.nm_space);
    cfg.nm_start = start_from(opt.nm_start);
    if (opt.nm_bound == "y")
        cfg.nm_bound = true;
    else if (opt.nm_bound == "n")
        cfg.nm_bound = false;
    else
        throw Error("bound must be 'y' or 'n'");

    RngStream rng(opt.seed);
    const auto t0 = std::chrono::steady_clock::now();
    const ApproxResult res = approximate(notion, z, data, cfg, rng);
    const auto t1 = std::chrono::steady_clock::now();

    std::cout << "depth=" << format_double(res.value, 12) << " direction=";
    for (Eigen::Index i = 0; i < res.best_direction.dim(); ++i) {
        if (i > 0)
            std::cout << ',';
        std::cout << format_double(res.best_direction[i]);
    }
    std::cout << " evals=" << res.evals_used << " time_ms="
              << format_double(
                     std::chrono::duration<double, std::milli>(t1 - t0).count(), 4)
              << "\n";
    return 0;
}

int run_benchmark(const std::string& config_file, const std::string& out_dir,
                  int threads_override) {
    ExperimentConfig cfg = cli::load_experiment_config(config_file);
    if (threads_override > 0)
        cfg.threads = threads_override;
    const ExperimentResult result = run_experiment(cfg);
    cli::write_experiment_outputs(cfg, result, out_dir);
    std::cout << "wrote " << result.runs.size() << " runs over "
              << result.cells.size() << " cells to " << out_dir << "\n";
    return 0;
}

int run_landscape(const std::string& data_file, const std::string& point,
                  const std::string& notion_name, int resolution,
                  const std::string& out_file) {
    const Dataset data = read_dataset_csv_file(data_file);
    const Vector z = parse_point(point);
    const DepthNotion notion = parse_notion(notion_name);
    const auto points = landscape(z, data, notion, resolution);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_file.empty()) {
        file.open(out_file);
        if (!file)
            throw Error("cannot write " + out_file);
        out = &file;
    }
    *out << "lon,lat,depth\n";
    for (const auto& p : points)
        *out << format_double(p.lon) << ',' << format_double(p.lat) << ','
             << format_double(p.depth) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate projection-property data depths on the unit sphere"};
    app.require_subcommand(1);

    DepthOptions depth_opt;
    CLI::App* depth = app.add_subcommand(
        "depth", "Depth of one point w.r.t. a CSV dataset");
    depth->add_option("--data", depth_opt.data_file, "CSV file, one observation per row")
        ->required();
    depth->add_option("--point", depth_opt.point, "query point, comma-separated")
        ->required();
    depth->add_option("--notion", depth_opt.notion,
                      "mahalanobis|zonoid|halfspace|projection|asymprojection");
    depth->add_option("--algo", depth_opt.algo, "rs|gs|rrs|rgs|rasi|sa|cd|nm");
    depth->add_option("--budget", depth_opt.budget, "univariate depth evaluations");
    depth->add_option("--seed", depth_opt.seed, "64-bit RNG seed");
    depth->add_flag("--exact", depth_opt.exact,
                    "use the exact oracle instead of an approximation");
    depth->add_option("--nref", depth_opt.params.refinements, "RRS/RGS refinement rounds");
    depth->add_option("--shrink", depth_opt.params.shrink, "RRS/RGS cap shrink factor");
    depth->add_option("--rasi-alpha", depth_opt.params.dirichlet_alpha,
                      "RaSi Dirichlet parameter");
    depth->add_option("--sa-alpha", depth_opt.params.sa_cooling, "SA cooling factor");
    depth->add_option("--sa-beta", depth_opt.params.sa_cap_divisor, "SA cap divisor");
    depth->add_option("--sa-start", depth_opt.sa_start, "SA start: mn|rn");
    depth->add_option("--cd-space", depth_opt.cd_space, "CD space: ec|sp");
    depth->add_option("--cd-ls", depth_opt.cd_ls, "CD line search: eq|gs");
    depth->add_option("--nls", depth_opt.params.uniform_steps,
                      "uniform line-search subdivisions");
    depth->add_option("--golden-tol", depth_opt.params.golden_tol,
                      "golden-section stopping width (radians)");
    depth->add_option("--nm-space", depth_opt.nm_space, "NM space: ec|sp");
    depth->add_option("--nm-start", depth_opt.nm_start, "NM start: mn|rn");
    depth->add_option("--nm-beta", depth_opt.params.nm_cap_divisor,
                      "NM start-simplex cap divisor");
    depth->add_option("--nm-bound", depth_opt.nm_bound,
                      "bound NM moves to the hemisphere: y|n");

    std::string config_file, out_dir;
    int threads_override = 0;
    CLI::App* bench = app.add_subcommand(
        "benchmark", "Run a benchmark experiment from a JSON config");
    bench->add_option("--config", config_file, "experiment config (JSON)")->required();
    bench->add_option("--out", out_dir, "output directory")->required();
    bench->add_option("--threads", threads_override,
                      "worker threads (results independent of the count)");

    std::string ls_data, ls_point, ls_notion = "halfspace", ls_out;
    int ls_resolution = 60;
    CLI::App* ls = app.add_subcommand(
        "landscape", "Export the objective over S^2 as lon/lat/depth CSV");
    ls->add_option("--data", ls_data, "CSV file with 3 columns")->required();
    ls->add_option("--point", ls_point, "query point, comma-separated")->required();
    ls->add_option("--notion", ls_notion,
                   "mahalanobis|zonoid|halfspace|projection|asymprojection");
    ls->add_option("--resolution", ls_resolution, "latitude rows m (longitude 2m)");
    ls->add_option("--out", ls_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message and usage hint
        return 2;
    }

    try {
        if (*depth)
            return run_depth(depth_opt);
        if (*bench)
            return run_benchmark(config_file, out_dir, threads_override);
        if (*ls)
            return run_landscape(ls_data, ls_point, ls_notion, ls_resolution, ls_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
