#pragma once

#include <functional>
#include <string>
#include <vector>

#include "projdepth/objective.hpp"
#include "projdepth/rng.hpp"
#include "projdepth/types.hpp"

namespace projdepth {

enum class Algorithm { RS, GS, RRS, RGS, RaSi, SA, CD, NM };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

enum class SearchSpace { Euclidean, Sphere };
enum class StartRule { Mean, Random };
enum class LineSearchRule { Uniform, Golden };

/// Algorithm selection, evaluation budget, and per-algorithm parameters.
/// Defaults are the tuned choices (bold entries of the parameter table).
struct ApproxConfig {
    Algorithm algorithm = Algorithm::NM;
    int budget = 1000;

    // refined random/grid search
    int refinements = 10;        // N_ref
    double shrink = 0.5;         // cap shrink factor per refinement round

    // random simplices
    double dirichlet_alpha = 1.25;

    // simulated annealing
    double sa_cooling = 0.95;    // geometric cooling factor
    double sa_cap_divisor = 10.0;// cap radius (pi/2) / beta
    StartRule sa_start = StartRule::Mean;
    double sa_t0 = 1.0;
    double sa_tmin = 0.001;

    // coordinate descent
    SearchSpace cd_space = SearchSpace::Sphere;
    LineSearchRule cd_line_search = LineSearchRule::Golden;
    int uniform_steps = 10;      // n_LS for the equispaced line search
    double golden_tol = 1e-3;    // stopping width of the golden section, radians

    // Nelder-Mead
    SearchSpace nm_space = SearchSpace::Sphere;
    StartRule nm_start = StartRule::Mean;
    double nm_cap_divisor = 1.0; // start-simplex cap radius (pi/2) / beta
    bool nm_bound = true;        // clamp great-circle moves to the hemisphere
    double nm_reflection = 1.0;
    double nm_expansion = 2.0;
    double nm_contraction = 0.5;
    double nm_shrink = 0.5;

    void validate() const;
};

struct TracePoint {
    int eval_index;    // 1-based index of the evaluation that improved
    double best_value; // best-so-far after that evaluation
};

struct ApproxResult {
    double value;             // minimal projected depth found
    Direction best_direction; // argmin among evaluated directions
    int evals_used;
    std::vector<TracePoint> trace; // non-increasing; last entry equals value
};

struct EvalRecord {
    Direction direction;
    double value;
};
using EvalLog = std::vector<EvalRecord>;

/// Minimizes the projected univariate depth of z over the unit sphere with
/// the configured algorithm and at most cfg.budget evaluations. Deterministic
/// function of (inputs, cfg, rng state). When `log` is given every evaluated
/// (direction, value) pair is appended to it.
ApproxResult approximate(DepthNotion notion, const Vector& z, const Dataset& data,
                         const ApproxConfig& cfg, RngStream& rng,
                         EvalLog* log = nullptr);

// The individual optimizers behind approximate(); same contract.
ApproxResult random_search(DepthNotion notion, const Vector& z, const Dataset& data,
                           const ApproxConfig& cfg, RngStream& rng, EvalLog* log = nullptr);
ApproxResult grid_search(DepthNotion notion, const Vector& z, const Dataset& data,
                         const ApproxConfig& cfg, EvalLog* log = nullptr);
ApproxResult refined_random_search(DepthNotion notion, const Vector& z, const Dataset& data,
                                   const ApproxConfig& cfg, RngStream& rng, EvalLog* log = nullptr);
ApproxResult refined_grid_search(DepthNotion notion, const Vector& z, const Dataset& data,
                                 const ApproxConfig& cfg, EvalLog* log = nullptr);
ApproxResult random_simplices(DepthNotion notion, const Vector& z, const Dataset& data,
                              const ApproxConfig& cfg, RngStream& rng, EvalLog* log = nullptr);
ApproxResult simulated_annealing(DepthNotion notion, const Vector& z, const Dataset& data,
                                 const ApproxConfig& cfg, RngStream& rng, EvalLog* log = nullptr);
ApproxResult coordinate_descent(DepthNotion notion, const Vector& z, const Dataset& data,
                                const ApproxConfig& cfg, RngStream& rng, EvalLog* log = nullptr);
ApproxResult nelder_mead(DepthNotion notion, const Vector& z, const Dataset& data,
                         const ApproxConfig& cfg, RngStream& rng, EvalLog* log = nullptr);

struct LineSearchResult {
    Direction point;
    double value;
};

/// Minimum of f over the great semicircle {cos(l) u + sin(l) p, l in
/// (-pi/2, pi/2]} on an equispaced grid of steps+1 angles.
LineSearchResult line_search_uniform(const std::function<double(const Direction&)>& f,
                                     const Direction& u, const Direction& p, int steps);

/// Golden-section search over the same semicircle; stops once the bracket is
/// narrower than tol (radians). Returns the best point evaluated.
LineSearchResult line_search_golden(const std::function<double(const Direction&)>& f,
                                    const Direction& u, const Direction& p, double tol);

} // namespace projdepth
