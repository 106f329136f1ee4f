#include "projdepth/approx.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <optional>

#include "projdepth/sphere.hpp"

namespace projdepth {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Charges the budget, keeps the running minimum, and records the improvement
// trace. All optimizers evaluate the objective only through this wrapper, so
// evals_used <= budget and value = min over evaluated directions hold by
// construction, including aborts in the middle of a line search or shrink.
class Tracker {
public:
    Tracker(DepthNotion notion, const Vector& z, const Dataset& data, int budget,
            EvalLog* log)
        : notion_(notion), z_(z), data_(data), log_(log) {
        counter_.limit = budget;
    }

    double eval(const Direction& p) {
        const double v = projected_depth(notion_, z_, data_, p, counter_);
        if (log_)
            log_->push_back(EvalRecord{p, v});
        if (!best_ || v < best_value_) {
            best_ = p;
            best_value_ = v;
            trace_.push_back(TracePoint{counter_.used, v});
        }
        return v;
    }

    bool exhausted() const { return counter_.exhausted(); }
    int used() const { return counter_.used; }
    const Direction& best_direction() const { return *best_; }

    ApproxResult result() const {
        if (!best_)
            throw Error("optimizer performed no evaluation");
        return ApproxResult{best_value_, *best_, counter_.used, trace_};
    }

private:
    DepthNotion notion_;
    const Vector& z_;
    const Dataset& data_;
    EvalLog* log_;
    EvalCounter counter_;
    std::optional<Direction> best_;
    double best_value_ = kInf;
    std::vector<TracePoint> trace_;
};

Direction start_direction(StartRule rule, const Vector& z, const Dataset& data,
                          RngStream& rng) {
    if (rule == StartRule::Mean) {
        const Vector v = z - data.mean();
        if (v.norm() >= 1e-12)
            return Direction::normalize(v);
        // z coincides with the sample mean; fall back to a random start
    }
    return rnd_sphere(data.dim(), rng);
}

Direction combine(const Direction& u, const Direction& p, double lambda) {
    return Direction::normalize(std::cos(lambda) * u.vec() +
                                std::sin(lambda) * p.vec());
}

// Largest k with k^axes <= budget.
int grid_side(Eigen::Index axes, int budget) {
    int k = 1;
    for (;;) {
        double pw = 1.0;
        for (Eigen::Index i = 0; i < axes; ++i)
            pw *= static_cast<double>(k + 1);
        if (pw <= static_cast<double>(budget))
            ++k;
        else
            return k;
    }
}

// Per-axis subdivision counts whose product stays <= target: start from the
// common base and greedily bump axes (first axes first) while room remains.
std::vector<int> axis_counts(int target, Eigen::Index axes) {
    const int base = std::max(1, grid_side(axes, target));
    std::vector<int> counts(static_cast<size_t>(axes), base);
    long prod = 1;
    for (Eigen::Index i = 0; i < axes; ++i)
        prod *= base;
    for (auto& c : counts) {
        const long grown = prod / c * (c + 1);
        if (grown <= target) {
            prod = grown;
            ++c;
        }
    }
    return counts;
}

Vector from_angles_full(const std::vector<double>& angles) {
    const Eigen::Index d = static_cast<Eigen::Index>(angles.size()) + 1;
    Vector x(d);
    double run = 1.0;
    for (Eigen::Index i = 0; i + 1 < d; ++i) {
        x[i] = run * std::cos(angles[static_cast<size_t>(i)]);
        run *= std::sin(angles[static_cast<size_t>(i)]);
    }
    x[d - 1] = run;
    return x;
}

// Deterministic grid of about `target` points inside the spherical cap of
// radius eps around `center`: polar angles equispaced in (0, eps], the
// cross-section small spheres gridded in full spherical coordinates, and the
// whole construction reflected from the north pole onto `center`.
std::vector<Direction> cap_grid(const Direction& center, double eps, int target) {
    const Eigen::Index d = center.dim();
    std::vector<Direction> pts;

    if (d == 2) {
        const int k = std::max(1, target / 2);
        pts.reserve(static_cast<size_t>(2 * k));
        const double c0 = center[0], c1 = center[1];
        for (int j = 1; j <= k; ++j) {
            const double a = static_cast<double>(j) * eps / k;
            for (const double s : {a, -a}) {
                Vector v(2);
                v << c0 * std::cos(s) - c1 * std::sin(s),
                     c0 * std::sin(s) + c1 * std::cos(s);
                pts.emplace_back(Direction::normalize(v));
            }
        }
        return pts;
    }

    const std::vector<int> counts = axis_counts(target, d - 1);
    const int polar_n = counts[0];

    // cross-section grid on S^{d-2}: d-3 bounded angles plus one periodic
    std::vector<std::vector<double>> axes(static_cast<size_t>(d - 2));
    for (Eigen::Index a = 0; a < d - 2; ++a) {
        const int c = counts[static_cast<size_t>(a) + 1];
        std::vector<double>& vals = axes[static_cast<size_t>(a)];
        vals.resize(static_cast<size_t>(c));
        if (a == d - 3) { // periodic
            for (int i = 0; i < c; ++i)
                vals[static_cast<size_t>(i)] = i * 2.0 * kPi / c;
        } else if (c == 1) {
            vals[0] = kPi / 2.0;
        } else {
            for (int i = 0; i < c; ++i)
                vals[static_cast<size_t>(i)] = i * kPi / (c - 1);
        }
    }

    std::vector<double> cross_angles(static_cast<size_t>(d - 2));
    std::vector<int> idx(static_cast<size_t>(d - 2), 0);
    size_t cross_total = 1;
    for (const auto& ax : axes)
        cross_total *= ax.size();

    pts.reserve(static_cast<size_t>(polar_n) * cross_total);
    for (int pj = 1; pj <= polar_n; ++pj) {
        const double eta = static_cast<double>(pj) * eps / polar_n;
        const double x1 = std::cos(eta);
        const double r = std::sin(eta);
        std::fill(idx.begin(), idx.end(), 0);
        for (size_t it = 0; it < cross_total; ++it) {
            for (size_t a = 0; a < axes.size(); ++a)
                cross_angles[a] = axes[a][static_cast<size_t>(idx[a])];
            const Vector w = from_angles_full(cross_angles);
            Vector x(d);
            x[0] = x1;
            x.tail(d - 1) = r * w;
            pts.emplace_back(Direction::normalize(householder_apply(x, center)));
            for (size_t a = axes.size(); a-- > 0;) {
                if (++idx[a] < static_cast<int>(axes[a].size()))
                    break;
                idx[a] = 0;
            }
        }
    }
    return pts;
}

void require_grid_feasible(Eigen::Index d, int budget) {
    if (d >= 3 && grid_side(d - 1, budget) < 2)
        throw GridTooCoarse("budget admits fewer than two subdivisions per angle");
}

struct ScalarMin {
    double arg = 0.0;
    double value = kInf;
    bool any = false;
};

template <typename F>
ScalarMin uniform_scalar_min(F&& f, double a, double b, int steps) {
    ScalarMin best;
    for (int i = 0; i <= steps; ++i) {
        const double x = a + static_cast<double>(i) * (b - a) / steps;
        const double v = f(x);
        if (!best.any || v < best.value) {
            best = ScalarMin{x, v, true};
        }
    }
    return best;
}

template <typename F>
ScalarMin golden_scalar_min(F&& f, double a, double b, double tol) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lam = ratio * a + (1.0 - ratio) * b;
    double mu = (1.0 - ratio) * a + ratio * b;
    double f1 = f(lam);
    ScalarMin best{lam, f1, true};
    double f2 = f(mu);
    if (f2 < best.value)
        best = ScalarMin{mu, f2, true};
    while (b - a > tol) {
        if (f1 > f2) {
            a = lam;
            lam = mu;
            f1 = f2;
            mu = (1.0 - ratio) * a + ratio * b;
            f2 = f(mu);
            if (f2 < best.value)
                best = ScalarMin{mu, f2, true};
        } else {
            b = mu;
            mu = lam;
            f2 = f1;
            lam = ratio * a + (1.0 - ratio) * b;
            f1 = f(lam);
            if (f1 < best.value)
                best = ScalarMin{lam, f1, true};
        }
    }
    return best;
}

} // namespace

void ApproxConfig::validate() const {
    if (budget < 1)
        throw Error("budget must be positive");
    if (refinements < 1)
        throw Error("refinements must be positive");
    if (!(shrink > 0.0 && shrink < 1.0))
        throw Error("shrink factor must lie in (0, 1)");
    if (!(dirichlet_alpha > 0.0))
        throw Error("Dirichlet parameter must be positive");
    if (!(sa_cooling > 0.0 && sa_cooling < 1.0))
        throw Error("cooling factor must lie in (0, 1)");
    if (!(sa_cap_divisor >= 1.0))
        throw Error("cap divisor must be >= 1");
    if (!(sa_t0 > sa_tmin && sa_tmin > 0.0))
        throw Error("temperatures must satisfy T0 > Tmin > 0");
    if (uniform_steps < 1)
        throw Error("uniform line search needs at least one step");
    if (!(golden_tol > 0.0))
        throw Error("golden-section tolerance must be positive");
    if (!(nm_cap_divisor >= 1.0))
        throw Error("cap divisor must be >= 1");
    if (!(nm_reflection > 0.0) || !(nm_expansion > 1.0) ||
        !(nm_contraction > 0.0 && nm_contraction < 1.0) ||
        !(nm_shrink > 0.0 && nm_shrink < 1.0))
        throw Error("Nelder-Mead coefficients out of range");
}

std::string to_string(Algorithm a) {
    switch (a) {
    case Algorithm::RS: return "RS";
    case Algorithm::GS: return "GS";
    case Algorithm::RRS: return "RRS";
    case Algorithm::RGS: return "RGS";
    case Algorithm::RaSi: return "RaSi";
    case Algorithm::SA: return "SA";
    case Algorithm::CD: return "CD";
    case Algorithm::NM: return "NM";
    }
    throw Error("unknown algorithm");
}

Algorithm parse_algorithm(const std::string& name) {
    std::string s;
    s.reserve(name.size());
    for (char c : name)
        s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "rs") return Algorithm::RS;
    if (s == "gs") return Algorithm::GS;
    if (s == "rrs") return Algorithm::RRS;
    if (s == "rgs") return Algorithm::RGS;
    if (s == "rasi") return Algorithm::RaSi;
    if (s == "sa") return Algorithm::SA;
    if (s == "cd") return Algorithm::CD;
    if (s == "nm") return Algorithm::NM;
    throw Error("unknown algorithm: " + name);
}

ApproxResult random_search(DepthNotion notion, const Vector& z, const Dataset& data,
                           const ApproxConfig& cfg, RngStream& rng, EvalLog* log) {
    cfg.validate();
    Tracker t(notion, z, data, cfg.budget, log);
    for (int i = 0; i < cfg.budget; ++i)
        t.eval(rnd_sphere(data.dim(), rng));
    return t.result();
}

ApproxResult grid_search(DepthNotion notion, const Vector& z, const Dataset& data,
                         const ApproxConfig& cfg, EvalLog* log) {
    cfg.validate();
    Tracker t(notion, z, data, cfg.budget, log);
    for (const Direction& p : spherical_grid(data.dim(), cfg.budget))
        t.eval(p);
    return t.result();
}

ApproxResult refined_random_search(DepthNotion notion, const Vector& z,
                                   const Dataset& data, const ApproxConfig& cfg,
                                   RngStream& rng, EvalLog* log) {
    cfg.validate();
    Tracker t(notion, z, data, cfg.budget, log);
    try {
        Direction p_min = Direction::axis(data.dim(), 0); // the north pole
        double d_min = t.eval(p_min);
        double eps = kPi / 2.0; // initial neighborhood is a hemisphere
        const int n_it = std::max(1, cfg.budget / cfg.refinements);
        for (int r = 0; r < cfg.refinements; ++r) {
            for (int j = 0; j < n_it; ++j) {
                const Direction p = rnd_spherical_cap(p_min, eps, rng);
                const double v = t.eval(p);
                if (v < d_min) {
                    d_min = v;
                    p_min = p;
                }
            }
            eps *= cfg.shrink;
        }
    } catch (const BudgetExhausted&) {
    }
    return t.result();
}

ApproxResult refined_grid_search(DepthNotion notion, const Vector& z,
                                 const Dataset& data, const ApproxConfig& cfg,
                                 EvalLog* log) {
    cfg.validate();
    // Feasibility mirrors the plain grid search at the same (d, budget); the
    // cap grids themselves adapt their subdivision counts per axis.
    require_grid_feasible(data.dim(), cfg.budget);
    Tracker t(notion, z, data, cfg.budget, log);
    try {
        t.eval(Direction::axis(data.dim(), 0));
        double eps = kPi / 2.0;
        const int per_round = std::max(1, cfg.budget / cfg.refinements);
        for (int r = 0; r < cfg.refinements; ++r) {
            for (const Direction& p : cap_grid(t.best_direction(), eps, per_round))
                t.eval(p);
            eps *= cfg.shrink;
        }
    } catch (const BudgetExhausted&) {
    }
    return t.result();
}

ApproxResult random_simplices(DepthNotion notion, const Vector& z, const Dataset& data,
                              const ApproxConfig& cfg, RngStream& rng, EvalLog* log) {
    cfg.validate();
    const Eigen::Index d = data.dim();
    const int n = static_cast<int>(data.size());
    if (n < d + 1)
        throw DataTooSmall("random simplices need at least d+1 data points");
    Tracker t(notion, z, data, cfg.budget, log);
    int consecutive_skips = 0;
    while (!t.exhausted()) {
        const std::vector<int> idx = rnd_subset(static_cast<int>(d) + 1, n, rng);
        const Vector w = rnd_dirichlet_sym(d, cfg.dirichlet_alpha, rng);
        Vector p = -data.rows().row(idx[0]).transpose();
        for (Eigen::Index k = 0; k < d; ++k)
            p += w[k] * data.rows().row(idx[static_cast<size_t>(k) + 1]).transpose();
        if (p.norm() < 1e-12) {
            // degenerate facet (duplicate points); skip without charging budget
            if (++consecutive_skips > 10000)
                break;
            continue;
        }
        consecutive_skips = 0;
        t.eval(Direction::normalize(p));
    }
    if (t.used() == 0)
        t.eval(Direction::axis(d, 0)); // fully degenerate data
    return t.result();
}

ApproxResult simulated_annealing(DepthNotion notion, const Vector& z,
                                 const Dataset& data, const ApproxConfig& cfg,
                                 RngStream& rng, EvalLog* log) {
    cfg.validate();
    Tracker t(notion, z, data, cfg.budget, log);
    try {
        Direction u_cur = start_direction(cfg.sa_start, z, data, rng);
        const double eps = (kPi / 2.0) / cfg.sa_cap_divisor;
        double d_cur = t.eval(u_cur);
        const int levels = static_cast<int>(
            std::ceil(std::log(cfg.sa_t0 / cfg.sa_tmin) / std::log(1.0 / cfg.sa_cooling)));
        const int n_it = std::max(1, cfg.budget / std::max(1, levels));
        double temp = cfg.sa_t0;
        do {
            for (int j = 0; j < n_it; ++j) {
                const Direction u_new = rnd_spherical_cap(u_cur, eps, rng);
                const double d_new = t.eval(u_new);
                const double accept =
                    std::min(std::exp(-(d_new - d_cur) / temp), 1.0);
                if (rng.next_unit() < accept) {
                    u_cur = u_new;
                    d_cur = d_new;
                }
            }
            temp *= cfg.sa_cooling;
        } while (temp >= cfg.sa_tmin);
    } catch (const BudgetExhausted&) {
    }
    return t.result();
}

LineSearchResult line_search_uniform(const std::function<double(const Direction&)>& f,
                                     const Direction& u, const Direction& p, int steps) {
    if (steps < 1)
        throw Error("uniform line search needs at least one step");
    std::optional<LineSearchResult> best;
    for (int i = 0; i <= steps; ++i) {
        const double lambda = -kPi / 2.0 + static_cast<double>(i) * kPi / steps;
        const Direction w = combine(u, p, lambda);
        const double v = f(w);
        if (!best || v < best->value)
            best = LineSearchResult{w, v};
    }
    return *best;
}

LineSearchResult line_search_golden(const std::function<double(const Direction&)>& f,
                                    const Direction& u, const Direction& p, double tol) {
    if (!(tol > 0.0))
        throw Error("golden-section tolerance must be positive");
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = -kPi / 2.0;
    double b = kPi / 2.0;
    double lam = ratio * a + (1.0 - ratio) * b;
    double mu = (1.0 - ratio) * a + ratio * b;

    Direction wl = combine(u, p, lam);
    double f1 = f(wl);
    LineSearchResult best{wl, f1};
    Direction wm = combine(u, p, mu);
    double f2 = f(wm);
    if (f2 < best.value)
        best = LineSearchResult{wm, f2};

    while (b - a > tol) {
        if (f1 > f2) {
            a = lam;
            lam = mu;
            f1 = f2;
            mu = (1.0 - ratio) * a + ratio * b;
            wm = combine(u, p, mu);
            f2 = f(wm);
            if (f2 < best.value)
                best = LineSearchResult{wm, f2};
        } else {
            b = mu;
            mu = lam;
            f2 = f1;
            lam = ratio * a + (1.0 - ratio) * b;
            wl = combine(u, p, lam);
            f1 = f(wl);
            if (f1 < best.value)
                best = LineSearchResult{wl, f1};
        }
    }
    return best;
}

ApproxResult coordinate_descent(DepthNotion notion, const Vector& z,
                                const Dataset& data, const ApproxConfig& cfg,
                                RngStream& rng, EvalLog* log) {
    cfg.validate();
    const Eigen::Index d = data.dim();
    Tracker t(notion, z, data, cfg.budget, log);
    const std::function<double(const Direction&)> objective =
        [&t](const Direction& w) { return t.eval(w); };

    try {
        if (cfg.cd_space == SearchSpace::Sphere) {
            Direction u = rnd_sphere(d, rng);
            for (;;) { // sweeps repeat until the budget interrupts
                const Direction anchor = u; // tangent frame is built once per sweep
                for (Eigen::Index j = 0; j + 1 < d; ++j) {
                    const Direction pj = tangent_frame_direction(anchor, j);
                    const LineSearchResult r =
                        cfg.cd_line_search == LineSearchRule::Golden
                            ? line_search_golden(objective, u, pj, cfg.golden_tol)
                            : line_search_uniform(objective, u, pj, cfg.uniform_steps);
                    u = r.point;
                }
            }
        } else {
            // Euclidean variant: straight coordinate lines, the iterate is
            // renormalized after every accepted step (the objective is
            // constant on rays, so this only conditions the search interval).
            Vector x = rnd_sphere(d, rng).vec();
            const auto eval_vec = [&](const Vector& v) {
                const double norm = v.norm();
                if (norm < 1e-12)
                    return kInf;
                return t.eval(Direction::normalize(v));
            };
            for (;;) {
                for (Eigen::Index j = 0; j < d; ++j) {
                    const auto f = [&](double lambda) {
                        Vector v = x;
                        v[j] += lambda;
                        return eval_vec(v);
                    };
                    const ScalarMin m =
                        cfg.cd_line_search == LineSearchRule::Golden
                            ? golden_scalar_min(f, -2.0, 2.0, cfg.golden_tol)
                            : uniform_scalar_min(f, -2.0, 2.0, cfg.uniform_steps);
                    if (std::isfinite(m.value)) {
                        x[j] += m.arg;
                        const double norm = x.norm();
                        if (norm >= 1e-12)
                            x /= norm;
                        else
                            x = t.best_direction().vec();
                    }
                }
            }
        }
    } catch (const BudgetExhausted&) {
    }
    return t.result();
}

namespace {

struct SphereVertex {
    Direction p;
    double f;
};

struct EuclidVertex {
    Vector x;
    double f;
};

} // namespace

ApproxResult nelder_mead(DepthNotion notion, const Vector& z, const Dataset& data,
                         const ApproxConfig& cfg, RngStream& rng, EvalLog* log) {
    cfg.validate();
    const Eigen::Index d = data.dim();
    Tracker t(notion, z, data, cfg.budget, log);
    const double eps = (kPi / 2.0) / cfg.nm_cap_divisor;

    try {
        const Direction u0 = start_direction(cfg.nm_start, z, data, rng);

        if (cfg.nm_space == SearchSpace::Sphere) {
            const auto by_value = [](const SphereVertex& a, const SphereVertex& b) {
                return a.f < b.f;
            };
            const auto draw_simplex = [&](const Direction& pole) {
                std::vector<SphereVertex> vs;
                vs.reserve(static_cast<size_t>(d));
                for (Eigen::Index i = 0; i < d; ++i) {
                    Direction p = rnd_spherical_cap(pole, eps, rng);
                    const double f = t.eval(p);
                    vs.push_back(SphereVertex{std::move(p), f});
                }
                std::stable_sort(vs.begin(), vs.end(), by_value);
                return vs;
            };

            std::vector<SphereVertex> vs = draw_simplex(u0);
            const size_t worst = static_cast<size_t>(d) - 1;
            for (;;) {
                bool restart = false;
                try {
                    std::vector<Direction> front;
                    front.reserve(worst);
                    for (size_t i = 0; i < worst; ++i)
                        front.push_back(vs[i].p);
                    const Direction centroid = naive_mean(front);

                    const Direction xr = great_circle_point(
                        centroid, vs[worst].p, -cfg.nm_reflection, cfg.nm_bound);
                    const double fr = t.eval(xr);

                    if (vs[0].f <= fr && fr < vs[worst - 1].f) {
                        vs[worst] = SphereVertex{xr, fr};
                    } else if (fr < vs[0].f) {
                        const Direction xe = great_circle_point(
                            centroid, xr, cfg.nm_expansion, cfg.nm_bound);
                        const double fe = t.eval(xe);
                        vs[worst] = fe < fr ? SphereVertex{xe, fe}
                                            : SphereVertex{xr, fr};
                    } else {
                        const Direction& xh = fr < vs[worst].f ? xr : vs[worst].p;
                        const Direction xc = great_circle_point(
                            centroid, xh, cfg.nm_contraction, cfg.nm_bound);
                        const double fc = t.eval(xc);
                        if (fc < vs[worst].f) {
                            vs[worst] = SphereVertex{xc, fc};
                        } else { // reduction toward the best vertex
                            for (size_t i = 1; i < vs.size(); ++i) {
                                try {
                                    vs[i].p = great_circle_point(
                                        vs[0].p, vs[i].p, cfg.nm_shrink, cfg.nm_bound);
                                    vs[i].f = t.eval(vs[i].p);
                                } catch (const DegenerateGeodesic&) {
                                    // vertex already coincides with the best one
                                }
                            }
                            std::stable_sort(vs.begin(), vs.end() - 1, by_value);
                        }
                    }
                    std::inplace_merge(vs.begin(), vs.end() - 1, vs.end(), by_value);
                } catch (const DegenerateMean&) {
                    restart = true;
                } catch (const DegenerateGeodesic&) {
                    restart = true;
                }
                if (restart) // re-seed the simplex around the incumbent
                    vs = draw_simplex(t.best_direction());
            }
        } else {
            // classical Nelder-Mead in R^d over the normalized-evaluation
            // objective, started from d+1 cap draws
            const auto eval_vec = [&](const Vector& v) {
                const double norm = v.norm();
                if (norm < 1e-12)
                    return kInf;
                return t.eval(Direction::normalize(v));
            };
            const auto by_value = [](const EuclidVertex& a, const EuclidVertex& b) {
                return a.f < b.f;
            };
            const auto draw_simplex = [&](const Direction& pole) {
                std::vector<EuclidVertex> vs;
                vs.reserve(static_cast<size_t>(d) + 1);
                for (Eigen::Index i = 0; i < d + 1; ++i) {
                    Vector x = rnd_spherical_cap(pole, eps, rng).vec();
                    const double f = eval_vec(x);
                    vs.push_back(EuclidVertex{std::move(x), f});
                }
                std::stable_sort(vs.begin(), vs.end(), by_value);
                return vs;
            };

            std::vector<EuclidVertex> vs = draw_simplex(u0);
            const size_t worst = static_cast<size_t>(d);
            int idle_iterations = 0;
            for (;;) {
                const int used_before = t.used();
                Vector xo = Vector::Zero(d);
                for (size_t i = 0; i < worst; ++i)
                    xo += vs[i].x;
                xo /= static_cast<double>(worst);

                const Vector xr = xo + cfg.nm_reflection * (xo - vs[worst].x);
                const double fr = eval_vec(xr);
                if (vs[0].f <= fr && fr < vs[worst - 1].f) {
                    vs[worst] = EuclidVertex{xr, fr};
                } else if (fr < vs[0].f) {
                    const Vector xe = xo + cfg.nm_expansion * (xr - xo);
                    const double fe = eval_vec(xe);
                    vs[worst] = fe < fr ? EuclidVertex{xe, fe} : EuclidVertex{xr, fr};
                } else {
                    const Vector& xh = fr < vs[worst].f ? xr : vs[worst].x;
                    const Vector xc = xo + cfg.nm_contraction * (xh - xo);
                    const double fc = eval_vec(xc);
                    if (fc < vs[worst].f) {
                        vs[worst] = EuclidVertex{xc, fc};
                    } else {
                        for (size_t i = 1; i < vs.size(); ++i) {
                            vs[i].x = vs[0].x + cfg.nm_shrink * (vs[i].x - vs[0].x);
                            vs[i].f = eval_vec(vs[i].x);
                        }
                        std::stable_sort(vs.begin(), vs.end() - 1, by_value);
                    }
                }
                std::inplace_merge(vs.begin(), vs.end() - 1, vs.end(), by_value);

                if (t.used() == used_before) { // every candidate degenerated
                    if (++idle_iterations > 100) {
                        vs = draw_simplex(t.best_direction());
                        idle_iterations = 0;
                    }
                } else {
                    idle_iterations = 0;
                }
            }
        }
    } catch (const BudgetExhausted&) {
    }
    return t.result();
}

ApproxResult approximate(DepthNotion notion, const Vector& z, const Dataset& data,
                         const ApproxConfig& cfg, RngStream& rng, EvalLog* log) {
    switch (cfg.algorithm) {
    case Algorithm::RS: return random_search(notion, z, data, cfg, rng, log);
    case Algorithm::GS: return grid_search(notion, z, data, cfg, log);
    case Algorithm::RRS: return refined_random_search(notion, z, data, cfg, rng, log);
    case Algorithm::RGS: return refined_grid_search(notion, z, data, cfg, log);
    case Algorithm::RaSi: return random_simplices(notion, z, data, cfg, rng, log);
    case Algorithm::SA: return simulated_annealing(notion, z, data, cfg, rng, log);
    case Algorithm::CD: return coordinate_descent(notion, z, data, cfg, rng, log);
    case Algorithm::NM: return nelder_mead(notion, z, data, cfg, rng, log);
    }
    throw Error("unknown algorithm");
}

} // namespace projdepth
