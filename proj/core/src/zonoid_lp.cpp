#include "zonoid_lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace projdepth::detail {

namespace {

enum class VarState : unsigned char { AtLower, AtUpper, Basic };

constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr int kDegenerateRunForBland = 64;

} // namespace

ZonoidLpResult zonoid_lp_max_weight(const Matrix& cols) {
    const Eigen::Index d = cols.rows();
    const Eigen::Index n = cols.cols();
    const Eigen::Index total = n + d; // structural + artificial

    // T = B^{-1} [cols | I], updated in place by pivots.
    Matrix T(d, total);
    T.leftCols(n) = cols;
    T.rightCols(d) = Matrix::Identity(d, d);

    // Reduced-cost row for maximize sum(nu): artificials carry cost 0.
    Vector reduced = Vector::Zero(total);
    reduced.head(n).setOnes();

    std::vector<VarState> state(static_cast<size_t>(total), VarState::AtLower);
    std::vector<Eigen::Index> basis(static_cast<size_t>(d));
    for (Eigen::Index r = 0; r < d; ++r) {
        basis[static_cast<size_t>(r)] = n + r;
        state[static_cast<size_t>(n + r)] = VarState::Basic;
    }
    Vector basic_value = Vector::Zero(d);

    const auto upper = [&](Eigen::Index j) { return j < n ? 1.0 : 0.0; };

    const long max_iters = 400L * static_cast<long>(total) + 10000L;
    int degenerate_run = 0;
    bool bland = false;

    for (long iter = 0; iter < max_iters; ++iter) {
        // entering variable (artificials never re-enter)
        Eigen::Index enter = -1;
        double best_score = kCostTol;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (state[static_cast<size_t>(j)] == VarState::Basic)
                continue;
            const double r = reduced[j];
            const double score =
                state[static_cast<size_t>(j)] == VarState::AtLower ? r : -r;
            if (score > best_score) {
                enter = j;
                best_score = score;
                if (bland)
                    break; // smallest eligible index
            }
        }
        if (enter < 0) { // optimal
            double sum = 0.0;
            for (Eigen::Index j = 0; j < n; ++j)
                if (state[static_cast<size_t>(j)] == VarState::AtUpper)
                    sum += 1.0;
            for (Eigen::Index r = 0; r < d; ++r)
                if (basis[static_cast<size_t>(r)] < n)
                    sum += basic_value[r];

            // feasibility of the recovered solution against the original data
            Vector nu = Vector::Zero(n);
            for (Eigen::Index j = 0; j < n; ++j)
                if (state[static_cast<size_t>(j)] == VarState::AtUpper)
                    nu[j] = 1.0;
            for (Eigen::Index r = 0; r < d; ++r)
                if (basis[static_cast<size_t>(r)] < n)
                    nu[basis[static_cast<size_t>(r)]] = basic_value[r];
            const double scale = 1.0 + cols.cwiseAbs().maxCoeff();
            if ((cols * nu).cwiseAbs().maxCoeff() > 1e-9 * scale)
                return {sum, false};
            return {sum, true};
        }

        // direction of basic values as `enter` moves into its range by t >= 0
        const bool from_lower = state[static_cast<size_t>(enter)] == VarState::AtLower;
        const double move_sign = from_lower ? 1.0 : -1.0;
        // basic_value changes by -move_sign * t * T.col(enter)

        double t_max = upper(enter); // bound flip distance (structural range 1)
        Eigen::Index leave_row = -1;
        bool leave_at_upper = false;
        for (Eigen::Index r = 0; r < d; ++r) {
            const double w = move_sign * T(r, enter);
            const Eigen::Index bj = basis[static_cast<size_t>(r)];
            const double ub = upper(bj);
            double limit = std::numeric_limits<double>::infinity();
            bool hits_upper = false;
            if (w > kPivotTol) { // basic value decreases toward lower bound 0
                limit = basic_value[r] / w;
            } else if (w < -kPivotTol) { // increases toward its upper bound
                limit = (ub - basic_value[r]) / (-w);
                hits_upper = true;
            } else {
                continue;
            }
            if (limit < t_max - 1e-15 ||
                (limit < t_max + 1e-15 && leave_row >= 0 &&
                 bj < basis[static_cast<size_t>(leave_row)])) {
                t_max = std::max(0.0, limit);
                leave_row = r;
                leave_at_upper = hits_upper;
            }
        }

        if (t_max <= 0.0)
            ++degenerate_run;
        else
            degenerate_run = 0;
        if (degenerate_run >= kDegenerateRunForBland)
            bland = true;

        if (leave_row < 0) {
            // bound flip: enter crosses its whole range, basis unchanged
            basic_value -= move_sign * t_max * T.col(enter);
            state[static_cast<size_t>(enter)] =
                from_lower ? VarState::AtUpper : VarState::AtLower;
            continue;
        }

        const double pivot = T(leave_row, enter);
        if (std::abs(pivot) < kPivotTol)
            return {0.0, false};

        // update basic values, then pivot the tableau
        basic_value -= move_sign * t_max * T.col(enter);
        const Eigen::Index leaving = basis[static_cast<size_t>(leave_row)];
        state[static_cast<size_t>(leaving)] =
            leave_at_upper ? VarState::AtUpper : VarState::AtLower;
        state[static_cast<size_t>(enter)] = VarState::Basic;
        basis[static_cast<size_t>(leave_row)] = enter;

        // entering variable's value after the move
        const double enter_value =
            (from_lower ? 0.0 : upper(enter)) + move_sign * t_max;

        T.row(leave_row) /= pivot;
        for (Eigen::Index r = 0; r < d; ++r) {
            if (r == leave_row)
                continue;
            const double f = T(r, enter);
            if (f != 0.0)
                T.row(r) -= f * T.row(leave_row);
        }
        const double rc = reduced[enter];
        if (rc != 0.0)
            reduced -= rc * T.row(leave_row).transpose();
        basic_value[leave_row] = enter_value;
    }
    return {0.0, false};
}

} // namespace projdepth::detail
