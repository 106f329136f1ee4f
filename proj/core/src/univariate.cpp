#include "projdepth/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace projdepth {

std::string to_string(DepthNotion notion) {
    switch (notion) {
    case DepthNotion::Mahalanobis: return "mahalanobis";
    case DepthNotion::Zonoid: return "zonoid";
    case DepthNotion::Halfspace: return "halfspace";
    case DepthNotion::Projection: return "projection";
    case DepthNotion::AsymProjection: return "asymprojection";
    }
    throw Error("unknown depth notion");
}

DepthNotion parse_notion(const std::string& name) {
    if (name == "mahalanobis") return DepthNotion::Mahalanobis;
    if (name == "zonoid") return DepthNotion::Zonoid;
    if (name == "halfspace") return DepthNotion::Halfspace;
    if (name == "projection") return DepthNotion::Projection;
    if (name == "asymprojection") return DepthNotion::AsymProjection;
    throw Error("unknown depth notion: " + name);
}

UnivariateSample::UnivariateSample(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.empty())
        throw Error("UnivariateSample requires at least one value");
}

const std::vector<double>& UnivariateSample::sorted() const {
    if (!sorted_) {
        std::vector<double> s = values_;
        std::sort(s.begin(), s.end());
        sorted_ = std::move(s);
    }
    return *sorted_;
}

double UnivariateSample::mean() const {
    if (!mean_)
        mean_ = std::accumulate(values_.begin(), values_.end(), 0.0) /
                static_cast<double>(values_.size());
    return *mean_;
}

double UnivariateSample::median() const {
    const std::vector<double>& s = sorted();
    const size_t n = s.size();
    return (n % 2 == 1) ? s[n / 2] : 0.5 * (s[n / 2 - 1] + s[n / 2]);
}

double md1(double zeta, const UnivariateSample& y) {
    const double ybar = y.mean();
    double s2 = 0.0;
    for (double v : y.values()) {
        const double c = v - ybar;
        s2 += c * c;
    }
    s2 /= static_cast<double>(y.size());
    if (s2 <= 0.0)
        return zeta == ybar ? 1.0 : 0.0;
    const double c = zeta - ybar;
    return 1.0 / (1.0 + c * c / s2);
}

double hd1(double zeta, const UnivariateSample& y) {
    int ge = 0;
    int le = 0;
    for (double v : y.values()) {
        if (v >= zeta) ++ge;
        if (v <= zeta) ++le;
    }
    return static_cast<double>(std::min(ge, le)) / static_cast<double>(y.size());
}

namespace {

// Solves sup{s in (0, n] : hi(s/n) >= zeta} for zeta in (mean, max], where
// hi(alpha) is the upper zonoid trimmed bound: with k = floor(s) and T_k the
// sum of the k largest values, hi = (T_k + (s - k) y_(n-k)) / s on [k, k+1].
// hi decreases piecewise-hyperbolically from the maximum (s <= 1) to the mean
// (s = n), so the crossing segment is found by bisecting the integer bounds.
double zonoid_upper_weight(double zeta, const std::vector<double>& sorted) {
    const int n = static_cast<int>(sorted.size());
    if (zeta > sorted.back())
        return 0.0;

    std::vector<double> top(static_cast<size_t>(n) + 1, 0.0); // top[k] = T_k
    for (int k = 1; k <= n; ++k)
        top[static_cast<size_t>(k)] =
            top[static_cast<size_t>(k) - 1] + sorted[static_cast<size_t>(n - k)];

    // largest k in [1, n-1] with mean of the top k >= zeta
    int lo = 1, hi = n - 1;
    while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        if (top[static_cast<size_t>(mid)] >= static_cast<double>(mid) * zeta)
            lo = mid;
        else
            hi = mid - 1;
    }
    const int k = lo;
    const double next = sorted[static_cast<size_t>(n - 1 - k)]; // y_(n-k)
    const double denom = zeta - next;
    double s;
    if (denom > 0.0)
        s = (top[static_cast<size_t>(k)] - static_cast<double>(k) * next) / denom;
    else
        s = static_cast<double>(k) + 1.0; // flat segment under fp ties
    s = std::clamp(s, static_cast<double>(k), static_cast<double>(k) + 1.0);
    return s;
}

} // namespace

double zd1(double zeta, const UnivariateSample& y) {
    const int n = y.size();
    const double ybar = y.mean();
    if (zeta == ybar)
        return 1.0;
    if (zeta > ybar)
        return zonoid_upper_weight(zeta, y.sorted()) / static_cast<double>(n);
    // lower side: mirror through negation (exact in floating point)
    const std::vector<double>& s = y.sorted();
    std::vector<double> neg(s.size());
    for (size_t i = 0; i < s.size(); ++i)
        neg[i] = -s[s.size() - 1 - i];
    return zonoid_upper_weight(-zeta, neg) / static_cast<double>(n);
}

namespace {

// Median of |v - med| for sorted v without materializing the deviations:
// they form two sorted runs (left of the median descending, right ascending),
// so the two central order statistics come from a counting two-pointer merge.
double mad_from_sorted(const std::vector<double>& s, double med) {
    const size_t n = s.size();
    const size_t want_lo = (n - 1) / 2;
    const size_t want_hi = n / 2;
    // split: values < med feed the left run (deviations med - s[i]), the rest
    // the right run (s[i] - med)
    const auto split = static_cast<size_t>(
        std::lower_bound(s.begin(), s.end(), med) - s.begin());
    size_t li = split; // walks down: next left deviation is med - s[li-1]
    size_t ri = split; // walks up:   next right deviation is s[ri] - med
    double at_lo = 0.0, at_hi = 0.0;
    for (size_t taken = 0; taken <= want_hi; ++taken) {
        double dev;
        const bool left_avail = li > 0;
        const bool right_avail = ri < n;
        if (left_avail && (!right_avail || med - s[li - 1] <= s[ri] - med)) {
            dev = med - s[li - 1];
            --li;
        } else {
            dev = s[ri] - med;
            ++ri;
        }
        if (taken == want_lo) at_lo = dev;
        if (taken == want_hi) at_hi = dev;
    }
    return 0.5 * (at_lo + at_hi);
}

double median_of_slice(const std::vector<double>& s, size_t begin, size_t end) {
    const size_t n = end - begin;
    const size_t mid = begin + n / 2;
    return (n % 2 == 1) ? s[mid] : 0.5 * (s[mid - 1] + s[mid]);
}

} // namespace

double pd1(double zeta, const UnivariateSample& y) {
    const double med = y.median();
    const double mad = mad_from_sorted(y.sorted(), med);
    if (mad <= 0.0)
        return zeta == med ? 1.0 : 0.0;
    return 1.0 / (1.0 + std::abs(zeta - med) / mad);
}

double apd1(double zeta, const UnivariateSample& y) {
    const std::vector<double>& s = y.sorted();
    const double med = y.median();
    const size_t n = s.size();

    // positive orientation: deviations y_i - med > 0 live in s[first_above, n)
    const auto first_above = static_cast<size_t>(
        std::upper_bound(s.begin(), s.end(), med) - s.begin());
    const double plus_part = std::max(zeta - med, 0.0);
    double v_plus;
    if (first_above == n) {
        v_plus = plus_part <= 0.0 ? 1.0 : 0.0;
    } else {
        // deviations s[i] - med are sorted; their median is the slice median minus med
        const double madp = median_of_slice(s, first_above, n) - med;
        v_plus = 1.0 / (1.0 + plus_part / madp);
    }

    // negated orientation: med(-Y) = -med; positive deviations are med - y_i > 0
    const auto first_at_or_above = static_cast<size_t>(
        std::lower_bound(s.begin(), s.end(), med) - s.begin());
    const double minus_part = std::max(med - zeta, 0.0);
    double v_minus;
    if (first_at_or_above == 0) {
        v_minus = minus_part <= 0.0 ? 1.0 : 0.0;
    } else {
        const double madp = med - median_of_slice(s, 0, first_at_or_above);
        v_minus = 1.0 / (1.0 + minus_part / madp);
    }

    return std::min(v_plus, v_minus);
}

double univariate_depth(DepthNotion notion, double zeta, const UnivariateSample& y) {
    switch (notion) {
    case DepthNotion::Mahalanobis: return md1(zeta, y);
    case DepthNotion::Zonoid: return zd1(zeta, y);
    case DepthNotion::Halfspace: return hd1(zeta, y);
    case DepthNotion::Projection: return pd1(zeta, y);
    case DepthNotion::AsymProjection: return apd1(zeta, y);
    }
    throw Error("unknown depth notion");
}

} // namespace projdepth
