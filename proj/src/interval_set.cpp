#include "fuzzdp/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzdp/errors.hpp"

namespace fuzzdp {

IntervalSet::IntervalSet(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw ValidationError("interval set is empty");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        if (!std::isfinite(p.lo) || !std::isfinite(p.hi))
            throw ValidationError("interval endpoint is not finite");
        if (p.lo > p.hi)
            throw ValidationError("interval [" + std::to_string(p.lo) + ", " +
                                  std::to_string(p.hi) + "] has lo > hi");
        if (i > 0 && !(pieces_[i - 1].hi < p.lo))
            throw ValidationError("intervals are not sorted and pairwise disjoint");
    }
}

IntervalSet::IntervalSet(double lo, double hi) : IntervalSet(std::vector<Interval>{{lo, hi}}) {}

IntervalSet IntervalSet::normalized(std::vector<Interval> pieces) {
    if (pieces.empty()) throw ValidationError("interval set is empty");
    for (const auto& p : pieces)
        if (p.lo > p.hi || !std::isfinite(p.lo) || !std::isfinite(p.hi))
            throw ValidationError("malformed interval");
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    out.reserve(pieces.size());
    for (const auto& p : pieces) {
        if (!out.empty() && p.lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, p.hi);
        else
            out.push_back(p);
    }
    return IntervalSet(std::move(out), Trusted{});
}

namespace intervals {

namespace {

// First piece whose hi >= x.
std::size_t first_not_left_of(IntervalSpan b, double x) {
    auto it = std::lower_bound(b.begin(), b.end(), x,
                               [](const Interval& iv, double v) { return iv.hi < v; });
    return static_cast<std::size_t>(it - b.begin());
}

}  // namespace

double distance_to(double x, IntervalSpan b) {
    const std::size_t k = first_not_left_of(b, x);
    if (k == b.size()) return x - b.back().hi;
    if (b[k].lo <= x) return 0.0;
    double d = b[k].lo - x;
    if (k > 0) d = std::min(d, x - b[k - 1].hi);
    return d;
}

double directed_distance(IntervalSpan a, IntervalSpan b) {
    // dist(., b) is piecewise linear: decreasing/increasing away from b's hull
    // and peaked at gap midpoints. Its max over [lo, hi] is attained at lo, hi
    // or a gap midpoint inside [lo, hi].
    double best = 0.0;
    for (const auto& piece : a) {
        best = std::max(best, distance_to(piece.lo, b));
        best = std::max(best, distance_to(piece.hi, b));
        std::size_t k = first_not_left_of(b, piece.lo);
        if (k > 0) --k;
        for (; k + 1 < b.size() && b[k].hi <= piece.hi; ++k) {
            const double mid = 0.5 * (b[k].hi + b[k + 1].lo);
            if (mid >= piece.lo && mid <= piece.hi)
                best = std::max(best, 0.5 * (b[k + 1].lo - b[k].hi));
        }
    }
    return best;
}

double hausdorff(IntervalSpan a, IntervalSpan b) {
    if (a.size() == 1 && b.size() == 1)
        return std::max(std::abs(a[0].lo - b[0].lo), std::abs(a[0].hi - b[0].hi));
    return std::max(directed_distance(a, b), directed_distance(b, a));
}

double max_abs(IntervalSpan a) {
    return std::max(std::abs(a.front().lo), std::abs(a.back().hi));
}

bool contains_point(IntervalSpan a, double x, double slack) {
    return distance_to(x, a) <= slack;
}

bool contains(IntervalSpan outer, IntervalSpan inner, double slack) {
    for (const auto& piece : inner) {
        const std::size_t k = first_not_left_of(outer, piece.lo - slack);
        if (k == outer.size()) return false;
        if (outer[k].lo - slack > piece.lo || outer[k].hi + slack < piece.hi) return false;
    }
    return true;
}

std::vector<Interval> intersect(IntervalSpan a, IntervalSpan b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double lo = std::max(a[i].lo, b[j].lo);
        const double hi = std::min(a[i].hi, b[j].hi);
        if (lo <= hi) out.push_back({lo, hi});
        if (a[i].hi < b[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

std::vector<Interval> unite(IntervalSpan a, IntervalSpan b) {
    std::vector<Interval> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    auto merged = IntervalSet::normalized(std::move(all));
    return {merged.pieces().begin(), merged.pieces().end()};
}

double measure(IntervalSpan a) {
    double m = 0.0;
    for (const auto& p : a) m += p.hi - p.lo;
    return m;
}

}  // namespace intervals

}  // namespace fuzzdp
