#include "fuzzdp/dp_metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzdp/errors.hpp"
#include "fuzzdp/setgeom.hpp"

namespace fuzzdp {

PNorm::PNorm(double p) : p_(p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw ValidationError("p must satisfy 1 <= p < infinity, got " + std::to_string(p));
}

namespace {

// Neumaier-compensated running sum; keeps long level sums reproducible to
// the last bits regardless of magnitude ordering.
class Accumulator {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double power(double x, double p) { return p == 1.0 ? x : std::pow(x, p); }
double root(double s, double p) { return p == 1.0 ? s : std::pow(s, 1.0 / p); }

// Index of the first level >= value in levels[from..], with the same
// 1e-12 relative slack as AlphaGrid::index_at_or_above.
std::size_t advance_to(std::span<const double> levels, std::size_t from, double value) {
    while (from + 1 < levels.size() && levels[from] < value * (1.0 - 1e-12)) ++from;
    return from;
}

}  // namespace

double level_hausdorff(const FuzzySet& u, std::size_t i, const FuzzySet& v, std::size_t j) {
    if (u.dim() == 1) return intervals::hausdorff(u.pieces_at(i), v.pieces_at(j));
    return hausdorff(u.planar_at(i), v.planar_at(j));
}

double dp_distance(const FuzzySet& u, const FuzzySet& v, PNorm pn) {
    if (u.dim() != v.dim()) throw DimMismatch(u.dim(), v.dim());
    const double p = pn.value();
    Accumulator acc;
    if (u.grid_ptr() == v.grid_ptr() || u.grid() == v.grid()) {
        const auto w = u.grid().weights();
        for (std::size_t j = 0; j < u.levels(); ++j)
            acc.add(w[j] * power(level_hausdorff(u, j, v, j), p));
        return root(acc.value(), p);
    }
    const AlphaGrid merged = merge(u.grid(), v.grid());
    const auto lv = merged.levels();
    const auto w = merged.weights();
    std::size_t iu = 0, iv = 0;
    for (std::size_t m = 0; m < lv.size(); ++m) {
        iu = advance_to(u.grid().levels(), iu, lv[m]);
        iv = advance_to(v.grid().levels(), iv, lv[m]);
        acc.add(w[m] * power(level_hausdorff(u, iu, v, iv), p));
    }
    return root(acc.value(), p);
}

double p_mean_modulus(const FuzzySet& u, double h, PNorm pn) {
    if (!(h >= 0.0 && h < 1.0)) throw ValidationError("h must lie in [0, 1)");
    if (h == 0.0) return 0.0;
    const double p = pn.value();
    const auto lv = u.grid().levels();
    const std::size_t n = lv.size();

    // Breakpoints: levels above h (set A) and levels shifted by h (set B).
    // For alpha in a cell (b_prev, b], [u]_alpha is the cut at the first
    // A-level >= b and [u]_{alpha-h} the cut at the first B-entry >= b.
    std::size_t a0 = static_cast<std::size_t>(std::upper_bound(lv.begin(), lv.end(), h) - lv.begin());
    std::vector<double> shifted(n);
    for (std::size_t j = 0; j < n; ++j) shifted[j] = lv[j] + h;

    std::vector<double> cuts;
    cuts.reserve(2 * n);
    std::merge(lv.begin() + static_cast<std::ptrdiff_t>(a0), lv.end(), shifted.begin(),
               std::upper_bound(shifted.begin(), shifted.end(), 1.0), std::back_inserter(cuts));
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Accumulator acc;
    double prev = h;
    std::size_t ia = a0, ib = 0;
    for (double b : cuts) {
        if (b <= prev) continue;
        while (ia + 1 < n && lv[ia] < b) ++ia;
        while (ib + 1 < n && shifted[ib] < b) ++ib;
        acc.add((b - prev) * power(level_hausdorff(u, ia, u, ib), p));
        prev = b;
    }
    return root(acc.value(), p);
}

double lp_extension_norm(const FuzzySet& u, PNorm pn) {
    const double p = pn.value();
    const auto w = u.grid().weights();
    Accumulator acc;
    for (std::size_t j = 0; j < u.levels(); ++j) acc.add(w[j] * power(u.radius_at(j), p));
    return root(acc.value(), p);
}

double ball_residual(const FuzzySet& u, double r, PNorm pn) {
    if (u.support() == SupportKind::lp_tail)
        throw UnboundedSupport("ball residual needs the full support");
    if (!(r > 0.0)) throw ValidationError("ball radius must be positive");
    const double p = pn.value();
    const auto w = u.grid().weights();
    Accumulator acc;
    for (std::size_t j = 0; j < u.levels(); ++j)
        acc.add(w[j] * power(std::max(u.radius_at(j) - r, 0.0), p));
    return root(acc.value(), p);
}

std::vector<double> default_h_grid(const AlphaGrid& grid) {
    const auto lv = grid.levels();
    double smallest = lv.size() > 1 ? lv[1] - lv[0] : 0.5;
    for (std::size_t j = 2; j < lv.size(); ++j) smallest = std::min(smallest, lv[j] - lv[j - 1]);
    smallest = std::max(smallest, 1e-12);
    std::vector<double> hs;
    for (double h = smallest; h <= 0.5; h *= std::exp2(0.25)) hs.push_back(h);
    return hs;
}

std::optional<double> certified_delta(std::span<const double> h_grid,
                                      std::span<const double> omega, double eps) {
    for (std::size_t i = 0; i < h_grid.size(); ++i)
        if (!(omega[i] < eps)) {
            if (i == 0) return std::nullopt;
            return h_grid[i];
        }
    if (h_grid.empty()) return std::nullopt;
    return h_grid.back();
}

ModulusReport modulus_report(const FuzzySet& u, std::size_t id, std::span<const double> h_grid,
                             PNorm p, std::span<const double> eps_list) {
    ModulusReport r;
    r.u_id = id;
    r.h_grid.assign(h_grid.begin(), h_grid.end());
    std::sort(r.h_grid.begin(), r.h_grid.end());
    r.omega.reserve(r.h_grid.size());
    for (double h : r.h_grid) r.omega.push_back(p_mean_modulus(u, h, p));
    for (double eps : eps_list) r.delta_for_eps[eps] = certified_delta(r.h_grid, r.omega, eps);
    return r;
}

}  // namespace fuzzdp
