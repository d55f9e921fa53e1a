#include "fuzzdp/alpha_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzdp/errors.hpp"

namespace fuzzdp {

std::string_view to_string(Quadrature q) {
    return q == Quadrature::step ? "step" : "log_linear";
}

Quadrature quadrature_from_string(std::string_view s) {
    if (s == "step") return Quadrature::step;
    if (s == "log_linear") return Quadrature::log_linear;
    throw ValidationError("unknown quadrature rule '" + std::string(s) + "'");
}

namespace {

// (d + expm1(-d)) / d, i.e. the weight fraction of the upper node of a cell
// [a, b] with d = ln(b/a), times b. Series below 1e-3 to avoid cancellation.
double upper_fraction(double d) {
    if (d < 1e-3) return d / 2 - d * d / 6 + d * d * d / 24 - d * d * d * d / 120;
    return (d + std::expm1(-d)) / d;
}

std::vector<double> compute_weights(const std::vector<double>& lv, Quadrature rule) {
    std::vector<double> w(lv.size(), 0.0);
    w[0] = lv[0];
    for (std::size_t k = 1; k < lv.size(); ++k) {
        const double a = lv[k - 1], b = lv[k];
        if (rule == Quadrature::step) {
            w[k] = b - a;
            continue;
        }
        const double hi = b * upper_fraction(std::log(b / a));
        w[k] += hi;
        w[k - 1] += (b - a) - hi;
    }
    return w;
}

}  // namespace

AlphaGrid::AlphaGrid(std::vector<double> levels, Quadrature rule)
    : levels_(std::move(levels)), rule_(rule) {
    if (levels_.empty()) throw ValidationError("alpha grid is empty");
    if (levels_.back() != 1.0) throw ValidationError("alpha grid must end at level 1");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (!(levels_[i] > 0.0 && levels_[i] <= 1.0))
            throw ValidationError("alpha level " + std::to_string(levels_[i]) +
                                  " outside (0, 1]");
        if (i > 0 && !(levels_[i - 1] < levels_[i]))
            throw ValidationError("alpha levels must be strictly increasing");
    }
    weights_ = compute_weights(levels_, rule_);
}

AlphaGrid AlphaGrid::uniform(std::size_t n, double alpha_min) {
    if (n < 2) throw ValidationError("grid needs at least 2 levels");
    if (!(alpha_min > 0.0 && alpha_min < 1.0)) throw ValidationError("alpha_min must be in (0,1)");
    std::vector<double> lv(n);
    for (std::size_t k = 0; k < n; ++k)
        lv[k] = alpha_min + (1.0 - alpha_min) * static_cast<double>(k) / static_cast<double>(n - 1);
    lv.back() = 1.0;
    return AlphaGrid(std::move(lv));
}

AlphaGrid AlphaGrid::regular(std::size_t n) {
    if (n < 2) throw ValidationError("grid needs at least 2 levels");
    std::vector<double> lv(n);
    for (std::size_t j = 1; j <= n; ++j) lv[j - 1] = static_cast<double>(j) / static_cast<double>(n);
    return AlphaGrid(std::move(lv));
}

AlphaGrid AlphaGrid::with_tail(std::size_t n, double alpha_min, double floor) {
    auto base = uniform(n, alpha_min);
    std::vector<double> tail;
    for (double a = alpha_min / 2; a >= floor; a /= 2) tail.push_back(a);
    std::reverse(tail.begin(), tail.end());
    tail.insert(tail.end(), base.levels_.begin(), base.levels_.end());
    return AlphaGrid(std::move(tail));
}

AlphaGrid AlphaGrid::graded(std::size_t n, double alpha_min) {
    if (n < 2) throw ValidationError("grid needs at least 2 levels");
    if (!(alpha_min > 0.0 && alpha_min < 1.0)) throw ValidationError("alpha_min must be in (0,1)");
    const double octaves = std::log2(1.0 / alpha_min);
    const auto per_octave =
        static_cast<std::size_t>(std::ceil(static_cast<double>(n - 1) / octaves - 1e-12));
    const auto m = std::max<std::size_t>(per_octave, 1);
    const auto top = static_cast<std::size_t>(std::floor(static_cast<double>(m) * octaves + 1e-9));
    std::vector<double> lv;
    lv.reserve(top + 1);
    for (std::size_t k = top + 1; k-- > 0;) {
        // Whole octaves are formed exactly so that 2^-j stays representable.
        const std::size_t whole = k / m, frac = k % m;
        double v = std::ldexp(1.0, -static_cast<int>(whole));
        if (frac != 0) v *= std::exp2(-static_cast<double>(frac) / static_cast<double>(m));
        lv.push_back(v);
    }
    return AlphaGrid(std::move(lv), Quadrature::log_linear);
}

std::size_t AlphaGrid::index_at_or_above(double alpha) const {
    if (!(alpha > 0.0 && alpha <= 1.0 + 1e-12))
        throw ValidationError("alpha " + std::to_string(alpha) + " outside (0, 1]");
    auto it = std::lower_bound(levels_.begin(), levels_.end(), alpha);
    auto k = static_cast<std::size_t>(it - levels_.begin());
    if (k > 0 && levels_[k - 1] >= alpha * (1.0 - 1e-12)) return k - 1;
    return std::min(k, levels_.size() - 1);
}

std::vector<double> merge_levels(std::span<const double> a, std::span<const double> b) {
    std::vector<double> all;
    all.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
    std::vector<double> out;
    out.reserve(all.size());
    for (double v : all) {
        if (!out.empty() && v - out.back() <= 1e-15 * v) {
            // Keep the larger value: an exact grid level such as 1 must survive.
            out.back() = std::max(out.back(), v);
            continue;
        }
        out.push_back(v);
    }
    return out;
}

AlphaGrid AlphaGrid::refined(std::span<const double> extra) const {
    std::vector<double> sorted(extra.begin(), extra.end());
    std::sort(sorted.begin(), sorted.end());
    for (double v : sorted)
        if (!(v > 0.0 && v <= 1.0)) throw ValidationError("refinement level outside (0, 1]");
    return AlphaGrid(merge_levels(levels_, sorted), rule_);
}

AlphaGrid merge(const AlphaGrid& a, const AlphaGrid& b) {
    if (a == b) return a;
    const Quadrature rule = a.rule() == b.rule() ? a.rule() : Quadrature::step;
    return AlphaGrid(merge_levels(a.levels(), b.levels()), rule);
}

}  // namespace fuzzdp
