#include "fuzzdp/compactness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fuzzdp/errors.hpp"
#include "fuzzdp/parallel.hpp"

namespace fuzzdp {

Family::Family(std::vector<FuzzySet> members, PNorm p, std::vector<std::string> ids)
    : members_(std::move(members)), p_(p), ids_(std::move(ids)) {
    if (members_.empty()) throw ValidationError("family must not be empty");
    for (const auto& m : members_)
        if (m.dim() != members_.front().dim()) throw DimMismatch(members_.front().dim(), m.dim());
    if (ids_.empty())
        for (std::size_t i = 0; i < members_.size(); ++i) ids_.push_back(std::to_string(i));
    if (ids_.size() != members_.size()) throw ValidationError("one id per member expected");
}

bool Family::shared_grid() const {
    const auto& g = members_.front();
    return std::all_of(members_.begin(), members_.end(), [&](const FuzzySet& m) {
        return m.grid_ptr() == g.grid_ptr() || m.grid() == g.grid();
    });
}

std::size_t tail_start(std::size_t n) {
    if (n <= 2) return 0;
    const std::size_t len = std::max<std::size_t>(2, (n + 3) / 4);
    return n - len;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::totally_bounded_evidence: return "totally_bounded_evidence";
        case Verdict::fails_boundedness: return "fails_boundedness";
        case Verdict::fails_equi_continuity: return "fails_equi_continuity";
    }
    return "fails_boundedness";
}

CompactnessReport diagnose(const Family& U, std::span<const double> eps_list,
                           const DiagnoseOptions& opts) {
    CompactnessReport rep;
    rep.bound_limit = opts.bound_limit;
    rep.delta_floor = opts.delta_floor;
    rep.h_grid = opts.h_grid.empty() ? default_h_grid(U[0].grid()) : opts.h_grid;
    std::sort(rep.h_grid.begin(), rep.h_grid.end());

    for (std::size_t i = 0; i < U.size(); ++i) {
        const double m = lp_extension_norm(U[i], U.p());
        if (i == 0 || m > rep.bound_M) {
            rep.bound_M = m;
            rep.bound_member = i;
        }
    }
    rep.bounded = std::isfinite(rep.bound_M) && rep.bound_M <= opts.bound_limit;

    const auto table = par::modulus_table(U.members(), rep.h_grid, U.p());
    std::vector<std::size_t> argmax(rep.h_grid.size(), 0);
    rep.sup_omega.assign(rep.h_grid.size(), 0.0);
    for (std::size_t j = 0; j < rep.h_grid.size(); ++j)
        for (std::size_t i = 0; i < U.size(); ++i)
            if (i == 0 || table(i, j) > rep.sup_omega[j]) {
                rep.sup_omega[j] = table(i, j);
                argmax[j] = i;
            }

    bool equi = true;
    for (double eps : eps_list) {
        EquiEntry e;
        e.eps = eps;
        e.delta = certified_delta(rep.h_grid, rep.sup_omega, eps);
        e.pass = e.delta && *e.delta >= opts.delta_floor;
        if (!e.pass) {
            for (std::size_t j = 0; j < rep.h_grid.size(); ++j)
                if (!(rep.sup_omega[j] < eps)) {
                    e.witness = EquiWitness{argmax[j], rep.h_grid[j], rep.sup_omega[j]};
                    break;
                }
            equi = false;
        }
        rep.equi.push_back(e);
    }
    rep.verdict = !rep.bounded ? Verdict::fails_boundedness
                  : !equi      ? Verdict::fails_equi_continuity
                               : Verdict::totally_bounded_evidence;
    return rep;
}

NetResult epsilon_net(const Family& U, double eps) {
    if (!(eps > 0)) throw ValidationError("eps must be positive");
    const auto d = par::distance_matrix(U.members(), U.p());
    const std::size_t n = U.size();
    NetResult net;
    net.eps = eps;
    std::vector<double> gap(n);
    std::vector<std::size_t> nearest(n, 0);
    for (std::size_t i = 0; i < n; ++i) gap[i] = d(i, 0);
    net.center_ids.push_back(0);
    for (;;) {
        std::size_t far = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (gap[i] > gap[far]) far = i;
        if (gap[far] < eps) break;
        net.center_ids.push_back(far);
        for (std::size_t i = 0; i < n; ++i)
            if (d(i, far) < gap[i] || (d(i, far) == gap[i] && far < nearest[i])) {
                gap[i] = d(i, far);
                nearest[i] = far;
            }
    }
    for (std::size_t i = 0; i < n; ++i) {
        net.assignments.push_back({i, nearest[i], gap[i]});
        net.radius = std::max(net.radius, gap[i]);
    }
    return net;
}

namespace {

double level_h(const Family& seq, std::size_t a, std::size_t b, std::size_t j) {
    return level_hausdorff(seq[a], j, seq[b], j);
}

bool tail_cauchy(const Family& seq, std::span<const std::size_t> sub, std::size_t j, double tol) {
    for (std::size_t x = tail_start(sub.size()); x < sub.size(); ++x)
        for (std::size_t y = x + 1; y < sub.size(); ++y)
            if (!(level_h(seq, sub[x], sub[y], j) <= tol)) return false;
    return true;
}

bool tail_escaping(const Family& seq, std::span<const std::size_t> sub, std::size_t j, double tol) {
    const std::size_t s = tail_start(sub.size());
    if (sub.size() - s < 2) return false;
    for (std::size_t x = s + 1; x < sub.size(); ++x)
        if (seq[sub[x]].radius_at(j) < seq[sub[x - 1]].radius_at(j) - tol) return false;
    return seq[sub.back()].radius_at(j) - seq[sub[s]].radius_at(j) > tol;
}

}  // namespace

DiagonalResult diagonal_limit(const Family& seq, std::span<const double> rational_grid,
                              const DiagonalOptions& opts) {
    if (!seq.shared_grid()) throw ValidationError("diagonal_limit needs one shared grid");
    const double tol = opts.tolerance;
    const AlphaGrid& grid = seq[0].grid();
    const std::size_t nlev = grid.size();
    const std::size_t n = seq.size();

    std::vector<std::size_t> order;
    std::vector<char> listed(nlev, 0);
    if (rational_grid.empty()) {
        for (std::size_t j = 0; j < nlev; ++j) order.push_back(j);
    } else {
        for (double q : rational_grid) order.push_back(grid.index_at_or_above(q));
    }
    for (std::size_t j : order) listed[j] = 1;

    std::vector<std::size_t> sub(n);
    for (std::size_t i = 0; i < n; ++i) sub[i] = i;
    const std::size_t budget =
        opts.max_rounds.value_or(static_cast<std::size_t>(std::bit_width(n)) - 1);
    std::size_t rounds = 0;

    for (std::size_t j : order) {
        if (tail_cauchy(seq, sub, j, tol) || rounds >= budget) continue;
        std::vector<std::size_t> near;
        for (std::size_t s : sub)
            if (level_h(seq, s, sub.back(), j) <= tol) near.push_back(s);
        if (near.size() >= 2 && near.size() < sub.size() && tail_cauchy(seq, near, j, tol)) {
            sub = std::move(near);
            ++rounds;
        }
    }

    std::vector<char> converged(nlev, 0);
    for (std::size_t j = 0; j < nlev; ++j)
        converged[j] = listed[j] && tail_cauchy(seq, sub, j, tol);

    const auto first = static_cast<std::size_t>(
        std::find(converged.begin(), converged.end(), 1) - converged.begin());
    if (first == nlev) throw NonConvergentLevel(grid.level(0));
    for (std::size_t j = 0; j < first; ++j)
        if (!tail_escaping(seq, sub, j, tol)) throw NonConvergentLevel(grid.level(j));

    // Source level for every output cut, all taken from the last element.
    std::vector<std::size_t> source(nlev);
    for (std::size_t j = 0; j < nlev; ++j)
        source[j] = j < first || converged[j] ? j : source[j - 1];

    const FuzzySet& last = seq[sub.back()];
    const bool escaping = first > 0;
    const SupportKind support =
        escaping || last.support() == SupportKind::lp_tail ? SupportKind::lp_tail
                                                           : SupportKind::bounded;
    std::optional<FuzzySet> limit;
    if (last.dim() == 1) {
        std::vector<Interval> pieces;
        std::vector<std::uint32_t> offsets{0};
        offsets.reserve(nlev + 1);
        for (std::size_t j = 0; j < nlev; ++j) {
            const auto p = last.pieces_at(source[j]);
            pieces.insert(pieces.end(), p.begin(), p.end());
            offsets.push_back(static_cast<std::uint32_t>(pieces.size()));
        }
        limit.emplace(last.grid_ptr(), std::move(pieces), std::move(offsets), support);
    } else {
        std::vector<CutSet> cuts;
        cuts.reserve(nlev);
        for (std::size_t j = 0; j < nlev; ++j) cuts.push_back(last.planar_at(source[j]));
        limit.emplace(last.grid_ptr(), std::move(cuts), support);
    }

    DiagonalResult out{std::move(*limit), sub, {}, rounds, {}};
    for (std::size_t j = 0; j < nlev; ++j)
        if (!converged[j]) out.unresolved_levels.push_back(grid.level(j));
    for (std::size_t s : sub) out.tail_distances.push_back(dp_distance(seq[s], out.limit, seq.p()));
    return out;
}

namespace {

bool pairwise_within(std::span<const FuzzySet> xs, PNorm p, double tol) {
    for (std::size_t a = tail_start(xs.size()); a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b)
            if (!(dp_distance(xs[a], xs[b], p) < tol)) return false;
    return true;
}

bool tail_below(std::span<const double> v, double tol) {
    for (std::size_t k = tail_start(v.size()); k < v.size(); ++k)
        if (!(v[k] < tol)) return false;
    return true;
}

}  // namespace

TruncationReport truncation_equivalence(const Family& seq, const FuzzySet& u,
                                        std::span<const double> r_list, double tolerance) {
    for (std::size_t i = 1; i < r_list.size(); ++i)
        if (!(r_list[i] < r_list[i - 1]))
            throw ValidationError("truncation levels must be strictly decreasing");
    for (double r : r_list)
        if (!(r > 0.0 && r <= 1.0)) throw ValidationError("truncation levels must lie in (0, 1]");
    if (seq.dim() != u.dim()) throw DimMismatch(u.dim(), seq.dim());

    const PNorm p = seq.p();
    const std::size_t n = seq.size();
    TruncationReport rep;
    rep.tolerance = tolerance;
    for (std::size_t k = 0; k < n; ++k) rep.full_residuals.push_back(dp_distance(seq[k], u, p));
    rep.full_converges = tail_below(rep.full_residuals, tolerance);

    const std::size_t t0 = tail_start(n);
    rep.all_truncations_converge = true;
    for (double r : r_list) {
        TruncationRow row;
        row.r = r;
        const FuzzySet ur = truncate(u, r);
        std::vector<FuzzySet> odd, even;
        for (std::size_t k = 0; k < n; ++k) {
            FuzzySet t = truncate(seq[k], r);
            row.residuals.push_back(dp_distance(t, ur, p));
            (k % 2 == 0 ? odd : even).push_back(std::move(t));
        }
        row.converges = tail_below(row.residuals, tolerance);
        rep.all_truncations_converge = rep.all_truncations_converge && row.converges;

        const std::size_t kr = u.grid().index_at_or_above(r);
        row.plateau = true;
        for (std::size_t j = 0; j < kr && row.plateau; ++j)
            row.plateau = level_hausdorff(u, j, u, kr) <= tolerance;

        // Level-wise convergence above r, weighted by each member grid.
        const AlphaGrid& g = seq[n - 1].grid();
        const auto w = g.weights();
        double good = 0.0, total = 0.0;
        for (std::size_t j = g.index_at_or_above(r); j < g.size(); ++j) {
            const std::size_t ju = u.grid().index_at_or_above(g.level(j));
            bool ok = true;
            for (std::size_t k = t0; k < n && ok; ++k) {
                const std::size_t jk = seq[k].grid().index_at_or_above(g.level(j));
                ok = level_hausdorff(seq[k], jk, u, ju) < tolerance;
            }
            total += w[j];
            if (ok) good += w[j];
        }
        row.level_fraction = total > 0 ? good / total : 1.0;

        row.odd_converges = odd.size() >= 2 && pairwise_within(odd, p, tolerance);
        row.even_converges = even.size() >= 2 && pairwise_within(even, p, tolerance);
        row.split_distance = even.empty() ? 0.0 : dp_distance(odd.back(), even.back(), p);
        rep.rows.push_back(std::move(row));
    }
    rep.consistent = rep.all_truncations_converge == rep.full_converges;
    return rep;
}

RelativeCompactnessReport relative_compactness_in_fb(const Family& U, double r_max,
                                                     std::size_t steps, double tolerance) {
    if (!(r_max > 0)) throw ValidationError("r_max must be positive");
    if (steps == 0) throw ValidationError("need at least one radius");
    for (std::size_t i = 0; i < U.size(); ++i)
        if (U[i].support() == SupportKind::lp_tail)
            throw UnboundedSupport("member " + U.id(i) + " has an lp_tail support");

    std::vector<double> radii;
    for (std::size_t k = 1; k <= steps; ++k)
        radii.push_back(r_max * static_cast<double>(k) / static_cast<double>(steps));
    const auto table = par::residual_table(U.members(), radii, U.p());

    RelativeCompactnessReport rep;
    rep.tolerance = tolerance;
    rep.escaping_evidence = true;
    const std::size_t n = U.size();
    const std::size_t t0 = tail_start(n);
    for (std::size_t c = 0; c < radii.size(); ++c) {
        ResidualRow row;
        row.r = radii[c];
        for (std::size_t i = 0; i < n; ++i) row.residuals.push_back(table(i, c));
        row.argmin = static_cast<std::size_t>(
            std::min_element(row.residuals.begin(), row.residuals.end()) - row.residuals.begin());
        row.min_residual = row.residuals[row.argmin];
        for (std::size_t i = t0; i < n; ++i)
            if (row.residuals[i] <= tolerance) row.near_zero.push_back(i);
        row.plausible = row.near_zero.size() >= 2;
        row.escaping = row.residuals.back() > tolerance;
        for (std::size_t i = t0 + 1; i < n && row.escaping; ++i)
            row.escaping = row.residuals[i] >= row.residuals[i - 1];
        if (row.plausible && !row.escaping) rep.condition_iii_prime = true;
        rep.escaping_evidence = rep.escaping_evidence && row.escaping;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace fuzzdp
