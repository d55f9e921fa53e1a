#include "fuzzdp/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fuzzdp/errors.hpp"

namespace fuzzdp::instances {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kTwoThirds = 2.0 / 3.0;

// Single-interval family [lo(a), hi(a)] in the flat layout.
template <class Lo, class Hi>
FuzzySet from_endpoints(const GridPtr& grid, Lo&& lo, Hi&& hi,
                        SupportKind support = SupportKind::bounded) {
    const auto lv = grid->levels();
    std::vector<Interval> pieces;
    std::vector<std::uint32_t> offsets;
    pieces.reserve(lv.size());
    offsets.reserve(lv.size() + 1);
    offsets.push_back(0);
    for (double a : lv) {
        pieces.push_back({lo(a), hi(a)});
        offsets.push_back(static_cast<std::uint32_t>(pieces.size()));
    }
    return FuzzySet(grid, std::move(pieces), std::move(offsets), support);
}

template <class Hi>
FuzzySet from_right_end(const GridPtr& grid, Hi&& hi, SupportKind support = SupportKind::bounded) {
    return from_endpoints(grid, [](double) { return 0.0; }, std::forward<Hi>(hi), support);
}

std::vector<Interval> merged(std::vector<Interval> v) {
    const auto set = IntervalSet::normalized(std::move(v));
    return {set.pieces().begin(), set.pieces().end()};
}

}  // namespace

GridPtr share(AlphaGrid g) { return std::make_shared<const AlphaGrid>(std::move(g)); }

GridPtr with_level(const GridPtr& grid, double level) {
    const std::size_t j = grid->index_at_or_above(level);
    if (grid->level(j) == level) return grid;
    const double extra[] = {level};
    return share(grid->refined(extra));
}

FuzzySet triangular(const GridPtr& grid, double center, double spread) {
    if (!(spread >= 0)) throw ValidationError("spread must be nonnegative");
    return from_endpoints(
        grid, [&](double a) { return center - spread * (1.0 - a); },
        [&](double a) { return center + spread * (1.0 - a); });
}

FuzzySet crisp_point(const GridPtr& grid, double x) { return crisp_interval(grid, x, x); }

FuzzySet crisp_point(const GridPtr& grid, Point2 x) {
    return FuzzySet(grid, std::vector<CutSet>(grid->size(), CutSet::point(x)), SupportKind::bounded);
}

FuzzySet crisp_interval(const GridPtr& grid, double lo, double hi) {
    return from_endpoints(grid, [&](double) { return lo; }, [&](double) { return hi; });
}

FuzzySet translate(const FuzzySet& u, double shift) {
    if (u.dim() != 1) throw DimMismatch(u.dim(), 1);
    std::vector<Interval> pieces;
    std::vector<std::uint32_t> offsets{0};
    for (std::size_t j = 0; j < u.levels(); ++j) {
        for (const auto& iv : u.pieces_at(j)) pieces.push_back({iv.lo + shift, iv.hi + shift});
        offsets.push_back(static_cast<std::uint32_t>(pieces.size()));
    }
    return FuzzySet(u.grid_ptr(), std::move(pieces), std::move(offsets), u.support());
}

FuzzySet ma_member(const GridPtr& grid, unsigned n) {
    const double cap = static_cast<double>(n);
    return from_right_end(grid, [cap](double a) { return std::min(cap, -std::log(a)); });
}

FuzzySet ma_limit(const GridPtr& grid) {
    return from_right_end(grid, [](double a) { return -std::log(a); }, SupportKind::lp_tail);
}

FuzzySet wz71_member(const GridPtr& grid, unsigned n) {
    if (n == 0) return wz71_u0(grid);
    const GridPtr g = with_level(grid, kThird);
    const double m = static_cast<double>(n) + 3.0;
    const double knee = kThird - 1.0 / m;
    if (n % 2 == 1)
        return from_right_end(g, [=](double a) {
            if (a >= kThird) return (1.0 - a) / 2.0;
            if (a > knee) return kThird + (kThird - a) * 2.0 * m / 3.0;
            return 1.0;
        });
    return from_right_end(g, [=](double a) {
        if (a > kThird) return (1.0 - a) / 2.0;
        if (a == kThird) return kTwoThirds;
        if (a > knee) return kTwoThirds + (kThird - a) * m / 3.0;
        return 1.0;
    });
}

FuzzySet wz71_u0(const GridPtr& grid) {
    return from_right_end(with_level(grid, kThird),
                          [](double a) { return a > kThird ? (1.0 - a) / 2.0 : 1.0; });
}

FuzzySet wz71_v(const GridPtr& grid) {
    return from_right_end(with_level(grid, kThird),
                          [](double a) { return (1.0 - std::max(a, kThird)) / 2.0; });
}

FuzzySet wz71_w(const GridPtr& grid) {
    return from_right_end(with_level(grid, kThird),
                          [](double a) { return a > kThird ? (1.0 - a) / 2.0 : kTwoThirds; });
}

FuzzySet spike(const GridPtr& grid, unsigned k, double p) {
    if (!(p >= 1.0)) throw ValidationError("p must be >= 1");
    const double edge = std::ldexp(1.0, -static_cast<int>(k));
    const double tall = std::exp2(static_cast<double>(k) / p);
    return from_right_end(grid, [=](double a) { return a >= edge * (1.0 - 1e-12) ? 1.0 : tall; });
}

std::vector<Point2> regular_star(unsigned spikes, double r_outer, double r_inner, Point2 center,
                                 double phase) {
    if (spikes < 2) throw ValidationError("a star needs at least two spikes");
    std::vector<Point2> ring;
    ring.reserve(2 * spikes);
    for (unsigned i = 0; i < 2 * spikes; ++i) {
        const double t = phase + std::numbers::pi * static_cast<double>(i) / spikes;
        const double r = i % 2 == 0 ? r_outer : r_inner;
        ring.push_back(center + Point2{r * std::cos(t), r * std::sin(t)});
    }
    return ring;
}

std::vector<Point2> random_star(std::mt19937_64& rng, unsigned vertices, double r_lo, double r_hi,
                                Point2 center) {
    if (vertices < 3) throw ValidationError("a polygon needs at least three vertices");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> angles;
    for (;;) {
        angles.clear();
        const double phase = 2 * std::numbers::pi * unit(rng);
        for (unsigned i = 0; i < vertices; ++i) angles.push_back(phase + 2 * std::numbers::pi * unit(rng));
        std::sort(angles.begin(), angles.end());
        bool ok = true;
        for (unsigned i = 0; i < vertices; ++i) {
            const double next = i + 1 < vertices ? angles[i + 1] : angles[0] + 2 * std::numbers::pi;
            const double gap = next - angles[i];
            if (gap >= 0.9 * std::numbers::pi || gap < 1e-3) ok = false;
        }
        if (ok) break;
    }
    std::vector<Point2> ring;
    for (double t : angles) {
        const double r = r_lo + (r_hi - r_lo) * unit(rng);
        ring.push_back(center + Point2{r * std::cos(t), r * std::sin(t)});
    }
    return ring;
}

FuzzySet radial_fuzzy(const GridPtr& grid, const std::vector<Point2>& ring, Point2 center) {
    std::vector<CutSet> cuts;
    cuts.reserve(grid->size());
    for (double a : grid->levels()) {
        const double s = 1.0 - a / 2.0;
        std::vector<Point2> scaled;
        scaled.reserve(ring.size());
        for (const auto& v : ring) scaled.push_back(center + s * (v - center));
        cuts.push_back(CutSet::polygon_or_points(std::move(scaled)));
    }
    return FuzzySet(grid, std::move(cuts), SupportKind::bounded);
}

FuzzySet random_step(std::mt19937_64& rng, const GridPtr& grid, unsigned max_pieces, double scale) {
    std::uniform_real_distribution<double> pos(-scale / 2, scale / 2);
    std::uniform_real_distribution<double> grow(0.0, scale / 8);
    std::uniform_int_distribution<unsigned> count(1, std::max(1u, max_pieces));
    std::bernoulli_distribution moves(0.3);

    std::vector<Interval> cur;
    const unsigned k = count(rng);
    for (unsigned i = 0; i < k; ++i) {
        const double a = pos(rng), b = pos(rng);
        cur.push_back({std::min(a, b), std::max(a, b)});
    }
    cur = merged(std::move(cur));

    const std::size_t n = grid->size();
    std::vector<std::vector<Interval>> levels(n);
    for (std::size_t j = n; j-- > 0;) {
        if (j + 1 < n && moves(rng)) {
            for (auto& iv : cur) {
                iv.lo = std::max(-scale, iv.lo - grow(rng));
                iv.hi = std::min(scale, iv.hi + grow(rng));
            }
            cur = merged(std::move(cur));
        }
        levels[j] = cur;
    }
    std::vector<Interval> pieces;
    std::vector<std::uint32_t> offsets{0};
    for (const auto& l : levels) {
        pieces.insert(pieces.end(), l.begin(), l.end());
        offsets.push_back(static_cast<std::uint32_t>(pieces.size()));
    }
    return FuzzySet(grid, std::move(pieces), std::move(offsets), SupportKind::bounded);
}

}  // namespace fuzzdp::instances
