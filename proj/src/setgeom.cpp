#include "fuzzdp/setgeom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fuzzdp/errors.hpp"

namespace fuzzdp {

namespace {

bool is_convex_body(const CutSet& b) {
    switch (b.kind()) {
        case CutSet::Kind::intervals:
            return b.intervals().size() == 1;
        case CutSet::Kind::polygon:
            return geom::is_convex_ring(b.polygon().vertices(), 1e-12);
        case CutSet::Kind::points: {
            const auto& pts = b.points().points;
            for (const auto& p : pts)
                if (norm(p - pts.front()) > kGeomTolerance) return false;
            return true;
        }
    }
    return false;
}

Point2 nearest_on_boundary(const std::vector<Point2>& ring, Point2 x) {
    Point2 best = ring.front();
    double best_d = INFINITY;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2 a = ring[i], d = ring[(i + 1) % ring.size()] - a;
        const double len2 = dot(d, d);
        const double t = len2 > 0 ? std::clamp(dot(x - a, d) / len2, 0.0, 1.0) : 0.0;
        const Point2 p = a + t * d;
        if (norm(x - p) < best_d) {
            best_d = norm(x - p);
            best = p;
        }
    }
    return best;
}

// Branch and bound over squares covering A. d(., B) is 1-Lipschitz, so a
// square of half-diagonal r centred at c cannot beat d(c, B) + r, nor
// r - d(c, boundary of B) when c lies inside B. Every
// candidate value comes from a point of A, so the result is a lower bound
// and the true sup is at most result + tolerance.
double directed_polygon_sup(const std::vector<Point2>& ring, const CutSet& b, double tolerance) {
    struct Cell {
        Point2 c;
        double half;
    };
    double best = 0.0;
    for (const auto& v : ring) best = std::max(best, distance_to(b, v));
    const auto box = geom::bounding_box(ring);
    const double side = std::max(box.hi.x - box.lo.x, box.hi.y - box.lo.y);
    std::vector<Cell> stack{{0.5 * (box.lo + box.hi), side / 2}};
    while (!stack.empty()) {
        const Cell cell = stack.back();
        stack.pop_back();
        const double reach = cell.half * std::numbers::sqrt2;
        const bool inside = geom::in_polygon(ring, cell.c, 0.0);
        if (!inside && geom::distance_to_boundary(ring, cell.c) > reach) continue;
        const double dc = distance_to(b, cell.c);
        const double bound =
            dc == 0.0 && b.kind() == CutSet::Kind::polygon
                ? reach - geom::distance_to_boundary(b.polygon().vertices(), cell.c)
                : dc + reach;
        if (bound <= best + tolerance) continue;
        // A point of A inside the square.
        const Point2 witness = inside ? cell.c : nearest_on_boundary(ring, cell.c);
        best = std::max(best, inside ? dc : distance_to(b, witness));
        if (2 * reach <= tolerance) continue;
        const double q = cell.half / 2;
        for (Point2 off : {Point2{-q, -q}, Point2{q, -q}, Point2{-q, q}, Point2{q, q}})
            stack.push_back({cell.c + off, q});
    }
    return best;
}

}  // namespace

HausdorffEstimate directed_h_estimate(const CutSet& a, const CutSet& b, double sample_tolerance) {
    if (a.dim() != b.dim()) throw DimMismatch(a.dim(), b.dim());
    if (a.dim() == 1)
        return {intervals::directed_distance(a.intervals().pieces(), b.intervals().pieces()), 0.0};

    if (a.kind() == CutSet::Kind::points || is_convex_body(b)) {
        double best = 0.0;
        for (const auto& v : a.outline()) best = std::max(best, distance_to(b, v));
        return {best, 0.0};
    }

    if (a == b) return {0.0, 0.0};
    const double tol = sample_tolerance > 0 ? sample_tolerance : kDefaultSampleTolerance;
    return {directed_polygon_sup(a.polygon().vertices(), b, tol), tol};
}

double directed_h(const CutSet& a, const CutSet& b) { return directed_h_estimate(a, b).value; }

double hausdorff(const CutSet& a, const CutSet& b) {
    if (a.dim() == 1 && b.dim() == 1)
        return intervals::hausdorff(a.intervals().pieces(), b.intervals().pieces());
    return std::max(directed_h(a, b), directed_h(b, a));
}

bool is_convex(const CutSet& a) { return is_convex_body(a); }

std::vector<HalfPlane> edge_half_planes(const Polygon& p) {
    const auto ring = geom::simplify_ring(p.vertices(), kGeomTolerance);
    std::vector<HalfPlane> planes;
    planes.reserve(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i)
        planes.push_back(HalfPlane::left_of(ring[i], ring[(i + 1) % ring.size()]));
    return planes;
}

namespace {

std::vector<Point2> kernel_ring(const Polygon& p) {
    const auto box = geom::bounding_box(p.vertices());
    const double pad = 1.0 + (box.hi.x - box.lo.x) + (box.hi.y - box.lo.y);
    std::vector<Point2> cur = {{box.lo.x - pad, box.lo.y - pad},
                               {box.hi.x + pad, box.lo.y - pad},
                               {box.hi.x + pad, box.hi.y + pad},
                               {box.lo.x - pad, box.hi.y + pad}};
    for (const auto& h : edge_half_planes(p)) {
        cur = geom::clip(cur, h, kGeomTolerance);
        if (cur.empty()) break;
    }
    return cur;
}

}  // namespace

bool is_star_shaped(const CutSet& a) {
    switch (a.kind()) {
        case CutSet::Kind::intervals:
            return a.intervals().size() == 1;
        case CutSet::Kind::points:
            throw PointCloudUnsupported();
        case CutSet::Kind::polygon:
            return !kernel_ring(a.polygon()).empty();
    }
    return false;
}

CutSet kernel(const CutSet& a) {
    switch (a.kind()) {
        case CutSet::Kind::intervals:
            if (a.intervals().size() != 1) throw EmptyKernel();
            return a;
        case CutSet::Kind::points:
            if (!is_convex_body(a)) throw EmptyKernel();
            return CutSet::point(a.points().points.front());
        case CutSet::Kind::polygon: {
            auto ring = kernel_ring(a.polygon());
            if (ring.empty()) throw EmptyKernel();
            return CutSet::polygon_or_points(std::move(ring));
        }
    }
    throw EmptyKernel();
}

KuratowskiResult kuratowski(std::span<const CutSet> seq, double tolerance) {
    if (seq.empty()) throw ValidationError("kuratowski needs a nonempty sequence");
    if (!(tolerance > 0)) throw ValidationError("tolerance must be positive");
    const int dim = seq.front().dim();
    std::vector<Point2> all;
    for (const auto& s : seq) {
        if (s.dim() != dim) throw DimMismatch(dim, s.dim());
        auto o = s.outline();
        all.insert(all.end(), o.begin(), o.end());
    }
    const auto box = geom::bounding_box(all);

    const std::size_t n = seq.size();
    const std::size_t tail_len = std::min(n, std::max<std::size_t>(2, (n + 3) / 4));
    const std::size_t tail_start = n - tail_len;
    const std::size_t need_limsup = (tail_len + 2) / 3;

    const double wx = box.hi.x - box.lo.x, wy = dim == 2 ? box.hi.y - box.lo.y : 0.0;
    double res = tolerance;
    const double cap = 4e6;
    const double cells = (wx / res + 1) * (dim == 2 ? wy / res + 1 : 1.0);
    if (cells > cap) res *= std::sqrt(cells / cap) * (dim == 2 ? 1.0 : std::sqrt(cells / cap));
    const auto nx = static_cast<std::size_t>(std::ceil(wx / res)) + 1;
    const auto ny = dim == 2 ? static_cast<std::size_t>(std::ceil(wy / res)) + 1 : 1;
    const double near = 0.5 * res * std::sqrt(static_cast<double>(dim)) * (1 + 1e-9);

    KuratowskiResult out;
    out.tolerance = tolerance;
    out.resolution = res;
    out.tail_start = tail_start;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const Point2 x{std::min(box.lo.x + static_cast<double>(ix) * res, box.hi.x),
                           dim == 2 ? std::min(box.lo.y + static_cast<double>(iy) * res, box.hi.y)
                                    : 0.0};
            std::size_t hits = 0;
            for (std::size_t k = tail_start; k < n; ++k)
                if (distance_to(seq[k], x) <= near) ++hits;
            if (hits == tail_len) out.liminf_points.push_back(x);
            if (hits >= need_limsup) out.limsup_points.push_back(x);
        }
    }
    return out;
}

}  // namespace fuzzdp
