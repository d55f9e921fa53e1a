#include "fuzzdp/cut_set.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzdp/errors.hpp"

namespace fuzzdp {

Polygon::Polygon(std::vector<Point2> ring) : ring_(std::move(ring)) {
    for (const auto& p : ring_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ValidationError("polygon vertex is not finite");
    if (ring_.size() < 3) throw ValidationError("polygon needs at least three vertices");
    if (geom::signed_area(ring_) < 0) std::reverse(ring_.begin(), ring_.end());
    if (!(geom::area(ring_) > 0)) throw ValidationError("polygon is degenerate (zero area)");
    if (!geom::is_simple(ring_)) throw ValidationError("polygon is not simple");
}

CutSet::CutSet(PointCloud c) : body_(std::move(c)) {
    const auto& pts = std::get<PointCloud>(body_).points;
    if (pts.empty()) throw ValidationError("point cloud is empty");
    for (const auto& p : pts)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ValidationError("point is not finite");
}

CutSet CutSet::polygon_or_points(std::vector<Point2> ring) {
    auto simplified = geom::simplify_ring(ring, kGeomTolerance);
    if (simplified.size() >= 3 && geom::area(simplified) > kGeomTolerance * kGeomTolerance)
        return CutSet(Polygon(std::move(ring)));
    if (simplified.empty()) simplified.push_back(ring.front());
    return CutSet(PointCloud{std::move(simplified)});
}

double CutSet::max_norm() const {
    switch (kind()) {
        case Kind::intervals:
            return intervals::max_abs(intervals().pieces());
        case Kind::polygon: {
            double m = 0.0;
            for (const auto& p : polygon().vertices()) m = std::max(m, norm(p));
            return m;
        }
        case Kind::points: {
            double m = 0.0;
            for (const auto& p : points().points) m = std::max(m, norm(p));
            return m;
        }
    }
    return 0.0;
}

std::vector<Point2> CutSet::outline() const {
    switch (kind()) {
        case Kind::intervals: {
            std::vector<Point2> out;
            for (const auto& iv : intervals().pieces()) {
                out.push_back({iv.lo, 0.0});
                if (iv.hi != iv.lo) out.push_back({iv.hi, 0.0});
            }
            return out;
        }
        case Kind::polygon:
            return polygon().vertices();
        case Kind::points:
            return points().points;
    }
    return {};
}

double distance_to(const CutSet& s, Point2 x) {
    switch (s.kind()) {
        case CutSet::Kind::intervals:
            return intervals::distance_to(x.x, s.intervals().pieces());
        case CutSet::Kind::polygon:
            return geom::distance_to_polygon(s.polygon().vertices(), x);
        case CutSet::Kind::points: {
            double best = INFINITY;
            for (const auto& p : s.points().points) best = std::min(best, norm(p - x));
            return best;
        }
    }
    return 0.0;
}

namespace {

bool polygon_contains_polygon(const std::vector<Point2>& outer, const std::vector<Point2>& inner,
                              double slack) {
    for (const auto& v : inner)
        if (!geom::in_polygon(outer, v, slack)) return false;
    const std::size_t n = outer.size(), m = inner.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (geom::segments_cross_properly(outer[i], outer[(i + 1) % n], inner[j],
                                              inner[(j + 1) % m]))
                return false;
    return true;
}

}  // namespace

bool contains(const CutSet& outer, const CutSet& inner, double slack) {
    if (outer.dim() != inner.dim()) throw DimMismatch(outer.dim(), inner.dim());
    using K = CutSet::Kind;
    if (outer.kind() == K::intervals)
        return intervals::contains(outer.intervals().pieces(), inner.intervals().pieces(), slack);
    if (inner.kind() == K::points) {
        for (const auto& p : inner.points().points)
            if (distance_to(outer, p) > slack) return false;
        return true;
    }
    // inner is a polygon region
    if (outer.kind() == K::points) {
        // A finite set contains a region only when the region collapses within slack.
        for (const auto& v : inner.polygon().vertices())
            if (distance_to(outer, v) > slack) return false;
        return inner.polygon().area() <= slack;
    }
    return polygon_contains_polygon(outer.polygon().vertices(), inner.polygon().vertices(), slack);
}

}  // namespace fuzzdp
