#pragma once

#include <variant>
#include <vector>

#include "fuzzdp/geometry.hpp"
#include "fuzzdp/interval_set.hpp"

namespace fuzzdp {

/// Absolute slack, in length units, for containment and equality tests.
inline constexpr double kGeomTolerance = 1e-9;

/// Simple CCW polygon with at least three non-collinear vertices.
class Polygon {
public:
    /// Accepts either orientation (stored CCW). Throws ValidationError when
    /// the ring self-intersects or has fewer than three distinct vertices.
    explicit Polygon(std::vector<Point2> ring);

    const std::vector<Point2>& vertices() const noexcept { return ring_; }
    double area() const { return geom::area(ring_); }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point2> ring_;
};

struct PointCloud {
    std::vector<Point2> points;
    friend bool operator==(const PointCloud&, const PointCloud&) = default;
};

/// A nonempty compact subset of R^1 (finite union of closed intervals) or
/// R^2 (simple polygon region or finite point cloud).
class CutSet {
public:
    enum class Kind { intervals, polygon, points };

    explicit CutSet(IntervalSet s) : body_(std::move(s)) {}
    explicit CutSet(Polygon p) : body_(std::move(p)) {}
    explicit CutSet(PointCloud c);

    static CutSet interval(double lo, double hi) { return CutSet(IntervalSet(lo, hi)); }
    static CutSet point(double x) { return interval(x, x); }
    static CutSet point(Point2 p) { return CutSet(PointCloud{{p}}); }
    /// Rings with fewer than three non-collinear vertices become point clouds.
    static CutSet polygon_or_points(std::vector<Point2> ring);

    int dim() const noexcept { return kind() == Kind::intervals ? 1 : 2; }
    Kind kind() const noexcept { return static_cast<Kind>(body_.index()); }

    const IntervalSet& intervals() const { return std::get<IntervalSet>(body_); }
    const Polygon& polygon() const { return std::get<Polygon>(body_); }
    const PointCloud& points() const { return std::get<PointCloud>(body_); }

    /// sup over the set of the Euclidean norm.
    double max_norm() const;

    /// Vertices (polygon), points (cloud) or endpoints (intervals, y = 0).
    std::vector<Point2> outline() const;

    friend bool operator==(const CutSet&, const CutSet&) = default;

private:
    std::variant<IntervalSet, Polygon, PointCloud> body_;
};

/// outer contains inner, up to slack. Throws DimMismatch.
bool contains(const CutSet& outer, const CutSet& inner, double slack = kGeomTolerance);

/// Distance from a point of R^2 to the set (2D sets only).
double distance_to(const CutSet& s, Point2 x);

}  // namespace fuzzdp
