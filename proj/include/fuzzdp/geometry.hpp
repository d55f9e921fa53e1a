#pragma once

#include <optional>
#include <span>
#include <vector>

namespace fuzzdp {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
};

double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
double norm(Point2 a);

/// Closed half-plane {x : normal . x <= offset}; normal has unit length.
struct HalfPlane {
    Point2 normal;
    double offset = 0.0;

    /// Interior (left) side of the directed segment p -> q.
    static HalfPlane left_of(Point2 p, Point2 q);
    double signed_distance(Point2 x) const { return dot(normal, x) - offset; }
};

namespace geom {

double signed_area(std::span<const Point2> ring);
double area(std::span<const Point2> ring);
Point2 centroid(std::span<const Point2> ring);

double distance_to_segment(Point2 x, Point2 a, Point2 b);

/// Proper or touching intersection of closed segments.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

/// Crossing in the interiors of both segments (no shared endpoints counted).
bool segments_cross_properly(Point2 a, Point2 b, Point2 c, Point2 d);

/// No two non-adjacent edges meet and no adjacent pair overlaps.
bool is_simple(std::span<const Point2> ring);

/// Closed polygon membership: inside or within slack of the boundary.
bool in_polygon(std::span<const Point2> ring, Point2 x, double slack);

double distance_to_boundary(std::span<const Point2> ring, Point2 x);

/// 0 inside, distance to the boundary outside.
double distance_to_polygon(std::span<const Point2> ring, Point2 x);

/// CCW ring convexity: every turn is a left turn or straight (with slack).
bool is_convex_ring(std::span<const Point2> ring, double slack);

/// Drops repeated vertices and merges consecutive collinear edges.
std::vector<Point2> simplify_ring(std::span<const Point2> ring, double slack);

/// Sutherland-Hodgman step: clip a convex CCW ring to a half-plane.
std::vector<Point2> clip(std::span<const Point2> convex_ring, const HalfPlane& h, double slack);

/// Intersection of two convex CCW rings.
std::vector<Point2> intersect_convex(std::span<const Point2> a, std::span<const Point2> b,
                                     double slack);

struct Box {
    Point2 lo;
    Point2 hi;
};
Box bounding_box(std::span<const Point2> pts);

}  // namespace geom

}  // namespace fuzzdp
