#include "fuzzdp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fuzzdp {

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a) { return std::hypot(a.x, a.y); }

HalfPlane HalfPlane::left_of(Point2 p, Point2 q) {
    const Point2 d = q - p;
    const double len = norm(d);
    const Point2 n{d.y / len, -d.x / len};
    return {n, dot(n, p)};
}

namespace geom {

double signed_area(std::span<const Point2> ring) {
    const std::size_t n = ring.size();
    double s = 0.0;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) s += cross(ring[j], ring[i]);
    return 0.5 * s;
}

double area(std::span<const Point2> ring) {
    return ring.size() < 3 ? 0.0 : std::abs(signed_area(ring));
}

Point2 centroid(std::span<const Point2> ring) {
    const double a = ring.size() < 3 ? 0.0 : signed_area(ring);
    if (std::abs(a) < 1e-300) {
        Point2 c{};
        for (const auto& p : ring) c = c + p;
        return (1.0 / static_cast<double>(ring.size())) * c;
    }
    double cx = 0.0, cy = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double w = cross(ring[j], ring[i]);
        cx += (ring[j].x + ring[i].x) * w;
        cy += (ring[j].y + ring[i].y) * w;
    }
    return {cx / (6.0 * a), cy / (6.0 * a)};
}

double distance_to_segment(Point2 x, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(x - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(x - (a + t * ab));
}

namespace {

int orientation(Point2 a, Point2 b, Point2 c) {
    const double v = cross(b - a, c - a);
    const double scale = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y), std::abs(c.x - a.x),
                                   std::abs(c.y - a.y), 1.0});
    if (std::abs(v) <= 1e-14 * scale * scale) return 0;
    return v > 0 ? 1 : -1;
}

bool on_segment(Point2 a, Point2 b, Point2 x) {
    return std::min(a.x, b.x) - 1e-15 <= x.x && x.x <= std::max(a.x, b.x) + 1e-15 &&
           std::min(a.y, b.y) - 1e-15 <= x.y && x.y <= std::max(a.y, b.y) + 1e-15;
}

}  // namespace

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool segments_cross_properly(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool is_simple(std::span<const Point2> ring) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = ring[i], b = ring[(i + 1) % n];
        if (a == b) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2 c = ring[j], d = ring[(j + 1) % n];
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Adjacent edges share one vertex; they must not fold back.
                const Point2 shared = (j == i + 1) ? b : a;
                const Point2 other_i = (j == i + 1) ? a : b;
                const Point2 other_j = (j == i + 1) ? d : c;
                if (orientation(shared, other_i, other_j) == 0 &&
                    dot(other_i - shared, other_j - shared) > 0)
                    return false;
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

double distance_to_boundary(std::span<const Point2> ring, Point2 x) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++)
        best = std::min(best, distance_to_segment(x, ring[j], ring[i]));
    return best;
}

bool in_polygon(std::span<const Point2> ring, Point2 x, double slack) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = ring[j], b = ring[i];
        if ((a.y > x.y) != (b.y > x.y)) {
            const double xc = a.x + (x.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (x.x < xc) inside = !inside;
        }
    }
    if (inside) return true;
    return distance_to_boundary(ring, x) <= slack;
}

double distance_to_polygon(std::span<const Point2> ring, Point2 x) {
    if (in_polygon(ring, x, 0.0)) return 0.0;
    return distance_to_boundary(ring, x);
}

bool is_convex_ring(std::span<const Point2> ring, double slack) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = ring[i], b = ring[(i + 1) % n], c = ring[(i + 2) % n];
        const Point2 e1 = b - a, e2 = c - b;
        const double scale = norm(e1) * norm(e2);
        if (cross(e1, e2) < -slack * std::max(scale, 1e-300)) return false;
    }
    return true;
}

std::vector<Point2> simplify_ring(std::span<const Point2> ring, double slack) {
    std::vector<Point2> pts;
    for (const auto& p : ring)
        if (pts.empty() || norm(p - pts.back()) > slack) pts.push_back(p);
    while (pts.size() > 1 && norm(pts.front() - pts.back()) <= slack) pts.pop_back();
    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
            const std::size_t n = pts.size();
            const Point2 a = pts[(i + n - 1) % n], b = pts[i], c = pts[(i + 1) % n];
            const Point2 e1 = b - a, e2 = c - b;
            // Collinear and continuing in the same direction: b is redundant.
            if (std::abs(cross(e1, e2)) <= slack * std::max(norm(e1) + norm(e2), 1e-300) &&
                dot(e1, e2) > 0) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                --i;
            }
        }
    }
    return pts;
}

std::vector<Point2> clip(std::span<const Point2> poly, const HalfPlane& h, double slack) {
    std::vector<Point2> out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 cur = poly[i], nxt = poly[(i + 1) % n];
        const double dc = h.signed_distance(cur), dn = h.signed_distance(nxt);
        const bool in_c = dc <= slack, in_n = dn <= slack;
        if (in_c) out.push_back(cur);
        if (in_c != in_n && n > 1) {
            const double t = dc / (dc - dn);
            out.push_back(cur + t * (nxt - cur));
        }
    }
    std::vector<Point2> dedup;
    for (const auto& p : out)
        if (dedup.empty() || norm(p - dedup.back()) > slack) dedup.push_back(p);
    while (dedup.size() > 1 && norm(dedup.front() - dedup.back()) <= slack) dedup.pop_back();
    return dedup;
}

std::vector<Point2> intersect_convex(std::span<const Point2> a, std::span<const Point2> b,
                                     double slack) {
    std::vector<Point2> cur(a.begin(), a.end());
    const std::size_t n = b.size();
    if (n == 1) {
        if (cur.size() >= 3 ? in_polygon(cur, b[0], slack)
                            : distance_to_boundary(cur, b[0]) <= slack)
            return {b[0]};
        return {};
    }
    if (n == 2) {
        // Degenerate segment: both sides of its line plus the two end caps.
        const Point2 d = b[1] - b[0];
        const double len = norm(d);
        const Point2 u{d.x / len, d.y / len};
        const HalfPlane planes[] = {HalfPlane::left_of(b[0], b[1]), HalfPlane::left_of(b[1], b[0]),
                                    {u, dot(u, b[1])}, {-1.0 * u, -dot(u, b[0])}};
        for (const auto& h : planes)
            if (!cur.empty()) cur = clip(cur, h, slack);
        return cur;
    }
    for (std::size_t i = 0; i < n && !cur.empty(); ++i)
        cur = clip(cur, HalfPlane::left_of(b[i], b[(i + 1) % n]), slack);
    return cur;
}

Box bounding_box(std::span<const Point2> pts) {
    Box box{pts.front(), pts.front()};
    for (const auto& p : pts) {
        box.lo.x = std::min(box.lo.x, p.x);
        box.lo.y = std::min(box.lo.y, p.y);
        box.hi.x = std::max(box.hi.x, p.x);
        box.hi.y = std::max(box.hi.y, p.y);
    }
    return box;
}

}  // namespace geom

}  // namespace fuzzdp
