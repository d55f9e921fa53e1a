#pragma once

// Reference computations used only by the tests. They share no code with
// the library: brute-force sampling, winding numbers and adaptive
// quadrature stand in for the exact algorithms under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

struct Iv {
    double lo, hi;
};
using Ivs = std::vector<Iv>;

inline double dist_point_ivs(double x, const Ivs& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : b) {
        const double d = x < iv.lo ? iv.lo - x : (x > iv.hi ? x - iv.hi : 0.0);
        best = std::min(best, d);
    }
    return best;
}

// sup over a step-sampled A (plus every endpoint) of d(., B).
inline double directed_1d(const Ivs& a, const Ivs& b, double step = 1e-3) {
    double best = 0.0;
    for (const auto& iv : a) {
        for (double x = iv.lo; x < iv.hi; x += step) best = std::max(best, dist_point_ivs(x, b));
        best = std::max(best, dist_point_ivs(iv.hi, b));
    }
    return best;
}

inline double hausdorff_1d(const Ivs& a, const Ivs& b, double step = 1e-3) {
    return std::max(directed_1d(a, b, step), directed_1d(b, a, step));
}

struct P {
    double x, y;
};

// Winding number; points on the boundary count as inside.
inline bool inside(const std::vector<P>& ring, P q, double eps = 1e-12) {
    const std::size_t n = ring.size();
    int wn = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const P a = ring[i], b = ring[(i + 1) % n];
        const double cr = (b.x - a.x) * (q.y - a.y) - (q.x - a.x) * (b.y - a.y);
        const double dot = (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
        const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        if (std::abs(cr) <= eps * std::sqrt(len2) && dot >= -eps && dot <= len2 + eps) return true;
        if (a.y <= q.y) {
            if (b.y > q.y && cr > 0) ++wn;
        } else if (b.y <= q.y && cr < 0) {
            --wn;
        }
    }
    return wn != 0;
}

inline double seg_dist(P q, P a, P b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((q.x - a.x) * dx + (q.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(q.x - a.x - t * dx, q.y - a.y - t * dy);
}

inline double dist_to_region(const std::vector<P>& ring, P q) {
    if (inside(ring, q)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ring.size(); ++i)
        best = std::min(best, seg_dist(q, ring[i], ring[(i + 1) % ring.size()]));
    return best;
}

// sup over a lattice (spacing `step`) and the boundary of A of d(., B).
inline double directed_2d(const std::vector<P>& a, const std::vector<P>& b, double step) {
    double best = 0.0;
    double x0 = a[0].x, x1 = a[0].x, y0 = a[0].y, y1 = a[0].y;
    for (const auto& v : a) {
        x0 = std::min(x0, v.x), x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
    }
    for (double y = y0; y <= y1; y += step)
        for (double x = x0; x <= x1; x += step)
            if (inside(a, {x, y})) best = std::max(best, dist_to_region(b, {x, y}));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const P s = a[i], t = a[(i + 1) % a.size()];
        const int k = std::max(1, static_cast<int>(std::hypot(t.x - s.x, t.y - s.y) / step));
        for (int j = 0; j <= k; ++j) {
            const double f = static_cast<double>(j) / k;
            best = std::max(best, dist_to_region(b, {s.x + f * (t.x - s.x), s.y + f * (t.y - s.y)}));
        }
    }
    return best;
}

inline double orient(P a, P b, P c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

inline bool proper_cross(P a, P b, P c, P d) {
    const double o1 = orient(a, b, c), o2 = orient(a, b, d);
    const double o3 = orient(c, d, a), o4 = orient(c, d, b);
    const double e = 1e-12;
    return ((o1 > e && o2 < -e) || (o1 < -e && o2 > e)) && ((o3 > e && o4 < -e) || (o3 < -e && o4 > e));
}

// x lies in the kernel of a simple polygon iff x is in the polygon and the
// segment from x to every vertex crosses no edge.
inline bool in_kernel(const std::vector<P>& ring, P x) {
    if (!inside(ring, x)) return false;
    const std::size_t n = ring.size();
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t e = 0; e < n; ++e)
            if (proper_cross(x, ring[v], ring[e], ring[(e + 1) % n])) return false;
    return true;
}

// Convex-ring membership by cross products, either orientation.
inline bool in_convex(const std::vector<P>& ring, P x, double eps = 0.0) {
    if (ring.size() < 3) return false;
    int sign = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const P a = ring[i], b = ring[(i + 1) % ring.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        const double c = orient(a, b, x) / (len > 0 ? len : 1.0);
        if (c > eps) {
            if (sign < 0) return false;
            sign = sign == 0 ? 1 : sign;
        } else if (c < -eps) {
            if (sign > 0) return false;
            sign = sign == 0 ? -1 : sign;
        }
    }
    return true;
}

// Area (lattice count times cell area) where brute-force kernel membership
// disagrees with membership in the convex ring `kernel`. Only the box
// [x0, x1] x [y0, y1] is scanned.
inline double kernel_mismatch_area(const std::vector<P>& ring, const std::vector<P>& kernel, double x0,
                                   double x1, double y0, double y1, double step) {
    std::size_t bad = 0;
    for (double y = y0 + step / 2; y < y1; y += step)
        for (double x = x0 + step / 2; x < x1; x += step)
            if (in_kernel(ring, {x, y}) != in_convex(kernel, {x, y})) ++bad;
    return static_cast<double>(bad) * step * step;
}

inline double shoelace(const std::vector<P>& ring) {
    double s = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const P a = ring[i], b = ring[(i + 1) % ring.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return std::abs(s) / 2;
}

// Adaptive double-exponential quadrature; tolerates endpoint singularities.
inline double integrate(const std::function<double(double)>& f, double a, double b) {
    boost::math::quadrature::tanh_sinh<double> q;
    return q.integrate(f, a, b);
}

}  // namespace oracle
