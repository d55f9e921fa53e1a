#pragma once

#include <span>
#include <vector>

#include "fuzzdp/cut_set.hpp"

namespace fuzzdp {

/// Directed Hausdorff value together with an a-priori error bound. The value
/// is a lower bound of the true sup; value + error_bound is an upper bound.
struct HausdorffEstimate {
    double value = 0.0;
    double error_bound = 0.0;
};

/// Error target for the planar branch-and-bound path of directed_h.
inline constexpr double kDefaultSampleTolerance = 1e-4;

/// H*(A, B) = sup_{a in A} d(a, B).
///
/// Exact for interval unions, for point-cloud A, and whenever B is convex
/// (d(., B) is then convex and peaks at a vertex of A). Otherwise squares
/// covering A are refined adaptively, pruned with the 1-Lipschitz bound of
/// d(., B), until the sup is bracketed within sample_tolerance.
HausdorffEstimate directed_h_estimate(const CutSet& a, const CutSet& b,
                                      double sample_tolerance = kDefaultSampleTolerance);
double directed_h(const CutSet& a, const CutSet& b);
double hausdorff(const CutSet& a, const CutSet& b);

bool is_convex(const CutSet& a);
/// Throws PointCloudUnsupported for point clouds.
bool is_star_shaped(const CutSet& a);

/// Interior half-planes of a simple polygon's edges, after merging
/// consecutive collinear edges, in edge order.
std::vector<HalfPlane> edge_half_planes(const Polygon& p);

/// ker A. For intervals, the interval itself; for a polygon, the
/// intersection of its edge half-planes (a convex polygon, or a point cloud
/// when degenerate). Throws EmptyKernel when A is not star-shaped.
CutSet kernel(const CutSet& a);

struct KuratowskiResult {
    std::vector<Point2> liminf_points;
    std::vector<Point2> limsup_points;
    double tolerance = 0.0;
    /// Lattice spacing actually used (equals tolerance unless capped).
    double resolution = 0.0;
    std::size_t tail_start = 0;
};

/// Tolerance-parameterised Kuratowski limits of a finite sequence, evaluated
/// on a bounding-box lattice. liminf: lattice points near every set of the
/// last-quarter tail; limsup: points near at least a third of the tail sets.
KuratowskiResult kuratowski(std::span<const CutSet> seq, double tolerance);

}  // namespace fuzzdp
