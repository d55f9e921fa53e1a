#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fuzzdp/fuzzy_set.hpp"

// Generators for the worked examples and for randomized test families.
namespace fuzzdp::instances {

using GridPtr = FuzzySet::GridPtr;

GridPtr share(AlphaGrid g);

/// The grid itself when `level` is already a level, else a refined copy.
GridPtr with_level(const GridPtr& grid, double level);

/// [c - s(1 - a), c + s(1 - a)].
FuzzySet triangular(const GridPtr& grid, double center = 0.0, double spread = 1.0);
/// Crisp singleton in R^1 or R^2.
FuzzySet crisp_point(const GridPtr& grid, double x);
FuzzySet crisp_point(const GridPtr& grid, Point2 x);
/// Crisp interval [lo, hi].
FuzzySet crisp_interval(const GridPtr& grid, double lo, double hi);
/// u shifted by `shift` (dimension 1).
FuzzySet translate(const FuzzySet& u, double shift);

/// Ma's sequence: u_n(x) = e^{-x} on [0, n]; cuts [0, min(n, -ln a)].
FuzzySet ma_member(const GridPtr& grid, unsigned n);
/// Its d_1 limit, e^{-x} on [0, inf): cuts [0, -ln a], lp_tail support.
FuzzySet ma_limit(const GridPtr& grid);

/// The odd/even piecewise-linear sequence converging to u0 whose
/// truncations at 1/3 split between v (odd n) and w (even n). Level 1/3 is
/// added to the grid when missing.
FuzzySet wz71_member(const GridPtr& grid, unsigned n);
FuzzySet wz71_u0(const GridPtr& grid);
FuzzySet wz71_v(const GridPtr& grid);
FuzzySet wz71_w(const GridPtr& grid);

/// [0, 1] for a >= 2^-k, [0, 2^{k/p}] below. Uniformly p-mean bounded in k
/// but not equi-left-continuous.
FuzzySet spike(const GridPtr& grid, unsigned k, double p = 1.0);

/// Star polygon with alternating outer/inner radii around `center`.
std::vector<Point2> regular_star(unsigned spikes, double r_outer, double r_inner,
                                 Point2 center = {0.0, 0.0}, double phase = 0.0);

/// Random polygon that is star-shaped about `center`: sorted random angles
/// with every angular gap below pi, radii uniform in [r_lo, r_hi].
std::vector<Point2> random_star(std::mt19937_64& rng, unsigned vertices, double r_lo, double r_hi,
                                Point2 center = {0.0, 0.0});

/// Planar fuzzy set whose a-cut is `ring` scaled about `center` by
/// (1 - a/2). Nested whenever center lies in the kernel of ring.
FuzzySet radial_fuzzy(const GridPtr& grid, const std::vector<Point2>& ring,
                      Point2 center = {0.0, 0.0});

/// Random one-dimensional step fuzzy set: nested unions of up to
/// `max_pieces` intervals inside [-scale, scale].
FuzzySet random_step(std::mt19937_64& rng, const GridPtr& grid, unsigned max_pieces = 3,
                     double scale = 5.0);

}  // namespace fuzzdp::instances
