#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzdp/alpha_grid.hpp"
#include "fuzzdp/cut_set.hpp"

namespace fuzzdp {

/// bounded: the support (0-cut) is the closure of the union of the stored
/// cuts. lp_tail: the 0-cut is unbounded and never stored; only the
/// L_p-integral of the level radii is finite.
enum class SupportKind { bounded, lp_tail };

std::string_view to_string(SupportKind k);
SupportKind support_from_string(std::string_view s);

/// A fuzzy set given by its alpha-cuts on a finite grid. Immutable once
/// built; cuts are nested (descending in alpha) and the level-1 cut is
/// nonempty. Between grid levels the family is piecewise constant: the cut
/// at alpha is the stored cut at the smallest grid level >= alpha.
///
/// One-dimensional cuts live in a flat piece array indexed by level so that
/// grids with ~10^6 levels stay compact; planar cuts are stored as CutSets.
class FuzzySet {
public:
    using GridPtr = std::shared_ptr<const AlphaGrid>;

    /// Validating constructor; see make_fuzzy.
    FuzzySet(GridPtr grid, std::vector<CutSet> cuts, SupportKind support);

    /// Flat one-dimensional form: level j owns pieces[offsets[j], offsets[j+1]).
    /// Every level's pieces must be sorted, disjoint and nonempty.
    FuzzySet(GridPtr grid, std::vector<Interval> pieces, std::vector<std::uint32_t> offsets,
             SupportKind support);

    int dim() const noexcept { return dim_; }
    SupportKind support() const noexcept { return support_; }
    const AlphaGrid& grid() const noexcept { return *grid_; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }
    std::size_t levels() const noexcept { return grid_->size(); }

    /// Pieces of the cut at grid index j (dim 1 only).
    IntervalSpan pieces_at(std::size_t j) const {
        return IntervalSpan(pieces_).subspan(offsets_[j], offsets_[j + 1] - offsets_[j]);
    }
    /// Planar cut at grid index j (dim 2 only).
    const CutSet& planar_at(std::size_t j) const { return planar_[j]; }

    /// Cut at grid index j, materialised.
    CutSet cut_at(std::size_t j) const;

    /// sup-norm of the cut at grid index j, i.e. H(cut, {0}).
    double radius_at(std::size_t j) const;

    friend bool operator==(const FuzzySet& a, const FuzzySet& b);

private:
    void validate() const;

    GridPtr grid_;
    SupportKind support_;
    int dim_ = 1;
    std::vector<Interval> pieces_;
    std::vector<std::uint32_t> offsets_;
    std::vector<CutSet> planar_;
};

/// Builds a validated fuzzy set. Throws NestednessViolation(alpha_lo,
/// alpha_hi) for the first consecutive pair that is not nested, EmptyTopCut
/// when the level-1 cut is empty, ValidationError for count/dim mismatches.
FuzzySet make_fuzzy(AlphaGrid grid, std::vector<CutSet> cuts,
                    SupportKind support = SupportKind::bounded);
FuzzySet make_fuzzy(FuzzySet::GridPtr grid, std::vector<CutSet> cuts,
                    SupportKind support = SupportKind::bounded);

/// Cut at the smallest grid level >= alpha; alpha in (0, 1].
CutSet cut(const FuzzySet& u, double alpha);

/// u^(alpha): cuts above alpha unchanged, every cut at a level <= alpha
/// replaced by cut(u, alpha). The result always has bounded support.
FuzzySet truncate(const FuzzySet& u, double alpha);

/// Largest grid level whose cut contains x, or 0. A debug view only: the
/// value between grid levels carries no meaning.
double membership(const FuzzySet& u, double x);
double membership(const FuzzySet& u, Point2 x);

/// Position in the space taxonomy. FBp_only marks lp_tail sets, which lie
/// outside F_B (and therefore outside E, S0, S, Stilde) regardless of shape.
enum class SpaceLabel { E, S0, S, Stilde, FB, FBp_only };

std::string_view to_string(SpaceLabel l);

struct SpaceClass {
    SpaceLabel label = SpaceLabel::FB;
    // Shape predicates, evaluated on every stored level.
    bool all_convex = false;
    bool all_star_shaped = false;
    bool common_kernel = false;
    bool origin_in_kernels = false;
    /// A point shared by every level kernel (S, S0, E).
    std::optional<Point2> kernel_point;
    /// One star center per level (set whenever all_star_shaped).
    std::vector<Point2> star_centers;
    /// First level that breaks the strongest failing predicate.
    std::optional<double> violation_level;
    std::string violation;
};

SpaceClass classify(const FuzzySet& u);

}  // namespace fuzzdp
