#include "fuzzdp/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzdp/errors.hpp"
#include "fuzzdp/setgeom.hpp"

namespace fuzzdp {

std::string_view to_string(SupportKind k) { return k == SupportKind::bounded ? "bounded" : "lp_tail"; }

SupportKind support_from_string(std::string_view s) {
    if (s == "bounded") return SupportKind::bounded;
    if (s == "lp_tail") return SupportKind::lp_tail;
    throw ValidationError("unknown support kind '" + std::string(s) + "'");
}

std::string_view to_string(SpaceLabel l) {
    switch (l) {
        case SpaceLabel::E: return "E";
        case SpaceLabel::S0: return "S0";
        case SpaceLabel::S: return "S";
        case SpaceLabel::Stilde: return "Stilde";
        case SpaceLabel::FB: return "FB";
        case SpaceLabel::FBp_only: return "FBp_only";
    }
    return "FB";
}

FuzzySet::FuzzySet(GridPtr grid, std::vector<CutSet> cuts, SupportKind support)
    : grid_(std::move(grid)), support_(support) {
    if (!grid_) throw ValidationError("fuzzy set needs a grid");
    if (cuts.size() != grid_->size())
        throw ValidationError("expected " + std::to_string(grid_->size()) + " cuts, got " +
                              std::to_string(cuts.size()));
    dim_ = cuts.front().dim();
    for (const auto& c : cuts)
        if (c.dim() != dim_) throw DimMismatch(dim_, c.dim());
    if (dim_ == 1) {
        offsets_.reserve(cuts.size() + 1);
        offsets_.push_back(0);
        for (const auto& c : cuts) {
            auto p = c.intervals().pieces();
            pieces_.insert(pieces_.end(), p.begin(), p.end());
            offsets_.push_back(static_cast<std::uint32_t>(pieces_.size()));
        }
    } else {
        planar_ = std::move(cuts);
    }
    validate();
}

FuzzySet::FuzzySet(GridPtr grid, std::vector<Interval> pieces, std::vector<std::uint32_t> offsets,
                   SupportKind support)
    : grid_(std::move(grid)),
      support_(support),
      dim_(1),
      pieces_(std::move(pieces)),
      offsets_(std::move(offsets)) {
    if (!grid_) throw ValidationError("fuzzy set needs a grid");
    if (offsets_.size() != grid_->size() + 1 || offsets_.front() != 0 ||
        offsets_.back() != pieces_.size())
        throw ValidationError("piece offsets do not match the grid");
    for (std::size_t j = 0; j < grid_->size(); ++j) {
        if (offsets_[j + 1] < offsets_[j]) throw ValidationError("piece offsets must not decrease");
        auto p = pieces_at(j);
        if (p.empty()) {
            if (j + 1 == grid_->size()) throw EmptyTopCut();
            throw NestednessViolation(grid_->level(j), grid_->level(j + 1));
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!(p[i].lo <= p[i].hi) || !std::isfinite(p[i].lo) || !std::isfinite(p[i].hi))
                throw ValidationError("malformed interval at alpha=" +
                                      std::to_string(grid_->level(j)));
            if (i > 0 && !(p[i - 1].hi < p[i].lo))
                throw ValidationError("intervals not sorted/disjoint at alpha=" +
                                      std::to_string(grid_->level(j)));
        }
    }
    validate();
}

void FuzzySet::validate() const {
    const std::size_t n = grid_->size();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const bool nested =
            dim_ == 1 ? intervals::contains(pieces_at(j), pieces_at(j + 1), kGeomTolerance)
                      : contains(planar_[j], planar_[j + 1], kGeomTolerance);
        if (!nested) throw NestednessViolation(grid_->level(j), grid_->level(j + 1));
    }
}

CutSet FuzzySet::cut_at(std::size_t j) const {
    if (dim_ == 2) return planar_[j];
    auto p = pieces_at(j);
    return CutSet(IntervalSet(std::vector<Interval>(p.begin(), p.end())));
}

double FuzzySet::radius_at(std::size_t j) const {
    return dim_ == 1 ? intervals::max_abs(pieces_at(j)) : planar_[j].max_norm();
}

bool operator==(const FuzzySet& a, const FuzzySet& b) {
    if (a.dim_ != b.dim_ || a.support_ != b.support_) return false;
    if (a.grid_ != b.grid_ && !(*a.grid_ == *b.grid_)) return false;
    return a.pieces_ == b.pieces_ && a.offsets_ == b.offsets_ && a.planar_ == b.planar_;
}

FuzzySet make_fuzzy(FuzzySet::GridPtr grid, std::vector<CutSet> cuts, SupportKind support) {
    if (cuts.empty()) throw EmptyTopCut();
    return FuzzySet(std::move(grid), std::move(cuts), support);
}

FuzzySet make_fuzzy(AlphaGrid grid, std::vector<CutSet> cuts, SupportKind support) {
    return make_fuzzy(std::make_shared<const AlphaGrid>(std::move(grid)), std::move(cuts), support);
}

CutSet cut(const FuzzySet& u, double alpha) {
    return u.cut_at(u.grid().index_at_or_above(alpha));
}

FuzzySet truncate(const FuzzySet& u, double alpha) {
    const std::size_t k = u.grid().index_at_or_above(alpha);
    const std::size_t n = u.levels();
    if (u.dim() == 1) {
        std::vector<Interval> pieces;
        std::vector<std::uint32_t> offsets{0};
        offsets.reserve(n + 1);
        const auto frozen = u.pieces_at(k);
        for (std::size_t j = 0; j < n; ++j) {
            const auto p = j < k ? frozen : u.pieces_at(j);
            pieces.insert(pieces.end(), p.begin(), p.end());
            offsets.push_back(static_cast<std::uint32_t>(pieces.size()));
        }
        return FuzzySet(u.grid_ptr(), std::move(pieces), std::move(offsets), SupportKind::bounded);
    }
    std::vector<CutSet> cuts;
    cuts.reserve(n);
    for (std::size_t j = 0; j < n; ++j) cuts.push_back(u.planar_at(std::max(j, k)));
    return FuzzySet(u.grid_ptr(), std::move(cuts), SupportKind::bounded);
}

double membership(const FuzzySet& u, double x) {
    if (u.dim() != 1) throw DimMismatch(u.dim(), 1);
    for (std::size_t j = u.levels(); j-- > 0;)
        if (intervals::contains_point(u.pieces_at(j), x, 0.0)) return u.grid().level(j);
    return 0.0;
}

double membership(const FuzzySet& u, Point2 x) {
    if (u.dim() != 2) throw DimMismatch(u.dim(), 2);
    for (std::size_t j = u.levels(); j-- > 0;)
        if (distance_to(u.planar_at(j), x) == 0.0) return u.grid().level(j);
    return 0.0;
}

namespace {

SpaceClass classify_1d(const FuzzySet& u) {
    SpaceClass out;
    const std::size_t n = u.levels();
    for (std::size_t j = 0; j < n; ++j) {
        if (u.pieces_at(j).size() != 1) {
            out.violation_level = u.grid().level(j);
            const auto p = u.pieces_at(j);
            out.violation = "cut is disconnected: gap (" + std::to_string(p[0].hi) + ", " +
                            std::to_string(p[1].lo) + ")";
            return out;
        }
    }
    // Nested single intervals: every cut is convex and their common part is
    // the level-1 cut, which is nonempty.
    out.all_convex = out.all_star_shaped = out.common_kernel = true;
    const auto top = u.pieces_at(n - 1)[0];
    out.kernel_point = Point2{0.5 * (top.lo + top.hi), 0.0};
    out.origin_in_kernels = top.lo <= kGeomTolerance && top.hi >= -kGeomTolerance;
    out.star_centers.assign(n, *out.kernel_point);
    return out;
}

SpaceClass classify_2d(const FuzzySet& u) {
    SpaceClass out;
    const std::size_t n = u.levels();
    std::vector<CutSet> kernels;
    kernels.reserve(n);
    out.all_convex = true;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& c = u.planar_at(j);
        if (out.all_convex && !is_convex(c)) {
            out.all_convex = false;
            if (!out.violation_level) {
                out.violation_level = u.grid().level(j);
                out.violation = "cut is not convex";
            }
        }
        const bool star = c.kind() == CutSet::Kind::points ? is_convex(c) : is_star_shaped(c);
        if (!star) {
            out.all_convex = false;
            out.violation_level = u.grid().level(j);
            out.violation = c.kind() == CutSet::Kind::points ? "point cloud is disconnected"
                                                             : "kernel is empty";
            return out;
        }
        kernels.push_back(kernel(c));
    }
    out.all_star_shaped = true;
    out.violation_level.reset();
    out.violation.clear();
    for (const auto& k : kernels)
        out.star_centers.push_back(k.kind() == CutSet::Kind::polygon
                                       ? geom::centroid(k.polygon().vertices())
                                       : k.points().points.front());

    out.origin_in_kernels = true;
    for (const auto& k : kernels)
        if (distance_to(k, {0.0, 0.0}) > kGeomTolerance) out.origin_in_kernels = false;

    std::vector<Point2> common = kernels.front().outline();
    for (std::size_t j = 1; j < n && !common.empty(); ++j)
        common = geom::intersect_convex(common, kernels[j].outline(), kGeomTolerance);
    if (!common.empty()) {
        out.common_kernel = true;
        out.kernel_point = common.size() >= 3 ? geom::centroid(common) : common.front();
    } else {
        out.violation = "no point lies in every level kernel";
    }
    return out;
}

}  // namespace

SpaceClass classify(const FuzzySet& u) {
    SpaceClass out = u.dim() == 1 ? classify_1d(u) : classify_2d(u);
    if (u.support() == SupportKind::lp_tail)
        out.label = SpaceLabel::FBp_only;
    else if (out.all_convex)
        out.label = SpaceLabel::E;
    else if (out.common_kernel && out.origin_in_kernels)
        out.label = SpaceLabel::S0;
    else if (out.common_kernel)
        out.label = SpaceLabel::S;
    else if (out.all_star_shaped)
        out.label = SpaceLabel::Stilde;
    else
        out.label = SpaceLabel::FB;
    return out;
}

}  // namespace fuzzdp
