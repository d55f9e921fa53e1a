#pragma once

#include <span>
#include <vector>

namespace fuzzdp {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalSpan = std::span<const Interval>;

/// A nonempty finite union of closed intervals on the real line, stored as
/// sorted, pairwise disjoint [lo, hi] pieces. Single points are zero-length
/// intervals.
class IntervalSet {
public:
    /// Validates the pieces as given: sorted, lo <= hi, strictly separated.
    /// Throws ValidationError otherwise.
    explicit IntervalSet(std::vector<Interval> pieces);
    IntervalSet(double lo, double hi);

    /// Sorts and merges overlapping or touching pieces.
    static IntervalSet normalized(std::vector<Interval> pieces);

    IntervalSpan pieces() const noexcept { return pieces_; }
    std::size_t size() const noexcept { return pieces_.size(); }
    double min() const noexcept { return pieces_.front().lo; }
    double max() const noexcept { return pieces_.back().hi; }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    struct Trusted {};
    IntervalSet(std::vector<Interval> pieces, Trusted) : pieces_(std::move(pieces)) {}

    std::vector<Interval> pieces_;
};

// Span-level kernels. These work on raw piece lists so that level-indexed
// storage can be scanned without materialising IntervalSet objects.
namespace intervals {

double distance_to(double x, IntervalSpan b);

/// sup over x in a of dist(x, b); exact via endpoint and gap-midpoint analysis.
double directed_distance(IntervalSpan a, IntervalSpan b);

double hausdorff(IntervalSpan a, IntervalSpan b);

/// sup |x| over the set.
double max_abs(IntervalSpan a);

/// True when every piece of inner lies inside a piece of outer, with slack.
bool contains(IntervalSpan outer, IntervalSpan inner, double slack);

bool contains_point(IntervalSpan a, double x, double slack);

/// Intersection of two unions; may be empty.
std::vector<Interval> intersect(IntervalSpan a, IntervalSpan b);

std::vector<Interval> unite(IntervalSpan a, IntervalSpan b);

double measure(IntervalSpan a);

}  // namespace intervals

}  // namespace fuzzdp
