#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace fuzzdp {

/// How a grid turns sampled level values into an integral over (0, 1].
///
/// step:       value at level a_j stands for the whole cell (a_{j-1}, a_j];
///             exact for families that are piecewise constant in alpha.
/// log_linear: the integrand is interpolated linearly in ln(alpha) between
///             levels and integrated exactly against d(alpha); the cell
///             (0, a_0] still uses the step rule. Second order for smooth
///             integrands in ln(alpha), exact for integrands affine in ln(alpha).
enum class Quadrature { step, log_linear };

std::string_view to_string(Quadrature q);
Quadrature quadrature_from_string(std::string_view s);

/// Strictly increasing levels in (0, 1], last level exactly 1, with one
/// positive quadrature weight per level summing to 1.
class AlphaGrid {
public:
    explicit AlphaGrid(std::vector<double> levels, Quadrature rule = Quadrature::step);

    /// n uniform levels on [alpha_min, 1].
    static AlphaGrid uniform(std::size_t n, double alpha_min);
    /// Levels j/n for j = 1..n.
    static AlphaGrid regular(std::size_t n);
    /// uniform(n, alpha_min) plus the geometric tail alpha_min * 2^-j down to floor.
    static AlphaGrid with_tail(std::size_t n, double alpha_min, double floor = 0x1p-40);
    /// Levels 2^(-k/m), k = 0..K, with m chosen so that at least n levels span
    /// [alpha_min, 1]. Every power of two down to alpha_min is a level. Uses
    /// the log_linear rule.
    static AlphaGrid graded(std::size_t n, double alpha_min = 0x1p-40);

    std::span<const double> levels() const noexcept { return levels_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return levels_.size(); }
    double level(std::size_t i) const { return levels_[i]; }
    Quadrature rule() const noexcept { return rule_; }

    /// Index of the smallest level >= alpha (levels within 1e-12 relative of
    /// alpha count as equal). Throws ValidationError outside (0, 1].
    std::size_t index_at_or_above(double alpha) const;

    /// Grid with extra levels inserted; weights are recomputed under the same rule.
    AlphaGrid refined(std::span<const double> extra) const;

    friend bool operator==(const AlphaGrid& a, const AlphaGrid& b) {
        return a.rule_ == b.rule_ && a.levels_ == b.levels_;
    }

private:
    std::vector<double> levels_;
    std::vector<double> weights_;
    Quadrature rule_;
};

/// Common refinement of two grids. The rule is kept when both agree, and
/// falls back to step otherwise.
AlphaGrid merge(const AlphaGrid& a, const AlphaGrid& b);

/// Sorted union with near-duplicates (1e-15 relative) collapsed.
std::vector<double> merge_levels(std::span<const double> a, std::span<const double> b);

}  // namespace fuzzdp
