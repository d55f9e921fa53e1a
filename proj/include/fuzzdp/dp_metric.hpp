#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fuzzdp/fuzzy_set.hpp"

namespace fuzzdp {

/// Exponent of the L_p-type metrics; 1 <= p < infinity.
class PNorm {
public:
    explicit PNorm(double p);
    double value() const noexcept { return p_; }

private:
    double p_;
};

/// H([u]_alpha, [v]_alpha) at grid indices i (of u) and j (of v).
double level_hausdorff(const FuzzySet& u, std::size_t i, const FuzzySet& v, std::size_t j);

/// d_p(u, v) = ( int_0^1 H([u]_a, [v]_a)^p da )^(1/p), evaluated with the
/// quadrature of the merged grid. Under the step rule this is the exact
/// integral of the piecewise-constant cut families.
double dp_distance(const FuzzySet& u, const FuzzySet& v, PNorm p);

/// omega(u, h) = ( int_h^1 H([u]_a, [u]_{a-h})^p da )^(1/p). The integrand is
/// piecewise constant between the levels and the levels shifted by h, so the
/// sum over that refined partition is exact for the step family.
double p_mean_modulus(const FuzzySet& u, double h, PNorm p);

/// d_p(u, 0^), the distance to the crisp origin.
double lp_extension_norm(const FuzzySet& u, PNorm p);

/// |u|^r: the p-mean of H([u]_a u B_r, B_r) = (radius of [u]_a - r)_+.
/// Zero exactly when the support lies in B_r. Throws UnboundedSupport for
/// lp_tail sets.
double ball_residual(const FuzzySet& u, double r, PNorm p);

struct ModulusReport {
    std::size_t u_id = 0;
    std::vector<double> h_grid;
    std::vector<double> omega;
    /// Certified delta per eps: every sampled h < delta has omega < eps.
    std::map<double, std::optional<double>> delta_for_eps;
};

/// Geometric h values from the smallest cell width of the grid up to 1/2,
/// four per octave.
std::vector<double> default_h_grid(const AlphaGrid& grid);

ModulusReport modulus_report(const FuzzySet& u, std::size_t id, std::span<const double> h_grid,
                             PNorm p, std::span<const double> eps_list = {});

/// Largest delta drawn from h_grid such that omega < eps at every h_grid
/// entry below it; nullopt when the first entry already fails.
std::optional<double> certified_delta(std::span<const double> h_grid,
                                      std::span<const double> omega, double eps);

}  // namespace fuzzdp
