#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzdp/dp_metric.hpp"
#include "fuzzdp/fuzzy_set.hpp"

namespace fuzzdp {

/// Cauchy / convergence tolerance shared by the sequence diagnostics.
inline constexpr double kSequenceTolerance = 1e-6;

/// Ordered, nonempty collection of fuzzy sets of one dimension, with the
/// exponent used by every diagnostic on it.
class Family {
public:
    Family(std::vector<FuzzySet> members, PNorm p, std::vector<std::string> ids = {});

    std::size_t size() const noexcept { return members_.size(); }
    int dim() const noexcept { return members_.front().dim(); }
    PNorm p() const noexcept { return p_; }
    std::span<const FuzzySet> members() const noexcept { return members_; }
    const FuzzySet& operator[](std::size_t i) const { return members_[i]; }
    const std::string& id(std::size_t i) const { return ids_[i]; }
    /// True when every member uses the same grid.
    bool shared_grid() const;

private:
    std::vector<FuzzySet> members_;
    PNorm p_;
    std::vector<std::string> ids_;
};

/// Start index of the last-quarter tail (at least two elements when n >= 2).
std::size_t tail_start(std::size_t n);

// ---------------------------------------------------------------------------
// Uniform boundedness and equi-left-continuity.

enum class Verdict { totally_bounded_evidence, fails_boundedness, fails_equi_continuity };
std::string_view to_string(Verdict v);

struct EquiWitness {
    std::size_t member = 0;
    double h = 0.0;
    double omega = 0.0;
};

struct EquiEntry {
    double eps = 0.0;
    /// Every sampled h < delta has sup_u omega(u, h) < eps. Empty when the
    /// smallest sampled h already fails.
    std::optional<double> delta;
    bool pass = false;
    /// Member attaining the sup at the first failing h (lowest index on ties).
    std::optional<EquiWitness> witness;
};

struct DiagnoseOptions {
    /// Empty: default_h_grid of the first member's grid.
    std::vector<double> h_grid;
    /// Boundedness fails when bound_M exceeds this (or is not finite).
    double bound_limit = std::numeric_limits<double>::infinity();
    /// A finite family is always equi-left-continuous in exact arithmetic.
    /// The falsifiable proxy: equi-continuity at eps fails when the
    /// certified delta falls below this resolution floor.
    double delta_floor = kSequenceTolerance;
};

struct CompactnessReport {
    double bound_M = 0.0;
    std::size_t bound_member = 0;
    bool bounded = false;
    double bound_limit = 0.0;
    double delta_floor = 0.0;
    std::vector<double> h_grid;
    /// sup over members of omega(u, h), per h_grid entry.
    std::vector<double> sup_omega;
    std::vector<EquiEntry> equi;
    Verdict verdict = Verdict::totally_bounded_evidence;
};

CompactnessReport diagnose(const Family& U, std::span<const double> eps_list,
                           const DiagnoseOptions& opts = {});

// ---------------------------------------------------------------------------
// Greedy epsilon-nets.

struct Assignment {
    std::size_t member = 0;
    std::size_t center = 0;
    double distance = 0.0;
};

struct NetResult {
    double eps = 0.0;
    std::vector<std::size_t> center_ids;
    /// Largest member-to-center distance; always < eps.
    double radius = 0.0;
    std::vector<Assignment> assignments;
};

/// Farthest-point net: start at member 0, add the member farthest from the
/// chosen centers (lowest index on ties) until every distance is < eps.
NetResult epsilon_net(const Family& U, double eps);

// ---------------------------------------------------------------------------
// Diagonal limit construction.

struct DiagonalOptions {
    double tolerance = kSequenceTolerance;
    /// Extraction rounds; default floor(log2 n).
    std::optional<std::size_t> max_rounds;
};

struct DiagonalResult {
    FuzzySet limit;
    /// Indices (into the input family) of the final subsequence.
    std::vector<std::size_t> subsequence;
    /// Grid levels whose cut sequence was not Cauchy on the final
    /// subsequence; their cuts come from the nearest converged level below.
    std::vector<double> unresolved_levels;
    std::size_t rounds = 0;
    /// d_p(seq[subsequence[k]], limit) for every k.
    std::vector<double> tail_distances;
};

/// Candidate limit of a sequence sharing one grid. The rational grid lists
/// the levels to process in order (default: every grid level, ascending).
///
/// At each level the last-quarter tail of the current subsequence must be
/// pairwise within tolerance in H. When it is not, the members within
/// tolerance of the last one at that level are tried as a subsequence, and
/// accepted when that subsequence's tail is Cauchy there. Converged levels
/// take the last subsequence element's cut; an unconverged level takes the
/// cut of the highest converged level below it, which is the intersection
/// of the nested limits below it. An unconverged lowest prefix whose tail
/// radii grow (nondecreasing, spread above tolerance) is an escaping tail:
/// the result is lp_tail and those levels keep the last element's cuts. Any
/// other unconverged prefix throws NonConvergentLevel.
DiagonalResult diagonal_limit(const Family& seq, std::span<const double> rational_grid = {},
                              const DiagonalOptions& opts = {});

// ---------------------------------------------------------------------------
// Truncation-convergence equivalences.

struct TruncationRow {
    double r = 0.0;
    /// d_p(u_k^(r), u^(r)) per member.
    std::vector<double> residuals;
    /// (a) the tail residuals are all below tolerance.
    bool converges = false;
    /// (b) [u]_gamma equals [u]_r for every grid level gamma <= r.
    bool plateau = false;
    /// (c) weight fraction of grid levels at or above r where every tail
    /// member is within tolerance of u in H.
    double level_fraction = 0.0;
    /// Odd- and even-indexed tails taken separately (1-based positions).
    bool odd_converges = false;
    bool even_converges = false;
    /// d_p between the last odd and last even truncations.
    double split_distance = 0.0;
};

struct TruncationReport {
    double tolerance = 0.0;
    std::vector<TruncationRow> rows;
    std::vector<double> full_residuals;
    bool full_converges = false;
    bool all_truncations_converge = false;
    /// all_truncations_converge == full_converges.
    bool consistent = false;
};

TruncationReport truncation_equivalence(const Family& seq, const FuzzySet& u,
                                        std::span<const double> r_list,
                                        double tolerance = kSequenceTolerance);

// ---------------------------------------------------------------------------
// Ball-residual relative compactness proxy.

struct ResidualRow {
    double r = 0.0;
    std::vector<double> residuals;
    double min_residual = 0.0;
    std::size_t argmin = 0;
    /// Tail members whose residual is within tolerance.
    std::vector<std::size_t> near_zero;
    /// At least two tail members with residual within tolerance.
    bool plausible = false;
    /// Tail residuals nondecreasing with the last one above tolerance.
    bool escaping = false;
};

struct RelativeCompactnessReport {
    double tolerance = 0.0;
    std::vector<ResidualRow> rows;
    /// Some r is plausible and not escaping.
    bool condition_iii_prime = false;
    /// Escaping at every r.
    bool escaping_evidence = false;
};

/// Evaluates |u|^r for r = r_max k / steps, k = 1..steps. Throws
/// UnboundedSupport if any member is lp_tail.
RelativeCompactnessReport relative_compactness_in_fb(const Family& U, double r_max,
                                                     std::size_t steps = 20,
                                                     double tolerance = kSequenceTolerance);

}  // namespace fuzzdp
