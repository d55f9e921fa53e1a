#include <cmath>

#include <gtest/gtest.h>

#include "fuzzdp/compactness.hpp"
#include "fuzzdp/errors.hpp"
#include "fuzzdp/instances.hpp"

using namespace fuzzdp;
namespace in = fuzzdp::instances;

namespace {

const PNorm kP1(1.0);
const std::vector<double> kEps{0.5, 0.1, 0.02};

Family translates(const in::GridPtr& g, std::size_t n, double span) {
    const auto base = in::triangular(g);
    std::vector<FuzzySet> fam;
    for (std::size_t i = 0; i < n; ++i)
        fam.push_back(in::translate(base, span * static_cast<double>(i) / static_cast<double>(n - 1)));
    return Family(std::move(fam), kP1);
}

Family spikes(const in::GridPtr& g, unsigned kmax) {
    std::vector<FuzzySet> fam;
    for (unsigned k = 1; k <= kmax; ++k) fam.push_back(in::spike(g, k));
    return Family(std::move(fam), kP1);
}

Family wz71(const in::GridPtr& g, unsigned n) {
    std::vector<FuzzySet> fam;
    for (unsigned k = 1; k <= n; ++k) fam.push_back(in::wz71_member(g, k));
    return Family(std::move(fam), kP1);
}

}  // namespace

TEST(Family, Validation) {
    EXPECT_THROW(Family({}, kP1), ValidationError);
    const auto g = in::share(AlphaGrid::regular(4));
    EXPECT_THROW(Family({in::triangular(g), in::crisp_point(g, Point2{0, 0})}, kP1), DimMismatch);
    EXPECT_THROW(Family({in::triangular(g)}, kP1, {"a", "b"}), ValidationError);
    const Family f({in::triangular(g), in::crisp_point(g, 1.0)}, kP1);
    EXPECT_EQ(f.id(1), "1");
    EXPECT_TRUE(f.shared_grid());
    EXPECT_FALSE(Family({in::triangular(g), in::triangular(in::share(AlphaGrid::regular(5)))}, kP1).shared_grid());
}

TEST(Family, TailStart) {
    EXPECT_EQ(tail_start(1), 0u);
    EXPECT_EQ(tail_start(2), 0u);
    EXPECT_EQ(tail_start(3), 1u);
    EXPECT_EQ(tail_start(8), 6u);
    EXPECT_EQ(tail_start(40), 30u);
}

TEST(Diagnose, SingletonTriangularPasses) {
    const Family f({in::triangular(in::share(AlphaGrid::regular(256)))}, kP1);
    const auto r = diagnose(f, kEps);
    EXPECT_TRUE(r.bounded);
    EXPECT_NEAR(r.bound_M, 0.5, 1e-2);  // int_0^1 (1 - a) da on a step grid
    EXPECT_EQ(r.verdict, Verdict::totally_bounded_evidence);
    for (const auto& e : r.equi) {
        EXPECT_TRUE(e.pass);
        EXPECT_FALSE(e.witness.has_value());
    }
}

TEST(Diagnose, SpikeFamilyFailsEquiContinuity) {
    const auto g = in::share(AlphaGrid::graded(4096));
    const auto r = diagnose(spikes(g, 20), kEps);
    EXPECT_TRUE(r.bounded);
    EXPECT_LE(r.bound_M, 4.0);
    EXPECT_EQ(r.verdict, Verdict::fails_equi_continuity);
    const auto& e = r.equi.front();
    EXPECT_EQ(e.eps, 0.5);
    EXPECT_FALSE(e.pass);
    ASSERT_TRUE(e.witness.has_value());
    EXPECT_EQ(e.witness->member, 19u);
    EXPECT_GE(e.witness->omega, 0.5);
    const double cell = 0x1p-20 * (std::exp2(1.0 / 103) - 1.0);
    EXPECT_LE(e.witness->h, 0x1p-20 + cell * 2);
}

TEST(Diagnose, TranslatesPass) {
    const auto r = diagnose(translates(in::share(AlphaGrid::regular(512)), 50, 1.0), kEps);
    EXPECT_EQ(r.verdict, Verdict::totally_bounded_evidence);
    ASSERT_EQ(r.equi.size(), 3u);
    for (const auto& e : r.equi) {
        EXPECT_TRUE(e.pass);
        ASSERT_TRUE(e.delta.has_value());
        EXPECT_GE(*e.delta, r.delta_floor);
    }
}

TEST(Diagnose, BoundLimitAndSubsetMonotonicity) {
    const auto g = in::share(AlphaGrid::regular(128));
    const auto full = translates(g, 10, 1.0);
    DiagnoseOptions opts;
    opts.bound_limit = 1.0;
    EXPECT_EQ(diagnose(full, kEps, opts).verdict, Verdict::fails_boundedness);

    const auto a = diagnose(full, kEps);
    const Family sub({full[0], full[3], full[7]}, kP1);
    DiagnoseOptions same;
    same.h_grid = a.h_grid;
    const auto b = diagnose(sub, kEps, same);
    ASSERT_EQ(a.verdict, Verdict::totally_bounded_evidence);
    EXPECT_EQ(b.verdict, Verdict::totally_bounded_evidence);
    for (std::size_t i = 0; i < kEps.size(); ++i) EXPECT_GE(*b.equi[i].delta, *a.equi[i].delta);
}

TEST(EpsilonNet, Examples) {
    const auto g = in::share(AlphaGrid::regular(64));
    const auto one = epsilon_net(Family({in::triangular(g)}, kP1), 0.1);
    EXPECT_EQ(one.center_ids.size(), 1u);
    EXPECT_EQ(one.radius, 0.0);

    const auto tr = epsilon_net(translates(g, 11, 1.0), 0.25);
    EXPECT_LE(tr.center_ids.size(), 3u);
    EXPECT_LT(tr.radius, 0.25);

    std::vector<FuzzySet> pts;
    for (double x : {0.0, 0.1, 0.3, 10.0, 10.2, 9.9}) pts.push_back(in::crisp_point(g, x));
    const auto two = epsilon_net(Family(pts, kP1), 1.0);
    ASSERT_EQ(two.center_ids.size(), 2u);
    EXPECT_EQ(two.center_ids[0], 0u);
    EXPECT_EQ(two.center_ids[1], 4u);  // farthest from 0, lowest index on ties
    EXPECT_THROW(epsilon_net(Family(pts, kP1), 0.0), ValidationError);
}

TEST(EpsilonNet, RadiusShrinksWithEps) {
    const auto fam = translates(in::share(AlphaGrid::regular(64)), 30, 3.0);
    double prev_r = INFINITY;
    std::size_t prev_n = 0;
    for (double eps : {2.0, 1.0, 0.5, 0.25, 0.1}) {
        const auto net = epsilon_net(fam, eps);
        EXPECT_LE(net.radius, prev_r);
        EXPECT_GE(net.center_ids.size(), prev_n);
        for (const auto& a : net.assignments) EXPECT_LE(a.distance, net.radius);
        prev_r = net.radius;
        prev_n = net.center_ids.size();
    }
}

TEST(Diagonal, ConstantSequence) {
    const auto u = in::triangular(in::share(AlphaGrid::regular(16)));
    const auto r = diagonal_limit(Family({u, u, u, u}, kP1));
    EXPECT_EQ(r.limit, u);
    EXPECT_TRUE(r.unresolved_levels.empty());
    EXPECT_EQ(r.rounds, 0u);
    for (double d : r.tail_distances) EXPECT_EQ(d, 0.0);
}

TEST(Diagonal, Wz71ConvergesToUzero) {
    const auto g = in::with_level(in::share(AlphaGrid::regular(240)), 1.0 / 3);
    const auto seq = wz71(g, 40);
    const auto r = diagonal_limit(seq);
    EXPECT_EQ(r.limit.support(), SupportKind::bounded);
    // The extracted parity agrees with u0 everywhere except at the single
    // level 1/3 (2/3 or 1/3 against 1), which carries one cell of weight.
    const auto u0 = in::wz71_u0(g);
    const std::size_t third = g->index_at_or_above(1.0 / 3);
    for (std::size_t j = 0; j < g->size(); ++j)
        if (j != third) EXPECT_EQ(level_hausdorff(r.limit, j, u0, j), 0.0) << g->level(j);
    EXPECT_LE(dp_distance(r.limit, u0, kP1), 2.0 / 3 * g->weights()[third] + 1e-15);
    EXPECT_FALSE(r.unresolved_levels.empty());  // the knee band below 1/3
    for (std::size_t k = 1; k < r.tail_distances.size(); ++k)
        EXPECT_LE(r.tail_distances[k], r.tail_distances[k - 1] + 1e-12);
}

TEST(Diagonal, MaSequenceIsLpTail) {
    const auto g = in::share(AlphaGrid::graded(1024));
    std::vector<FuzzySet> seq;
    for (unsigned n = 1; n <= 12; ++n) seq.push_back(in::ma_member(g, n));
    const auto r = diagonal_limit(Family(seq, kP1));
    EXPECT_EQ(r.limit.support(), SupportKind::lp_tail);
    const auto u = in::ma_limit(g);
    for (std::size_t j = g->index_at_or_above(std::exp(-5.0)); j < g->size(); ++j)
        EXPECT_LT(level_hausdorff(r.limit, j, u, j), 1e-6) << g->level(j);
}

TEST(Diagonal, EscapingPointsThrow) {
    const auto g = in::share(AlphaGrid::regular(8));
    std::vector<FuzzySet> seq;
    for (int n = 1; n <= 20; ++n) seq.push_back(in::crisp_point(g, n));
    EXPECT_THROW(diagonal_limit(Family(seq, kP1)), NonConvergentLevel);
}

TEST(Diagonal, OscillatingLowLevelThrows) {
    // Levels above 1/2 agree; below, members alternate between [0,1] and [0,2].
    const auto g = in::share(AlphaGrid::regular(4));
    std::vector<FuzzySet> seq;
    for (int n = 0; n < 16; ++n) {
        std::vector<CutSet> cuts{CutSet::interval(0, n % 2 ? 2.0 : 1.0), CutSet::interval(0, 1),
                                 CutSet::interval(0, 1), CutSet::interval(0, 1)};
        seq.push_back(make_fuzzy(g, cuts));
    }
    const DiagonalOptions no_rounds{kSequenceTolerance, 0};
    EXPECT_THROW(diagonal_limit(Family(seq, kP1), {}, no_rounds), NonConvergentLevel);
    // With extraction allowed, one parity is kept.
    const auto r = diagonal_limit(Family(seq, kP1));
    EXPECT_EQ(r.rounds, 1u);
    EXPECT_EQ(r.subsequence.back(), 15u);
}

TEST(Diagonal, RequiresSharedGrid) {
    const Family f({in::triangular(in::share(AlphaGrid::regular(4))),
                    in::triangular(in::share(AlphaGrid::regular(8)))},
                   kP1);
    EXPECT_THROW(diagonal_limit(f), ValidationError);
}

TEST(Truncation, Wz71SplitAtOneThird) {
    const auto g = in::with_level(in::share(AlphaGrid::regular(240)), 1.0 / 3);
    const auto seq = wz71(g, 40);
    const double rs[] = {0.5, 1.0 / 3};
    const auto rep = truncation_equivalence(seq, in::wz71_u0(g), rs);
    ASSERT_EQ(rep.rows.size(), 2u);
    EXPECT_TRUE(rep.rows[0].converges);
    EXPECT_FALSE(rep.rows[0].plateau);  // u0 still shrinks on (1/3, 1/2)
    const auto& third = rep.rows[1];
    EXPECT_TRUE(third.plateau);
    EXPECT_FALSE(third.converges);
    EXPECT_TRUE(third.odd_converges);
    EXPECT_TRUE(third.even_converges);
    EXPECT_NEAR(third.split_distance, 1.0 / 9, 1e-9);
    EXPECT_FALSE(rep.full_converges);
    EXPECT_TRUE(rep.consistent);
}

TEST(Truncation, ConstantSequencePassesEverything) {
    const auto u = in::triangular(in::share(AlphaGrid::regular(16)));
    const double rs[] = {0.75, 0.5, 0.25};
    const auto rep = truncation_equivalence(Family({u, u, u, u, u}, kP1), u, rs);
    EXPECT_TRUE(rep.full_converges);
    EXPECT_TRUE(rep.all_truncations_converge);
    EXPECT_TRUE(rep.consistent);
    for (const auto& row : rep.rows) {
        EXPECT_TRUE(row.converges);
        EXPECT_EQ(row.level_fraction, 1.0);
        EXPECT_EQ(row.split_distance, 0.0);
        EXPECT_FALSE(row.plateau);  // triangular cuts keep shrinking
    }
    const double bad[] = {0.25, 0.5};
    EXPECT_THROW(truncation_equivalence(Family({u}, kP1), u, bad), ValidationError);
}

TEST(RelativeCompactness, FamilyInsideBall) {
    const auto fam = translates(in::share(AlphaGrid::regular(32)), 8, 1.0);
    const auto rep = relative_compactness_in_fb(fam, 2.0, 4);
    EXPECT_EQ(rep.rows.back().r, 2.0);
    for (double r : rep.rows.back().residuals) EXPECT_EQ(r, 0.0);
    EXPECT_TRUE(rep.condition_iii_prime);
    EXPECT_FALSE(rep.escaping_evidence);
}

TEST(RelativeCompactness, EscapingCrispPoints) {
    const auto g = in::share(AlphaGrid::regular(4));
    std::vector<FuzzySet> pts;
    for (int n = 1; n <= 20; ++n) pts.push_back(in::crisp_point(g, n));
    const auto rep = relative_compactness_in_fb(Family(pts, kP1), 19.0, 19);
    for (const auto& row : rep.rows) {
        EXPECT_GE(*std::max_element(row.residuals.begin(), row.residuals.end()), 1.0);
        EXPECT_TRUE(row.escaping);
    }
    EXPECT_TRUE(rep.escaping_evidence);
    EXPECT_FALSE(rep.condition_iii_prime);
}

TEST(RelativeCompactness, MaTruncationsEscape) {
    const auto g = in::share(AlphaGrid::graded(512));
    const auto u = in::ma_limit(g);
    std::vector<FuzzySet> fam;
    for (unsigned n = 2; n <= 200; n += 6) fam.push_back(truncate(u, 1.0 / n));
    const auto rep = relative_compactness_in_fb(Family(fam, kP1), 4.0, 8);
    EXPECT_TRUE(rep.escaping_evidence);
    EXPECT_FALSE(rep.condition_iii_prime);
    EXPECT_THROW(relative_compactness_in_fb(Family({u}, kP1), 1.0), UnboundedSupport);
}
