#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fuzzdp/dp_metric.hpp"
#include "fuzzdp/errors.hpp"
#include "fuzzdp/instances.hpp"
#include "oracles.hpp"

using namespace fuzzdp;
namespace in = fuzzdp::instances;

namespace {

const PNorm kP1(1.0);

in::GridPtr graded() {
    static const auto g = in::share(AlphaGrid::graded(4096));
    return g;
}

}  // namespace

TEST(PNorm, Domain) {
    EXPECT_THROW(PNorm{0.5}, ValidationError);
    EXPECT_THROW(PNorm{INFINITY}, ValidationError);
    EXPECT_THROW(PNorm{NAN}, ValidationError);
    EXPECT_EQ(PNorm(2.5).value(), 2.5);
}

TEST(DpDistance, IdentityAndCrispPoints) {
    const auto g = in::share(AlphaGrid::regular(16));
    const auto tri = in::triangular(g);
    for (double p : {1.0, 2.0, 3.5}) EXPECT_EQ(dp_distance(tri, tri, PNorm(p)), 0.0);
    EXPECT_DOUBLE_EQ(dp_distance(in::crisp_point(g, 0.0), in::crisp_point(g, 3.0), PNorm(2)), 3.0);
    EXPECT_THROW(dp_distance(tri, in::crisp_point(g, Point2{0, 0}), kP1), DimMismatch);
}

TEST(DpDistance, TranslatesAreShiftApart) {
    const auto g = in::share(AlphaGrid::regular(64));
    const auto tri = in::triangular(g);
    for (double s : {0.1, 0.35, 1.0})
        EXPECT_NEAR(dp_distance(tri, in::translate(tri, s), PNorm(3)), s, 1e-15);
}

TEST(DpDistance, MergesDifferentGrids) {
    // Step semantics: on {0.5, 1} the cut for a in (0, 0.5] is [-0.5, 0.5].
    const auto coarse = in::triangular(in::share(AlphaGrid::regular(2)));
    const auto fine = in::triangular(in::share(AlphaGrid::regular(4)));
    // Cells (0,.25]: H = .25, (.25,.5]: 0, (.5,.75]: .25, (.75,1]: 0.
    EXPECT_DOUBLE_EQ(dp_distance(coarse, fine, kP1), 0.125);
    EXPECT_DOUBLE_EQ(dp_distance(fine, coarse, kP1), 0.125);
}

TEST(DpDistance, MaSequenceClosedForm) {
    const auto u = in::ma_limit(graded());
    for (unsigned n = 1; n <= 10; ++n) {
        const double d = dp_distance(in::ma_member(graded(), n), u, kP1);
        EXPECT_NEAR(d / std::exp(-double(n)), 1.0, 1e-3) << n;
    }
    EXPECT_NEAR(dp_distance(in::ma_member(graded(), 2), u, kP1), 0.135335283, 1e-4);
}

TEST(DpDistance, MaTruncationDensity) {
    const auto u = in::ma_limit(graded());
    double prev = INFINITY;
    for (unsigned n : {2u, 4u, 8u, 16u, 64u}) {
        const double d = dp_distance(truncate(u, 1.0 / n), u, kP1);
        EXPECT_NEAR(d, 1.0 / n, 1e-6) << n;
        EXPECT_LT(d, prev);
        prev = d;
    }
}

TEST(DpDistance, MetricAxiomsOnRandomSteps) {
    std::mt19937_64 rng(41);
    const auto g = in::share(AlphaGrid::regular(24));
    std::vector<FuzzySet> us;
    for (int i = 0; i < 60; ++i) us.push_back(in::random_step(rng, g));
    for (std::size_t i = 0; i + 2 < us.size(); ++i) {
        const auto &a = us[i], &b = us[i + 1], &c = us[i + 2];
        for (double p : {1.0, 2.0}) {
            const PNorm pn(p);
            const double ab = dp_distance(a, b, pn);
            EXPECT_EQ(ab, dp_distance(b, a, pn));
            EXPECT_EQ(dp_distance(a, a, pn), 0.0);
            EXPECT_LE(dp_distance(a, c, pn), ab + dp_distance(b, c, pn) + 1e-9);
        }
        const double d1 = dp_distance(a, b, PNorm(1)), d2 = dp_distance(a, b, PNorm(2)),
                     d4 = dp_distance(a, b, PNorm(4));
        EXPECT_LE(d1, d2 + 1e-9);
        EXPECT_LE(d2, d4 + 1e-9);
    }
}

TEST(DpDistance, TruncationFreezesTheLowLevels) {
    // d_p(u^(a), v^(a))^p = int_a^1 H^p + a H([u]_a, [v]_a)^p.
    std::mt19937_64 rng(43);
    const auto g = in::share(AlphaGrid::regular(24));
    for (int t = 0; t < 40; ++t) {
        const auto u = in::random_step(rng, g), v = in::random_step(rng, g);
        for (std::size_t k : {4u, 11u, 20u}) {
            const double a = g->level(k);
            double sum = a * std::pow(level_hausdorff(u, k, v, k), 2.0);
            for (std::size_t j = k + 1; j < g->size(); ++j)
                sum += g->weights()[j] * std::pow(level_hausdorff(u, j, v, j), 2.0);
            EXPECT_NEAR(dp_distance(truncate(u, a), truncate(v, a), PNorm(2)), std::sqrt(sum), 1e-12);
        }
    }
}

TEST(DpDistance, TruncationCanIncreaseDistance) {
    // Equal below 1/2, apart at 1/2: freezing the low levels spreads the gap.
    const auto g = in::share(AlphaGrid::regular(2));
    const auto u = make_fuzzy(g, {CutSet::interval(0, 4), CutSet::interval(0, 1)});
    const auto v = make_fuzzy(g, {CutSet::interval(0, 4), CutSet::interval(0, 2)});
    EXPECT_DOUBLE_EQ(dp_distance(u, v, kP1), 0.5);
    EXPECT_DOUBLE_EQ(dp_distance(truncate(u, 1.0), truncate(v, 1.0), kP1), 1.0);
}

TEST(Modulus, CrispSetsHaveZeroModulus) {
    const auto g = in::share(AlphaGrid::regular(32));
    for (double h : {1.0 / 32, 0.1, 0.5}) {
        EXPECT_EQ(p_mean_modulus(in::crisp_interval(g, -1, 2), h, kP1), 0.0);
        EXPECT_EQ(p_mean_modulus(in::crisp_point(g, Point2{1, 1}), h, PNorm(2)), 0.0);
    }
}

TEST(Modulus, TriangularClosedForm) {
    const auto tri = in::triangular(in::share(AlphaGrid::regular(1000)));
    EXPECT_NEAR(p_mean_modulus(tri, 0.1, kP1), 0.1 * 0.9, 1e-12);
    EXPECT_NEAR(p_mean_modulus(tri, 0.25, PNorm(2)), 0.25 * std::sqrt(0.75), 1e-12);
}

TEST(Modulus, MaLimitAgainstQuadrature) {
    const double h = 0.1;
    const double ref = oracle::integrate([h](double a) { return std::log(a / (a - h)); }, h, 1.0);
    const double got = p_mean_modulus(in::ma_limit(graded()), h, kP1);
    // Step snapping moves each cut by at most one graded cell, ln(2)/103 in
    // log-radius; the integrand is ln(a/(a-h)) so the error is O(cell * ln).
    EXPECT_NEAR(got, ref, 2e-2 * ref);
}

TEST(LpNorm, Examples) {
    const auto g = in::share(AlphaGrid::regular(8));
    EXPECT_EQ(lp_extension_norm(in::crisp_point(g, 0.0), kP1), 0.0);
    EXPECT_DOUBLE_EQ(lp_extension_norm(in::crisp_point(g, -3.0), PNorm(3)), 3.0);
    EXPECT_NEAR(lp_extension_norm(in::ma_limit(graded()), kP1), 1.0, 1e-9);
}

TEST(BallResidual, Examples) {
    const auto g = in::share(AlphaGrid::regular(48));
    EXPECT_EQ(ball_residual(in::triangular(g), 1.0, kP1), 0.0);
    for (double p : {1.0, 2.0, 5.0}) EXPECT_DOUBLE_EQ(ball_residual(in::crisp_point(g, 2.0), 1.0, PNorm(p)), 1.0);
    const auto excess = [](double a) { return std::max(0.0, (a <= 1.0 / 3 ? 1.0 : (1 - a) / 2) - 0.5); };
    const double ref = oracle::integrate(excess, 0.0, 1.0 / 3) + oracle::integrate(excess, 1.0 / 3, 1.0);
    EXPECT_NEAR(ball_residual(in::wz71_u0(g), 0.5, kP1), ref, 1e-12);
    EXPECT_NEAR(ref, 1.0 / 6, 1e-12);
    EXPECT_THROW(ball_residual(in::ma_limit(graded()), 1.0, kP1), UnboundedSupport);
    EXPECT_THROW(ball_residual(in::triangular(g), 0.0, kP1), ValidationError);
}

TEST(BallResidual, ZeroExactlyWhenSupportFits) {
    std::mt19937_64 rng(47);
    const auto g = in::share(AlphaGrid::regular(16));
    for (int t = 0; t < 100; ++t) {
        const auto u = in::random_step(rng, g);
        const double support = u.radius_at(0);
        EXPECT_EQ(ball_residual(u, support, kP1), 0.0);
        EXPECT_GT(ball_residual(u, support * 0.99, kP1), 0.0);
    }
}

TEST(BallResidual, NepInequality) {
    std::mt19937_64 rng(53);
    const auto g = in::share(AlphaGrid::regular(16));
    for (int t = 0; t < 60; ++t) {
        const auto u = in::random_step(rng, g), v = in::random_step(rng, g);
        for (double p : {1.0, 2.0}) {
            const double d = dp_distance(u, v, PNorm(p));
            for (double r : {0.5, 1.0, 2.0, 4.0})
                EXPECT_GE(d, std::abs(ball_residual(u, r, PNorm(p)) - ball_residual(v, r, PNorm(p))) - 1e-9);
        }
    }
}

TEST(CertifiedDelta, FirstFailureBoundsDelta) {
    const std::vector<double> h{0.1, 0.2, 0.3, 0.4};
    const std::vector<double> w{0.01, 0.05, 0.2, 0.1};
    EXPECT_EQ(certified_delta(h, w, 0.1), 0.3);
    EXPECT_EQ(certified_delta(h, w, 0.5), 0.4);
    EXPECT_FALSE(certified_delta(h, w, 0.01).has_value());
}

TEST(ModulusReport, DefaultGridAndDeltas) {
    const auto g = AlphaGrid::regular(64);
    const auto hs = default_h_grid(g);
    ASSERT_FALSE(hs.empty());
    EXPECT_NEAR(hs.front(), 1.0 / 64, 1e-15);
    EXPECT_LE(hs.back(), 0.5);
    for (std::size_t i = 1; i < hs.size(); ++i) EXPECT_GT(hs[i], hs[i - 1]);

    const auto tri = in::triangular(in::share(g));
    const double eps[] = {0.05, 0.2};
    const auto r = modulus_report(tri, 3, hs, kP1, eps);
    EXPECT_EQ(r.u_id, 3u);
    ASSERT_EQ(r.omega.size(), hs.size());
    ASSERT_TRUE(r.delta_for_eps.at(0.2).has_value());
    ASSERT_TRUE(r.delta_for_eps.at(0.05).has_value());
    EXPECT_LT(*r.delta_for_eps.at(0.05), *r.delta_for_eps.at(0.2));
}
