#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ladder/solver.hpp"
#include "ladder/verify.hpp"

namespace ladder {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

TEST(GridScanSolve, WorkedExample) {
    const auto roots = grid_scan_solve({4, 2, 0.75}, 10.0, 10000);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_NEAR(roots[0], 0.4279, 1e-4);
    EXPECT_NEAR(roots[1], 2.0 / 3.0, 1e-12);
}

TEST(GridScanSolve, CircleCases) {
    EXPECT_TRUE(grid_scan_solve({1, 1, 0.5}, 3.0, 10000).empty());
    const auto roots = grid_scan_solve({1, 1, 0.5}, 6.0, 10000);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_NEAR(roots[0], (4.0 - kSqrt2) / 14.0, 1e-12);
    EXPECT_NEAR(roots[1], (4.0 + kSqrt2) / 14.0, 1e-12);
}

TEST(GridScanSolve, RejectsCoarseGrid) {
    EXPECT_THROW(grid_scan_solve({1, 1, 0.5}, 6.0, 99), std::invalid_argument);
}

TEST(PolyRootsInInterval, WorkedExample) {
    const Quartic q = quartic_from(LadderProblem(TangentEllipse(4, 2, 4), 10.0));
    const auto roots = poly_roots_in_interval(q, 0.0, 0.75);
    const auto grid = grid_scan_solve({4, 2, 0.75}, 10.0, 10000);
    ASSERT_EQ(roots.size(), 2u);
    ASSERT_EQ(grid.size(), 2u);
    EXPECT_NEAR(roots[0], grid[0], 1e-12);
    EXPECT_NEAR(roots[1], grid[1], 1e-12);
}

TEST(PolyRootsInInterval, CircleBelowCritical) {
    const Quartic q = quartic_from(LadderProblem(TangentEllipse(1, 1, 0), 3.0));
    EXPECT_TRUE(poly_roots_in_interval(q, 0.0, 0.5).empty());
    // 4t² − t − 1 has its positive root outside (0, ½).
    const auto outside = poly_roots_in_interval(q, 0.0, 1.0);
    ASSERT_EQ(outside.size(), 1u);
    EXPECT_NEAR(outside[0], (1.0 + std::sqrt(17.0)) / 8.0, 1e-12);
}

TEST(PolyRootsInInterval, NoSignChange) {
    // (t − 2)² + 1 has no real roots at all.
    const Quartic q{0.0, 0.0, 1.0, -4.0, 5.0};
    EXPECT_TRUE(poly_roots_in_interval(q, -10.0, 10.0).empty());
    EXPECT_THROW(poly_roots_in_interval(q, 1.0, 1.0), std::invalid_argument);
}

TEST(PolyRootsInInterval, FourSimpleRoots) {
    // (t − 0.1)(t − 0.2)(t − 0.5)(t − 0.9)
    const Quadratic a{1.0, -0.3, 0.02};
    const Quadratic b{1.0, -1.4, 0.45};
    const auto roots = poly_roots_in_interval(multiply(a, b), 0.0, 1.0);
    ASSERT_EQ(roots.size(), 4u);
    EXPECT_NEAR(roots[0], 0.1, 1e-13);
    EXPECT_NEAR(roots[1], 0.2, 1e-13);
    EXPECT_NEAR(roots[2], 0.5, 1e-13);
    EXPECT_NEAR(roots[3], 0.9, 1e-13);
    EXPECT_EQ(poly_roots_in_interval(multiply(a, b), 0.15, 0.6).size(), 2u);
}

TEST(VerifySolution, WorkedExample) {
    const TangentEllipse e(4, 2, 4);
    LadderSolution sol{2.0 / 3.0, 0.25, 6.0, 8.0, {36.0 / 7.0, 8.0 / 7.0}, 8.0, 1};
    const VerificationReport ok = verify_solution(e, 10.0, sol, 1e-8);
    EXPECT_TRUE(ok.passed);
    EXPECT_LE(ok.length_residual, 1e-15);

    sol.u = 6.01;
    const VerificationReport bad = verify_solution(e, 10.0, sol, 1e-8);
    EXPECT_FALSE(bad.passed);
    EXPECT_GT(bad.length_residual, 1e-8);
    EXPECT_GT(bad.tangency_residual, 1e-8);
}

TEST(VerifySolution, CircleSymmetric) {
    for (double c : {0.5, 1.0, 3.0}) {
        const double uv = (2.0 + kSqrt2) * c;
        const LadderSolution sol{1.0 - 1.0 / kSqrt2, 1.0 - 1.0 / kSqrt2, uv, uv,
                                 {uv / 2.0, uv / 2.0}, uv, 2};
        EXPECT_TRUE(verify_solution(TangentEllipse(c, c, 0), circle_s0(c), sol, 1e-12).passed);
    }
}

TEST(VerifySolution, RejectsNonPositiveTolerance) {
    const LadderSolution sol{2.0 / 3.0, 0.25, 6.0, 8.0, {36.0 / 7.0, 8.0 / 7.0}, 8.0, 1};
    EXPECT_THROW(verify_solution(TangentEllipse(4, 2, 4), 10.0, sol, 0.0), std::invalid_argument);
}

TEST(Oracles, AgreeWithSolverOnRandomProblems) {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<> len(0.2, 5.0);
    std::uniform_real_distribution<> frac(-0.9, 0.9);
    std::uniform_real_distribution<> ratio(0.3, 4.0);
    for (int i = 0; i < 100; ++i) {
        const double c = len(rng);
        const double d = len(rng);
        const TangentEllipse e(c, d, frac(rng) * c * d);
        const ReducedForm r = reduce(e);
        const CriticalInfo crit = critical_point(r);
        const double s = ratio(rng) * crit.s0;
        if (std::abs(s - crit.s0) < 1e-6 * crit.s0)
            continue;
        const LadderProblem p(e, s);
        const auto sols = solve(p, crit);
        const auto grid = grid_scan_solve(r, s, 20000);
        const auto poly = poly_roots_in_interval(quartic_from(p), 0.0, r.j);
        ASSERT_EQ(grid.size(), sols.size());
        ASSERT_EQ(poly.size(), sols.size());
        EXPECT_LE(grid.size(), 2u);
        for (std::size_t k = 0; k < sols.size(); ++k) {
            EXPECT_NEAR(grid[k], sols[k].t, 1e-7);
            EXPECT_NEAR(poly[k], sols[k].t, 1e-7);
            EXPECT_TRUE(verify_solution(e, s, sols[k], 1e-8).passed);
        }
    }
}

} // namespace
} // namespace ladder
