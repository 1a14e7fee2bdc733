#include <gtest/gtest.h>

#include "support.hpp"

using namespace rbac;
using rbac::testing::Builder;

namespace {

const IntervalPair& pair_of(const Solution& s) { return std::get<IntervalPair>(s.annulus); }

Instance line(std::vector<int> reds, std::vector<int> blues, Q rp = 1, Q bp = 1) {
    Builder b(1);
    for (int x : reds) b.R1(x, rp);
    for (int x : blues) b.B1(x, bp);
    return b;
}

}  // namespace

TEST(Nonuniform1D, ConstraintSplitsAtTheBlueGap) {
    Instance in = line({0, 1, 5, 6}, {2, 3, 4});
    auto s = solve_1d(in, Shape1D::nonuniform, Mode::constraint);
    ASSERT_TRUE(s.feasible);
    EXPECT_EQ(s.lambda, 0);
    const auto& a = pair_of(s);
    EXPECT_EQ(a.lo, 0);
    EXPECT_EQ(a.li, 1);
    EXPECT_EQ(a.ri, 5);
    EXPECT_EQ(a.ro, 6);
    EXPECT_EQ(s.lambda, oracle_1d(in, Shape1D::nonuniform, Mode::constraint).lambda);
}

TEST(Nonuniform1D, TwoRedsGiveDegenerateIntervals) {
    std::vector<int> blues;
    for (int x = 1; x <= 9; ++x) blues.push_back(x);
    Instance in = line({0, 10}, blues);
    auto s = solve_1d(in, Shape1D::nonuniform, Mode::constraint);
    EXPECT_EQ(s.lambda, 0);
    const auto& a = pair_of(s);
    EXPECT_EQ(a.lo, 0);
    EXPECT_EQ(a.li, 0);
    EXPECT_EQ(a.ri, 10);
    EXPECT_EQ(a.ro, 10);
    EXPECT_EQ(oracle_1d(in, Shape1D::nonuniform, Mode::constraint, {2, 9, 400'000'000}).lambda, 0);
}

TEST(Nonuniform1D, SingleRedIntervalDegeneracy) {
    Instance in = line({3}, {1, 5});
    auto s = solve_1d(in, Shape1D::nonuniform, Mode::constraint);
    ASSERT_TRUE(s.feasible);
    EXPECT_EQ(s.lambda, 0);
    const auto& a = pair_of(s);
    EXPECT_EQ(a.lo, 3);
    EXPECT_EQ(a.ro, 3);
    EXPECT_TRUE(covers(a, Q(3)));
}

TEST(Nonuniform1D, PenalizedDropsOneRedToAvoidBothBlues) {
    Instance in = line({0, 2, 4}, {1, 3}, 1, 5);
    auto s = solve_1d(in, Shape1D::nonuniform, Mode::penalized);
    EXPECT_EQ(s.lambda, 1);
    EXPECT_EQ(s.uncovered_red_ids.size(), 1u);
    EXPECT_TRUE(s.covered_blue_ids.empty());
    EXPECT_EQ(oracle_1d(in, Shape1D::nonuniform, Mode::penalized).lambda, 1);
}

TEST(Uniform1D, PenalizedEqualLengths) {
    Instance in = line({0, 1, 7, 8}, {4}, 1, 10);
    auto s = solve_1d(in, Shape1D::uniform, Mode::penalized);
    EXPECT_EQ(s.lambda, 0);
    const auto& a = pair_of(s);
    EXPECT_EQ(a.lo, 0);
    EXPECT_EQ(a.li, 1);
    EXPECT_EQ(a.ri, 7);
    EXPECT_EQ(a.ro, 8);
    EXPECT_EQ(oracle_1d(in, Shape1D::uniform, Mode::penalized).lambda, 0);
}

TEST(Uniform1D, ConstraintEqualLengths) {
    Instance in = line({0, 4, 10, 14}, {5});
    auto s = solve_1d(in, Shape1D::uniform, Mode::constraint);
    EXPECT_EQ(s.lambda, 0);
    const auto& a = pair_of(s);
    EXPECT_EQ(a.li - a.lo, a.ro - a.ri);
    EXPECT_EQ(a.lo, 0);
    EXPECT_EQ(a.li, 4);
    EXPECT_EQ(a.ri, 10);
    EXPECT_EQ(a.ro, 14);
}

TEST(Solve1D, EmptyRedSetConventions) {
    Instance in = line({}, {1, 2});
    for (auto sh : {Shape1D::nonuniform, Shape1D::uniform}) {
        EXPECT_FALSE(solve_1d(in, sh, Mode::constraint).feasible);
        auto p = solve_1d(in, sh, Mode::penalized);
        EXPECT_TRUE(p.feasible);
        EXPECT_EQ(p.lambda, 0);
        EXPECT_TRUE(std::holds_alternative<EmptyAnnulus>(p.annulus));
    }
}

TEST(Solve1D, CoincidentRedAndBlue) {
    Instance in = line({0, 5}, {5});
    auto s = solve_1d(in, Shape1D::nonuniform, Mode::constraint);
    EXPECT_EQ(s.lambda, 1);
    EXPECT_EQ(oracle_1d(in, Shape1D::nonuniform, Mode::constraint).lambda, 1);
}

TEST(Solve1D, MatchesOracleAndPassesAudit) {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 150; ++t) {
        Instance in = rbac::testing::random_instance(rng, 1, 5, 5, 8);
        for (auto sh : {Shape1D::nonuniform, Shape1D::uniform})
            for (auto md : {Mode::constraint, Mode::penalized}) {
                auto s = solve_1d(in, sh, md);
                auto o = oracle_1d(in, sh, md);
                ASSERT_TRUE(same_value(s, o)) << emit_instance(in);
                EXPECT_TRUE(solution_consistent(in, s));
                auto au = audit_solution(in, s);
                EXPECT_TRUE(au.ok) << au.why;
            }
    }
}

TEST(Solve1D, AddingPointsNeverLowersLambda) {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 100; ++t) {
        Instance in = rbac::testing::random_instance(rng, 1, 5, 5, 8);
        for (auto sh : {Shape1D::nonuniform, Shape1D::uniform}) {
            Q base = solve_1d(in, sh, Mode::penalized).lambda;
            Instance more = in;
            Q x = rbac::testing::frac(static_cast<long>(rng() % 40) - 20, 3);
            bool red = rng() % 2;
            auto& list = red ? more.reds : more.blues;
            if (std::none_of(list.begin(), list.end(), [&](const WPoint& w) { return w.p.x == x; }))
                list.push_back({{x, 0}, 2});
            EXPECT_GE(solve_1d(more, sh, Mode::penalized).lambda, base);
        }
    }
}

TEST(Solve1D, ConstraintCountEqualsMaximumGapScan) {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 100; ++t) {
        Instance in = rbac::testing::random_instance(rng, 1, 6, 6, 10);
        if (in.n() == 0) continue;
        std::vector<Q> rx;
        for (const auto& r : in.reds) rx.push_back(r.p.x);
        std::sort(rx.begin(), rx.end());
        long inside = 0, best_gap = 0;
        for (const auto& b : in.blues)
            if (rx.front() <= b.p.x && b.p.x <= rx.back()) ++inside;
        for (std::size_t i = 0; i + 1 < rx.size(); ++i) {
            long g = 0;
            for (const auto& b : in.blues)
                if (rx[i] < b.p.x && b.p.x < rx[i + 1]) ++g;
            best_gap = std::max(best_gap, g);
        }
        EXPECT_EQ(solve_1d(in, Shape1D::nonuniform, Mode::constraint).lambda, Q(inside - best_gap));
    }
}
