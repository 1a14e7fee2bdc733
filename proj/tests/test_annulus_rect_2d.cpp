#include <gtest/gtest.h>

#include "support.hpp"

using namespace rbac;
using rbac::testing::Builder;

namespace {

Instance square_with(const Pt& blue) {
    return Builder(2).R(0, 0).R(10, 0).R(0, 10).R(10, 10).R(5, 5).B(blue.x, blue.y);
}

WeightedRect brute_force(const std::vector<WeightedPoint>& pts) {
    WeightedRect best;
    std::vector<Q> xs, ys;
    for (const auto& w : pts) xs.push_back(w.p.x), ys.push_back(w.p.y);
    for (const Q& l : xs)
        for (const Q& r : xs)
            for (const Q& b : ys)
                for (const Q& t : ys) {
                    if (l > r || b > t) continue;
                    Q s = 0;
                    for (const auto& w : pts)
                        if (l <= w.p.x && w.p.x <= r && b <= w.p.y && w.p.y <= t) s += w.weight;
                    if (s > best.weight) best = {false, {l, r, b, t}, s};
                }
    return best;
}

}  // namespace

TEST(RectNnc, HoleSwallowsBlueNextToCentralRed) {
    Instance in = square_with({1, 5});
    auto s = solve_rect_2d(in, RectShape::nnc, Mode::constraint);
    ASSERT_TRUE(s.feasible);
    EXPECT_EQ(s.lambda, 0);
    EXPECT_EQ(oracle_rect_2d(in, RectShape::nnc, Mode::constraint).lambda, 0);
}

// The hole may run flush through the outer right side: a genuine annulus with
// its outer side pushed out past x = 10 and the hole just beyond it leaves the
// blue on that side uncovered while all reds stay covered.
TEST(RectNnc, BlueOnOuterSideEscapesThroughFlushHole) {
    Instance in = square_with({10, 5});
    auto s = solve_rect_2d(in, RectShape::nnc, Mode::constraint);
    ASSERT_TRUE(s.feasible);
    EXPECT_EQ(s.lambda, 0);
    EXPECT_EQ(oracle_rect_2d(in, RectShape::nnc, Mode::constraint).lambda, 0);

    RectAnnulus real;
    real.outer = {0, 11, 0, 10};
    real.inner = {5, Q(21, 2), 0, 10};
    EXPECT_EQ(penalty_of(in, real, Mode::constraint).value, 0);
    EXPECT_TRUE(penalty_of(in, real, Mode::constraint).feasible);
}

// Outer and inner rectangles both equal [0,10]^2: the reds sit on the closed
// outer boundary and the blue lies strictly inside the open hole.
TEST(RectUniform, ZeroWidthAnnulusCoversBothRedsButNotTheBlue) {
    Instance in = Builder(2).R(0, 0).R(10, 10).B(5, 5, 100);
    auto s = solve_rect_2d(in, RectShape::uniform, Mode::penalized);
    EXPECT_EQ(s.lambda, 0);
    EXPECT_EQ(oracle_rect_2d(in, RectShape::uniform, Mode::penalized).lambda, 0);
    RectAnnulus a;
    a.outer = a.inner = {0, 10, 0, 10};
    EXPECT_EQ(penalty_of(in, a, Mode::penalized).value, 0);
    EXPECT_EQ(classify_rect(a), RectClass::uniform);
}

TEST(RectUniform, OutputHasEqualWidths) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        Instance in = rbac::testing::random_instance(rng, 2, 4, 4, 5);
        for (Mode md : {Mode::constraint, Mode::penalized}) {
            auto s = solve_rect_2d(in, RectShape::uniform, md);
            if (auto* a = std::get_if<RectAnnulus>(&s.annulus)) EXPECT_EQ(classify_rect(*a), RectClass::uniform);
        }
    }
}

TEST(RectNc, NoBluesGivesConcentricAnnulus) {
    Instance in = Builder(2).R(0, 0).R(4, 1).R(2, 7).R(-3, 2);
    auto s = solve_rect_2d(in, RectShape::nc, Mode::constraint);
    ASSERT_TRUE(s.feasible);
    EXPECT_EQ(s.lambda, 0);
    auto c = classify_rect(std::get<RectAnnulus>(s.annulus));
    EXPECT_TRUE(c == RectClass::nonuniform_concentric || c == RectClass::uniform);
}

TEST(Rect2D, ConstraintOuterIsTheRedBoundingBox) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        Instance in = rbac::testing::random_instance(rng, 2, 5, 5, 6);
        if (in.n() == 0) continue;
        auto s = solve_rect_2d(in, RectShape::nnc, Mode::constraint);
        const auto& a = std::get<RectAnnulus>(s.annulus);
        Q l = in.reds[0].p.x, r = l, b = in.reds[0].p.y, tp = b;
        for (const auto& w : in.reds)
            l = std::min(l, w.p.x), r = std::max(r, w.p.x), b = std::min(b, w.p.y), tp = std::max(tp, w.p.y);
        EXPECT_EQ(a.outer.left, l);
        EXPECT_EQ(a.outer.right, r);
        EXPECT_EQ(a.outer.bottom, b);
        EXPECT_EQ(a.outer.top, tp);
    }
}

// A thin hole around the middle blue works unless every width must match: then
// the hole has to start past x = 3, so the outer box reaches y = 3 and takes in
// the blue at (1, 1).
TEST(Rect2D, CollinearReds) {
    Instance in = Builder(2).R(0, 0).R(3, 0).R(8, 0).B(5, 0).B(1, 1);
    std::map<RectShape, Q> want{{RectShape::nnc, 0}, {RectShape::nc, 0}, {RectShape::uniform, 1}};
    for (auto [sh, w] : want) {
        auto s = solve_rect_2d(in, sh, Mode::constraint);
        EXPECT_TRUE(same_value(s, oracle_rect_2d(in, sh, Mode::constraint)));
        EXPECT_EQ(s.lambda, w);
    }
}

TEST(Rect2D, MatchesOracleAndPassesAudit) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        Instance in = rbac::testing::random_instance(rng, 2, 4, 4, 4);
        for (RectShape sh : {RectShape::nnc, RectShape::nc, RectShape::uniform})
            for (Mode md : {Mode::constraint, Mode::penalized}) {
                auto s = solve_rect_2d(in, sh, md);
                ASSERT_TRUE(same_value(s, oracle_rect_2d(in, sh, md))) << emit_instance(in);
                EXPECT_TRUE(solution_consistent(in, s));
                auto au = audit_solution(in, s);
                EXPECT_TRUE(au.ok) << au.why;
            }
    }
}

TEST(Rect2D, UniformNeverBeatsConcentricNeverBeatsFree) {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 40; ++t) {
        Instance in = rbac::testing::random_instance(rng, 2, 4, 4, 5);
        Q u = solve_rect_2d(in, RectShape::uniform, Mode::penalized).lambda;
        Q c = solve_rect_2d(in, RectShape::nc, Mode::penalized).lambda;
        Q f = solve_rect_2d(in, RectShape::nnc, Mode::penalized).lambda;
        EXPECT_GE(u, c);
        EXPECT_GE(c, f);
    }
}

TEST(MaxWeightRectangle, SinglePositivePoint) {
    auto r = max_weight_rectangle({{{1, 1}, 5}, {{2, 2}, -3}}, {0, 10, 0, 10});
    EXPECT_FALSE(r.empty);
    EXPECT_EQ(r.weight, 5);
    EXPECT_EQ(r.rect.left, 1);
    EXPECT_EQ(r.rect.right, 1);
    EXPECT_EQ(r.rect.bottom, 1);
    EXPECT_EQ(r.rect.top, 1);
}

TEST(MaxWeightRectangle, AllNegativeGivesEmpty) {
    auto r = max_weight_rectangle({{{1, 1}, -5}, {{2, 2}, -3}}, {0, 10, 0, 10});
    EXPECT_TRUE(r.empty);
    EXPECT_EQ(r.weight, 0);
}

TEST(MaxWeightRectangle, SpansANegativePointWhenWorthIt) {
    auto r = max_weight_rectangle({{{1, 1}, 2}, {{3, 1}, 2}, {{2, 1}, -1}}, {0, 10, 0, 10});
    EXPECT_EQ(r.weight, 3);
    EXPECT_EQ(r.rect.left, 1);
    EXPECT_EQ(r.rect.right, 3);
    EXPECT_EQ(r.rect.bottom, 1);
    EXPECT_EQ(r.rect.top, 1);
}

TEST(MaxWeightRectangle, PointOutsideClipThrows) {
    EXPECT_THROW(max_weight_rectangle({{{11, 1}, 2}}, {0, 10, 0, 10}), GeometryError);
}

TEST(MaxWeightRectangle, EqualsBruteForce) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 300; ++t) {
        int k = 1 + static_cast<int>(rng() % 12);
        std::vector<WeightedPoint> pts;
        std::set<Pt> used;
        for (int i = 0; i < k; ++i) {
            Pt p{Q(static_cast<long>(rng() % 7)), Q(static_cast<long>(rng() % 7))};
            if (!used.insert(p).second) continue;
            pts.push_back({p, Q(static_cast<long>(rng() % 11) - 5)});
        }
        auto got = max_weight_rectangle(pts, {0, 6, 0, 6});
        auto want = brute_force(pts);
        ASSERT_EQ(got.weight, want.weight);
        if (!got.empty) {
            Q s = 0;
            for (const auto& w : pts)
                if (got.rect.left <= w.p.x && w.p.x <= got.rect.right && got.rect.bottom <= w.p.y &&
                    w.p.y <= got.rect.top)
                    s += w.weight;
            EXPECT_EQ(s, got.weight);
        }
    }
}

TEST(Rect2D, PenalizedWithHugeRedPenaltiesMatchesConstraint) {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 40; ++t) {
        Instance in = rbac::testing::random_instance(rng, 2, 4, 4, 5);
        if (in.n() == 0) continue;
        Instance big = in;
        Q M = static_cast<long>(in.m()) + 1;
        for (auto& r : big.reds) r.penalty = M;
        for (auto& b : big.blues) b.penalty = 1;
        for (RectShape sh : {RectShape::nnc, RectShape::nc, RectShape::uniform}) {
            auto c = solve_rect_2d(in, sh, Mode::constraint);
            auto p = solve_rect_2d(big, sh, Mode::penalized);
            EXPECT_TRUE(p.uncovered_red_ids.empty());
            EXPECT_EQ(Q(static_cast<long>(p.covered_blue_ids.size())), c.lambda);
        }
    }
}
