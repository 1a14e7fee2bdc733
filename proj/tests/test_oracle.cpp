#include <gtest/gtest.h>

#include "support.hpp"

using namespace rbac;
using rbac::testing::Builder;

TEST(Oracle, SingleRedNoBlues) {
    Instance in = Builder(2).R(1, 1);
    EXPECT_EQ(oracle_rect_2d(in, RectShape::nnc, Mode::constraint).lambda, 0);
    EXPECT_EQ(oracle_circ(in, Mode::constraint).lambda, 0);
}

TEST(Oracle, SquareCornersAroundABlue) {
    Instance in = Builder(2).R(0, 0).R(1, 0).R(0, 1).R(1, 1).B(Q(1, 2), Q(1, 2));
    for (RectShape sh : {RectShape::nnc, RectShape::nc, RectShape::uniform})
        EXPECT_EQ(oracle_rect_2d(in, sh, Mode::constraint).lambda, 0);
}

TEST(Oracle, CocircularRedsCircular) {
    Instance in = Builder(2).R(5, 0).R(-5, 0).R(3, 4).R(0, -5).B(0, 0).B(6, 6);
    EXPECT_EQ(oracle_circ(in, Mode::constraint).lambda, 0);
}

TEST(Oracle, ExpensiveBlueBetweenTwoReds) {
    Instance in = Builder(2).R(0, 0).R(4, 0).B(2, 0, 10);
    EXPECT_EQ(oracle_circ(in, Mode::penalized).lambda, 0);
    EXPECT_EQ(oracle_rect_2d(in, RectShape::nnc, Mode::penalized).lambda, 0);
}

TEST(Oracle, RefusesInstancesOverBudget) {
    Builder b(2);
    for (int i = 0; i < 7; ++i) b.R(i, i * i);
    EXPECT_THROW(oracle_rect_2d(b, RectShape::nnc, Mode::penalized), BudgetExceeded);
    EXPECT_THROW(oracle_1d(Builder(1).R1(0).B1(1), Shape1D::uniform, Mode::penalized, {1, 0, 1}), BudgetExceeded);
}

TEST(Oracle, PermutingPointsKeepsLambda) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        Instance in = rbac::testing::random_instance(rng, 2, 4, 4, 4);
        Instance p = in;
        std::shuffle(p.reds.begin(), p.reds.end(), rng);
        std::shuffle(p.blues.begin(), p.blues.end(), rng);
        for (Mode md : {Mode::constraint, Mode::penalized}) {
            EXPECT_TRUE(same_value(oracle_rect_2d(in, RectShape::nnc, md), oracle_rect_2d(p, RectShape::nnc, md)));
            EXPECT_TRUE(same_value(oracle_circ(in, md), oracle_circ(p, md)));
        }
    }
}

TEST(Oracle, ShapeClassesAreOrdered) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 30; ++t) {
        Instance in = rbac::testing::random_instance(rng, 2, 4, 4, 4);
        Q u = oracle_rect_2d(in, RectShape::uniform, Mode::penalized).lambda;
        Q c = oracle_rect_2d(in, RectShape::nc, Mode::penalized).lambda;
        Q f = oracle_rect_2d(in, RectShape::nnc, Mode::penalized).lambda;
        EXPECT_GE(u, c);
        EXPECT_GE(c, f);
    }
}

// With integer coordinates every coverage pattern of a 1D annulus is realized
// with endpoints on the half-integer grid.
TEST(Oracle, OneDimensionalMatchesHalfGridEnumeration) {
    std::mt19937_64 rng(16);
    const int g = 4;
    std::vector<Q> grid;
    for (int k = -2 * g - 2; k <= 2 * g + 2; ++k) grid.push_back(Q(k, 2));
    for (int t = 0; t < 40; ++t) {
        Instance in = rbac::testing::random_instance(rng, 1, 4, 4, g);
        std::optional<Q> best;
        for (std::size_t a = 0; a < grid.size(); ++a)
            for (std::size_t b = a; b < grid.size(); ++b)
                for (std::size_t c = b; c < grid.size(); ++c)
                    for (std::size_t d = c; d < grid.size(); ++d) {
                        IntervalPair ip;
                        ip.lo = grid[a], ip.li = grid[b], ip.ri = grid[c], ip.ro = grid[d];
                        Q v = penalty_of(in, ip, Mode::penalized).value;
                        if (!best || v < *best) best = v;
                    }
        EXPECT_EQ(oracle_1d(in, Shape1D::nonuniform, Mode::penalized).lambda, *best) << emit_instance(in);
    }
}
