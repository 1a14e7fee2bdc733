#include <gtest/gtest.h>

#include "support.hpp"

using namespace rbac;

namespace {

std::vector<Pt> random_sites(std::mt19937_64& rng, int k, int g) {
    std::set<Pt> s;
    while (static_cast<int>(s.size()) < k)
        s.insert({Q(static_cast<long>(rng() % (2 * g + 1)) - g), Q(static_cast<long>(rng() % (2 * g + 1)) - g)});
    std::vector<Pt> v(s.begin(), s.end());
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

}  // namespace

TEST(Voronoi, ThreeSitesMeetAtTheCircumcenter) {
    std::vector<Pt> s{{0, 0}, {4, 0}, {0, 4}};
    auto d = build_nearest(s);
    ASSERT_EQ(d.vertices.size(), 1u);
    EXPECT_EQ(d.vertices[0].p, (Pt{2, 2}));
    EXPECT_EQ(d.vertices[0].r2, 8);
    EXPECT_EQ(d.edges.size(), 3u);
    auto f = build_farthest(s);
    ASSERT_EQ(f.vertices.size(), 1u);
    EXPECT_EQ(f.vertices[0].p, (Pt{2, 2}));
}

TEST(Voronoi, TwoSitesGiveOneLine) {
    auto d = build_nearest({{0, 0}, {2, 0}});
    EXPECT_TRUE(d.vertices.empty());
    ASSERT_EQ(d.edges.size(), 1u);
    EXPECT_TRUE(d.edges[0].is_line());
    EXPECT_EQ(geometry(d.edges[0]).shape, EdgeShape::line);
}

TEST(Voronoi, SquareHasOneVertexOfDegreeFour) {
    auto d = build_nearest({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    ASSERT_EQ(d.vertices.size(), 1u);
    EXPECT_EQ(d.vertices[0].p, (Pt{Q(1, 2), Q(1, 2)}));
    EXPECT_EQ(d.vertices[0].sites.size(), 4u);
}

TEST(Voronoi, DuplicateSitesAreRejected) {
    EXPECT_THROW(build_nearest({{0, 0}, {0, 0}}), GeometryError);
    auto d = build_nearest({{0, 0}, {1, 0}});
    EXPECT_THROW(insert_sites(d, {{1, 0}}), GeometryError);
}

TEST(Voronoi, InsertEqualsRebuild) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 150; ++t) {
        int k = 2 + static_cast<int>(rng() % 9);
        auto s = random_sites(rng, k, 6);
        int add = std::min(k - 1, 1 + static_cast<int>(rng() % 2));
        std::vector<Pt> base(s.begin(), s.end() - add), extra(s.end() - add, s.end());
        for (bool far : {false, true}) {
            auto d = far ? build_farthest(base) : build_nearest(base);
            auto got = insert_sites(d, extra);
            auto want = far ? build_farthest(s) : build_nearest(s);
            EXPECT_TRUE(same_diagram(got, want));
        }
    }
}

TEST(Voronoi, InteriorPointLeavesFarthestCellsAlone) {
    std::vector<Pt> s{{0, 0}, {6, 0}, {6, 6}, {0, 6}};
    auto d = build_farthest(s);
    auto more = insert_sites(d, {{3, 2}});
    EXPECT_EQ(more.cells(), d.cells());
    EXPECT_TRUE(same_diagram(more, build_farthest({{0, 0}, {6, 0}, {6, 6}, {0, 6}, {3, 2}})));
}

TEST(Voronoi, LocateReturnsAllTies) {
    auto d = build_nearest({{0, 0}, {4, 0}, {0, 4}});
    EXPECT_EQ(locate(d, {2, 2}), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(locate(d, {4, 0}), (std::vector<int>{1}));
    auto f = build_farthest({{0, 0}, {4, 0}, {0, 4}});
    EXPECT_EQ(locate(f, {4, 0}), (std::vector<int>{2}));
}

TEST(Voronoi, LocateMatchesLinearScan) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto s = random_sites(rng, 1 + static_cast<int>(rng() % 8), 5);
        auto d = build_nearest(s);
        Pt q{rbac::testing::frac(static_cast<long>(rng() % 21) - 10, 2), rbac::testing::frac(static_cast<long>(rng() % 21) - 10, 2)};
        auto got = locate(d, q);
        Q best = dist2(q, s[got.front()]);
        for (int i = 0; i < static_cast<int>(s.size()); ++i) {
            bool in = std::find(got.begin(), got.end(), i) != got.end();
            EXPECT_EQ(in, dist2(q, s[i]) == best);
            EXPECT_GE(dist2(q, s[i]), best);
        }
    }
}

TEST(Voronoi, CrossIntersectionsOfIdenticalLinesOverlap) {
    auto a = build_nearest({{0, 0}, {2, 0}});
    EXPECT_TRUE(cross_intersections(a, a).overlap);
}

TEST(Voronoi, CrossIntersectionsOfOrthogonalLines) {
    auto a = build_nearest({{0, 0}, {2, 0}});
    auto b = build_nearest({{0, 0}, {0, 2}});
    auto r = cross_intersections(a, b);
    EXPECT_FALSE(r.overlap);
    ASSERT_EQ(r.points.size(), 1u);
    EXPECT_EQ(r.points[0], (Pt{1, 1}));
}

TEST(Voronoi, CrossPointsLieOnBothDiagrams) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        auto s = random_sites(rng, 2 + static_cast<int>(rng() % 6), 5);
        auto vd = build_nearest(s), fvd = build_farthest(s);
        for (const Pt& p : cross_intersections(vd, fvd).points) {
            EXPECT_GE(locate(vd, p).size(), 2u);
            EXPECT_GE(locate(fvd, p).size(), 2u);
        }
    }
}

TEST(Voronoi, VertexCirclesAreEmptyOrCovering) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        auto s = random_sites(rng, 3 + static_cast<int>(rng() % 8), 6);
        auto vd = build_nearest(s), fvd = build_farthest(s);
        for (const auto& v : vd.vertices) {
            EXPECT_GE(v.sites.size(), 3u);
            for (int i = 0; i < static_cast<int>(s.size()); ++i) {
                Q d = dist2(v.p, s[i]);
                EXPECT_GE(d, v.r2);
                EXPECT_EQ(d == v.r2, vd.incident(v, i));
            }
        }
        for (const auto& v : fvd.vertices)
            for (int i = 0; i < static_cast<int>(s.size()); ++i) {
                Q d = dist2(v.p, s[i]);
                EXPECT_LE(d, v.r2);
                EXPECT_EQ(d == v.r2, fvd.incident(v, i));
            }
    }
}

TEST(Voronoi, EdgePointsAreEquidistantFromTheirSites) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 60; ++t) {
        auto s = random_sites(rng, 2 + static_cast<int>(rng() % 7), 6);
        for (bool far : {false, true}) {
            auto d = far ? build_farthest(s) : build_nearest(s);
            for (const auto& e : d.edges) {
                Q tp = e.lo && e.hi ? (*e.lo + *e.hi) / 2 : e.lo ? *e.lo + 1 : e.hi ? *e.hi - 1 : Q(0);
                Pt p = e.at(tp);
                EXPECT_EQ(dist2(p, s[e.i]), dist2(p, s[e.j]));
                auto owners = locate(d, p);
                EXPECT_NE(std::find(owners.begin(), owners.end(), e.i), owners.end());
                EXPECT_NE(std::find(owners.begin(), owners.end(), e.j), owners.end());
            }
        }
    }
}
