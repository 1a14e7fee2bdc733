#include <gtest/gtest.h>

#include "support.hpp"

using namespace rbac;

namespace {

int error_line(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST(Parse, ReadsPointsCommentsAndDecimals) {
    Instance in = parse_instance("# demo\ndim 2\nR 0 0 1\nR 1.5 -2 3/2  # trailing\n\nB 1/3 0.25 7\n");
    EXPECT_EQ(in.dim, 2);
    ASSERT_EQ(in.n(), 2);
    ASSERT_EQ(in.m(), 1);
    EXPECT_EQ(in.reds[1].p, (Pt{Q(3, 2), Q(-2)}));
    EXPECT_EQ(in.reds[1].penalty, Q(3, 2));
    EXPECT_EQ(in.blues[0].p, (Pt{Q(1, 3), Q(1, 4)}));
}

TEST(Parse, OneDimensionalLines) {
    Instance in = parse_instance("dim 1\nR 4 2\nB -1 1\n");
    EXPECT_EQ(in.reds[0].p, (Pt{Q(4), Q(0)}));
    EXPECT_EQ(in.blues[0].penalty, 1);
}

TEST(Parse, ErrorsCarryTheLineNumber) {
    EXPECT_EQ(error_line("dim 2\nR 0 0 1\nR 0 x 1\n"), 3);
    EXPECT_EQ(error_line("dim 2\nR 0 0\n"), 2);
    EXPECT_EQ(error_line("dim 2\nB 0 0 0\n"), 2);
    EXPECT_EQ(error_line("dim 2\nB 0 0 1\nB 0 0 2\n"), 3);
    EXPECT_EQ(error_line("R 0 0 1\n"), 1);
    EXPECT_EQ(error_line("dim 3\n"), 1);
    EXPECT_EQ(error_line("dim 1\ndim 1\n"), 2);
    EXPECT_EQ(error_line("dim 2\nQ 1 1 1\n"), 2);
    EXPECT_NE(error_line(""), -1);
    EXPECT_EQ(error_line("dim 2\nR 0 0 1\nB 0 0 1\n"), -1);
}

TEST(Parse, EmitRoundTrips) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        Instance in = rbac::testing::random_instance(rng, 1 + static_cast<int>(rng() % 2), 5, 5, 9, 7);
        Instance back = parse_instance(emit_instance(in));
        EXPECT_EQ(emit_instance(back), emit_instance(in));
    }
}

TEST(Generate, DeterministicForASeed) {
    for (auto pr : {Profile::uniform_grid, Profile::clustered, Profile::cocircular, Profile::collinear}) {
        EXPECT_EQ(emit_instance(generate(42, pr, 6, 6, 2)), emit_instance(generate(42, pr, 6, 6, 2)));
        Instance in = generate(42, pr, 6, 6, 2);
        EXPECT_NO_THROW(in.validate());
    }
    EXPECT_NE(emit_instance(generate(1, Profile::uniform_grid, 6, 6, 2)),
              emit_instance(generate(2, Profile::uniform_grid, 6, 6, 2)));
}

TEST(Generate, CocircularRedsShareACircle) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance in = generate(seed, Profile::cocircular, 5, 2, 2);
        ASSERT_GE(in.n(), 3);
        auto c = vor_detail::circumcenter(in.reds[0].p, in.reds[1].p, in.reds[2].p);
        ASSERT_TRUE(c);
        Q r = dist2(*c, in.reds[0].p);
        for (const auto& w : in.reds) EXPECT_EQ(dist2(*c, w.p), r);
    }
}

TEST(Generate, CollinearRedsShareALine) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance in = generate(seed, Profile::collinear, 5, 2, 2);
        ASSERT_GE(in.n(), 2);
        const Pt &a = in.reds[0].p, &b = in.reds[1].p;
        for (const auto& w : in.reds) EXPECT_EQ((b.x - a.x) * (w.p.y - a.y), (b.y - a.y) * (w.p.x - a.x));
    }
}

TEST(Json, SolutionHasExactLambda) {
    Instance in = parse_instance("dim 1\nR 0 1\nR 1 1\nR 5 1\nR 6 1\nB 2 1\nB 3 1\nB 4 1\n");
    auto s = solve_1d(in, Shape1D::nonuniform, Mode::constraint);
    json j = solution_json(s);
    EXPECT_EQ(j["lambda"], "0");
    EXPECT_EQ(j["variant"], "1d-nu");
    EXPECT_EQ(j["annulus"]["type"], "intervals");
    EXPECT_TRUE(j["covered_blue_ids"].empty());
}

TEST(Json, ReportCarriesOracleMatch) {
    Instance in = parse_instance("dim 2\nR 0 0 1\nR 4 0 1\nB 2 0 10\n");
    VariantSpec spec{Variant::circ, Mode::penalized, 0};
    auto [rep, sol] = run(in, spec, true);
    EXPECT_TRUE(rep.match);
    json j = report_json(rep);
    EXPECT_EQ(j["oracle_lambda"], "0");
    EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(Svg, DrawsBothBoundaries) {
    Instance in = parse_instance("dim 2\nR 0 0 1\nR 10 10 1\nB 5 5 4\n");
    auto s = solve_rect_2d(in, RectShape::nnc, Mode::penalized);
    std::string svg = render_svg(in, s);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("boundary outer"), std::string::npos);
    EXPECT_NE(svg.find("boundary inner"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Variant, NamesRoundTrip) {
    for (auto v : {Variant::d1_nonuniform, Variant::d1_uniform, Variant::rect_nnc, Variant::rect_nc,
                   Variant::rect_uniform, Variant::restricted_nnc, Variant::restricted_nc,
                   Variant::restricted_uniform, Variant::circ})
        EXPECT_EQ(parse_variant(variant_name(v)), v);
    EXPECT_FALSE(parse_variant("rect"));
    EXPECT_FALSE(parse_mode("strict"));
}
