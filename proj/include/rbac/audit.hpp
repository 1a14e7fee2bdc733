#pragma once

#include <string>

#include "rbac/annulus_circ.hpp"
#include "rbac/pin.hpp"

namespace rbac {

struct AuditResult {
    bool ok = true;
    std::string why;
};

namespace audit_detail {

inline AuditResult fail(std::string why) { return {false, std::move(why)}; }

inline bool is_red_x(const Instance& inst, const Q& x) {
    for (const auto& r : inst.reds)
        if (r.p.x == x) return true;
    return false;
}

inline AuditResult interval(const Instance& inst, const IntervalPair& a, bool uniform) {
    bool e[4] = {is_red_x(inst, a.lo), is_red_x(inst, a.li), is_red_x(inst, a.ri), is_red_x(inst, a.ro)};
    if (uniform) {
        if ((e[0] && e[1]) || (e[2] && e[3])) return {};
        return fail("no interval has two red endpoints");
    }
    for (int s = 0; s < 4; ++s)
        if (!e[s]) return fail("endpoint " + std::to_string(s) + " is not a red coordinate");
    return {};
}

inline AuditResult rect(const Instance& inst, const RectAnnulus& a, const RectKinds& kinds, bool red_sides) {
    int need = param_model(kinds).k;
    int got = pinned_rank(inst, a, kinds);
    if (got != need)
        return fail("boundary points fix " + std::to_string(got) + " of " + std::to_string(need) + " parameters");
    if (!red_sides) return {};
    std::array<Q, 8> s{a.outer.left, a.outer.right, a.inner.left, a.inner.right,
                       a.outer.bottom, a.outer.top, a.inner.bottom, a.inner.top};
    constexpr int partner[8] = {2, 3, 0, 1, 6, 7, 4, 5};
    for (int side = 0; side < 8; ++side) {
        if (s[side] == s[partner[side]]) continue;
        auto [lo, hi] = pin_detail::extent(side);
        bool red = false;
        for (const auto& r : inst.reds) {
            const Q& c = pin_detail::coord(r.p, side);
            const Q& x = pin_detail::cross(r.p, side);
            if (c == s[side] && s[lo] <= x && x <= s[hi]) red = true;
        }
        if (!red) return fail("side " + std::to_string(side) + " carries no red point");
    }
    return {};
}

inline bool circ_degenerate(const Instance& inst) {
    auto pts = circ_detail::instance_points(inst);
    std::set<Pt> distinct(pts.begin(), pts.end());
    if (distinct.size() < 3) return true;
    return circ_detail::collinear(std::vector<Pt>(distinct.begin(), distinct.end()));
}

inline AuditResult circ(const Instance& inst, const Solution& sol, const CircAnnulus& a) {
    if (sol.circ_candidate.empty()) return fail("circular output without a candidate");
    const auto& cand = sol.circ_candidate.front();
    std::vector<int> covered;
    std::set<int> unc(sol.uncovered_red_ids.begin(), sol.uncovered_red_ids.end());
    for (int i = 0; i < inst.n(); ++i)
        if (!unc.count(i)) covered.push_back(i);
    for (int j : sol.covered_blue_ids) covered.push_back(inst.n() + j);
    if (!circ_detail::witness_matches(cand, inst, covered)) return fail("witness does not reproduce the cover");
    CircAnnulus w = witness_annulus(cand, inst);
    if (w.center != a.center || w.r_in_sq != a.r_in_sq || w.r_out_sq != a.r_out_sq)
        return fail("output differs from the witness annulus");
    if (property1_structure(cand)) return {};
    if (circ_degenerate(inst)) return {};
    return fail("candidate lacks four defining points");
}

}  // namespace audit_detail

// Structural check of a solver output: the annulus must be fixed by points on
// its boundary in the way the variant's optimality argument requires.
inline AuditResult audit_solution(const Instance& inst, const Solution& sol, const Q& line_y = Q(0)) {
    using namespace audit_detail;
    if (!sol.feasible || std::holds_alternative<EmptyAnnulus>(sol.annulus)) return {};
    switch (sol.variant) {
        case Variant::d1_nonuniform:
        case Variant::d1_uniform: {
            auto* a = std::get_if<IntervalPair>(&sol.annulus);
            if (!a) return fail("1D output is not an interval pair");
            return interval(inst, *a, sol.variant == Variant::d1_uniform);
        }
        case Variant::rect_nnc:
        case Variant::rect_nc:
        case Variant::rect_uniform:
        case Variant::restricted_nnc:
        case Variant::restricted_nc:
        case Variant::restricted_uniform: {
            auto* a = std::get_if<RectAnnulus>(&sol.annulus);
            if (!a) return fail("rectangular output is not a rectangle pair");
            RectShape shape = sol.variant == Variant::rect_nnc || sol.variant == Variant::restricted_nnc ? RectShape::nnc
                              : sol.variant == Variant::rect_nc || sol.variant == Variant::restricted_nc
                                  ? RectShape::nc
                                  : RectShape::uniform;
            bool restricted = sol.variant == Variant::restricted_nnc || sol.variant == Variant::restricted_nc ||
                              sol.variant == Variant::restricted_uniform;
            RectKinds kinds = restricted ? restricted_kinds(shape, line_y) : kinds_for(shape);
            bool red_sides = sol.variant == Variant::rect_nnc && sol.mode == Mode::constraint;
            return rect(inst, *a, kinds, red_sides);
        }
        case Variant::circ: {
            auto* a = std::get_if<CircAnnulus>(&sol.annulus);
            if (!a) return fail("circular output is not a circular annulus");
            return circ(inst, sol, *a);
        }
    }
    return fail("unknown variant");
}

}  // namespace rbac
