#pragma once

#include "rbac/axis.hpp"

#include <optional>

namespace rbac {

// Variable layout shared by all rectangle systems: x sides, y sides, then w.
inline constexpr AxisVars kXVars{0, 1, 2, 3, 8};
inline constexpr AxisVars kYVars{4, 5, 6, 7, 8};
inline constexpr int kRectVars = 9;
inline constexpr int k1DVars = 5;
inline constexpr AxisVars kAxisVars{0, 1, 2, 3, 4};

struct RectKinds {
    AxisKind x = AxisKind::free, y = AxisKind::free;
    Q line_y = 0;
};

inline RectKinds kinds_for(RectShape shape) {
    switch (shape) {
        case RectShape::nnc: return {AxisKind::free, AxisKind::free, Q(0)};
        case RectShape::nc: return {AxisKind::concentric, AxisKind::concentric, Q(0)};
        case RectShape::uniform: return {AxisKind::uniform, AxisKind::uniform, Q(0)};
    }
    return {};
}

inline RectKinds restricted_kinds(RectShape shape, const Q& line_y) {
    switch (shape) {
        case RectShape::nnc: return {AxisKind::free, AxisKind::symmetric, line_y};
        case RectShape::nc: return {AxisKind::concentric, AxisKind::symmetric, line_y};
        case RectShape::uniform: return {AxisKind::uniform, AxisKind::symmetric_uniform, line_y};
    }
    return {};
}

inline LinSystem<Q> rect_system(const std::vector<Q>& xs, const AxisPiece& px, const std::vector<Q>& ys,
                                const AxisPiece& py, const RectKinds& kinds) {
    LinSystem<Q> s(kRectVars);
    add_piece_constraints(s, xs, px, kXVars);
    add_shape_constraints(s, kinds.x, kXVars, kinds.line_y);
    add_piece_constraints(s, ys, py, kYVars);
    add_shape_constraints(s, kinds.y, kYVars, kinds.line_y);
    return s;
}

inline LinSystem<Q> interval_system(const std::vector<Q>& xs, const AxisPiece& px, AxisKind kind) {
    LinSystem<Q> s(k1DVars);
    add_piece_constraints(s, xs, px, kAxisVars);
    add_shape_constraints(s, kind, kAxisVars, Q(0));
    return s;
}

// Open flag of a side from the sign of its infinitesimal displacement. Outer
// sides are open when displaced inward, hole sides when displaced outward.
inline bool outer_lo_open(const QE& v) { return v.b > 0; }
inline bool outer_hi_open(const QE& v) { return v.b < 0; }
inline bool hole_lo_open(const QE& v) { return v.b < 0; }
inline bool hole_hi_open(const QE& v) { return v.b > 0; }

inline void record_rect_defining(const Instance& inst, RectAnnulus& a) {
    a.defining.clear();
    auto visit = [&](Color col, int idx, const Pt& p) {
        auto on_v = [&](const Q& x, const Q& lo, const Q& hi) { return p.x == x && lo <= p.y && p.y <= hi; };
        auto on_h = [&](const Q& y, const Q& lo, const Q& hi) { return p.y == y && lo <= p.x && p.x <= hi; };
        const Rect& o = a.outer;
        const Rect& h = a.inner;
        bool hit[8] = {on_v(o.left, o.bottom, o.top),  on_v(o.right, o.bottom, o.top),
                       on_h(o.bottom, o.left, o.right), on_h(o.top, o.left, o.right),
                       on_v(h.left, h.bottom, h.top),  on_v(h.right, h.bottom, h.top),
                       on_h(h.bottom, h.left, h.right), on_h(h.top, h.left, h.right)};
        for (int s = 0; s < 8; ++s) {
            if (!hit[s]) continue;
            if (a.side_open[s] && col == Color::red) continue;
            a.defining.push_back({{col, idx}, s});
        }
    };
    for (int i = 0; i < inst.n(); ++i) visit(Color::red, i, inst.reds[i].p);
    for (int j = 0; j < inst.m(); ++j) visit(Color::blue, j, inst.blues[j].p);
}

inline void record_interval_defining(const Instance& inst, IntervalPair& a) {
    a.defining.clear();
    const Q* ends[4] = {&a.lo, &a.li, &a.ri, &a.ro};
    auto visit = [&](Color col, int idx, const Q& x) {
        for (int s = 0; s < 4; ++s) {
            if (x != *ends[s]) continue;
            if (a.endpoint_open[s] && col == Color::red) continue;
            a.defining.push_back({{col, idx}, s});
        }
    };
    for (int i = 0; i < inst.n(); ++i) visit(Color::red, i, inst.reds[i].p.x);
    for (int j = 0; j < inst.m(); ++j) visit(Color::blue, j, inst.blues[j].p.x);
}

// Canonical representative of a rectangle piece pair: outer sides pulled in
// and hole sides pushed out as far as the piece allows, open flags standing
// for the remaining infinitesimal offsets.
inline std::optional<std::vector<QE>> snap_rect_values(const std::vector<Q>& xs, const AxisPiece& px,
                                                      const std::vector<Q>& ys, const AxisPiece& py,
                                                      const RectKinds& kinds) {
    LinSystem<QE> sys = lift(rect_system(xs, px, ys, py, kinds));
    return snap_point(sys, {0, 1, 4, 5, 2, 3, 6, 7, 8}, {+1, -1, +1, -1, -1, +1, -1, +1, 0});
}

inline RectAnnulus rect_from_values(const Instance& inst, const std::vector<QE>& x) {
    RectAnnulus a;
    a.outer = {x[0].a, x[1].a, x[4].a, x[5].a};
    a.inner = {x[2].a, x[3].a, x[6].a, x[7].a};
    a.side_open = {outer_lo_open(x[0]), outer_hi_open(x[1]), outer_lo_open(x[4]), outer_hi_open(x[5]),
                   hole_lo_open(x[2]),  hole_hi_open(x[3]),  hole_lo_open(x[6]),  hole_hi_open(x[7])};
    record_rect_defining(inst, a);
    return a;
}

inline std::optional<RectAnnulus> snap_rect(const Instance& inst, const std::vector<Q>& xs, const AxisPiece& px,
                                            const std::vector<Q>& ys, const AxisPiece& py,
                                            const RectKinds& kinds) {
    auto v = snap_rect_values(xs, px, ys, py, kinds);
    if (!v) return std::nullopt;
    return rect_from_values(inst, *v);
}

inline std::optional<IntervalPair> snap_interval(const Instance& inst, const std::vector<Q>& xs,
                                                 const AxisPiece& px, AxisKind kind) {
    LinSystem<QE> sys = lift(interval_system(xs, px, kind));
    auto v = snap_point(sys, {0, 1, 2, 3, 4}, {+1, -1, -1, +1, 0});
    if (!v) return std::nullopt;
    const auto& x = *v;
    IntervalPair a;
    a.lo = x[0].a;
    a.ro = x[1].a;
    a.li = x[2].a;
    a.ri = x[3].a;
    a.endpoint_open = {outer_lo_open(x[0]), hole_lo_open(x[2]), hole_hi_open(x[3]), outer_hi_open(x[1])};
    record_interval_defining(inst, a);
    return a;
}

inline std::vector<Q> xs_of(const Instance& inst) {
    std::vector<Q> v;
    for (const auto& r : inst.reds) v.push_back(r.p.x);
    for (const auto& b : inst.blues) v.push_back(b.p.x);
    return v;
}
inline std::vector<Q> ys_of(const Instance& inst) {
    std::vector<Q> v;
    for (const auto& r : inst.reds) v.push_back(r.p.y);
    for (const auto& b : inst.blues) v.push_back(b.p.y);
    return v;
}

namespace detail {

struct SideDisp {
    int var;
    bool open;
    bool lo_side;
    bool outer;
};

inline void add_disp_sign(LinSystem<Q>& d, const SideDisp& s) {
    int n = d.nvars();
    // Outer lo: open -> d > 0, closed -> d <= 0. Outer hi: open -> d < 0, closed -> d >= 0.
    // Hole lo: open -> d < 0, closed -> d >= 0. Hole hi: open -> d > 0, closed -> d <= 0.
    bool positive_when_open = (s.outer && s.lo_side) || (!s.outer && !s.lo_side);
    if (positive_when_open) {
        if (s.open)
            d.gt(unit(n, s.var), Q(0));
        else
            d.le(unit(n, s.var), Q(0));
    } else {
        if (s.open)
            d.lt(unit(n, s.var), Q(0));
        else
            d.ge(unit(n, s.var), Q(0));
    }
}

inline bool standard_shape_ok(AxisKind kind, const Q& X1, const Q& X2, const Q& x1, const Q& x2, const Q& L,
                              std::optional<Q>& w) {
    if (!(X1 <= x1 && x1 <= x2 && x2 <= X2)) return false;
    if (kind == AxisKind::concentric && x1 - X1 != X2 - x2) return false;
    if (kind == AxisKind::uniform || kind == AxisKind::symmetric_uniform) {
        if (x1 - X1 != X2 - x2) return false;
        if (w && *w != x1 - X1) return false;
        w = x1 - X1;
    }
    if (kind == AxisKind::symmetric || kind == AxisKind::symmetric_uniform) {
        if (X1 + X2 != Q(2) * L || x1 + x2 != Q(2) * L) return false;
    }
    return true;
}

inline void add_disp_nesting(LinSystem<Q>& d, const AxisVars& v, const Q& X1, const Q& X2, const Q& x1,
                             const Q& x2) {
    int n = d.nvars();
    auto order = [&](int i, int j) {
        std::vector<Q> a(n);
        a[i] = 1;
        a[j] = -1;
        d.le(a, Q(0));
    };
    if (X1 == x1) order(v.X1, v.x1);
    if (x1 == x2) order(v.x1, v.x2);
    if (x2 == X2) order(v.x2, v.X2);
}

}  // namespace detail

// True iff the flagged annulus is the limit of genuine annuli of the given
// shape class covering exactly the same points.
inline bool realizable(const RectAnnulus& a, const RectKinds& kinds) {
    std::optional<Q> w;
    if (!detail::standard_shape_ok(kinds.x, a.outer.left, a.outer.right, a.inner.left, a.inner.right, kinds.line_y,
                                   w))
        return false;
    if (!detail::standard_shape_ok(kinds.y, a.outer.bottom, a.outer.top, a.inner.bottom, a.inner.top, kinds.line_y,
                                   w))
        return false;
    LinSystem<Q> d(kRectVars);
    const auto& f = a.side_open;
    detail::add_disp_sign(d, {0, f[OL], true, true});
    detail::add_disp_sign(d, {1, f[OR], false, true});
    detail::add_disp_sign(d, {2, f[IL], true, false});
    detail::add_disp_sign(d, {3, f[IR], false, false});
    detail::add_disp_sign(d, {4, f[OB], true, true});
    detail::add_disp_sign(d, {5, f[OT], false, true});
    detail::add_disp_sign(d, {6, f[IB], true, false});
    detail::add_disp_sign(d, {7, f[IT], false, false});
    detail::add_disp_nesting(d, kXVars, a.outer.left, a.outer.right, a.inner.left, a.inner.right);
    detail::add_disp_nesting(d, kYVars, a.outer.bottom, a.outer.top, a.inner.bottom, a.inner.top);
    // The displacements must respect the shape equalities too.
    auto eqs = [&](AxisKind kind, const AxisVars& v) {
        int n = kRectVars;
        if (kind == AxisKind::concentric || kind == AxisKind::uniform || kind == AxisKind::symmetric_uniform) {
            std::vector<Q> c(n);
            c[v.x1] = 1;
            c[v.X1] = -1;
            c[v.X2] = -1;
            c[v.x2] = 1;
            d.eq(c, Q(0));
        }
        if (kind == AxisKind::uniform || kind == AxisKind::symmetric_uniform) {
            std::vector<Q> c(n);
            c[v.x1] = 1;
            c[v.X1] = -1;
            c[v.w] = -1;
            d.eq(c, Q(0));
        }
        if (kind == AxisKind::symmetric || kind == AxisKind::symmetric_uniform) {
            std::vector<Q> c(n), e(n);
            c[v.X1] = 1;
            c[v.X2] = 1;
            d.eq(c, Q(0));
            e[v.x1] = 1;
            e[v.x2] = 1;
            d.eq(e, Q(0));
        }
    };
    eqs(kinds.x, kXVars);
    eqs(kinds.y, kYVars);
    return d.feasible();
}

inline bool realizable(const IntervalPair& a, AxisKind kind) {
    std::optional<Q> w;
    if (!detail::standard_shape_ok(kind, a.lo, a.ro, a.li, a.ri, Q(0), w)) return false;
    LinSystem<Q> d(k1DVars);
    const auto& f = a.endpoint_open;
    detail::add_disp_sign(d, {0, f[0], true, true});
    detail::add_disp_sign(d, {1, f[3], false, true});
    detail::add_disp_sign(d, {2, f[1], true, false});
    detail::add_disp_sign(d, {3, f[2], false, false});
    detail::add_disp_nesting(d, kAxisVars, a.lo, a.ro, a.li, a.ri);
    if (kind != AxisKind::free) {
        std::vector<Q> c(k1DVars);
        c[2] = 1;
        c[0] = -1;
        c[1] = -1;
        c[3] = 1;
        d.eq(c, Q(0));
    }
    return d.feasible();
}

}  // namespace rbac
