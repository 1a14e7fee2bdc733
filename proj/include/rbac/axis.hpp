#pragma once

#include "rbac/fm.hpp"
#include "rbac/geom_core.hpp"

#include <algorithm>
#include <vector>

namespace rbac {

// How the four sides along one axis (outer lo/hi, hole lo/hi) are tied together.
enum class AxisKind : std::uint8_t {
    free,               // independent widths
    concentric,         // equal widths on both sides
    uniform,            // both widths equal to the shared width w
    symmetric,          // outer and hole both centred on the line L
    symmetric_uniform,  // symmetric and uniform
};

// Sorted distinct coordinates of one axis and the slot of every point.
struct AxisCoords {
    std::vector<Q> cs;
    std::vector<int> slot;

    explicit AxisCoords(const std::vector<Q>& values) {
        cs = values;
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        slot.reserve(values.size());
        for (const auto& v : values)
            slot.push_back(static_cast<int>(std::lower_bound(cs.begin(), cs.end(), v) - cs.begin()));
    }
    int k() const { return static_cast<int>(cs.size()); }
};

// Which coordinate slots the closed outer interval and the open hole contain.
// Outer covers slots [a, f]. A nonempty hole covers slots [b, e]. An empty hole
// sits in gap g, meaning cs[g] <= x1 < cs[g+1] and x2 <= cs[g+1] (with cs[-1]
// and cs[k] read as minus and plus infinity).
struct AxisPiece {
    int a = 0, f = -1;
    bool hole_empty = true;
    int b = 0, e = -1;
    int gap = -1;

    friend bool operator==(const AxisPiece& p, const AxisPiece& q) {
        return p.a == q.a && p.f == q.f && p.hole_empty == q.hole_empty && p.b == q.b && p.e == q.e &&
               p.gap == q.gap;
    }
};

// Variable slots of one axis inside a larger system.
struct AxisVars {
    int X1, X2, x1, x2, w;
};

inline std::vector<Q> unit(int n, int i, const Q& v = Q(1)) {
    std::vector<Q> a(n);
    a[i] = v;
    return a;
}

inline void add_shape_constraints(LinSystem<Q>& s, AxisKind kind, const AxisVars& v, const Q& L) {
    int n = s.nvars();
    auto two = [&](int i, const Q& ci, int j, const Q& cj) {
        std::vector<Q> a(n);
        a[i] += ci;
        a[j] += cj;
        return a;
    };
    s.le(two(v.X1, 1, v.x1, -1), Q(0));
    s.le(two(v.x1, 1, v.x2, -1), Q(0));
    s.le(two(v.x2, 1, v.X2, -1), Q(0));
    if (kind == AxisKind::concentric) {
        std::vector<Q> a(n);
        a[v.x1] = 1;
        a[v.X1] = -1;
        a[v.X2] = -1;
        a[v.x2] = 1;
        s.eq(a, Q(0));
    }
    if (kind == AxisKind::uniform || kind == AxisKind::symmetric_uniform) {
        std::vector<Q> a(n), b(n);
        a[v.x1] = 1;
        a[v.X1] = -1;
        a[v.w] = -1;
        s.eq(a, Q(0));
        b[v.X2] = 1;
        b[v.x2] = -1;
        b[v.w] = -1;
        s.eq(b, Q(0));
    }
    if (kind == AxisKind::symmetric || kind == AxisKind::symmetric_uniform) {
        s.eq(two(v.X1, 1, v.X2, 1), Q(2) * L);
        s.eq(two(v.x1, 1, v.x2, 1), Q(2) * L);
    }
}

inline void add_piece_constraints(LinSystem<Q>& s, const std::vector<Q>& cs, const AxisPiece& p,
                                  const AxisVars& v) {
    int n = s.nvars(), k = static_cast<int>(cs.size());
    if (p.a > 0) s.gt(unit(n, v.X1), cs[p.a - 1]);
    s.le(unit(n, v.X1), cs[p.a]);
    s.ge(unit(n, v.X2), cs[p.f]);
    if (p.f + 1 < k) s.lt(unit(n, v.X2), cs[p.f + 1]);
    if (!p.hole_empty) {
        if (p.b > 0) s.ge(unit(n, v.x1), cs[p.b - 1]);
        s.lt(unit(n, v.x1), cs[p.b]);
        s.gt(unit(n, v.x2), cs[p.e]);
        if (p.e + 1 < k) s.le(unit(n, v.x2), cs[p.e + 1]);
    } else {
        if (p.gap >= 0) s.ge(unit(n, v.x1), cs[p.gap]);
        if (p.gap + 1 < k) {
            s.lt(unit(n, v.x1), cs[p.gap + 1]);
            s.le(unit(n, v.x2), cs[p.gap + 1]);
        }
    }
}

// Piece realized by concrete side values (possibly carrying infinitesimals).
template <class V>
AxisPiece piece_of(const std::vector<Q>& cs, const V& X1, const V& X2, const V& x1, const V& x2) {
    AxisPiece p;
    int k = static_cast<int>(cs.size());
    p.a = 0;
    while (p.a < k && V(cs[p.a]) < X1) ++p.a;
    p.f = k - 1;
    while (p.f >= 0 && X2 < V(cs[p.f])) --p.f;
    int b = 0;
    while (b < k && !(x1 < V(cs[b]))) ++b;
    int e = k - 1;
    while (e >= 0 && !(V(cs[e]) < x2)) --e;
    if (b <= e) {
        p.hole_empty = false;
        p.b = b;
        p.e = e;
    } else {
        p.hole_empty = true;
        p.gap = b - 1;
    }
    return p;
}

// Bit masks of points in the outer interval and in the hole along one axis.
template <class M>
void piece_masks(const AxisCoords& ax, const AxisPiece& p, M& outer, M& hole) {
    outer = 0;
    hole = 0;
    for (std::size_t i = 0; i < ax.slot.size(); ++i) {
        int s = ax.slot[i];
        if (s >= p.a && s <= p.f) outer |= M(1) << i;
        if (!p.hole_empty && s >= p.b && s <= p.e) hole |= M(1) << i;
    }
}

}  // namespace rbac
