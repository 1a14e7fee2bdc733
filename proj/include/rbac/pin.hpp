#pragma once

#include <algorithm>
#include <stdexcept>

#include "rbac/canon.hpp"

namespace rbac {

// Side values of a rectangle pair as an affine function of the free
// parameters of its shape class. Side order follows the snap variables:
// X1 X2 x1 x2 Y1 Y2 y1 y2.
struct ParamModel {
    int k = 0;
    std::array<std::vector<Q>, 8> M;
    std::array<Q, 8> c;
};

inline ParamModel param_model(const RectKinds& kinds) {
    ParamModel pm;
    int shared_w = -1;
    auto take = [&] { return pm.k++; };
    struct Lin {
        std::vector<std::pair<int, int>> terms;
        Q c;
    };
    std::array<Lin, 8> side;
    auto axis = [&](AxisKind kind, int base) {
        Lin& X1 = side[base];
        Lin& X2 = side[base + 1];
        Lin& x1 = side[base + 2];
        Lin& x2 = side[base + 3];
        const Q& L = kinds.line_y;
        switch (kind) {
            case AxisKind::free:
                for (int s = 0; s < 4; ++s) side[base + s].terms = {{take(), 1}};
                break;
            case AxisKind::concentric: {
                int c = take(), R = take(), r = take();
                X1.terms = {{c, 1}, {R, -1}};
                X2.terms = {{c, 1}, {R, 1}};
                x1.terms = {{c, 1}, {r, -1}};
                x2.terms = {{c, 1}, {r, 1}};
                break;
            }
            case AxisKind::uniform: {
                int c = take(), R = take();
                if (shared_w < 0) shared_w = take();
                X1.terms = {{c, 1}, {R, -1}};
                X2.terms = {{c, 1}, {R, 1}};
                x1.terms = {{c, 1}, {R, -1}, {shared_w, 1}};
                x2.terms = {{c, 1}, {R, 1}, {shared_w, -1}};
                break;
            }
            case AxisKind::symmetric: {
                int H = take(), h = take();
                X1 = {{{H, -1}}, L};
                X2 = {{{H, 1}}, L};
                x1 = {{{h, -1}}, L};
                x2 = {{{h, 1}}, L};
                break;
            }
            case AxisKind::symmetric_uniform: {
                int H = take();
                if (shared_w < 0) shared_w = take();
                X1 = {{{H, -1}}, L};
                X2 = {{{H, 1}}, L};
                x1 = {{{H, -1}, {shared_w, 1}}, L};
                x2 = {{{H, 1}, {shared_w, -1}}, L};
                break;
            }
        }
    };
    axis(kinds.x, 0);
    axis(kinds.y, 4);
    for (int s = 0; s < 8; ++s) {
        pm.M[s].assign(pm.k, Q(0));
        for (auto [j, v] : side[s].terms) pm.M[s][j] += v;
        pm.c[s] = side[s].c;
    }
    return pm;
}

namespace pin_detail {

constexpr std::array<std::pair<int, int>, 6> kNesting{{{0, 2}, {2, 3}, {3, 1}, {4, 6}, {6, 7}, {7, 5}}};

// Extent of side s along the other axis.
inline std::pair<int, int> extent(int s) {
    int other = s < 4 ? 4 : 0;
    return (s % 4) < 2 ? std::pair{other, other + 1} : std::pair{other + 2, other + 3};
}

inline const Q& coord(const Pt& p, int s) { return s < 4 ? p.x : p.y; }
inline const Q& cross(const Pt& p, int s) { return s < 4 ? p.y : p.x; }

inline std::vector<Pt> points_of(const Instance& inst) {
    std::vector<Pt> v;
    for (const auto& r : inst.reds) v.push_back(r.p);
    for (const auto& b : inst.blues) v.push_back(b.p);
    return v;
}

template <class T>
bool covered_by(const std::array<T, 8>& s, const Pt& p) {
    T x(p.x), y(p.y);
    bool outer = s[0] <= x && x <= s[1] && s[4] <= y && y <= s[5];
    bool hole = s[2] < x && x < s[3] && s[6] < y && y < s[7];
    return outer && !hole;
}

inline Q dot(const std::vector<Q>& a, const std::vector<Q>& b) {
    Q r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline std::vector<std::vector<Q>> tight_rows(const ParamModel& pm, const std::array<Q, 8>& s,
                                              const std::vector<Pt>& pts) {
    std::vector<std::vector<Q>> rows;
    for (int side = 0; side < 8; ++side) {
        auto [lo, hi] = extent(side);
        for (const Pt& p : pts) {
            if (coord(p, side) == s[side] && s[lo] <= cross(p, side) && cross(p, side) <= s[hi]) {
                rows.push_back(pm.M[side]);
                break;
            }
        }
    }
    for (auto [i, j] : kNesting) {
        if (s[i] != s[j]) continue;
        std::vector<Q> r(pm.k);
        for (int t = 0; t < pm.k; ++t) r[t] = pm.M[i][t] - pm.M[j][t];
        rows.push_back(std::move(r));
    }
    return rows;
}

// Row reduction; returns the rank and a nullspace basis.
inline std::pair<int, std::vector<std::vector<Q>>> reduce(std::vector<std::vector<Q>> rows, int k) {
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < k && r < (int)rows.size(); ++col) {
        int piv = -1;
        for (int i = r; i < (int)rows.size(); ++i)
            if (sgn(rows[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        Q inv = Q(1) / rows[r][col];
        for (auto& v : rows[r]) v *= inv;
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            Q f = rows[i][col];
            for (int t = 0; t < k; ++t) rows[i][t] -= f * rows[r][t];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<std::vector<Q>> basis;
    std::vector<bool> is_pivot(k, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int f = 0; f < k; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Q> v(k);
        v[f] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return {r, basis};
}

}  // namespace pin_detail

// Number of independent constraints fixing the rectangle pair: points lying
// on side segments plus coinciding nested sides, in the parameters of the
// shape class. The pair is pinned when this equals the parameter count.
inline int pinned_rank(const Instance& inst, const RectAnnulus& a, const RectKinds& kinds) {
    ParamModel pm = param_model(kinds);
    std::array<Q, 8> s{a.outer.left, a.outer.right, a.inner.left, a.inner.right,
                       a.outer.bottom, a.outer.top, a.inner.bottom, a.inner.top};
    return pin_detail::reduce(pin_detail::tight_rows(pm, s, pin_detail::points_of(inst)), pm.k).first;
}

// Slides a snapped rectangle pair within its shape class, keeping the covered
// set fixed, until every free parameter is held by a boundary point or a
// nesting equality. Returns nullopt if some direction never meets one.
inline std::optional<std::vector<QE>> pin_values(const Instance& inst, std::vector<QE> x, const RectKinds& kinds) {
    using namespace pin_detail;
    ParamModel pm = param_model(kinds);
    const int k = pm.k;
    auto pts = points_of(inst);

    std::vector<QE> th(k, QE(Q(0)));
    {
        // Solve M th = x - c for both parts of QE at once.
        std::vector<std::vector<Q>> rows;
        for (int s = 0; s < 8; ++s) {
            auto r = pm.M[s];
            r.push_back(x[s].a - pm.c[s]);
            r.push_back(x[s].b);
            rows.push_back(std::move(r));
        }
        int r = 0;
        std::vector<int> pc;
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int i = r; i < 8; ++i)
                if (sgn(rows[i][col]) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[r], rows[piv]);
            Q inv = Q(1) / rows[r][col];
            for (auto& v : rows[r]) v *= inv;
            for (int i = 0; i < 8; ++i) {
                if (i == r || sgn(rows[i][col]) == 0) continue;
                Q f = rows[i][col];
                for (int t = 0; t < k + 2; ++t) rows[i][t] -= f * rows[r][t];
            }
            pc.push_back(col);
            ++r;
        }
        for (int i = 0; i < r; ++i) th[pc[i]] = QE(rows[i][k], rows[i][k + 1]);
    }
    auto sides = [&](const std::vector<QE>& t) {
        std::array<QE, 8> s;
        for (int i = 0; i < 8; ++i) {
            QE v(pm.c[i]);
            for (int j = 0; j < k; ++j)
                if (sgn(pm.M[i][j]) != 0) v = v + pm.M[i][j] * t[j];
            s[i] = v;
        }
        return s;
    };
    auto real = [](const std::array<QE, 8>& s) {
        std::array<Q, 8> r;
        for (int i = 0; i < 8; ++i) r[i] = s[i].a;
        return r;
    };
    {
        auto s0 = sides(th);
        for (int i = 0; i < 8; ++i)
            if (s0[i] != x[i]) throw std::logic_error("pin: side values outside the shape class");
    }
    std::vector<bool> target(pts.size());
    {
        auto s0 = sides(th);
        for (std::size_t i = 0; i < pts.size(); ++i) target[i] = covered_by(s0, pts[i]);
    }
    auto same_cover = [&](const std::array<QE, 8>& s) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (covered_by(s, pts[i]) != target[i]) return false;
        return true;
    };

    for (int step = 0; step <= k; ++step) {
        auto cur = sides(th);
        auto [rank, basis] = reduce(tight_rows(pm, real(cur), pts), k);
        if (rank == k) break;
        bool moved = false;
        for (int sign : {+1, -1}) {
            std::vector<Q> d = basis.front();
            if (sign < 0)
                for (auto& v : d) v = -v;
            std::array<Q, 8> g;
            for (int i = 0; i < 8; ++i) g[i] = dot(pm.M[i], d);
            struct Event {
                Q t;
                int side;  // -1 for nesting
                int pt;
            };
            std::vector<Event> ev;
            for (int s = 0; s < 8; ++s) {
                if (sgn(g[s]) == 0) continue;
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    Q t = (coord(pts[i], s) - cur[s].a) / g[s];
                    if (sgn(t) > 0) ev.push_back({t, s, (int)i});
                }
            }
            for (auto [i, j] : kNesting) {
                Q dg = g[j] - g[i];
                if (sgn(dg) >= 0) continue;
                Q t = (cur[j].a - cur[i].a) / -dg;
                if (sgn(t) > 0) ev.push_back({t, -1, -1});
            }
            std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
            std::optional<Q> stop;
            for (const auto& e : ev) {
                if (stop && e.t != *stop) break;
                if (e.side < 0) {
                    stop = e.t;
                    continue;
                }
                auto [lo, hi] = extent(e.side);
                Q elo = cur[lo].a + e.t * g[lo], ehi = cur[hi].a + e.t * g[hi];
                const Q& cc = cross(pts[e.pt], e.side);
                if (elo <= cc && cc <= ehi) stop = e.t;
            }
            if (!stop) continue;
            std::vector<QE> nt = th;
            for (int j = 0; j < k; ++j) nt[j] = nt[j] + QE(*stop * d[j]);
            if (!same_cover(sides(nt))) {
                // Approach the stop from below: the motion outweighs existing offsets.
                Q K = 1;
                for (int s = 0; s < 8; ++s)
                    if (sgn(g[s]) != 0) K = std::max<Q>(K, abs(cur[s].b / g[s]));
                for (auto [i, j] : kNesting) {
                    Q dg = g[j] - g[i];
                    if (sgn(dg) != 0) K = std::max<Q>(K, abs((cur[j].b - cur[i].b) / dg));
                }
                K += 1;
                for (int j = 0; j < k; ++j) nt[j] = nt[j] - QE(Q(0), K * d[j]);
                if (!same_cover(sides(nt))) return std::nullopt;
            }
            th = std::move(nt);
            moved = true;
            break;
        }
        if (!moved) return std::nullopt;
    }
    auto out = sides(th);
    if (reduce(tight_rows(pm, real(out), pts), k).first != k) return std::nullopt;
    std::vector<QE> res(x.size(), QE(Q(0)));
    for (int i = 0; i < 8; ++i) res[i] = out[i];
    if (res.size() > 8) res[8] = out[2] - out[0];
    return res;
}

// Snapped and pinned representative of a piece pair.
inline std::optional<RectAnnulus> canonical_rect(const Instance& inst, const std::vector<Q>& xs,
                                                 const AxisPiece& px, const std::vector<Q>& ys,
                                                 const AxisPiece& py, const RectKinds& kinds) {
    auto v = snap_rect_values(xs, px, ys, py, kinds);
    if (!v) return std::nullopt;
    auto p = pin_values(inst, *v, kinds);
    if (!p) throw std::logic_error("rectangle pair could not be pinned");
    return rect_from_values(inst, *p);
}

}  // namespace rbac
