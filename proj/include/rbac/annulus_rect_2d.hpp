#pragma once

#include "rbac/patterns.hpp"

#include <climits>

namespace rbac {

struct WeightedPoint {
    Pt p;
    Q weight;
};

struct WeightedRect {
    bool empty = true;
    Rect rect;
    Q weight = 0;
};

// Maximum total weight of the points in a closed axis rectangle inside clip.
// Row pairs times a prefix-minimum scan over columns; ties keep the
// lexicographically smallest (left, right, bottom, top).
inline WeightedRect max_weight_rectangle(const std::vector<WeightedPoint>& pts, const Rect& clip) {
    std::vector<Q> xs, ys;
    for (const auto& w : pts) {
        if (w.p.x < clip.left || w.p.x > clip.right || w.p.y < clip.bottom || w.p.y > clip.top)
            throw GeometryError("max_weight_rectangle: point outside clip");
        xs.push_back(w.p.x);
        ys.push_back(w.p.y);
    }
    AxisCoords ax(xs), ay(ys);
    int kx = ax.k(), ky = ay.k();
    // cell[y][x] weight sums
    std::vector<std::vector<Q>> cell(ky, std::vector<Q>(kx, Q(0)));
    for (std::size_t i = 0; i < pts.size(); ++i) cell[ay.slot[i]][ax.slot[i]] += pts[i].weight;

    WeightedRect best;
    std::vector<Q> col(kx);
    std::vector<Q> prefix(kx + 1);
    for (int b = 0; b < ky; ++b) {
        std::fill(col.begin(), col.end(), Q(0));
        for (int t = b; t < ky; ++t) {
            for (int x = 0; x < kx; ++x) col[x] += cell[t][x];
            prefix[0] = 0;
            for (int x = 0; x < kx; ++x) prefix[x + 1] = prefix[x] + col[x];
            int argmin = 0;
            for (int e = 0; e < kx; ++e) {
                // earliest start with the smallest prefix gives the lexicographically first window
                if (prefix[e] < prefix[argmin]) argmin = e;
                Q v = prefix[e + 1] - prefix[argmin];
                if (v <= 0) continue;
                Rect r{ax.cs[argmin], ax.cs[e], ay.cs[b], ay.cs[t]};
                bool better = best.empty || v > best.weight;
                if (!better && v == best.weight) {
                    auto key = [](const Rect& q) { return std::tie(q.left, q.right, q.bottom, q.top); };
                    better = key(r) < key(best.rect);
                }
                if (better) {
                    best.empty = false;
                    best.weight = v;
                    best.rect = r;
                }
            }
        }
    }
    return best;
}

namespace rect_detail {

inline Solution finish(const Instance& inst, Variant var, Mode mode, Annulus ann, long long ops) {
    Solution s;
    s.variant = var;
    s.mode = mode;
    s.annulus = std::move(ann);
    s.op_count = ops;
    fill_coverage(inst, s);
    s.lambda = penalty_of(inst, s.annulus, mode).value;
    return s;
}

inline int slot_of(const AxisCoords& ax, const Q& v) {
    return static_cast<int>(std::lower_bound(ax.cs.begin(), ax.cs.end(), v) - ax.cs.begin());
}

inline AxisPiece hole_piece(int a, int f, int b, int e) {
    AxisPiece p;
    p.a = a;
    p.f = f;
    if (b <= e) {
        p.hole_empty = false;
        p.b = b;
        p.e = e;
    } else {
        p.hole_empty = true;
        p.gap = std::max(a, b - 1);
    }
    return p;
}

// Constraint mode, non-concentric: the outer rectangle is the red bounding
// box and the hole a maximal red-free open rectangle whose sides lie on red
// coordinates or run out through the box (an open hole side on the box edge).
inline Solution nnc_constraint(const Instance& inst) {
    long long ops = 0;
    std::vector<Q> rxs, rys;
    for (const auto& r : inst.reds) {
        rxs.push_back(r.p.x);
        rys.push_back(r.p.y);
    }
    AxisCoords rx(rxs), ry(rys);
    int p = rx.k(), q = ry.k();
    // Blue ranks against the red coordinates: 2i on red coordinate i, 2i+1 strictly between i and i+1.
    auto rank = [&](const AxisCoords& c, const Q& v) {
        auto it = std::lower_bound(c.cs.begin(), c.cs.end(), v);
        int i = static_cast<int>(it - c.cs.begin());
        return (it != c.cs.end() && *it == v) ? 2 * i : 2 * i - 1;
    };
    int W = 2 * p - 1, H = 2 * q - 1;
    std::vector<std::vector<int>> grid(H + 1, std::vector<int>(W + 1, 0));
    int inside = 0;
    for (const auto& b : inst.blues) {
        ++ops;
        int gx = rank(rx, b.p.x), gy = rank(ry, b.p.y);
        if (gx < 0 || gx >= W || gy < 0 || gy >= H) continue;
        ++grid[gy + 1][gx + 1];
        ++inside;
    }
    for (int y = 1; y <= H; ++y)
        for (int x = 1; x <= W; ++x) grid[y][x] += grid[y - 1][x] + grid[y][x - 1] - grid[y - 1][x - 1];
    ops += static_cast<long long>(H) * W;
    auto count = [&](int x0, int x1, int y0, int y1) {
        if (x0 > x1 || y0 > y1) return 0;
        return grid[y1 + 1][x1 + 1] - grid[y0][x1 + 1] - grid[y1 + 1][x0] + grid[y0][x0];
    };
    // Reds grouped by x index.
    std::vector<std::vector<int>> col_ys(p);
    for (int i = 0; i < inst.n(); ++i) col_ys[rx.slot[i]].push_back(ry.slot[i]);

    int best = 0, bl = 0, bh = 0, byl = 0, byh = 0;
    for (int lo = -1; lo < p; ++lo) {
        std::vector<int> ys;  // sorted y indices of reds strictly inside (lo, hi)
        for (int hi = lo + 1; hi <= p; ++hi) {
            if (hi - 1 > lo) {
                for (int y : col_ys[hi - 1]) ys.insert(std::upper_bound(ys.begin(), ys.end(), y), y);
            }
            int gx0 = lo < 0 ? 0 : 2 * lo + 1, gx1 = hi == p ? W - 1 : 2 * hi - 1;
            int prev = -1;
            for (std::size_t t = 0; t <= ys.size(); ++t) {
                ++ops;
                int next = t < ys.size() ? ys[t] : q;
                if (t < ys.size() && next == prev) continue;
                int gy0 = prev < 0 ? 0 : 2 * prev + 1, gy1 = next == q ? H - 1 : 2 * next - 1;
                int c = count(gx0, gx1, gy0, gy1);
                if (c > best) {
                    best = c;
                    bl = lo;
                    bh = hi;
                    byl = prev;
                    byh = next;
                }
                prev = next;
            }
        }
    }

    // Grow the hole until every side rests on a red lying on it or runs out
    // through the box. A larger red-free hole never covers more blues.
    if (best > 0) {
        std::vector<std::pair<int, int>> red_ix;
        for (int i = 0; i < inst.n(); ++i) red_ix.push_back({rx.slot[i], ry.slot[i]});
        for (bool moved = true; moved;) {
            moved = false;
            int nl = -1, nh = p, nyl = -1, nyh = q;
            for (auto [ix, iy] : red_ix) {
                ++ops;
                if (byl < iy && iy < byh) {
                    if (ix <= bl) nl = std::max(nl, ix);
                    if (ix >= bh) nh = std::min(nh, ix);
                }
                if (bl < ix && ix < bh) {
                    if (iy <= byl) nyl = std::max(nyl, iy);
                    if (iy >= byh) nyh = std::min(nyh, iy);
                }
            }
            moved = nl != bl || nh != bh || nyl != byl || nyh != byh;
            bl = nl, bh = nh, byl = nyl, byh = nyh;
        }
    }

    AxisCoords ax(xs_of(inst)), ay(ys_of(inst));
    int a = slot_of(ax, rx.cs.front()), f = slot_of(ax, rx.cs.back());
    int c = slot_of(ay, ry.cs.front()), g = slot_of(ay, ry.cs.back());
    AxisPiece px = hole_piece(a, f, 1, 0), py = hole_piece(c, g, 1, 0);
    if (best > 0) {
        int b = bl < 0 ? a : slot_of(ax, rx.cs[bl]) + 1;
        int e = bh == p ? f : slot_of(ax, rx.cs[bh]) - 1;
        int by = byl < 0 ? c : slot_of(ay, ry.cs[byl]) + 1;
        int ey = byh == q ? g : slot_of(ay, ry.cs[byh]) - 1;
        px = hole_piece(a, f, b, e);
        py = hole_piece(c, g, by, ey);
    }
    auto ann = canonical_rect(inst, ax.cs, px, ay.cs, py, kinds_for(RectShape::nnc));
    if (!ann) throw std::logic_error("nnc constraint: unrealizable hole");
    Solution s = finish(inst, Variant::rect_nnc, Mode::constraint, *ann, ops);
    if (s.lambda != Q(inside - best))
        throw std::logic_error("nnc constraint: count mismatch");
    return s;
}

// Penalized, non-concentric: every outer frame spanned by red coordinates,
// then the best hole inside it by max_weight_rectangle with blue weight +P
// and red weight -P.
inline Solution nnc_penalized(const Instance& inst) {
    long long ops = 0;
    std::vector<Q> rxs, rys;
    for (const auto& r : inst.reds) {
        rxs.push_back(r.p.x);
        rys.push_back(r.p.y);
    }
    AxisCoords rx(rxs), ry(rys);
    Q best_gain = 0;  // empty annulus
    std::optional<std::pair<Rect, WeightedRect>> arg;
    for (int i = 0; i < rx.k(); ++i)
        for (int j = i; j < rx.k(); ++j)
            for (int k = 0; k < ry.k(); ++k)
                for (int l = k; l < ry.k(); ++l) {
                    Rect frame{rx.cs[i], rx.cs[j], ry.cs[k], ry.cs[l]};
                    Q frame_gain = 0;
                    std::vector<WeightedPoint> in;
                    auto take = [&](const WPoint& w, int sign) {
                        if (w.p.x < frame.left || w.p.x > frame.right || w.p.y < frame.bottom || w.p.y > frame.top)
                            return;
                        frame_gain += sign * w.penalty;
                        in.push_back({w.p, -sign * w.penalty});
                    };
                    for (const auto& r : inst.reds) take(r, +1);
                    for (const auto& b : inst.blues) take(b, -1);
                    ops += static_cast<long long>(in.size());
                    WeightedRect hole = max_weight_rectangle(in, frame);
                    Q gain = frame_gain + hole.weight;
                    if (gain > best_gain) {
                        best_gain = gain;
                        arg = std::make_pair(frame, hole);
                    }
                }
    if (!arg) return finish(inst, Variant::rect_nnc, Mode::penalized, EmptyAnnulus{}, ops);
    AxisCoords ax(xs_of(inst)), ay(ys_of(inst));
    const auto& [frame, hole] = *arg;
    int a = slot_of(ax, frame.left), f = slot_of(ax, frame.right);
    int c = slot_of(ay, frame.bottom), g = slot_of(ay, frame.top);
    AxisPiece px = hole_piece(a, f, 1, 0), py = hole_piece(c, g, 1, 0);
    if (!hole.empty) {
        px = hole_piece(a, f, slot_of(ax, hole.rect.left), slot_of(ax, hole.rect.right));
        py = hole_piece(c, g, slot_of(ay, hole.rect.bottom), slot_of(ay, hole.rect.top));
    }
    auto ann = canonical_rect(inst, ax.cs, px, ay.cs, py, kinds_for(RectShape::nnc));
    if (!ann) throw std::logic_error("nnc penalized: unrealizable hole");
    Solution s = finish(inst, Variant::rect_nnc, Mode::penalized, *ann, ops);
    if (s.lambda != inst.total_red_penalty() - best_gain) throw std::logic_error("nnc penalized: gain mismatch");
    return s;
}

using Groups = std::vector<std::pair<std::vector<pat::AxisCand>, std::vector<pat::AxisCand>>>;

inline Solution nc(const Instance& inst, Mode mode) {
    pat::check_size(inst);
    AxisCoords ax(xs_of(inst)), ay(ys_of(inst));
    Groups g{{pat::concentric_axis(ax), pat::concentric_axis(ay)}};
    return pat::run_search(inst, mode, Variant::rect_nc, ax, ay, kinds_for(RectShape::nc), g);
}

inline Solution uniform(const Instance& inst, Mode mode) {
    pat::check_size(inst);
    AxisCoords ax(xs_of(inst)), ay(ys_of(inst));
    std::vector<Q> crit;
    pat::add_pair_widths(ax.cs, crit);
    pat::add_pair_widths(ay.cs, crit);
    Groups g;
    for (const Q& w : pat::width_samples(crit)) {
        Q far = pat::coordinate_span(ax, ay) + 2 * w + 1;
        g.push_back({pat::uniform_axis(ax, w, far), pat::uniform_axis(ay, w, far)});
    }
    return pat::run_search(inst, mode, Variant::rect_uniform, ax, ay, kinds_for(RectShape::uniform), g);
}

}  // namespace rect_detail

inline Solution solve_rect_2d(const Instance& inst, RectShape shape, Mode mode) {
    using namespace rect_detail;
    if (inst.dim != 2) throw GeometryError("solve_rect_2d needs a 2D instance");
    Variant var = shape == RectShape::nnc ? Variant::rect_nnc
                  : shape == RectShape::nc ? Variant::rect_nc
                                           : Variant::rect_uniform;
    if (mode == Mode::constraint && inst.n() == 0) {
        Solution s;
        s.variant = var;
        s.mode = mode;
        s.feasible = false;
        return s;
    }
    if (inst.n() + inst.m() == 0) return finish(inst, var, mode, EmptyAnnulus{}, 0);
    switch (shape) {
        case RectShape::nnc: return mode == Mode::constraint ? nnc_constraint(inst) : nnc_penalized(inst);
        case RectShape::nc: return nc(inst, mode);
        case RectShape::uniform: return uniform(inst, mode);
    }
    return {};
}

}  // namespace rbac
