#pragma once

#include "rbac/canon.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace rbac {

namespace d1_detail {

// Distinct coordinates with merged penalties.
struct Line1D {
    std::vector<Q> cs;
    std::vector<Q> red_w, blue_w;  // total penalty at each coordinate
    std::vector<int> red_cnt, blue_cnt;
    std::vector<bool> has_red;
    long long sort_ops = 0;  // comparisons spent ordering the input
};

inline Line1D build_line(const Instance& inst) {
    Line1D L;
    std::vector<std::pair<Q, int>> all;  // (x, +1 red / -1 blue) index encoded below
    for (int i = 0; i < inst.n(); ++i) all.push_back({inst.reds[i].p.x, i});
    for (int j = 0; j < inst.m(); ++j) all.push_back({inst.blues[j].p.x, inst.n() + j});
    std::sort(all.begin(), all.end(), [&L](const auto& a, const auto& b) {
        ++L.sort_ops;
        return a.first < b.first;
    });
    for (const auto& [x, id] : all) {
        if (L.cs.empty() || L.cs.back() != x) {
            L.cs.push_back(x);
            L.red_w.push_back(0);
            L.blue_w.push_back(0);
            L.red_cnt.push_back(0);
            L.blue_cnt.push_back(0);
            L.has_red.push_back(false);
        }
        if (id < inst.n()) {
            L.red_w.back() += inst.reds[id].penalty;
            ++L.red_cnt.back();
            L.has_red.back() = true;
        } else {
            L.blue_w.back() += inst.blues[id - inst.n()].penalty;
            ++L.blue_cnt.back();
        }
    }
    return L;
}

// Covered slots [a1, a2] and optionally [b1, b2] with a2 < b1 turned into a piece.
inline AxisPiece piece_from_blocks(int a1, int a2, std::optional<std::pair<int, int>> second) {
    AxisPiece p;
    p.a = a1;
    if (!second) {
        p.f = a2;
        p.hole_empty = true;
        p.gap = a2;
        return p;
    }
    p.f = second->second;
    if (second->first == a2 + 1) {
        p.hole_empty = true;
        p.gap = a2;
    } else {
        p.hole_empty = false;
        p.b = a2 + 1;
        p.e = second->first - 1;
    }
    return p;
}

inline Solution make_solution(const Instance& inst, Variant var, Mode mode, const Line1D& L,
                              std::optional<AxisPiece> piece, AxisKind kind, long long ops) {
    Solution s;
    s.variant = var;
    s.mode = mode;
    s.op_count = ops;
    if (piece) {
        auto ann = snap_interval(inst, L.cs, *piece, kind);
        if (!ann) throw std::logic_error("1D solver produced an unrealizable piece");
        s.annulus = *ann;
    }
    fill_coverage(inst, s);
    s.lambda = penalty_of(inst, s.annulus, mode).value;
    return s;
}

inline Solution infeasible(Variant var) {
    Solution s;
    s.variant = var;
    s.mode = Mode::constraint;
    s.feasible = false;
    return s;
}

// Nonuniform, constraint: outer interval spans the reds and the hole is the
// gap between consecutive reds holding the most blues.
inline Solution nu_constraint(const Instance& inst, const Line1D& L) {
    long long ops = L.sort_ops;
    int k = static_cast<int>(L.cs.size());
    std::vector<int> red_slots;
    for (int i = 0; i < k; ++i)
        if (L.has_red[i]) red_slots.push_back(i);
    int first = red_slots.front(), last = red_slots.back();
    int best_gap = -1, best_cnt = -1, cnt = 0;
    int prev = first;
    for (int i = first + 1; i <= last; ++i) {
        ++ops;
        if (L.has_red[i]) {
            if (cnt > best_cnt) {
                best_cnt = cnt;
                best_gap = prev;
            }
            prev = i;
            cnt = 0;
        } else {
            cnt += L.blue_cnt[i];
        }
    }
    if (best_gap < 0) return make_solution(inst, Variant::d1_nonuniform, Mode::constraint, L,
                                           piece_from_blocks(first, last, std::nullopt), AxisKind::free, ops);
    int next = best_gap + 1;
    while (!L.has_red[next]) ++next;
    AxisPiece p = piece_from_blocks(first, best_gap, std::make_pair(next, last));
    return make_solution(inst, Variant::d1_nonuniform, Mode::constraint, L, p, AxisKind::free, ops);
}

struct Block {
    int lo = 0, hi = -1;
    Q gain = 0;
};

// The incremental state of the penalized sweep: the best single interval
// seen so far, the best interval anchored at the current coordinate, and the
// best pair whose right interval ends at the current coordinate.
struct SweepState1D {
    std::optional<Block> best_single;
    std::optional<Block> anchored;
    std::optional<std::pair<Block, Block>> anchored_pair;
    std::optional<std::pair<Block, Block>> best_pair;
};

inline Solution nu_penalized(const Instance& inst, const Line1D& L) {
    long long ops = L.sort_ops;
    int k = static_cast<int>(L.cs.size());
    SweepState1D st;
    for (int i = 0; i < k; ++i) {
        ++ops;
        Q w = L.red_w[i] - L.blue_w[i];
        std::optional<Block> single_before = st.best_single;
        Block a{i, i, w};
        if (st.anchored && st.anchored->gain > 0) a = Block{st.anchored->lo, i, st.anchored->gain + w};
        if (st.anchored_pair) {
            auto ext = *st.anchored_pair;
            ext.second.hi = i;
            ext.second.gain += w;
            st.anchored_pair = ext;
        }
        if (single_before) {
            Block right{i, i, w};
            Q g = single_before->gain + w;
            if (!st.anchored_pair || g > st.anchored_pair->first.gain + st.anchored_pair->second.gain)
                st.anchored_pair = std::make_pair(*single_before, right);
        }
        st.anchored = a;
        if (!st.best_single || a.gain > st.best_single->gain) st.best_single = a;
        if (st.anchored_pair) {
            Q g = st.anchored_pair->first.gain + st.anchored_pair->second.gain;
            if (!st.best_pair || g > st.best_pair->first.gain + st.best_pair->second.gain) st.best_pair = st.anchored_pair;
        }
    }
    Q best = 0;
    std::optional<AxisPiece> piece;
    if (st.best_single && st.best_single->gain > best) {
        best = st.best_single->gain;
        piece = piece_from_blocks(st.best_single->lo, st.best_single->hi, std::nullopt);
    }
    if (st.best_pair) {
        Q g = st.best_pair->first.gain + st.best_pair->second.gain;
        if (g > best) {
            best = g;
            const auto& [l, r] = *st.best_pair;
            piece = piece_from_blocks(l.lo, l.hi, std::make_pair(r.lo, r.hi));
        }
    }
    return make_solution(inst, Variant::d1_nonuniform, Mode::penalized, L, piece, AxisKind::free, ops);
}

// Prefix sums over slots for window queries.
struct Prefix {
    std::vector<Q> gain;       // red minus blue penalty
    std::vector<long> blues;   // blue counts
    Prefix(const Line1D& L) {
        std::size_t k = L.cs.size();
        gain.assign(k + 1, 0);
        blues.assign(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) {
            gain[i + 1] = gain[i] + L.red_w[i] - L.blue_w[i];
            blues[i + 1] = blues[i] + L.blue_cnt[i];
        }
    }
};

// Slots whose coordinate lies in [lo, hi] (closed), clipped to (after, before)
// in slot terms: only slots strictly greater than `after_slot` and strictly
// smaller than `before_slot` are counted.
inline std::pair<int, int> slots_in(const Line1D& L, const Q& lo, const Q& hi, int after_slot, int before_slot) {
    int a = static_cast<int>(std::lower_bound(L.cs.begin(), L.cs.end(), lo) - L.cs.begin());
    int b = static_cast<int>(std::upper_bound(L.cs.begin(), L.cs.end(), hi) - L.cs.begin()) - 1;
    a = std::max(a, after_slot + 1);
    b = std::min(b, before_slot - 1);
    return {a, b};
}

// Candidate window starts in [lo, hi]: every breakpoint inside the range,
// the midpoints between consecutive ones, and the range ends.
inline std::vector<Q> window_starts(const Line1D& L, const Q& len, const Q& lo, const Q& hi) {
    std::vector<Q> bp{lo, hi};
    auto add_range = [&](const Q& shift) {
        auto it = std::lower_bound(L.cs.begin(), L.cs.end(), lo + shift);
        for (; it != L.cs.end() && *it - shift <= hi; ++it) bp.push_back(*it - shift);
    };
    add_range(Q(0));
    add_range(len);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    std::vector<Q> out;
    for (std::size_t i = 0; i < bp.size(); ++i) {
        out.push_back(bp[i]);
        if (i + 1 < bp.size()) out.push_back((bp[i] + bp[i + 1]) / 2);
    }
    return out;
}

struct UniformChoice {
    Q value;
    int p_lo, p_hi;                              // pinned slots
    std::optional<std::pair<int, int>> partner;  // covered partner slots
    bool partner_right = true;
};

// A single covered block splits at its midpoint into two touching intervals.
inline AxisPiece midpoint_piece(const Line1D& L, int lo, int hi) {
    AxisPiece p = piece_from_blocks(lo, hi, std::nullopt);
    Q mid = (L.cs[lo] + L.cs[hi]) / 2;
    p.gap = static_cast<int>(std::upper_bound(L.cs.begin(), L.cs.end(), mid) - L.cs.begin()) - 1;
    return p;
}

inline std::optional<AxisPiece> uniform_piece(const Line1D& L, const UniformChoice& c) {
    if (!c.partner || c.partner->first > c.partner->second) return midpoint_piece(L, c.p_lo, c.p_hi);
    if (c.partner_right) return piece_from_blocks(c.p_lo, c.p_hi, c.partner);
    return piece_from_blocks(c.partner->first, c.partner->second, std::make_pair(c.p_lo, c.p_hi));
}

// Uniform, penalized: one interval is pinned at two red coordinates, its
// partner of the same length slides on either side.
inline Solution u_penalized(const Instance& inst, const Line1D& L) {
    long long ops = L.sort_ops;
    Prefix P(L);
    int k = static_cast<int>(L.cs.size());
    std::vector<int> red_slots;
    for (int i = 0; i < k; ++i)
        if (L.has_red[i]) red_slots.push_back(i);
    std::optional<UniformChoice> best;
    for (std::size_t x = 0; x < red_slots.size(); ++x) {
        for (std::size_t y = x; y < red_slots.size(); ++y) {
            int i = red_slots[x], j = red_slots[y];
            Q len = L.cs[j] - L.cs[i];
            Q base = P.gain[j + 1] - P.gain[i];
            UniformChoice c{base, i, j, std::nullopt, true};
            if (L.cs.back() > L.cs[j]) {
                for (const Q& s : window_starts(L, len, L.cs[j], L.cs.back())) {
                    ++ops;
                    auto [a, b] = slots_in(L, s, s + len, j, k);
                    if (a > b) continue;
                    Q g = P.gain[b + 1] - P.gain[a];
                    if (base + g > c.value) c = {base + g, i, j, std::make_pair(a, b), true};
                }
            }
            if (L.cs.front() < L.cs[i]) {
                for (const Q& s : window_starts(L, len, L.cs.front() - len, L.cs[i] - len)) {
                    ++ops;
                    auto [a, b] = slots_in(L, s, s + len, -1, i);
                    if (a > b) continue;
                    Q g = P.gain[b + 1] - P.gain[a];
                    if (base + g > c.value) c = {base + g, i, j, std::make_pair(a, b), false};
                }
            }
            if (!best || c.value > best->value) best = c;
        }
    }
    std::optional<AxisPiece> piece;
    if (best && best->value > 0) piece = uniform_piece(L, *best);
    return make_solution(inst, Variant::d1_uniform, Mode::penalized, L, piece, AxisKind::concentric, ops);
}

// Uniform, constraint: the reds are split into a prefix and a suffix; the
// group with the longer span is pinned and the other one's window slides.
inline Solution u_constraint(const Instance& inst, const Line1D& L) {
    long long ops = L.sort_ops;
    Prefix P(L);
    int k = static_cast<int>(L.cs.size());
    std::vector<int> r;
    for (int i = 0; i < k; ++i)
        if (L.has_red[i]) r.push_back(i);
    int t = static_cast<int>(r.size());
    auto blues_in = [&](int a, int b) { return a > b ? 0L : P.blues[b + 1] - P.blues[a]; };

    UniformChoice best{Q(blues_in(r.front(), r.back())), r.front(), r.back(), std::nullopt, true};
    for (int i = 0; i + 1 < t; ++i) {
        const Q& r1 = L.cs[r.front()];
        const Q& ri = L.cs[r[i]];
        const Q& rn = L.cs[r[i + 1]];
        const Q& rt = L.cs[r.back()];
        Q dl = ri - r1, dr = rt - rn;
        if (dl >= dr) {
            Q len = dl;
            Q lo = std::max<Q>(ri, rt - len), hi = rn;
            if (lo > hi) continue;
            long pinned = blues_in(r.front(), r[i]);
            for (const Q& s : window_starts(L, len, lo, hi)) {
                ++ops;
                auto [a, b] = slots_in(L, s, s + len, r[i], k);
                Q v(pinned + blues_in(a, b));
                if (v < best.value) best = {v, r.front(), r[i], std::make_pair(a, b), true};
            }
        } else {
            Q len = dr;
            // window [s, s + len] must contain [r1, ri] and end by rn
            Q lo = ri - len, hi = std::min<Q>(r1, rn - len);
            if (lo > hi) continue;
            long pinned = blues_in(r[i + 1], r.back());
            for (const Q& s : window_starts(L, len, lo, hi)) {
                ++ops;
                auto [a, b] = slots_in(L, s, s + len, -1, r[i + 1]);
                Q v(pinned + blues_in(a, b));
                if (v < best.value) best = {v, r[i + 1], r.back(), std::make_pair(a, b), false};
            }
        }
    }
    return make_solution(inst, Variant::d1_uniform, Mode::constraint, L, uniform_piece(L, best), AxisKind::concentric,
                         ops);
}

}  // namespace d1_detail

inline Solution solve_1d(const Instance& inst, Shape1D shape, Mode mode) {
    using namespace d1_detail;
    if (inst.dim != 1) throw GeometryError("solve_1d needs a 1D instance");
    Variant var = shape == Shape1D::uniform ? Variant::d1_uniform : Variant::d1_nonuniform;
    if (mode == Mode::constraint && inst.n() == 0) return infeasible(var);
    Line1D L = build_line(inst);
    if (shape == Shape1D::nonuniform) return mode == Mode::constraint ? nu_constraint(inst, L) : nu_penalized(inst, L);
    return mode == Mode::constraint ? u_constraint(inst, L) : u_penalized(inst, L);
}

}  // namespace rbac
