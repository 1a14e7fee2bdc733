#pragma once

#include "rbac/canon.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <stdexcept>

namespace rbac {

struct OracleBudget {
    int max_reds = 6;
    int max_blues = 6;
    long long max_candidates = 400'000'000;
};

class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace oracle_detail {

using Mask = std::uint32_t;

inline void check_budget(const Instance& inst, const OracleBudget& b) {
    if (inst.n() > b.max_reds || inst.m() > b.max_blues)
        throw BudgetExceeded("instance exceeds oracle budget (" + std::to_string(inst.n()) + " reds, " +
                             std::to_string(inst.m()) + " blues)");
}

// Orders every subset of points by its objective value. Bit i < n is red i,
// bit n + j is blue j. Lower key is better; INT_MAX marks infeasible subsets.
class CostTable {
   public:
    CostTable(const Instance& inst, Mode mode) : n_(inst.n()), m_(inst.m()), mode_(mode) {
        int N = n_ + m_;
        std::size_t total = std::size_t(1) << N;
        key_.assign(total, 0);
        red_mask_ = (Mask(1) << n_) - 1;
        if (mode == Mode::constraint) {
            for (std::size_t c = 0; c < total; ++c) {
                Mask cm = static_cast<Mask>(c);
                key_[c] = (cm & red_mask_) == red_mask_ ? std::popcount(cm >> n_) : INT_MAX;
            }
            return;
        }
        std::vector<Q> lam(total);
        Q all_red = inst.total_red_penalty();
        for (std::size_t c = 0; c < total; ++c) {
            Q v = all_red;
            for (int i = 0; i < N; ++i) {
                if (!((c >> i) & 1)) continue;
                if (i < n_)
                    v -= inst.reds[i].penalty;
                else
                    v += inst.blues[i - n_].penalty;
            }
            lam[c] = v;
        }
        std::vector<std::size_t> order(total);
        for (std::size_t c = 0; c < total; ++c) order[c] = c;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lam[a] < lam[b]; });
        int rank = 0;
        for (std::size_t i = 0; i < total; ++i) {
            if (i > 0 && lam[order[i]] != lam[order[i - 1]]) ++rank;
            key_[order[i]] = rank;
        }
    }
    int key(Mask c) const { return key_[c]; }

   private:
    int n_, m_;
    Mode mode_;
    Mask red_mask_ = 0;
    std::vector<int> key_;
};

struct WPiece {
    Range<Q> w;
    AxisPiece piece;
};

struct AxisPattern {
    Mask outer = 0, hole = 0;
    std::vector<WPiece> pieces;  // every feasible piece with its range of w
};

inline bool has_w(AxisKind k) { return k == AxisKind::uniform || k == AxisKind::symmetric_uniform; }

// Every (outer, hole) point pattern realizable along one axis, found by
// testing each slot assignment for exact feasibility.
inline std::vector<AxisPattern> enumerate_axis(const AxisCoords& ax, AxisKind kind, const Q& L,
                                               long long& budget) {
    std::map<std::uint64_t, AxisPattern> found;
    int k = ax.k();
    auto consider = [&](const AxisPiece& p) {
        if (--budget < 0) throw BudgetExceeded("oracle candidate budget exhausted");
        LinSystem<Q> s(k1DVars);
        add_piece_constraints(s, ax.cs, p, kAxisVars);
        add_shape_constraints(s, kind, kAxisVars, L);
        Range<Q> wr;
        if (has_w(kind)) {
            wr = s.bounds(kAxisVars.w);
            if (!wr.feasible) return;
        } else if (!s.feasible()) {
            return;
        }
        Mask o, h;
        piece_masks(ax, p, o, h);
        auto key = (std::uint64_t(o) << 32) | h;
        auto& pat = found[key];
        pat.outer = o;
        pat.hole = h;
        if (has_w(kind) || pat.pieces.empty()) pat.pieces.push_back({wr, p});
    };
    for (int a = 0; a < k; ++a) {
        for (int f = a; f < k; ++f) {
            for (int b = a; b <= f; ++b)
                for (int e = b; e <= f; ++e) {
                    AxisPiece p;
                    p.a = a;
                    p.f = f;
                    p.hole_empty = false;
                    p.b = b;
                    p.e = e;
                    consider(p);
                }
            for (int g = a - 1; g <= f; ++g) {
                AxisPiece p;
                p.a = a;
                p.f = f;
                p.hole_empty = true;
                p.gap = g;
                consider(p);
            }
        }
    }
    std::vector<AxisPattern> out;
    out.reserve(found.size());
    for (auto& [key, pat] : found) out.push_back(std::move(pat));
    return out;
}

template <class V>
bool ranges_meet(const Range<V>& r, const Range<V>& s, Range<V>* out = nullptr) {
    Range<V> t;
    t.lo = r.lo;
    t.lo_strict = r.lo_strict;
    if (s.lo && (!t.lo || *t.lo < *s.lo || (*t.lo == *s.lo && s.lo_strict))) {
        t.lo = s.lo;
        t.lo_strict = s.lo_strict;
    }
    t.hi = r.hi;
    t.hi_strict = r.hi_strict;
    if (s.hi && (!t.hi || *s.hi < *t.hi || (*t.hi == *s.hi && s.hi_strict))) {
        t.hi = s.hi;
        t.hi_strict = s.hi_strict;
    }
    bool ok = !(t.lo && t.hi && (*t.hi < *t.lo || (*t.hi == *t.lo && (t.lo_strict || t.hi_strict))));
    if (out) *out = t;
    return ok;
}

inline Solution finish(const Instance& inst, Variant variant, Mode mode, Annulus ann, bool feasible) {
    Solution s;
    s.variant = variant;
    s.mode = mode;
    s.annulus = std::move(ann);
    s.feasible = feasible;
    fill_coverage(inst, s);
    if (feasible) s.lambda = penalty_of(inst, s.annulus, mode).value;
    return s;
}

}  // namespace oracle_detail

inline Solution oracle_1d(const Instance& inst, Shape1D shape, Mode mode, const OracleBudget& budget = {}) {
    using namespace oracle_detail;
    if (inst.dim != 1) throw GeometryError("oracle_1d needs a 1D instance");
    check_budget(inst, budget);
    Variant var = shape == Shape1D::uniform ? Variant::d1_uniform : Variant::d1_nonuniform;
    if (mode == Mode::constraint && inst.n() == 0) return finish(inst, var, mode, EmptyAnnulus{}, false);
    CostTable table(inst, mode);
    AxisCoords ax(xs_of(inst));
    AxisKind kind = shape == Shape1D::uniform ? AxisKind::concentric : AxisKind::free;
    long long left = budget.max_candidates;
    auto pats = enumerate_axis(ax, kind, Q(0), left);
    int best = table.key(0);
    const AxisPattern* arg = nullptr;
    for (const auto& p : pats) {
        int k = table.key(p.outer & ~p.hole);
        if (k < best) {
            best = k;
            arg = &p;
        }
    }
    if (!arg) return finish(inst, var, mode, EmptyAnnulus{}, best != INT_MAX);
    auto ann = snap_interval(inst, ax.cs, arg->pieces.front().piece, kind);
    if (!ann) throw std::logic_error("oracle_1d: feasible piece failed to snap");
    return finish(inst, var, mode, *ann, true);
}

namespace oracle_detail {

inline Solution rect_search(const Instance& inst, const RectKinds& kinds, Mode mode, Variant var,
                            const OracleBudget& budget) {
    CostTable table(inst, mode);
    AxisCoords ax(xs_of(inst)), ay(ys_of(inst));
    long long left = budget.max_candidates;
    auto px = enumerate_axis(ax, kinds.x, kinds.line_y, left);
    auto py = enumerate_axis(ay, kinds.y, kinds.line_y, left);
    bool coupled = has_w(kinds.x) && has_w(kinds.y);
    int best = table.key(0);
    AxisPiece bx, by;
    bool found = false;
    for (const auto& xp : px) {
        for (const auto& yp : py) {
            Mask c = xp.outer & yp.outer & ~(xp.hole & yp.hole);
            int k = table.key(c);
            if (k >= best) continue;
            if (--left < 0) throw BudgetExceeded("oracle candidate budget exhausted");
            const WPiece* wx = nullptr;
            const WPiece* wy = nullptr;
            if (coupled) {
                for (const auto& a : xp.pieces) {
                    for (const auto& b : yp.pieces)
                        if (ranges_meet(a.w, b.w)) {
                            wx = &a;
                            wy = &b;
                            break;
                        }
                    if (wx) break;
                }
                if (!wx) continue;
            } else {
                wx = &xp.pieces.front();
                wy = &yp.pieces.front();
            }
            best = k;
            bx = wx->piece;
            by = wy->piece;
            found = true;
        }
    }
    if (!found) return finish(inst, var, mode, EmptyAnnulus{}, best != INT_MAX);
    auto ann = snap_rect(inst, ax.cs, bx, ay.cs, by, kinds);
    if (!ann) throw std::logic_error("oracle: feasible rectangle pieces failed to snap");
    return finish(inst, var, mode, *ann, true);
}

}  // namespace oracle_detail

inline Variant rect_variant(RectShape s) {
    switch (s) {
        case RectShape::nnc: return Variant::rect_nnc;
        case RectShape::nc: return Variant::rect_nc;
        case RectShape::uniform: return Variant::rect_uniform;
    }
    return Variant::rect_nnc;
}

inline Variant restricted_variant(RectShape s) {
    switch (s) {
        case RectShape::nnc: return Variant::restricted_nnc;
        case RectShape::nc: return Variant::restricted_nc;
        case RectShape::uniform: return Variant::restricted_uniform;
    }
    return Variant::restricted_nnc;
}

inline Solution oracle_rect_2d(const Instance& inst, RectShape shape, Mode mode, const OracleBudget& budget = {}) {
    using namespace oracle_detail;
    if (inst.dim != 2) throw GeometryError("oracle_rect_2d needs a 2D instance");
    check_budget(inst, budget);
    if (mode == Mode::constraint && inst.n() == 0)
        return finish(inst, rect_variant(shape), mode, EmptyAnnulus{}, false);
    return rect_search(inst, kinds_for(shape), mode, rect_variant(shape), budget);
}

inline Solution oracle_restricted(const Instance& inst, RectShape shape, const Q& line_y,
                                  const OracleBudget& budget = {}) {
    using namespace oracle_detail;
    if (inst.dim != 2) throw GeometryError("oracle_restricted needs a 2D instance");
    check_budget(inst, budget);
    return rect_search(inst, restricted_kinds(shape, line_y), Mode::penalized, restricted_variant(shape), budget);
}

namespace oracle_detail {

// Line a*x + b*y = c.
struct Line {
    Q a, b, c;
};

inline Line bisector(const Pt& p, const Pt& q) {
    return {Q(2) * (q.x - p.x), Q(2) * (q.y - p.y), q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y};
}

inline std::vector<Pt> face_samples(const std::vector<Pt>& pts) {
    std::vector<Line> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] != pts[j]) lines.push_back(bisector(pts[i], pts[j]));
    std::vector<Q> crit;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.b == 0) crit.push_back(l.c / l.a);
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Line& m = lines[j];
            Q det = l.a * m.b - l.b * m.a;
            if (det == 0) continue;
            crit.push_back((l.c * m.b - l.b * m.c) / det);
        }
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    std::vector<Q> xs;
    if (crit.empty()) {
        xs.push_back(Q(0));
    } else {
        xs.push_back(crit.front() - 1);
        for (std::size_t i = 0; i + 1 < crit.size(); ++i) xs.push_back((crit[i] + crit[i + 1]) / 2);
        xs.push_back(crit.back() + 1);
    }
    std::vector<Pt> out;
    for (const Q& x : xs) {
        std::vector<Q> ys;
        for (const auto& l : lines)
            if (l.b != 0) ys.push_back((l.c - l.a * x) / l.b);
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        if (ys.empty()) {
            out.push_back({x, Q(0)});
            continue;
        }
        out.push_back({x, ys.front() - 1});
        for (std::size_t i = 0; i + 1 < ys.size(); ++i) out.push_back({x, (ys[i] + ys[i + 1]) / 2});
        out.push_back({x, ys.back() + 1});
    }
    return out;
}

}  // namespace oracle_detail

inline Solution oracle_circ(const Instance& inst, Mode mode, const OracleBudget& budget = {}) {
    using namespace oracle_detail;
    if (inst.dim != 2) throw GeometryError("oracle_circ needs a 2D instance");
    check_budget(inst, budget);
    CostTable table(inst, mode);
    std::vector<Pt> pts;
    for (const auto& r : inst.reds) pts.push_back(r.p);
    for (const auto& b : inst.blues) pts.push_back(b.p);
    int N = static_cast<int>(pts.size());
    int best = table.key(0);
    bool found = false;
    CircAnnulus arg;
    long long left = budget.max_candidates;
    for (const Pt& c : face_samples(pts)) {
        std::vector<std::pair<Q, int>> d;
        for (int i = 0; i < N; ++i) d.push_back({dist2(c, pts[i]), i});
        std::sort(d.begin(), d.end());
        std::vector<Q> level;
        std::vector<Mask> group;
        for (const auto& [v, i] : d) {
            if (level.empty() || level.back() != v) {
                level.push_back(v);
                group.push_back(0);
            }
            group.back() |= Mask(1) << i;
        }
        int G = static_cast<int>(level.size());
        for (int i = 0; i < G; ++i) {
            Mask c_mask = 0;
            for (int j = i; j < G; ++j) {
                c_mask |= group[j];
                if (--left < 0) throw BudgetExceeded("oracle candidate budget exhausted");
                int k = table.key(c_mask);
                if (k < best) {
                    best = k;
                    found = true;
                    arg = CircAnnulus{c, level[i], level[j], {false, false}, {}};
                }
            }
        }
    }
    if (!found) return finish(inst, Variant::circ, mode, EmptyAnnulus{}, best != INT_MAX);
    for (int i = 0; i < N; ++i) {
        Q dd = dist2(arg.center, pts[i]);
        PointRef ref = i < inst.n() ? PointRef{Color::red, i} : PointRef{Color::blue, i - inst.n()};
        if (dd == arg.r_in_sq) arg.defining.push_back({ref, static_cast<int>(Circle::inner)});
        if (dd == arg.r_out_sq) arg.defining.push_back({ref, static_cast<int>(Circle::outer)});
    }
    return finish(inst, Variant::circ, mode, arg, true);
}

}  // namespace rbac
