#pragma once

// Per-axis candidate generation and the x-by-y pattern search shared by the
// rectangular and restricted solvers.

#include "rbac/canon.hpp"
#include "rbac/pin.hpp"

#include <array>
#include <bit>
#include <gmpxx.h>
#include <set>
#include <optional>
#include <stdexcept>

namespace rbac {

using Mask64 = std::uint64_t;

class TooManyPoints : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace pat {

inline void check_size(const Instance& inst) {
    if (inst.n() + inst.m() > 64) throw TooManyPoints("pattern search supports at most 64 points");
}

struct AxisCand {
    Mask64 outer = 0, hole = 0;
    AxisPiece piece;
};

inline AxisCand cand_from_piece(const AxisCoords& ax, const AxisPiece& p) {
    AxisCand c;
    c.piece = p;
    piece_masks(ax, p, c.outer, c.hole);
    return c;
}

// Keeps the first candidate of every (outer, hole) mask pair; candidates
// whose outer mask is empty cover nothing and are dropped.
class CandSet {
   public:
    void add(AxisCand c) {
        if (!c.outer) return;
        if (seen_.emplace(c.outer, c.hole).second) list_.push_back(std::move(c));
    }
    const std::vector<AxisCand>& list() const { return list_; }

   private:
    std::set<std::pair<Mask64, Mask64>> seen_;
    std::vector<AxisCand> list_;
};

inline QE qe(const Q& v) { return QE{v, Q(0)}; }
inline QE plus_eps(const Q& v) { return QE{v, Q(1)}; }
inline QE minus_eps(const Q& v) { return QE{v, Q(-1)}; }

// Nested outer/hole pairs on a free axis.
inline std::vector<AxisCand> free_axis(const AxisCoords& ax) {
    CandSet out;
    int k = ax.k();
    for (int a = 0; a < k; ++a)
        for (int f = a; f < k; ++f) {
            AxisPiece p;
            p.a = a;
            p.f = f;
            p.hole_empty = true;
            p.gap = a;
            out.add(cand_from_piece(ax, p));
            for (int b = a; b <= f; ++b)
                for (int e = b; e <= f; ++e) {
                    AxisPiece q = p;
                    q.hole_empty = false;
                    q.b = b;
                    q.e = e;
                    out.add(cand_from_piece(ax, q));
                }
        }
    return out.list();
}

// Distinct distances of the axis coordinates from a center, ascending.
inline std::vector<Q> distance_groups(const std::vector<Q>& cs, const Q& center) {
    std::vector<Q> d;
    d.reserve(cs.size());
    for (const auto& c : cs) d.push_back(abs(c - center));
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

// All patterns of an interval pair centred at `center`: the outer keeps the
// first t distance groups and the hole the first s <= t.
inline void centred_patterns(const AxisCoords& ax, const Q& center, CandSet& out) {
    auto d = distance_groups(ax.cs, center);
    int g = static_cast<int>(d.size());
    for (int t = 1; t <= g; ++t) {
        for (int s = 0; s <= t; ++s) {
            QE R = s == t ? plus_eps(d[t - 1]) : qe(d[t - 1]);
            QE r = s == 0 ? qe(Q(0)) : (s == t ? R : qe(d[s]));
            QE c = qe(center);
            out.add(cand_from_piece(ax, piece_of<QE>(ax.cs, c - R, c + R, c - r, c + r)));
        }
    }
}

// Centers where the distance order can change, plus one center inside each
// open stretch between them.
inline std::vector<Q> center_samples(const std::vector<Q>& cs) {
    std::vector<Q> crit;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i; j < cs.size(); ++j) crit.push_back((cs[i] + cs[j]) / 2);
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    std::vector<Q> out;
    if (crit.empty()) return out;
    out.push_back(crit.front() - 1);
    for (std::size_t i = 0; i < crit.size(); ++i) {
        out.push_back(crit[i]);
        if (i + 1 < crit.size()) out.push_back((crit[i] + crit[i + 1]) / 2);
    }
    out.push_back(crit.back() + 1);
    return out;
}

inline std::vector<AxisCand> concentric_axis(const AxisCoords& ax) {
    CandSet out;
    for (const auto& c : center_samples(ax.cs)) centred_patterns(ax, c, out);
    return out.list();
}

inline std::vector<AxisCand> symmetric_axis(const AxisCoords& ax, const Q& L) {
    CandSet out;
    centred_patterns(ax, L, out);
    return out.list();
}

// Representatives of the cells cut out by sorted distinct critical values:
// the smallest member of each cell (lowest=true) or the largest.
inline std::vector<QE> cell_reps(std::vector<Q> crit, bool lowest, const Q& far) {
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    std::vector<QE> out;
    std::size_t r = crit.size();
    if (lowest) {
        out.push_back(qe(crit.front() - far));
        for (std::size_t i = 0; i < r; ++i) {
            out.push_back(qe(crit[i]));
            out.push_back(plus_eps(crit[i]));
        }
    } else {
        for (std::size_t i = 0; i < r; ++i) {
            out.push_back(minus_eps(crit[i]));
            out.push_back(qe(crit[i]));
        }
        out.push_back(qe(crit.back() + far));
    }
    return out;
}

// Interval pairs of common width w: outer [X1, X2], hole (X1 + w, X2 - w).
inline std::vector<AxisCand> uniform_axis(const AxisCoords& ax, const Q& w, const Q& far) {
    std::vector<Q> c1, c2;
    for (const auto& c : ax.cs) {
        c1.push_back(c);
        c1.push_back(c - w);
        c2.push_back(c);
        c2.push_back(c + w);
    }
    auto lo = cell_reps(c1, true, far), hi = cell_reps(c2, false, far);
    CandSet out;
    QE w2 = qe(2 * w), wq = qe(w);
    for (const auto& X1 : lo)
        for (const auto& X2 : hi) {
            if (X2 - X1 < w2) continue;
            out.add(cand_from_piece(ax, piece_of<QE>(ax.cs, X1, X2, X1 + wq, X2 - wq)));
        }
    return out.list();
}

// Symmetric about L with common width w: outer half-height H >= w, hole H - w.
inline std::vector<AxisCand> symmetric_uniform_axis(const AxisCoords& ax, const Q& L, const Q& w, const Q& far) {
    std::vector<Q> crit{w};
    for (const auto& c : ax.cs) {
        Q d = abs(c - L);
        crit.push_back(d);
        crit.push_back(d + w);
    }
    CandSet out;
    QE wq = qe(w), l = qe(L);
    for (const auto& H : cell_reps(crit, false, far)) {
        if (H < wq) continue;
        QE h = H - wq;
        out.add(cand_from_piece(ax, piece_of<QE>(ax.cs, l - H, l + H, l - h, l + h)));
    }
    return out.list();
}

// Widths at which some uniform pattern appears or disappears, with one
// sample in every open stretch between them.
inline std::vector<Q> width_samples(std::vector<Q> crit) {
    crit.push_back(Q(0));
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    std::vector<Q> out;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        if (crit[i] < 0) continue;
        out.push_back(crit[i]);
        if (i + 1 < crit.size()) out.push_back((crit[i] + crit[i + 1]) / 2);
    }
    out.push_back(crit.back() + 1);
    return out;
}

inline void add_pair_widths(const std::vector<Q>& cs, std::vector<Q>& crit) {
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            Q d = abs(cs[j] - cs[i]);
            crit.push_back(d);
            crit.push_back(d / 2);
        }
}

// Objective over covered masks. Red bits carry +P, blue bits -P; the
// penalized objective is the total gain, the constraint objective the number
// of covered blues once every red is covered.
template <class T>
class Scorer {
   public:
    Scorer(const Instance& inst, Mode mode, const std::vector<T>& weight) : mode_(mode) {
        n_ = inst.n();
        int N = inst.n() + inst.m();
        red_all_ = n_ == 64 ? ~Mask64(0) : (Mask64(1) << n_) - 1;
        for (int c = 0; c < 8; ++c)
            for (int v = 0; v < 256; ++v) {
                T s = T(0);
                for (int b = 0; b < 8; ++b) {
                    int i = c * 8 + b;
                    if (i < N && ((v >> b) & 1)) s += weight[i];
                }
                table_[c][v] = s;
            }
    }
    // Larger is better. Constraint mode returns nullopt when a red is lost.
    std::optional<T> value(Mask64 covered) const {
        if (mode_ == Mode::constraint) {
            if ((covered & red_all_) != red_all_) return std::nullopt;
            return T(n_ == 64 ? 0L : -static_cast<long>(std::popcount(covered >> n_)));
        }
        T s = T(0);
        for (int c = 0; c < 8 && covered; ++c, covered >>= 8) s += table_[c][covered & 0xff];
        return s;
    }

   private:
    Mode mode_;
    int n_;
    Mask64 red_all_;
    std::array<std::array<T, 256>, 8> table_;
};

struct SearchResult {
    bool found = false;
    AxisPiece px, py;
};

// Best x-candidate/y-candidate combination over all groups. Candidates inside
// one group are mutually compatible; groups model the shared width of the
// uniform shapes. `baseline` is the value of covering nothing.
template <class T>
SearchResult search(const Scorer<T>& sc, const std::vector<std::pair<std::vector<AxisCand>, std::vector<AxisCand>>>& groups,
                    std::optional<T> baseline, long long& ops) {
    SearchResult res;
    std::optional<T> best = baseline;
    for (const auto& [xs, ys] : groups)
        for (const auto& x : xs)
            for (const auto& y : ys) {
                ++ops;
                Mask64 cov = x.outer & y.outer & ~(x.hole & y.hole);
                auto v = sc.value(cov);
                if (!v) continue;
                if (!best || *v > *best) {
                    best = v;
                    res.found = true;
                    res.px = x.piece;
                    res.py = y.piece;
                }
            }
    return res;
}

// Penalties scaled to a common denominator; nullopt if they overflow 64 bits.
inline std::optional<std::vector<long long>> integer_weights(const Instance& inst) {
    mpz_class den = 1;
    auto all = [&](auto&& f) {
        for (const auto& r : inst.reds) f(r.penalty, +1);
        for (const auto& b : inst.blues) f(b.penalty, -1);
    };
    all([&](const Q& p, int) { den = lcm(den, mpz_class(p.get_den())); });
    std::vector<long long> out;
    mpz_class total = 0;
    bool ok = true;
    all([&](const Q& p, int s) {
        mpz_class v = p.get_num() * (den / p.get_den());
        total += v;
        if (!v.fits_slong_p()) ok = false;
        out.push_back(s * v.get_si());
    });
    if (!ok || total >= mpz_class(1) << 62) return std::nullopt;
    return out;
}

inline std::vector<Q> rational_weights(const Instance& inst) {
    std::vector<Q> out;
    for (const auto& r : inst.reds) out.push_back(r.penalty);
    for (const auto& b : inst.blues) out.push_back(-b.penalty);
    return out;
}

// Runs the search and turns the winner into a canonical annulus.
inline Solution run_search(
    const Instance& inst, Mode mode, Variant var, const AxisCoords& ax, const AxisCoords& ay, const RectKinds& kinds,
    const std::vector<std::pair<std::vector<AxisCand>, std::vector<AxisCand>>>& groups) {
    Solution s;
    s.variant = var;
    s.mode = mode;
    SearchResult r;
    long long ops = 0;
    if (auto iw = integer_weights(inst)) {
        Scorer<long long> sc(inst, mode, *iw);
        std::optional<long long> base;
        if (mode == Mode::penalized) base = 0;
        r = search(sc, groups, base, ops);
    } else {
        Scorer<Q> sc(inst, mode, rational_weights(inst));
        std::optional<Q> base;
        if (mode == Mode::penalized) base = Q(0);
        r = search(sc, groups, base, ops);
    }
    s.op_count = ops;
    if (!r.found) {
        s.feasible = mode == Mode::penalized;
        fill_coverage(inst, s);
        s.lambda = s.feasible ? penalty_of(inst, s.annulus, mode).value : Q(0);
        return s;
    }
    auto ann = canonical_rect(inst, ax.cs, r.px, ay.cs, r.py, kinds);
    if (!ann) throw std::logic_error("pattern search produced an unrealizable rectangle pair");
    s.annulus = *ann;
    fill_coverage(inst, s);
    s.lambda = penalty_of(inst, s.annulus, mode).value;
    return s;
}

inline Q coordinate_span(const AxisCoords& ax, const AxisCoords& ay) {
    Q lo = std::min(ax.cs.front(), ay.cs.front()), hi = std::max(ax.cs.back(), ay.cs.back());
    return hi - lo;
}

}  // namespace pat
}  // namespace rbac
