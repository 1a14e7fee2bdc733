#pragma once

#include "rbac/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>

namespace rbac {

namespace circ_detail {

// Line a*x + b*y = c.
struct Line {
    Q a, b, c;
    bool through(const Pt& p) const { return a * p.x + b * p.y == c; }
};

inline Line bisector(const Pt& p, const Pt& q) {
    return {2 * (q.x - p.x), 2 * (q.y - p.y), q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y};
}

inline std::vector<Pt> instance_points(const Instance& inst) {
    std::vector<Pt> pts;
    for (const auto& r : inst.reds) pts.push_back(r.p);
    for (const auto& b : inst.blues) pts.push_back(b.p);
    return pts;
}

inline PointRef ref_of(const Instance& inst, int i) {
    return i < inst.n() ? PointRef{Color::red, i} : PointRef{Color::blue, i - inst.n()};
}

inline std::vector<Line> all_bisectors(const std::vector<Pt>& pts) {
    std::vector<Line> ls;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] != pts[j]) ls.push_back(bisector(pts[i], pts[j]));
    return ls;
}

inline bool collinear(const std::vector<Pt>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Q cr = (pts[i].x - pts[0].x) * (pts[j].y - pts[0].y) - (pts[i].y - pts[0].y) * (pts[j].x - pts[0].x);
            if (cr != 0) return false;
        }
    return true;
}

inline int half(const Pt& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

inline bool angle_less(const Pt& u, const Pt& v) {
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return u.x * v.y - u.y * v.x > 0;
}

inline bool same_direction(const Pt& u, const Pt& v) {
    return u.x * v.y - u.y * v.x == 0 && u.x * v.x + u.y * v.y > 0;
}

// A center to evaluate and the candidate point it was shifted from.
struct Sample {
    Pt c, parent;
    std::string tag;
};

// Points just off `v` inside every sector cut out by the lines through it,
// close enough that no other line is crossed.
inline void sector_samples(const Pt& v, const std::vector<Line>& lines, const std::string& tag,
                           std::vector<Sample>& out) {
    out.push_back({v, v, tag});
    std::vector<Pt> rays;
    std::vector<const Line*> others;
    for (const auto& l : lines) {
        if (!l.through(v)) {
            others.push_back(&l);
            continue;
        }
        Pt d{l.b, -l.a};
        rays.push_back(d);
        rays.push_back({-d.x, -d.y});
    }
    std::sort(rays.begin(), rays.end(), angle_less);
    rays.erase(std::unique(rays.begin(), rays.end(), same_direction), rays.end());
    std::vector<Pt> dirs;
    if (rays.empty()) {
        dirs = {{Q(1), Q(0)}, {Q(-1), Q(0)}, {Q(0), Q(1)}, {Q(0), Q(-1)}};
    } else if (rays.size() == 2) {
        dirs = {{-rays[0].y, rays[0].x}, {rays[0].y, -rays[0].x}};
    } else {
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const Pt& a = rays[i];
            const Pt& b = rays[(i + 1) % rays.size()];
            dirs.push_back({a.x + b.x, a.y + b.y});
        }
    }
    for (const auto& d : dirs) {
        std::optional<Q> tmin;
        for (const Line* l : others) {
            Q den = l->a * d.x + l->b * d.y;
            if (den == 0) continue;
            Q t = (l->c - l->a * v.x - l->b * v.y) / den;
            if (t > 0 && (!tmin || t < *tmin)) tmin = t;
        }
        Q t = tmin ? *tmin / 2 : Q(1);
        out.push_back({{v.x + t * d.x, v.y + t * d.y}, v, tag});
    }
}

// Samples across a family of parallel lines (no line crossings at all).
inline void parallel_samples(const std::vector<Line>& lines, const std::vector<Pt>& pts, std::vector<Sample>& out) {
    if (lines.empty()) {
        for (const auto& p : pts) sector_samples(p, lines, "single", out);
        return;
    }
    Pt n{lines[0].a, lines[0].b};
    std::vector<Q> s;
    for (const auto& l : lines) s.push_back(l.c / (l.a * n.x + l.b * n.y));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Q> at{s.front() - 1};
    for (std::size_t i = 0; i < s.size(); ++i) {
        at.push_back(s[i]);
        if (i + 1 < s.size()) at.push_back((s[i] + s[i + 1]) / 2);
    }
    at.push_back(s.back() + 1);
    for (const Q& t : at) {
        Pt c{t * n.x, t * n.y};
        out.push_back({c, c, "parallel"});
    }
}

// Every crossing of two of the lines.
inline std::vector<Pt> line_vertices(const std::vector<Line>& lines) {
    std::set<Pt> vs;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Line &l = lines[i], &m = lines[j];
            Q det = l.a * m.b - l.b * m.a;
            if (det == 0) continue;
            vs.insert({(l.c * m.b - l.b * m.c) / det, (l.a * m.c - l.c * m.a) / det});
        }
    return {vs.begin(), vs.end()};
}

// Best contiguous range of the points sorted by distance from c.
struct RangeChoice {
    bool any = false;
    Q value;  // gain (penalized) or minus covered blues (constraint)
    std::vector<int> order;
    std::vector<Q> d2;
    std::vector<int> group_start;  // start index in `order` of each distance group
    int gi = 0, gj = -1;           // chosen groups
};

inline RangeChoice evaluate(const Instance& inst, const std::vector<Pt>& pts, const Pt& c, Mode mode) {
    RangeChoice r;
    int N = static_cast<int>(pts.size());
    r.d2.resize(N);
    for (int i = 0; i < N; ++i) r.d2[i] = dist2(c, pts[i]);
    r.order.resize(N);
    for (int i = 0; i < N; ++i) r.order[i] = i;
    std::sort(r.order.begin(), r.order.end(), [&](int a, int b) { return r.d2[a] < r.d2[b]; });
    std::vector<Q> gain;
    std::vector<int> blues, reds;
    for (int k = 0; k < N; ++k) {
        int i = r.order[k];
        if (k == 0 || r.d2[i] != r.d2[r.order[k - 1]]) {
            r.group_start.push_back(k);
            gain.push_back(0);
            blues.push_back(0);
            reds.push_back(0);
        }
        if (i < inst.n()) {
            gain.back() += inst.reds[i].penalty;
            ++reds.back();
        } else {
            gain.back() -= inst.blues[i - inst.n()].penalty;
            ++blues.back();
        }
    }
    int G = static_cast<int>(gain.size());
    if (mode == Mode::constraint) {
        int lo = -1, hi = -1;
        for (int g = 0; g < G; ++g)
            if (reds[g]) {
                if (lo < 0) lo = g;
                hi = g;
            }
        if (lo < 0) return r;
        long cnt = 0;
        for (int g = lo; g <= hi; ++g) cnt += blues[g];
        r.any = true;
        r.value = Q(-cnt);
        r.gi = lo;
        r.gj = hi;
        return r;
    }
    // maximum-sum run of groups; first one wins ties
    Q run = 0;
    int start = 0;
    for (int g = 0; g < G; ++g) {
        if (g == 0 || run <= 0) {
            run = gain[g];
            start = g;
        } else {
            run += gain[g];
        }
        if (!r.any || run > r.value) {
            r.any = true;
            r.value = run;
            r.gi = start;
            r.gj = g;
        }
    }
    return r;
}

// Points of groups [gi, gj].
inline std::vector<int> range_points(const RangeChoice& r, int gi, int gj) {
    int end = gj + 1 < static_cast<int>(r.group_start.size()) ? r.group_start[gj + 1] : static_cast<int>(r.order.size());
    return {r.order.begin() + r.group_start[gi], r.order.begin() + end};
}

inline CircAnnulus annulus_through(const Instance& inst, const std::vector<Pt>& pts, const Pt& c,
                                   const std::vector<int>& covered) {
    CircAnnulus a;
    a.center = c;
    bool first = true;
    for (int i : covered) {
        Q d = dist2(c, pts[i]);
        if (first || d < a.r_in_sq) a.r_in_sq = d;
        if (first || d > a.r_out_sq) a.r_out_sq = d;
        first = false;
    }
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        Q d = dist2(c, pts[i]);
        if (d == a.r_in_sq) a.defining.push_back({ref_of(inst, i), static_cast<int>(Circle::inner)});
        if (d == a.r_out_sq) a.defining.push_back({ref_of(inst, i), static_cast<int>(Circle::outer)});
    }
    return a;
}

// Radii at `at` spanned by the reds among `covered` (all covered points if
// there are none).
inline std::pair<Q, Q> red_span(const Instance& inst, const std::vector<Pt>& pts, const Pt& at,
                                const std::vector<int>& covered) {
    std::optional<Q> lo, hi;
    bool any_red = false;
    for (int i : covered) any_red |= i < inst.n();
    for (int i : covered) {
        if (any_red && i >= inst.n()) continue;
        Q d = dist2(at, pts[i]);
        if (!lo || d < *lo) lo = d;
        if (!hi || d > *hi) hi = d;
    }
    return {*lo, *hi};
}

}  // namespace circ_detail

// Defining structure of the annulus spanned at the candidate center.
inline bool property1_structure(const CircCandidate& c) {
    std::set<PointRef> in, out;
    for (const auto& d : c.tuple) (d.side == static_cast<int>(Circle::inner) ? in : out).insert(d.point);
    std::size_t a = out.size(), b = in.size();
    return (a >= 3 && b >= 1) || (b >= 3 && a >= 1) || (a >= 2 && b >= 2);
}

// Witness annulus of a candidate: centred at the shifted center, with radii
// spanned by the reds the unshifted annulus covered.
inline CircAnnulus witness_annulus(const CircCandidate& cand, const Instance& inst) {
    using namespace circ_detail;
    auto pts = instance_points(inst);
    std::optional<Q> rin, rout;
    for (const auto& d : cand.tuple) {
        Q v = dist2(cand.center, pts[d.point.color == Color::red ? d.point.index : inst.n() + d.point.index]);
        if (d.side == static_cast<int>(Circle::inner)) rin = v;
        if (d.side == static_cast<int>(Circle::outer)) rout = v;
    }
    std::vector<int> kept;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        Q v = dist2(cand.center, pts[i]);
        if (rin && rout && *rin <= v && v <= *rout) kept.push_back(i);
    }
    auto [lo, hi] = red_span(inst, pts, cand.shifted_center, kept);
    CircAnnulus w;
    w.center = cand.shifted_center;
    w.r_in_sq = lo;
    w.r_out_sq = hi;
    return w;
}

// Blue defining points that the shift removes. The recount must show that the
// witness covers exactly the unshifted cover minus those blues; otherwise
// nothing is certified.
inline std::vector<int> certify_shift(const CircCandidate& cand, const Instance& inst) {
    using namespace circ_detail;
    if (cand.tuple.empty()) return {};
    auto pts = instance_points(inst);
    std::optional<Q> rin, rout;
    for (const auto& d : cand.tuple) {
        int i = d.point.color == Color::red ? d.point.index : inst.n() + d.point.index;
        Q v = dist2(cand.center, pts[i]);
        if (d.side == static_cast<int>(Circle::inner)) rin = v;
        if (d.side == static_cast<int>(Circle::outer)) rout = v;
    }
    if (!rin || !rout) return {};
    CircAnnulus w = witness_annulus(cand, inst);
    std::vector<int> removed;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        Q v = dist2(cand.center, pts[i]);
        bool before = *rin <= v && v <= *rout;
        bool after = covers(w, pts[i]);
        if (after && !before) return {};
        if (before && !after) {
            bool on_boundary = v == *rin || v == *rout;
            if (i < inst.n() || !on_boundary) return {};
            removed.push_back(i - inst.n());
        }
    }
    return removed;
}

namespace circ_detail {

// The candidate's witness covers exactly the given points.
inline bool witness_matches(const CircCandidate& cand, const Instance& inst, std::vector<int> covered) {
    auto pts = instance_points(inst);
    CircAnnulus w = witness_annulus(cand, inst);
    std::vector<int> got;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
        if (covers(w, pts[i])) got.push_back(i);
    std::sort(covered.begin(), covered.end());
    return got == covered;
}

inline CircCandidate make_candidate(const Instance& inst, const std::vector<Pt>& pts, const Sample& s,
                                    const std::vector<int>& covered) {
    CircCandidate cand;
    cand.center = s.parent;
    cand.shifted_center = s.c;
    cand.case_tag = s.tag;
    auto [lo, hi] = red_span(inst, pts, s.parent, covered);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        Q d = dist2(s.parent, pts[i]);
        if (d == lo) cand.tuple.push_back({ref_of(inst, i), static_cast<int>(Circle::inner)});
        if (d == hi) cand.tuple.push_back({ref_of(inst, i), static_cast<int>(Circle::outer)});
    }
    cand.removable_blue_ids = certify_shift(cand, inst);
    return cand;
}

// The optimum over the samples. Among optimal ranges, one whose candidate has
// the four-point defining structure is preferred.
inline Solution pick(const Instance& inst, Mode mode, const std::vector<Sample>& samples, long long& ops) {
    auto pts = instance_points(inst);
    Solution sol;
    sol.variant = Variant::circ;
    sol.mode = mode;
    std::optional<Q> best;
    if (mode == Mode::penalized) best = Q(0);
    std::vector<RangeChoice> evals;
    evals.reserve(samples.size());
    for (const auto& s : samples) {
        ++ops;
        evals.push_back(evaluate(inst, pts, s.c, mode));
        const auto& e = evals.back();
        if (e.any && (!best || e.value > *best)) best = e.value;
    }
    std::optional<std::pair<std::size_t, std::vector<int>>> chosen;
    std::optional<CircCandidate> chosen_cand;
    bool chosen_good = false;
    bool empty_best = mode == Mode::penalized && *best == 0;
    if (!empty_best) {
        for (std::size_t k = 0; k < samples.size() && !chosen_good; ++k) {
            const auto& e = evals[k];
            if (!e.any || e.value != *best) continue;
            std::vector<std::pair<int, int>> ranges;
            if (mode == Mode::constraint) {
                ranges.push_back({e.gi, e.gj});
            } else {
                int G = static_cast<int>(e.group_start.size());
                for (int i = 0; i < G; ++i) {
                    Q g = 0;
                    for (int j = i; j < G; ++j) {
                        for (int p : range_points(e, j, j)) g += p < inst.n() ? inst.reds[p].penalty : -inst.blues[p - inst.n()].penalty;
                        if (g == *best) ranges.push_back({i, j});
                    }
                }
            }
            for (const auto& [i, j] : ranges) {
                auto cov = range_points(e, i, j);
                CircCandidate cand = make_candidate(inst, pts, samples[k], cov);
                bool good = property1_structure(cand) && witness_matches(cand, inst, cov);
                if (!chosen || good) {
                    chosen = std::make_pair(k, cov);
                    chosen_cand = cand;
                    chosen_good = good;
                }
                if (good) break;
            }
        }
    }
    if (chosen) {
        sol.annulus = annulus_through(inst, pts, samples[chosen->first].c, chosen->second);
        sol.circ_candidate.push_back(*chosen_cand);
    }
    sol.feasible = best.has_value() || (mode == Mode::constraint && inst.n() == 0);
    fill_coverage(inst, sol);
    sol.lambda = penalty_of(inst, sol.annulus, mode).value;
    sol.op_count = ops;
    return sol;
}

inline std::vector<Sample> arrangement_samples(const std::vector<Pt>& pts, const std::string& tag) {
    std::vector<Sample> out;
    auto lines = all_bisectors(pts);
    auto verts = line_vertices(lines);
    if (verts.empty()) {
        parallel_samples(lines, pts, out);
        return out;
    }
    for (const auto& v : verts) sector_samples(v, lines, tag, out);
    // midpoints of pairs and the points themselves carry the diametric and single-point structures
    for (std::size_t i = 0; i < pts.size(); ++i) {
        sector_samples(pts[i], lines, "point", out);
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] != pts[j])
                sector_samples({(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2}, lines, "diametric", out);
    }
    return out;
}

}  // namespace circ_detail

// Penalized circular annulus: centers at every crossing of two bisectors
// (circumcenters and bisector-bisector crossings), each shifted into every
// adjacent face, partner radii from the best run of sorted distances.
inline Solution solve_grbcac(const Instance& inst) {
    using namespace circ_detail;
    if (inst.dim != 2) throw GeometryError("solve_grbcac needs a 2D instance");
    long long ops = 0;
    auto pts = instance_points(inst);
    if (pts.empty()) return pick(inst, Mode::penalized, {}, ops);
    return pick(inst, Mode::penalized, arrangement_samples(pts, "bisector-vertex"), ops);
}

// Constraint circular annulus. A blue b is covered at center c exactly when
// its distance lies between the nearest and farthest red, so the count only
// changes across the boundary of b's cell in VD(R + b) and of b's region in
// FVD(R + b). Candidates are the vertices of those boundaries and their
// crossings, each shifted into the adjacent faces.
inline Solution solve_rbcac(const Instance& inst) {
    using namespace circ_detail;
    if (inst.dim != 2) throw GeometryError("solve_rbcac needs a 2D instance");
    long long ops = 0;
    auto pts = instance_points(inst);
    if (inst.n() == 0) return pick(inst, Mode::constraint, {}, ops);
    std::vector<Pt> reds;
    for (const auto& r : inst.reds) reds.push_back(r.p);
    auto lines = all_bisectors(pts);
    std::vector<Sample> samples;

    bool degenerate = inst.m() == 0;
    std::vector<int> free_blues;  // blues not coincident with a red
    for (int j = 0; j < inst.m(); ++j) {
        bool on_red = std::find(reds.begin(), reds.end(), inst.blues[j].p) != reds.end();
        if (on_red) continue;
        free_blues.push_back(j);
        auto with = reds;
        with.push_back(inst.blues[j].p);
        if (collinear(with)) degenerate = true;
    }
    if (free_blues.empty()) degenerate = true;
    if (degenerate) {
        // Only red distances matter or some curve is a bare line; every face
        // of the full bisector arrangement is sampled instead.
        return pick(inst, Mode::constraint, arrangement_samples(pts, "collinear"), ops);
    }

    VoronoiDiagram vd = build_nearest(reds), fvd = build_farthest(reds);
    int nb = static_cast<int>(reds.size());  // index of the first inserted blue
    std::set<Pt> seen;
    auto add = [&](const Pt& v, const std::string& tag) {
        if (seen.insert(v).second) sector_samples(v, lines, tag, samples);
    };
    std::vector<VoronoiDiagram> vd1, fvd1;
    for (int j : free_blues) {
        vd1.push_back(insert_sites(vd, {inst.blues[j].p}));
        fvd1.push_back(insert_sites(fvd, {inst.blues[j].p}));
        for (const auto& v : vd1.back().vertices)
            if (vd1.back().incident(v, nb)) add(v.p, "nearest-blue-vertex");
        for (const auto& v : fvd1.back().vertices)
            if (fvd1.back().incident(v, nb)) add(v.p, "farthest-blue-vertex");
    }
    for (std::size_t a = 0; a < free_blues.size(); ++a) {
        for (std::size_t b = 0; b < free_blues.size(); ++b) {
            auto cr = cross_intersections(vd1[a], fvd1[b], nb, nb);
            for (const auto& p : cr.points) add(p, "nearest-farthest-cross");
            if (b <= a) continue;
            const Pt& pb = inst.blues[free_blues[b]].p;
            auto vd2 = insert_sites(vd1[a], {pb});
            auto fvd2 = insert_sites(fvd1[a], {pb});
            for (const auto& v : vd2.vertices)
                if (vd2.incident(v, nb) && vd2.incident(v, nb + 1)) add(v.p, "nearest-blue-pair");
            for (const auto& v : fvd2.vertices)
                if (fvd2.incident(v, nb) && fvd2.incident(v, nb + 1)) add(v.p, "farthest-blue-pair");
        }
    }
    if (samples.empty()) return pick(inst, Mode::constraint, arrangement_samples(pts, "collinear"), ops);
    return pick(inst, Mode::constraint, samples, ops);
}

// Exact |sqrt(a) - sqrt(b)| kept as the pair (a, b) of squared lengths.
struct SqrtGap {
    Q a, b;
    bool infinite = false;

    double approx() const;
};

namespace circ_detail {

// Sign of u + w*sqrt(p), p >= 0.
inline int sign_sqrt(const Q& u, const Q& w, const Q& p) {
    int su = sgn(u), sw = p == 0 ? 0 : sgn(w);
    if (sw == 0) return su;
    if (su == 0) return sw;
    if (su == sw) return su;
    Q lhs = u * u, rhs = w * w * p;
    if (lhs == rhs) return 0;
    return lhs > rhs ? su : sw;
}

// Sign of x + y*sqrt(p) + z*sqrt(q), p, q >= 0.
inline int sign_sqrt2(const Q& x, const Q& y, const Q& p, const Q& z, const Q& q) {
    int sa = sign_sqrt(x, y, p);
    int sb = q == 0 ? 0 : sgn(z);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // compare (x + y sqrt p)^2 with z^2 q
    int c = sign_sqrt(x * x + y * y * p - z * z * q, 2 * x * y, p);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

}  // namespace circ_detail

// Compares |sqrt a - sqrt b| with |sqrt c - sqrt d| exactly.
inline int compare(const SqrtGap& u, const SqrtGap& v) {
    if (u.infinite || v.infinite) return u.infinite == v.infinite ? 0 : (u.infinite ? 1 : -1);
    // squares: a + b - 2 sqrt(ab) versus c + d - 2 sqrt(cd)
    return circ_detail::sign_sqrt2(u.a + u.b - v.a - v.b, Q(-2), u.a * u.b, Q(2), v.a * v.b);
}

inline bool operator<(const SqrtGap& u, const SqrtGap& v) { return compare(u, v) < 0; }
inline bool operator==(const SqrtGap& u, const SqrtGap& v) { return compare(u, v) == 0; }
inline bool is_zero(const SqrtGap& g) { return !g.infinite && g.a == g.b; }

inline double SqrtGap::approx() const {
    if (infinite) return std::numeric_limits<double>::infinity();
    return std::abs(std::sqrt(a.get_d()) - std::sqrt(b.get_d()));
}

// Smallest distance from a point off the boundary list to the nearer circle;
// zero when an unlisted point sits on a circle, infinite when no point is left.
inline SqrtGap compute_delta(const CircAnnulus& ann, const Instance& inst) {
    SqrtGap best{Q(0), Q(0), true};
    auto visit = [&](const Pt& p, PointRef ref) {
        for (const auto& d : ann.defining)
            if (d.point == ref) return;
        Q d2 = dist2(ann.center, p);
        for (const Q& r : {ann.r_in_sq, ann.r_out_sq}) {
            SqrtGap g{d2, r, false};
            if (best.infinite || g < best) best = g;
        }
    };
    for (int i = 0; i < inst.n(); ++i) visit(inst.reds[i].p, {Color::red, i});
    for (int j = 0; j < inst.m(); ++j) visit(inst.blues[j].p, {Color::blue, j});
    return best;
}

}  // namespace rbac
