#pragma once

#include "rbac/geom_core.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace rbac {

struct VVertex {
    Pt p;
    Q r2;                    // squared distance to every annotated site
    std::vector<int> sites;  // sorted, at least three
};

// Part of the bisector of sites i < j: the points mid + t * dir with t in
// [lo, hi], either bound possibly infinite.
struct VEdge {
    int i = 0, j = 0;
    Pt mid, dir;
    std::optional<Q> lo, hi;

    Pt at(const Q& t) const { return {mid.x + t * dir.x, mid.y + t * dir.y}; }
    bool is_segment() const { return lo && hi; }
    bool is_line() const { return !lo && !hi; }
    bool contains_param(const Q& t) const { return (!lo || *lo <= t) && (!hi || t <= *hi); }
};

enum class EdgeShape : std::uint8_t { segment, ray, line };

// Origin/direction form of an edge: a segment from a to b, a ray from a along
// d, or a full line given as the two opposite rays from a along d and -d.
struct EdgeGeometry {
    EdgeShape shape;
    Pt a, b, d;
};

inline EdgeGeometry geometry(const VEdge& e) {
    if (e.is_segment()) return {EdgeShape::segment, e.at(*e.lo), e.at(*e.hi), {}};
    if (e.lo) return {EdgeShape::ray, e.at(*e.lo), {}, e.dir};
    if (e.hi) return {EdgeShape::ray, e.at(*e.hi), {}, {-e.dir.x, -e.dir.y}};
    return {EdgeShape::line, e.mid, {}, e.dir};
}

struct VoronoiDiagram {
    bool farthest = false;
    std::vector<Pt> sites;
    std::vector<VVertex> vertices;
    std::vector<VEdge> edges;

    // Sites whose cells share an edge.
    std::map<int, std::set<int>> adjacency() const {
        std::map<int, std::set<int>> adj;
        for (const auto& e : edges) {
            adj[e.i].insert(e.j);
            adj[e.j].insert(e.i);
        }
        return adj;
    }
    // Sites owning a nonempty cell.
    std::set<int> cells() const {
        std::set<int> c;
        for (const auto& e : edges) {
            c.insert(e.i);
            c.insert(e.j);
        }
        if (sites.size() == 1) c.insert(0);
        return c;
    }
    bool incident(const VVertex& v, int site) const {
        return std::binary_search(v.sites.begin(), v.sites.end(), site);
    }
};

namespace vor_detail {

inline std::optional<Pt> circumcenter(const Pt& a, const Pt& b, const Pt& c) {
    Q d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (d == 0) return std::nullopt;
    Q a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, c2 = c.x * c.x + c.y * c.y;
    return Pt{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
              (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
}

// Site s dominates the pair at c: strictly closer (nearest) or strictly
// farther (farthest) than the pair's common distance r2.
inline bool dominates(bool farthest, const Q& ds, const Q& r2) { return farthest ? ds > r2 : ds < r2; }

// Restricts the parameter interval of edge e by the condition that site s
// does not dominate.
inline void clip(VEdge& e, const std::vector<Pt>& sites, int s, bool farthest) {
    const Pt& p = sites[e.i];
    const Pt& q = sites[s];
    // |c-p|^2 - |c-q|^2 = 2c.(q-p) - (|q|^2-|p|^2) =: A t + B; nearest needs <= 0, farthest >= 0
    Pt dq{q.x - p.x, q.y - p.y};
    Q A = 2 * (e.dir.x * dq.x + e.dir.y * dq.y);
    Q B = 2 * (e.mid.x * dq.x + e.mid.y * dq.y) - (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y);
    if (farthest) {
        A = -A;
        B = -B;
    }
    // need A t + B <= 0
    if (A == 0) {
        if (B > 0) {
            e.lo = Q(1);
            e.hi = Q(0);  // empty
        }
        return;
    }
    Q t = -B / A;
    if (A > 0) {
        if (!e.hi || t < *e.hi) e.hi = t;
    } else {
        if (!e.lo || t > *e.lo) e.lo = t;
    }
}

inline bool proper(const VEdge& e) { return !(e.lo && e.hi && *e.lo >= *e.hi); }

inline VEdge pair_edge(const std::vector<Pt>& sites, int i, int j, bool farthest) {
    VEdge e;
    e.i = i;
    e.j = j;
    const Pt& p = sites[i];
    const Pt& q = sites[j];
    e.mid = {(p.x + q.x) / 2, (p.y + q.y) / 2};
    e.dir = {p.y - q.y, q.x - p.x};
    for (int s = 0; s < static_cast<int>(sites.size()) && proper(e); ++s)
        if (s != i && s != j) clip(e, sites, s, farthest);
    return e;
}

inline std::optional<VVertex> triple_vertex(const std::vector<Pt>& sites, int i, int j, int k, bool farthest) {
    auto c = circumcenter(sites[i], sites[j], sites[k]);
    if (!c) return std::nullopt;
    Q r2 = dist2(*c, sites[i]);
    VVertex v{*c, r2, {}};
    for (int s = 0; s < static_cast<int>(sites.size()); ++s) {
        Q ds = dist2(*c, sites[s]);
        if (dominates(farthest, ds, r2)) return std::nullopt;
        if (ds == r2) v.sites.push_back(s);
    }
    return v;
}

inline void add_vertex(std::vector<VVertex>& vs, VVertex v) {
    for (auto& w : vs)
        if (w.p == v.p) return;
    vs.push_back(std::move(v));
}

inline void normalize(VoronoiDiagram& d) {
    std::sort(d.vertices.begin(), d.vertices.end(), [](const VVertex& a, const VVertex& b) { return a.p < b.p; });
    std::sort(d.edges.begin(), d.edges.end(),
              [](const VEdge& a, const VEdge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
}

inline void check_distinct(const std::vector<Pt>& sites) {
    std::set<Pt> seen;
    for (const auto& s : sites)
        if (!seen.insert(s).second) throw GeometryError("coincident Voronoi sites");
}

inline VoronoiDiagram build(const std::vector<Pt>& sites, bool farthest) {
    if (sites.empty()) throw GeometryError("Voronoi diagram needs at least one site");
    check_distinct(sites);
    VoronoiDiagram d;
    d.farthest = farthest;
    d.sites = sites;
    int k = static_cast<int>(sites.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            VEdge e = pair_edge(sites, i, j, farthest);
            if (proper(e)) d.edges.push_back(e);
            for (int l = j + 1; l < k; ++l)
                if (auto v = triple_vertex(sites, i, j, l, farthest)) add_vertex(d.vertices, *v);
        }
    normalize(d);
    return d;
}

}  // namespace vor_detail

inline VoronoiDiagram build_nearest(const std::vector<Pt>& sites) { return vor_detail::build(sites, false); }
inline VoronoiDiagram build_farthest(const std::vector<Pt>& sites) { return vor_detail::build(sites, true); }

// Adds one or two sites by updating the existing vertices and edges against
// the newcomers and creating only the features that involve them.
inline VoronoiDiagram insert_sites(const VoronoiDiagram& d, const std::vector<Pt>& added) {
    using namespace vor_detail;
    VoronoiDiagram out = d;
    for (const Pt& p : added) {
        int s = static_cast<int>(out.sites.size());
        for (const auto& q : out.sites)
            if (q == p) throw GeometryError("inserted site coincides with an existing site");
        out.sites.push_back(p);
        std::vector<VVertex> kept;
        for (auto& v : out.vertices) {
            Q ds = dist2(v.p, p);
            if (dominates(out.farthest, ds, v.r2)) continue;
            if (ds == v.r2) v.sites.push_back(s);
            kept.push_back(v);
        }
        std::vector<VEdge> edges;
        for (auto e : out.edges) {
            clip(e, out.sites, s, out.farthest);
            if (proper(e)) edges.push_back(e);
        }
        for (int i = 0; i < s; ++i) {
            VEdge e = pair_edge(out.sites, i, s, out.farthest);
            if (proper(e)) edges.push_back(e);
            for (int j = i + 1; j < s; ++j)
                if (auto v = triple_vertex(out.sites, i, j, s, out.farthest)) add_vertex(kept, *v);
        }
        out.vertices = std::move(kept);
        out.edges = std::move(edges);
        normalize(out);
    }
    return out;
}

// Closest (or farthest) sites to q; all tied sites are returned.
inline std::vector<int> locate(const VoronoiDiagram& d, const Pt& q) {
    std::vector<int> best;
    Q bd;
    for (int i = 0; i < static_cast<int>(d.sites.size()); ++i) {
        Q di = dist2(q, d.sites[i]);
        if (best.empty() || (d.farthest ? di > bd : di < bd)) {
            best = {i};
            bd = di;
        } else if (di == bd) {
            best.push_back(i);
        }
    }
    return best;
}

inline bool same_diagram(const VoronoiDiagram& a, const VoronoiDiagram& b) {
    if (a.farthest != b.farthest || a.sites != b.sites || a.vertices.size() != b.vertices.size() ||
        a.edges.size() != b.edges.size())
        return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        auto sa = a.vertices[i].sites, sb = b.vertices[i].sites;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (a.vertices[i].p != b.vertices[i].p || sa != sb) return false;
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const auto &e = a.edges[i], &f = b.edges[i];
        if (e.i != f.i || e.j != f.j || e.lo != f.lo || e.hi != f.hi) return false;
    }
    return true;
}

struct CrossResult {
    std::vector<Pt> points;
    bool overlap = false;  // some pair of edges shares a stretch of positive length
};

// Points where an edge of d1 meets an edge of d2, optionally only edges on the
// boundary of one cell of each diagram.
inline CrossResult cross_intersections(const VoronoiDiagram& d1, const VoronoiDiagram& d2,
                                       std::optional<int> cell1 = std::nullopt,
                                       std::optional<int> cell2 = std::nullopt) {
    CrossResult res;
    std::set<Pt> found;
    for (const auto& e : d1.edges) {
        if (cell1 && e.i != *cell1 && e.j != *cell1) continue;
        for (const auto& f : d2.edges) {
            if (cell2 && f.i != *cell2 && f.j != *cell2) continue;
            // e.mid + t e.dir = f.mid + u f.dir
            Q det = e.dir.x * (-f.dir.y) + f.dir.x * e.dir.y;
            Pt w{f.mid.x - e.mid.x, f.mid.y - e.mid.y};
            if (det == 0) {
                // parallel: overlapping only if collinear
                if (w.x * e.dir.y - w.y * e.dir.x != 0) continue;
                // parametrize f's stretch on e's line
                Q n2 = e.dir.x * e.dir.x + e.dir.y * e.dir.y;
                Q off = (w.x * e.dir.x + w.y * e.dir.y) / n2;
                Q scale = (f.dir.x * e.dir.x + f.dir.y * e.dir.y) / n2;
                std::optional<Q> flo, fhi;
                auto map = [&](const std::optional<Q>& u) -> std::optional<Q> {
                    if (!u) return std::nullopt;
                    return off + scale * *u;
                };
                if (scale > 0) {
                    flo = map(f.lo);
                    fhi = map(f.hi);
                } else {
                    flo = map(f.hi);
                    fhi = map(f.lo);
                }
                std::optional<Q> lo = e.lo, hi = e.hi;
                if (flo && (!lo || *flo > *lo)) lo = flo;
                if (fhi && (!hi || *fhi < *hi)) hi = fhi;
                if (lo && hi && *lo > *hi) continue;
                if (lo && hi && *lo == *hi) {
                    found.insert(e.at(*lo));
                } else {
                    res.overlap = true;
                }
                continue;
            }
            Q t = (w.x * (-f.dir.y) + f.dir.x * w.y) / det;
            Q u = (e.dir.x * w.y - e.dir.y * w.x) / det;
            if (e.contains_param(t) && f.contains_param(u)) found.insert(e.at(t));
        }
    }
    res.points.assign(found.begin(), found.end());
    return res;
}

}  // namespace rbac
