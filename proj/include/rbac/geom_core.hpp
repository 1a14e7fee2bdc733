#pragma once

#include "rbac/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rbac {

struct Pt {
    Q x, y;
    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
    friend bool operator<(const Pt& a, const Pt& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

inline Q dist2(const Pt& a, const Pt& b) {
    Q dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

struct WPoint {
    Pt p;
    Q penalty;
};

enum class Color : std::uint8_t { red, blue };

struct PointRef {
    Color color;
    int index;
    friend bool operator==(const PointRef& a, const PointRef& b) { return a.color == b.color && a.index == b.index; }
    friend bool operator<(const PointRef& a, const PointRef& b) {
        return a.color != b.color ? a.color < b.color : a.index < b.index;
    }
};

class GeometryError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    int dim = 2;
    std::vector<WPoint> reds, blues;
    std::string id;

    int n() const { return static_cast<int>(reds.size()); }
    int m() const { return static_cast<int>(blues.size()); }
    const WPoint& at(PointRef r) const { return r.color == Color::red ? reds[r.index] : blues[r.index]; }

    void validate() const {
        if (dim != 1 && dim != 2) throw GeometryError("dimension must be 1 or 2");
        auto check = [&](const std::vector<WPoint>& pts, const char* what) {
            std::set<Pt> seen;
            for (const auto& w : pts) {
                if (w.penalty <= 0) throw GeometryError(std::string("non-positive penalty on ") + what + " point");
                if (dim == 1 && w.p.y != 0) throw GeometryError("1D instance with nonzero y coordinate");
                if (!seen.insert(w.p).second) throw GeometryError(std::string("duplicate ") + what + " point");
            }
        };
        check(reds, "red");
        check(blues, "blue");
    }

    Q total_red_penalty() const {
        Q s = 0;
        for (const auto& r : reds) s += r.penalty;
        return s;
    }
    Q total_blue_penalty() const {
        Q s = 0;
        for (const auto& b : blues) s += b.penalty;
        return s;
    }
};

enum class Mode : std::uint8_t { constraint, penalized };
enum class Shape1D : std::uint8_t { nonuniform, uniform };
enum class RectShape : std::uint8_t { nnc, nc, uniform };
enum class RectClass : std::uint8_t { uniform, nonuniform_concentric, nonuniform_nonconcentric };
enum class Circle : std::uint8_t { inner, outer };

// Side indices into RectAnnulus::side_open and defining point records.
enum Side : int { OL = 0, OR = 1, OB = 2, OT = 3, IL = 4, IR = 5, IB = 6, IT = 7 };

struct Rect {
    Q left, right, bottom, top;
};

struct DefPoint {
    PointRef point;
    int side;  // Side for rectangles, 0..3 for intervals (L_o, L_i, R_i, R_o), Circle for circles
};

struct RectAnnulus {
    Rect outer, inner;
    std::array<bool, 8> side_open{};
    std::vector<DefPoint> defining;

    Q wl() const { return inner.left - outer.left; }
    Q wr() const { return outer.right - inner.right; }
    Q wt() const { return outer.top - inner.top; }
    Q wb() const { return inner.bottom - outer.bottom; }

    bool valid() const {
        return outer.left <= inner.left && inner.left <= inner.right && inner.right <= outer.right &&
               outer.bottom <= inner.bottom && inner.bottom <= inner.top && inner.top <= outer.top;
    }
};

// Endpoint order for IntervalPair::endpoint_open: L_o, L_i, R_i, R_o.
struct IntervalPair {
    Q lo, li, ri, ro;
    std::array<bool, 4> endpoint_open{};
    std::vector<DefPoint> defining;

    bool valid() const { return lo <= li && li <= ri && ri <= ro; }
};

struct CircAnnulus {
    Pt center;
    Q r_in_sq, r_out_sq;
    std::array<bool, 2> boundary_open{};  // inner, outer
    std::vector<DefPoint> defining;

    bool valid() const { return 0 <= r_in_sq && r_in_sq <= r_out_sq; }
};

struct EmptyAnnulus {};

using Annulus = std::variant<EmptyAnnulus, IntervalPair, RectAnnulus, CircAnnulus>;

// Per-axis coverage test shared by intervals and rectangles: closed outer
// interval unless flagged, open hole unless flagged.
inline bool axis_in_outer(const Q& v, const Q& lo, const Q& hi, bool open_lo, bool open_hi) {
    return (open_lo ? v > lo : v >= lo) && (open_hi ? v < hi : v <= hi);
}
inline bool axis_in_hole(const Q& v, const Q& lo, const Q& hi, bool open_lo, bool open_hi) {
    return (open_lo ? v >= lo : v > lo) && (open_hi ? v <= hi : v < hi);
}

inline bool covers(const IntervalPair& a, const Q& x) {
    const auto& f = a.endpoint_open;
    return axis_in_outer(x, a.lo, a.ro, f[0], f[3]) && !axis_in_hole(x, a.li, a.ri, f[1], f[2]);
}

inline bool covers(const RectAnnulus& a, const Pt& p) {
    const auto& f = a.side_open;
    bool in_outer = axis_in_outer(p.x, a.outer.left, a.outer.right, f[OL], f[OR]) &&
                    axis_in_outer(p.y, a.outer.bottom, a.outer.top, f[OB], f[OT]);
    if (!in_outer) return false;
    bool in_hole = axis_in_hole(p.x, a.inner.left, a.inner.right, f[IL], f[IR]) &&
                   axis_in_hole(p.y, a.inner.bottom, a.inner.top, f[IB], f[IT]);
    return !in_hole;
}

inline bool covers(const CircAnnulus& a, const Pt& p) {
    Q d = dist2(a.center, p);
    bool in_outer = a.boundary_open[1] ? d < a.r_out_sq : d <= a.r_out_sq;
    bool in_hole = a.boundary_open[0] ? d <= a.r_in_sq : d < a.r_in_sq;
    return in_outer && !in_hole;
}

inline bool covers(const Annulus& a, const Pt& p, int dim) {
    return std::visit(
        [&](const auto& ann) -> bool {
            using T = std::decay_t<decltype(ann)>;
            if constexpr (std::is_same_v<T, EmptyAnnulus>) {
                return false;
            } else if constexpr (std::is_same_v<T, IntervalPair>) {
                if (dim != 1) throw GeometryError("interval pair applied to a 2D point");
                return covers(ann, p.x);
            } else {
                if (dim != 2) throw GeometryError("planar annulus applied to a 1D point");
                return covers(ann, p);
            }
        },
        a);
}

struct Coverage {
    std::vector<int> covered_blue, uncovered_red;
};

inline Coverage coverage_of(const Instance& inst, const Annulus& a) {
    Coverage c;
    for (int i = 0; i < inst.n(); ++i)
        if (!covers(a, inst.reds[i].p, inst.dim)) c.uncovered_red.push_back(i);
    for (int j = 0; j < inst.m(); ++j)
        if (covers(a, inst.blues[j].p, inst.dim)) c.covered_blue.push_back(j);
    return c;
}

struct Penalty {
    bool feasible = true;
    Q value = 0;
};

inline Penalty penalty_of(const Instance& inst, const Annulus& a, Mode mode) {
    Coverage c = coverage_of(inst, a);
    Penalty out;
    if (mode == Mode::constraint) {
        out.feasible = c.uncovered_red.empty();
        out.value = Q(static_cast<long>(c.covered_blue.size()));
        return out;
    }
    for (int i : c.uncovered_red) out.value += inst.reds[i].penalty;
    for (int j : c.covered_blue) out.value += inst.blues[j].penalty;
    return out;
}

inline RectClass classify_rect(const RectAnnulus& a) {
    Q l = a.wl(), r = a.wr(), t = a.wt(), b = a.wb();
    if (l == r && r == t && t == b) {
        if ((a.outer.left + a.outer.right) != (a.inner.left + a.inner.right) ||
            (a.outer.bottom + a.outer.top) != (a.inner.bottom + a.inner.top))
            throw GeometryError("uniform annulus with distinct centers");
        return RectClass::uniform;
    }
    if (l == r && t == b) return RectClass::nonuniform_concentric;
    return RectClass::nonuniform_nonconcentric;
}

enum class Variant : std::uint8_t {
    d1_nonuniform,
    d1_uniform,
    rect_nnc,
    rect_nc,
    rect_uniform,
    restricted_uniform,
    restricted_nc,
    restricted_nnc,
    circ
};

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::d1_nonuniform: return "1d-nu";
        case Variant::d1_uniform: return "1d-u";
        case Variant::rect_nnc: return "rect-nnc";
        case Variant::rect_nc: return "rect-nc";
        case Variant::rect_uniform: return "rect-u";
        case Variant::restricted_uniform: return "restricted-u";
        case Variant::restricted_nc: return "restricted-nc";
        case Variant::restricted_nnc: return "restricted-nnc";
        case Variant::circ: return "circ";
    }
    return "?";
}

inline const char* mode_name(Mode m) { return m == Mode::constraint ? "constraint" : "penalized"; }

// Defining structure of a circular candidate: the center before the
// infinitesimal shift, the points that pin it, and the shift that was applied.
struct CircCandidate {
    Pt center;
    std::vector<DefPoint> tuple;
    std::vector<int> removable_blue_ids;
    std::string case_tag;
    Pt shifted_center;
};

struct Solution {
    Variant variant = Variant::d1_nonuniform;
    Mode mode = Mode::penalized;
    bool feasible = true;
    Q lambda = 0;
    Annulus annulus = EmptyAnnulus{};
    std::vector<int> covered_blue_ids, uncovered_red_ids;
    std::vector<CircCandidate> circ_candidate;  // at most one entry
    long long op_count = 0;
};

inline void fill_coverage(const Instance& inst, Solution& s) {
    Coverage c = coverage_of(inst, s.annulus);
    s.covered_blue_ids = c.covered_blue;
    s.uncovered_red_ids = c.uncovered_red;
}

// Recomputes lambda from the index sets; used to check the Solution invariant.
inline Q lambda_from_sets(const Instance& inst, const Solution& s) {
    if (s.mode == Mode::constraint) return Q(static_cast<long>(s.covered_blue_ids.size()));
    Q v = 0;
    for (int i : s.uncovered_red_ids) v += inst.reds[i].penalty;
    for (int j : s.covered_blue_ids) v += inst.blues[j].penalty;
    return v;
}

inline bool solution_consistent(const Instance& inst, const Solution& s) {
    Coverage c = coverage_of(inst, s.annulus);
    if (c.covered_blue != s.covered_blue_ids || c.uncovered_red != s.uncovered_red_ids) return false;
    if (s.mode == Mode::constraint && !s.uncovered_red_ids.empty()) return false;
    return s.feasible ? lambda_from_sets(inst, s) == s.lambda : true;
}

}  // namespace rbac
