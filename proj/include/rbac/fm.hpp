#pragma once

#include "rbac/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rbac {

// Linear constraint  sum a[i] * x[i]  (< or <=)  b.
template <class V>
struct LinCon {
    std::vector<Q> a;
    V b;
    bool strict = false;
};

template <class V>
struct Range {
    bool feasible = true;
    std::optional<V> lo, hi;
    bool lo_strict = false, hi_strict = false;

    bool contains(const V& v) const {
        if (!feasible) return false;
        if (lo && (lo_strict ? !(*lo < v) : !(*lo <= v))) return false;
        if (hi && (hi_strict ? !(v < *hi) : !(v <= *hi))) return false;
        return true;
    }
};

template <class V>
class LinSystem {
   public:
    explicit LinSystem(int nvars = 0) : n_(nvars) {}

    int nvars() const { return n_; }
    const std::vector<LinCon<V>>& constraints() const { return cons_; }
    bool trivially_infeasible() const { return bad_; }

    void add(std::vector<Q> a, V b, bool strict) {
        a.resize(n_);
        bool zero = true;
        for (const auto& c : a)
            if (c != 0) zero = false;
        if (zero) {
            int s = sign_of(b);
            if (s < 0 || (s == 0 && strict)) bad_ = true;
            return;
        }
        cons_.push_back({std::move(a), std::move(b), strict});
    }
    void le(std::vector<Q> a, V b) { add(std::move(a), std::move(b), false); }
    void lt(std::vector<Q> a, V b) { add(std::move(a), std::move(b), true); }
    void ge(std::vector<Q> a, V b) {
        for (auto& c : a) c = -c;
        add(std::move(a), -b, false);
    }
    void gt(std::vector<Q> a, V b) {
        for (auto& c : a) c = -c;
        add(std::move(a), -b, true);
    }
    void eq(const std::vector<Q>& a, const V& b) {
        le(a, b);
        ge(a, b);
    }

    // x[var] fixed to value: coefficient folded into the right-hand side.
    LinSystem substituted(int var, const V& value) const {
        LinSystem out(n_);
        out.bad_ = bad_;
        for (const auto& c : cons_) {
            std::vector<Q> a = c.a;
            V b = c.b - a[var] * value;
            a[var] = 0;
            out.add(std::move(a), std::move(b), c.strict);
        }
        return out;
    }

    LinSystem eliminated(int var) const {
        LinSystem out(n_);
        out.bad_ = bad_;
        std::vector<const LinCon<V>*> pos, neg;
        for (const auto& c : cons_) {
            int s = ::sgn(c.a[var]);
            if (s > 0)
                pos.push_back(&c);
            else if (s < 0)
                neg.push_back(&c);
            else
                out.add(c.a, c.b, c.strict);
        }
        for (const auto* p : pos) {
            for (const auto* q : neg) {
                Q kp = -q->a[var];  // > 0
                Q kq = p->a[var];   // > 0
                std::vector<Q> a(n_);
                for (int i = 0; i < n_; ++i) a[i] = kp * p->a[i] + kq * q->a[i];
                a[var] = 0;
                out.add(std::move(a), kp * p->b + kq * q->b, p->strict || q->strict);
            }
        }
        out.dedupe();
        return out;
    }

    bool feasible() const {
        if (bad_) return false;
        LinSystem cur = *this;
        for (int v = 0; v < n_; ++v) {
            cur = cur.eliminated(v);
            if (cur.bad_) return false;
        }
        return !cur.bad_;
    }

    // Projection of the feasible set onto one variable.
    Range<V> bounds(int var) const {
        Range<V> r;
        if (bad_) {
            r.feasible = false;
            return r;
        }
        LinSystem cur = *this;
        for (int v = 0; v < n_; ++v) {
            if (v == var) continue;
            cur = cur.eliminated(v);
            if (cur.bad_) {
                r.feasible = false;
                return r;
            }
        }
        for (const auto& c : cur.cons_) {
            const Q& k = c.a[var];
            V bound = c.b / k;
            if (k > 0) {
                if (!r.hi || bound < *r.hi || (bound == *r.hi && c.strict)) {
                    r.hi = bound;
                    r.hi_strict = c.strict;
                }
            } else {
                if (!r.lo || *r.lo < bound || (bound == *r.lo && c.strict)) {
                    r.lo = bound;
                    r.lo_strict = c.strict;
                }
            }
        }
        if (r.lo && r.hi) {
            if (*r.hi < *r.lo || (*r.hi == *r.lo && (r.lo_strict || r.hi_strict))) r.feasible = false;
        }
        return r;
    }

   private:
    void dedupe() {
        // Scale each row so its first nonzero coefficient has magnitude one, then
        // keep only the tightest right-hand side per direction.
        std::vector<LinCon<V>> out;
        for (auto& c : cons_) {
            Q lead = 0;
            for (const auto& x : c.a)
                if (x != 0) {
                    lead = abs(x);
                    break;
                }
            for (auto& x : c.a) x /= lead;
            c.b = c.b / lead;
            bool merged = false;
            for (auto& o : out) {
                if (o.a == c.a) {
                    if (c.b < o.b || (c.b == o.b && c.strict)) {
                        o.b = c.b;
                        o.strict = c.strict;
                    }
                    merged = true;
                    break;
                }
            }
            if (!merged) out.push_back(std::move(c));
        }
        cons_ = std::move(out);
    }

    int n_;
    std::vector<LinCon<V>> cons_;
    bool bad_ = false;
};

inline LinSystem<QE> lift(const LinSystem<Q>& s) {
    LinSystem<QE> out(s.nvars());
    if (s.trivially_infeasible()) out.lt(std::vector<Q>(s.nvars()), QE(Q(0)));
    for (const auto& c : s.constraints()) out.add(c.a, QE(c.b), c.strict);
    return out;
}

// Picks a value from a range, preferring the end indicated by dir (+1 upper,
// -1 lower). A strict end is approached by one infinitesimal step when the
// range is wide enough, otherwise by the midpoint.
inline QE pick_in_range(const Range<QE>& r, int dir) {
    const QE e = QE::eps();
    if (dir >= 0 && r.hi) {
        if (!r.hi_strict) return *r.hi;
        QE cand = *r.hi - e;
        if (r.lo && (cand < *r.lo || (cand == *r.lo && r.lo_strict))) return (*r.lo + *r.hi) / Q(2);
        return cand;
    }
    if (dir < 0 && r.lo) {
        if (!r.lo_strict) return *r.lo;
        QE cand = *r.lo + e;
        if (r.hi && (*r.hi < cand || (cand == *r.hi && r.hi_strict))) return (*r.lo + *r.hi) / Q(2);
        return cand;
    }
    if (r.lo && r.hi) return (*r.lo + *r.hi) / Q(2);
    if (r.lo) return *r.lo + QE(Q(1));
    if (r.hi) return *r.hi - QE(Q(1));
    return QE(Q(0));
}

// Fixes variables one at a time in the given order, each at the end of its
// current projection selected by dirs[k]. Returns nullopt if infeasible.
inline std::optional<std::vector<QE>> snap_point(LinSystem<QE> sys, const std::vector<int>& order,
                                                 const std::vector<int>& dirs) {
    std::vector<QE> val(sys.nvars(), QE(Q(0)));
    for (std::size_t k = 0; k < order.size(); ++k) {
        int v = order[k];
        Range<QE> r = sys.bounds(v);
        if (!r.feasible) return std::nullopt;
        val[v] = pick_in_range(r, dirs[k]);
        sys = sys.substituted(v, val[v]);
    }
    if (sys.trivially_infeasible()) return std::nullopt;
    return val;
}

}  // namespace rbac
