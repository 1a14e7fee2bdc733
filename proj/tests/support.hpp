#pragma once

#include <random>
#include <set>

#include "rbac/rbac.hpp"

namespace rbac::testing {

// GMP expects canonical fractions; the parser guarantees it for file input.
inline Q frac(long num, long den) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

struct Builder {
    Instance inst;
    explicit Builder(int dim) { inst.dim = dim; }
    Builder& R(const Q& x, const Q& y, const Q& p = 1) {
        inst.reds.push_back({{x, y}, p});
        return *this;
    }
    Builder& B(const Q& x, const Q& y, const Q& p = 1) {
        inst.blues.push_back({{x, y}, p});
        return *this;
    }
    Builder& R1(const Q& x, const Q& p = 1) { return R(x, 0, p); }
    Builder& B1(const Q& x, const Q& p = 1) { return B(x, 0, p); }
    operator Instance() const { return inst; }
};

// Small random instance on an integer grid [-g, g], distinct points per color.
inline Instance random_instance(std::mt19937_64& rng, int dim, int max_n, int max_m, int g, int max_pen = 3) {
    auto uni = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    Instance in;
    in.dim = dim;
    int n = uni(0, max_n), m = uni(0, max_m);
    auto fill = [&](std::vector<WPoint>& out, int k) {
        std::set<Pt> used;
        for (int i = 0; i < k; ++i) {
            for (int t = 0; t < 100; ++t) {
                Pt p{Q(uni(-g, g)), dim == 2 ? Q(uni(-g, g)) : Q(0)};
                if (used.insert(p).second) {
                    out.push_back({p, Q(uni(1, max_pen))});
                    break;
                }
            }
        }
    };
    fill(in.reds, n);
    fill(in.blues, m);
    return in;
}

inline std::vector<int> covered_points(const Instance& inst, const Annulus& a) {
    std::vector<int> v;
    for (int i = 0; i < inst.n(); ++i)
        if (covers(a, inst.reds[i].p, inst.dim)) v.push_back(i);
    for (int j = 0; j < inst.m(); ++j)
        if (covers(a, inst.blues[j].p, inst.dim)) v.push_back(inst.n() + j);
    return v;
}

}  // namespace rbac::testing
