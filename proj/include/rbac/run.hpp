#pragma once

#include <chrono>

#include "rbac/annulus_1d.hpp"
#include "rbac/annulus_circ.hpp"
#include "rbac/audit.hpp"
#include "rbac/io.hpp"
#include "rbac/oracle.hpp"
#include "rbac/restricted_line.hpp"

namespace rbac {

struct VariantSpec {
    Variant variant = Variant::d1_nonuniform;
    Mode mode = Mode::penalized;
    Q line_y = 0;

    bool restricted() const {
        return variant == Variant::restricted_nnc || variant == Variant::restricted_nc ||
               variant == Variant::restricted_uniform;
    }
    int dim() const { return variant == Variant::d1_nonuniform || variant == Variant::d1_uniform ? 1 : 2; }
};

inline std::optional<Variant> parse_variant(const std::string& s) {
    for (Variant v : {Variant::d1_nonuniform, Variant::d1_uniform, Variant::rect_nnc, Variant::rect_nc,
                      Variant::rect_uniform, Variant::restricted_uniform, Variant::restricted_nc,
                      Variant::restricted_nnc, Variant::circ})
        if (s == variant_name(v)) return v;
    return std::nullopt;
}

inline std::optional<Mode> parse_mode(const std::string& s) {
    if (s == "constraint") return Mode::constraint;
    if (s == "penalized") return Mode::penalized;
    return std::nullopt;
}

inline RectShape shape_of(Variant v) {
    switch (v) {
        case Variant::rect_nc:
        case Variant::restricted_nc: return RectShape::nc;
        case Variant::rect_uniform:
        case Variant::restricted_uniform: return RectShape::uniform;
        default: return RectShape::nnc;
    }
}

inline Solution solve(const Instance& inst, const VariantSpec& spec) {
    switch (spec.variant) {
        case Variant::d1_nonuniform: return solve_1d(inst, Shape1D::nonuniform, spec.mode);
        case Variant::d1_uniform: return solve_1d(inst, Shape1D::uniform, spec.mode);
        case Variant::rect_nnc:
        case Variant::rect_nc:
        case Variant::rect_uniform: return solve_rect_2d(inst, shape_of(spec.variant), spec.mode);
        case Variant::restricted_nnc:
        case Variant::restricted_nc:
        case Variant::restricted_uniform: return solve_restricted(inst, shape_of(spec.variant), spec.line_y);
        case Variant::circ: return spec.mode == Mode::constraint ? solve_rbcac(inst) : solve_grbcac(inst);
    }
    throw std::logic_error("unknown variant");
}

inline Solution run_oracle(const Instance& inst, const VariantSpec& spec, const OracleBudget& budget = {}) {
    switch (spec.variant) {
        case Variant::d1_nonuniform: return oracle_1d(inst, Shape1D::nonuniform, spec.mode, budget);
        case Variant::d1_uniform: return oracle_1d(inst, Shape1D::uniform, spec.mode, budget);
        case Variant::rect_nnc:
        case Variant::rect_nc:
        case Variant::rect_uniform: return oracle_rect_2d(inst, shape_of(spec.variant), spec.mode, budget);
        case Variant::restricted_nnc:
        case Variant::restricted_nc:
        case Variant::restricted_uniform: return oracle_restricted(inst, shape_of(spec.variant), spec.line_y, budget);
        case Variant::circ: return oracle_circ(inst, spec.mode, budget);
    }
    throw std::logic_error("unknown variant");
}

// Both infeasible, or both feasible with the same lambda.
inline bool same_value(const Solution& a, const Solution& b) {
    if (a.feasible != b.feasible) return false;
    return !a.feasible || a.lambda == b.lambda;
}

struct RunReport {
    std::string id;
    Variant variant = Variant::d1_nonuniform;
    Mode mode = Mode::penalized;
    bool feasible = true;
    Q lambda = 0;
    std::optional<Q> oracle_lambda;
    std::optional<bool> oracle_feasible;
    bool match = false;
    double elapsed_ms = 0;
    long long op_count = 0;
};

inline std::pair<RunReport, Solution> run(const Instance& inst, const VariantSpec& spec, bool oracle_check,
                                          const OracleBudget& budget = {}) {
    RunReport rep;
    rep.id = inst.id;
    rep.variant = spec.variant;
    rep.mode = spec.mode;
    auto t0 = std::chrono::steady_clock::now();
    Solution s = solve(inst, spec);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.feasible = s.feasible;
    rep.lambda = s.lambda;
    rep.op_count = s.op_count;
    if (oracle_check) {
        Solution o = run_oracle(inst, spec, budget);
        rep.oracle_lambda = o.lambda;
        rep.oracle_feasible = o.feasible;
        rep.match = same_value(s, o);
    }
    return {rep, s};
}

// Elapsed time is left out so the document is reproducible.
inline json report_json(const RunReport& r) {
    json j;
    j["id"] = r.id;
    j["variant"] = variant_name(r.variant);
    j["mode"] = r.mode == Mode::constraint ? "constraint" : "penalized";
    j["feasible"] = r.feasible;
    j["lambda"] = q_json(r.lambda);
    if (r.oracle_lambda) {
        j["oracle_feasible"] = *r.oracle_feasible;
        j["oracle_lambda"] = q_json(*r.oracle_lambda);
    }
    j["match"] = r.match;
    j["op_count"] = r.op_count;
    return j;
}

}  // namespace rbac
