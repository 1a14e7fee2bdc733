#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rbac/geom_core.hpp"

namespace rbac {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text format: a "dim 1" or "dim 2" header, then "R|B x [y] penalty" per line.
// '#' starts a comment.
inline Instance parse_instance(const std::string& text) {
    Instance inst;
    bool have_dim = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::set<Pt> seen_red, seen_blue;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "dim") {
            if (have_dim) throw ParseError(lineno, "repeated dim header");
            if (tok.size() != 2 || (tok[1] != "1" && tok[1] != "2")) throw ParseError(lineno, "expected 'dim 1' or 'dim 2'");
            inst.dim = tok[1] == "1" ? 1 : 2;
            have_dim = true;
            continue;
        }
        if (tok[0] != "R" && tok[0] != "B") throw ParseError(lineno, "expected R, B or dim, got '" + tok[0] + "'");
        if (!have_dim) throw ParseError(lineno, "point before dim header");
        std::size_t want = inst.dim == 1 ? 3 : 4;
        if (tok.size() != want) throw ParseError(lineno, "expected " + std::to_string(want - 1) + " numbers");
        std::vector<Q> v;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            auto q = parse_rational(tok[i]);
            if (!q) throw ParseError(lineno, "bad number '" + tok[i] + "'");
            v.push_back(*q);
        }
        WPoint w;
        w.p = inst.dim == 1 ? Pt{v[0], Q(0)} : Pt{v[0], v[1]};
        w.penalty = v.back();
        if (w.penalty <= 0) throw ParseError(lineno, "non-positive penalty");
        bool red = tok[0] == "R";
        if (!(red ? seen_red : seen_blue).insert(w.p).second)
            throw ParseError(lineno, std::string("duplicate ") + (red ? "red" : "blue") + " point");
        (red ? inst.reds : inst.blues).push_back(w);
    }
    if (!have_dim) throw ParseError(lineno, "missing dim header");
    return inst;
}

inline std::string emit_instance(const Instance& inst) {
    std::ostringstream out;
    out << "dim " << inst.dim << "\n";
    auto put = [&](char c, const WPoint& w) {
        out << c << ' ' << to_string(w.p.x);
        if (inst.dim == 2) out << ' ' << to_string(w.p.y);
        out << ' ' << to_string(w.penalty) << "\n";
    };
    for (const auto& r : inst.reds) put('R', r);
    for (const auto& b : inst.blues) put('B', b);
    return out.str();
}

using json = nlohmann::ordered_json;

inline json q_json(const Q& v) { return to_string(v); }
inline json pt_json(const Pt& p) { return json::array({q_json(p.x), q_json(p.y)}); }

inline json defining_json(const std::vector<DefPoint>& d) {
    json a = json::array();
    for (const auto& x : d)
        a.push_back({{"color", x.point.color == Color::red ? "red" : "blue"}, {"index", x.point.index}, {"side", x.side}});
    return a;
}

inline json annulus_json(const Annulus& ann) {
    return std::visit(
        [](const auto& a) -> json {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, EmptyAnnulus>) {
                return {{"type", "empty"}};
            } else if constexpr (std::is_same_v<T, IntervalPair>) {
                return {{"type", "intervals"},
                        {"left", json::array({q_json(a.lo), q_json(a.li)})},
                        {"right", json::array({q_json(a.ri), q_json(a.ro)})},
                        {"endpoint_open", a.endpoint_open},
                        {"defining", defining_json(a.defining)}};
            } else if constexpr (std::is_same_v<T, RectAnnulus>) {
                auto r = [](const Rect& x) {
                    return json{{"left", q_json(x.left)}, {"right", q_json(x.right)}, {"bottom", q_json(x.bottom)},
                                {"top", q_json(x.top)}};
                };
                return {{"type", "rectangles"},
                        {"outer", r(a.outer)},
                        {"inner", r(a.inner)},
                        {"side_open", a.side_open},
                        {"defining", defining_json(a.defining)}};
            } else {
                return {{"type", "circles"},
                        {"center", pt_json(a.center)},
                        {"r_in_sq", q_json(a.r_in_sq)},
                        {"r_out_sq", q_json(a.r_out_sq)}};
            }
        },
        ann);
}

inline json solution_json(const Solution& s) {
    json j;
    j["variant"] = variant_name(s.variant);
    j["mode"] = s.mode == Mode::constraint ? "constraint" : "penalized";
    j["feasible"] = s.feasible;
    j["lambda"] = q_json(s.lambda);
    j["annulus"] = annulus_json(s.annulus);
    j["covered_blue_ids"] = s.covered_blue_ids;
    j["uncovered_red_ids"] = s.uncovered_red_ids;
    if (!s.circ_candidate.empty()) {
        const auto& c = s.circ_candidate.front();
        std::vector<int> ids = c.removable_blue_ids;
        j["circ_candidate"] = {{"center", pt_json(c.center)},
                               {"shifted_center", pt_json(c.shifted_center)},
                               {"case", c.case_tag},
                               {"tuple", defining_json(c.tuple)},
                               {"removable_blue_ids", ids}};
    }
    j["op_count"] = s.op_count;
    return j;
}

enum class Profile { uniform_grid, clustered, cocircular, collinear };

inline std::optional<Profile> parse_profile(const std::string& s) {
    if (s == "uniform_grid") return Profile::uniform_grid;
    if (s == "clustered") return Profile::clustered;
    if (s == "cocircular") return Profile::cocircular;
    if (s == "collinear") return Profile::collinear;
    return std::nullopt;
}

// Deterministic for a fixed seed: only raw engine output is used, never the
// library's distributions.
inline Instance generate(std::uint64_t seed, Profile profile, int n, int m, int dim, int grid = 20) {
    std::mt19937_64 rng(seed);
    auto uni = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    Instance inst;
    inst.dim = dim;
    std::set<Pt> used;
    auto fresh = [&](auto make) {
        for (int tries = 0; tries < 10000; ++tries) {
            Pt p = make();
            if (dim == 1) p.y = 0;
            if (used.insert(p).second) return std::optional<Pt>(p);
        }
        return std::optional<Pt>();
    };
    auto grid_pt = [&] { return Pt{Q(uni(-grid, grid)), Q(uni(-grid, grid))}; };
    auto penalty = [&] { return Q(uni(1, 5)); };

    std::vector<Pt> centers;
    for (int k = 0; k < 3; ++k) centers.push_back(grid_pt());
    Pt circ_c = grid_pt();
    long radius = uni(1, grid);
    Pt line_p = grid_pt(), line_d{Q(uni(-3, 3)), Q(uni(-3, 3))};
    if (line_d.x == 0 && line_d.y == 0) line_d.x = 1;

    auto red_pt = [&]() -> Pt {
        switch (dim == 1 ? Profile::uniform_grid : profile) {
            case Profile::clustered: {
                const Pt& c = centers[rng() % centers.size()];
                return {c.x + Q(uni(-3, 3)), c.y + Q(uni(-3, 3))};
            }
            case Profile::cocircular: {
                // rational point on the circle: t -> ((1 - t^2), 2t) / (1 + t^2)
                Q t = Q(uni(-4 * grid, 4 * grid)) / uni(1, 8);
                Q d = 1 + t * t;
                return {Q(circ_c.x + radius * (1 - t * t) / d), Q(circ_c.y + radius * 2 * t / d)};
            }
            case Profile::collinear: {
                Q k = Q(uni(-grid, grid)) / uni(1, 2);
                return {Q(line_p.x + k * line_d.x), Q(line_p.y + k * line_d.y)};
            }
            case Profile::uniform_grid: break;
        }
        return grid_pt();
    };
    for (int i = 0; i < n; ++i)
        if (auto p = fresh(red_pt)) inst.reds.push_back({*p, penalty()});
    used.clear();
    for (int j = 0; j < m; ++j) {
        bool near = profile == Profile::clustered && dim == 2;
        if (auto p = fresh([&] { return near ? red_pt() : grid_pt(); })) inst.blues.push_back({*p, penalty()});
    }
    return inst;
}

}  // namespace rbac
