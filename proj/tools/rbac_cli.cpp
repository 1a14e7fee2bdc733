#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rbac/rbac.hpp"

using namespace rbac;

namespace {

enum Exit { kOk = 0, kParse = 2, kMismatch = 3, kBudget = 4 };

std::string read_all(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void print_text(const RunReport& r, const Solution& s) {
    std::cout << (r.id.empty() ? "-" : r.id) << ' ' << variant_name(r.variant) << ' '
              << (r.mode == Mode::constraint ? "constraint" : "penalized") << ' ';
    if (!r.feasible)
        std::cout << "infeasible";
    else
        std::cout << "lambda=" << to_string(r.lambda);
    if (r.oracle_lambda)
        std::cout << " oracle=" << (*r.oracle_feasible ? to_string(*r.oracle_lambda) : std::string("infeasible"))
                  << (r.match ? " match" : " MISMATCH");
    std::cout << " ops=" << r.op_count << " ms=" << r.elapsed_ms << " covered_blues=" << s.covered_blue_ids.size()
              << " uncovered_reds=" << s.uncovered_red_ids.size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Red-blue annulus cover solver"};
    std::string variant_s = "1d-nu", mode_s = "penalized", line_y_s, svg_path, profile_s = "uniform_grid", input;
    bool oracle_check = false, as_json = false, print_instance = false;
    std::optional<std::uint64_t> seed;
    int batch = 0, n = 5, m = 5, grid = 20;
    app.add_option("input", input, "instance file ('-' for stdin)");
    app.add_option("--variant", variant_s, "1d-nu 1d-u rect-nnc rect-nc rect-u restricted-u restricted-nc restricted-nnc circ");
    app.add_option("--mode", mode_s, "constraint or penalized");
    app.add_option("--line-y", line_y_s, "center line for restricted variants");
    app.add_flag("--oracle-check", oracle_check, "compare against the brute-force oracle");
    app.add_option("--svg", svg_path, "write an SVG picture of the solution");
    app.add_option("--seed", seed, "generate a random instance from this seed");
    app.add_option("--profile", profile_s, "uniform_grid clustered cocircular collinear");
    app.add_option("--batch", batch, "solve N generated instances (seeds seed..seed+N-1)");
    app.add_option("-n,--reds", n, "reds per generated instance");
    app.add_option("-m,--blues", m, "blues per generated instance");
    app.add_option("--grid", grid, "coordinate bound for generated instances");
    app.add_flag("--json", as_json, "JSON output");
    app.add_flag("--print-instance", print_instance, "print the (generated) instance and exit");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    VariantSpec spec;
    auto v = parse_variant(variant_s);
    auto md = parse_mode(mode_s);
    auto prof = parse_profile(profile_s);
    if (!v || !md || !prof) {
        std::cerr << "error: unknown " << (!v ? "variant '" + variant_s : !md ? "mode '" + mode_s : "profile '" + profile_s)
                  << "'\n";
        return kParse;
    }
    spec.variant = *v;
    spec.mode = *md;
    if (spec.restricted()) {
        if (line_y_s.empty()) {
            std::cerr << "error: restricted variants need --line-y\n";
            return kParse;
        }
        auto ly = parse_rational(line_y_s);
        if (!ly) {
            std::cerr << "error: bad --line-y '" << line_y_s << "'\n";
            return kParse;
        }
        spec.line_y = *ly;
        if (spec.mode == Mode::constraint) {
            std::cerr << "error: restricted variants are penalized only\n";
            return kParse;
        }
    }

    std::vector<Instance> instances;
    if (!input.empty()) {
        std::string text;
        if (input == "-") {
            text = read_all(std::cin);
        } else {
            std::ifstream f(input);
            if (!f) {
                std::cerr << "error: cannot open " << input << "\n";
                return kParse;
            }
            text = read_all(f);
        }
        try {
            instances.push_back(parse_instance(text));
            instances.back().id = input;
        } catch (const ParseError& e) {
            std::cerr << "error: " << input << ": " << e.what() << "\n";
            return kParse;
        }
    } else {
        std::uint64_t s0 = seed.value_or(1);
        int count = batch > 0 ? batch : 1;
        for (int k = 0; k < count; ++k) {
            instances.push_back(generate(s0 + k, *prof, n, m, spec.dim(), grid));
            instances.back().id = "seed-" + std::to_string(s0 + k);
        }
    }
    if (print_instance) {
        for (const auto& inst : instances) std::cout << emit_instance(inst);
        return kOk;
    }

    int code = kOk;
    json docs = json::array();
    for (const auto& inst : instances) {
        if (inst.dim != spec.dim()) {
            std::cerr << "error: " << variant_name(spec.variant) << " needs a " << spec.dim() << "D instance\n";
            return kParse;
        }
        try {
            auto [rep, sol] = run(inst, spec, oracle_check);
            if (oracle_check && !rep.match) code = kMismatch;
            if (as_json) {
                json j = report_json(rep);
                j["solution"] = solution_json(sol);
                docs.push_back(std::move(j));
            } else {
                print_text(rep, sol);
            }
            if (!svg_path.empty() && instances.size() == 1) {
                std::ofstream f(svg_path);
                f << render_svg(inst, sol);
            }
        } catch (const BudgetExceeded& e) {
            std::cerr << "refused: " << e.what() << "\n";
            return kBudget;
        } catch (const TooManyPoints& e) {
            std::cerr << "refused: " << e.what() << "\n";
            return kBudget;
        } catch (const GeometryError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kParse;
        }
    }
    if (as_json) std::cout << (docs.size() == 1 ? docs.front() : docs).dump() << "\n";
    return code;
}
