#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extlim/diagram_io.hpp"
#include "extlim/error.hpp"
#include "extlim/fextcat.hpp"
#include "extlim/group_expr.hpp"
#include "extlim/koszul.hpp"
#include "extlim/torlab.hpp"
#include "extlim/verify.hpp"

using namespace extlim;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"exact derived functors and derived limits over extension categories"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "mirror the text output as JSON");

    // group
    std::string group_expr;
    CLI::App* group_cmd = app.add_subcommand("group", "invariant factors of a group expression");
    group_cmd->add_option("expr", group_expr, "group expression, e.g. Z^2+Z/4+Z/6")->required();

    // tor
    std::vector<std::string> tor_exprs;
    std::size_t arity = 0;
    std::string method = "resolution";
    CLI::App* tor_cmd = app.add_subcommand("tor", "multi-Tor and Tor^[n]");
    tor_cmd->add_option("exprs", tor_exprs, "argument groups")->required();
    tor_cmd->add_option("--arity", arity, "compute Tor^[n] of a single group");
    tor_cmd->add_option("--method", method,
                        "resolution|intersection|equalizer|kunneth|all")
        ->check(CLI::IsMember({"resolution", "intersection", "equalizer", "kunneth", "all"}));

    // derived
    std::string functor, derived_expr, via = "koszul";
    std::size_t dn = 0, di = 0;
    CLI::App* derived_cmd = app.add_subcommand("derived", "derived functors of SP^n and Λ^n");
    derived_cmd->add_option("--functor", functor, "sp|lambda")
        ->required()
        ->check(CLI::IsMember({"sp", "lambda"}));
    derived_cmd->add_option("--n", dn, "functor degree")->required();
    derived_cmd->add_option("--i", di, "derived degree")->required();
    derived_cmd->add_option("--via", via, "koszul|kernel")
        ->check(CLI::IsMember({"koszul", "kernel"}));
    derived_cmd->add_option("expr", derived_expr, "the group A")->required();

    // lim
    std::string diagram_path;
    std::size_t degree = 0;
    CLI::App* lim_cmd = app.add_subcommand("lim", "derived inverse limits of a diagram file");
    lim_cmd->add_option("--diagram", diagram_path, "diagram JSON file")->required();
    lim_cmd->add_option("--degree", degree, "0, 1 or 2");

    // extcat
    std::string recipe_path, probe;
    std::size_t ext_degree = 0;
    CLI::App* ext_cmd = app.add_subcommand("extcat", "truncated extension-category diagrams");
    ext_cmd->add_option("--recipe", recipe_path, "recipe JSON file")->required();
    ext_cmd->add_option("--degree", ext_degree, "limit degree (0, 1 or 2)");
    ext_cmd->add_option("--probe", probe, "lemma21")->check(CLI::IsMember({"lemma21"}));

    // verify
    std::string suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run acceptance suites");
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");

    CLI11_PARSE(app, argc, argv);

    auto print_group = [&](const FgAbGroup& g) {
        if (json) std::cout << group_to_json(g) << "\n";
        else std::cout << format_group(g) << "\n";
    };

    if (group_cmd->parsed()) {
        FgAbGroup g = parse_group(group_expr);
        if (json) std::cout << group_to_json(g) << "\n";
        else std::cout << format_invariants(g) << "\n";
        return 0;
    }

    if (tor_cmd->parsed()) {
        if (arity > 0) {
            if (tor_exprs.size() != 1)
                throw InputError("--arity expects exactly one group expression");
            if (arity < 2) throw InputError("--arity must be at least 2");
            FgAbGroup a = parse_group(tor_exprs[0]);
            FreePresentation p = canonical_presentation(a);
            auto compute = [&](const std::string& m) -> FgAbGroup {
                if (m == "resolution") return tor_bracket(a, arity);
                if (m == "kunneth") return kunneth_iterate(a, arity);
                if (m == "intersection") return tor_bracket_intersection(p, arity).group;
                return equalizer_realization(p, arity).group;
            };
            if (method == "all") {
                const char* order[] = {"resolution", "intersection", "equalizer", "kunneth"};
                std::vector<FgAbGroup> results;
                bool agree = true;
                std::string body;
                for (const char* m : order) {
                    results.push_back(compute(m));
                    if (!is_isomorphic(results.front(), results.back())) agree = false;
                }
                if (json) {
                    std::cout << "{\"results\": {";
                    for (int k = 0; k < 4; ++k)
                        std::cout << (k ? ", " : "") << "\"" << order[k]
                                  << "\": " << group_to_json(results[k]);
                    std::cout << "}, \"agree\": " << (agree ? "true" : "false") << "}\n";
                } else {
                    for (int k = 0; k < 4; ++k)
                        std::cout << order[k] << ": " << format_group(results[k]) << "\n";
                    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
                }
                return agree ? 0 : 1;
            }
            print_group(compute(method));
            return 0;
        }
        if (method != "resolution" && tor_exprs.size() != 1)
            throw InputError("--method other than 'resolution' needs --arity with one group");
        std::vector<FgAbGroup> args;
        for (const std::string& e : tor_exprs) args.push_back(parse_group(e));
        if (args.size() < 2) throw InputError("tor needs at least two groups or --arity");
        print_group(tor_multi(args, args.size() - 1));
        return 0;
    }

    if (derived_cmd->parsed()) {
        if (di > dn) throw InputError("--i must be at most --n");
        FreePresentation p = canonical_presentation(parse_group(derived_expr));
        FgAbGroup result;
        if (via == "kernel") {
            if (di + 1 != dn)
                throw InputError("--via kernel computes only the top degree i = n-1");
            result = functor == "sp" ? top_derived_sp_via_kernel(p, dn).group
                                     : top_derived_lambda_via_kernel(p, dn).group;
        } else {
            result = functor == "sp" ? derived_sp(p, dn, di) : derived_lambda(p, dn, di);
        }
        print_group(result);
        return 0;
    }

    if (lim_cmd->parsed()) {
        if (degree > 2) throw InputError("--degree must be 0, 1 or 2");
        AbDiagram d = load_diagram_file(diagram_path);
        print_group(lim_n(d, degree));
        return 0;
    }

    if (ext_cmd->parsed()) {
        ParsedRecipe pr = parse_recipe_file(recipe_path);
        if (!probe.empty()) {
            Lemma21Report rep = lemma21_vanishing_probe(pr.base, pr.tag, pr.recipe);
            if (json)
                std::cout << "{\"applicable\": " << (rep.applicable ? "true" : "false")
                          << ", \"component_vanishes\": "
                          << (rep.component_vanishes ? "true" : "false") << ", \"detail\": \""
                          << rep.detail << "\"}\n";
            else if (!rep.applicable)
                std::cout << "not applicable: " << rep.detail << "\n";
            else
                std::cout << (rep.component_vanishes ? "vanishes" : "does not vanish") << ": "
                          << rep.detail << "\n";
            return 0;
        }
        if (ext_degree > 2) throw InputError("--degree must be 0, 1 or 2");
        TruncatedDiagram td = truncated_diagram(pr.base, pr.tag, pr.recipe);
        print_group(ext_degree == 0 ? lim(td.diagram).group : lim_n(td.diagram, ext_degree));
        return 0;
    }

    if (verify_cmd->parsed()) {
        std::vector<verify::CriterionResult> results;
        if (suite == "all") results = verify::run_all();
        else results.push_back(verify::run_suite(suite));
        bool all_ok = true;
        for (const auto& r : results) {
            all_ok = all_ok && r.passed;
            char line[64];
            std::snprintf(line, sizeof line, " (%.2fs)", r.seconds);
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << line;
            if (!r.passed && !r.detail.empty()) std::cout << " — " << r.detail;
            std::cout << "\n";
        }
        return all_ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
