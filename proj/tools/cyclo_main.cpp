#include "cyclo/errors.hpp"
#include "cyclo/harness.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace cyclo;

void print_human(const ExperimentResult& r) {
    std::cout << r.name << ": " << r.status << "  (" << r.detail.dump() << ", "
              << r.wall_seconds << "s)\n";
}

int finish(const ExperimentResult& r, bool json) {
    if (json)
        std::cout << r.to_json().dump(2) << "\n";
    else
        print_human(r);
    return r.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact periodic cyclic homology engine"};
    app.require_subcommand(0, 1);

    bool list_experiments = false;
    app.add_flag("--list", list_experiments, "enumerate the verification experiments");

    HpParams params;
    std::string algebra_arg;
    bool json_out = false, json_in = false;
    int a1_t_cap = 2;

    auto add_common = [&](CLI::App* cmd, bool needs_algebra) {
        if (needs_algebra)
            cmd->add_option("algebra", algebra_arg, "algebra file or catalog name")->required();
        cmd->add_option("--nmax", params.n_max, "degree truncation");
        cmd->add_option("--wmax", params.w_max, "weight truncation");
        cmd->add_option("--cols", params.columns, "bicomplex column truncation");
        cmd->add_flag("--json", json_out, "machine-readable output");
        cmd->add_flag("--json-in", json_in, "parse the algebra file as JSON");
    };

    CLI::App* hp = app.add_subcommand("hp", "periodic cyclic homology of an algebra");
    add_common(hp, true);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification experiment");
    std::string which;
    int simp_levels = 3, simp_degree = 4;
    verify->add_option("experiment", which, "ft | graded | a1 | k0 | simplicial")->required();
    verify->add_option("algebra", algebra_arg, "algebra file or catalog name (ft, graded, a1)");
    verify->add_option("--nmax", params.n_max, "degree truncation");
    verify->add_option("--wmax", params.w_max, "weight truncation");
    verify->add_option("--cols", params.columns, "bicomplex column truncation");
    verify->add_option("--a1-wmax", a1_t_cap, "t-degree cap for the direct polynomial bar model");
    verify->add_option("--levels", simp_levels, "simplicial levels to check");
    verify->add_option("--degree", simp_degree, "simplicial degree truncation");
    verify->add_flag("--json", json_out, "machine-readable output");
    verify->add_flag("--json-in", json_in, "parse the algebra file as JSON");

    CLI::App* catalog = app.add_subcommand("catalog", "list built-in algebras");

    CLI11_PARSE(app, argc, argv);

    if (list_experiments) {
        for (const auto& e : experiment_list())
            std::cout << e.key << "\t" << (e.in_scope ? "" : "[out of scope] ") << e.summary << "\n";
        return 0;
    }

    try {
        if (catalog->parsed()) {
            for (const auto& e : standard_library(params.w_max))
                std::cout << e.key << "\t" << e.description << " (dim " << e.algebra->dim() << ")\n";
            return 0;
        }
        if (hp->parsed()) {
            AlgebraPtr a = load_algebra(algebra_arg, json_in, params.w_max);
            ExperimentResult r = run_hp(a, params);
            if (json_out) {
                Json j = r.detail["report"];
                j["algebra"] = r.detail["algebra"];
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "HP(" << algebra_arg << ") = (" << r.detail["report"]["even"] << ", "
                          << r.detail["report"]["odd"] << ")"
                          << (r.status == "inconclusive" ? "  [inconclusive]" : "") << "\n";
                std::cout << "  per weight: " << r.detail["report"]["per_weight"].dump() << "\n";
                std::cout << "  truncation: " << r.detail["report"]["truncation"].dump()
                          << "  band: " << r.detail["report"]["safe_band"].dump() << "\n";
            }
            return r.exit_code();
        }
        if (verify->parsed()) {
            ExperimentResult r;
            if (which == "ft" || which == "graded" || which == "a1") {
                if (algebra_arg.empty())
                    throw ParseError("experiment '" + which + "' needs an algebra argument");
                AlgebraPtr a = load_algebra(algebra_arg, json_in, params.w_max);
                if (which == "ft") r = run_ft(a, params);
                else if (which == "graded") r = run_graded(a, params);
                else r = run_a1(a, params, a1_t_cap);
            } else if (which == "k0") {
                r = run_k0();
            } else if (which == "simplicial") {
                r = run_simplicial(simp_levels, simp_degree);
            } else {
                throw ParseError("unknown experiment '" + which + "'");
            }
            return finish(r, json_out);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << app.help();
    return 0;
}
