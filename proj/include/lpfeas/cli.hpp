/**
 * cli.hpp
 *
 * Command-line front end.
 *
 *   check <file>    feasibility via the tag-driven method or the classical
 *                   auxiliary-variable method (exit 0 feasible, 1 infeasible)
 *   dual <file>     dual feasibility via the tag-driven dual variant
 *   compare <file>  run both phase-1 methods and compare their pivot paths
 *                   (exit 0 equal, 1 divergent)
 *   random          generate seeded instances and cross-check the methods
 *
 * Exit code 2 for every error: unreadable input, parse failure, bad flags,
 * iteration cap.
 */
#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lpfeas/asm_solver.hpp"
#include "lpfeas/asmd_solver.hpp"
#include "lpfeas/lp_parse.hpp"
#include "lpfeas/oracle.hpp"
#include "lpfeas/random_lp.hpp"
#include "lpfeas/trace_render.hpp"

namespace lpfeas {

namespace detail {

inline LinearProgram load_lp(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream text;
    text << file.rdbuf();
    return parse_and_normalize(text.str());
}

inline int outcome_exit_code(Outcome outcome) {
    switch (outcome) {
        case Outcome::feasible: return 0;
        case Outcome::infeasible: return 1;
        default: return 2;
    }
}

inline std::string corner_list(const std::vector<std::vector<Rational>>& corners) {
    std::string out;
    for (std::size_t t = 0; t < corners.size(); ++t) {
        if (t) out += ' ';
        out += '(' + join_rationals(corners[t]) + ')';
    }
    return out;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic LP feasibility: tag-driven phase 1, its dual variant, "
                 "and a classical auxiliary-variable reference"};
    app.name("lpfeas");
    app.require_subcommand(1);

    std::string check_file, check_method = "asm";
    bool check_trace = false, check_machine = false, check_bland = false;
    int check_iters = 10000;
    auto* check = app.add_subcommand("check", "Decide feasibility of an instance file");
    check->add_option("file", check_file, "instance file")->required();
    check->add_option("--method", check_method, "asm (tag-driven) or oracle (auxiliary variables)")
        ->check(CLI::IsMember({"asm", "oracle"}));
    auto* check_trace_flag = check->add_flag("--trace", check_trace, "print every table");
    check->add_flag("--machine", check_machine, "print the machine trace (JSON Lines)")
        ->excludes(check_trace_flag);
    check->add_option("--max-iters", check_iters, "pivot cap")->check(CLI::PositiveNumber);
    check->add_flag("--bland", check_bland, "smallest-label entering rule");

    std::string dual_file;
    bool dual_trace = false, dual_machine = false;
    int dual_iters = 10000;
    auto* dual = app.add_subcommand("dual", "Decide dual feasibility of an instance file");
    dual->add_option("file", dual_file, "instance file")->required();
    auto* dual_trace_flag = dual->add_flag("--trace", dual_trace, "print every table");
    dual->add_flag("--machine", dual_machine, "print the machine trace (JSON Lines)")
        ->excludes(dual_trace_flag);
    dual->add_option("--max-iters", dual_iters, "pivot cap")->check(CLI::PositiveNumber);

    std::string compare_file;
    bool compare_bland = false;
    int compare_iters = 10000;
    auto* compare = app.add_subcommand("compare", "Compare the two phase-1 pivot paths");
    compare->add_option("file", compare_file, "instance file")->required();
    compare->add_option("--max-iters", compare_iters, "pivot cap")->check(CLI::PositiveNumber);
    compare->add_flag("--bland", compare_bland, "smallest-label entering rule");

    std::uint64_t rand_seed = 1;
    int rand_rows = 4, rand_cols = 3, rand_count = 1, rand_bound = 9;
    bool rand_feasible = false, rand_print = false;
    auto* random = app.add_subcommand("random", "Cross-check the methods on seeded instances");
    random->add_option("--seed", rand_seed, "first seed")->required();
    random->add_option("--rows", rand_rows, "constraints per instance")->check(CLI::PositiveNumber);
    random->add_option("--cols", rand_cols, "variables per instance")->check(CLI::PositiveNumber);
    random->add_option("--count", rand_count, "number of instances")->check(CLI::PositiveNumber);
    random->add_option("--entry-bound", rand_bound, "coefficient magnitude bound")
        ->check(CLI::PositiveNumber);
    random->add_flag("--feasible", rand_feasible, "bias right-hand sides toward feasibility");
    random->add_flag("--print", rand_print, "print each generated instance");

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes args back to front
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) {
            const LinearProgram lp = detail::load_lp(check_file);
            SolverOptions options;
            options.max_iterations = check_iters;
            options.bland = check_bland;
            options.record_snapshots = check_trace || check_machine;
            TraceDocument doc;
            if (check_method == "asm") {
                AsmResult result = asm_solve(lp, options);
                doc = make_document("asm", lp, std::move(result.trace), std::move(result.snapshots),
                                    result.dict);
            } else {
                PhaseOneResult result = simplex_phase1(lp, options);
                doc = make_document("oracle", lp, std::move(result.trace),
                                    std::move(result.snapshots), result.dict);
            }
            if (doc.trace.outcome == Outcome::iteration_cap_exceeded) {
                err << "error: iteration cap exceeded\n";
                return 2;
            }
            out << (check_machine ? render_machine(doc)
                                  : check_trace ? render_table(doc) : render_summary(doc));
            return detail::outcome_exit_code(doc.trace.outcome);
        }

        if (*dual) {
            const LinearProgram lp = detail::load_lp(dual_file);
            SolverOptions options;
            options.max_iterations = dual_iters;
            options.record_snapshots = dual_trace || dual_machine;
            AsmdResult result = asmd_solve(lp, options);
            TraceDocument doc = make_document("asmd", lp, std::move(result.trace),
                                              std::move(result.snapshots), result.dict);
            if (doc.trace.outcome == Outcome::iteration_cap_exceeded) {
                err << "error: iteration cap exceeded\n";
                return 2;
            }
            out << (dual_machine ? render_machine(doc)
                                 : dual_trace ? render_table(doc) : render_summary(doc));
            return detail::outcome_exit_code(doc.trace.outcome);
        }

        if (*compare) {
            const LinearProgram lp = detail::load_lp(compare_file);
            SolverOptions options;
            options.max_iterations = compare_iters;
            options.bland = compare_bland;
            AsmResult primal = asm_solve(lp, options);
            PhaseOneResult oracle = simplex_phase1(lp, options);
            if (primal.trace.outcome == Outcome::iteration_cap_exceeded ||
                oracle.trace.outcome == Outcome::iteration_cap_exceeded) {
                err << "error: iteration cap exceeded\n";
                return 2;
            }
            out << "asm: " << outcome_name(primal.trace.outcome) << ", "
                << primal.trace.steps.size() << " pivots\n";
            out << "oracle: " << outcome_name(oracle.trace.outcome) << ", "
                << oracle.trace.steps.size() << " pivots\n";
            const PathReport report = compare_paths(primal.trace, oracle.trace);
            const bool verdicts_agree = primal.trace.outcome == oracle.trace.outcome;
            if (verdicts_agree && report.equal) {
                out << "paths equal\n";
                return 0;
            }
            if (!verdicts_agree) out << "verdicts differ\n";
            if (!report.equal) {
                out << "paths diverge at index " << *report.first_divergence << "\n";
                out << "asm corners: " << detail::corner_list(report.corners_a) << "\n";
                out << "oracle corners: " << detail::corner_list(report.corners_b) << "\n";
            }
            return 1;
        }

        // random
        SolverOptions options;
        int mismatches = 0;
        for (int k = 0; k < rand_count; ++k) {
            const std::uint64_t seed = rand_seed + static_cast<std::uint64_t>(k);
            const LinearProgram lp = gen_random_lp(seed, rand_rows, rand_cols, rand_bound,
                                                   rand_feasible);
            if (rand_print) out << render_lp(lp) << "\n";
            AsmResult primal = asm_solve(lp, options);
            PhaseOneResult oracle = simplex_phase1(lp, options);
            const PathReport report = compare_paths(primal.trace, oracle.trace);
            const bool ok = primal.trace.outcome == oracle.trace.outcome && report.equal;
            out << "seed " << seed << ": " << outcome_name(primal.trace.outcome) << ", "
                << (ok ? "paths equal" : "MISMATCH") << " (" << primal.trace.steps.size()
                << " pivots)\n";
            if (!ok) ++mismatches;
        }
        out << rand_count << " instances, " << mismatches << " mismatches\n";
        return mismatches == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lpfeas
