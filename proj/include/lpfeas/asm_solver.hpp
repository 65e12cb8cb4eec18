/**
 * asm_solver.hpp
 *
 * Artificial-free phase 1. Rows with negative basic value are tagged Minus
 * and their sum is kept as a synthetic feasibility row w; the solver pivots
 * to drive w0 = sum of the tagged values up to 0 without ever introducing an
 * artificial variable. Pivot for pivot this walks the same path the classical
 * phase-1 method walks on the auxiliary problem (see oracle.hpp), given the
 * same deterministic tie rule.
 *
 * Invariants maintained after every step, checked and enforced here:
 *  - w equals the columnwise sum of the Minus-tagged rows, entry 0 included;
 *  - every Minus-tagged row has d(i,0) <= 0, every other row d(i,0) >= 0;
 *  - w0 never decreases, and increases strictly on non-degenerate pivots.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpfeas/dictionary.hpp"
#include "lpfeas/trace.hpp"

namespace lpfeas {

struct SolverOptions {
    int max_iterations = 10000;
    // Smallest-label entering selection instead of the steepest (most
    // negative) entry. Off by default: it changes the pivot path.
    bool bland = false;
    bool record_snapshots = false;
};

struct AsmState {
    Dictionary dict;
    std::vector<Rational> w;   // length cols+1; w[0] is the feasibility objective
    int minus_rows = 0;        // number of Minus-tagged basic labels
    SolverOptions options;
    PivotTrace trace;
    std::vector<TableSnapshot> snapshots;
    int iteration = 0;
    bool done = false;
};

namespace detail {

inline std::vector<Rational> recompute_w(const Dictionary& dict) {
    std::vector<Rational> w(static_cast<std::size_t>(dict.cols()) + 1);
    for (int i = 1; i <= dict.rows(); ++i) {
        if (!dict.basic[i - 1].is_minus()) continue;
        for (int j = 0; j <= dict.cols(); ++j) w[j] += dict.d(i, j);
    }
    return w;
}

inline void check_asm_invariants(const AsmState& state) {
    if (state.w != recompute_w(state.dict))
        throw std::logic_error("feasibility row out of sync with tagged rows");
    int tagged = 0;
    for (int i = 1; i <= state.dict.rows(); ++i) {
        const bool minus = state.dict.basic[i - 1].is_minus();
        tagged += minus ? 1 : 0;
        const Rational& v = state.dict.d(i, 0);
        if (minus && v.is_positive())
            throw std::logic_error("Minus-tagged row with positive value");
        if (!minus && v.is_negative())
            throw std::logic_error("untagged row with negative value");
    }
    if (tagged != state.minus_rows) throw std::logic_error("Minus tag count out of sync");
}

inline bool objective_row_nonzero(const Dictionary& dict) {
    for (int j = 0; j <= dict.cols(); ++j)
        if (!dict.d(0, j).is_zero()) return true;
    return false;
}

inline TableSnapshot make_snapshot(const AsmState& state, std::optional<std::pair<int, int>> star) {
    TableSnapshot snap;
    snap.heading = state.iteration == 0 ? "Initial table" : "Iteration " + std::to_string(state.iteration);
    snap.basic = state.dict.basic;
    snap.nonbasic = state.dict.nonbasic;
    snap.d = state.dict.d;
    snap.w = state.w;
    snap.star = star;
    snap.show_objective_row = objective_row_nonzero(state.dict);
    return snap;
}

}  // namespace detail

// Tag the negative rows and form w. A dictionary with no negative row is
// immediately feasible with zero steps.
inline AsmState init_asm(Dictionary dict, SolverOptions options = {}) {
    AsmState state;
    state.dict = std::move(dict);
    state.options = options;
    for (int i = 1; i <= state.dict.rows(); ++i) {
        if (state.dict.d(i, 0).is_negative()) {
            state.dict.basic[i - 1].tag = SignTag::minus;
            ++state.minus_rows;
        }
    }
    state.w = detail::recompute_w(state.dict);
    state.trace.initial_corner = state.dict.corner_point();
    if (state.minus_rows == 0) {
        state.trace.outcome = Outcome::feasible;
        state.done = true;
    }
    return state;
}

// Steepest negative w entry (smallest label under the Bland option); ties go
// to the earliest label in the global order. Returns nothing when no entry
// is negative, which ends the run.
inline std::optional<Label> select_entering(const AsmState& state) {
    std::optional<int> best;
    for (int j = 1; j <= state.dict.cols(); ++j) {
        if (!state.w[j].is_negative()) continue;
        if (!best) {
            best = j;
            continue;
        }
        const Label& cand = state.dict.nonbasic[j - 1];
        const Label& cur = state.dict.nonbasic[*best - 1];
        if (state.options.bland) {
            if (order_less(cand, cur)) best = j;
        } else if (state.w[j] < state.w[*best] ||
                   (state.w[j] == state.w[*best] && order_less(cand, cur))) {
            best = j;
        }
    }
    if (!best) return std::nullopt;
    return state.dict.nonbasic[*best - 1];
}

// Minimum-ratio row over both candidate families: untagged rows with
// d(i,0) >= 0 and a positive entry, tagged rows with d(i,0) <= 0 and a
// negative entry. Every ratio is >= 0; ties go to the earliest label. A
// negative w entry guarantees some tagged row qualifies.
inline Label select_leaving(const AsmState& state, const Label& entering) {
    const int s = state.dict.nonbasic_pos(entering);
    std::optional<Rational> best_ratio;
    std::optional<int> best_row;
    for (int i = 1; i <= state.dict.rows(); ++i) {
        const Label& label = state.dict.basic[i - 1];
        const Rational& value = state.dict.d(i, 0);
        const Rational& entry = state.dict.d(i, s);
        const bool admissible = label.is_minus()
                                    ? (!value.is_positive() && entry.is_negative())
                                    : (!value.is_negative() && entry.is_positive());
        if (!admissible) continue;
        Rational ratio = value / entry;
        if (!best_row || ratio < *best_ratio ||
            (ratio == *best_ratio && order_less(label, state.dict.basic[*best_row - 1]))) {
            best_ratio = std::move(ratio);
            best_row = i;
        }
    }
    if (!best_row) throw std::logic_error("no leaving row for an entering column");
    return state.dict.basic[*best_row - 1];
}

// Pivot, carry w along by the same row transform, and if the leaving label
// was Minus-tagged flip it to Plus: its new column equals the old one except
// that the w entry gains exactly 1, and it may re-enter later as an ordinary
// variable.
inline void asm_step(AsmState& state, const Label& entering, const Label& leaving) {
    const int s = state.dict.nonbasic_pos(entering);
    const int r = state.dict.basic_pos(leaving);
    const Rational p0 = state.dict.d(r, s);
    const bool leaving_minus = state.dict.basic[r - 1].is_minus();
    TraceStep step;
    step.entering = state.dict.nonbasic[s - 1];
    step.leaving = state.dict.basic[r - 1];
    step.pivot_value = p0;

    const Rational ws = state.w[s];
    for (int j = 0; j <= state.dict.cols(); ++j)
        if (j != s) state.w[j] -= ws * state.dict.d(r, j) / p0;
    state.w[s] = -ws / p0;
    state.dict.pivot(r, s);
    if (leaving_minus) {
        state.w[s] += Rational(1);
        state.dict.nonbasic[s - 1].tag = SignTag::plus;
        --state.minus_rows;
    }

    ++state.iteration;
    step.iteration = state.iteration;
    step.corner = state.dict.corner_point();
    step.w0 = state.w[0];
    state.trace.steps.push_back(std::move(step));
    detail::check_asm_invariants(state);
}

struct AsmResult {
    PivotTrace trace;
    Dictionary dict;
    std::vector<TableSnapshot> snapshots;
};

// Drive to primal feasibility. Exits: no Minus tags left (feasible); no
// negative w entry with w0 = 0 (all tagged rows sit at exactly 0, so the
// dictionary is feasible and the stale tags are cleared); no negative w entry
// with w0 < 0 (infeasible, w is the certificate); iteration cap.
inline AsmResult asm_solve(const Dictionary& dict, SolverOptions options = {}) {
    AsmState state = init_asm(dict, options);
    const auto snapshot = [&](std::optional<std::pair<int, int>> star) {
        if (state.options.record_snapshots)
            state.snapshots.push_back(detail::make_snapshot(state, star));
    };
    while (true) {
        if (state.minus_rows == 0) {
            state.trace.outcome = Outcome::feasible;
            snapshot(std::nullopt);
            break;
        }
        const auto entering = select_entering(state);
        if (!entering) {
            if (state.w[0].is_zero()) {
                for (auto& label : state.dict.basic)
                    if (label.is_minus()) label.tag = SignTag::plus;
                state.minus_rows = 0;
                state.w = detail::recompute_w(state.dict);
                state.trace.outcome = Outcome::feasible;
            } else {
                state.trace.outcome = Outcome::infeasible;
                Certificate cert;
                cert.w0 = state.w[0];
                for (int j = 1; j <= state.dict.cols(); ++j)
                    cert.entries.emplace_back(state.dict.nonbasic[j - 1], state.w[j]);
                state.trace.certificate = std::move(cert);
            }
            snapshot(std::nullopt);
            break;
        }
        if (state.iteration >= state.options.max_iterations) {
            state.trace.outcome = Outcome::iteration_cap_exceeded;
            snapshot(std::nullopt);
            break;
        }
        const Label leaving = select_leaving(state, *entering);
        snapshot(std::make_pair(state.dict.basic_pos(leaving), state.dict.nonbasic_pos(*entering)));
        asm_step(state, *entering, leaving);
    }
    state.done = true;
    return {std::move(state.trace), std::move(state.dict), std::move(state.snapshots)};
}

inline AsmResult asm_solve(const LinearProgram& lp, SolverOptions options = {}) {
    return asm_solve(build_dictionary(lp), options);
}

}  // namespace lpfeas
