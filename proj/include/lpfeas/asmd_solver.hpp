/**
 * asmd_solver.hpp
 *
 * Dual variant of the artificial-free phase 1: columns whose objective-row
 * entry is negative are tagged Minus, their negated sum is kept as a
 * feasibility column w', and pivots drive the dictionary to dual feasibility.
 * Row and column roles swap relative to asm_solver.hpp; the selection rules
 * are the exact mirrors of the primal ones.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpfeas/asm_solver.hpp"
#include "lpfeas/dictionary.hpp"
#include "lpfeas/trace.hpp"

namespace lpfeas {

struct AsmdState {
    Dictionary dict;
    std::vector<Rational> w;   // length rows+1; w[0] = -(sum of tagged entries of row 0) >= 0
    int minus_cols = 0;        // number of Minus-tagged nonbasic labels
    SolverOptions options;
    PivotTrace trace;
    std::vector<TableSnapshot> snapshots;
    int iteration = 0;
    bool done = false;
};

namespace detail {

inline std::vector<Rational> recompute_w_prime(const Dictionary& dict) {
    std::vector<Rational> w(static_cast<std::size_t>(dict.rows()) + 1);
    for (int j = 1; j <= dict.cols(); ++j) {
        if (!dict.nonbasic[j - 1].is_minus()) continue;
        for (int i = 0; i <= dict.rows(); ++i) w[i] -= dict.d(i, j);
    }
    return w;
}

inline void check_asmd_invariants(const AsmdState& state) {
    if (state.w != recompute_w_prime(state.dict))
        throw std::logic_error("feasibility column out of sync with tagged columns");
    int tagged = 0;
    for (int j = 1; j <= state.dict.cols(); ++j) {
        const bool minus = state.dict.nonbasic[j - 1].is_minus();
        tagged += minus ? 1 : 0;
        const Rational& v = state.dict.d(0, j);
        if (minus && v.is_positive())
            throw std::logic_error("Minus-tagged column with positive cost entry");
        if (!minus && v.is_negative())
            throw std::logic_error("untagged column with negative cost entry");
    }
    if (tagged != state.minus_cols) throw std::logic_error("Minus tag count out of sync");
}

inline TableSnapshot make_asmd_snapshot(const AsmdState& state, std::optional<std::pair<int, int>> star) {
    TableSnapshot snap;
    snap.heading = state.iteration == 0 ? "Initial table" : "Iteration " + std::to_string(state.iteration);
    snap.basic = state.dict.basic;
    snap.nonbasic = state.dict.nonbasic;
    snap.d = state.dict.d;
    snap.w_prime = state.w;
    snap.star = star;
    snap.dual_annotations = true;
    return snap;
}

}  // namespace detail

// Tag the negative-cost columns and form w'. A dictionary whose objective row
// is already nonnegative is dual feasible with zero steps.
inline AsmdState init_asmd(Dictionary dict, SolverOptions options = {}) {
    AsmdState state;
    state.dict = std::move(dict);
    state.options = options;
    for (int j = 1; j <= state.dict.cols(); ++j) {
        if (state.dict.d(0, j).is_negative()) {
            state.dict.nonbasic[j - 1].tag = SignTag::minus;
            ++state.minus_cols;
        }
    }
    state.w = detail::recompute_w_prime(state.dict);
    state.trace.initial_corner = state.dict.corner_point();
    if (state.minus_cols == 0) {
        state.trace.outcome = Outcome::feasible;
        state.done = true;
    }
    return state;
}

// Most negative w' entry among the basic rows (smallest label under Bland);
// ties go to the earliest label. Nothing to select ends the run.
inline std::optional<Label> select_leaving_row(const AsmdState& state) {
    std::optional<int> best;
    for (int i = 1; i <= state.dict.rows(); ++i) {
        if (!state.w[i].is_negative()) continue;
        if (!best) {
            best = i;
            continue;
        }
        const Label& cand = state.dict.basic[i - 1];
        const Label& cur = state.dict.basic[*best - 1];
        if (state.options.bland) {
            if (order_less(cand, cur)) best = i;
        } else if (state.w[i] < state.w[*best] ||
                   (state.w[i] == state.w[*best] && order_less(cand, cur))) {
            best = i;
        }
    }
    if (!best) return std::nullopt;
    return state.dict.basic[*best - 1];
}

// Maximum-ratio column over both candidate families: untagged columns with
// d(0,j) >= 0 and a negative row entry, tagged columns with d(0,j) <= 0 and a
// positive row entry. Every ratio is <= 0; ties go to the earliest label. A
// negative w' entry guarantees some tagged column qualifies.
inline Label select_entering_col(const AsmdState& state, const Label& leaving) {
    const int r = state.dict.basic_pos(leaving);
    std::optional<Rational> best_ratio;
    std::optional<int> best_col;
    for (int j = 1; j <= state.dict.cols(); ++j) {
        const Label& label = state.dict.nonbasic[j - 1];
        const Rational& cost = state.dict.d(0, j);
        const Rational& entry = state.dict.d(r, j);
        const bool admissible = label.is_minus()
                                    ? (!cost.is_positive() && entry.is_positive())
                                    : (!cost.is_negative() && entry.is_negative());
        if (!admissible) continue;
        Rational ratio = cost / entry;
        if (!best_col || ratio > *best_ratio ||
            (ratio == *best_ratio && order_less(label, state.dict.nonbasic[*best_col - 1]))) {
            best_ratio = std::move(ratio);
            best_col = j;
        }
    }
    if (!best_col) throw std::logic_error("no entering column for a leaving row");
    return state.dict.nonbasic[*best_col - 1];
}

// Pivot, carry w' along by the same column transform, and if the entering
// label was Minus-tagged flip it to Plus: its new row equals the old column's
// image except that the w' entry gains exactly 1.
inline void asmd_step(AsmdState& state, const Label& leaving, const Label& entering) {
    const int r = state.dict.basic_pos(leaving);
    const int s = state.dict.nonbasic_pos(entering);
    const Rational p0 = state.dict.d(r, s);
    const bool entering_minus = state.dict.nonbasic[s - 1].is_minus();
    TraceStep step;
    step.entering = state.dict.nonbasic[s - 1];
    step.leaving = state.dict.basic[r - 1];
    step.pivot_value = p0;

    const Rational wr = state.w[r];
    for (int i = 0; i <= state.dict.rows(); ++i)
        if (i != r) state.w[i] -= state.dict.d(i, s) * wr / p0;
    state.w[r] = wr / p0;
    state.dict.pivot(r, s);
    if (entering_minus) {
        state.w[r] += Rational(1);
        state.dict.basic[r - 1].tag = SignTag::plus;
        --state.minus_cols;
    }

    ++state.iteration;
    step.iteration = state.iteration;
    step.corner = state.dict.corner_point();
    step.w0 = state.w[0];
    state.trace.steps.push_back(std::move(step));
    detail::check_asmd_invariants(state);
}

struct AsmdResult {
    PivotTrace trace;
    Dictionary dict;
    std::vector<TableSnapshot> snapshots;
};

// Drive to dual feasibility. Exits mirror the primal solver: no Minus tags
// left (dual feasible); no selectable row with w'0 = 0 (all tagged columns
// sit at exactly 0, stale tags cleared); no selectable row with w'0 > 0
// (dual infeasible, w' is the certificate); iteration cap.
inline AsmdResult asmd_solve(const Dictionary& dict, SolverOptions options = {}) {
    AsmdState state = init_asmd(dict, options);
    const auto snapshot = [&](std::optional<std::pair<int, int>> star) {
        if (state.options.record_snapshots)
            state.snapshots.push_back(detail::make_asmd_snapshot(state, star));
    };
    while (true) {
        if (state.minus_cols == 0) {
            state.trace.outcome = Outcome::feasible;
            snapshot(std::nullopt);
            break;
        }
        const auto leaving = select_leaving_row(state);
        if (!leaving) {
            if (state.w[0].is_zero()) {
                for (auto& label : state.dict.nonbasic)
                    if (label.is_minus()) label.tag = SignTag::plus;
                state.minus_cols = 0;
                state.w = detail::recompute_w_prime(state.dict);
                state.trace.outcome = Outcome::feasible;
            } else {
                state.trace.outcome = Outcome::infeasible;
                Certificate cert;
                cert.w0 = state.w[0];
                for (int i = 1; i <= state.dict.rows(); ++i)
                    cert.entries.emplace_back(state.dict.basic[i - 1], state.w[i]);
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
        const Label entering = select_entering_col(state, *leaving);
        snapshot(std::make_pair(state.dict.basic_pos(*leaving), state.dict.nonbasic_pos(entering)));
        asmd_step(state, *leaving, entering);
    }
    state.done = true;
    return {std::move(state.trace), std::move(state.dict), std::move(state.snapshots)};
}

inline AsmdResult asmd_solve(const LinearProgram& lp, SolverOptions options = {}) {
    return asmd_solve(build_dictionary(lp), options);
}

}  // namespace lpfeas
