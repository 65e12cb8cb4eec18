/**
 * oracle.hpp
 *
 * Classical two-phase phase 1 with explicit artificial variables, kept as an
 * independent reference implementation. Rows with negative right-hand side
 * are negated and given a basic artificial; the phase-1 objective minimizes
 * the artificial sum, run with textbook primal simplex (steepest entering
 * entry, standard minimum-ratio leaving rule) under the same deterministic
 * tie order as the artificial-free solver. compare_paths checks that the two
 * walk identical pivot sequences and corner paths.
 *
 * The phase-1 row w expresses -(sum of artificials) in the current nonbasic
 * variables, so w[0] <= 0 throughout and w[0] = 0 exactly at feasibility.
 * Artificial columns stay in the tableau after leaving the basis but are
 * never entering candidates.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpfeas/asm_solver.hpp"
#include "lpfeas/dictionary.hpp"
#include "lpfeas/trace.hpp"

namespace lpfeas {

struct AuxiliaryProblem {
    Dictionary dict;               // row 0 carries the original objective
    std::vector<Rational> w;       // phase-1 row, length cols+1
    std::vector<int> negated_rows; // 1-based rows that carried b_i < 0
};

// Equality form with artificials: a row with b_i < 0 becomes
// -A_i x - s_i + a_i = -b_i with a_i basic at -b_i, so the whole start basis
// is feasible. Rows with b_i >= 0 keep their slack basic. The phase-1 row is
// -(sum of artificials) written in the nonbasic variables.
inline AuxiliaryProblem build_auxiliary(const LinearProgram& lp) {
    lp.validate();
    const int p = lp.num_vars();
    const int m = lp.num_rows();
    AuxiliaryProblem aux;
    for (int i = 1; i <= m; ++i)
        if (lp.b[i - 1].is_negative()) aux.negated_rows.push_back(i);
    const int extra = static_cast<int>(aux.negated_rows.size());

    Dictionary& dict = aux.dict;
    dict.num_originals = p;
    dict.d = Matrix(m + 1, p + extra + 1);
    for (int j = 1; j <= p; ++j) {
        dict.nonbasic.push_back(Label::original(j));
        dict.d(0, j) = -lp.c[j - 1];
    }
    // Slacks of negated rows start nonbasic, one column each.
    std::vector<int> slack_col(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k < extra; ++k) {
        const int row = aux.negated_rows[k];
        slack_col[row] = p + 1 + k;
        dict.nonbasic.push_back(Label::slack(p + row));
    }
    for (int i = 1; i <= m; ++i) {
        const bool negated = slack_col[i] != 0;
        dict.basic.push_back(negated ? Label::artificial(p + i) : Label::slack(p + i));
        dict.d(i, 0) = negated ? -lp.b[i - 1] : lp.b[i - 1];
        for (int j = 1; j <= p; ++j)
            dict.d(i, j) = negated ? -lp.a[i - 1][j - 1] : lp.a[i - 1][j - 1];
        if (negated) dict.d(i, slack_col[i]) = Rational(-1);
    }

    aux.w.assign(static_cast<std::size_t>(dict.cols()) + 1, Rational(0));
    for (const int i : aux.negated_rows) {
        aux.w[0] += lp.b[i - 1];
        for (int j = 1; j <= p; ++j) aux.w[j] += lp.a[i - 1][j - 1];
        aux.w[slack_col[i]] = Rational(1);
    }
    return aux;
}

namespace detail {

// -(sum of artificials) re-expressed from scratch in the current basis: for a
// basic artificial subtract its row, for a nonbasic one subtract its unit
// column. Keeps the incrementally pivoted w row honest.
inline std::vector<Rational> recompute_oracle_w(const Dictionary& dict) {
    std::vector<Rational> w(static_cast<std::size_t>(dict.cols()) + 1);
    for (int i = 1; i <= dict.rows(); ++i) {
        if (!dict.basic[i - 1].is_artificial()) continue;
        for (int j = 0; j <= dict.cols(); ++j) w[j] -= dict.d(i, j);
    }
    for (int j = 1; j <= dict.cols(); ++j)
        if (dict.nonbasic[j - 1].is_artificial()) w[j] += Rational(1);
    return w;
}

inline void check_oracle_invariants(const Dictionary& dict, const std::vector<Rational>& w) {
    if (w != recompute_oracle_w(dict))
        throw std::logic_error("phase-1 row out of sync with artificial values");
    for (int i = 1; i <= dict.rows(); ++i)
        if (dict.d(i, 0).is_negative())
            throw std::logic_error("oracle tableau lost primal feasibility");
}

inline TableSnapshot make_oracle_snapshot(const Dictionary& dict, const std::vector<Rational>& w,
                                          int iteration, std::optional<std::pair<int, int>> star) {
    TableSnapshot snap;
    snap.heading = iteration == 0 ? "Initial table" : "Iteration " + std::to_string(iteration);
    snap.basic = dict.basic;
    snap.nonbasic = dict.nonbasic;
    snap.d = dict.d;
    snap.w = w;
    snap.star = star;
    snap.show_objective_row = objective_row_nonzero(dict);
    return snap;
}

}  // namespace detail

struct PhaseOneResult {
    PivotTrace trace;
    Dictionary dict;
    std::vector<TableSnapshot> snapshots;
    std::vector<int> redundant_rows;  // rows whose zero artificial had no way out
    int cleanup_pivots = 0;           // post-termination artificial pivot-outs
};

inline PhaseOneResult simplex_phase1(const LinearProgram& lp, SolverOptions options = {}) {
    AuxiliaryProblem aux = build_auxiliary(lp);
    Dictionary& dict = aux.dict;
    std::vector<Rational>& w = aux.w;
    PhaseOneResult result;
    result.trace.initial_corner = dict.corner_point();
    int iteration = 0;
    const auto snapshot = [&](std::optional<std::pair<int, int>> star) {
        if (options.record_snapshots)
            result.snapshots.push_back(detail::make_oracle_snapshot(dict, w, iteration, star));
    };
    const auto pivot_with_w = [&](int r, int s) {
        const Rational p0 = dict.d(r, s);
        const Rational ws = w[s];
        for (int j = 0; j <= dict.cols(); ++j)
            if (j != s) w[j] -= ws * dict.d(r, j) / p0;
        w[s] = -ws / p0;
        dict.pivot(r, s);
    };
    detail::check_oracle_invariants(dict, w);

    while (true) {
        // Entering: steepest negative w entry among non-artificial columns.
        std::optional<int> s;
        for (int j = 1; j <= dict.cols(); ++j) {
            if (dict.nonbasic[j - 1].is_artificial() || !w[j].is_negative()) continue;
            if (!s) {
                s = j;
                continue;
            }
            const Label& cand = dict.nonbasic[j - 1];
            const Label& cur = dict.nonbasic[*s - 1];
            if (options.bland) {
                if (order_less(cand, cur)) s = j;
            } else if (w[j] < w[*s] || (w[j] == w[*s] && order_less(cand, cur))) {
                s = j;
            }
        }
        if (!s) break;
        // Leaving: minimum ratio over positive entries. The phase-1 objective
        // is bounded by 0, so a candidate always exists.
        std::optional<Rational> best_ratio;
        std::optional<int> r;
        for (int i = 1; i <= dict.rows(); ++i) {
            const Rational& entry = dict.d(i, *s);
            if (!entry.is_positive()) continue;
            Rational ratio = dict.d(i, 0) / entry;
            if (!r || ratio < *best_ratio ||
                (ratio == *best_ratio && order_less(dict.basic[i - 1], dict.basic[*r - 1]))) {
                best_ratio = std::move(ratio);
                r = i;
            }
        }
        if (!r) throw std::logic_error("phase-1 column with no positive entry");
        if (iteration >= options.max_iterations) {
            result.trace.outcome = Outcome::iteration_cap_exceeded;
            snapshot(std::nullopt);
            result.dict = std::move(dict);
            return result;
        }
        snapshot(std::make_pair(*r, *s));
        TraceStep step;
        step.entering = dict.nonbasic[*s - 1];
        step.leaving = dict.basic[*r - 1];
        step.pivot_value = dict.d(*r, *s);
        pivot_with_w(*r, *s);
        step.iteration = ++iteration;
        step.corner = dict.corner_point();
        step.w0 = w[0];
        result.trace.steps.push_back(std::move(step));
        detail::check_oracle_invariants(dict, w);
    }

    if (w[0].is_zero()) {
        result.trace.outcome = Outcome::feasible;
        // Housekeeping: pivot out any zero-valued basic artificial on the
        // earliest nonzero non-artificial entry of its row; a row with none
        // is redundant. Not part of the pivot path.
        for (int i = 1; i <= dict.rows(); ++i) {
            if (!dict.basic[i - 1].is_artificial()) continue;
            if (!dict.d(i, 0).is_zero())
                throw std::logic_error("nonzero artificial at zero phase-1 optimum");
            std::optional<int> s;
            for (int j = 1; j <= dict.cols(); ++j) {
                if (dict.nonbasic[j - 1].is_artificial() || dict.d(i, j).is_zero()) continue;
                if (!s || order_less(dict.nonbasic[j - 1], dict.nonbasic[*s - 1])) s = j;
            }
            if (s) {
                pivot_with_w(i, *s);
                ++result.cleanup_pivots;
                detail::check_oracle_invariants(dict, w);
            } else {
                result.redundant_rows.push_back(i);
            }
        }
    } else {
        result.trace.outcome = Outcome::infeasible;
        Certificate cert;
        cert.w0 = w[0];
        for (int j = 1; j <= dict.cols(); ++j)
            cert.entries.emplace_back(dict.nonbasic[j - 1], w[j]);
        result.trace.certificate = std::move(cert);
    }
    snapshot(std::nullopt);
    result.dict = std::move(dict);
    return result;
}

// ---------------------------------------------------------------------------
// Path comparison.

struct PathReport {
    bool equal = false;
    std::optional<int> first_divergence;                 // index into the compared sequence
    std::vector<std::vector<Rational>> corners_a, corners_b;
    std::vector<std::pair<std::string, std::string>> pivots_a, pivots_b;
};

// Common naming for both methods: a Minus-tagged label and the artificial
// guarding the same row are the same phase-1 object ("a<k>"); a Plus-tagged
// label re-enters as the plain variable it always was ("x<k>").
inline std::string normalize_pivot_label(const Label& label) {
    if (label.is_artificial() || label.is_minus()) return "a" + std::to_string(label.number);
    return "x" + std::to_string(label.number);
}

namespace detail {

inline std::vector<std::pair<std::string, std::string>> normalized_pivots(const PivotTrace& trace) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& step : trace.steps)
        out.emplace_back(normalize_pivot_label(step.entering), normalize_pivot_label(step.leaving));
    return out;
}

inline PathReport compare_corner_and_pivots(std::vector<std::vector<Rational>> ca,
                                            std::vector<std::vector<Rational>> cb,
                                            std::vector<std::pair<std::string, std::string>> pa,
                                            std::vector<std::pair<std::string, std::string>> pb,
                                            bool compare_pivots) {
    PathReport report;
    report.corners_a = std::move(ca);
    report.corners_b = std::move(cb);
    report.pivots_a = std::move(pa);
    report.pivots_b = std::move(pb);
    report.equal = true;
    const std::size_t nc = std::min(report.corners_a.size(), report.corners_b.size());
    for (std::size_t t = 0; t < nc; ++t) {
        if (report.corners_a[t] != report.corners_b[t]) {
            report.equal = false;
            report.first_divergence = static_cast<int>(t);
            return report;
        }
    }
    if (report.corners_a.size() != report.corners_b.size()) {
        report.equal = false;
        report.first_divergence = static_cast<int>(nc);
        return report;
    }
    if (!compare_pivots) return report;
    const std::size_t np = std::min(report.pivots_a.size(), report.pivots_b.size());
    for (std::size_t t = 0; t < np; ++t) {
        if (report.pivots_a[t] != report.pivots_b[t]) {
            report.equal = false;
            report.first_divergence = static_cast<int>(t);
            return report;
        }
    }
    if (report.pivots_a.size() != report.pivots_b.size()) {
        report.equal = false;
        report.first_divergence = static_cast<int>(np);
    }
    return report;
}

}  // namespace detail

// Equal iff the label-normalized pivot sequences and the visited corner
// paths agree elementwise.
inline PathReport compare_paths(const PivotTrace& a, const PivotTrace& b) {
    return detail::compare_corner_and_pivots(visited_corners(a), visited_corners(b),
                                             detail::normalized_pivots(a),
                                             detail::normalized_pivots(b), true);
}

// Fixture form: a bare corner path with no pivot records.
inline PathReport compare_paths(const PivotTrace& a,
                                const std::vector<std::vector<Rational>>& fixture_corners) {
    return detail::compare_corner_and_pivots(visited_corners(a), fixture_corners,
                                             detail::normalized_pivots(a), {}, false);
}

}  // namespace lpfeas
