/**
 * trace.hpp
 *
 * Pivot traces and tableau snapshots shared by all three solvers.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpfeas/dictionary.hpp"
#include "lpfeas/label.hpp"
#include "lpfeas/rational.hpp"

namespace lpfeas {

// For the dual variant, "feasible" means dual feasible.
enum class Outcome { feasible, infeasible, iteration_cap_exceeded };

inline std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::feasible: return "feasible";
        case Outcome::infeasible: return "infeasible";
        default: return "iteration-cap-exceeded";
    }
}

struct TraceStep {
    int iteration = 0;        // 1-based
    Label entering;           // tags as of pivot time
    Label leaving;
    Rational pivot_value;     // d(r,s) before the pivot
    std::vector<Rational> corner;  // original variables after the pivot
    Rational w0;              // feasibility objective after the pivot

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// Infeasibility witness: the final feasibility row. Every entry is >= 0 while
// w0 < 0, so the tagged rows sum to a constraint no nonnegative point meets.
struct Certificate {
    Rational w0;
    std::vector<std::pair<Label, Rational>> entries;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct PivotTrace {
    std::vector<TraceStep> steps;
    Outcome outcome = Outcome::feasible;
    std::optional<Certificate> certificate;
    std::vector<Rational> initial_corner;

    friend bool operator==(const PivotTrace&, const PivotTrace&) = default;
};

// One rendered table state: the dictionary plus whichever feasibility vector
// the method maintains, and the position of the upcoming pivot (starred).
struct TableSnapshot {
    std::string heading;                          // "Initial table", "Iteration 1", ...
    std::vector<Label> basic;
    std::vector<Label> nonbasic;
    Matrix d;
    std::optional<std::vector<Rational>> w;       // feasibility row, length cols+1
    std::optional<std::vector<Rational>> w_prime; // dual feasibility column, length rows+1
    std::optional<std::pair<int, int>> star;      // 1-based (row, col) of the next pivot
    bool show_objective_row = true;               // hidden for identically-zero objectives
    bool dual_annotations = false;                // render y-labels (dual variant)

    friend bool operator==(const TableSnapshot&, const TableSnapshot&) = default;
};

// Corner points actually visited: the initial corner then each step's corner,
// with consecutive duplicates collapsed (degenerate pivots do not move).
inline std::vector<std::vector<Rational>> visited_corners(const PivotTrace& trace) {
    std::vector<std::vector<Rational>> path;
    path.push_back(trace.initial_corner);
    for (const auto& step : trace.steps)
        if (step.corner != path.back()) path.push_back(step.corner);
    return path;
}

}  // namespace lpfeas
