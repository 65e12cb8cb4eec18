/**
 * trace_render.hpp
 *
 * Two renderings of a solver run.
 *
 * Table format reproduces the worked-example layout: label column, b column
 * first, one column per nonbasic label, the upcoming pivot entry starred. The
 * primal methods print the feasibility row w above the rows (omitted once it
 * is identically zero) and hide an identically-zero objective row; the dual
 * variant prints z first, the feasibility column w' last and annotates rows
 * and columns with their dual labels.
 *
 * Machine format is JSON Lines: one header record, then one record per
 * snapshot and per pivot, then an outcome record. parse_machine() restores
 * the document exactly; render/parse is a lossless round trip.
 */
#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpfeas/dictionary.hpp"
#include "lpfeas/label.hpp"
#include "lpfeas/lp_parse.hpp"
#include "lpfeas/rational.hpp"
#include "lpfeas/trace.hpp"

namespace lpfeas {

struct TraceDocument {
    std::string method;   // "asm", "asmd" or "oracle"
    std::string digest;   // instance digest
    int num_vars = 0;     // p, for decoding label strings
    int num_rows = 0;     // m
    std::vector<TableSnapshot> snapshots;
    PivotTrace trace;
    std::vector<Rational> solution;  // final corner / complementary solution

    friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

inline TraceDocument make_document(std::string method, const LinearProgram& lp, PivotTrace trace,
                                   std::vector<TableSnapshot> snapshots, const Dictionary& final_dict) {
    TraceDocument doc;
    doc.method = std::move(method);
    doc.digest = lp_digest(lp);
    doc.num_vars = lp.num_vars();
    doc.num_rows = lp.num_rows();
    doc.snapshots = std::move(snapshots);
    doc.trace = std::move(trace);
    doc.solution = final_dict.corner_point();
    return doc;
}

namespace detail {

inline bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// One table block as rows of cells, then column-aligned.
inline void render_snapshot(std::string& out, const TableSnapshot& snap) {
    const int m = static_cast<int>(snap.basic.size());
    const int n = static_cast<int>(snap.nonbasic.size());
    const bool show_w = snap.w && !all_zero(*snap.w);
    const bool show_wp = snap.w_prime && !all_zero(*snap.w_prime);
    const auto starred = [&](int i, int j, std::string cell) {
        if (snap.star && snap.star->first == i && snap.star->second == j) cell += '*';
        return cell;
    };

    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"", "b"};
    for (int j = 1; j <= n; ++j)
        header.push_back(snap.dual_annotations ? "x" + std::to_string(snap.nonbasic[j - 1].number)
                                               : snap.nonbasic[j - 1].name());
    if (show_wp) header.push_back("w'");
    grid.push_back(std::move(header));

    if (show_w) {
        std::vector<std::string> row{"w", (*snap.w)[0].str()};
        for (int j = 1; j <= n; ++j) row.push_back((*snap.w)[j].str());
        grid.push_back(std::move(row));
    }
    if (snap.show_objective_row) {
        std::vector<std::string> row{"z", snap.d(0, 0).str()};
        for (int j = 1; j <= n; ++j) row.push_back(snap.d(0, j).str());
        if (show_wp) row.push_back((*snap.w_prime)[0].str());
        grid.push_back(std::move(row));
    }
    for (int i = 1; i <= m; ++i) {
        std::vector<std::string> row;
        row.push_back(snap.dual_annotations ? "x" + std::to_string(snap.basic[i - 1].number)
                                            : snap.basic[i - 1].name());
        row.push_back(snap.d(i, 0).str());
        for (int j = 1; j <= n; ++j) row.push_back(starred(i, j, snap.d(i, j).str()));
        if (show_wp) row.push_back((*snap.w_prime)[i].str());
        if (snap.dual_annotations) row.push_back(snap.basic[i - 1].dual_name());
        grid.push_back(std::move(row));
    }
    if (snap.dual_annotations) {
        std::vector<std::string> footer{"", ""};
        for (int j = 1; j <= n; ++j) footer.push_back(snap.nonbasic[j - 1].dual_name());
        grid.push_back(std::move(footer));
    }

    std::vector<std::size_t> width;
    for (const auto& row : grid)
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (width.size() <= k) width.push_back(0);
            width[k] = std::max(width[k], row[k].size());
        }
    out += snap.heading + ":\n";
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string cell = row[k];
            cell.resize(width[k], ' ');
            line += cell;
            if (k + 1 < row.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    out += "\n";
}

inline std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ' ';
        out += v[k].str();
    }
    return out;
}

}  // namespace detail

inline std::string render_summary(const TraceDocument& doc) {
    std::string out;
    out += "outcome: " + outcome_name(doc.trace.outcome) + "\n";
    out += "solution: " + detail::join_rationals(doc.solution) + "\n";
    if (doc.trace.certificate) {
        const auto& cert = *doc.trace.certificate;
        out += "certificate: w0 = " + cert.w0.str();
        for (const auto& [label, value] : cert.entries)
            out += ", " + label.name() + " = " + value.str();
        out += "\n";
    }
    return out;
}

inline std::string render_table(const TraceDocument& doc) {
    std::string out;
    out += "method: " + doc.method + "\n";
    out += "instance: " + doc.digest + "\n\n";
    for (const auto& snap : doc.snapshots) detail::render_snapshot(out, snap);
    out += render_summary(doc);
    return out;
}

namespace detail {

inline nlohmann::ordered_json rationals_to_json(const std::vector<Rational>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

inline std::vector<Rational> rationals_from_json(const nlohmann::ordered_json& arr) {
    std::vector<Rational> v;
    for (const auto& s : arr) v.push_back(parse_rational(s.get<std::string>()));
    return v;
}

inline nlohmann::ordered_json labels_to_json(const std::vector<Label>& labels) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& label : labels) arr.push_back(label.name());
    return arr;
}

inline std::vector<Label> labels_from_json(const nlohmann::ordered_json& arr, int num_vars) {
    std::vector<Label> labels;
    for (const auto& s : arr) labels.push_back(parse_label(s.get<std::string>(), num_vars));
    return labels;
}

}  // namespace detail

inline std::string render_machine(const TraceDocument& doc) {
    using json = nlohmann::ordered_json;
    std::string out;
    const auto emit = [&](const json& j) { out += j.dump() + "\n"; };
    emit(json{{"type", "header"},
              {"method", doc.method},
              {"digest", doc.digest},
              {"num_vars", doc.num_vars},
              {"num_rows", doc.num_rows},
              {"initial_corner", detail::rationals_to_json(doc.trace.initial_corner)}});
    for (const auto& snap : doc.snapshots) {
        json j{{"type", "snapshot"},
               {"heading", snap.heading},
               {"basic", detail::labels_to_json(snap.basic)},
               {"nonbasic", detail::labels_to_json(snap.nonbasic)},
               {"show_z", snap.show_objective_row},
               {"dual", snap.dual_annotations}};
        json rows = json::array();
        for (int i = 0; i < snap.d.rows(); ++i) {
            json row = json::array();
            for (int k = 0; k < snap.d.cols(); ++k) row.push_back(snap.d(i, k).str());
            rows.push_back(std::move(row));
        }
        j["d"] = std::move(rows);
        if (snap.w) j["w"] = detail::rationals_to_json(*snap.w);
        if (snap.w_prime) j["w_prime"] = detail::rationals_to_json(*snap.w_prime);
        if (snap.star) j["star"] = json::array({snap.star->first, snap.star->second});
        emit(j);
    }
    for (const auto& step : doc.trace.steps) {
        emit(json{{"type", "step"},
                  {"iter", step.iteration},
                  {"entering", step.entering.name()},
                  {"leaving", step.leaving.name()},
                  {"pivot", step.pivot_value.str()},
                  {"corner", detail::rationals_to_json(step.corner)},
                  {"w0", step.w0.str()}});
    }
    json outcome{{"type", "outcome"},
                 {"outcome", outcome_name(doc.trace.outcome)},
                 {"solution", detail::rationals_to_json(doc.solution)}};
    if (doc.trace.certificate) {
        json entries = json::array();
        for (const auto& [label, value] : doc.trace.certificate->entries)
            entries.push_back(json::array({label.name(), value.str()}));
        outcome["certificate"] = json{{"w0", doc.trace.certificate->w0.str()}, {"entries", entries}};
    }
    emit(outcome);
    return out;
}

inline TraceDocument parse_machine(const std::string& text) {
    using json = nlohmann::ordered_json;
    TraceDocument doc;
    std::istringstream in(text);
    std::string line;
    bool saw_header = false, saw_outcome = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        const std::string type = j.at("type").get<std::string>();
        if (type == "header") {
            doc.method = j.at("method").get<std::string>();
            doc.digest = j.at("digest").get<std::string>();
            doc.num_vars = j.at("num_vars").get<int>();
            doc.num_rows = j.at("num_rows").get<int>();
            doc.trace.initial_corner = detail::rationals_from_json(j.at("initial_corner"));
            saw_header = true;
        } else if (type == "snapshot") {
            TableSnapshot snap;
            snap.heading = j.at("heading").get<std::string>();
            snap.basic = detail::labels_from_json(j.at("basic"), doc.num_vars);
            snap.nonbasic = detail::labels_from_json(j.at("nonbasic"), doc.num_vars);
            snap.show_objective_row = j.at("show_z").get<bool>();
            snap.dual_annotations = j.at("dual").get<bool>();
            const auto& rows = j.at("d");
            const int r = static_cast<int>(rows.size());
            const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
            snap.d = Matrix(r, c);
            for (int i = 0; i < r; ++i)
                for (int k = 0; k < c; ++k)
                    snap.d(i, k) = parse_rational(rows[i][k].get<std::string>());
            if (j.contains("w")) snap.w = detail::rationals_from_json(j.at("w"));
            if (j.contains("w_prime")) snap.w_prime = detail::rationals_from_json(j.at("w_prime"));
            if (j.contains("star"))
                snap.star = std::make_pair(j.at("star")[0].get<int>(), j.at("star")[1].get<int>());
            doc.snapshots.push_back(std::move(snap));
        } else if (type == "step") {
            TraceStep step;
            step.iteration = j.at("iter").get<int>();
            step.entering = parse_label(j.at("entering").get<std::string>(), doc.num_vars);
            step.leaving = parse_label(j.at("leaving").get<std::string>(), doc.num_vars);
            step.pivot_value = parse_rational(j.at("pivot").get<std::string>());
            step.corner = detail::rationals_from_json(j.at("corner"));
            step.w0 = parse_rational(j.at("w0").get<std::string>());
            doc.trace.steps.push_back(std::move(step));
        } else if (type == "outcome") {
            const std::string name = j.at("outcome").get<std::string>();
            doc.trace.outcome = name == "feasible"     ? Outcome::feasible
                                : name == "infeasible" ? Outcome::infeasible
                                                       : Outcome::iteration_cap_exceeded;
            doc.solution = detail::rationals_from_json(j.at("solution"));
            if (j.contains("certificate")) {
                Certificate cert;
                cert.w0 = parse_rational(j.at("certificate").at("w0").get<std::string>());
                for (const auto& entry : j.at("certificate").at("entries"))
                    cert.entries.emplace_back(parse_label(entry[0].get<std::string>(), doc.num_vars),
                                              parse_rational(entry[1].get<std::string>()));
                doc.trace.certificate = std::move(cert);
            }
            saw_outcome = true;
        } else {
            throw std::invalid_argument("unknown trace record type: " + type);
        }
    }
    if (!saw_header || !saw_outcome)
        throw std::invalid_argument("machine trace missing header or outcome record");
    return doc;
}

}  // namespace lpfeas
