#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpfeas/lp_parse.hpp"
#include "lpfeas/rational.hpp"

namespace test_helpers {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string load_fixture_text(const std::string& name) {
    std::ifstream file(fixture_path(name));
    if (!file) throw std::runtime_error("missing fixture: " + name);
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

inline lpfeas::LinearProgram load_lp_fixture(const std::string& name) {
    return lpfeas::parse_and_normalize(load_fixture_text(name));
}

// Corner-path file: one corner per line, whitespace-separated rationals,
// '#' comment lines skipped.
inline std::vector<std::vector<lpfeas::Rational>> load_corner_fixture(const std::string& name) {
    std::istringstream in(load_fixture_text(name));
    std::vector<std::vector<lpfeas::Rational>> corners;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::vector<lpfeas::Rational> corner;
        std::string field;
        while (fields >> field) corner.push_back(lpfeas::parse_rational(field));
        if (!corner.empty()) corners.push_back(std::move(corner));
    }
    return corners;
}

// Shorthand for corner/vector literals in goldens.
inline std::vector<lpfeas::Rational> rats(const std::vector<std::string>& texts) {
    std::vector<lpfeas::Rational> out;
    for (const auto& t : texts) out.push_back(lpfeas::parse_rational(t));
    return out;
}

}  // namespace test_helpers

#include "lpfeas/dictionary.hpp"

namespace test_helpers {

inline lpfeas::Matrix matrix_from(const std::vector<std::vector<std::string>>& rows) {
    lpfeas::Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = lpfeas::parse_rational(rows[i][j]);
    return m;
}

inline std::vector<std::string> label_names(const std::vector<lpfeas::Label>& labels) {
    std::vector<std::string> names;
    for (const auto& label : labels) names.push_back(label.name());
    return names;
}

}  // namespace test_helpers
