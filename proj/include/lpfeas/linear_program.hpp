/**
 * linear_program.hpp
 *
 * Normalized linear program: max c^T x subject to A x <= b, x >= 0. Every
 * relation has already been folded into <= rows by the front end.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "lpfeas/rational.hpp"

namespace lpfeas {

struct LinearProgram {
    std::vector<std::string> var_names;       // size p, positional
    std::vector<std::vector<Rational>> a;     // m rows, each of size p
    std::vector<Rational> b;                  // size m
    std::vector<Rational> c;                  // size p

    int num_vars() const { return static_cast<int>(var_names.size()); }
    int num_rows() const { return static_cast<int>(a.size()); }

    void validate() const {
        const std::size_t p = var_names.size();
        if (c.size() != p) throw std::invalid_argument("LinearProgram: |c| != |vars|");
        if (b.size() != a.size()) throw std::invalid_argument("LinearProgram: |b| != rows");
        for (const auto& row : a)
            if (row.size() != p) throw std::invalid_argument("LinearProgram: ragged row");
        std::unordered_set<std::string> seen;
        for (const auto& name : var_names)
            if (!seen.insert(name).second)
                throw std::invalid_argument("LinearProgram: duplicate variable '" + name + "'");
    }

    friend bool operator==(const LinearProgram&, const LinearProgram&) = default;
};

}  // namespace lpfeas
