/**
 * random_lp.hpp
 *
 * Reproducible random instances for the equivalence harness. Draws are taken
 * from mt19937_64 by modulus so the stream is identical on every platform.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lpfeas/linear_program.hpp"
#include "lpfeas/rational.hpp"

namespace lpfeas {

namespace detail {

inline long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

// Integer coefficients in [-entry_bound, entry_bound]. With feasible_bias the
// right-hand side is built as A x* + slack for a random nonnegative x*, so
// the instance is feasible by construction; otherwise b is drawn freely.
inline LinearProgram gen_random_lp(std::uint64_t seed, int rows, int cols, int entry_bound,
                                   bool feasible_bias) {
    std::mt19937_64 rng(seed);
    const long long bound = entry_bound;
    LinearProgram lp;
    for (int j = 1; j <= cols; ++j) lp.var_names.push_back("x" + std::to_string(j));
    for (int j = 0; j < cols; ++j) lp.c.emplace_back(detail::draw_int(rng, -bound, bound));
    for (int i = 0; i < rows; ++i) {
        std::vector<Rational> row;
        for (int j = 0; j < cols; ++j) row.emplace_back(detail::draw_int(rng, -bound, bound));
        lp.a.push_back(std::move(row));
    }
    if (feasible_bias) {
        std::vector<Rational> x;
        for (int j = 0; j < cols; ++j) x.emplace_back(detail::draw_int(rng, 0, bound));
        for (int i = 0; i < rows; ++i) {
            Rational v;
            for (int j = 0; j < cols; ++j) v += lp.a[i][j] * x[j];
            lp.b.push_back(v + Rational(detail::draw_int(rng, 0, bound)));
        }
    } else {
        for (int i = 0; i < rows; ++i) lp.b.emplace_back(detail::draw_int(rng, -bound, bound));
    }
    return lp;
}

// A row no nonnegative point satisfies, appended to force infeasibility.
inline LinearProgram with_violated_row(LinearProgram lp) {
    std::vector<Rational> row(static_cast<std::size_t>(lp.num_vars()), Rational(1));
    lp.a.push_back(std::move(row));
    lp.b.emplace_back(-1);
    return lp;
}

}  // namespace lpfeas
