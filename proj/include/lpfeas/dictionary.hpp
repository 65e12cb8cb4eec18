/**
 * dictionary.hpp
 *
 * Exact simplex dictionary. Layout is (m+1) x (n+1): row 0 is the objective
 * row (entry (0,0) is the objective value, (0,j) the negated cost of the j-th
 * nonbasic column), column 0 holds the basic values. Row i >= 1 reads
 *
 *     basic[i-1] = d(i,0) - sum_j d(i,j) * nonbasic[j-1].
 *
 * The feasibility row w used by the phase-1 solvers is deliberately NOT part
 * of this type; it lives in solver state and is pivoted alongside.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "lpfeas/label.hpp"
#include "lpfeas/linear_program.hpp"
#include "lpfeas/rational.hpp"

namespace lpfeas {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return v_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return v_[index(i, j)]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Matrix index");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    std::vector<Rational> v_;
};

struct Classification {
    bool primal_feasible = false;    // every basic value >= 0
    bool dual_feasible = false;      // every objective-row entry >= 0
    bool optimal = false;            // both of the above
    bool primal_inconsistent = false;  // a row with negative value and no negative entry
    bool dual_inconsistent = false;    // a column with entry <= 0 on row 0 and all entries < 0
};

struct Dictionary {
    Matrix d;                        // (m+1) x (n+1)
    std::vector<Label> basic;        // m labels, row order
    std::vector<Label> nonbasic;     // n labels, column order
    int num_originals = 0;           // p, for corner extraction

    int rows() const { return static_cast<int>(basic.size()); }
    int cols() const { return static_cast<int>(nonbasic.size()); }

    // 1-based positions; identity ignores sign tags.
    int basic_pos(const Label& label) const {
        for (int i = 0; i < rows(); ++i)
            if (basic[i].same_variable(label)) return i + 1;
        throw std::invalid_argument("not basic: " + label.name());
    }
    int nonbasic_pos(const Label& label) const {
        for (int j = 0; j < cols(); ++j)
            if (nonbasic[j].same_variable(label)) return j + 1;
        throw std::invalid_argument("not nonbasic: " + label.name());
    }

    // Exchange basic row r with nonbasic column s. Row 0 and column 0
    // transform exactly like every other row and column; labels swap in
    // place, sign tags travelling with them. Pivoting twice at the same
    // position is the identity.
    void pivot(int r, int s) {
        if (r < 1 || r > rows() || s < 1 || s > cols())
            throw std::out_of_range("pivot position");
        const Rational p0 = d(r, s);
        if (p0.is_zero()) throw std::domain_error("pivot on zero entry");
        for (int i = 0; i <= rows(); ++i) {
            if (i == r) continue;
            for (int j = 0; j <= cols(); ++j) {
                if (j == s) continue;
                d(i, j) -= d(i, s) * d(r, j) / p0;
            }
        }
        for (int j = 0; j <= cols(); ++j)
            if (j != s) d(r, j) /= p0;
        for (int i = 0; i <= rows(); ++i)
            if (i != r) d(i, s) = -d(i, s) / p0;
        d(r, s) = Rational(1) / p0;
        std::swap(basic[r - 1], nonbasic[s - 1]);
    }

    Classification classify() const {
        Classification cl;
        cl.primal_feasible = true;
        for (int i = 1; i <= rows(); ++i)
            if (d(i, 0).is_negative()) cl.primal_feasible = false;
        cl.dual_feasible = true;
        for (int j = 1; j <= cols(); ++j)
            if (d(0, j).is_negative()) cl.dual_feasible = false;
        cl.optimal = cl.primal_feasible && cl.dual_feasible;
        for (int i = 1; i <= rows() && !cl.primal_inconsistent; ++i) {
            if (!d(i, 0).is_negative()) continue;
            bool row_nonneg = true;
            for (int j = 1; j <= cols(); ++j)
                if (d(i, j).is_negative()) row_nonneg = false;
            cl.primal_inconsistent = row_nonneg;
        }
        for (int j = 1; j <= cols() && !cl.dual_inconsistent; ++j) {
            if (d(0, j).is_positive()) continue;
            bool col_neg = rows() > 0;
            for (int i = 1; i <= rows(); ++i)
                if (!d(i, j).is_negative()) col_neg = false;
            cl.dual_inconsistent = col_neg;
        }
        return cl;
    }

    // Values of the original variables at the current basic solution:
    // nonbasic originals sit at 0, basic ones at their d(i,0).
    std::vector<Rational> corner_point() const {
        std::vector<Rational> x(static_cast<std::size_t>(num_originals));
        for (int i = 1; i <= rows(); ++i) {
            const Label& label = basic[i - 1];
            if (label.kind == VarKind::original) x[label.number - 1] = d(i, 0);
        }
        return x;
    }

    friend bool operator==(const Dictionary&, const Dictionary&) = default;
};

// Initial dictionary of a normalized program: slacks basic, originals
// nonbasic, row 0 = (0 | -c^T), rows = (b | A).
inline Dictionary build_dictionary(const LinearProgram& lp) {
    lp.validate();
    const int p = lp.num_vars();
    const int m = lp.num_rows();
    Dictionary dict;
    dict.num_originals = p;
    dict.d = Matrix(m + 1, p + 1);
    for (int j = 1; j <= p; ++j) {
        dict.nonbasic.push_back(Label::original(j));
        dict.d(0, j) = -lp.c[j - 1];
    }
    for (int i = 1; i <= m; ++i) {
        dict.basic.push_back(Label::slack(p + i));
        dict.d(i, 0) = lp.b[i - 1];
        for (int j = 1; j <= p; ++j) dict.d(i, j) = lp.a[i - 1][j - 1];
    }
    return dict;
}

}  // namespace lpfeas
