/**
 * label.hpp
 *
 * Row/column labels for simplex dictionaries. A label names one variable and
 * carries a sign tag that travels with it through pivots. `number` is the
 * global variable number: originals are 1..p and the slack of row i is p+i.
 * An artificial shares the number of the slack whose row it guards.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lpfeas {

enum class VarKind { original, slack, artificial };

// Minus marks rows (columns in the dual variant) still counted by the
// feasibility row; Plus marks labels that were Minus once and flipped.
enum class SignTag { plain, minus, plus };

struct Label {
    VarKind kind = VarKind::original;
    int number = 0;
    SignTag tag = SignTag::plain;

    static Label original(int number) { return {VarKind::original, number, SignTag::plain}; }
    static Label slack(int number) { return {VarKind::slack, number, SignTag::plain}; }
    static Label artificial(int number) { return {VarKind::artificial, number, SignTag::plain}; }

    bool is_minus() const { return tag == SignTag::minus; }
    bool is_artificial() const { return kind == VarKind::artificial; }

    // Identity of the underlying variable, ignoring the sign tag.
    bool same_variable(const Label& o) const { return kind == o.kind && number == o.number; }

    // "x3", "x3-", "x3+", "a3".
    std::string name() const {
        std::string s = is_artificial() ? "a" : "x";
        s += std::to_string(number);
        if (tag == SignTag::minus) s += '-';
        if (tag == SignTag::plus) s += '+';
        return s;
    }

    // Dual-side annotation used by the dual variant's table rendering.
    std::string dual_name() const {
        std::string s = "y" + std::to_string(number);
        if (tag == SignTag::minus) s += '-';
        if (tag == SignTag::plus) s += '+';
        return s;
    }

    friend bool operator==(const Label&, const Label&) = default;
};

// Fixed global tie-break order shared by every solver in this library:
// variables by number (originals first by construction, then slacks), with an
// artificial sorting directly after the slack of its own row. Sign tags never
// affect the order.
inline bool order_less(const Label& a, const Label& b) {
    if (a.number != b.number) return a.number < b.number;
    return !a.is_artificial() && b.is_artificial();
}

// Parse "x12", "x12-", "x12+", "a3". num_originals resolves x-numbers into
// original versus slack kinds.
inline Label parse_label(const std::string& text, int num_originals) {
    if (text.size() < 2 || (text[0] != 'x' && text[0] != 'a'))
        throw std::invalid_argument("bad label: '" + text + "'");
    SignTag tag = SignTag::plain;
    std::size_t end = text.size();
    if (text.back() == '-') {
        tag = SignTag::minus;
        --end;
    } else if (text.back() == '+') {
        tag = SignTag::plus;
        --end;
    }
    if (end < 2) throw std::invalid_argument("bad label: '" + text + "'");
    int number = 0;
    for (std::size_t i = 1; i < end; ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad label: '" + text + "'");
        number = number * 10 + (text[i] - '0');
    }
    Label label;
    label.number = number;
    label.tag = tag;
    if (text[0] == 'a') {
        label.kind = VarKind::artificial;
    } else {
        label.kind = number <= num_originals ? VarKind::original : VarKind::slack;
    }
    return label;
}

}  // namespace lpfeas
