/**
 * lp_parse.hpp
 *
 * Text format for linear programs:
 *
 *     # comment to end of line
 *     max: 5 x1 - 2 x2 + 7 x3;        (or "min:"; "max: 0;" for none)
 *     8 x1 - x2 + 5 x3 <= -6;
 *     x1 + x2 >= 4;
 *     x1 = 3;
 *
 * Terms are [sign] [coefficient] name with the coefficient defaulting to 1
 * and an optional '*' between coefficient and name. Coefficients are integer
 * or p/q rationals; decimals are rejected. Relations are <=, >= and =.
 * Variables are implicitly nonnegative. Columns follow first appearance.
 *
 * normalize() folds everything into max c^T x, A x <= b: a >= row is negated
 * and an = row splits into the <= row followed by its negation.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpfeas/linear_program.hpp"
#include "lpfeas/rational.hpp"

namespace lpfeas {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& what, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + what),
          line(line_),
          col(col_) {}
};

enum class Relation { le, ge, eq };

struct RawConstraint {
    std::vector<std::pair<std::string, Rational>> terms;  // name, coefficient
    Relation rel = Relation::le;
    Rational rhs;

    friend bool operator==(const RawConstraint&, const RawConstraint&) = default;
};

struct ParsedLp {
    bool maximize = true;
    std::vector<std::pair<std::string, Rational>> objective_terms;
    std::vector<RawConstraint> constraints;

    friend bool operator==(const ParsedLp&, const ParsedLp&) = default;
};

namespace detail {

struct Token {
    enum Type { number, name, plus, minus, star, relation, semicolon, colon, end } type;
    std::string text;   // name text, number literal, or relation symbol
    int line, col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        const int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::end, "", line, col};
        const char c = src_[pos_];
        if (c == '+') return advance(), Token{Token::plus, "+", line, col};
        if (c == '-') return advance(), Token{Token::minus, "-", line, col};
        if (c == '*') return advance(), Token{Token::star, "*", line, col};
        if (c == ';') return advance(), Token{Token::semicolon, ";", line, col};
        if (c == ':') return advance(), Token{Token::colon, ":", line, col};
        if (c == '<' || c == '>') {
            advance();
            if (pos_ >= src_.size() || src_[pos_] != '=')
                throw ParseError(std::string("expected '=' after '") + c + "'", line, col);
            advance();
            return {Token::relation, c == '<' ? "<=" : ">=", line, col};
        }
        if (c == '=') return advance(), Token{Token::relation, "=", line, col};
        if (c >= '0' && c <= '9') return lex_number(line, col);
        if (is_name_start(c)) return lex_name(line, col);
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    static bool is_name_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_name_char(char c) { return is_name_start(c) || (c >= '0' && c <= '9'); }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    Token lex_number(int line, int col) {
        std::string text;
        while (pos_ < src_.size() && is_digit(src_[pos_])) {
            text += src_[pos_];
            advance();
        }
        if (pos_ < src_.size() && src_[pos_] == '.')
            throw ParseError("decimal numbers are not supported; use p/q rationals", line, col);
        if (pos_ < src_.size() && src_[pos_] == '/') {
            text += '/';
            advance();
            if (pos_ >= src_.size() || !is_digit(src_[pos_]))
                throw ParseError("expected digits after '/'", line_, col_);
            while (pos_ < src_.size() && is_digit(src_[pos_])) {
                text += src_[pos_];
                advance();
            }
        }
        return {Token::number, text, line, col};
    }

    Token lex_name(int line, int col) {
        std::string text;
        while (pos_ < src_.size() && is_name_char(src_[pos_])) {
            text += src_[pos_];
            advance();
        }
        return {Token::name, text, line, col};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

}  // namespace detail

inline ParsedLp parse_lp(std::string_view text) {
    detail::Lexer lexer(text);
    detail::Token tok = lexer.next();
    const auto expect = [&](detail::Token::Type type, const char* what) {
        if (tok.type != type) throw ParseError(std::string("expected ") + what, tok.line, tok.col);
    };

    // Linear form up to a relation or ';'. A bare constant is allowed only
    // where `constant_ok` says so (the objective); it must total zero.
    const auto parse_terms = [&](bool constant_ok) {
        std::vector<std::pair<std::string, Rational>> terms;
        Rational constant;
        bool first = true;
        while (true) {
            Rational sign(1);
            if (tok.type == detail::Token::plus || tok.type == detail::Token::minus) {
                if (tok.type == detail::Token::minus) sign = Rational(-1);
                tok = lexer.next();
            } else if (!first) {
                break;  // relation, ';' or end
            }
            first = false;
            Rational coeff(1);
            bool have_coeff = false;
            if (tok.type == detail::Token::number) {
                coeff = parse_rational(tok.text);
                have_coeff = true;
                tok = lexer.next();
                if (tok.type == detail::Token::star) tok = lexer.next();
            }
            if (tok.type == detail::Token::name) {
                terms.emplace_back(tok.text, sign * coeff);
                tok = lexer.next();
            } else if (have_coeff) {
                if (!constant_ok)
                    throw ParseError("constant term in constraint", tok.line, tok.col);
                constant += sign * coeff;
            } else {
                throw ParseError("expected a term", tok.line, tok.col);
            }
        }
        if (constant_ok && !constant.is_zero())
            throw ParseError("nonzero constant in objective", tok.line, tok.col);
        return terms;
    };

    ParsedLp lp;
    expect(detail::Token::name, "'max' or 'min'");
    if (tok.text == "max") {
        lp.maximize = true;
    } else if (tok.text == "min") {
        lp.maximize = false;
    } else {
        throw ParseError("expected 'max' or 'min'", tok.line, tok.col);
    }
    tok = lexer.next();
    expect(detail::Token::colon, "':'");
    tok = lexer.next();
    lp.objective_terms = parse_terms(true);
    expect(detail::Token::semicolon, "';'");
    tok = lexer.next();

    while (tok.type != detail::Token::end) {
        RawConstraint con;
        con.terms = parse_terms(false);
        if (con.terms.empty()) throw ParseError("empty constraint", tok.line, tok.col);
        expect(detail::Token::relation, "a relation (<=, >= or =)");
        con.rel = tok.text == "<=" ? Relation::le : tok.text == ">=" ? Relation::ge : Relation::eq;
        tok = lexer.next();
        Rational sign(1);
        if (tok.type == detail::Token::minus) {
            sign = Rational(-1);
            tok = lexer.next();
        }
        expect(detail::Token::number, "a number");
        con.rhs = sign * parse_rational(tok.text);
        tok = lexer.next();
        expect(detail::Token::semicolon, "';'");
        tok = lexer.next();
        lp.constraints.push_back(std::move(con));
    }
    return lp;
}

// Fold into max c^T x, A x <= b with columns in first-appearance order.
// Already-canonical input (max, all rows <=) passes through unchanged.
inline LinearProgram normalize(const ParsedLp& parsed) {
    LinearProgram lp;
    std::map<std::string, int> index;  // name -> 0-based column
    const auto column = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        const int j = static_cast<int>(lp.var_names.size());
        index.emplace(name, j);
        lp.var_names.push_back(name);
        return j;
    };
    for (const auto& [name, coeff] : parsed.objective_terms) column(name);
    for (const auto& con : parsed.constraints)
        for (const auto& [name, coeff] : con.terms) column(name);

    const int p = static_cast<int>(lp.var_names.size());
    lp.c.assign(p, Rational(0));
    for (const auto& [name, coeff] : parsed.objective_terms)
        lp.c[column(name)] += parsed.maximize ? coeff : -coeff;

    const auto add_row = [&](const RawConstraint& con, bool negate) {
        std::vector<Rational> row(p, Rational(0));
        for (const auto& [name, coeff] : con.terms)
            row[column(name)] += negate ? -coeff : coeff;
        lp.a.push_back(std::move(row));
        lp.b.push_back(negate ? -con.rhs : con.rhs);
    };
    for (const auto& con : parsed.constraints) {
        switch (con.rel) {
            case Relation::le: add_row(con, false); break;
            case Relation::ge: add_row(con, true); break;
            case Relation::eq:
                add_row(con, false);
                add_row(con, true);
                break;
        }
    }
    lp.validate();
    return lp;
}

inline LinearProgram parse_and_normalize(std::string_view text) { return normalize(parse_lp(text)); }

// Canonical text for a normalized program. The objective lists every
// variable (zero coefficients included) so the variable set and order
// round-trip; constraint rows skip zero terms.
inline std::string render_lp(const LinearProgram& lp) {
    lp.validate();
    const auto term = [&](std::string& out, const Rational& coeff, const std::string& name,
                          bool first) {
        if (first) {
            if (coeff.is_negative()) out += "-";
        } else {
            out += coeff.is_negative() ? " - " : " + ";
        }
        Rational mag = coeff.is_negative() ? -coeff : coeff;
        if (!(mag == Rational(1))) {
            out += mag.str();
            out += ' ';
        }
        out += name;
    };
    std::string out = "max:";
    if (lp.num_vars() == 0) {
        out += " 0";
    } else {
        std::string obj;
        for (int j = 0; j < lp.num_vars(); ++j) {
            if (lp.c[j].is_zero()) {
                obj += j == 0 ? "0 " + lp.var_names[j] : " + 0 " + lp.var_names[j];
            } else {
                term(obj, lp.c[j], lp.var_names[j], j == 0);
            }
        }
        out += ' ' + obj;
    }
    out += ";\n";
    for (int i = 0; i < lp.num_rows(); ++i) {
        std::string row;
        bool first = true;
        for (int j = 0; j < lp.num_vars(); ++j) {
            if (lp.a[i][j].is_zero()) continue;
            term(row, lp.a[i][j], lp.var_names[j], first);
            first = false;
        }
        if (first) {
            // All-zero row: keep one explicit zero term so the line re-parses.
            row = "0 " + (lp.num_vars() > 0 ? lp.var_names[0] : std::string("x1"));
        }
        out += row + " <= " + lp.b[i].str() + ";\n";
    }
    return out;
}

// FNV-1a over the canonical text; stable across runs and platforms.
inline std::string lp_digest(const LinearProgram& lp) {
    const std::string text = render_lp(lp);
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace lpfeas
