#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "lpfeas/dictionary.hpp"
#include "lpfeas/random_lp.hpp"

using namespace lpfeas;
using test_helpers::load_lp_fixture;
using test_helpers::rats;

namespace {

Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

Matrix matrix_of(const std::vector<std::vector<long long>>& rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

std::vector<std::string> basic_names(const Dictionary& dict) {
    std::vector<std::string> names;
    for (const auto& label : dict.basic) names.push_back(label.name());
    return names;
}

std::vector<std::string> nonbasic_names(const Dictionary& dict) {
    std::vector<std::string> names;
    for (const auto& label : dict.nonbasic) names.push_back(label.name());
    return names;
}

// Independent meaning check: assign values to the nonbasic variables, read
// the basic values off the dictionary rows, and verify the original
// equalities A x + s = b and z = c^T x hold exactly.
void check_substitution(const LinearProgram& lp, const Dictionary& dict,
                        const std::vector<Rational>& nonbasic_values) {
    const int p = lp.num_vars();
    std::vector<Rational> value(static_cast<std::size_t>(p + lp.num_rows()) + 1);
    for (int j = 1; j <= dict.cols(); ++j) value[dict.nonbasic[j - 1].number] = nonbasic_values[j - 1];
    Rational z = dict.d(0, 0);
    for (int j = 1; j <= dict.cols(); ++j) z -= dict.d(0, j) * nonbasic_values[j - 1];
    for (int i = 1; i <= dict.rows(); ++i) {
        Rational v = dict.d(i, 0);
        for (int j = 1; j <= dict.cols(); ++j) v -= dict.d(i, j) * nonbasic_values[j - 1];
        value[dict.basic[i - 1].number] = v;
    }
    for (int k = 0; k < lp.num_rows(); ++k) {
        Rational lhs = value[p + k + 1];
        for (int j = 0; j < p; ++j) lhs += lp.a[k][j] * value[j + 1];
        REQUIRE(lhs == lp.b[k]);
    }
    Rational cx;
    for (int j = 0; j < p; ++j) cx += lp.c[j] * value[j + 1];
    REQUIRE(z == cx);
}

}  // namespace

TEST_CASE("initial dictionary of the four-row instance") {
    const Dictionary dict = build_dictionary(load_lp_fixture("example1.lp"));
    REQUIRE(dict.rows() == 4);
    REQUIRE(dict.cols() == 2);
    REQUIRE(dict.num_originals == 2);
    REQUIRE(basic_names(dict) == std::vector<std::string>{"x3", "x4", "x5", "x6"});
    REQUIRE(nonbasic_names(dict) == std::vector<std::string>{"x1", "x2"});
    REQUIRE(dict.d == matrix_of({{0, 0, 0},
                                 {-4, -1, -1},
                                 {-6, -1, -2},
                                 {2, 1, -1},
                                 {-10, -5, -2}}));
}

TEST_CASE("initial objective row carries negated costs") {
    const Dictionary dict = build_dictionary(load_lp_fixture("example2.lp"));
    REQUIRE(dict.d(0, 0) == Rational(0));
    REQUIRE(dict.d(0, 1) == Rational(-5));
    REQUIRE(dict.d(0, 2) == Rational(2));
    REQUIRE(dict.d(0, 3) == Rational(-7));
    REQUIRE(nonbasic_names(dict) == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("empty program builds a bare objective cell") {
    const Dictionary dict = build_dictionary(LinearProgram{});
    REQUIRE(dict.rows() == 0);
    REQUIRE(dict.cols() == 0);
    REQUIRE(dict.d.rows() == 1);
    REQUIRE(dict.d.cols() == 1);
    REQUIRE(dict.corner_point().empty());
}

TEST_CASE("pivot golden on the four-row instance") {
    Dictionary dict = build_dictionary(load_lp_fixture("example1.lp"));
    dict.pivot(3, 1);
    REQUIRE(basic_names(dict) == std::vector<std::string>{"x3", "x4", "x1", "x6"});
    REQUIRE(nonbasic_names(dict) == std::vector<std::string>{"x5", "x2"});
    REQUIRE(dict.d == matrix_of({{0, 0, 0},
                                 {-2, 1, -2},
                                 {-4, 1, -3},
                                 {2, 1, -1},
                                 {0, 5, -7}}));
    REQUIRE(dict.corner_point() == rats({"2", "0"}));
}

TEST_CASE("pivot rejects bad positions and zero entries") {
    Dictionary dict = build_dictionary(load_lp_fixture("example1.lp"));
    REQUIRE_THROWS_AS(dict.pivot(0, 1), std::out_of_range);
    REQUIRE_THROWS_AS(dict.pivot(5, 1), std::out_of_range);
    REQUIRE_THROWS_AS(dict.pivot(1, 3), std::out_of_range);
    Dictionary zero = dict;
    zero.d(1, 1) = Rational(0);
    REQUIRE_THROWS_AS(zero.pivot(1, 1), std::domain_error);
}

TEST_CASE("pivoting the same position twice is the identity") {
    std::mt19937_64 rng(4242);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const LinearProgram lp = gen_random_lp(seed, 4, 3, 9, false);
        Dictionary dict = build_dictionary(lp);
        for (int t = 0; t < 3; ++t) {
            const int r = 1 + static_cast<int>(rng() % 4);
            const int s = 1 + static_cast<int>(rng() % 3);
            if (dict.d(r, s).is_zero()) continue;
            const Dictionary before = dict;
            dict.pivot(r, s);
            dict.pivot(r, s);
            REQUIRE(dict == before);
            dict.pivot(r, s);
        }
    }
}

TEST_CASE("pivoted dictionaries keep the original equalities") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const LinearProgram lp = gen_random_lp(seed, 4, 3, 9, false);
        Dictionary dict = build_dictionary(lp);
        for (int t = 0; t < 6; ++t) {
            const int r = 1 + static_cast<int>(rng() % 4);
            const int s = 1 + static_cast<int>(rng() % 3);
            if (dict.d(r, s).is_zero()) continue;
            dict.pivot(r, s);
            std::vector<Rational> values;
            for (int j = 0; j < dict.cols(); ++j)
                values.push_back(q(static_cast<long long>(rng() % 19) - 9, 1 + rng() % 4));
            check_substitution(lp, dict, values);
            check_substitution(lp, dict, std::vector<Rational>(3));  // the corner itself
        }
    }
}

TEST_CASE("label positions ignore sign tags") {
    Dictionary dict = build_dictionary(load_lp_fixture("example1.lp"));
    dict.basic[1].tag = SignTag::minus;
    REQUIRE(dict.basic_pos(Label::slack(4)) == 2);
    REQUIRE(dict.nonbasic_pos(Label::original(2)) == 2);
    REQUIRE_THROWS_AS(dict.basic_pos(Label::original(1)), std::invalid_argument);
    REQUIRE_THROWS_AS(dict.nonbasic_pos(Label::slack(3)), std::invalid_argument);
}

TEST_CASE("classification flags") {
    SECTION("origin-feasible and optimal") {
        LinearProgram lp = parse_and_normalize("max: 0; x1 <= 3;");
        const Classification cl = build_dictionary(lp).classify();
        REQUIRE(cl.primal_feasible);
        REQUIRE(cl.dual_feasible);
        REQUIRE(cl.optimal);
        REQUIRE_FALSE(cl.primal_inconsistent);
        REQUIRE_FALSE(cl.dual_inconsistent);
    }
    SECTION("negative row with no negative entry is primal inconsistent") {
        LinearProgram lp = parse_and_normalize("max: 0; x1 <= -1;");
        const Classification cl = build_dictionary(lp).classify();
        REQUIRE_FALSE(cl.primal_feasible);
        REQUIRE(cl.primal_inconsistent);
    }
    SECTION("negative cost column with all-negative entries is dual inconsistent") {
        LinearProgram lp = parse_and_normalize("max: x1; -1 x1 <= 5;");
        const Classification cl = build_dictionary(lp).classify();
        REQUIRE_FALSE(cl.dual_feasible);
        REQUIRE(cl.dual_inconsistent);
        REQUIRE(cl.primal_feasible);
    }
    SECTION("no rows means primal feasible and never dual inconsistent") {
        LinearProgram lp = parse_and_normalize("max: x1 - x1;");
        LinearProgram with_var = lp;
        with_var.c = {Rational(1)};  // row-0 entry -1, but there is no row below it
        const Classification cl = build_dictionary(with_var).classify();
        REQUIRE(cl.primal_feasible);
        REQUIRE_FALSE(cl.dual_inconsistent);
    }
}

TEST_CASE("corner point reads basic originals only") {
    Dictionary dict = build_dictionary(load_lp_fixture("example1.lp"));
    REQUIRE(dict.corner_point() == rats({"0", "0"}));
    dict.pivot(3, 1);
    REQUIRE(dict.corner_point() == rats({"2", "0"}));
    dict.pivot(4, 2);
    REQUIRE(dict.corner_point().size() == 2);
}

TEST_CASE("matrix is bounds checked") {
    Matrix m(2, 3);
    REQUIRE_THROWS_AS(m(2, 0), std::out_of_range);
    REQUIRE_THROWS_AS(m(0, 3), std::out_of_range);
    REQUIRE_THROWS_AS(m(-1, 0), std::out_of_range);
    m(1, 2) = Rational(5);
    REQUIRE(m(1, 2) == Rational(5));
}
