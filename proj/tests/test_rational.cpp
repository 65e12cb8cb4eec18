#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "lpfeas/rational.hpp"

using lpfeas::BigInt;
using lpfeas::Rational;
using lpfeas::parse_rational;

namespace {

Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

// Independent reference: plain int64 fraction arithmetic, reduced with
// std::gcd. Operands are kept small enough that nothing overflows.
struct Frac {
    long long n, d;
    Frac reduced() const {
        long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g == 0) g = 1;
        long long rn = n / g, rd = d / g;
        if (rd < 0) {
            rn = -rn;
            rd = -rd;
        }
        return {rn == 0 ? 0 : rn, rn == 0 ? 1 : rd};
    }
};

bool matches(const Rational& r, Frac f) {
    f = f.reduced();
    return r.num() == BigInt(f.n) && r.den() == BigInt(f.d);
}

}  // namespace

TEST_CASE("construction reduces to canonical form") {
    REQUIRE(q(-12, -7) == q(12, 7));
    REQUIRE(q(-12, -7).num() == 12);
    REQUIRE(q(-12, -7).den() == 7);
    REQUIRE(q(4, 8) == q(1, 2));
    REQUIRE(q(26, 49).num() == 26);
    REQUIRE(q(26, 49).den() == 49);
    REQUIRE(q(0, 5).num() == 0);
    REQUIRE(q(0, 5).den() == 1);
    REQUIRE(q(0, -5).den() == 1);
    REQUIRE(q(3, -6) == q(-1, 2));
    REQUIRE(Rational(7).den() == 1);
    REQUIRE(Rational().is_zero());
    REQUIRE_THROWS_AS(q(1, 0), std::domain_error);
}

TEST_CASE("arithmetic goldens") {
    REQUIRE(Rational(7) - q(60, 7) == q(-11, 7));
    REQUIRE(Rational(-12) / Rational(-7) == q(12, 7));
    REQUIRE(q(1, 2) + q(1, 3) == q(5, 6));
    REQUIRE(q(1, 2) * q(2, 3) == q(1, 3));
    REQUIRE(q(-5, 7) * Rational(0) == Rational(0));
    REQUIRE(-q(3, 4) == q(-3, 4));
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    Rational acc(1);
    acc += q(1, 2);
    acc -= q(1, 6);
    acc *= Rational(3);
    acc /= Rational(2);
    REQUIRE(acc == Rational(2));
}

TEST_CASE("comparison is exact value order") {
    REQUIRE(q(1, 3) < q(1, 2));
    REQUIRE(q(-1, 2) < q(-1, 3));
    REQUIRE(q(2, 4) == q(1, 2));
    REQUIRE(q(7, 3) > Rational(2));
    REQUIRE(q(-5, 7) < Rational(0));
    REQUIRE(q(10, 3) >= q(10, 3));
    REQUIRE(q(-12, 7).is_negative());
    REQUIRE(q(12, 7).is_positive());
    REQUIRE(Rational(0).is_zero());
}

TEST_CASE("printing and parsing round trip") {
    REQUIRE(q(-192, 49).str() == "-192/49");
    REQUIRE(Rational(0).str() == "0");
    REQUIRE(q(10, 3).str() == "10/3");
    REQUIRE(Rational(-4).str() == "-4");
    REQUIRE(parse_rational("-192/49") == q(-192, 49));
    REQUIRE(parse_rational("0") == Rational(0));
    REQUIRE(parse_rational("10/3") == q(10, 3));
    REQUIRE(parse_rational("-0") == Rational(0));
    REQUIRE(parse_rational("4/8") == q(1, 2));

    for (const char* bad : {"", "-", "+1", " 1", "1 ", "1.5", "1/", "/3", "1//2", "2/-3", "--1",
                            "x", "1e3"})
        REQUIRE_THROWS_AS(parse_rational(bad), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

TEST_CASE("big values never overflow") {
    Rational big = Rational(1);
    for (int i = 0; i < 40; ++i) big *= q(1000000007, 998244353);
    Rational back = big;
    for (int i = 0; i < 40; ++i) back /= q(1000000007, 998244353);
    REQUIRE(back == Rational(1));
    REQUIRE(big.is_positive());
}

TEST_CASE("randomized: canonical form and field identities") {
    std::mt19937_64 rng(20240817);
    const auto draw = [&](long long lo, long long hi) {
        return static_cast<long long>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (int t = 0; t < 2000; ++t) {
        const Rational a = q(draw(-99, 99), draw(1, 99));
        const Rational b = q(draw(-99, 99), draw(1, 99));
        const Rational c = q(draw(-99, 99), draw(1, 99));

        REQUIRE(a.den() > 0);
        REQUIRE(boost::multiprecision::gcd(a.num(), a.den()) == 1);
        if (a.is_zero()) REQUIRE(a.den() == 1);

        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + (-a) == Rational(0));
        REQUIRE(a - b == a + (-b));
        if (!a.is_zero()) REQUIRE(a / a == Rational(1));
        REQUIRE((a < b) == (a - b).is_negative());
        REQUIRE((a == b) == (a - b).is_zero());
    }
}

TEST_CASE("randomized: agrees with an int64 fraction oracle") {
    std::mt19937_64 rng(97);
    const auto draw = [&](long long lo, long long hi) {
        return static_cast<long long>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (int t = 0; t < 2000; ++t) {
        const Frac fa{draw(-50, 50), draw(1, 50)};
        const Frac fb{draw(-50, 50), draw(1, 50)};
        const Rational a = q(fa.n, fa.d);
        const Rational b = q(fb.n, fb.d);
        REQUIRE(matches(a + b, Frac{fa.n * fb.d + fb.n * fa.d, fa.d * fb.d}));
        REQUIRE(matches(a - b, Frac{fa.n * fb.d - fb.n * fa.d, fa.d * fb.d}));
        REQUIRE(matches(a * b, Frac{fa.n * fb.n, fa.d * fb.d}));
        if (fb.n != 0) REQUIRE(matches(a / b, Frac{fa.n * fb.d, fa.d * fb.n}));
        const long long lhs = fa.n * fb.d, rhs = fb.n * fa.d;
        REQUIRE((a < b) == (lhs < rhs));
        REQUIRE((a > b) == (lhs > rhs));
    }
}
