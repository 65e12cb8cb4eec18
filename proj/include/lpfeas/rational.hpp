/**
 * rational.hpp
 *
 * Arbitrary-precision rational numbers in canonical form: the denominator is
 * always positive, gcd(|num|, den) == 1, and zero is stored as 0/1. All
 * arithmetic is exact; there is no floating point anywhere in this library.
 *
 * Integer parts are boost::multiprecision::cpp_int, so entries never overflow
 * no matter how long a pivot sequence runs.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lpfeas {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    // den must be nonzero; zero denominator is a domain error, not a value.
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        reduce();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Canonical form makes memberwise equality exact value equality.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Exact comparison by cross-multiplication; denominators are positive.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical text form: "[-]<digits>" or "[-]<digits>/<digits>".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

// Strict grammar: optional leading '-', digits, optionally '/' and digits.
// Anything else (whitespace, '+', decimals, empty fields) is rejected.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&]() -> void {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    const auto scan_digits = [&]() -> std::string {
        std::string digits;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits += text[pos++];
        if (digits.empty()) fail();
        return digits;
    };
    const std::string num_digits = scan_digits();
    std::string den_digits = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den_digits = scan_digits();
    }
    if (pos != text.size()) fail();
    BigInt num(num_digits);
    if (negative) num = -num;
    return Rational(std::move(num), BigInt(den_digits));
}

}  // namespace lpfeas
