#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals, backed by GMP.
 *
 * Values are kept canonical after every operation: the denominator is
 * positive, numerator and denominator are coprime, and zero is 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace z4cent {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& v) : value_(v) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero();
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "n" or "n/d".
    static Rational parse(std::string_view text) {
        mpq_class q;
        if (q.set_str(std::string(text), 10) != 0) {
            throw Error("malformed rational: " + std::string(text));
        }
        if (q.get_den() == 0) throw DivisionByZero();
        q.canonicalize();
        Rational r;
        r.value_ = q;
        return r;
    }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    /// Always "n/d", including "0/1" and "5/1".
    [[nodiscard]] std::string to_string() const {
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string to_short_string() const {
        return is_integer() ? value_.get_num().get_str() : to_string();
    }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        Rational r;
        mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
        return r;
    }

    [[nodiscard]] const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

}  // namespace z4cent
