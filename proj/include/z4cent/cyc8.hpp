#pragma once

/**
 * @file cyc8.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(eta), eta = (1+i)/sqrt(2).
 *
 * An element is stored as c0 + c1*eta + c2*eta^2 + c3*eta^3 with rational
 * coefficients. The basis is reduced with eta^4 = -1, so every element has
 * exactly one representation and equality is coefficient-wise.
 *
 * Useful identities in this basis:
 *   i       = eta^2
 *   sqrt(2) = eta - eta^3
 *   conj(eta) = eta^7 = -eta^3
 */

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace z4cent {

class Cyc8 {
public:
    using Coeffs = std::array<Rational, 4>;

    Cyc8() = default;
    Cyc8(const Rational& r) : c_{r, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    Cyc8(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    Cyc8(int v) : c_{Rational(v), 0, 0, 0} {}   // NOLINT(google-explicit-constructor)
    Cyc8(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cyc8 eta() { return {0, 1, 0, 0}; }
    static Cyc8 i() { return {0, 0, 1, 0}; }

    /// eta^k for any integer k.
    static Cyc8 eta_pow(long k) {
        long m = ((k % 8) + 8) % 8;
        Cyc8 r;
        if (m < 4) {
            r.c_[m] = 1;
        } else {
            r.c_[m - 4] = -1;
        }
        return r;
    }

    /// a + b*i for rationals a, b.
    static Cyc8 gaussian(const Rational& re, const Rational& im) { return {re, 0, im, 0}; }

    /// Parses the canonical "n0/d0,n1/d1,n2/d2,n3/d3" form.
    static Cyc8 parse(std::string_view text) {
        Cyc8 r;
        std::size_t pos = 0;
        for (int k = 0; k < 4; ++k) {
            const std::size_t comma = text.find(',', pos);
            if ((k < 3) == (comma == std::string_view::npos)) {
                throw Error("malformed Cyc8: " + std::string(text));
            }
            const std::size_t end = k < 3 ? comma : text.size();
            r.c_[k] = Rational::parse(text.substr(pos, end - pos));
            pos = end + 1;
        }
        return r;
    }

    [[nodiscard]] const Rational& coeff(int k) const { return c_[k]; }
    [[nodiscard]] const Coeffs& coeffs() const { return c_; }

    [[nodiscard]] bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    [[nodiscard]] bool is_rational() const {
        return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    [[nodiscard]] bool is_rational_integer() const { return is_rational() && c_[0].is_integer(); }

    Cyc8 operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    Cyc8& operator+=(const Cyc8& o) {
        for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Cyc8& operator-=(const Cyc8& o) {
        for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Cyc8& operator*=(const Cyc8& o) { return *this = *this * o; }
    Cyc8& operator/=(const Cyc8& o) { return *this = *this * o.inverse(); }

    friend Cyc8 operator+(Cyc8 a, const Cyc8& b) { return a += b; }
    friend Cyc8 operator-(Cyc8 a, const Cyc8& b) { return a -= b; }
    friend Cyc8 operator/(const Cyc8& a, const Cyc8& b) { return a * b.inverse(); }

    friend Cyc8 operator*(const Cyc8& a, const Cyc8& b) {
        Cyc8 r;
        for (int p = 0; p < 4; ++p) {
            if (a.c_[p].is_zero()) continue;
            for (int q = 0; q < 4; ++q) {
                if (b.c_[q].is_zero()) continue;
                const int s = p + q;
                if (s < 4) {
                    r.c_[s] += a.c_[p] * b.c_[q];
                } else {
                    r.c_[s - 4] -= a.c_[p] * b.c_[q];
                }
            }
        }
        return r;
    }

    friend bool operator==(const Cyc8& a, const Cyc8& b) { return a.c_ == b.c_; }

    /// Field automorphism eta -> eta^k, k odd.
    [[nodiscard]] Cyc8 galois(int k) const {
        Cyc8 r;
        for (int j = 0; j < 4; ++j) {
            if (c_[j].is_zero()) continue;
            const int m = ((j * k) % 8 + 8) % 8;
            if (m < 4) {
                r.c_[m] += c_[j];
            } else {
                r.c_[m - 4] -= c_[j];
            }
        }
        return r;
    }

    /// Complex conjugation: (a, b, c, d) -> (a, -d, -c, -b).
    [[nodiscard]] Cyc8 conj() const { return {c_[0], -c_[3], -c_[2], -c_[1]}; }

    /// Field norm down to Q: product of all four Galois images.
    [[nodiscard]] Rational norm() const {
        const Cyc8 n = *this * galois(3) * galois(5) * galois(7);
        return n.c_[0];
    }

    [[nodiscard]] Cyc8 inverse() const {
        if (is_zero()) throw DivisionByZero();
        const Cyc8 others = galois(3) * galois(5) * galois(7);
        const Rational n = (*this * others).c_[0];
        const Rational inv = n.inverse();
        return {others.c_[0] * inv, others.c_[1] * inv, others.c_[2] * inv, others.c_[3] * inv};
    }

    [[nodiscard]] Cyc8 pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyc8 result(1);
        Cyc8 base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

    /// Only meant for cross-checks in tests and human-readable output.
    [[nodiscard]] std::complex<double> to_complex() const {
        const double h = std::sqrt(2.0) / 2.0;
        const std::complex<double> e(h, h);
        return c_[0].to_double() + c_[1].to_double() * e + c_[2].to_double() * std::complex<double>(0, 1) +
               c_[3].to_double() * e * std::complex<double>(0, 1);
    }

    /// Canonical serialization "n0/d0,n1/d1,n2/d2,n3/d3".
    [[nodiscard]] std::string to_string() const {
        return c_[0].to_string() + "," + c_[1].to_string() + "," + c_[2].to_string() + "," + c_[3].to_string();
    }

    /// Human-readable form: Gaussian rationals as "-1-2i", otherwise a sum over powers of eta.
    [[nodiscard]] std::string to_pretty() const {
        if (is_zero()) return "0";
        static constexpr std::array<const char*, 4> kBasisGaussian = {"", "", "i", ""};
        static constexpr std::array<const char*, 4> kBasisEta = {"", "eta", "eta^2", "eta^3"};
        const bool gaussian = c_[1].is_zero() && c_[3].is_zero();
        const auto& basis = gaussian ? kBasisGaussian : kBasisEta;
        std::string out;
        for (int k = 0; k < 4; ++k) {
            const Rational& c = c_[k];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            const Rational mag = neg ? -c : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += gaussian ? (neg ? "-" : "+") : (neg ? " - " : " + ");
            }
            if (k == 0 || !mag.is_one()) {
                out += mag.to_short_string();
                if (k != 0 && !gaussian) out += "*";
            }
            out += basis[k];
        }
        return out;
    }

private:
    Coeffs c_{};
};

}  // namespace z4cent

template <>
struct std::hash<z4cent::Cyc8> {
    std::size_t operator()(const z4cent::Cyc8& v) const noexcept { return std::hash<std::string>{}(v.to_string()); }
};
