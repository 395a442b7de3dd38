#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace cuntz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Exact element of the field Q(i, sqrt2), stored as
 *
 *     (a + b*sqrt2) + (c + d*sqrt2)*i
 *
 * with arbitrary-precision rational components.  Closed under +, -, *,
 * conjugation and division by nonzero elements; in particular 1/sqrt2 is
 * representable (b = 1/2), so normalized isometries like (s1+s2)/sqrt2 have
 * exact coefficients.
 */
struct Scalar {
    Rational a{0}, b{0}, c{0}, d{0};

    Scalar() = default;
    Scalar(int v) : a(v) {}                 // implicit: integers embed
    Scalar(const Rational& v) : a(v) {}     // implicit: rationals embed
    Scalar(Rational ra, Rational rb, Rational rc, Rational rd)
        : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}

    static Scalar zero() { return Scalar{}; }
    static Scalar one() { return Scalar{1}; }
    static Scalar i() { return Scalar{0, 0, 1, 0}; }
    static Scalar sqrt2() { return Scalar{0, 1, 0, 0}; }
    static Scalar inv_sqrt2() { return Scalar{0, Rational(1, 2), 0, 0}; }
    static Scalar rational(const Rational& p) { return Scalar{p}; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_one() const { return a == 1 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }
    bool is_real() const { return c == 0 && d == 0; }

    Scalar conj() const { return Scalar{a, b, -c, -d}; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar operator-() const { return Scalar{-a, -b, -c, -d}; }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        return Scalar{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        return Scalar{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }

    // Complex product over the real subfield Q(sqrt2):
    // (x1 + y1 i)(x2 + y2 i) = (x1 x2 - y1 y2) + (x1 y2 + y1 x2) i,
    // where (a + b sqrt2)(a' + b' sqrt2) = (aa' + 2bb') + (ab' + a'b) sqrt2.
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        Rational ra = x.a * y.a + 2 * x.b * y.b - (x.c * y.c + 2 * x.d * y.d);
        Rational rb = x.a * y.b + x.b * y.a - (x.c * y.d + x.d * y.c);
        Rational rc = x.a * y.c + 2 * x.b * y.d + x.c * y.a + 2 * x.d * y.b;
        Rational rd = x.a * y.d + x.b * y.c + x.c * y.b + x.d * y.a;
        return Scalar{std::move(ra), std::move(rb), std::move(rc), std::move(rd)};
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    // z^-1 = conj(z) / (z conj(z)); the denominator is a nonzero element of
    // Q(sqrt2), inverted via (p + q sqrt2)^-1 = (p - q sqrt2)/(p^2 - 2 q^2).
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        Rational np = a * a + 2 * b * b + c * c + 2 * d * d;
        Rational nq = 2 * a * b + 2 * c * d;
        Rational den = np * np - 2 * nq * nq;  // nonzero: sqrt2 is irrational
        Rational ip = np / den, iq = -nq / den;
        // (a + b sqrt2 - (c + d sqrt2) i) * (ip + iq sqrt2)
        return Scalar{a * ip + 2 * b * iq, a * iq + b * ip,
                      -(c * ip + 2 * d * iq), -(c * iq + d * ip)};
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    // Exact test for |z| = 1; the gauge action is only defined for such z.
    bool is_unit_modulus() const { return (*this * conj()).is_one(); }

    std::complex<double> to_complex() const {
        static const double s2 = 1.4142135623730950488016887242097;
        return {static_cast<double>(a) + static_cast<double>(b) * s2,
                static_cast<double>(c) + static_cast<double>(d) * s2};
    }

    // Parseable rendering: a sum of up to four parts over {1, sqrt2, i, sqrt2 i}.
    // Multi-part values should be parenthesized by the caller when juxtaposed
    // with a word.
    std::string to_string() const;
    int nonzero_parts() const {
        return (a != 0) + (b != 0) + (c != 0) + (d != 0);
    }
};

namespace detail {
inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// One summand "coeff * unit" with 1-elision, e.g. (1, "sqrt2") -> "sqrt2",
// (-1/2, "i") -> "-1/2 i", (3, "") -> "3".
inline std::string part_str(const Rational& r, const char* unit) {
    Rational mag = r < 0 ? Rational(-r) : r;
    std::string sign = r < 0 ? "-" : "";
    if (*unit == '\0') return sign + rational_str(mag);
    if (mag == 1) return sign + unit;
    return sign + rational_str(mag) + " " + unit;
}
}  // namespace detail

inline std::string Scalar::to_string() const {
    const Rational* vals[4] = {&a, &b, &c, &d};
    const char* units[4] = {"", "sqrt2", "i", "sqrt2 i"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (*vals[k] == 0) continue;
        if (out.empty()) {
            out = detail::part_str(*vals[k], units[k]);
        } else {
            bool neg = *vals[k] < 0;
            Rational mag = neg ? Rational(-*vals[k]) : *vals[k];
            out += neg ? " - " : " + ";
            out += detail::part_str(mag, units[k]);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace cuntz
