#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

#include "flagvertex/errors.hpp"

namespace flagvertex {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (guaranteed by cpp_rational).
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// r^e for integer e; e < 0 requires r != 0.
inline Rational rational_pow(const Rational& r, std::int64_t e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw DivisionByZeroError("rational_pow: 0 raised to negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? r : Rational(rational_den(r), rational_num(r));
    std::uint64_t k = e > 0 ? static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(-e);
    Rational acc(1);
    while (k != 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

/// Parses "p", "-p", or "p/q". Used for CLI slopes and JSON payloads.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZeroError("rational_from_string: zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw SchemaError("cannot parse rational '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (rational_den(r) == 1) return rational_num(r).str();
    return rational_num(r).str() + "/" + rational_den(r).str();
}

/// Small exact fraction on int64, used for monomial exponents and slopes.
/// Denominators stay bounded by the declared lattice refinement, so int64
/// (with 128-bit intermediates) never overflows in practice.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Frac() = default;
    Frac(std::int64_t n) : num(n), den(1) {} // NOLINT: implicit by design
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DivisionByZeroError("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    /// Largest integer <= this.
    std::int64_t floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(static_cast<std::int64_t>(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den),
                    static_cast<std::int64_t>(static_cast<__int128>(a.den) * b.den));
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + Frac(-b.num, b.den); }
    friend Frac operator-(const Frac& a) { return Frac(-a.num, a.den); }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(static_cast<std::int64_t>(static_cast<__int128>(a.num) * b.num),
                    static_cast<std::int64_t>(static_cast<__int128>(a.den) * b.den));
    }
    Frac& operator+=(const Frac& o) { *this = *this + o; return *this; }
    Frac& operator-=(const Frac& o) { *this = *this - o; return *this; }
    Frac& operator*=(const Frac& o) { *this = *this * o; return *this; }

    friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

    Rational to_rational() const { return Rational(Int(num), Int(den)); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Parses "p" or "p/q" into a Frac. Decimal notation is rejected on purpose.
inline Frac frac_from_string(const std::string& s) {
    if (s.find('.') != std::string::npos)
        throw SchemaError("decimal fractions are not accepted, use p/q: '" + s + "'");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Frac(std::stoll(s));
        return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw SchemaError("cannot parse fraction '" + s + "'");
    }
}

} // namespace flagvertex
