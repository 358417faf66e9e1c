#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ciflie/errors.hpp"

namespace ciflie {

/// Exact rational number with a canonical representation: reduced to lowest
/// terms, denominator positive. All comparisons are exact; intermediates run
/// through 128-bit arithmetic so cross-multiplication cannot overflow.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw ParseError("rational with zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == 1 && den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// Parses "n" or "n/d". Whitespace is not accepted.
    static Rational parse(const std::string& s);
};

namespace detail {

inline Rational make_reduced(__int128 n, __int128 d) {
    if (d == 0) throw ParseError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
        throw Error("rational overflow");
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(n == 0 ? 1 : d);
    return r;
}

} // namespace detail

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

inline bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

inline Rational operator+(const Rational& a, const Rational& b) {
    return detail::make_reduced(
        static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
        static_cast<__int128>(a.den) * b.den);
}
inline Rational operator-(const Rational& a, const Rational& b) {
    return detail::make_reduced(
        static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
        static_cast<__int128>(a.den) * b.den);
}
inline Rational operator*(const Rational& a, const Rational& b) {
    return detail::make_reduced(static_cast<__int128>(a.num) * b.num,
                                static_cast<__int128>(a.den) * b.den);
}

inline const Rational& rat_min(const Rational& a, const Rational& b) {
    return b < a ? b : a;
}
inline const Rational& rat_max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
}

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    std::size_t pos = 0;
    std::int64_t n = 0, d = 1;
    try {
        n = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'");
    }
    if (pos < s.size()) {
        if (s[pos] != '/') throw ParseError("bad rational '" + s + "'");
        std::size_t pos2 = 0;
        const std::string denpart = s.substr(pos + 1);
        try {
            d = std::stoll(denpart, &pos2);
        } catch (const std::exception&) {
            throw ParseError("bad rational '" + s + "'");
        }
        if (pos2 != denpart.size()) throw ParseError("bad rational '" + s + "'");
    }
    return Rational(n, d);
}

} // namespace ciflie
