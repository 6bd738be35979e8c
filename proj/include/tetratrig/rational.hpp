#pragma once

#include <algorithm>
#include <string>

#include "tetratrig/errors.hpp"

namespace tetratrig {

// Exact rational with 128-bit parts; small-integer lattice work only.
struct Rational {
    __int128 n = 0, d = 1;

    Rational() = default;
    Rational(__int128 num, __int128 den = 1) : n(num), d(den) {
        if (d == 0) throw Error(ErrorKind::DegenerateConfiguration, "zero denominator");
        normalize();
    }

    Rational operator+(const Rational& o) const { return {n * o.d + o.n * d, d * o.d}; }
    Rational operator-(const Rational& o) const { return {n * o.d - o.n * d, d * o.d}; }
    Rational operator*(const Rational& o) const { return {n * o.n, d * o.d}; }
    Rational operator/(const Rational& o) const { return {n * o.d, d * o.n}; }
    Rational operator-() const { return {-n, d}; }
    bool operator==(const Rational& o) const { return n == o.n && d == o.d; }
    bool is_zero() const { return n == 0; }
    bool is_integer() const { return d == 1; }
    int sign() const { return n > 0 ? 1 : (n < 0 ? -1 : 0); }

    std::string str() const { return d == 1 ? int_str(n) : int_str(n) + "/" + int_str(d); }

    static std::string int_str(__int128 v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        std::string s;
        while (v != 0) {
            int digit = int(v % 10);
            s.push_back(char('0' + (neg ? -digit : digit)));
            v /= 10;
        }
        if (neg) s.push_back('-');
        std::reverse(s.begin(), s.end());
        return s;
    }

private:
    void normalize() {
        if (d < 0) n = -n, d = -d;
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) n /= a, d /= a;
    }
};

}  // namespace tetratrig
