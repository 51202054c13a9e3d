#pragma once

// Exact rationals over checked 128-bit integers. Denominator kept positive,
// fraction always reduced. No floating point anywhere: consumers that need
// roots clear them to integer powers before comparing.

#include <string>

#include "frobgeom/core.hpp"

namespace frobgeom {

struct rational {
    i128 num = 0;
    i128 den = 1;

    rational() = default;
    rational(i128 n) : num(n), den(1) {}
    rational(i128 n, i128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw input_error(errc::bad_argument, "rational with zero denominator");
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        i128 g = gcd_i128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend rational operator+(const rational& x, const rational& y) {
        return rational(checked_add(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
                        checked_mul(x.den, y.den));
    }
    friend rational operator-(const rational& x, const rational& y) {
        return rational(checked_sub(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
                        checked_mul(x.den, y.den));
    }
    friend rational operator*(const rational& x, const rational& y) {
        return rational(checked_mul(x.num, y.num), checked_mul(x.den, y.den));
    }
    friend rational operator/(const rational& x, const rational& y) {
        if (y.num == 0) throw input_error(errc::bad_argument, "rational division by zero");
        return rational(checked_mul(x.num, y.den), checked_mul(x.den, y.num));
    }

    friend bool operator==(const rational& x, const rational& y) {
        return x.num == y.num && x.den == y.den;  // both normalized
    }
    friend bool operator<(const rational& x, const rational& y) {
        return checked_mul(x.num, y.den) < checked_mul(y.num, x.den);
    }
    friend bool operator<=(const rational& x, const rational& y) { return x == y || x < y; }

    double to_double() const { return (double)num / (double)den; }

    std::string str() const {
        return den == 1 ? to_string(num) : to_string(num) + "/" + to_string(den);
    }
};

}  // namespace frobgeom
