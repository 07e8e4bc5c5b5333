#pragma once

#include <string>

#include "clifford/scalar.hpp"

namespace clifford {

// a + b*sqrt(2) with rational a, b; enough for the trigonometric closed forms at multiples of pi/4.
struct QSqrt2 {
    Rational a;
    Rational b;

    QSqrt2() : a(0), b(0) {}
    QSqrt2(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
    friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a, -x.b}; }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a == y.a && x.b == y.b; }

    bool is_rational() const { return sgn(b) == 0; }

    Rational rational() const {
        if (!is_rational()) internal_fail("value has an irrational sqrt(2) component");
        return a;
    }

    double to_double() const { return a.get_d() + b.get_d() * 1.4142135623730951; }
};

// 2^(h/2)
inline QSqrt2 pow2_half(int h) {
    int k = h >= 0 ? h / 2 : -((-h + 1) / 2);  // floor(h/2)
    Rational base = 1;
    if (k >= 0)
        base = Rational(mpz_class(1) << k);
    else
        base = Rational(mpz_class(1), mpz_class(1) << (-k));
    if (h - 2 * k == 0) return {base, 0};
    return {0, base};
}

// cos(m*pi/4)
inline QSqrt2 cos_quarter_pi(int m) {
    m = ((m % 8) + 8) % 8;
    const Rational half(1, 2);
    switch (m) {
        case 0: return {1, 0};
        case 1: return {0, half};
        case 2: return {0, 0};
        case 3: return {0, -half};
        case 4: return {-1, 0};
        case 5: return {0, -half};
        case 6: return {0, 0};
        default: return {0, half};
    }
}

// sin(m*pi/4)
inline QSqrt2 sin_quarter_pi(int m) { return cos_quarter_pi(m - 2); }

}  // namespace clifford
