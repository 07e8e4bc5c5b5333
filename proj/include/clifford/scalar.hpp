#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "clifford/error.hpp"

namespace clifford {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Gaussian rational a + b i.
struct CRational {
    Rational re;
    Rational im;

    CRational() = default;
    CRational(long v) : re(v), im(0) {}
    CRational(Rational r) : re(std::move(r)), im(0) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    CRational& operator+=(const CRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRational& operator-=(const CRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CRational& operator*=(const CRational& o) {
        if (sgn(im) == 0 && sgn(o.im) == 0) {
            re *= o.re;
            return *this;
        }
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    CRational& operator/=(const CRational& o) {
        Rational d = o.re * o.re + o.im * o.im;
        if (sgn(d) == 0) domain_fail("division by zero");
        Rational r = (re * o.re + im * o.im) / d;
        Rational i = (im * o.re - re * o.im) / d;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    friend CRational operator+(CRational a, const CRational& b) { return a += b; }
    friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
    friend CRational operator*(CRational a, const CRational& b) { return a *= b; }
    friend CRational operator/(CRational a, const CRational& b) { return a /= b; }
    friend CRational operator-(const CRational& a) { return CRational(Rational(-a.re), Rational(-a.im)); }
    friend bool operator==(const CRational& a, const CRational& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }
};

enum class Mode { RealExact, ComplexExact, RealFloat, ComplexFloat };

// Canonicalised num/den.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) domain_fail("division by zero");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string mode_name(Mode m);
Mode parse_mode_name(const std::string& s);

std::string rational_to_string(const Rational& r);
std::string double_to_string(double d);

// Exact square root when the argument is a square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

template <class K>
struct Field;

template <>
struct Field<Rational> {
    static constexpr bool exact = true;
    static constexpr bool complex = false;
    static constexpr Mode mode = Mode::RealExact;
    using real_type = Rational;
    using complex_type = CRational;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& x, double = 0) { return sgn(x) == 0; }
    static Rational conj(const Rational& x) { return x; }
    static Rational re(const Rational& x) { return x; }
    static Rational im(const Rational&) { return Rational(0); }
    static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
    static CRational complexify(const Rational& x) { return CRational(x); }
    static std::string to_string(const Rational& x) { return rational_to_string(x); }
    static Rational from_complex(const CRational& z) {
        if (!z.is_real()) domain_fail("complex value where a real scalar is required");
        return z.re;
    }
};

template <>
struct Field<CRational> {
    static constexpr bool exact = true;
    static constexpr bool complex = true;
    static constexpr Mode mode = Mode::ComplexExact;
    using real_type = Rational;
    using complex_type = CRational;

    static CRational zero() { return CRational(0); }
    static CRational one() { return CRational(1); }
    static CRational from_int(long v) { return CRational(v); }
    static CRational from_rational(const Rational& r) { return CRational(r); }
    static CRational i() { return CRational(Rational(0), Rational(1)); }
    static CRational make(const Rational& r, const Rational& i) { return CRational(r, i); }
    static bool is_zero(const CRational& x, double = 0) { return x.is_zero(); }
    static CRational conj(const CRational& x) { return CRational(x.re, Rational(-x.im)); }
    static Rational re(const CRational& x) { return x.re; }
    static Rational im(const CRational& x) { return x.im; }
    static double magnitude(const CRational& x) { return std::hypot(x.re.get_d(), x.im.get_d()); }
    static CRational complexify(const CRational& x) { return x; }
    static std::string to_string(const CRational& x) {
        std::string s = rational_to_string(x.re);
        if (sgn(x.im) < 0)
            s += "-" + rational_to_string(Rational(-x.im));
        else
            s += "+" + rational_to_string(x.im);
        return s + "*i";
    }
    static CRational from_complex(const CRational& z) { return z; }
};

template <>
struct Field<double> {
    static constexpr bool exact = false;
    static constexpr bool complex = false;
    static constexpr Mode mode = Mode::RealFloat;
    using real_type = double;
    using complex_type = Complex;

    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_rational(const Rational& r) { return r.get_d(); }
    static bool is_zero(double x, double tol = 0) { return std::abs(x) <= tol; }
    static double conj(double x) { return x; }
    static double re(double x) { return x; }
    static double im(double) { return 0.0; }
    static double magnitude(double x) { return std::abs(x); }
    static Complex complexify(double x) { return Complex(x, 0.0); }
    static std::string to_string(double x) { return double_to_string(x); }
    static double from_complex(const Complex& z, double tol = 1e-9) {
        if (std::abs(z.imag()) > tol) domain_fail("complex value where a real scalar is required");
        return z.real();
    }
};

template <>
struct Field<Complex> {
    static constexpr bool exact = false;
    static constexpr bool complex = true;
    static constexpr Mode mode = Mode::ComplexFloat;
    using real_type = double;
    using complex_type = Complex;

    static Complex zero() { return Complex(0.0, 0.0); }
    static Complex one() { return Complex(1.0, 0.0); }
    static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex from_rational(const Rational& r) { return Complex(r.get_d(), 0.0); }
    static Complex i() { return Complex(0.0, 1.0); }
    static Complex make(double r, double i) { return Complex(r, i); }
    static bool is_zero(const Complex& x, double tol = 0) { return std::abs(x) <= tol; }
    static Complex conj(const Complex& x) { return std::conj(x); }
    static double re(const Complex& x) { return x.real(); }
    static double im(const Complex& x) { return x.imag(); }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static Complex complexify(const Complex& x) { return x; }
    static std::string to_string(const Complex& x) {
        std::string s = double_to_string(x.real());
        if (std::signbit(x.imag()))
            s += "-" + double_to_string(-x.imag());
        else
            s += "+" + double_to_string(x.imag());
        return s + "*i";
    }
    static Complex from_complex(const Complex& z) { return z; }
};

template <class K>
using complex_of = typename Field<K>::complex_type;

template <class K>
using real_of = typename Field<K>::real_type;

inline Complex to_float(const CRational& z) { return Complex(z.re.get_d(), z.im.get_d()); }
inline double to_float(const Rational& r) { return r.get_d(); }
inline Complex to_float(const Complex& z) { return z; }
inline double to_float(double d) { return d; }

// Scalar conversion between fields; complex to real requires a zero imaginary part.
template <class To, class From>
To convert_scalar(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (Field<To>::exact && Field<From>::exact) {
        if constexpr (Field<To>::complex)
            return To(Field<From>::re(x), Field<From>::im(x));
        else
            return Field<To>::from_complex(Field<From>::complexify(x));
    } else if constexpr (!Field<To>::exact && Field<From>::exact) {
        auto z = to_float(Field<From>::complexify(x));
        if constexpr (Field<To>::complex)
            return z;
        else
            return Field<double>::from_complex(z);
    } else if constexpr (!Field<To>::exact && !Field<From>::exact) {
        if constexpr (Field<To>::complex)
            return Complex(Field<From>::re(x), Field<From>::im(x));
        else
            return Field<double>::from_complex(Field<From>::complexify(x));
    } else {
        static_assert(!Field<To>::exact || Field<From>::exact, "float to exact conversion is not supported");
        return To{};
    }
}

}  // namespace clifford
