#include "clifford/scalar.hpp"

#include <charconv>

namespace clifford {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::RealExact: return "real-exact";
        case Mode::ComplexExact: return "complex-exact";
        case Mode::RealFloat: return "real-float";
        case Mode::ComplexFloat: return "complex-float";
    }
    return "?";
}

Mode parse_mode_name(const std::string& s) {
    if (s == "real-exact") return Mode::RealExact;
    if (s == "complex-exact") return Mode::ComplexExact;
    if (s == "real-float") return Mode::RealFloat;
    if (s == "complex-float") return Mode::ComplexFloat;
    throw ParseError("unknown scalar mode '" + s + "'");
}

std::string rational_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

std::string double_to_string(double d) {
    if (d == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, res.ptr);
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    Rational out(a, b);
    out.canonicalize();
    return out;
}

}  // namespace clifford
