#include "clifford/io.hpp"

#include <sstream>

namespace clifford {

Signature parse_signature(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.size() > 3 || !std::all_of(tok.begin(), tok.end(), ::isdigit))
            throw ParseError("signature must be p,q or p,q,r with nonnegative integers, got '" + text + "'");
        parts.push_back(std::stoi(tok));
    }
    if (parts.size() < 2 || parts.size() > 3 || text.back() == ',')
        throw ParseError("signature must be p,q or p,q,r, got '" + text + "'");
    const int r = parts.size() == 3 ? parts[2] : 0;
    if (parts[0] + parts[1] + r > kMaxDimension)
        throw ParseError("dimension " + std::to_string(parts[0] + parts[1] + r) + " exceeds the limit " +
                         std::to_string(kMaxDimension));
    return Signature(parts[0], parts[1], r);
}

bool mentions_imaginary(std::string_view text) { return text.find('i') != std::string_view::npos; }

namespace detail {

Rational parse_exact_number(std::string_view text) {
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const std::string num(text.substr(0, slash)), den(text.substr(slash + 1));
        if (num.empty() || den.empty() || num.find_first_not_of("0123456789") != std::string::npos ||
            den.find_first_not_of("0123456789") != std::string::npos)
            domain_fail("a/b needs integer parts");
        mpz_class d(den, 10);
        if (d == 0) domain_fail("division by zero");
        Rational q{mpz_class(num, 10), d};
        q.canonicalize();
        return q;
    }
    std::string mant(text);
    long exp10 = 0;
    if (const auto e = mant.find('e'); e != std::string::npos) {
        exp10 = std::stol(mant.substr(e + 1));
        mant.resize(e);
        if (exp10 > 4000 || exp10 < -4000) domain_fail("exponent too large");
    }
    if (const auto dot = mant.find('.'); dot != std::string::npos) {
        exp10 -= long(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    if (mant.empty()) domain_fail("malformed number");
    mpz_class m(mant, 10), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    Rational q = exp10 < 0 ? Rational(m, scale) : Rational(m * scale);
    q.canonicalize();
    return q;
}

}  // namespace detail

std::string format_real(const Rational& x) { return rational_to_string(x); }
std::string format_real(double x) { return double_to_string(x); }

Json signature_to_json(const Signature& sig) { return Json::array({sig.p, sig.q, sig.r}); }

Signature signature_from_json(const Json& j) {
    if (!j.is_array() || j.size() < 2 || j.size() > 3) throw ParseError("signature must be [p,q] or [p,q,r]");
    for (const auto& v : j)
        if (!v.is_number_integer() || v.get<int>() < 0) throw ParseError("signature entries must be nonnegative integers");
    const int r = j.size() == 3 ? j[2].get<int>() : 0;
    if (j[0].get<int>() + j[1].get<int>() + r > kMaxDimension) throw ParseError("signature exceeds the dimension limit");
    return Signature(j[0].get<int>(), j[1].get<int>(), r);
}

Json rep_to_json(const MatrixRep& rep) {
    Json gens = Json::array();
    for (int a = 1; a <= rep.sig.n(); ++a) gens.push_back(matrix_to_json(rep.generator(a)));
    Json idem = Json::array();
    for (const auto& t : rep.idempotents) idem.push_back(element_to_json(t));
    return Json{{"signature", signature_to_json(rep.sig)},
                {"dim", rep.dim},
                {"blocks", rep.blocks},
                {"idempotents", idem},
                {"generators", gens}};
}

}  // namespace clifford
