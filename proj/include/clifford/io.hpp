#pragma once

#include <charconv>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "clifford/groups.hpp"
#include "clifford/representations.hpp"

namespace clifford {

using Json = nlohmann::json;

// "p,q" or "p,q,r"
Signature parse_signature(const std::string& text);

// Parse failure with a 1-based column.
struct SyntaxError : ParseError {
    SyntaxError(std::size_t column, const std::string& what)
        : ParseError("syntax error at column " + std::to_string(column) + ": " + what), column(column) {}
    std::size_t column;
};

// True if the text has an imaginary-unit literal, i.e. it needs a complex mode.
bool mentions_imaginary(std::string_view text);

namespace detail {

// Exact value of a decimal or a/b literal.
Rational parse_exact_number(std::string_view text);

template <class K>
class ElementParser {
public:
    using CK = complex_of<K>;
    using M = Multivector<CK>;

    ElementParser(std::string_view text, const Signature& sig) : s_(text), sig_(sig) {}

    Multivector<K> run() {
        skip();
        if (at_end()) fail("empty expression");
        M u = element();
        skip();
        if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
        if constexpr (Field<K>::complex) {
            return u;
        } else {
            if (imag_pos_ != npos) {
                pos_ = imag_pos_;
                fail("complex literal in real mode");
            }
            std::vector<std::pair<Blade, K>> pairs;
            for (const auto& t : u.terms()) pairs.emplace_back(t.blade, K(Field<CK>::re(t.coeff)));
            return Multivector<K>::from_pairs(sig_, pairs);
        }
    }

private:
    static constexpr std::size_t npos = std::string_view::npos;

    std::string_view s_;
    Signature sig_;
    std::size_t pos_ = 0;
    std::size_t imag_pos_ = npos;

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_ + 1, what); }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip() {
        while (!at_end() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    static bool digit(char c) { return c >= '0' && c <= '9'; }

    // element := ['+'|'-'] term (('+'|'-') term)*
    M element() {
        // keyed accumulator: long sums stay near linear
        std::map<Blade, CK> acc;
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                break;
            }
            const M t = term();
            for (const auto& x : t.terms()) {
                auto it = acc.try_emplace(x.blade, Field<CK>::zero()).first;
                if (sign > 0)
                    it->second += x.coeff;
                else
                    it->second -= x.coeff;
            }
            first = false;
            skip();
            if (peek() != '+' && peek() != '-') break;
        }
        return M::from_pairs(sig_, std::vector<std::pair<Blade, CK>>(acc.begin(), acc.end()));
    }

    // term := factor ('*' factor)*; a number directly followed by 'i' is one factor
    M term() {
        M t = factor();
        for (;;) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            skip();
            M f = factor();
            // scalar factors are common; avoid the general product for them
            if (f.is_scalar())
                t = f.scalar_part() * t;
            else if (t.is_scalar())
                t = t.scalar_part() * f;
            else
                t = t * f;
        }
        return t;
    }

    M factor() {
        skip();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            M inner = element();
            skip();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'i') {
            imag_pos_ = std::min(imag_pos_, pos_);
            ++pos_;
            return M::scalar(sig_, Field<CK>::i());
        }
        if (c == 'e') return blade();
        if (digit(c) || c == '.') {
            CK v = number();
            if (peek() == 'i') {
                imag_pos_ = std::min(imag_pos_, pos_);
                ++pos_;
                v = v * Field<CK>::i();
            }
            return M::scalar(sig_, v);
        }
        if (at_end()) fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    CK number() {
        const std::size_t start = pos_;
        while (digit(peek())) ++pos_;
        if (peek() == '.') {
            ++pos_;
            while (digit(peek())) ++pos_;
        }
        // exponents carry an explicit sign: 1e-3, 2.5e+4
        if (peek() == 'e' && pos_ + 2 < s_.size() && (s_[pos_ + 1] == '+' || s_[pos_ + 1] == '-') &&
            digit(s_[pos_ + 2])) {
            pos_ += 2;
            while (digit(peek())) ++pos_;
        }
        if (peek() == '/') {
            ++pos_;
            if (!digit(peek())) fail("expected a denominator");
            while (digit(peek())) ++pos_;
        }
        const std::string_view lit = s_.substr(start, pos_ - start);
        if (lit == ".") {
            pos_ = start;
            fail("malformed number");
        }
        if constexpr (Field<CK>::exact) {
            try {
                return Field<CK>::from_rational(parse_exact_number(lit));
            } catch (const DomainError& e) {
                pos_ = start;
                fail(e.what());
            }
        } else {
            const auto slash = lit.find('/');
            double v = 0;
            if (slash == npos) {
                auto r = std::from_chars(lit.data(), lit.data() + lit.size(), v);
                if (r.ec != std::errc() || r.ptr != lit.data() + lit.size()) {
                    pos_ = start;
                    fail("malformed number");
                }
            } else {
                Rational q;
                try {
                    q = parse_exact_number(lit);
                } catch (const DomainError& e) {
                    pos_ = start;
                    fail(e.what());
                }
                v = q.get_d();
            }
            return CK(v);
        }
    }

    // 'e' digit+ | 'e{' int (',' int)* '}' | bare 'e' for the identity
    M blade() {
        ++pos_;
        std::vector<int> idx;
        if (peek() == '{') {
            ++pos_;
            for (;;) {
                skip();
                const std::size_t at = pos_;
                if (!digit(peek())) fail("expected a generator index");
                long v = 0;
                while (digit(peek())) {
                    v = v * 10 + (peek() - '0');
                    if (v > 1000) break;
                    ++pos_;
                }
                check_index(v, at);
                idx.push_back(int(v));
                skip();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() == '}') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or '}'");
            }
        } else {
            while (digit(peek())) {
                check_index(peek() - '0', pos_);
                idx.push_back(peek() - '0');
                ++pos_;
            }
        }
        // product of generators in the written order; repeats contract through the metric
        Blade b = 0;
        int sign = 1;
        for (int a : idx) {
            const auto pr = blade_product(sig_, b, generator_bit(a));
            b = pr.blade;
            sign *= pr.sign;
        }
        if (sign == 0) return M(sig_);
        return M::blade(sig_, b, Field<CK>::from_int(sign));
    }

    void check_index(long v, std::size_t at) {
        if (v < 1 || v > sig_.n()) {
            pos_ = at;
            fail("generator index " + std::to_string(v) + " out of range 1.." + std::to_string(sig_.n()) + " for " +
                 sig_.to_string());
        }
    }
};

}  // namespace detail

// element := term (('+'|'-') term)*; see the README for the grammar.
template <class K>
Multivector<K> parse_element(std::string_view text, const Signature& sig) {
    return detail::ElementParser<K>(text, sig).run();
}

// ---- formatting ------------------------------------------------------------

std::string format_real(const Rational& x);
std::string format_real(double x);

// Bare form for JSON strings: "3/2", "-i", "1/2+3i".
template <class K>
std::string format_scalar(const K& x) {
    if constexpr (!Field<K>::complex) {
        return format_real(x);
    } else {
        const auto re = Field<K>::re(x), im = Field<K>::im(x);
        using R = real_of<K>;
        auto imag_text = [](const R& v) {
            const bool neg = v < 0;
            const R a = neg ? R(-v) : v;
            std::string body = a == 1 ? "i" : format_real(a) + "i";
            return std::make_pair(neg, body);
        };
        if (im == 0) return format_real(re);
        auto [neg, body] = imag_text(im);
        if (re == 0) return (neg ? "-" : "") + body;
        return format_real(re) + (neg ? "-" : "+") + body;
    }
}

// Canonical text, blades in mask order: "1 + 2*e1 - e12", "(1/2+i)*e3".
template <class K>
std::string format_element(const Multivector<K>& u) {
    const int n = u.signature().n();
    std::string out;
    for (const auto& t : u.terms()) {
        K c = t.coeff;
        bool neg = false;
        bool compound = false;
        if constexpr (Field<K>::complex) {
            const auto re = Field<K>::re(c), im = Field<K>::im(c);
            if (im == 0 && re < 0) neg = true;
            if (re == 0 && im < 0) neg = true;
            compound = re != 0 && im != 0;
        } else {
            neg = c < 0;
        }
        if (neg) c = K(-c);
        std::string coeff = format_scalar(c);
        if (compound) coeff = "(" + coeff + ")";
        std::string body;
        if (t.blade == 0)
            body = coeff;
        else if (coeff == "1")
            body = blade_name(t.blade, n);
        else
            body = coeff + "*" + blade_name(t.blade, n);
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

// ---- JSON --------------------------------------------------------------------

Json signature_to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

// {"signature":[p,q,r],"mode":"real-exact","coeffs":{"1,2":"-3/2","":"1"}}
template <class K>
Json element_to_json(const Multivector<K>& u) {
    Json coeffs = Json::object();
    for (const auto& t : u.terms()) coeffs[blade_key(t.blade)] = format_scalar(t.coeff);
    return Json{{"signature", signature_to_json(u.signature())}, {"mode", mode_name(Field<K>::mode)}, {"coeffs", coeffs}};
}

template <class K>
Multivector<K> element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("coeffs"))
        throw ParseError("element JSON needs 'signature' and 'coeffs'");
    const Signature sig = signature_from_json(j.at("signature"));
    if (j.contains("mode")) {
        const Mode m = parse_mode_name(j.at("mode").get<std::string>());
        if (Field<K>::exact != (m == Mode::RealExact || m == Mode::ComplexExact))
            throw ParseError("element JSON has mode " + mode_name(m) + ", expected " + mode_name(Field<K>::mode));
        if (!Field<K>::complex && (m == Mode::ComplexExact || m == Mode::ComplexFloat))
            throw ParseError("complex element where a real one is expected");
    }
    std::vector<std::pair<Blade, K>> pairs;
    for (const auto& [key, val] : j.at("coeffs").items()) {
        if (!val.is_string()) throw ParseError("coefficient for '" + key + "' must be a string");
        const Blade b = parse_blade_key(key, sig.n());
        const auto c = parse_element<K>(val.template get<std::string>(), Signature(0, 0));
        pairs.emplace_back(b, c.scalar_part());
    }
    return Multivector<K>::from_pairs(sig, pairs);
}

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// Entries may be strings ("3/5", "1+i") or JSON numbers.
template <class K>
Matrix<K> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix JSON must be an array of rows");
    const std::size_t rows = j.size(), cols = j[0].size();
    Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows have different lengths");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& v = j[i][c];
            std::string text;
            if (v.is_string())
                text = v.get<std::string>();
            else if (v.is_number_integer())
                text = std::to_string(v.get<long long>());
            else if (v.is_number())
                text = v.dump();
            else
                throw ParseError("matrix entries must be strings or numbers");
            m(i, c) = parse_element<K>(text, Signature(0, 0)).scalar_part();
        }
    }
    return m;
}

// {"signature":[p,q,0],"matrix":[[...]]}; column a holds the image of e_a.
template <class K>
Json ortho_to_json(const OrthoMatrix<K>& m) {
    return Json{{"signature", signature_to_json(m.sig)}, {"matrix", matrix_to_json(m.P)}};
}

template <class K>
OrthoMatrix<K> ortho_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("matrix"))
        throw ParseError("orthogonal-matrix JSON needs 'signature' and 'matrix'");
    OrthoMatrix<K> m{signature_from_json(j.at("signature")), matrix_from_json<K>(j.at("matrix"))};
    if (m.P.rows() != std::size_t(m.sig.n()) || m.P.cols() != std::size_t(m.sig.n()))
        throw ParseError("matrix size does not match the signature");
    return m;
}

// Representation: idempotents and generator images.
Json rep_to_json(const MatrixRep& rep);

// Ideal spinor as coordinates in the cached rep's ideal basis.
template <class CK>
Json spinor_to_json(const Multivector<CK>& psi) {
    const auto rep = matrix_rep(psi.signature());
    const auto t = convert<CK>(rep->idempotents.at(0));
    if (!same_value(psi * t, psi, 1e-9)) domain_fail("element is not in the left ideal of the designated idempotent");
    Json coords = Json::array();
    const std::size_t d = rep->blocks.at(0);
    for (std::size_t k = 0; k < d; ++k) coords.push_back(format_scalar(herm_scalar_product(convert<CK>(rep->basis[k]), psi)));
    return Json{{"signature", signature_to_json(psi.signature())},
                {"mode", mode_name(Field<CK>::mode)},
                {"idempotent", "rep:0"},
                {"coords", coords}};
}

template <class CK>
Multivector<CK> spinor_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("coords")) throw ParseError("spinor JSON needs 'signature' and 'coords'");
    if (j.value("idempotent", std::string("rep:0")) != "rep:0") throw ParseError("unknown idempotent identifier");
    const Signature sig = signature_from_json(j.at("signature"));
    const auto rep = matrix_rep(sig);
    const auto& coords = j.at("coords");
    if (!coords.is_array() || coords.size() != rep->blocks.at(0)) throw ParseError("spinor needs one coordinate per ideal basis element");
    Multivector<CK> psi(sig);
    for (std::size_t k = 0; k < coords.size(); ++k)
        psi += parse_element<CK>(coords[k].get<std::string>(), Signature(0, 0)).scalar_part() * convert<CK>(rep->basis[k]);
    return psi;
}

}  // namespace clifford
