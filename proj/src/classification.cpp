#include "clifford/classification.hpp"

namespace clifford {

namespace {

const char* ring_symbol(Ring r) {
    switch (r) {
        case Ring::R: return "R";
        case Ring::C: return "C";
        case Ring::H: return "H";
    }
    return "?";
}

int mod8(int x) { return ((x % 8) + 8) % 8; }

}  // namespace

std::string CartanClass::short_name() const {
    std::string s = doubled ? "²" : "";
    s += ring_symbol(ring);
    if (size > 1) s += "(" + std::to_string(size) + ")";
    return s;
}

std::string CartanClass::matrix_name() const {
    std::string m = "Mat(" + std::to_string(size) + "," + ring_symbol(ring) + ")";
    return doubled ? m + "+" + m : m;
}

CartanClass cartan_class(const Signature& sig) {
    if (sig.degenerate()) domain_fail("Cartan classification requires a nondegenerate signature");
    const int n = sig.n();
    switch (mod8(sig.p - sig.q)) {
        case 0:
        case 2: return {Ring::R, 1 << (n / 2), false};
        case 1: return {Ring::R, 1 << ((n - 1) / 2), true};
        case 3:
        case 7: return {Ring::C, 1 << ((n - 1) / 2), false};
        case 4:
        case 6: return {Ring::H, 1 << ((n - 2) / 2), false};
        default: return {Ring::H, 1 << ((n - 3) / 2), true};
    }
}

ExteriorSignature exterior_signature(const Signature& sig) {
    if (sig.degenerate()) domain_fail("exterior signature requires a nondegenerate signature");
    ExteriorSignature out;
    for (Blade b = 0; b < sig.blade_count(); ++b) {
        if (blade_square(sig, b) > 0)
            ++out.positive;
        else
            ++out.negative;
    }
    return out;
}

ExteriorSignature exterior_signature_closed_form(const Signature& sig) {
    if (sig.degenerate()) domain_fail("exterior signature requires a nondegenerate signature");
    const int n = sig.n();
    QSqrt2 pos = pow2_half(2 * (n - 1)) + pow2_half(n - 1) * sin_quarter_pi(sig.p - sig.q + 1);
    Rational P = pos.rational();
    ensure(P.get_den() == 1, "exterior signature closed form is not an integer");
    ExteriorSignature out;
    out.positive = P.get_num().get_si();
    out.negative = static_cast<long>(sig.blade_count()) - out.positive;
    return out;
}

bool iso_test(const Signature& a, const Signature& b) {
    if (a.n() != b.n()) return false;
    return exterior_signature(a) == exterior_signature(b);
}

}  // namespace clifford
