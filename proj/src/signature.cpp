#include "clifford/signature.hpp"

#include <algorithm>
#include <sstream>

namespace clifford {

Signature::Signature(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
    if (p < 0 || q < 0 || r < 0) domain_fail("signature counts must be non-negative");
    if (n() > kMaxDimension)
        domain_fail("dimension " + std::to_string(n()) + " exceeds the supported maximum of 16");
}

std::string Signature::to_string() const {
    std::ostringstream os;
    os << "Cl(" << p << "," << q;
    if (r) os << "," << r;
    os << ")";
    return os.str();
}

int metric_factor(const Signature& sig, Blade common) {
    if (!common) return 1;
    Blade neg = range_mask(sig.p + 1, sig.p + sig.q);
    Blade null = range_mask(sig.p + sig.q + 1, sig.n());
    if (common & null) return 0;
    return (std::popcount(common & neg) & 1) ? -1 : 1;
}

std::vector<int> blade_indices(Blade b) {
    std::vector<int> out;
    for (int i = 1; b; ++i, b >>= 1)
        if (b & 1u) out.push_back(i);
    return out;
}

std::string blade_name(Blade b, int n) {
    if (!b) return "1";
    auto idx = blade_indices(b);
    std::string s = "e";
    if (n <= 9) {
        for (int i : idx) s += std::to_string(i);
        return s;
    }
    s += "{";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k]);
    }
    return s + "}";
}

std::string blade_key(Blade b) {
    std::string s;
    for (int i : blade_indices(b)) {
        if (!s.empty()) s += ",";
        s += std::to_string(i);
    }
    return s;
}

Blade parse_blade_key(const std::string& key, int n) {
    Blade b = 0;
    if (key.empty()) return 0;
    std::stringstream ss(key);
    std::string tok;
    int prev = 0;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
            throw ParseError("bad blade key '" + key + "'");
        int i = std::stoi(tok);
        if (i < 1 || i > n) throw ParseError("index " + tok + " out of range in blade key '" + key + "'");
        if (i <= prev) throw ParseError("blade key indices must be strictly increasing: '" + key + "'");
        prev = i;
        b |= generator_bit(i);
    }
    return b;
}

}  // namespace clifford
