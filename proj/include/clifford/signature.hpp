#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "clifford/error.hpp"

namespace clifford {

using Blade = std::uint32_t;

inline constexpr int kMaxDimension = 16;

// Cl(p,q,r): p generators square to +1, then q to -1, then r to 0.
struct Signature {
    int p = 0;
    int q = 0;
    int r = 0;

    Signature() = default;
    Signature(int p_, int q_, int r_ = 0);

    int n() const { return p + q + r; }
    bool degenerate() const { return r > 0; }
    std::size_t blade_count() const { return std::size_t{1} << n(); }
    Blade pseudoscalar() const { return n() == 0 ? 0u : static_cast<Blade>((1u << n()) - 1u); }

    // 1-based generator index
    int eta(int a) const {
        if (a <= p) return 1;
        if (a <= p + q) return -1;
        return 0;
    }

    std::string to_string() const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

inline int grade_of(Blade b) { return std::popcount(b); }

inline Blade generator_bit(int a) { return Blade{1} << (a - 1); }

// Mask of generators a..b inclusive, 1-based.
inline Blade range_mask(int a, int b) {
    Blade m = 0;
    for (int i = a; i <= b; ++i) m |= generator_bit(i);
    return m;
}

// Sign from sorting the concatenated index list of A then B.
inline int reorder_sign(Blade a, Blade b) {
    int swaps = 0;
    a >>= 1;
    while (a) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

// Product of eta over the generators in mask; 0 when a null generator is included.
int metric_factor(const Signature& sig, Blade common);

struct BladeProduct {
    int sign;  // -1, 0, +1
    Blade blade;
};

inline BladeProduct blade_product(const Signature& sig, Blade a, Blade b) {
    int m = metric_factor(sig, a & b);
    if (m == 0) return {0, a ^ b};
    return {reorder_sign(a, b) * m, a ^ b};
}

// e_A * e_A as +-1 (or 0 for degenerate blades).
inline int blade_square(const Signature& sig, Blade a) { return blade_product(sig, a, a).sign; }

// Generator indices (1-based, ascending) of a blade.
std::vector<int> blade_indices(Blade b);

// "e12", "e{1,10}" or "1" for the identity blade.
std::string blade_name(Blade b, int n);

// Comma-joined indices, "" for the identity blade.
std::string blade_key(Blade b);

Blade parse_blade_key(const std::string& key, int n);

// Sign changes applied to grade k by the standard involutions.
inline int grade_involution_sign(int k) { return (k & 1) ? -1 : 1; }
inline int reversion_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }
inline int clifford_conjugation_sign(int k) { return ((k * (k + 1) / 2) & 1) ? -1 : 1; }

}  // namespace clifford
