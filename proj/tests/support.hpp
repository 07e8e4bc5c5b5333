#pragma once

#include <random>
#include <vector>

#include "clifford/multivector.hpp"

namespace testing_support {

using namespace clifford;

inline std::mt19937& rng() {
    static std::mt19937 g(20240611u);
    return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline double rand_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

template <class K>
K random_scalar(long range = 3) {
    auto frac = [&] {
        Rational r(rand_int(-range, range), rand_int(1, 2));
        r.canonicalize();
        return r;
    };
    if constexpr (std::is_same_v<K, Rational>) {
        return frac();
    } else if constexpr (std::is_same_v<K, CRational>) {
        return CRational(frac(), Rational(rand_int(-range, range)));
    } else if constexpr (std::is_same_v<K, double>) {
        return rand_real(-1.0, 1.0);
    } else {
        return Complex(rand_real(-1.0, 1.0), rand_real(-1.0, 1.0));
    }
}

// Each blade present with probability `density`.
template <class K>
Multivector<K> random_element(const Signature& sig, double density = 0.6, long range = 3) {
    std::vector<std::pair<Blade, K>> pairs;
    for (Blade b = 0; b < sig.blade_count(); ++b)
        if (rand_real(0.0, 1.0) < density) pairs.push_back({b, random_scalar<K>(range)});
    return Multivector<K>::from_pairs(sig, pairs);
}

template <class K>
Multivector<K> random_vector(const Signature& sig, long range = 3) {
    std::vector<std::pair<Blade, K>> pairs;
    for (int a = 1; a <= sig.n(); ++a) pairs.push_back({generator_bit(a), random_scalar<K>(range)});
    return Multivector<K>::from_pairs(sig, pairs);
}

// All nondegenerate signatures with p + q = n.
inline std::vector<Signature> signatures_of_dim(int n) {
    std::vector<Signature> out;
    for (int p = n; p >= 0; --p) out.emplace_back(p, n - p);
    return out;
}

inline std::vector<Signature> signatures_up_to(int nmax) {
    std::vector<Signature> out;
    for (int n = 0; n <= nmax; ++n)
        for (auto s : signatures_of_dim(n)) out.push_back(s);
    return out;
}

// Rational point on Q(x) = eta_a: the line from e_a in a random direction meets the quadric again.
inline MvQ random_unit_vector(const Signature& sig, int a = 0) {
    if (a == 0) a = int(rand_int(1, sig.n()));
    const MvQ u = MvQ::generator(sig, a);
    for (;;) {
        MvQ d = random_vector<Rational>(sig, 4);
        Rational qd(0), gud(0);
        for (int b = 1; b <= sig.n(); ++b) {
            Rational c = d.coeff(generator_bit(b));
            qd += Rational(sig.eta(b)) * c * c;
        }
        gud = Rational(sig.eta(a)) * d.coeff(generator_bit(a));
        if (sgn(qd) == 0) continue;
        Rational t = Rational(-2) * gud / qd;
        return u + t * d;
    }
}

// Product of k unit vectors; reversion(T) T = +-e and T has parity k mod 2.
inline MvQ random_pin_element(const Signature& sig, int k) {
    MvQ t = MvQ::identity(sig);
    for (int i = 0; i < k; ++i) t = t * random_unit_vector(sig);
    return t;
}

}  // namespace testing_support
