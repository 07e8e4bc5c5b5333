#pragma once

#include <set>

#include "clifford/multivector.hpp"
#include "clifford/qsqrt2.hpp"

namespace clifford {

// Coefficient of the identity blade.
template <class K>
K trace(const Multivector<K>& u) {
    return u.scalar_part();
}

// Each blade goes to its inverse, coefficients are conjugated.
template <class K>
Multivector<K> hermitian_conjugate(const Multivector<K>& u) {
    const Signature& sig = u.signature();
    if (sig.degenerate()) domain_fail("hermitian conjugation requires a nondegenerate signature");
    return u.map_terms([&](Blade b, const K& c) {
        K x = Field<K>::conj(c);
        return blade_square(sig, b) > 0 ? x : K(-x);
    });
}

// Tr(U^dagger V) evaluated as the coefficient sum of conj(u_A) v_A.
template <class K>
K herm_scalar_product(const Multivector<K>& u, const Multivector<K>& v) {
    if (u.signature() != v.signature()) domain_fail("scalar product of elements from different algebras");
    if (u.signature().degenerate()) domain_fail("hermitian scalar product requires a nondegenerate signature");
    K s = Field<K>::zero();
    K tmp = Field<K>::zero();
    const auto& a = u.terms();
    const auto& b = v.terms();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].blade < b[j].blade)
            ++i;
        else if (b[j].blade < a[i].blade)
            ++j;
        else {
            tmp = Field<K>::conj(a[i].coeff) * b[j].coeff;
            s += tmp;
            ++i;
            ++j;
        }
    }
    return s;
}

template <class K>
real_of<K> norm_sq(const Multivector<K>& u) {
    real_of<K> s = 0;
    for (const auto& t : u.terms()) {
        if constexpr (Field<K>::complex) {
            real_of<K> re = Field<K>::re(t.coeff), im = Field<K>::im(t.coeff);
            s += re * re + im * im;
        } else {
            s += t.coeff * t.coeff;
        }
    }
    return s;
}

// U^dagger through conjugation by the positive block e_{1..p}.
template <class K>
Multivector<K> hermitian_via_positive_block(const Multivector<K>& u) {
    const Signature& sig = u.signature();
    Blade ep = range_mask(1, sig.p);
    auto base = complex_conjugate(sig.p % 2 ? reversion(u) : clifford_conjugation(u));
    return blade_inverse<K>(sig, ep) * base * Multivector<K>::blade(sig, ep);
}

// U^dagger through conjugation by the negative block e_{p+1..n}.
template <class K>
Multivector<K> hermitian_via_negative_block(const Multivector<K>& u) {
    const Signature& sig = u.signature();
    Blade eq = range_mask(sig.p + 1, sig.n());
    auto base = complex_conjugate(sig.q % 2 == 0 ? reversion(u) : clifford_conjugation(u));
    return blade_inverse<K>(sig, eq) * base * Multivector<K>::blade(sig, eq);
}

// Real dimension of the grades congruent to j mod 4, closed form.
Rational quaternion_type_dimension(int n, int j);

// Dimension counted directly from binomial coefficients.
long quaternion_type_dimension_count(int n, int j);

enum class Bracket { Commutator, Anticommutator };

// Quaternion type containing [A,B] or {A,B} for A of type j and B of type k.
int quaternion_bracket_type(int j, int k, Bracket br);

// Grades spanning the center: {0} for even n, {0,n} for odd n.
std::set<int> center_grades(const Signature& sig);

// (e_{1..n})^2 as +-1.
int pseudoscalar_square(const Signature& sig);

}  // namespace clifford
