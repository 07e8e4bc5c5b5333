#pragma once

#include <array>
#include <vector>

#include "clifford/multivector.hpp"

namespace clifford {

// Elements of some algebra claimed to satisfy the defining relations of `target`.
template <class K>
struct GeneratorSet {
    Signature target;
    std::vector<Multivector<K>> gens;
};

// g_a g_b + g_b g_a = 2 eta_ab e for all a, b.
template <class K>
bool verify_generators(const Signature& target, const std::vector<Multivector<K>>& gens, double tol = 1e-9) {
    if (static_cast<int>(gens.size()) != target.n()) return false;
    if (gens.empty()) return true;
    const Signature& alg = gens[0].signature();
    for (const auto& g : gens)
        if (g.signature() != alg) return false;
    for (int a = 0; a < target.n(); ++a) {
        for (int b = a; b < target.n(); ++b) {
            auto ac = anticommutator(gens[a], gens[b]);
            long expect = a == b ? 2 * target.eta(a + 1) : 0;
            auto rhs = Multivector<K>::scalar(alg, Field<K>::from_int(expect));
            if (!same_value(ac, rhs, tol)) return false;
        }
    }
    return true;
}

template <class K>
bool verify_generators(const GeneratorSet<K>& set, double tol = 1e-9) {
    return verify_generators(set.target, set.gens, tol);
}

// Stable reorder by square (+e first, then -e, then 0); target signature read off the squares.
template <class K>
GeneratorSet<K> order_by_square(const std::vector<Multivector<K>>& cands) {
    std::array<std::vector<Multivector<K>>, 3> bins;
    for (const auto& g : cands) {
        auto sq = g * g;
        if (!sq.is_scalar()) domain_fail("candidate generator does not square to a scalar");
        K s = sq.scalar_part();
        auto near = [&](long v) { return Field<K>::magnitude(K(s - Field<K>::from_int(v))) <= 1e-9; };
        if (near(0))
            bins[2].push_back(g);
        else if (near(1))
            bins[0].push_back(g);
        else if (near(-1))
            bins[1].push_back(g);
        else
            domain_fail("candidate generator squares to a scalar other than +-1 or 0");
    }
    GeneratorSet<K> out;
    out.target = Signature(int(bins[0].size()), int(bins[1].size()), int(bins[2].size()));
    for (auto& b : bins)
        for (auto& g : b) out.gens.push_back(std::move(g));
    return out;
}

// e_i e_n, i < n: the even subalgebra as a Clifford algebra of dimension n-1.
template <class K>
GeneratorSet<K> even_subalgebra_generators_last(const Signature& sig) {
    if (sig.degenerate() || sig.n() < 1) domain_fail("even subalgebra recipe needs a nondegenerate algebra with n >= 1");
    std::vector<Multivector<K>> c;
    auto en = Multivector<K>::generator(sig, sig.n());
    for (int i = 1; i < sig.n(); ++i) c.push_back(Multivector<K>::generator(sig, i) * en);
    return order_by_square(c);
}

// e_{p+i} e_p and e_j e_p (j < p): the even subalgebra as Cl(q, p-1).
template <class K>
GeneratorSet<K> even_subalgebra_generators_pivot(const Signature& sig) {
    if (sig.degenerate() || sig.p < 1) domain_fail("even subalgebra pivot recipe needs p >= 1");
    std::vector<Multivector<K>> c;
    auto ep = Multivector<K>::generator(sig, sig.p);
    for (int i = 1; i <= sig.q; ++i) c.push_back(Multivector<K>::generator(sig, sig.p + i) * ep);
    for (int j = 1; j < sig.p; ++j) c.push_back(Multivector<K>::generator(sig, j) * ep);
    return order_by_square(c);
}

// In Cl(p+1,q+1): e_i e_+ e_- for the remaining generators span a copy of Cl(p,q).
template <class K>
GeneratorSet<K> tensor_split_generators(const Signature& sig) {
    if (sig.degenerate() || sig.p < 1 || sig.q < 1) domain_fail("tensor split recipe needs p, q >= 1");
    std::vector<Multivector<K>> c;
    auto pm = Multivector<K>::generator(sig, sig.p) * Multivector<K>::generator(sig, sig.n());
    for (int i = 1; i <= sig.n(); ++i) {
        if (i == sig.p || i == sig.n()) continue;
        c.push_back(Multivector<K>::generator(sig, i) * pm);
    }
    return order_by_square(c);
}

// e_1 and e_i e_1: Cl(p,q) as Cl(q+1, p-1).
template <class K>
GeneratorSet<K> swap_generators(const Signature& sig) {
    if (sig.degenerate() || sig.p < 1) domain_fail("swap recipe needs p >= 1");
    std::vector<Multivector<K>> c;
    auto e1 = Multivector<K>::generator(sig, 1);
    c.push_back(e1);
    for (int i = 2; i <= sig.n(); ++i) c.push_back(Multivector<K>::generator(sig, i) * e1);
    return order_by_square(c);
}

// e_i e_1234 for i <= 4, then e_j: Cl(p,q) as Cl(p-4, q+4).
template <class K>
GeneratorSet<K> shift4_generators(const Signature& sig) {
    if (sig.degenerate() || sig.p < 4) domain_fail("shift recipe needs p >= 4");
    std::vector<Multivector<K>> c;
    auto e1234 = Multivector<K>::blade(sig, range_mask(1, 4));
    for (int i = 1; i <= 4; ++i) c.push_back(Multivector<K>::generator(sig, i) * e1234);
    for (int j = 5; j <= sig.n(); ++j) c.push_back(Multivector<K>::generator(sig, j));
    return order_by_square(c);
}

// 2x2 matrix with entries in a Clifford algebra, row-major.
template <class K>
struct Block2 {
    std::array<Multivector<K>, 4> m;

    friend Block2 operator*(const Block2& a, const Block2& b) {
        return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                 a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
    }
    friend Block2 operator+(const Block2& a, const Block2& b) {
        return {{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
    }
    friend bool operator==(const Block2& a, const Block2& b) { return a.m == b.m; }
};

// Generators of Cl(p+1,q+1) realised as 2x2 matrices over Cl(p,q), in canonical order.
template <class K>
std::vector<Block2<K>> block_generators(const Signature& sig) {
    using M = Multivector<K>;
    const M zero(sig), one = M::identity(sig);
    std::vector<Block2<K>> pos, neg;
    for (int i = 1; i <= sig.n(); ++i) {
        auto e = M::generator(sig, i);
        Block2<K> g{{e, zero, zero, -e}};
        (sig.eta(i) > 0 ? pos : neg).push_back(g);
    }
    if (sig.degenerate()) domain_fail("block recipe needs a nondegenerate algebra");
    pos.push_back(Block2<K>{{zero, one, one, zero}});
    neg.push_back(Block2<K>{{zero, -one, one, zero}});
    for (auto& g : neg) pos.push_back(g);
    return pos;
}

}  // namespace clifford
