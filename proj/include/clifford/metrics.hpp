#pragma once

#include <optional>

#include "clifford/conjugations.hpp"
#include "clifford/linalg.hpp"
#include "clifford/representations.hpp"

namespace clifford {

inline constexpr int kClosedFormMaxDimension = 5;

namespace detail {

// grades 4 and 5 negated
template <class K>
Multivector<K> down_flip(const Multivector<K>& u) {
    return negate_grades(u, {4, 5});
}

// grade 5 negated
template <class K>
Multivector<K> up_flip(const Multivector<K>& u) {
    return negate_grades(u, {5});
}

template <class K>
Multivector<K> inner_factor(const Multivector<K>& u) {
    return down_flip(grade_involution(u) * clifford_conjugation(u));
}

template <class K>
void require_nondegenerate(const Multivector<K>& u, const char* what) {
    if (u.signature().degenerate()) domain_fail(std::string(what) + " requires a nondegenerate signature");
}

}  // namespace detail

// U * adj(U) = Det(U) e for n <= 5.
template <class K>
Multivector<K> adjugate_closed_form(const Multivector<K>& u) {
    detail::require_nondegenerate(u, "adjugate");
    const Signature& sig = u.signature();
    switch (sig.n()) {
        case 0: return Multivector<K>::identity(sig);
        case 1: return grade_involution(u);
        case 2: return clifford_conjugation(u);
        case 3: return reversion(u) * grade_involution(u) * clifford_conjugation(u);
        case 4: return reversion(u) * detail::inner_factor(u);
        case 5: {
            auto rt = reversion(u) * detail::inner_factor(u);
            return rt * detail::up_flip(u * rt);
        }
        default: domain_fail("closed-form adjugate exists for n <= 5 only");
    }
}

template <class K>
K determinant_closed_form(const Multivector<K>& u) {
    detail::require_nondegenerate(u, "determinant");
    if (u.signature().n() > kClosedFormMaxDimension) domain_fail("closed-form determinant exists for n <= 5 only");
    auto prod = u * adjugate_closed_form(u);
    if constexpr (Field<K>::exact) {
        if (!prod.is_scalar()) internal_fail("closed-form determinant product is not a scalar");
    }
    return prod.scalar_part();
}

template <class K>
K determinant_via_rep(const Multivector<K>& u, double tol = 1e-12) {
    detail::require_nondegenerate(u, "determinant");
    auto d = rep_determinant(u, tol);
    if constexpr (Field<K>::complex) {
        return d;
    } else if constexpr (Field<K>::exact) {
        return Field<K>::from_complex(d);
    } else {
        return Field<K>::from_complex(d, 1e-6 * std::max(1.0, std::abs(d)));
    }
}

// Closed form for n <= 5 (cross-checked against the representation in exact mode), representation otherwise.
template <class K>
K determinant(const Multivector<K>& u) {
    detail::require_nondegenerate(u, "determinant");
    if (u.signature().n() <= kClosedFormMaxDimension) {
        K d = determinant_closed_form(u);
        if constexpr (Field<K>::exact) {
            if (!(determinant_via_rep(u) == d)) internal_fail("determinant paths disagree");
        }
        return d;
    }
    return determinant_via_rep(u);
}

// Left-multiplication matrix of U acting on coefficient vectors.
template <class K>
Matrix<K> left_multiplication_matrix(const Multivector<K>& u) {
    const Signature& sig = u.signature();
    const std::size_t N = sig.blade_count();
    Matrix<K> m(N, N);
    for (Blade b = 0; b < N; ++b) {
        auto col = u * Multivector<K>::blade(sig, b);
        for (const auto& t : col.terms()) m(t.blade, b) = t.coeff;
    }
    return m;
}

// Solves U X = e; nullopt when U is singular.
template <class K>
std::optional<Multivector<K>> inverse_by_solve(const Multivector<K>& u, double tol = 1e-12) {
    const Signature& sig = u.signature();
    std::vector<K> rhs(sig.blade_count(), Field<K>::zero());
    rhs[0] = Field<K>::one();
    auto sol = solve(left_multiplication_matrix(u), rhs, tol);
    if (!sol.consistent || sol.nullity != 0) return std::nullopt;
    return Multivector<K>::from_dense(sig, sol.x);
}

template <class K>
bool is_singular_value(const K& d, double tol) {
    if constexpr (Field<K>::exact)
        return Field<K>::is_zero(d);
    else
        return Field<K>::magnitude(d) <= tol;
}

template <class K>
Multivector<K> inverse(const Multivector<K>& u, double tol = 1e-12) {
    detail::require_nondegenerate(u, "inverse");
    const Signature& sig = u.signature();
    if (sig.n() <= kClosedFormMaxDimension) {
        auto adj = adjugate_closed_form(u);
        auto prod = u * adj;
        K d = prod.scalar_part();
        if (is_singular_value(d, tol)) domain_fail("element is singular (Det U = 0)");
        K inv = Field<K>::one();
        inv /= d;
        return inv * adj;
    }
    auto x = inverse_by_solve(u, tol);
    if (!x) domain_fail("element is singular (U X = e has no solution)");
    return *x;
}

}  // namespace clifford
