#pragma once

#include <optional>
#include <string>

#include "clifford/pauli.hpp"
#include "clifford/representations.hpp"

namespace clifford {

// ---- chirality and Weyl halves ---------------------------------------------

// e_{1..n} for p - q = 0,1 mod 4, i e_{1..n} otherwise; squares to e.
template <class CK>
Multivector<CK> chirality(const Signature& sig) {
    static_assert(Field<CK>::complex, "chirality lives in the complexified algebra");
    if (sig.degenerate()) domain_fail("chirality requires r = 0");
    const int d = ((sig.p - sig.q) % 4 + 4) % 4;
    CK c = d <= 1 ? Field<CK>::one() : Field<CK>::i();
    return Multivector<CK>::blade(sig, sig.pseudoscalar(), c);
}

enum class Side { Left, Right };

// P_L = 1/2(e - omega), P_R = 1/2(e + omega).
template <class CK>
Multivector<CK> weyl_projector(const Signature& sig, Side side) {
    using M = Multivector<CK>;
    const CK half = Field<CK>::from_rational(Rational(1, 2));
    const M w = chirality<CK>(sig);
    return half * (side == Side::Left ? M::identity(sig) - w : M::identity(sig) + w);
}

template <class CK>
Multivector<CK> weyl_project(const Multivector<CK>& psi, Side side) {
    if (psi.signature().n() % 2) domain_fail("Weyl halves need even n; " + psi.signature().to_string() + " has odd n");
    return weyl_projector<CK>(psi.signature(), side) * psi;
}

// ---- operations through the fixed representation ------------------------------

// beta^{-1}(beta(U)^T)
template <class CK>
Multivector<CK> rep_transpose(const Multivector<CK>& u) {
    const auto rep = matrix_rep(u.signature());
    return rep_preimage(*rep, apply_rep(*rep, u).transpose());
}

// beta^{-1}(conj(beta(U))): matrix complex conjugation, not the coefficient one
template <class CK>
Multivector<CK> rep_conjugate(const Multivector<CK>& u) {
    const auto rep = matrix_rep(u.signature());
    return rep_preimage(*rep, apply_rep(*rep, u).conj());
}

// ---- A, B, C ----------------------------------------------------------------

enum class ConjElement { A, B, C };  // hermitian conjugation, matrix conjugation, transpose

std::string conj_element_name(ConjElement k, int sign);  // "A+", "C-", ...

// Existence per parity of p, q, n and p - q mod 4; sign is +1 or -1.
bool conj_element_exists(const Signature& sig, ConjElement k, int sign);

// Human-readable existence rule for error messages.
std::string conj_element_condition(ConjElement k, int sign);

// Tabulated signs: lambda for C (by n mod 8), epsilon for B (by p - q mod 8); 0 when the element does not exist.
int lambda_table(int n, int sign);
int epsilon_table(int p, int q, int sign);

namespace detail {

template <class CK>
Multivector<CK> apply_conj_op(ConjElement k, const Multivector<CK>& u) {
    switch (k) {
        case ConjElement::A: return hermitian_conjugate(u);
        case ConjElement::B: return rep_conjugate(u);
        case ConjElement::C: return rep_transpose(u);
    }
    internal_fail("unknown conjugation");
}

template <class CK>
void require_exists(const Signature& sig, ConjElement k, int sign) {
    if (sign != 1 && sign != -1) domain_fail("sign must be + or -");
    if (sig.degenerate()) domain_fail("conjugation elements require r = 0");
    if (!conj_element_exists(sig, k, sign))
        domain_fail(conj_element_name(k, sign) + " does not exist for " + sig.to_string() + ": it needs " +
                    conj_element_condition(k, sign));
}

}  // namespace detail

// op(e_a) = sign X^{-1} e_a X for every generator.
template <class CK>
bool conj_relation_holds(const Multivector<CK>& x, ConjElement k, int sign, double tol = 1e-9) {
    const Signature& sig = x.signature();
    const auto xinv = inverse(x);
    for (int a = 1; a <= sig.n(); ++a) {
        const auto e = Multivector<CK>::generator(sig, a);
        if (!same_value(detail::apply_conj_op(k, e), Field<CK>::from_int(sign) * (xinv * e * x), tol)) return false;
    }
    return true;
}

// A_+ and A_- from the blocks e_{1..p} and e_{p+1..n}.
template <class CK>
Multivector<CK> compute_A(const Signature& sig, int sign) {
    detail::require_exists<CK>(sig, ConjElement::A, sign);
    const Blade pos = range_mask(1, sig.p), neg = range_mask(sig.p + 1, sig.n());
    // e_{1..p} gives the + sign for odd p; e_{p+1..n} gives it for even q
    Blade b;
    if (sign > 0)
        b = sig.p % 2 ? pos : neg;
    else
        b = sig.p % 2 == 0 ? pos : neg;
    auto a = Multivector<CK>::blade(sig, b);
    if (!conj_relation_holds(a, ConjElement::A, sign)) internal_fail(conj_element_name(ConjElement::A, sign) + " fails its relation");
    return a;
}

namespace detail {

// B or C through the Pauli construction with betas = sign e_a and gammas = op(e_a).
template <class CK>
Multivector<CK> pauli_conj_element(const Signature& sig, ConjElement k, int sign) {
    using M = Multivector<CK>;
    require_exists<CK>(sig, k, sign);
    if (sig.n() == 0) return M::identity(sig);
    std::vector<M> betas, gammas;
    for (int a = 1; a <= sig.n(); ++a) {
        M e = M::generator(sig, a);
        betas.push_back(Field<CK>::from_int(sign) * e);
        gammas.push_back(apply_conj_op(k, e));
    }
    auto r = compute_pauli_T(sig, betas, gammas);
    if (sig.n() % 2 && r.case_id != 1)
        internal_fail(conj_element_name(k, sign) + " should exist but the Pauli case is " + pauli_case_name(r.case_id));
    if (!conj_relation_holds(r.T, k, sign)) internal_fail(conj_element_name(k, sign) + " fails its relation");
    return r.T;
}

}  // namespace detail

// Scaled arbitrarily (the relation fixes them up to the center).
template <class CK>
Multivector<CK> compute_B(const Signature& sig, int sign) {
    return detail::pauli_conj_element<CK>(sig, ConjElement::B, sign);
}

template <class CK>
Multivector<CK> compute_C(const Signature& sig, int sign) {
    return detail::pauli_conj_element<CK>(sig, ConjElement::C, sign);
}

// s with X^T = s X, or 0.
template <class CK>
int transpose_sign(const Multivector<CK>& x, double tol = 1e-9) {
    const auto xt = rep_transpose(x);
    for (int s : {1, -1})
        if (same_value(xt, Field<CK>::from_int(s) * x, tol)) return s;
    return 0;
}

// s with conj(X) X = s X^dagger X, or 0; the right side is e up to a positive central factor.
template <class CK>
int conj_square_sign(const Multivector<CK>& x, double tol = 1e-9) {
    const auto lhs = rep_conjugate(x) * x;
    const auto gram = hermitian_conjugate(x) * x;
    if (!is_central(gram, tol)) return 0;
    for (int s : {1, -1})
        if (same_value(lhs, Field<CK>::from_int(s) * gram, tol)) return s;
    return 0;
}

// ---- per-signature summary ----------------------------------------------------

struct SpinorSpaceInfo {
    Signature sig;
    MvCQ omega;
    MvCQ idempotent;  // t with beta(t) the first matrix unit; spinors are the left ideal of t
    bool weyl_exists = false;
    std::optional<MvCQ> A_plus, A_minus, B_plus, B_minus, C_plus, C_minus;
    int lambda_plus = 0, lambda_minus = 0;    // from C^T = lambda C
    int epsilon_plus = 0, epsilon_minus = 0;  // from B^T = epsilon B
    long majorana_dim = 0, pseudo_majorana_dim = 0, left_mw_dim = 0, right_mw_dim = 0;
    bool majorana_exists = false, pseudo_majorana_exists = false, majorana_weyl_exists = false;

    const std::optional<MvCQ>& element(ConjElement k, int sign) const;
};

// Cached per signature; n <= 6 for the Pauli-based elements.
std::shared_ptr<const SpinorSpaceInfo> spinor_info(const Signature& sig);

// ---- conjugations of spinors --------------------------------------------------

// psi^dagger A^{-1}
template <class CK>
Multivector<CK> dirac_conjugate(const Multivector<CK>& psi, int sign) {
    return hermitian_conjugate(psi) * inverse(compute_A<CK>(psi.signature(), sign));
}

namespace detail {

template <class CK>
Multivector<CK> info_element(const Signature& sig, ConjElement k, int sign) {
    require_exists<CK>(sig, k, sign);
    const auto& x = spinor_info(sig)->element(k, sign);
    if (!x) internal_fail(conj_element_name(k, sign) + " missing from the cached summary");
    return convert<CK>(*x);
}

}  // namespace detail

// psi^T C^{-1}
template <class CK>
Multivector<CK> majorana_conjugate(const Multivector<CK>& psi, int sign) {
    return rep_transpose(psi) * inverse(detail::info_element<CK>(psi.signature(), ConjElement::C, sign));
}

// B conj(psi)
template <class CK>
Multivector<CK> charge_conjugate(const Multivector<CK>& psi, int sign) {
    return detail::info_element<CK>(psi.signature(), ConjElement::B, sign) * rep_conjugate(psi);
}

enum class MajoranaFlavor { M, PseudoM, LeftMW, RightMW };

// Real dimension of {psi in the ideal : B conj(psi) = +-psi} with B scaled to be unitary; max over the two signs.
long majorana_space_dim(const Signature& sig, MajoranaFlavor flavor);

MajoranaFlavor parse_majorana_flavor(const std::string& s);  // M, psM, LMW, RMW

}  // namespace clifford
