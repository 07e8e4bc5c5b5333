#pragma once

#include <array>

#include "clifford/groups.hpp"
#include "clifford/spinors.hpp"

// Cl(1,3) with e^0..e^3 stored as e_1..e_4.
namespace clifford::dirac {

inline Signature minkowski() { return Signature(1, 3); }

// internal blade for upper labels, e.g. {1,2} -> e_{23}
inline Blade label_blade(std::initializer_list<int> mu) {
    Blade b = 0;
    for (int m : mu) b |= generator_bit(m + 1);
    return b;
}

// E = e^0
template <class K>
Multivector<K> E() {
    return Multivector<K>::blade(minkowski(), label_blade({0}));
}

// I = -e^{12}; I^2 = -e and I commutes with E
template <class K>
Multivector<K> I() {
    return Multivector<K>::blade(minkowski(), label_blade({1, 2}), Field<K>::from_int(-1));
}

// t = 1/4 (e + E)(e - i I)
template <class CK>
Multivector<CK> idempotent() {
    static_assert(Field<CK>::complex);
    const auto e = Multivector<CK>::identity(minkowski());
    const CK quarter = Field<CK>::from_rational(Rational(1, 4));
    return quarter * ((e + E<CK>()) * (e - Field<CK>::i() * I<CK>()));
}

// F_1 = 2e, F_2 = 2e^{13}, F_3 = 2e^{03}, F_4 = 2e^{01}
template <class K>
std::array<Multivector<K>, 4> f_basis() {
    const Signature s = minkowski();
    const K two = Field<K>::from_int(2);
    return {Multivector<K>::blade(s, 0, two), Multivector<K>::blade(s, label_blade({1, 3}), two),
            Multivector<K>::blade(s, label_blade({0, 3}), two), Multivector<K>::blade(s, label_blade({0, 1}), two)};
}

// tau_k = F_k t
template <class CK>
std::array<Multivector<CK>, 4> ideal_basis_tau() {
    auto f = f_basis<CK>();
    const auto t = idempotent<CK>();
    std::array<Multivector<CK>, 4> tau;
    for (int k = 0; k < 4; ++k) tau[k] = f[k] * t;
    return tau;
}

template <class CK>
bool in_ideal(const Multivector<CK>& psi, const Multivector<CK>& t, double tol = 1e-9) {
    return same_value(psi * t, psi, tol);
}

enum class Parity { Even, Odd };

// Real X of the given parity with X t = U, by a linear solve; nondegenerate signatures of any size.
template <class CK>
Multivector<CK> solve_ideal_equation(const Multivector<CK>& u, const Multivector<CK>& t, Parity parity,
                                     double tol = 1e-10) {
    static_assert(Field<CK>::complex);
    using R = real_of<CK>;
    const Signature& sig = u.signature();
    if (t.signature() != sig) domain_fail("element and idempotent belong to different algebras");
    std::vector<Blade> unknowns;
    for (Blade a = 0; a < sig.blade_count(); ++a)
        if (grade_of(a) % 2 == (parity == Parity::Odd ? 1 : 0)) unknowns.push_back(a);
    const std::size_t m = sig.blade_count();
    Matrix<R> sys(2 * m, unknowns.size());
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        const auto col = Multivector<CK>::blade(sig, unknowns[j]) * t;
        for (const auto& term : col.terms()) {
            sys(term.blade, j) = Field<CK>::re(term.coeff);
            sys(m + term.blade, j) = Field<CK>::im(term.coeff);
        }
    }
    std::vector<R> rhs(2 * m, Field<R>::zero());
    for (const auto& term : u.terms()) {
        rhs[term.blade] = Field<CK>::re(term.coeff);
        rhs[m + term.blade] = Field<CK>::im(term.coeff);
    }
    auto sol = solve(sys, rhs, tol);
    if (!sol.consistent) domain_fail("X t = U has no solution of the requested parity (is U in the ideal of t?)");
    if (sol.nullity > 0)
        domain_fail("X t = U has no unique solution: nullity " + std::to_string(sol.nullity));
    std::vector<std::pair<Blade, CK>> pairs;
    for (std::size_t j = 0; j < unknowns.size(); ++j) pairs.emplace_back(unknowns[j], convert_scalar<CK>(sol.x[j]));
    return Multivector<CK>::from_pairs(sig, pairs);
}

// The explicit solution X = F_k (alpha^k + I beta^k), times E for the odd one; U must lie in the ideal of t.
template <class CK>
Multivector<CK> solve_by_f_basis(const Multivector<CK>& u, Parity parity) {
    if (u.signature() != minkowski()) domain_fail("the F basis lives in Cl(1,3)");
    const auto tau = ideal_basis_tau<CK>();
    const auto f = f_basis<CK>();
    const auto id = Multivector<CK>::identity(minkowski());
    Multivector<CK> x(minkowski());
    for (int k = 0; k < 4; ++k) {
        const CK z = herm_scalar_product(tau[k], u);  // alpha^k + i beta^k
        const auto coeff = convert_scalar<CK>(Field<CK>::re(z)) * id + convert_scalar<CK>(Field<CK>::im(z)) * I<CK>();
        x += parity == Parity::Even ? f[k] * coeff : f[k] * E<CK>() * coeff;
    }
    return x;
}

// ---- plane waves, derivatives act as -i p_mu ----------------------------------

// p^mu contravariant, (energy, px, py, pz)
template <class R>
using FourVector = std::array<R, 4>;

template <class R>
FourVector<R> lower(const FourVector<R>& p) {
    return {p[0], R(-p[1]), R(-p[2]), R(-p[3])};
}

// e^mu a_mu for a covariant a
template <class CK>
Multivector<CK> slash_lower(const FourVector<real_of<CK>>& a) {
    Multivector<CK> out(minkowski());
    for (int mu = 0; mu < 4; ++mu)
        out += Multivector<CK>::blade(minkowski(), generator_bit(mu + 1), convert_scalar<CK>(a[mu]));
    return out;
}

// e^mu p_mu for a contravariant p
template <class CK>
Multivector<CK> slash(const FourVector<real_of<CK>>& p) {
    return slash_lower<CK>(lower(p));
}

template <class R>
R minkowski_square(const FourVector<R>& p) {
    return R(p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3]);
}

template <class R>
bool on_shell(const FourVector<R>& p, const R& m, double tol = 1e-9) {
    const R d = R(minkowski_square(p) - m * m);
    return Field<R>::is_zero(d, tol);
}

// (pslash + m) tau_k for the first k giving a nonzero element.
template <class CK>
Multivector<CK> plane_wave_dirac(const FourVector<real_of<CK>>& p, const real_of<CK>& m, bool require_shell = true,
                                 double tol = 1e-9) {
    if (require_shell && !on_shell(p, m, tol)) domain_fail("momentum is off the mass shell p.p = m^2");
    const auto ps = slash<CK>(p) + convert_scalar<CK>(m) * Multivector<CK>::identity(minkowski());
    for (const auto& tau : ideal_basis_tau<CK>()) {
        auto psi = ps * tau;
        if (!is_zero_value(psi, tol)) return psi;
    }
    domain_fail("(pslash + m) annihilates the whole ideal");
}

// (pslash - m) psi0
template <class CK>
Multivector<CK> dirac_operator(const Multivector<CK>& psi0, const FourVector<real_of<CK>>& p, const real_of<CK>& m) {
    return slash<CK>(p) * psi0 - convert_scalar<CK>(m) * psi0;
}

// pslash Psi0 I E - m Psi0 I
template <class CK>
Multivector<CK> dh_operator(const Multivector<CK>& big_psi0, const FourVector<real_of<CK>>& p, const real_of<CK>& m) {
    return slash<CK>(p) * big_psi0 * I<CK>() * E<CK>() - convert_scalar<CK>(m) * (big_psi0 * I<CK>());
}

template <class CK>
real_of<CK> dirac_residual(const Multivector<CK>& psi0, const FourVector<real_of<CK>>& p, const real_of<CK>& m) {
    return norm_sq(dirac_operator(psi0, p, m));
}

template <class CK>
real_of<CK> dh_residual(const Multivector<CK>& big_psi0, const FourVector<real_of<CK>>& p, const real_of<CK>& m) {
    return norm_sq(dh_operator(big_psi0, p, m));
}

// The even representative of an ideal spinor.
template <class CK>
Multivector<CK> hestenes_form(const Multivector<CK>& psi0) {
    return solve_ideal_equation(psi0, idempotent<CK>(), Parity::Even);
}

// Gauge shift by lambda(x) = k_mu x^mu: psi -> psi e^{i lambda} turns momentum p_mu into p_mu - k_mu,
// and the potential becomes a_mu = k_mu. Both operators must come out unchanged.
template <class CK>
bool gauge_check(const Multivector<CK>& psi0, const FourVector<real_of<CK>>& p, const real_of<CK>& m,
                 const FourVector<real_of<CK>>& k_lower, double tol = 1e-9) {
    using R = real_of<CK>;
    const auto pl = lower(p);
    FourVector<R> ql;
    for (int mu = 0; mu < 4; ++mu) ql[mu] = R(pl[mu] - k_lower[mu]);
    const auto mm = convert_scalar<CK>(m);
    const CK i = Field<CK>::i();
    // e^mu(d_mu psi - i a_mu psi) + i m psi with d_mu -> -i q_mu
    const auto shifted = (-i) * (slash_lower<CK>(ql) * psi0) - i * (slash_lower<CK>(k_lower) * psi0) + i * mm * psi0;
    const auto original = (-i) * dirac_operator(psi0, p, m);
    if (!same_value(shifted, original, tol)) return false;
    // Dirac-Hestenes: e^mu(d_mu Psi - a_mu Psi I)E + m Psi I with d_mu Psi -> -Psi I q_mu
    const auto big = hestenes_form(psi0);
    const auto bi = big * I<CK>();
    const auto dh_shifted = -(slash_lower<CK>(ql) * bi * E<CK>()) - slash_lower<CK>(k_lower) * bi * E<CK>() + mm * bi;
    return same_value(dh_shifted, -dh_operator(big, p, m), tol) && same_value(dh_shifted * idempotent<CK>(), shifted, tol);
}

// (pslash - m) psi0 = 0 implies psi0^{D+} (pslash - m) = 0
template <class CK>
bool current_conservation_holds(const Multivector<CK>& psi0, const FourVector<real_of<CK>>& p, const real_of<CK>& m,
                                double tol = 1e-9) {
    if (!is_zero_value(dirac_operator(psi0, p, m), tol)) return false;
    const auto bar = dirac_conjugate(psi0, 1);
    return is_zero_value(bar * slash<CK>(p) - convert_scalar<CK>(m) * bar, tol);
}

// Lifts P in SO+(1,3) with entries p^mu_nu (row mu) to S and checks S^{-1} e^mu S = p^mu_nu e^nu.
template <class K>
Multivector<K> lorentz_spinor(const Matrix<K>& p, double tol = 1e-9) {
    static_assert(!Field<K>::complex, "Lorentz matrices are real");
    if (p.rows() != 4 || p.cols() != 4) domain_fail("Lorentz matrix must be 4x4");
    OrthoMatrix<K> pt{minkowski(), p.transpose()};
    if (!is_orthogonal(pt, tol)) domain_fail("matrix is not in O(1,3)");
    if (!Field<K>::is_zero(K(determinant(p, tol) - Field<K>::one()), tol)) domain_fail("matrix is not proper (det != 1)");
    if (!(Field<K>::re(p(0, 0)) > 0)) domain_fail("matrix is not orthochronous");
    // T e_mu T^{-1} = p^mu_nu e_nu, so T lifts P^T and S = T^{-1}
    Multivector<K> t;
    try {
        t = lift_orthogonal(pt, tol);
    } catch (const DomainError&) {
        // no rational normalisation; the relation is scale free
        t = lift_orthogonal_unnormalized(pt, tol);
    }
    return inverse(t);
}

template <class K>
bool relativistic_check(const Matrix<K>& p, double tol = 1e-9) {
    const auto s = lorentz_spinor(p, tol);
    const auto sinv = inverse(s);
    for (int mu = 0; mu < 4; ++mu) {
        Multivector<K> rhs(minkowski());
        for (int nu = 0; nu < 4; ++nu) rhs += Multivector<K>::blade(minkowski(), generator_bit(nu + 1), p(mu, nu));
        const auto e = Multivector<K>::generator(minkowski(), mu + 1);
        if (!same_value(sinv * e * s, rhs, tol)) return false;
    }
    return true;
}

}  // namespace clifford::dirac
