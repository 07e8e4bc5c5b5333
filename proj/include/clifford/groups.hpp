#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "clifford/classification.hpp"
#include "clifford/conjugations.hpp"
#include "clifford/pauli.hpp"

namespace clifford {

// P with column a holding the coordinates of the image of e_a: image(e_a) = sum_b P(b,a) e_b.
template <class K>
struct OrthoMatrix {
    Signature sig;
    Matrix<K> P;
};

template <class K>
Matrix<K> eta_matrix(const Signature& sig) {
    Matrix<K> m(sig.n(), sig.n());
    for (int a = 1; a <= sig.n(); ++a) m(a - 1, a - 1) = Field<K>::from_int(sig.eta(a));
    return m;
}

// P^T eta P = eta.
template <class K>
bool is_orthogonal(const OrthoMatrix<K>& m, double tol = 1e-9) {
    const std::size_t n = std::size_t(m.sig.n());
    if (m.P.rows() != n || m.P.cols() != n) return false;
    auto eta = eta_matrix<K>(m.sig);
    auto lhs = m.P.transpose() * eta * m.P;
    if constexpr (Field<K>::exact)
        return lhs == eta;
    else
        return matrix_approx_equal(lhs, eta, tol);
}

// Determinant of the rows/columns first..last (1-based, inclusive); 1 for an empty range.
template <class K>
K principal_minor(const Matrix<K>& p, int first, int last) {
    if (last < first) return Field<K>::one();
    const std::size_t k = std::size_t(last - first + 1);
    Matrix<K> sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = p(first - 1 + i, first - 1 + j);
    return determinant(sub);
}

template <class K>
K upper_minor(const OrthoMatrix<K>& m) {
    return principal_minor(m.P, 1, m.sig.p);
}

template <class K>
K lower_minor(const OrthoMatrix<K>& m) {
    return principal_minor(m.P, m.sig.p + 1, m.sig.n());
}

namespace detail {

template <class K>
void require_orthogonal_signature(const Signature& sig, const char* what) {
    if (sig.degenerate()) domain_fail(std::string(what) + " requires r = 0");
}

// Columns of P from x -> hat(T) or T, applied to each generator.
template <class K, class Act>
OrthoMatrix<K> vector_action_matrix(const Multivector<K>& t, Act act, double tol) {
    const Signature& sig = t.signature();
    const int n = sig.n();
    OrthoMatrix<K> out{sig, Matrix<K>(n, n)};
    for (int a = 1; a <= n; ++a) {
        Multivector<K> img = act(Multivector<K>::generator(sig, a));
        if (!is_zero_value(img - grade_part(img, 1), tol))
            domain_fail("not in the Lipschitz group: the image of e_" + std::to_string(a) + " leaves grade 1");
        for (int b = 1; b <= n; ++b) out.P(b - 1, a - 1) = img.coeff(generator_bit(b));
    }
    return out;
}

template <class K>
Multivector<K> checked_inverse(const Multivector<K>& t, double tol) {
    if (is_zero_value(t, tol) || is_singular_value(determinant(t), tol)) domain_fail("element is not invertible");
    return inverse(t, tol * 1e-3);
}

}  // namespace detail

// x -> hat(T) x T^{-1} on the generators.
template <class K>
OrthoMatrix<K> twisted_adjoint_matrix(const Multivector<K>& t, double tol = 1e-9) {
    detail::require_orthogonal_signature<K>(t.signature(), "twisted adjoint");
    const auto tinv = detail::checked_inverse(t, tol);
    const auto th = grade_involution(t);
    auto m = detail::vector_action_matrix(t, [&](const Multivector<K>& x) { return th * x * tinv; }, tol);
    if constexpr (Field<K>::exact)
        if (!is_orthogonal(m)) internal_fail("twisted adjoint produced a non-orthogonal matrix");
    return m;
}

// x -> T x T^{-1}; T must be even, where it agrees with the twisted version.
template <class K>
OrthoMatrix<K> adjoint_matrix(const Multivector<K>& t, double tol = 1e-9) {
    detail::require_orthogonal_signature<K>(t.signature(), "adjoint");
    if (!is_zero_value(odd_part(t), tol)) domain_fail("adjoint matrix needs an even element");
    const auto tinv = detail::checked_inverse(t, tol);
    return detail::vector_action_matrix(t, [&](const Multivector<K>& x) { return t * x * tinv; }, tol);
}

// ---- group membership ------------------------------------------------------

enum class GroupKind { Pin, Spin, PinPlus, PinMinus, SpinPlus, Lipschitz, CliffordGroup, Unitary, LieRow };

struct GroupId {
    GroupKind kind = GroupKind::Pin;
    int row = 0;  // 1..16 for LieRow
    std::string name;
};

// Pin, Spin, Pin+, Pin-, Spin+, Lipschitz, Clifford-group, UCl, or a Lie-group row by name ("G23i01") or "row:<k>".
GroupId parse_group_id(const std::string& s);

std::vector<std::string> group_id_names();

struct Membership {
    bool member = false;
    std::string reason;  // empty when member
};

namespace detail {

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double d) { return d; }

template <class K>
bool real_coefficients(const Multivector<K>& u, double tol) {
    if constexpr (!Field<K>::complex) {
        return true;
    } else {
        for (const auto& t : u.terms())
            if (std::abs(to_double(Field<K>::im(t.coeff))) > tol) return false;
        return true;
    }
}

// Even part real, odd part purely imaginary.
template <class K>
bool even_real_odd_imaginary(const Multivector<K>& u, double tol) {
    for (const auto& t : u.terms()) {
        const bool odd = grade_of(t.blade) % 2;
        double off = odd ? std::abs(to_double(Field<K>::re(t.coeff))) : std::abs(to_double(Field<K>::im(t.coeff)));
        if (off > tol) return false;
    }
    return true;
}

template <class K>
bool is_identity_value(const Multivector<K>& u, int sign, double tol) {
    return same_value(u, Field<K>::from_int(sign) * Multivector<K>::identity(u.signature()), tol);
}

}  // namespace detail

// Conditions are checked in order: subspace/parity, invertibility, vector preservation, norm.
template <class K>
Membership group_membership(const Multivector<K>& u, const GroupId& g, double tol = 1e-9) {
    using M = Multivector<K>;
    const Signature& sig = u.signature();
    if (sig.degenerate()) domain_fail("group membership requires r = 0");

    const bool even = is_zero_value(odd_part(u), tol);
    const bool odd = is_zero_value(even_part(u), tol);
    const bool real = detail::real_coefficients(u, tol);
    auto fail = [](const std::string& why) { return Membership{false, why}; };

    switch (g.kind) {
        case GroupKind::Pin:
        case GroupKind::PinPlus:
        case GroupKind::PinMinus:
        case GroupKind::Lipschitz:
            if (!real) return fail("coefficients are not real");
            if (!even && !odd) return fail("parity fails: element is neither even nor odd");
            break;
        case GroupKind::Spin:
        case GroupKind::SpinPlus:
            if (!real) return fail("coefficients are not real");
            if (!even) return fail("parity fails: element is not even");
            break;
        case GroupKind::CliffordGroup:
            if (!real) return fail("coefficients are not real");
            break;
        case GroupKind::Unitary:
            break;
        case GroupKind::LieRow: {
            const int r = g.row;
            const bool need_real = r == 2 || r == 3 || r == 14 || r == 15 || r == 16;
            const bool need_even = r == 3 || r == 4 || r == 8 || r == 11 || r == 16;
            const bool mixed = r == 5 || r == 12 || r == 13;
            if (need_real && !real) return fail("coefficients are not real");
            if (need_even && !even) return fail("parity fails: element is not even");
            if (mixed && !detail::even_real_odd_imaginary(u, tol))
                return fail("parity fails: even part must be real and odd part imaginary");
            break;
        }
    }

    if (is_zero_value(u, tol) || is_singular_value(determinant(u), tol)) return fail("not invertible");

    const bool lipschitz_like = g.kind == GroupKind::Pin || g.kind == GroupKind::PinPlus ||
                                g.kind == GroupKind::PinMinus || g.kind == GroupKind::Spin ||
                                g.kind == GroupKind::SpinPlus || g.kind == GroupKind::Lipschitz ||
                                g.kind == GroupKind::CliffordGroup;
    if (lipschitz_like) {
        const M uinv = inverse(u, tol * 1e-3);
        for (int a = 1; a <= sig.n(); ++a) {
            M img = u * M::generator(sig, a) * uinv;
            if (!is_zero_value(img - grade_part(img, 1), tol)) return fail("vector preservation fails");
        }
    }

    const M rev = reversion(u);
    const M rev_u = rev * u;
    auto norm_is = [&](const M& x, std::initializer_list<int> signs) {
        for (int s : signs)
            if (detail::is_identity_value(x, s, tol)) return true;
        return false;
    };
    auto needs = [&](bool ok) { return ok ? Membership{true, ""} : fail("norm condition fails"); };
    const int r = g.row;
    switch (g.kind) {
        case GroupKind::Pin:
        case GroupKind::Spin:
            return needs(norm_is(rev_u, {1, -1}));
        case GroupKind::PinPlus:
            return needs(norm_is(grade_involution(rev) * u, {1}));
        case GroupKind::PinMinus:
        case GroupKind::SpinPlus:
            return needs(norm_is(rev_u, {1}));
        case GroupKind::Lipschitz:
        case GroupKind::CliffordGroup:
            return {true, ""};
        case GroupKind::Unitary:
            return needs(norm_is(hermitian_conjugate(u) * u, {1}));
        case GroupKind::LieRow:
            if (r <= 5) return {true, ""};
            if (r == 6 || r == 8 || r == 12) return needs(norm_is(complex_conjugate(rev) * u, {1}));
            if (r == 7 || r == 13) return needs(norm_is(complex_conjugate(grade_involution(rev)) * u, {1}));
            if (r == 9 || r == 11 || r == 14 || r == 16) return needs(norm_is(rev_u, {1}));
            return needs(norm_is(grade_involution(rev) * u, {1}));  // rows 10, 15
    }
    internal_fail("unhandled group kind");
}

template <class K>
Membership group_membership(const Multivector<K>& u, const std::string& group, double tol = 1e-9) {
    return group_membership(u, parse_group_id(group), tol);
}

// ---- components and the norm theorem ----------------------------------------

enum class Component { SOPlus, OPlusPrime, OMinusPrime, SOPrime };

std::string component_name(Component c);       // SO+, O+', O-', SO'
std::string spin_component_name(Component c);  // Spin+, Pin+', Pin-', Spin'

template <class K>
struct ComponentInfo {
    Component tag = Component::SOPlus;
    real_of<K> norm_sq{};  // Tr(T^dagger T)
    K upper{};             // minor over rows/columns 1..p
    K lower{};             // minor over rows/columns p+1..n
    OrthoMatrix<K> matrix;
};

// Signs (upper, lower) relative to ||T||^2 for each component.
template <class K>
K to_field(const real_of<K>& x) {
    if constexpr (Field<K>::exact)
        return Field<K>::from_rational(x);
    else
        return K(x);
}

inline std::pair<int, int> norm_theorem_signs(Component c) {
    switch (c) {
        case Component::SOPlus: return {1, 1};
        case Component::OPlusPrime: return {1, -1};
        case Component::OMinusPrime: return {-1, 1};
        case Component::SOPrime: return {-1, -1};
    }
    return {0, 0};
}

// Tags T in Pin(p,q) by parity and the sign of reversion(T) T, then checks ||T||^2 against the minors of its matrix.
template <class K>
ComponentInfo<K> component_of(const Multivector<K>& t, double tol = 1e-9) {
    auto mem = group_membership(t, GroupId{GroupKind::Pin, 0, "Pin"}, tol);
    if (!mem.member) domain_fail("element is not in Pin" + t.signature().to_string().substr(2) + ": " + mem.reason);
    const bool even = is_zero_value(odd_part(t), tol);
    const int s = detail::is_identity_value(reversion(t) * t, 1, tol) ? 1 : -1;
    ComponentInfo<K> out;
    if (even)
        out.tag = s > 0 ? Component::SOPlus : Component::SOPrime;
    else
        out.tag = s > 0 ? Component::OMinusPrime : Component::OPlusPrime;
    out.matrix = twisted_adjoint_matrix(t, tol);
    out.upper = upper_minor(out.matrix);
    out.lower = lower_minor(out.matrix);
    out.norm_sq = norm_sq(t);
    auto [su, sl] = norm_theorem_signs(out.tag);
    const K nk = to_field<K>(out.norm_sq);
    const K nu = Field<K>::from_int(su) * nk, nl = Field<K>::from_int(sl) * nk;
    auto close = [&](const K& a, const K& b) {
        if constexpr (Field<K>::exact)
            return a == b;
        else
            return Field<K>::magnitude(a - b) <= tol * std::max(1.0, Field<K>::magnitude(b));
    };
    if (!close(out.upper, nu) || !close(out.lower, nl))
        internal_fail("norm theorem check failed for component " + spin_component_name(out.tag));
    return out;
}

// ---- spin lifts -------------------------------------------------------------

// Some T with hat(T) e_a T^{-1} = sum_b P(b,a) e_b, scaled arbitrarily.
template <class K>
Multivector<K> lift_orthogonal_unnormalized(const OrthoMatrix<K>& m, double tol = 1e-9) {
    using M = Multivector<K>;
    const Signature& sig = m.sig;
    detail::require_orthogonal_signature<K>(sig, "spin lift");
    if (sig.n() == 0) return M::identity(sig);
    if (!is_orthogonal(m, tol)) domain_fail("matrix is not in O" + sig.to_string().substr(2));
    const K det = determinant(m.P);
    const bool improper = Field<K>::magnitude(det - Field<K>::one()) > 0.5;
    // odd T turns hat into a sign, so improper matrices are lifted through -P
    std::vector<M> betas, gammas;
    for (int a = 1; a <= sig.n(); ++a) {
        M beta(sig);
        std::vector<std::pair<Blade, K>> pairs;
        for (int b = 1; b <= sig.n(); ++b) pairs.push_back({generator_bit(b), improper ? K(-m.P(b - 1, a - 1)) : m.P(b - 1, a - 1)});
        betas.push_back(M::from_pairs(sig, pairs));
        gammas.push_back(M::generator(sig, a));
    }
    auto res = compute_pauli_T(sig, betas, gammas, tol);
    M t = res.T;
    if (res.case_id > 1) internal_fail("orthogonal columns gave Pauli case " + pauli_case_name(res.case_id));
    // odd n: the Pauli T is even, the central pseudoscalar supplies the odd factor
    if (improper && is_zero_value(odd_part(t), tol)) t = t * pseudoscalar<K>(sig);
    return t;
}

// The lift normalised to reversion(T) T = +-e, first nonzero coefficient positive.
template <class K>
Multivector<K> lift_orthogonal(const OrthoMatrix<K>& m, double tol = 1e-9) {
    using M = Multivector<K>;
    M t = lift_orthogonal_unnormalized(m, tol);
    const M n2 = reversion(t) * t;
    if (!is_zero_value(n2 - grade_part(n2, 0), tol)) internal_fail("reversion(T) T is not a scalar");
    const K lambda = n2.scalar_part();
    if constexpr (Field<K>::complex) {
        if (Field<K>::magnitude(K(Field<K>::im(lambda))) > tol) internal_fail("reversion(T) T is not real");
    }
    const auto lam = Field<K>::re(lambda);
    K scale;
    if constexpr (Field<K>::exact) {
        auto root = rational_sqrt(abs(lam));
        if (!root)
            domain_fail("exact normalisation needs sqrt(" + rational_to_string(abs(lam)) +
                        "), which is irrational; use a float mode");
        scale = Field<K>::from_rational(Rational(1) / *root);
    } else {
        scale = Field<K>::from_int(1) / K(std::sqrt(std::abs(lam)));
    }
    t = scale * t;
    for (const auto& term : t.terms()) {
        if (Field<K>::magnitude(term.coeff) <= tol) continue;
        if (Field<K>::re(term.coeff) < 0) t = -t;
        break;
    }
    if (!matrix_approx_equal(twisted_adjoint_matrix(t, tol).P, m.P, std::max(tol, 1e-12) * 1e3))
        internal_fail("spin lift does not reproduce the orthogonal matrix");
    return t;
}

// Classical-group names: "Spin+" (n <= 6) and the even unit-norm group "G2".
std::string liegroup_class_lookup(const Signature& sig, const std::string& group);

}  // namespace clifford
