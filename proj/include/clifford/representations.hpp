#pragma once

#include <memory>
#include <vector>

#include "clifford/conjugations.hpp"
#include "clifford/linalg.hpp"
#include "clifford/multivector.hpp"

namespace clifford {

inline constexpr int kRepMaxDimension = 8;

// Hermitian primitive idempotent t = 1/2(e + i^a e_1) prod_k 1/2(e + i^{b_k} e_{2k} e_{2k+1}).
template <class CK>
Multivector<CK> primitive_idempotent(const Signature& sig) {
    static_assert(Field<CK>::complex, "idempotent lives in the complexified algebra");
    using M = Multivector<CK>;
    if (sig.degenerate()) domain_fail("primitive idempotent requires a nondegenerate signature");
    const int n = sig.n();
    M t = M::identity(sig);
    if (n == 0) return t;
    const CK half = Field<CK>::from_rational(Rational(1, 2));
    const CK i = Field<CK>::i();
    const M e = M::identity(sig);
    {
        CK c = sig.p == 0 ? i : Field<CK>::one();
        t = half * (e + c * M::generator(sig, 1));
    }
    for (int k = 1; k <= n / 2 - 1; ++k) {
        CK c = (2 * k == sig.p) ? Field<CK>::one() : i;
        t = t * (half * (e + c * (M::generator(sig, 2 * k) * M::generator(sig, 2 * k + 1))));
    }
    if (!same_value(t * t, t, 1e-12) || !same_value(hermitian_conjugate(t), t, 1e-12))
        internal_fail("constructed idempotent is not a hermitian idempotent for " + sig.to_string());
    return t;
}

// Central projector 1/2(e + s*zeta) with zeta the pseudoscalar scaled so that zeta^2 = e.
template <class CK>
Multivector<CK> central_projector(const Signature& sig, int s) {
    using M = Multivector<CK>;
    const CK half = Field<CK>::from_rational(Rational(1, 2));
    CK scale = pseudoscalar_square(sig) > 0 ? Field<CK>::one() : Field<CK>::i();
    M zeta = M::blade(sig, sig.pseudoscalar(), scale);
    return half * (M::identity(sig) + Field<CK>::from_int(s) * zeta);
}

namespace detail {

inline std::optional<CRational> unit_scale(const Rational& norm2) {
    Rational inv = 1 / norm2;
    if (auto s = rational_sqrt(inv)) return CRational(*s);
    Rational half = inv / 2;
    if (auto s = rational_sqrt(half)) return CRational(*s, *s);
    return std::nullopt;
}

}  // namespace detail

// Orthonormal basis of the left ideal spanned by e_A t, scanned in blade order.
template <class CK>
std::vector<Multivector<CK>> ideal_basis(const Multivector<CK>& t, double tol = 1e-12) {
    static_assert(Field<CK>::complex, "ideal basis lives in the complexified algebra");
    using M = Multivector<CK>;
    const Signature& sig = t.signature();
    std::vector<M> basis;
    for (Blade a = 0; a < sig.blade_count(); ++a) {
        M v = M::blade(sig, a) * t;
        for (const auto& b : basis) v -= herm_scalar_product(b, v) * b;
        if (is_zero_value(v, tol)) continue;
        if constexpr (Field<CK>::exact) {
            auto s = detail::unit_scale(norm_sq(v));
            if (!s) domain_fail("ideal basis vector cannot be normalised over Q(i)");
            v = *s * v;
        } else {
            v = CK(1.0 / std::sqrt(norm_sq(v))) * v;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Faithful complex matrix representation built on an ideal basis.
struct MatrixRep {
    Signature sig;
    std::size_t dim = 0;
    std::vector<MvCQ> idempotents;                  // one for even n, two for odd n
    std::vector<MvCQ> basis;                        // orthonormal ideal basis
    std::vector<Matrix<CRational>> blade_images;    // indexed by blade mask
    std::vector<Matrix<Complex>> blade_images_f;

    const Matrix<CRational>& generator(int a) const { return blade_images.at(generator_bit(a)); }
    // Block sizes along the diagonal (two equal blocks for odd n).
    std::vector<std::size_t> blocks;
};

MatrixRep build_matrix_rep(const Signature& sig);

// Cached per signature; safe to share between threads.
std::shared_ptr<const MatrixRep> matrix_rep(const Signature& sig);

template <class K>
Matrix<complex_of<K>> apply_rep(const MatrixRep& rep, const Multivector<K>& u) {
    using CK = complex_of<K>;
    if (u.signature() != rep.sig) domain_fail("element and representation belong to different algebras");
    Matrix<CK> out(rep.dim, rep.dim);
    for (const auto& t : u.terms()) {
        CK c = convert_scalar<CK>(t.coeff);
        if constexpr (Field<CK>::exact)
            out = out + c * rep.blade_images[t.blade];
        else
            out = out + c * rep.blade_images_f[t.blade];
    }
    return out;
}

template <class K>
Matrix<complex_of<K>> apply_rep(const Multivector<K>& u) {
    return apply_rep(*matrix_rep(u.signature()), u);
}

// Inverse of the representation map on its image; coefficients via traces.
template <class CK>
Multivector<CK> rep_preimage(const MatrixRep& rep, const Matrix<CK>& m) {
    static_assert(Field<CK>::complex, "matrix entries are complex");
    const Signature& sig = rep.sig;
    std::vector<CK> coeffs(sig.blade_count(), Field<CK>::zero());
    const CK inv_dim = Field<CK>::from_rational(Rational(1, static_cast<long>(rep.dim)));
    CK tmp = Field<CK>::zero();
    for (Blade a = 0; a < sig.blade_count(); ++a) {
        const auto& img = [&]() -> const auto& {
            if constexpr (Field<CK>::exact)
                return rep.blade_images[a];
            else
                return rep.blade_images_f[a];
        }();
        CK s = Field<CK>::zero();
        for (std::size_t i = 0; i < rep.dim; ++i)
            for (std::size_t j = 0; j < rep.dim; ++j) {
                tmp = img(i, j) * m(j, i);
                s += tmp;
            }
        s *= inv_dim;
        if (blade_square(sig, a) < 0) s = CK(-s);
        coeffs[a] = s;
    }
    return Multivector<CK>::from_dense(sig, coeffs);
}

// Tr(U) recovered from the matrix trace, 2^{-[(n+1)/2]} tr(gamma(U)).
template <class K>
complex_of<K> trace_via_rep(const Multivector<K>& u) {
    auto rep = matrix_rep(u.signature());
    auto m = apply_rep(*rep, u);
    complex_of<K> tr = m.trace();
    tr *= Field<complex_of<K>>::from_rational(Rational(1, static_cast<long>(rep->dim)));
    return tr;
}

// Determinant of the faithful representation; for odd n the product over both blocks.
template <class K>
complex_of<K> rep_determinant(const Multivector<K>& u, double tol = 1e-12) {
    auto m = apply_rep(*matrix_rep(u.signature()), u);
    return determinant(m, tol);
}

}  // namespace clifford
