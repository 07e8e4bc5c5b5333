#pragma once

#include <functional>
#include <memory>
#include <string>

#include "clifford/linalg.hpp"
#include "clifford/multivector.hpp"
#include "clifford/qsqrt2.hpp"

namespace clifford {

inline constexpr int kSalingarosMaxDimension = 10;

// e_A e_B = m e_B e_A; m depends only on the two masks.
inline int commute_sign(Blade a, Blade b) {
    int k = grade_of(a) * grade_of(b) - grade_of(a & b);
    return k % 2 ? -1 : 1;
}

// m_AB = e_A e_B e_A^{-1} e_B^{-1}, stored row-major as +-1.
struct SignMatrix {
    std::size_t size = 0;
    std::vector<signed char> m;
    int operator()(Blade a, Blade b) const { return m[std::size_t(a) * size + b]; }
};

// Memoised per n; the signs do not see the metric.
std::shared_ptr<const SignMatrix> salingaros_matrix(const Signature& sig);

namespace detail {

inline void require_metric(const Signature& sig, const char* what) {
    if (sig.degenerate()) domain_fail(std::string(what) + " requires a nondegenerate signature");
}

template <class K>
Multivector<K> scaled(const Multivector<K>& u, const Rational& s) {
    return Field<K>::from_rational(s) * u;
}

}  // namespace detail

// e_A^{-1} U e_A by sign flips.
template <class K>
Multivector<K> conj_by_blade(const Multivector<K>& u, Blade a) {
    detail::require_metric(u.signature(), "conjugation by a blade");
    return u.map_terms([&](Blade b, const K& c) { return commute_sign(a, b) > 0 ? c : K(-c); });
}

// Sum of e_A^{-1} U e_A over blades A accepted by `pick`, unnormalised.
template <class K>
Multivector<K> blade_average_sum(const Multivector<K>& u, const std::function<bool(Blade)>& pick) {
    const Signature& sig = u.signature();
    detail::require_metric(sig, "averaging");
    std::vector<long> weight(u.size(), 0);
    for (Blade a = 0; a < sig.blade_count(); ++a) {
        if (!pick(a)) continue;
        for (std::size_t i = 0; i < u.size(); ++i) weight[i] += commute_sign(a, u.terms()[i].blade);
    }
    std::vector<std::pair<Blade, K>> pairs;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (weight[i] != 0) pairs.push_back({u.terms()[i].blade, K(Field<K>::from_int(weight[i]) * u.terms()[i].coeff)});
    return Multivector<K>::from_pairs(sig, pairs);
}

// (1/2^n) sum_A e_A^{-1} U e_A: projection onto the center.
template <class K>
Multivector<K> reynolds_center(const Multivector<K>& u) {
    auto s = blade_average_sum(u, [](Blade) { return true; });
    return detail::scaled(s, Rational(1, mpz_class(1) << u.signature().n()));
}

// Even-length and odd-length sums, scaled by 1/2^{n-1} so that they are projections.
template <class K>
Multivector<K> avg_even(const Multivector<K>& u) {
    const int n = u.signature().n();
    auto s = blade_average_sum(u, [](Blade a) { return grade_of(a) % 2 == 0; });
    if (n == 0) return s;
    return detail::scaled(s, Rational(1, mpz_class(1) << (n - 1)));
}

template <class K>
Multivector<K> avg_odd(const Multivector<K>& u) {
    const int n = u.signature().n();
    auto s = blade_average_sum(u, [](Blade a) { return grade_of(a) % 2 == 1; });
    if (n == 0) return s;
    return detail::scaled(s, Rational(1, mpz_class(1) << (n - 1)));
}

// sum over |A| = m, unnormalised.
template <class K>
Multivector<K> avg_grade_m(const Multivector<K>& u, int m) {
    if (m < 0 || m > u.signature().n()) domain_fail("averaging grade m out of range");
    return blade_average_sum(u, [m](Blade a) { return grade_of(a) == m; });
}

// sum over |A| = j mod 4, unnormalised.
template <class K>
Multivector<K> avg_mod4(const Multivector<K>& u, int j) {
    if (j < 0 || j > 3) domain_fail("residue must be 0..3");
    return blade_average_sum(u, [j](Blade a) { return grade_of(a) % 4 == j; });
}

long binomial(int n, int k);

// Scalar by which sum_{|A|=m} e_A^{-1}(.)e_A acts on grade k.
long grade_m_coefficient(int n, int k, int m);

// Scalar by which the |A| = j mod 4 sum acts on grade k.
QSqrt2 mod4_coefficient(int n, int k, int j);

// Eigenvalue of F_1 on grade k.
inline long f1_eigenvalue(int n, int k) { return (k % 2 ? -1 : 1) * long(n - 2 * k); }

template <class K>
Multivector<K> apply_f1(const Multivector<K>& u) {
    if (u.signature().n() == 0) return Multivector<K>(u.signature());  // empty sum
    return avg_grade_m(u, 1);
}

// Inverse of the Vandermonde matrix a_kl = lambda_l^k for the distinct eigenvalues.
Matrix<Rational> f1_recovery_matrix(int n);

// Grade parts recovered from F_1^l(U): all n+1 grades for even n, the sums <U>_k + <U>_{n-k} for odd n.
template <class K>
std::vector<Multivector<K>> recover_grades_f1(const Multivector<K>& u) {
    const Signature& sig = u.signature();
    detail::require_metric(sig, "grade recovery");
    const Matrix<Rational> b = f1_recovery_matrix(sig.n());
    const std::size_t N = b.rows();
    std::vector<Multivector<K>> powers{u};
    for (std::size_t l = 1; l < N; ++l) powers.push_back(apply_f1(powers.back()));
    std::vector<Multivector<K>> out;
    for (std::size_t k = 0; k < N; ++k) {
        Multivector<K> s(sig);
        for (std::size_t l = 0; l < N; ++l)
            if (sgn(b(k, l)) != 0) s += Field<K>::from_rational(b(k, l)) * powers[l];
        out.push_back(std::move(s));
    }
    return out;
}

template <class K>
struct CommutatorEquation {
    Blade index;
    Multivector<K> rhs;
};

template <class K>
struct CommutatorSolution {
    Multivector<K> x;
    std::size_t nullity = 0;
};

namespace detail {

template <class K>
void append_commutator_rows(Matrix<K>& a, std::vector<K>& b, std::size_t row0, const CommutatorEquation<K>& eq,
                            const K& eps, const Signature& sig) {
    const std::size_t N = sig.blade_count();
    for (Blade x = 0; x < N; ++x) {
        auto left = blade_product(sig, eq.index, x);
        auto right = blade_product(sig, x, eq.index);
        K c = Field<K>::from_int(left.sign);
        K r = Field<K>::from_int(right.sign);
        r *= eps;
        c += r;
        a(row0 + left.blade, x) += c;
    }
    for (Blade k = 0; k < N; ++k) b[row0 + k] = eq.rhs.coeff(k);
}

}  // namespace detail

// Solves e_A X + eps X e_A = Q_A for all listed A; free coordinates are set to zero.
template <class K>
CommutatorSolution<K> solve_commutator_equations(const Signature& sig, const std::vector<CommutatorEquation<K>>& eqs,
                                                 const K& eps, double tol = 1e-10) {
    detail::require_metric(sig, "commutator equations");
    if (eqs.empty()) domain_fail("no commutator equations given");
    if (Field<K>::is_zero(eps, 0)) domain_fail("epsilon must be nonzero");
    for (const auto& eq : eqs) {
        if (eq.rhs.signature() != sig) domain_fail("right-hand side from a different algebra");
        if (eq.index >> sig.n()) domain_fail("multi-index out of range");
    }
    const std::size_t N = sig.blade_count();
    auto system = [&](std::size_t count) {
        Matrix<K> a(count * N, N);
        std::vector<K> b(count * N, Field<K>::zero());
        for (std::size_t i = 0; i < count; ++i) detail::append_commutator_rows(a, b, i * N, eqs[i], eps, sig);
        return solve(a, b, tol);
    };
    auto sol = system(eqs.size());
    if (!sol.consistent) {
        std::size_t bad = 1;
        while (bad < eqs.size() && system(bad).consistent) ++bad;
        const auto& eq = eqs[bad - 1];
        domain_fail("commutator equations are inconsistent: equation " + std::to_string(bad) + " (A = " +
                    blade_name(eq.index, sig.n()) + ") cannot be satisfied together with the previous ones");
    }
    return {Multivector<K>::from_dense(sig, sol.x), sol.nullity};
}

}  // namespace clifford
