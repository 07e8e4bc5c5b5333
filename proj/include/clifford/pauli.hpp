#pragma once

#include <optional>
#include <string>

#include "clifford/generators.hpp"
#include "clifford/metrics.hpp"

namespace clifford {

// case 0: even n; cases 1..6: beta_{1..n} = c gamma_{1..n} with c = e, -e, e_{1..n}, -e_{1..n}, i e_{1..n}, -i e_{1..n}.
template <class K>
struct PauliResult {
    Multivector<K> T;
    int case_id = 0;
    Multivector<K> central;  // c = beta_{1..n} (gamma_{1..n})^{-1}; identity for even n
    std::string candidate;   // the F that produced T, as a word in the gammas
};

inline std::string pauli_case_name(int case_id) {
    static const char* names[] = {"even", "odd-1", "odd-2", "odd-3", "odd-4", "odd-5", "odd-6"};
    if (case_id < 0 || case_id > 6) domain_fail("unknown Pauli case");
    return names[case_id];
}

namespace detail {

template <class K>
Multivector<K> word_inverse(const Signature& sig, const Multivector<K>& word, Blade mask) {
    // (g_{a1}..g_{ak})^{-1} = prod eta_a * reversed word
    int s = reversion_sign(grade_of(mask));
    for (int a : blade_indices(mask)) s *= sig.eta(a);
    return Field<K>::from_int(s) * word;
}

template <class K>
struct PauliWords {
    std::vector<Multivector<K>> beta;       // beta_A for every mask
    std::vector<Multivector<K>> gamma;      // gamma_A
    std::vector<Multivector<K>> gamma_inv;  // gamma_A^{-1}
};

template <class K>
PauliWords<K> pauli_words(const Signature& sig, const std::vector<Multivector<K>>& betas,
                          const std::vector<Multivector<K>>& gammas) {
    PauliWords<K> w;
    // masks ascend, so the word without its highest index is already built
    for (Blade a = 0; a < sig.blade_count(); ++a) {
        if (a == 0) {
            w.beta.push_back(Multivector<K>::identity(sig));
            w.gamma.push_back(Multivector<K>::identity(sig));
        } else {
            const int top = std::bit_width(a);
            const Blade rest = a & ~generator_bit(top);
            w.beta.push_back(w.beta[rest] * betas[top - 1]);
            w.gamma.push_back(w.gamma[rest] * gammas[top - 1]);
        }
        w.gamma_inv.push_back(word_inverse(sig, w.gamma.back(), a));
    }
    return w;
}

template <class K>
Multivector<K> averaged(const Signature& sig, const PauliWords<K>& w, const Multivector<K>& f, bool even_only) {
    Multivector<K> h(sig);
    for (Blade a = 0; a < sig.blade_count(); ++a) {
        if (even_only && grade_of(a) % 2) continue;
        h += w.beta[a] * f * w.gamma_inv[a];
    }
    const int shift = even_only ? sig.n() - 1 : sig.n();
    return Field<K>::from_rational(Rational(1, mpz_class(1) << std::max(shift, 0))) * h;
}

template <class K>
bool invertible(const Multivector<K>& u, double tol) {
    if (is_zero_value(u, tol)) return false;
    return !is_singular_value(determinant(u), tol);
}

// gamma_a = c T^{-1} beta_a T for all a
template <class K>
bool pauli_relation_holds(const Multivector<K>& t, const Multivector<K>& c, const std::vector<Multivector<K>>& betas,
                          const std::vector<Multivector<K>>& gammas, double tol) {
    // compare T gamma_a = c beta_a T to avoid the inverse
    for (std::size_t a = 0; a < betas.size(); ++a)
        if (!same_value(t * gammas[a], c * betas[a] * t, tol)) return false;
    return true;
}

inline std::string word_name(Blade a, int n) {
    if (a == 0) return "1";
    std::string s = "g";
    for (int i : blade_indices(a)) s += (n > 9 ? "{" + std::to_string(i) + "}" : std::to_string(i));
    return s;
}

}  // namespace detail

// Classifies c = beta_{1..n} (gamma_{1..n})^{-1} for odd n; 0 if it is none of the six values.
template <class K>
int odd_pauli_case(const Signature& sig, const Multivector<K>& c, double tol = 1e-9) {
    using M = Multivector<K>;
    const M e = M::identity(sig), top = M::blade(sig, sig.pseudoscalar());
    std::vector<M> values{e, -e, top, -top};
    if constexpr (Field<K>::complex) {
        values.push_back(Field<K>::i() * top);
        values.push_back(-(Field<K>::i() * top));
    }
    for (std::size_t k = 0; k < values.size(); ++k)
        if (same_value(c, values[k], tol)) return int(k) + 1;
    return 0;
}

// T with gamma_a = beta_{1..n}(gamma_{1..n})^{-1} T^{-1} beta_a T (just T^{-1} beta_a T for even n).
template <class K>
PauliResult<K> compute_pauli_T(const Signature& sig, const std::vector<Multivector<K>>& betas,
                               const std::vector<Multivector<K>>& gammas, double tol = 1e-9) {
    using M = Multivector<K>;
    if (sig.degenerate()) domain_fail("Pauli construction requires a nondegenerate signature");
    if (sig.n() == 0) domain_fail("Pauli construction needs at least one generator");
    for (const auto* set : {&betas, &gammas})
        for (const auto& g : *set)
            if (g.signature() != sig) domain_fail("generator from a different algebra");
    if (!verify_generators(sig, betas, tol)) domain_fail("betas do not satisfy the Clifford relations of " + sig.to_string());
    if (!verify_generators(sig, gammas, tol)) domain_fail("gammas do not satisfy the Clifford relations of " + sig.to_string());

    const int n = sig.n();
    const Blade full = sig.pseudoscalar();
    auto w = detail::pauli_words(sig, betas, gammas);
    PauliResult<K> out;

    auto accept = [&](const M& f, const std::string& name, const M& c, bool even_only) {
        M h = detail::averaged(sig, w, f, even_only);
        if (!detail::invertible(h, tol)) return false;
        if (!detail::pauli_relation_holds(h, c, betas, gammas, tol)) return false;
        out.T = std::move(h);
        out.central = c;
        out.candidate = name;
        return true;
    };

    if (n % 2 == 0) {
        out.case_id = 0;
        const M e = M::identity(sig);
        const bool flipped = same_value(w.beta[full], -w.gamma[full], tol);
        const int parity = flipped ? 1 : 0;
        for (Blade a = 0; a < sig.blade_count(); ++a)
            if (grade_of(a) % 2 == parity && accept(w.gamma[a], detail::word_name(a, n), e, false)) return out;
        internal_fail("no candidate F gave an invertible intertwiner");
    }

    M c = w.beta[full] * w.gamma_inv[full];
    out.case_id = odd_pauli_case(sig, c, tol);
    if (out.case_id == 0) internal_fail("beta_{1..n} (gamma_{1..n})^{-1} is outside the six central values");
    std::vector<Blade> evens;
    for (Blade a = 0; a < sig.blade_count(); ++a)
        if (grade_of(a) % 2 == 0) evens.push_back(a);
    for (Blade a : evens)
        if (accept(w.gamma[a], detail::word_name(a, n), c, true)) return out;
    for (std::size_t i = 0; i < evens.size(); ++i)
        for (std::size_t j = i + 1; j < evens.size(); ++j) {
            Blade a = evens[i], b = evens[j];
            if (accept(w.gamma[a] + w.gamma[b], detail::word_name(a, n) + "+" + detail::word_name(b, n), c, true))
                return out;
        }
    internal_fail("no candidate F gave an invertible intertwiner");
}

// H(F) or H_Even(F) for a caller-chosen F, for uniqueness checks.
template <class K>
Multivector<K> pauli_average(const Signature& sig, const std::vector<Multivector<K>>& betas,
                             const std::vector<Multivector<K>>& gammas, const Multivector<K>& f) {
    auto w = detail::pauli_words(sig, betas, gammas);
    return detail::averaged(sig, w, f, sig.n() % 2 == 1);
}

template <class K>
bool pauli_relation_holds(const PauliResult<K>& r, const std::vector<Multivector<K>>& betas,
                          const std::vector<Multivector<K>>& gammas, double tol = 1e-9) {
    return detail::pauli_relation_holds(r.T, r.central, betas, gammas, tol);
}

}  // namespace clifford
