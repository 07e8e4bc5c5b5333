#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "clifford/kernels.hpp"
#include "clifford/scalar.hpp"
#include "clifford/signature.hpp"

namespace clifford {

template <class K>
struct Term {
    Blade blade;
    K coeff;
};

template <class K>
class Multivector;

namespace detail {

// Collects blade contributions; dense storage for small algebras.
template <class K>
class Accumulator {
public:
    explicit Accumulator(const Signature& sig) : sig_(sig) {
        dense_ = sig.n() <= 12;
        if (dense_) {
            vals_.assign(sig.blade_count(), Field<K>::zero());
            used_.assign(sig.blade_count(), 0);
        }
    }

    void add(Blade b, const K& c) {
        if (dense_) {
            if (!used_[b]) {
                used_[b] = 1;
                touched_.push_back(b);
            }
            vals_[b] += c;
        } else {
            auto it = sparse_.find(b);
            if (it == sparse_.end())
                sparse_.emplace(b, c);
            else
                it->second += c;
        }
    }

    void sub(Blade b, const K& c) {
        if (dense_) {
            if (!used_[b]) {
                used_[b] = 1;
                touched_.push_back(b);
            }
            vals_[b] -= c;
        } else {
            auto it = sparse_.find(b);
            if (it == sparse_.end())
                sparse_.emplace(b, K(-c));
            else
                it->second -= c;
        }
    }

    Multivector<K> finish();

private:
    Signature sig_;
    bool dense_ = true;
    std::vector<K> vals_;
    std::vector<char> used_;
    std::vector<Blade> touched_;
    std::map<Blade, K> sparse_;
};

}  // namespace detail

// Sparse element of Cl(p,q,r) with coefficients in K; zero coefficients are never stored.
template <class K>
class Multivector {
public:
    using scalar_type = K;
    using F = Field<K>;

    Multivector() = default;
    explicit Multivector(const Signature& sig) : sig_(sig) {}

    static Multivector scalar(const Signature& sig, const K& c) { return blade(sig, 0, c); }

    static Multivector identity(const Signature& sig) { return scalar(sig, F::one()); }

    static Multivector blade(const Signature& sig, Blade b, const K& c = F::one()) {
        if (b >> sig.n()) domain_fail("blade index out of range for " + sig.to_string());
        Multivector m(sig);
        if (!F::is_zero(c)) m.terms_.push_back({b, c});
        return m;
    }

    static Multivector generator(const Signature& sig, int a) {
        if (a < 1 || a > sig.n())
            domain_fail("generator index " + std::to_string(a) + " out of range for " + sig.to_string());
        return blade(sig, generator_bit(a));
    }

    // Unsorted (blade, coeff) pairs; duplicates are summed.
    static Multivector from_pairs(const Signature& sig, const std::vector<std::pair<Blade, K>>& pairs) {
        detail::Accumulator<K> acc(sig);
        for (const auto& [b, c] : pairs) {
            if (b >> sig.n()) domain_fail("blade index out of range for " + sig.to_string());
            acc.add(b, c);
        }
        return acc.finish();
    }

    static Multivector from_dense(const Signature& sig, const std::vector<K>& v) {
        Multivector m(sig);
        for (std::size_t b = 0; b < v.size(); ++b)
            if (!F::is_zero(v[b])) m.terms_.push_back({Blade(b), v[b]});
        return m;
    }

    std::vector<K> to_dense() const {
        std::vector<K> v(sig_.blade_count(), F::zero());
        for (const auto& t : terms_) v[t.blade] = t.coeff;
        return v;
    }

    const Signature& signature() const { return sig_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    K coeff(Blade b) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                                   [](const Term<K>& t, Blade x) { return t.blade < x; });
        if (it != terms_.end() && it->blade == b) return it->coeff;
        return F::zero();
    }

    K scalar_part() const { return coeff(0); }

    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].blade == 0); }

    // Applies f(blade, coeff) -> coeff to every term.
    template <class Fn>
    Multivector map_terms(Fn f) const {
        Multivector m(sig_);
        m.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            K c = f(t.blade, t.coeff);
            if (!F::is_zero(c)) m.terms_.push_back({t.blade, std::move(c)});
        }
        return m;
    }

    template <class Pred>
    Multivector filter(Pred keep) const {
        Multivector m(sig_);
        for (const auto& t : terms_)
            if (keep(t.blade)) m.terms_.push_back(t);
        return m;
    }

    Multivector& operator+=(const Multivector& o) { return *this = merge(*this, o, false); }
    Multivector& operator-=(const Multivector& o) { return *this = merge(*this, o, true); }
    Multivector& operator*=(const K& c) {
        *this = map_terms([&](Blade, const K& x) { return K(x * c); });
        return *this;
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) { return merge(a, b, false); }
    friend Multivector operator-(const Multivector& a, const Multivector& b) { return merge(a, b, true); }
    friend Multivector operator-(const Multivector& a) {
        return a.map_terms([](Blade, const K& x) { return K(-x); });
    }
    friend Multivector operator*(const Multivector& a, const K& c) {
        return a.map_terms([&](Blade, const K& x) { return K(x * c); });
    }
    friend Multivector operator*(const K& c, const Multivector& a) {
        return a.map_terms([&](Blade, const K& x) { return K(c * x); });
    }
    friend Multivector operator*(const Multivector& a, const Multivector& b) { return product(a, b); }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        if (a.sig_ != b.sig_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].blade != b.terms_[i].blade || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    // Used by Accumulator; terms must be sorted and nonzero.
    static Multivector from_sorted_terms(const Signature& sig, std::vector<Term<K>> terms) {
        Multivector m(sig);
        m.terms_ = std::move(terms);
        return m;
    }

private:
    static void same_algebra(const Multivector& a, const Multivector& b) {
        if (a.sig_ != b.sig_)
            domain_fail("operands live in different algebras: " + a.sig_.to_string() + " vs " + b.sig_.to_string());
    }

    static Multivector merge(const Multivector& a, const Multivector& b, bool subtract) {
        same_algebra(a, b);
        Multivector m(a.sig_);
        m.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].blade < b.terms_[j].blade)) {
                m.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].blade < a.terms_[i].blade) {
                m.terms_.push_back(subtract ? Term<K>{b.terms_[j].blade, K(-b.terms_[j].coeff)} : b.terms_[j]);
                ++j;
            } else {
                K c = subtract ? K(a.terms_[i].coeff - b.terms_[j].coeff) : K(a.terms_[i].coeff + b.terms_[j].coeff);
                if (!F::is_zero(c)) m.terms_.push_back({a.terms_[i].blade, std::move(c)});
                ++i;
                ++j;
            }
        }
        return m;
    }

    static Multivector product(const Multivector& a, const Multivector& b);

    Signature sig_;
    std::vector<Term<K>> terms_;
};

template <class K>
Multivector<K> detail::Accumulator<K>::finish() {
    std::vector<Term<K>> out;
    if (dense_) {
        std::sort(touched_.begin(), touched_.end());
        out.reserve(touched_.size());
        for (Blade b : touched_)
            if (!Field<K>::is_zero(vals_[b])) out.push_back({b, std::move(vals_[b])});
    } else {
        for (auto& [b, c] : sparse_)
            if (!Field<K>::is_zero(c)) out.push_back({b, std::move(c)});
    }
    return Multivector<K>::from_sorted_terms(sig_, std::move(out));
}

namespace detail {

template <class K>
Multivector<K> sparse_product(const Multivector<K>& a, const Multivector<K>& b) {
    const Signature& sig = a.signature();
    Accumulator<K> acc(sig);
    K tmp = Field<K>::zero();
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            auto bp = blade_product(sig, x.blade, y.blade);
            if (bp.sign == 0) continue;
            tmp = x.coeff * y.coeff;
            if (bp.sign > 0)
                acc.add(bp.blade, tmp);
            else
                acc.sub(bp.blade, tmp);
        }
    }
    return acc.finish();
}

// Float product through the dense SIMD kernel.
Multivector<double> dense_product(const Multivector<double>& a, const Multivector<double>& b);
Multivector<Complex> dense_product(const Multivector<Complex>& a, const Multivector<Complex>& b);

template <class K>
bool wants_dense(const Multivector<K>& a, const Multivector<K>& b) {
    if constexpr (Field<K>::exact) {
        return false;
    } else {
        int n = a.signature().n();
        if (n < 2 || n > kernels::kDenseMaxDimension) return false;
        return a.size() * b.size() * 4 >= a.signature().blade_count() * 2;
    }
}

}  // namespace detail

template <class K>
Multivector<K> Multivector<K>::product(const Multivector& a, const Multivector& b) {
    same_algebra(a, b);
    if (a.is_zero() || b.is_zero()) return Multivector(a.sig_);
    if constexpr (!F::exact) {
        if (detail::wants_dense(a, b)) return detail::dense_product(a, b);
    }
    return detail::sparse_product(a, b);
}

using MvQ = Multivector<Rational>;
using MvCQ = Multivector<CRational>;
using MvF = Multivector<double>;
using MvCF = Multivector<Complex>;

template <class To, class From>
Multivector<To> convert(const Multivector<From>& u) {
    std::vector<Term<To>> out;
    out.reserve(u.size());
    for (const auto& t : u.terms()) {
        To c = convert_scalar<To>(t.coeff);
        if (!Field<To>::is_zero(c)) out.push_back({t.blade, std::move(c)});
    }
    return Multivector<To>::from_sorted_terms(u.signature(), std::move(out));
}

template <class K>
Multivector<complex_of<K>> complexify(const Multivector<K>& u) {
    return convert<complex_of<K>>(u);
}

// Element from generator index lists in any order; repeated indices contract through the metric.
template <class K>
Multivector<K> make_element(const Signature& sig, const std::vector<std::pair<std::vector<int>, K>>& terms) {
    Multivector<K> out(sig);
    for (const auto& [idx, c] : terms) {
        Multivector<K> t = Multivector<K>::scalar(sig, c);
        for (int a : idx) t = t * Multivector<K>::generator(sig, a);
        out += t;
    }
    return out;
}

template <class K>
Multivector<K> pseudoscalar(const Signature& sig) {
    return Multivector<K>::blade(sig, sig.pseudoscalar());
}

// e_A^{-1} = (e_A)^2 e_A for a nondegenerate blade.
template <class K>
Multivector<K> blade_inverse(const Signature& sig, Blade b) {
    int s = blade_square(sig, b);
    if (s == 0) domain_fail("blade " + blade_name(b, sig.n()) + " is not invertible in a degenerate algebra");
    return Multivector<K>::blade(sig, b, Field<K>::from_int(s));
}

template <class K>
Multivector<K> grade_part(const Multivector<K>& u, int k) {
    if (k < 0 || k > u.signature().n())
        domain_fail("grade " + std::to_string(k) + " out of range 0.." + std::to_string(u.signature().n()));
    return u.filter([k](Blade b) { return grade_of(b) == k; });
}

template <class K>
Multivector<K> even_part(const Multivector<K>& u) {
    return u.filter([](Blade b) { return grade_of(b) % 2 == 0; });
}

template <class K>
Multivector<K> odd_part(const Multivector<K>& u) {
    return u.filter([](Blade b) { return grade_of(b) % 2 == 1; });
}

template <class K>
bool is_even(const Multivector<K>& u) {
    return std::all_of(u.terms().begin(), u.terms().end(), [](const Term<K>& t) { return grade_of(t.blade) % 2 == 0; });
}

template <class K>
bool is_odd(const Multivector<K>& u) {
    return std::all_of(u.terms().begin(), u.terms().end(), [](const Term<K>& t) { return grade_of(t.blade) % 2 == 1; });
}

template <class K>
std::set<int> grades_present(const Multivector<K>& u) {
    std::set<int> g;
    for (const auto& t : u.terms()) g.insert(grade_of(t.blade));
    return g;
}

template <class K>
Multivector<K> grade_involution(const Multivector<K>& u) {
    return u.map_terms([](Blade b, const K& c) { return grade_involution_sign(grade_of(b)) > 0 ? c : K(-c); });
}

template <class K>
Multivector<K> reversion(const Multivector<K>& u) {
    return u.map_terms([](Blade b, const K& c) { return reversion_sign(grade_of(b)) > 0 ? c : K(-c); });
}

template <class K>
Multivector<K> clifford_conjugation(const Multivector<K>& u) {
    return u.map_terms([](Blade b, const K& c) { return clifford_conjugation_sign(grade_of(b)) > 0 ? c : K(-c); });
}

template <class K>
Multivector<K> complex_conjugate(const Multivector<K>& u) {
    return u.map_terms([](Blade, const K& c) { return Field<K>::conj(c); });
}

// Flips the sign of every listed grade.
template <class K>
Multivector<K> negate_grades(const Multivector<K>& u, const std::set<int>& grades) {
    return u.map_terms([&](Blade b, const K& c) { return grades.count(grade_of(b)) ? K(-c) : c; });
}

// Keeps grades congruent to j mod 4.
template <class K>
Multivector<K> quaternion_type_part(const Multivector<K>& u, int j) {
    if (j < 0 || j > 3) domain_fail("quaternion type must be 0..3");
    return u.filter([j](Blade b) { return grade_of(b) % 4 == j; });
}

template <class K>
Multivector<K> commutator(const Multivector<K>& u, const Multivector<K>& v) {
    return u * v - v * u;
}

template <class K>
Multivector<K> anticommutator(const Multivector<K>& u, const Multivector<K>& v) {
    return u * v + v * u;
}

template <class K>
bool approx_equal(const Multivector<K>& u, const Multivector<K>& v, double tol) {
    if (u.signature() != v.signature()) return false;
    Multivector<K> d = u - v;
    for (const auto& t : d.terms())
        if (Field<K>::magnitude(t.coeff) > tol) return false;
    return true;
}

template <class K>
bool same_value(const Multivector<K>& u, const Multivector<K>& v, double tol) {
    if constexpr (Field<K>::exact)
        return u == v;
    else
        return approx_equal(u, v, tol);
}

template <class K>
bool is_zero_value(const Multivector<K>& u, double tol) {
    if constexpr (Field<K>::exact)
        return u.is_zero();
    else
        return std::all_of(u.terms().begin(), u.terms().end(),
                           [tol](const Term<K>& t) { return Field<K>::magnitude(t.coeff) <= tol; });
}

// Commutes with every generator; only meaningful for nondegenerate algebras.
template <class K>
bool is_central(const Multivector<K>& u, double tol = 1e-9) {
    const Signature& sig = u.signature();
    if (sig.degenerate()) domain_fail("center test requires a nondegenerate signature");
    for (int a = 1; a <= sig.n(); ++a)
        if (!is_zero_value(commutator(u, Multivector<K>::generator(sig, a)), tol)) return false;
    return true;
}

// Product of the listed blade coefficients as a generator word, in order.
template <class K>
Multivector<K> ordered_product(const std::vector<Multivector<K>>& gens, Blade mask, const Signature& algebra) {
    Multivector<K> out = Multivector<K>::identity(algebra);
    for (int i : blade_indices(mask)) out = out * gens.at(i - 1);
    return out;
}

}  // namespace clifford
