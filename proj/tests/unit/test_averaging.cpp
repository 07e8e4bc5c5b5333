#include "doctest.h"
#include "support.hpp"

#include "clifford/averaging.hpp"
#include "clifford/conjugations.hpp"

using namespace clifford;
using namespace testing_support;

namespace {

// Sum of e_A^{-1} U e_A by explicit products.
template <class Pick>
MvQ brute_sum(const MvQ& u, Pick pick) {
    const Signature& sig = u.signature();
    MvQ s(sig);
    for (Blade a = 0; a < sig.blade_count(); ++a)
        if (pick(a)) s += blade_inverse<Rational>(sig, a) * u * MvQ::blade(sig, a);
    return s;
}

// Applies a per-grade scalar to U.
template <class Coef>
MvQ per_grade(const MvQ& u, Coef coef) {
    MvQ s(u.signature());
    for (int k = 0; k <= u.signature().n(); ++k) s += Rational(coef(k)) * grade_part(u, k);
    return s;
}

Rational pow2(int e) { return e >= 0 ? Rational(mpz_class(1) << e) : Rational(1, mpz_class(1) << -e); }

}  // namespace

TEST_SUITE("averaging") {

TEST_CASE("reynolds operator projects onto the center") {
    Signature s20(2, 0);
    auto u = make_element<Rational>(s20, {{{1}, Rational(1)}, {{}, Rational(3)}});
    CHECK(reynolds_center(u) == MvQ::scalar(s20, Rational(3)));
    Signature s30(3, 0);
    CHECK(reynolds_center(MvQ::blade(s30, 0b111)) == MvQ::blade(s30, 0b111));
    for (auto sig : signatures_up_to(5)) {
        auto x = random_element<Rational>(sig);
        auto f = reynolds_center(x);
        REQUIRE(f == pow2(-sig.n()) * brute_sum(x, [](Blade) { return true; }));
        auto want = grade_part(x, 0);
        if (sig.n() % 2) want += grade_part(x, sig.n());
        REQUIRE(f == want);
        REQUIRE(reynolds_center(f) == f);
        REQUIRE(is_central(f));
    }
}

TEST_CASE("even and odd sums") {
    Signature s20(2, 0);
    CHECK(avg_odd(MvQ::blade(s20, 0b11)) == -MvQ::blade(s20, 0b11));
    for (auto sig : signatures_up_to(5)) {
        const int n = sig.n();
        REQUIRE(avg_even(MvQ::identity(sig)) == MvQ::identity(sig));
        auto x = random_element<Rational>(sig);
        auto ev = avg_even(x), od = avg_odd(x);
        Rational norm = n == 0 ? Rational(1) : pow2(1 - n);
        REQUIRE(ev == norm * brute_sum(x, [](Blade a) { return grade_of(a) % 2 == 0; }));
        REQUIRE(od == norm * brute_sum(x, [](Blade a) { return grade_of(a) % 2 == 1; }));
        if (n == 0) continue;
        REQUIRE(ev == grade_part(x, 0) + grade_part(x, n));
        REQUIRE(od == grade_part(x, 0) + Rational(n % 2 ? 1 : -1) * grade_part(x, n));
        REQUIRE(avg_even(ev) == ev);
        // for even n the odd sum flips the pseudoscalar part, so it squares to the even sum instead of itself
        REQUIRE(avg_odd(od) == (n % 2 ? od : ev));
        if (n % 2 == 0)
            REQUIRE(reynolds_center(x) == Rational(1, 2) * (ev + od));
        else
            REQUIRE((reynolds_center(x) == ev && ev == od));
    }
}

TEST_CASE("grade-m sums match the closed-form coefficients") {
    Signature s20(2, 0);
    CHECK(avg_grade_m(MvQ::generator(s20, 1), 1).is_zero());
    for (auto sig : signatures_up_to(5)) {
        const int n = sig.n();
        auto x = random_element<Rational>(sig, 0.8);
        REQUIRE(avg_grade_m(x, 0) == x);
        for (int m = 0; m <= n; ++m) {
            auto got = avg_grade_m(x, m);
            REQUIRE(got == brute_sum(x, [m](Blade a) { return grade_of(a) == m; }));
            REQUIRE(got == per_grade(x, [&](int k) { return grade_m_coefficient(n, k, m); }));
        }
        REQUIRE(apply_f1(x) == per_grade(x, [&](int k) { return f1_eigenvalue(n, k); }));
    }
    Signature s40(4, 0);
    auto g2 = grade_part(random_element<Rational>(s40, 1.0), 2);
    CHECK(avg_grade_m(g2, 1).is_zero());
    CHECK_THROWS_AS(avg_grade_m(g2, 5), DomainError);
}

TEST_CASE("mod 4 sums match their trigonometric closed forms") {
    for (auto sig : signatures_up_to(6)) {
        const int n = sig.n();
        auto x = random_element<Rational>(sig, 0.8);
        for (int j = 0; j < 4; ++j) {
            auto got = avg_mod4(x, j);
            REQUIRE(got == brute_sum(x, [j](Blade a) { return grade_of(a) % 4 == j; }));
            for (int k = 0; k <= n; ++k) {
                auto part = avg_mod4(grade_part(x, k), j);
                // the closed form is rational on every grade: the sqrt(2) parts cancel
                QSqrt2 c = mod4_coefficient(n, k, j);
                REQUIRE(c.is_rational());
                REQUIRE(part == c.rational() * grade_part(x, k));
            }
        }
        for (int j = 0; j < 4; ++j) {
            long d = 0;
            for (int m = j; m <= n; m += 4) d += binomial(n, m);
            auto e = MvQ::identity(sig), top = pseudoscalar<Rational>(sig);
            REQUIRE(avg_mod4(e, j) == Rational(d) * e);
            if (n > 0) REQUIRE(avg_mod4(top, j) == Rational((j * (n + 1)) % 2 ? -d : d) * top);
        }
    }
}

TEST_CASE("grade recovery from iterated F_1") {
    Signature s20(2, 0);
    auto u = make_element<Rational>(s20, {{{}, Rational(1)}, {{1}, Rational(1)}, {{1, 2}, Rational(1)}});
    auto parts = recover_grades_f1(u);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == MvQ::identity(s20));
    CHECK(parts[1] == MvQ::generator(s20, 1));
    CHECK(parts[2] == MvQ::blade(s20, 0b11));
    Signature s30(3, 0);
    auto v = make_element<Rational>(s30, {{{1}, Rational(1)}, {{1, 2}, Rational(1)}});
    auto pairs = recover_grades_f1(v);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].is_zero());
    CHECK(pairs[1] == v);
    for (auto p : recover_grades_f1(MvQ(s30))) CHECK(p.is_zero());
    for (auto sig : signatures_up_to(5)) {
        const int n = sig.n();
        auto x = random_element<Rational>(sig, 0.8);
        auto got = recover_grades_f1(x);
        if (n % 2 == 0) {
            REQUIRE(got.size() == std::size_t(n + 1));
            for (int k = 0; k <= n; ++k) REQUIRE(got[k] == grade_part(x, k));
        } else {
            REQUIRE(got.size() == std::size_t(n + 1) / 2);
            for (int k = 0; k <= (n - 1) / 2; ++k) REQUIRE(got[k] == grade_part(x, k) + grade_part(x, n - k));
        }
    }
}

TEST_CASE("commutator sign matrix") {
    for (auto sig : signatures_up_to(4)) {
        auto m = salingaros_matrix(sig);
        for (Blade a = 0; a < sig.blade_count(); ++a) {
            REQUIRE((*m)(a, 0) == 1);
            for (Blade b = 0; b < sig.blade_count(); ++b) {
                auto ea = MvQ::blade(sig, a), eb = MvQ::blade(sig, b);
                auto c = ea * eb * blade_inverse<Rational>(sig, a) * blade_inverse<Rational>(sig, b);
                REQUIRE(c == MvQ::scalar(sig, Rational((*m)(a, b))));
            }
        }
        auto x = random_element<Rational>(sig);
        for (Blade a = 0; a < sig.blade_count(); ++a)
            REQUIRE(conj_by_blade(x, a) == blade_inverse<Rational>(sig, a) * x * MvQ::blade(sig, a));
    }
    CHECK((*salingaros_matrix(Signature(2, 0)))(0b01, 0b10) == -1);
    CHECK_THROWS_AS(salingaros_matrix(Signature(0, 0, 1)), DomainError);
}

TEST_CASE("commutator equations") {
    Signature s10(1, 0);
    auto e1 = MvQ::generator(s10, 1);
    auto sol = solve_commutator_equations<Rational>(s10, {{0b1, Rational(2) * e1}}, Rational(1));
    CHECK(sol.x == MvQ::identity(s10));
    CHECK(sol.nullity == 0);

    Signature s20(2, 0);
    auto zero = solve_commutator_equations<Rational>(s20, {{0b01, MvQ(s20)}, {0b10, MvQ(s20)}}, Rational(1));
    CHECK(zero.x.is_zero());

    auto sol2 = solve_commutator_equations<Rational>(s20, {{0b01, Rational(2) * MvQ::blade(s20, 0b11)}}, Rational(-1));
    CHECK(sol2.x == MvQ::generator(s20, 2));
    CHECK(sol2.nullity == 2);

    // e_1 X - X e_1 = e_1 has no solution: commutators with e_1 have no e_1 part
    CHECK_THROWS_AS(
        solve_commutator_equations<Rational>(s20, {{0b10, MvQ(s20)}, {0b01, MvQ::generator(s20, 1)}}, Rational(-1)),
        DomainError);
    try {
        solve_commutator_equations<Rational>(s20, {{0b10, MvQ(s20)}, {0b01, MvQ::generator(s20, 1)}}, Rational(-1));
    } catch (const DomainError& err) {
        CHECK(std::string(err.what()).find("equation 2") != std::string::npos);
    }

    for (auto sig : signatures_up_to(3)) {
        auto x = random_element<Rational>(sig);
        for (Rational eps : {Rational(1), Rational(-1), Rational(2)}) {
            std::vector<CommutatorEquation<Rational>> eqs;
            for (Blade a = 0; a < sig.blade_count(); ++a) {
                auto ea = MvQ::blade(sig, a);
                eqs.push_back({a, ea * x + eps * (x * ea)});
            }
            auto s = solve_commutator_equations(sig, eqs, eps);
            for (const auto& eq : eqs) {
                auto ea = MvQ::blade(sig, eq.index);
                REQUIRE(ea * s.x + eps * (s.x * ea) == eq.rhs);
            }
            if (s.nullity == 0) REQUIRE(s.x == x);
        }
    }
}

}  // TEST_SUITE
