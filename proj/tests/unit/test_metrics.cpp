#include "doctest.h"
#include "support.hpp"

#include "clifford/metrics.hpp"

using namespace clifford;
using namespace testing_support;

namespace {

// The alternative orderings for n = 3 and n = 4.
MvQ adjugate_variant(const MvQ& u) {
    auto ct = clifford_conjugation(u);
    if (u.signature().n() == 3) return ct * grade_involution(u) * reversion(u);
    return ct * negate_grades(grade_involution(u) * reversion(u), {4, 5});
}

Rational pow_rational(Rational x, unsigned k) {
    Rational r = 1;
    while (k--) r *= x;
    return r;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("trace") {
    Signature sig(2, 0);
    auto u = make_element<Rational>(sig, {{{}, Rational(3)}, {{1}, Rational(1)}});
    CHECK(trace(u) == 3);
    CHECK(trace(MvQ::blade(sig, 0b11)) == 0);
    for (auto s : signatures_up_to(4)) {
        auto a = random_element<Rational>(s), b = random_element<Rational>(s);
        REQUIRE(trace(a * b) == trace(b * a));
    }
}

TEST_CASE("determinant examples") {
    Signature s01(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        Rational u = random_scalar<Rational>(), u1 = random_scalar<Rational>();
        auto x = make_element<Rational>(s01, {{{}, u}, {{1}, u1}});
        REQUIRE(determinant(x) == u * u + u1 * u1);
        REQUIRE(determinant_via_rep(x) == u * u + u1 * u1);
    }
    for (auto sig : signatures_up_to(6)) {
        REQUIRE(determinant(MvQ::identity(sig)) == 1);
    }
    CHECK(determinant(MvQ::generator(Signature(2, 0), 1)) == -1);
    CHECK(determinant_via_rep(MvQ::generator(Signature(2, 0), 1)) == -1);
    CHECK_THROWS_AS(determinant(MvQ::identity(Signature(1, 0, 1))), DomainError);
}

TEST_CASE("closed form equals the representation determinant for n <= 5") {
    for (auto sig : signatures_up_to(5)) {
        for (int trial = 0; trial < 10; ++trial) {
            auto u = random_element<Rational>(sig);
            REQUIRE(determinant_closed_form(u) == determinant_via_rep(u));
            auto z = random_element<CRational>(sig);
            REQUIRE(determinant_closed_form(z) == determinant_via_rep(z));
        }
    }
}

TEST_CASE("the alternative orderings give the same adjugate") {
    for (int n = 3; n <= 4; ++n)
        for (auto sig : signatures_of_dim(n))
            for (int trial = 0; trial < 5; ++trial) {
                auto u = random_element<Rational>(sig);
                REQUIRE(adjugate_variant(u) == adjugate_closed_form(u));
            }
}

TEST_CASE("determinant identities") {
    for (auto sig : signatures_up_to(4)) {
        const unsigned d = 1u << ((sig.n() + 1) / 2);
        for (int trial = 0; trial < 5; ++trial) {
            auto u = random_element<Rational>(sig), v = random_element<Rational>(sig);
            Rational du = determinant(u);
            REQUIRE(determinant(u * v) == du * determinant(v));
            REQUIRE(determinant(grade_involution(u)) == du);
            REQUIRE(determinant(reversion(u)) == du);
            Rational lam = random_scalar<Rational>();
            REQUIRE(determinant(lam * u) == pow_rational(lam, d) * du);
            auto z = random_element<CRational>(sig);
            REQUIRE(determinant(complex_conjugate(z)) == Field<CRational>::conj(determinant(z)));
            if (sgn(du) != 0) {
                auto inv = inverse(u);
                REQUIRE(determinant(inv) == 1 / du);
                REQUIRE(determinant(inv * v * u) == determinant(v));
            }
        }
    }
}

TEST_CASE("inverse") {
    Signature s01(0, 1);
    auto x = make_element<Rational>(s01, {{{}, Rational(2)}, {{1}, Rational(1)}});
    auto want = make_element<Rational>(s01, {{{}, make_rational(2, 5)}, {{1}, make_rational(-1, 5)}});
    CHECK(inverse(x) == want);
    for (auto sig : signatures_up_to(5))
        for (int a = 1; a <= sig.n(); ++a)
            REQUIRE(inverse(MvQ::generator(sig, a)) == Rational(sig.eta(a)) * MvQ::generator(sig, a));
    Signature s20(2, 0);
    auto y = MvQ::identity(s20) + MvQ::blade(s20, 0b11);
    CHECK(determinant(y) == 2);
    CHECK(y * inverse(y) == MvQ::identity(s20));
    CHECK_THROWS_AS(inverse(MvQ::identity(s20) + MvQ::generator(s20, 1)), DomainError);
}

TEST_CASE("U inverse(U) = e and invertibility matches Det != 0") {
    for (auto sig : signatures_up_to(5)) {
        for (int trial = 0; trial < 8; ++trial) {
            // sparse elements hit singular cases now and then
            auto u = random_element<Rational>(sig, trial % 2 ? 0.3 : 0.7, 1);
            Rational d = determinant(u);
            if (sig.n() <= 4) REQUIRE(inverse_by_solve(u).has_value() == (sgn(d) != 0));
            if (sgn(d) == 0) {
                REQUIRE_THROWS_AS(inverse(u), DomainError);
                continue;
            }
            auto inv = inverse(u);
            REQUIRE(u * inv == MvQ::identity(sig));
            REQUIRE(inv * u == MvQ::identity(sig));
        }
    }
}

TEST_CASE("inverse and determinant beyond the closed forms") {
    Signature sig(3, 3);
    for (int trial = 0; trial < 3; ++trial) {
        auto u = random_element<Rational>(sig, 0.1);
        u += MvQ::identity(sig) * Rational(3);
        Rational d = determinant(u);
        if (sgn(d) == 0) continue;
        auto inv = inverse(u);
        REQUIRE(u * inv == MvQ::identity(sig));
        REQUIRE(determinant(inv) == 1 / d);
    }
    auto f = random_element<double>(Signature(2, 4));
    auto finv = inverse(f);
    CHECK(approx_equal(f * finv, MvF::identity(f.signature()), 1e-8));
}

TEST_CASE("U rev(U) lies in types 0,1 and U conj(U) in types 0,3") {
    for (auto sig : signatures_up_to(5)) {
        auto u = random_element<Rational>(sig);
        auto a = u * reversion(u), b = u * clifford_conjugation(u);
        REQUIRE(quaternion_type_part(a, 0) + quaternion_type_part(a, 1) == a);
        REQUIRE(quaternion_type_part(b, 0) + quaternion_type_part(b, 3) == b);
    }
}

TEST_CASE("hermitian conjugation examples") {
    Signature s13(1, 3);
    CHECK(hermitian_conjugate(MvQ::generator(s13, 1)) == MvQ::generator(s13, 1));
    CHECK(hermitian_conjugate(MvQ::generator(s13, 2)) == -MvQ::generator(s13, 2));
    auto g0 = MvQ::generator(s13, 1);
    for (int a = 1; a <= 4; ++a) {
        auto ga = MvQ::generator(s13, a);
        REQUIRE(hermitian_conjugate(ga) == g0 * ga * g0);
    }
    Signature s20(2, 0);
    CHECK(herm_scalar_product(MvQ::blade(s20, 0b11), MvQ::blade(s20, 0b11)) == 1);
    CHECK(herm_scalar_product(MvQ::generator(s20, 1), MvQ::generator(s20, 2)) == 0);
    CHECK(norm_sq(MvQ::scalar(s20, Rational(2)) + MvQ::generator(s20, 1)) == 5);
}

}  // TEST_SUITE
