#include "doctest.h"
#include "support.hpp"

#include "clifford/conjugations.hpp"

using namespace clifford;
using namespace testing_support;

namespace {

// Concatenate index lists, bubble-sort counting swaps, then contract equal neighbours.
std::pair<int, Blade> naive_product(const Signature& sig, Blade a, Blade b) {
    std::vector<int> idx = blade_indices(a);
    for (int i : blade_indices(b)) idx.push_back(i);
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    Blade out = 0;
    for (std::size_t i = 0; i < idx.size();) {
        if (i + 1 < idx.size() && idx[i] == idx[i + 1]) {
            sign *= sig.eta(idx[i]);
            i += 2;
        } else {
            out |= generator_bit(idx[i]);
            ++i;
        }
    }
    return {sign, out};
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("blade sign matches the sorting oracle for every pair up to n = 6") {
    for (int n = 0; n <= 6; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                Signature sig(p, q, n - p - q);
                for (Blade a = 0; a < sig.blade_count(); ++a)
                    for (Blade b = 0; b < sig.blade_count(); ++b) {
                        auto fast = blade_product(sig, a, b);
                        auto slow = naive_product(sig, a, b);
                        REQUIRE(fast.sign == slow.first);
                        if (fast.sign) REQUIRE(fast.blade == slow.second);
                    }
            }
}

TEST_CASE("generator relations and small products") {
    Signature s20(2, 0);
    auto e1 = MvQ::generator(s20, 1), e2 = MvQ::generator(s20, 2);
    CHECK(e1 * e2 == MvQ::blade(s20, 0b11));
    CHECK(e2 * e1 == MvQ::blade(s20, 0b11, Rational(-1)));
    CHECK(e1 * e1 == MvQ::identity(s20));

    Signature s01(0, 1);
    auto f = MvQ::generator(s01, 1);
    CHECK(f * f == MvQ::scalar(s01, Rational(-1)));

    Signature s111(1, 1, 1);
    auto g3 = MvQ::generator(s111, 3);
    CHECK((g3 * g3).is_zero());
}

TEST_CASE("index lists in any order canonicalise with the transposition sign") {
    Signature sig(3, 0);
    auto a = make_element<Rational>(sig, {{{2, 1}, Rational(1)}});
    CHECK(a == MvQ::blade(sig, 0b11, Rational(-1)));
    auto b = make_element<Rational>(sig, {{{3, 1, 2}, Rational(2)}});
    CHECK(b == MvQ::blade(sig, 0b111, Rational(2)));
    auto c = make_element<Rational>(sig, {{{1, 1}, Rational(5)}});
    CHECK(c == MvQ::scalar(sig, Rational(5)));
    CHECK_THROWS_AS(MvQ::generator(sig, 4), DomainError);
}

TEST_CASE("zero coefficients are never stored") {
    Signature sig(2, 1);
    auto u = MvQ::generator(sig, 1) - MvQ::generator(sig, 1);
    CHECK(u.is_zero());
    CHECK(u.size() == 0);
    auto v = MvQ::from_pairs(sig, {{1, Rational(0)}, {2, Rational(3)}, {2, Rational(-3)}});
    CHECK(v.is_zero());
}

TEST_CASE("product is associative and distributive on random elements") {
    for (auto sig : {Signature(2, 1), Signature(1, 3), Signature(3, 1, 1), Signature(0, 5)}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto u = random_element<Rational>(sig), v = random_element<Rational>(sig),
                 w = random_element<Rational>(sig);
            REQUIRE((u * v) * w == u * (v * w));
            REQUIRE(u * (v + w) == u * v + u * w);
            REQUIRE((v + w) * u == v * u + w * u);
        }
    }
}

TEST_CASE("complex exact and float paths agree with the exact product") {
    for (auto sig : {Signature(2, 2), Signature(3, 2), Signature(1, 4)}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto u = random_element<CRational>(sig), v = random_element<CRational>(sig);
            auto exact = u * v;
            auto fu = convert<Complex>(u), fv = convert<Complex>(v);
            REQUIRE(approx_equal(fu * fv, convert<Complex>(exact), 1e-12));
        }
    }
}

TEST_CASE("involutions act gradewise with the expected signs") {
    Signature sig(3, 2);
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_element<Rational>(sig), v = random_element<Rational>(sig);
        CHECK(grade_involution(u * v) == grade_involution(u) * grade_involution(v));
        CHECK(reversion(u * v) == reversion(v) * reversion(u));
        CHECK(clifford_conjugation(u * v) == clifford_conjugation(v) * clifford_conjugation(u));
        CHECK(clifford_conjugation(u) == grade_involution(reversion(u)));
    }
    auto e12 = MvQ::blade(Signature(2, 0), 0b11);
    CHECK(reversion(e12) == -e12);
    CHECK(grade_involution(e12) == e12);
    CHECK(clifford_conjugation(e12) == -e12);
}

TEST_CASE("complex conjugation conjugates coefficients only") {
    Signature sig(1, 1);
    MvCQ u = MvCQ::blade(sig, 0b01, CRational(Rational(1), Rational(2)));
    MvCQ want = MvCQ::blade(sig, 0b01, CRational(Rational(1), Rational(-2)));
    CHECK(complex_conjugate(u) == want);
}

TEST_CASE("grade projections") {
    Signature sig(3, 0);
    auto u = make_element<Rational>(sig, {{{}, Rational(2)}, {{1}, Rational(1)}, {{1, 2}, Rational(3)}});
    CHECK(grade_part(u, 2) == MvQ::blade(sig, 0b11, Rational(3)));
    CHECK(grade_part(u, 3).is_zero());
    CHECK_THROWS_AS(grade_part(u, 4), DomainError);
    CHECK(even_part(u) + odd_part(u) == u);
}

TEST_CASE("sparse accumulation beyond the dense threshold") {
    Signature sig(13, 0);
    auto a = MvQ::blade(sig, 0b1010101010101), b = MvQ::blade(sig, 0b0110011001100);
    auto bp = blade_product(sig, 0b1010101010101, 0b0110011001100);
    CHECK(a * b == MvQ::blade(sig, bp.blade, Rational(bp.sign)));
}

TEST_CASE("operands from different algebras are rejected") {
    CHECK_THROWS_AS(MvQ::identity(Signature(1, 0)) + MvQ::identity(Signature(0, 1)), DomainError);
    CHECK_THROWS_AS(Signature(10, 7), DomainError);
}

}  // TEST_SUITE
