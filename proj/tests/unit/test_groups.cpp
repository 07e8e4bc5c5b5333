#include <cmath>

#include "doctest.h"
#include "support.hpp"

#include "clifford/groups.hpp"

using namespace clifford;
using namespace testing_support;

namespace {

const std::vector<Signature> kNormSigs{Signature(1, 1), Signature(2, 0), Signature(0, 2),
                                       Signature(1, 2), Signature(2, 1), Signature(1, 3)};

Rational bilinear(const Signature& sig, const MvQ& x, const MvQ& y) {
    Rational s(0);
    for (int b = 1; b <= sig.n(); ++b) s += Rational(sig.eta(b)) * x.coeff(generator_bit(b)) * y.coeff(generator_bit(b));
    return s;
}

template <class K>
OrthoMatrix<K> ortho(const Signature& sig, const std::vector<std::vector<K>>& rows) {
    OrthoMatrix<K> m{sig, Matrix<K>(sig.n(), sig.n())};
    for (int i = 0; i < sig.n(); ++i)
        for (int j = 0; j < sig.n(); ++j) m.P(i, j) = rows[i][j];
    return m;
}

// Boost mixing time axis 1 with space axis a in Cl(1,3), as a matrix.
OrthoMatrix<double> boost(int a, double psi) {
    Signature sig(1, 3);
    OrthoMatrix<double> m{sig, Matrix<double>::identity(4)};
    m.P(0, 0) = m.P(a - 1, a - 1) = std::cosh(psi);
    m.P(0, a - 1) = m.P(a - 1, 0) = std::sinh(psi);
    return m;
}

OrthoMatrix<double> to_float(const OrthoMatrix<Rational>& m) { return {m.sig, convert_matrix<double>(m.P)}; }

bool plus_or_minus(const MvQ& a, const MvQ& b) { return a == b || a == -b; }

}  // namespace

TEST_SUITE("groups") {

TEST_CASE("twisted adjoint examples") {
    for (auto sig : signatures_up_to(4)) {
        if (sig.n() == 0) continue;
        auto m = twisted_adjoint_matrix(MvQ::identity(sig));
        CHECK(m.P == Matrix<Rational>::identity(sig.n()));
    }
    // rotation: x -> T x T^{-1} with T = cos(t/2) + sin(t/2) e_12 sends e_1 to cos t e_1 - sin t e_2
    Signature s20(2, 0);
    for (double th : {M_PI / 2, 0.3, -1.1}) {
        auto t = make_element<double>(s20, {{{}, std::cos(th / 2)}, {{1, 2}, std::sin(th / 2)}});
        auto m = twisted_adjoint_matrix(t);
        auto want = ortho<double>(s20, {{std::cos(th), std::sin(th)}, {-std::sin(th), std::cos(th)}});
        CHECK(matrix_approx_equal(m.P, want.P, 1e-12));
        CHECK(matrix_approx_equal(adjoint_matrix(t).P, m.P, 1e-12));
        CHECK(is_orthogonal(m));
    }
    // boost: e_12 squares to +e in Cl(1,1)
    Signature s11(1, 1);
    for (double psi : {0.7, -2.0}) {
        auto t = make_element<double>(s11, {{{}, std::cosh(psi / 2)}, {{1, 2}, std::sinh(psi / 2)}});
        auto m = twisted_adjoint_matrix(t);
        auto want = ortho<double>(s11, {{std::cosh(psi), -std::sinh(psi)}, {-std::sinh(psi), std::cosh(psi)}});
        CHECK(matrix_approx_equal(m.P, want.P, 1e-12));
        CHECK(matrix_approx_equal(adjoint_matrix(t).P, m.P, 1e-12));
        CHECK(upper_minor(m) >= 1.0);
        CHECK(lower_minor(m) >= 1.0);
    }
    CHECK_THROWS_AS(adjoint_matrix(MvQ::generator(s20, 1)), DomainError);
    CHECK_THROWS_AS(twisted_adjoint_matrix(MvQ(s20)), DomainError);
    auto mixed = MvQ::identity(s20) + MvQ::generator(s20, 1) * Rational(1, 2);
    CHECK_THROWS_AS(twisted_adjoint_matrix(mixed), DomainError);
}

TEST_CASE("products of vectors give orthogonal matrices") {
    for (auto sig : signatures_up_to(4)) {
        if (sig.n() == 0) continue;
        for (int trial = 0; trial < 10; ++trial) {
            const int k = int(rand_int(1, 4));
            MvQ t = MvQ::identity(sig);
            for (int i = 0; i < k; ++i) {
                MvQ v(sig);
                do v = random_vector<Rational>(sig); while (sgn(bilinear(sig, v, v)) == 0);
                t = t * v;
            }
            auto m = twisted_adjoint_matrix(t);
            REQUIRE(is_orthogonal(m));
            REQUIRE(determinant(m.P) == Rational(k % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("a single vector acts as a reflection") {
    for (auto sig : signatures_up_to(4)) {
        if (sig.n() == 0) continue;
        for (int trial = 0; trial < 5; ++trial) {
            MvQ v(sig);
            do v = random_vector<Rational>(sig); while (sgn(bilinear(sig, v, v)) == 0);
            auto m = twisted_adjoint_matrix(v);
            for (int a = 1; a <= sig.n(); ++a) {
                auto x = MvQ::generator(sig, a);
                MvQ want = x - (Rational(2) * bilinear(sig, x, v) / bilinear(sig, v, v)) * v;
                for (int b = 1; b <= sig.n(); ++b) REQUIRE(m.P(b - 1, a - 1) == want.coeff(generator_bit(b)));
            }
        }
    }
}

TEST_CASE("the norm map is multiplicative on the Lipschitz group") {
    auto norm = [](const MvQ& u) { return grade_involution(reversion(u)) * u; };
    for (auto sig : signatures_up_to(4)) {
        if (sig.n() == 0) continue;
        for (int trial = 0; trial < 10; ++trial) {
            MvQ u = random_pin_element(sig, int(rand_int(1, 3))) * Rational(rand_int(1, 3));
            MvQ v = random_pin_element(sig, int(rand_int(1, 3))) * Rational(1, rand_int(1, 3));
            REQUIRE(group_membership(u, "Lipschitz").member);
            REQUIRE(norm(u).is_scalar());
            REQUIRE(norm(u * v) == norm(u) * norm(v));
            REQUIRE(norm(inverse(u)) * norm(u) == MvQ::identity(sig));
        }
    }
}

TEST_CASE("spin group membership") {
    Signature s11(1, 1);
    // u e + v e_12 with u^2 - v^2 = 1, on both branches
    for (Rational u : {Rational(5, 4), Rational(-5, 4), Rational(1), Rational(13, 5)}) {
        Rational v2 = u * u - 1;
        auto v = rational_sqrt(v2);
        REQUIRE(v);
        auto t = make_element<Rational>(s11, {{{}, u}, {{1, 2}, *v}});
        CHECK(group_membership(t, "Spin+").member);
        CHECK(group_membership(t, "Spin").member);
    }
    auto off = make_element<Rational>(s11, {{{}, Rational(2)}, {{1, 2}, Rational(1)}});
    auto r = group_membership(off, "Spin+");
    CHECK_FALSE(r.member);
    CHECK(r.reason == "norm condition fails");
    CHECK(group_membership(off, "Lipschitz").member);
    auto null = make_element<Rational>(s11, {{{}, Rational(1)}, {{1, 2}, Rational(1)}});
    CHECK(group_membership(null, "Spin+").reason == "not invertible");

    // e_1^2 = +e, e_2^2 = -e in Cl(1,1)
    auto e1 = MvQ::generator(s11, 1), e2 = MvQ::generator(s11, 2);
    CHECK(group_membership(e1, "Pin-").member);
    CHECK_FALSE(group_membership(e1, "Pin+").member);
    CHECK(group_membership(e2, "Pin+").member);
    CHECK_FALSE(group_membership(e2, "Pin-").member);
    CHECK(group_membership(e1, "Pin").member);
    CHECK(group_membership(e1, "Spin").reason.rfind("parity fails", 0) == 0);
    CHECK(group_membership(e1 + MvQ::identity(s11), "Pin").reason.rfind("parity fails", 0) == 0);
    CHECK_THROWS_AS(group_membership(e1, "Spinor"), DomainError);
}

TEST_CASE("n = 6: unit norm does not imply vector preservation") {
    Signature s60(6, 0);
    auto t = make_element<Rational>(s60, {{{1, 2}, Rational(1)}, {{3, 4, 5, 6}, Rational(1)}});
    CHECK(reversion(t) * t == Rational(2) * MvQ::identity(s60));
    auto img = t * MvQ::generator(s60, 1) * inverse(t);
    CHECK(img == -MvQ::blade(s60, range_mask(2, 6)));
    auto r = group_membership(t, "Spin+");
    CHECK_FALSE(r.member);
    CHECK(r.reason == "vector preservation fails");
    // the normalised element passes the norm test and still fails
    auto tf = (1.0 / std::sqrt(2.0)) * convert<double>(t);
    CHECK(detail::is_identity_value(reversion(tf) * tf, 1, 1e-12));
    CHECK(group_membership(tf, "Spin+").reason == "vector preservation fails");
    CHECK_THROWS_AS(twisted_adjoint_matrix(t), DomainError);
}

TEST_CASE("up to n = 5 the norm condition forces vector preservation") {
    // all homogeneous elements with up to three +-1 terms; reversion(T) T scalar and nonzero
    auto violations = [](const Signature& sig) {
        std::vector<std::vector<Blade>> by_parity(2);
        for (Blade b = 0; b < sig.blade_count(); ++b) by_parity[grade_of(b) % 2].push_back(b);
        int bad = 0, tested = 0;
        for (const auto& blades : by_parity) {
            const std::size_t m = blades.size();
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j)
                    for (std::size_t k = j; k < m; ++k)
                        for (int signs = 0; signs < 4; ++signs) {
                            std::vector<std::pair<Blade, Rational>> pairs{{blades[i], Rational(1)}};
                            if (j > i) pairs.push_back({blades[j], Rational(signs & 1 ? -1 : 1)});
                            if (k > j) pairs.push_back({blades[k], Rational(signs & 2 ? -1 : 1)});
                            auto t = MvQ::from_pairs(sig, pairs);
                            auto n2 = reversion(t) * t;
                            if (!n2.is_scalar() || n2.is_zero()) continue;
                            ++tested;
                            auto tinv = inverse(t);
                            for (int a = 1; a <= sig.n(); ++a) {
                                auto img = t * MvQ::generator(sig, a) * tinv;
                                if (!(img == grade_part(img, 1))) {
                                    ++bad;
                                    break;
                                }
                            }
                        }
        }
        REQUIRE(tested > 0);
        return bad;
    };
    for (auto sig : signatures_up_to(5)) {
        if (sig.n() == 0) continue;
        INFO(sig.to_string());
        REQUIRE(violations(sig) == 0);
    }
    CHECK(violations(Signature(6, 0)) > 0);
}

TEST_CASE("unitary group and the Lie-group rows") {
    for (auto sig : signatures_up_to(4)) {
        for (int a = 1; a <= sig.n(); ++a) {
            CHECK(group_membership(MvQ::generator(sig, a), "UCl").member);
            CHECK(group_membership(MvCQ::generator(sig, a), "UCl").member);
        }
        for (Blade b = 0; b < sig.blade_count(); ++b) CHECK(group_membership(MvQ::blade(sig, b), "UCl").member);
    }
    Signature s20(2, 0);
    CHECK_FALSE(group_membership(Rational(2) * MvQ::identity(s20), "UCl").member);

    // Spin+ sits inside every row
    for (auto sig : signatures_up_to(4)) {
        if (sig.n() == 0) continue;
        for (int trial = 0; trial < 3; ++trial) {
            auto t = random_pin_element(sig, 2);
            if (!(reversion(t) * t == MvQ::identity(sig))) continue;
            auto tc = convert<CRational>(t);
            for (const auto& row : lie_group_rows()) {
                INFO(row.name);
                REQUIRE(group_membership(tc, row.name).member);
            }
        }
    }
    const CRational i(Rational(0), Rational(1));
    Signature s13(1, 3);
    auto ie = i * MvCQ::identity(s13);
    CHECK(group_membership(ie, "row:1").member);
    CHECK(group_membership(ie, "row:2").reason == "coefficients are not real");
    CHECK(group_membership(ie, "G23i01").member);     // conj(rev(ie)) ie = (-i)(i) e
    CHECK_FALSE(group_membership(ie, "G23i23").member);  // rev(ie) ie = -e
    auto ie1 = i * MvCQ::generator(s13, 1);
    CHECK(group_membership(ie1, "row:5").member);
    CHECK(group_membership(ie1, "row:4").reason.rfind("parity fails", 0) == 0);
    CHECK(group_membership(MvCQ::generator(s13, 1), "row:5").reason.rfind("parity fails", 0) == 0);
    CHECK(group_membership(MvCQ(s13), "row:1").reason == "not invertible");
    CHECK(parse_group_id("row:16").name == "G2");
    CHECK_THROWS_AS(parse_group_id("row:17"), DomainError);
}

TEST_CASE("components and the norm theorem") {
    Signature s20(2, 0);
    auto c0 = component_of(MvQ::identity(s20));
    CHECK(c0.tag == Component::SOPlus);
    CHECK(c0.norm_sq == 1);
    CHECK(c0.upper == 1);
    auto c1 = component_of(MvQ::blade(s20, 0b11));
    CHECK(c1.tag == Component::SOPlus);
    CHECK(c1.matrix.P == Rational(-1) * Matrix<Rational>::identity(2));
    CHECK(c1.upper == 1);
    Signature s11(1, 1);
    auto c2 = component_of(MvQ::generator(s11, 1));
    CHECK(c2.tag == Component::OMinusPrime);
    CHECK(spin_component_name(c2.tag) == "Pin-'");
    CHECK(c2.upper == -1);
    CHECK(c2.lower == 1);
    CHECK(component_name(component_of(MvQ::generator(s11, 2)).tag) == "O+'");
    CHECK(component_of(MvQ::blade(s11, 0b11)).tag == Component::SOPrime);
    CHECK_THROWS_AS(component_of(Rational(2) * MvQ::identity(s11)), DomainError);

    for (auto sig : kNormSigs) {
        for (int trial = 0; trial < 100; ++trial) {
            auto t = random_pin_element(sig, int(rand_int(0, 4)));
            auto c = component_of(t);  // throws on a sign-table mismatch
            auto [su, sl] = norm_theorem_signs(c.tag);
            REQUIRE(c.upper == Rational(su) * c.norm_sq);
            REQUIRE(c.lower == Rational(sl) * c.norm_sq);
            REQUIRE(c.norm_sq >= 1);
            // the tag agrees with the matrix-side component
            const bool proper = determinant(c.matrix.P) == 1;
            REQUIRE(proper == (c.tag == Component::SOPlus || c.tag == Component::SOPrime));
            REQUIRE((c.upper > 0) == (c.tag == Component::SOPlus || c.tag == Component::OPlusPrime));
        }
    }
}

TEST_CASE("spin lifts") {
    for (auto sig : signatures_up_to(4)) {
        if (sig.n() == 0) continue;
        auto id = OrthoMatrix<Rational>{sig, Matrix<Rational>::identity(sig.n())};
        CHECK(lift_orthogonal(id) == MvQ::identity(sig));
    }
    Signature s20(2, 0);
    auto half_turn = ortho<Rational>(s20, {{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}});
    CHECK(lift_orthogonal(half_turn) == MvQ::blade(s20, 0b11));
    auto quarter = ortho<Rational>(s20, {{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}});
    CHECK_THROWS_AS(lift_orthogonal(quarter), DomainError);
    auto tq = lift_orthogonal(to_float(quarter));
    CHECK(matrix_approx_equal(twisted_adjoint_matrix(tq).P, convert_matrix<double>(quarter.P), 1e-12));
    auto bad = ortho<Rational>(s20, {{Rational(2), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK_THROWS_AS(lift_orthogonal(bad), DomainError);

    // round trips through random Pin elements: the lift is +-T
    for (auto sig : signatures_up_to(4)) {
        if (sig.n() == 0) continue;
        for (int trial = 0; trial < 6; ++trial) {
            auto t = random_pin_element(sig, int(rand_int(1, 4)));
            auto m = twisted_adjoint_matrix(t);
            auto s = lift_orthogonal(m);
            REQUIRE(plus_or_minus(s, t));
            REQUIRE(twisted_adjoint_matrix(s).P == m.P);
        }
    }

    // Lorentz: two boosts and a rotation about x, float
    auto rot = OrthoMatrix<double>{Signature(1, 3), Matrix<double>::identity(4)};
    rot.P(2, 2) = rot.P(3, 3) = std::cos(0.4);
    rot.P(2, 3) = -std::sin(0.4);
    rot.P(3, 2) = std::sin(0.4);
    auto p = boost(2, 0.8).P * boost(3, -0.5).P * rot.P;
    OrthoMatrix<double> lor{Signature(1, 3), p};
    REQUIRE(is_orthogonal(lor));
    auto s = lift_orthogonal(lor);
    CHECK(matrix_approx_equal(twisted_adjoint_matrix(s).P, p, 1e-9));
    CHECK(group_membership(s, "Spin+").member);
    CHECK(component_of(s).tag == Component::SOPlus);
}

TEST_CASE("double cover kernel") {
    for (auto sig : signatures_up_to(4)) {
        if (sig.n() == 0) continue;
        auto id = OrthoMatrix<Rational>{sig, Matrix<Rational>::identity(sig.n())};
        auto t = lift_orthogonal_unnormalized(id);
        REQUIRE(t.is_scalar());
        // only +-e among normalised elements map to the identity
        auto s = lift_orthogonal(id);
        REQUIRE(s == MvQ::identity(sig));
        REQUIRE(twisted_adjoint_matrix(-s).P == id.P);
        if (sig.n() % 2) REQUIRE_THROWS_AS(twisted_adjoint_matrix(pseudoscalar<Rational>(sig) + MvQ::identity(sig)), DomainError);
    }
}

TEST_CASE("classical group lookups") {
    CHECK(liegroup_class_lookup(Signature(3, 0), "Spin+") == "SU(2)");
    CHECK(liegroup_class_lookup(Signature(1, 3), "Spin+") == "Sp(1,C)");
    CHECK(liegroup_class_lookup(Signature(1, 1), "G2") == "GL(1,R)");
    CHECK(g2_class_lookup(Signature(5, 5)).symbolic == "GL(2^{(n-2)/2},R)");
    CHECK_THROWS_AS(liegroup_class_lookup(Signature(1, 1), "Pin"), DomainError);
}

}  // TEST_SUITE
