#include "doctest.h"
#include "support.hpp"

#include "clifford/linalg.hpp"

using namespace clifford;
using namespace testing_support;

namespace {

// Cofactor expansion along the first row.
Rational cofactor_det(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<Rational> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        Rational term = m(0, j) * cofactor_det(minor);
        s += (j % 2 ? -term : term);
    }
    return s;
}

Matrix<Rational> random_matrix(std::size_t r, std::size_t c) {
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar<Rational>(4);
    return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("elimination determinant equals cofactor expansion") {
    for (std::size_t n = 0; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            auto m = random_matrix(n, n);
            REQUIRE(determinant(m) == cofactor_det(m));
        }
}

TEST_CASE("inverse and solve") {
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(5, 5);
        auto inv = inverse(m);
        if (sgn(determinant(m)) == 0) {
            CHECK_FALSE(inv.has_value());
            continue;
        }
        REQUIRE(inv.has_value());
        CHECK(m * *inv == Matrix<Rational>::identity(5));
    }
    Matrix<Rational> a(2, 3);
    a(0, 0) = 1;
    a(1, 1) = 1;
    auto sol = solve(a, {Rational(2), Rational(3)});
    CHECK(sol.consistent);
    CHECK(sol.nullity == 1);
    CHECK(sol.x[0] == 2);
    CHECK(sol.x[1] == 3);
    Matrix<Rational> z(2, 1);
    auto bad = solve(z, {Rational(1), Rational(0)});
    CHECK_FALSE(bad.consistent);
}

TEST_CASE("complex rational arithmetic") {
    CRational a(make_rational(1, 2), Rational(2)), b(Rational(-3), make_rational(1, 3));
    CRational q = a / b;
    CHECK(q * b == a);
    CHECK_THROWS_AS(a / CRational(0), DomainError);
    Matrix<CRational> m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = CRational(1);
    m(1, 1) = a;
    CHECK(determinant(m) == a * a - b);
    CHECK(m.adjoint().adjoint() == m);
}

TEST_CASE("float elimination with partial pivoting") {
    Matrix<double> m(2, 2);
    m(0, 0) = 1e-14;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1;
    CHECK(determinant(m) == doctest::Approx(-1.0));
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(matrix_approx_equal(m * *inv, Matrix<double>::identity(2), 1e-12));
}

}  // TEST_SUITE
