#include "clifford/averaging.hpp"

#include <map>
#include <mutex>

namespace clifford {

std::shared_ptr<const SignMatrix> salingaros_matrix(const Signature& sig) {
    detail::require_metric(sig, "the commutator sign matrix");
    if (sig.n() > kSalingarosMaxDimension) domain_fail("commutator sign matrix is limited to n <= 10");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const SignMatrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[sig.n()];
    if (!slot) {
        auto s = std::make_shared<SignMatrix>();
        s->size = sig.blade_count();
        s->m.resize(s->size * s->size);
        for (Blade a = 0; a < s->size; ++a)
            for (Blade b = 0; b < s->size; ++b) s->m[std::size_t(a) * s->size + b] = static_cast<signed char>(commute_sign(a, b));
        slot = std::move(s);
    }
    return slot;
}

long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long grade_m_coefficient(int n, int k, int m) {
    long s = 0;
    for (int i = 0; i <= m; ++i) s += (i % 2 ? -1 : 1) * binomial(k, i) * binomial(n - k, m - i);
    return (k * m) % 2 ? -s : s;
}

QSqrt2 mod4_coefficient(int n, int k, int j) {
    if (j < 0 || j > 3) domain_fail("residue must be 0..3");
    if (k < 0 || k > n) domain_fail("grade out of range");
    if (k == 0 || k == n) {
        long d = 0;
        for (int m = j; m <= n; m += 4) d += binomial(n, m);
        if (k == n && k != 0 && (j * (n + 1)) % 2) d = -d;
        return QSqrt2(Rational(d));
    }
    const QSqrt2 scale = pow2_half(n - 2);
    const int angle = 2 * k - n;  // in units of pi/4
    switch (j) {
        case 0: return scale * cos_quarter_pi(angle);
        case 1: return (k % 2 ? scale : -scale) * sin_quarter_pi(angle);
        case 2: return -(scale * cos_quarter_pi(angle));
        default: return (k % 2 ? -scale : scale) * sin_quarter_pi(angle);
    }
}

Matrix<Rational> f1_recovery_matrix(int n) {
    if (n < 0) domain_fail("negative dimension");
    const std::size_t N = n % 2 == 0 ? std::size_t(n) + 1 : std::size_t(n + 1) / 2;
    Matrix<Rational> a(N, N);
    for (std::size_t l = 0; l < N; ++l) {
        Rational lam = f1_eigenvalue(n, int(l)), pw = 1;
        for (std::size_t k = 0; k < N; ++k) {
            a(k, l) = pw;
            pw *= lam;
        }
    }
    auto inv = inverse(a);
    if (!inv) internal_fail("F_1 eigenvalues are not distinct");
    return *inv;
}

}  // namespace clifford
