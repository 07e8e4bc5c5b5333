#include "clifford/conjugations.hpp"

namespace clifford {

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Rational quaternion_type_dimension(int n, int j) {
    if (j < 0 || j > 3) domain_fail("quaternion type must be 0..3");
    if (n < 1) domain_fail("the closed dimension formula holds for n >= 1");
    QSqrt2 trig;
    switch (j) {
        case 0: trig = cos_quarter_pi(n); break;
        case 1: trig = sin_quarter_pi(n); break;
        case 2: trig = -cos_quarter_pi(n); break;
        default: trig = -sin_quarter_pi(n); break;
    }
    QSqrt2 v = pow2_half(2 * (n - 2)) + pow2_half(n - 2) * trig;
    return v.rational();
}

long quaternion_type_dimension_count(int n, int j) {
    long s = 0;
    for (int k = j; k <= n; k += 4) s += binomial(n, k);
    return s;
}

int quaternion_bracket_type(int j, int k, Bracket br) {
    if (j < 0 || j > 3 || k < 0 || k > 3) domain_fail("quaternion type must be 0..3");
    if (br == Bracket::Commutator) {
        if (j == k) return 2;
        if (j == 2) return k;
        if (k == 2) return j;
        // remaining pairs among {0,1,3}
        return 4 - j - k;
    }
    if (j == k) return 0;
    if (j == 0) return k;
    if (k == 0) return j;
    // remaining pairs among {1,2,3}
    return 6 - j - k;
}

std::set<int> center_grades(const Signature& sig) {
    if (sig.n() % 2 == 0) return {0};
    return {0, sig.n()};
}

int pseudoscalar_square(const Signature& sig) {
    if (sig.degenerate()) return 0;
    int n = sig.n();
    int e = sig.q + n * (n - 1) / 2;
    return (e % 2) ? -1 : 1;
}

}  // namespace clifford
