#include "clifford/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace clifford::kernels::detail {

namespace {

// Lane j of the result holds lane j^low of v.
__attribute__((target("avx2"))) inline __m256d xor_permute(__m256d v, std::size_t low) {
    switch (low) {
        case 1: return _mm256_permute4x64_pd(v, 0xB1);
        case 2: return _mm256_permute4x64_pd(v, 0x4E);
        case 3: return _mm256_permute4x64_pd(v, 0x1B);
        default: return v;
    }
}

}  // namespace

__attribute__((target("avx2,fma"))) void dense_product_avx2(const ProductTable& t, double alpha, const double* a,
                                                             const double* b, double* out) {
    const std::size_t N = t.size;
    if (N < 4) {
        dense_product_scalar(t, alpha, a, b, out);
        return;
    }
    for (std::size_t i = 0; i < N; ++i) {
        const double ai = alpha * a[i];
        if (ai == 0.0) continue;
        const __m256d vai = _mm256_set1_pd(ai);
        const double* row = t.sign.data() + i * N;
        const std::size_t low = i & 3u;
        const std::size_t high = i & ~std::size_t{3};
        for (std::size_t k = 0; k < N; k += 4) {
            __m256d bv = xor_permute(_mm256_loadu_pd(b + (k ^ high)), low);
            __m256d sv = _mm256_loadu_pd(row + k);
            __m256d acc = _mm256_loadu_pd(out + k);
            acc = _mm256_fmadd_pd(_mm256_mul_pd(vai, sv), bv, acc);
            _mm256_storeu_pd(out + k, acc);
        }
    }
}

__attribute__((target("avx2,fma"))) void signed_accumulate_avx2(std::size_t len, double alpha, const double* s,
                                                                 const double* x, double* out) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d sv = _mm256_mul_pd(va, _mm256_loadu_pd(s + k));
        __m256d acc = _mm256_fmadd_pd(sv, _mm256_loadu_pd(x + k), _mm256_loadu_pd(out + k));
        _mm256_storeu_pd(out + k, acc);
    }
    for (; k < len; ++k) out[k] += alpha * s[k] * x[k];
}

}  // namespace clifford::kernels::detail

#endif
