#include "clifford/kernels.hpp"

#if defined(__ARM_NEON)
#include <arm_neon.h>

namespace clifford::kernels::detail {

void dense_product_neon(const ProductTable& t, double alpha, const double* a, const double* b, double* out) {
    const std::size_t N = t.size;
    if (N < 2) {
        dense_product_scalar(t, alpha, a, b, out);
        return;
    }
    for (std::size_t i = 0; i < N; ++i) {
        const double ai = alpha * a[i];
        if (ai == 0.0) continue;
        const float64x2_t vai = vdupq_n_f64(ai);
        const double* row = t.sign.data() + i * N;
        const bool swap = (i & 1u) != 0;
        const std::size_t high = i & ~std::size_t{1};
        for (std::size_t k = 0; k < N; k += 2) {
            float64x2_t bv = vld1q_f64(b + (k ^ high));
            if (swap) bv = vextq_f64(bv, bv, 1);
            float64x2_t sv = vmulq_f64(vai, vld1q_f64(row + k));
            vst1q_f64(out + k, vfmaq_f64(vld1q_f64(out + k), sv, bv));
        }
    }
}

void signed_accumulate_neon(std::size_t len, double alpha, const double* s, const double* x, double* out) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t k = 0;
    for (; k + 2 <= len; k += 2) {
        float64x2_t sv = vmulq_f64(va, vld1q_f64(s + k));
        vst1q_f64(out + k, vfmaq_f64(vld1q_f64(out + k), sv, vld1q_f64(x + k)));
    }
    for (; k < len; ++k) out[k] += alpha * s[k] * x[k];
}

}  // namespace clifford::kernels::detail

#endif
