#include "clifford/kernels.hpp"

namespace clifford::kernels::detail {

void dense_product_scalar(const ProductTable& t, double alpha, const double* a, const double* b, double* out) {
    const std::size_t N = t.size;
    for (std::size_t i = 0; i < N; ++i) {
        const double ai = alpha * a[i];
        if (ai == 0.0) continue;
        const double* row = t.sign.data() + i * N;
        for (std::size_t k = 0; k < N; ++k) out[k] += ai * row[k] * b[i ^ k];
    }
}

void signed_accumulate_scalar(std::size_t len, double alpha, const double* s, const double* x, double* out) {
    for (std::size_t k = 0; k < len; ++k) out[k] += alpha * s[k] * x[k];
}

}  // namespace clifford::kernels::detail
