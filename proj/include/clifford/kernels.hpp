#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "clifford/signature.hpp"

namespace clifford::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
// Overrides runtime selection; throws DomainError when the backend is unavailable.
void set_backend(Backend b);

// Largest dimension served by the dense tables (2^n x 2^n doubles).
inline constexpr int kDenseMaxDimension = 10;

// row i, column k holds the sign of e_i * e_{i^k} (so the product lands on blade k)
struct ProductTable {
    int n = 0;
    std::size_t size = 0;
    std::vector<double> sign;
};

std::shared_ptr<const ProductTable> product_table(const Signature& sig);

// out[k] += alpha * sum_i sign(i, i^k) * a[i] * b[i^k]
void dense_product_accumulate(const ProductTable& t, double alpha, const double* a, const double* b, double* out);

// out[k] += alpha * s[k] * x[k]
void signed_accumulate(std::size_t len, double alpha, const double* s, const double* x, double* out);

namespace detail {
void dense_product_scalar(const ProductTable& t, double alpha, const double* a, const double* b, double* out);
void signed_accumulate_scalar(std::size_t len, double alpha, const double* s, const double* x, double* out);
#if defined(__x86_64__) || defined(_M_X64)
void dense_product_avx2(const ProductTable& t, double alpha, const double* a, const double* b, double* out);
void signed_accumulate_avx2(std::size_t len, double alpha, const double* s, const double* x, double* out);
#endif
#if defined(__ARM_NEON)
void dense_product_neon(const ProductTable& t, double alpha, const double* a, const double* b, double* out);
void signed_accumulate_neon(std::size_t len, double alpha, const double* s, const double* x, double* out);
#endif
}  // namespace detail

}  // namespace clifford::kernels
