#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>

#include "clifford/kernels.hpp"

namespace clifford::kernels {

namespace {

Backend detect() {
    if (const char* env = std::getenv("CLIFFORD_KERNEL")) {
        std::string v = env;
        if (v == "scalar") return Backend::Scalar;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::Avx2;
#endif
#if defined(__ARM_NEON)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect()};
    return b;
}

}  // namespace

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__ARM_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b)) domain_fail("kernel backend " + backend_name(b) + " is not available on this CPU");
    current().store(b, std::memory_order_relaxed);
}

std::shared_ptr<const ProductTable> product_table(const Signature& sig) {
    if (sig.n() > kDenseMaxDimension) domain_fail("dense product tables are limited to n <= 10");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const ProductTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(sig.p, sig.q, sig.r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<ProductTable>();
    t->n = sig.n();
    t->size = sig.blade_count();
    t->sign.resize(t->size * t->size);
    for (std::size_t i = 0; i < t->size; ++i)
        for (std::size_t k = 0; k < t->size; ++k)
            t->sign[i * t->size + k] = blade_product(sig, Blade(i), Blade(i ^ k)).sign;
    cache.emplace(key, t);
    return t;
}

void dense_product_accumulate(const ProductTable& t, double alpha, const double* a, const double* b, double* out) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2: detail::dense_product_avx2(t, alpha, a, b, out); return;
#endif
#if defined(__ARM_NEON)
        case Backend::Neon: detail::dense_product_neon(t, alpha, a, b, out); return;
#endif
        default: detail::dense_product_scalar(t, alpha, a, b, out); return;
    }
}

void signed_accumulate(std::size_t len, double alpha, const double* s, const double* x, double* out) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2: detail::signed_accumulate_avx2(len, alpha, s, x, out); return;
#endif
#if defined(__ARM_NEON)
        case Backend::Neon: detail::signed_accumulate_neon(len, alpha, s, x, out); return;
#endif
        default: detail::signed_accumulate_scalar(len, alpha, s, x, out); return;
    }
}

}  // namespace clifford::kernels
