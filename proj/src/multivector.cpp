#include "clifford/multivector.hpp"

namespace clifford::detail {

namespace {

void scatter(const MvF& u, std::vector<double>& out) {
    for (const auto& t : u.terms()) out[t.blade] = t.coeff;
}

void scatter(const MvCF& u, std::vector<double>& re, std::vector<double>& im) {
    for (const auto& t : u.terms()) {
        re[t.blade] = t.coeff.real();
        im[t.blade] = t.coeff.imag();
    }
}

}  // namespace

MvF dense_product(const MvF& a, const MvF& b) {
    const Signature& sig = a.signature();
    auto table = kernels::product_table(sig);
    const std::size_t N = sig.blade_count();
    std::vector<double> x(N, 0.0), y(N, 0.0), out(N, 0.0);
    scatter(a, x);
    scatter(b, y);
    kernels::dense_product_accumulate(*table, 1.0, x.data(), y.data(), out.data());
    return MvF::from_dense(sig, out);
}

MvCF dense_product(const MvCF& a, const MvCF& b) {
    const Signature& sig = a.signature();
    auto table = kernels::product_table(sig);
    const std::size_t N = sig.blade_count();
    std::vector<double> ar(N, 0.0), ai(N, 0.0), br(N, 0.0), bi(N, 0.0), re(N, 0.0), im(N, 0.0);
    scatter(a, ar, ai);
    scatter(b, br, bi);
    kernels::dense_product_accumulate(*table, 1.0, ar.data(), br.data(), re.data());
    kernels::dense_product_accumulate(*table, -1.0, ai.data(), bi.data(), re.data());
    kernels::dense_product_accumulate(*table, 1.0, ar.data(), bi.data(), im.data());
    kernels::dense_product_accumulate(*table, 1.0, ai.data(), br.data(), im.data());
    std::vector<Complex> v(N);
    for (std::size_t k = 0; k < N; ++k) v[k] = Complex(re[k], im[k]);
    return MvCF::from_dense(sig, v);
}

}  // namespace clifford::detail
