#include "clifford/representations.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace clifford {

MatrixRep build_matrix_rep(const Signature& sig) {
    if (sig.degenerate()) domain_fail("matrix representation requires a nondegenerate signature");
    if (sig.n() > kRepMaxDimension) domain_fail("matrix representations are built for n <= 8");
    MatrixRep rep;
    rep.sig = sig;
    const int n = sig.n();
    if (n % 2 == 0) {
        rep.idempotents.push_back(primitive_idempotent<CRational>(sig));
    } else {
        MvCQ base = n == 1 ? MvCQ::identity(sig) : primitive_idempotent<CRational>(sig);
        for (int s : {1, -1}) {
            MvCQ t = base * central_projector<CRational>(sig, s);
            if (t * t != t || hermitian_conjugate(t) != t) internal_fail("block idempotent is not hermitian");
            rep.idempotents.push_back(t);
        }
    }
    for (const auto& t : rep.idempotents) {
        auto b = ideal_basis(t);
        rep.blocks.push_back(b.size());
        for (auto& v : b) rep.basis.push_back(std::move(v));
    }
    rep.dim = rep.basis.size();
    const std::size_t expected = std::size_t{1} << ((n + 1) / 2);
    if (rep.dim != expected)
        internal_fail("ideal basis of " + sig.to_string() + " has dimension " + std::to_string(rep.dim));

    rep.blade_images.reserve(sig.blade_count());
    for (Blade a = 0; a < sig.blade_count(); ++a) {
        Matrix<CRational> m(rep.dim, rep.dim);
        MvCQ ea = MvCQ::blade(sig, a);
        for (std::size_t l = 0; l < rep.dim; ++l) {
            MvCQ img = ea * rep.basis[l];
            for (std::size_t k = 0; k < rep.dim; ++k) m(k, l) = herm_scalar_product(rep.basis[k], img);
        }
        rep.blade_images.push_back(std::move(m));
        rep.blade_images_f.push_back(convert_matrix<Complex>(rep.blade_images.back()));
    }
    return rep;
}

std::shared_ptr<const MatrixRep> matrix_rep(const Signature& sig) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const MatrixRep>> cache;
    auto key = std::make_tuple(sig.p, sig.q, sig.r);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const MatrixRep>(build_matrix_rep(sig));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, built).first->second;
}

}  // namespace clifford
