#include "clifford/spinors.hpp"

#include <map>
#include <mutex>

namespace clifford {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

std::string conj_element_name(ConjElement k, int sign) {
    const char* base = k == ConjElement::A ? "A" : k == ConjElement::B ? "B" : "C";
    return std::string(base) + (sign > 0 ? "+" : "-");
}

bool conj_element_exists(const Signature& sig, ConjElement k, int sign) {
    if (sig.degenerate()) return false;
    const int n = sig.n();
    if (n % 2 == 0) return true;
    switch (k) {
        case ConjElement::A:
            // odd n: exactly one of p, q is odd
            return sign > 0 ? sig.p % 2 == 1 : sig.p % 2 == 0;
        case ConjElement::C:
            return sign > 0 ? mod(n, 4) == 1 : mod(n, 4) == 3;
        case ConjElement::B:
            return sign > 0 ? mod(sig.p - sig.q, 4) == 1 : mod(sig.p - sig.q, 4) == 3;
    }
    return false;
}

std::string conj_element_condition(ConjElement k, int sign) {
    switch (k) {
        case ConjElement::A: return sign > 0 ? "n even, or p odd and q even" : "n even, or p even and q odd";
        case ConjElement::C: return sign > 0 ? "n even or n = 1 mod 4" : "n even or n = 3 mod 4";
        case ConjElement::B: return sign > 0 ? "n even or p - q = 1 mod 4" : "n even or p - q = 3 mod 4";
    }
    return "";
}

namespace {

// + for residues {0,1,2}, - for {4,5,6} (upper sign); + for {0,6,7}, - for {2,3,4} (lower sign)
int mod8_sign(int d, int sign) {
    d = mod(d, 8);
    if (sign > 0) {
        if (d <= 2) return 1;
        if (d >= 4 && d <= 6) return -1;
        return 0;
    }
    if (d == 0 || d >= 6) return 1;
    if (d >= 2 && d <= 4) return -1;
    return 0;
}

}  // namespace

int lambda_table(int n, int sign) { return mod8_sign(n, sign); }
int epsilon_table(int p, int q, int sign) { return mod8_sign(p - q, sign); }

const std::optional<MvCQ>& SpinorSpaceInfo::element(ConjElement k, int sign) const {
    switch (k) {
        case ConjElement::A: return sign > 0 ? A_plus : A_minus;
        case ConjElement::B: return sign > 0 ? B_plus : B_minus;
        case ConjElement::C: return sign > 0 ? C_plus : C_minus;
    }
    internal_fail("unknown conjugation element");
}

MajoranaFlavor parse_majorana_flavor(const std::string& s) {
    if (s == "M") return MajoranaFlavor::M;
    if (s == "psM") return MajoranaFlavor::PseudoM;
    if (s == "LMW") return MajoranaFlavor::LeftMW;
    if (s == "RMW") return MajoranaFlavor::RightMW;
    domain_fail("unknown Majorana flavor '" + s + "' (expected M, psM, LMW or RMW)");
}

namespace {

// Real solution dimension of B conj(psi) = s kappa psi on the first ideal, optionally inside a Weyl half.
long majorana_dim_from(const Signature& sig, const MvCQ& b, int weyl) {
    const auto rep = matrix_rep(sig);
    const std::size_t d = rep->blocks.at(0);
    const auto mb = apply_rep(*rep, convert<Complex>(b));
    const auto mw = apply_rep(*rep, chirality<Complex>(sig));
    // B^dagger B is central, so a positive multiple of the identity on the first block
    const double mu = std::real((mb.adjoint() * mb)(0, 0));
    if (mu <= 0) internal_fail("B^dagger B is not positive");
    const double kappa = std::sqrt(mu);
    long best = 0;
    for (int s : {1, -1}) {
        const std::size_t rows = weyl ? 4 * d : 2 * d;
        Matrix<double> sys(rows, 2 * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const double mr = mb(i, j).real(), mi = mb(i, j).imag();
                sys(i, j) = mr;
                sys(i, d + j) = mi;
                sys(d + i, j) = mi;
                sys(d + i, d + j) = -mr;
                if (weyl) {
                    const double wr = mw(i, j).real(), wi = mw(i, j).imag();
                    sys(2 * d + i, j) = wr;
                    sys(2 * d + i, d + j) = -wi;
                    sys(3 * d + i, j) = wi;
                    sys(3 * d + i, d + j) = wr;
                }
            }
        for (std::size_t i = 0; i < 2 * d; ++i) {
            sys(i, i) -= s * kappa;
            if (weyl) sys(2 * d + i, i) -= weyl;
        }
        best = std::max(best, static_cast<long>(2 * d - rank(sys, 1e-9)));
    }
    return best;
}

SpinorSpaceInfo build_spinor_info(const Signature& sig) {
    if (sig.degenerate()) domain_fail("spinor spaces require r = 0");
    SpinorSpaceInfo info;
    info.sig = sig;
    info.omega = chirality<CRational>(sig);
    info.idempotent = matrix_rep(sig)->idempotents.at(0);
    info.weyl_exists = sig.n() % 2 == 0;
    for (int s : {1, -1}) {
        if (conj_element_exists(sig, ConjElement::A, s))
            (s > 0 ? info.A_plus : info.A_minus) = compute_A<CRational>(sig, s);
        if (conj_element_exists(sig, ConjElement::B, s)) {
            auto b = compute_B<CRational>(sig, s);
            (s > 0 ? info.epsilon_plus : info.epsilon_minus) = conj_square_sign(b);
            (s > 0 ? info.B_plus : info.B_minus) = std::move(b);
        }
        if (conj_element_exists(sig, ConjElement::C, s)) {
            auto c = compute_C<CRational>(sig, s);
            (s > 0 ? info.lambda_plus : info.lambda_minus) = transpose_sign(c);
            (s > 0 ? info.C_plus : info.C_minus) = std::move(c);
        }
    }
    if (info.B_minus) {
        info.majorana_dim = majorana_dim_from(sig, *info.B_minus, 0);
        if (info.weyl_exists) {
            info.left_mw_dim = majorana_dim_from(sig, *info.B_minus, -1);
            info.right_mw_dim = majorana_dim_from(sig, *info.B_minus, 1);
        }
    }
    if (info.B_plus) info.pseudo_majorana_dim = majorana_dim_from(sig, *info.B_plus, 0);
    info.majorana_exists = info.majorana_dim > 0;
    info.pseudo_majorana_exists = info.pseudo_majorana_dim > 0;
    info.majorana_weyl_exists = info.left_mw_dim > 0 || info.right_mw_dim > 0;
    return info;
}

}  // namespace

std::shared_ptr<const SpinorSpaceInfo> spinor_info(const Signature& sig) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const SpinorSpaceInfo>> cache;
    const auto key = std::make_tuple(sig.p, sig.q, sig.r);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const SpinorSpaceInfo>(build_spinor_info(sig));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, built).first->second;
}

long majorana_space_dim(const Signature& sig, MajoranaFlavor flavor) {
    const int need = flavor == MajoranaFlavor::PseudoM ? 1 : -1;
    if (sig.degenerate()) domain_fail("Majorana spinors require r = 0");
    if (!conj_element_exists(sig, ConjElement::B, need))
        domain_fail(conj_element_name(ConjElement::B, need) + " does not exist for " + sig.to_string() + ": it needs " +
                    conj_element_condition(ConjElement::B, need));
    if ((flavor == MajoranaFlavor::LeftMW || flavor == MajoranaFlavor::RightMW) && sig.n() % 2)
        domain_fail("Majorana-Weyl spinors need even n");
    const auto info = spinor_info(sig);
    switch (flavor) {
        case MajoranaFlavor::M: return info->majorana_dim;
        case MajoranaFlavor::PseudoM: return info->pseudo_majorana_dim;
        case MajoranaFlavor::LeftMW: return info->left_mw_dim;
        case MajoranaFlavor::RightMW: return info->right_mw_dim;
    }
    return 0;
}

}  // namespace clifford
