// cliff: command-line front end for the clifford library.
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "clifford/averaging.hpp"
#include "clifford/classification.hpp"
#include "clifford/dirac.hpp"
#include "clifford/io.hpp"

using namespace clifford;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kInternal = 3 };

struct Globals {
    std::string sig_text;
    std::string mode = "exact";
    std::string format = "text";
    double tol = 1e-9;

    Signature sig() const {
        if (sig_text.empty()) throw ParseError("--sig is required for this command");
        return parse_signature(sig_text);
    }
    bool json() const { return format == "json"; }
    bool exact() const { return mode == "exact" || mode == "real-exact" || mode == "complex-exact"; }
    bool force_complex() const { return mode == "complex-exact" || mode == "complex-float"; }
    bool force_real() const { return mode == "real-exact" || mode == "real-float"; }
};

Globals g;

template <class K>
struct Tag {
    using type = K;
};

// Picks the scalar type from --mode and whether the inputs mention i.
template <class F>
void dispatch(bool needs_complex, F&& f) {
    if (needs_complex && g.force_real()) throw ParseError("complex literal in real mode");
    const bool cx = needs_complex || g.force_complex();
    if (g.exact()) {
        if (cx)
            f(Tag<CRational>{});
        else
            f(Tag<Rational>{});
    } else {
        if (cx)
            f(Tag<Complex>{});
        else
            f(Tag<double>{});
    }
}

template <class F>
void dispatch_complex(F&& f) {
    if (g.force_real()) throw ParseError("this command works in a complex mode");
    if (g.exact())
        f(Tag<CRational>{});
    else
        f(Tag<Complex>{});
}

template <class F>
void dispatch_real(bool needs_complex, F&& f) {
    if (needs_complex || g.force_complex()) domain_fail("this command needs real coefficients");
    if (g.exact())
        f(Tag<Rational>{});
    else
        f(Tag<double>{});
}

bool any_imaginary(const std::vector<std::string>& args) {
    for (const auto& a : args)
        if (mentions_imaginary(a)) return true;
    return false;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

template <class K>
void print_element(const Multivector<K>& u) {
    if (g.json())
        print_json(element_to_json(u));
    else
        std::cout << format_element(u) << "\n";
}

template <class K>
void print_scalar(const K& x) {
    if (g.json())
        print_json(Json{{"value", format_scalar(x)}, {"mode", mode_name(Field<K>::mode)}});
    else
        std::cout << format_scalar(x) << "\n";
}

template <class K>
std::string matrix_text(const Matrix<K>& m) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i].push_back(format_scalar(m(i, j)));
            width = std::max(width, cells[i].back().size());
        }
    std::ostringstream os;
    for (const auto& row : cells) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << std::string(width - row[j].size(), ' ') << row[j];
        os << "]\n";
    }
    return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
}

template <class R>
dirac::FourVector<R> parse_four_vector(const std::string& text, const char* what) {
    auto parts = split(text, ',');
    if (parts.size() != 4) throw ParseError(std::string(what) + " needs four comma-separated components");
    dirac::FourVector<R> v;
    for (int k = 0; k < 4; ++k) v[k] = parse_element<R>(parts[k], Signature(0, 0)).scalar_part();
    return v;
}

// ---- commands ---------------------------------------------------------------------

void cmd_classify() {
    const Signature sig = g.sig();
    const auto c = cartan_class(sig);
    const auto ext = exterior_signature_closed_form(sig);
    std::vector<long> dims;
    for (int j = 0; j < 4; ++j) dims.push_back(quaternion_type_dimension_count(sig.n(), j));
    if (g.json()) {
        print_json(Json{{"signature", signature_to_json(sig)},
                        {"class", c.matrix_name()},
                        {"short", c.short_name()},
                        {"exterior_signature", {ext.positive, ext.negative}},
                        {"quaternion_type_dims", dims}});
        return;
    }
    std::cout << c.matrix_name() << "\n";
    std::cout << "short: " << c.short_name() << "\n";
    std::cout << "exterior signature: (" << ext.positive << ", " << ext.negative << ")\n";
    std::cout << "quaternion type dims:";
    for (int j = 0; j < 4; ++j) std::cout << " " << j << ":" << dims[j];
    std::cout << "\n";
}

using Unary = std::function<void(const std::string&)>;

template <class Op>
void unary_element(const std::vector<std::string>& args, Op op) {
    if (args.size() != 1) throw ParseError("expected exactly one element");
    const Signature sig = g.sig();
    dispatch(any_imaginary(args), [&](auto tag) {
        using K = typename decltype(tag)::type;
        op(parse_element<K>(args[0], sig));
    });
}

template <class Op>
void binary_element(const std::vector<std::string>& args, Op op) {
    if (args.size() != 2) throw ParseError("expected exactly two elements");
    const Signature sig = g.sig();
    dispatch(any_imaginary(args), [&](auto tag) {
        using K = typename decltype(tag)::type;
        op(parse_element<K>(args[0], sig), parse_element<K>(args[1], sig));
    });
}

void cmd_avg(const std::vector<std::string>& args, const std::string& kind, int m) {
    unary_element(args, [&](const auto& u) {
        if (kind == "center")
            print_element(reynolds_center(u));
        else if (kind == "even")
            print_element(avg_even(u));
        else if (kind == "odd")
            print_element(avg_odd(u));
        else if (kind == "m") {
            if (m < 0) throw ParseError("--kind m needs --m");
            print_element(avg_grade_m(u, m));
        } else
            throw ParseError("--kind must be center, even, odd or m");
    });
}

void cmd_idempotent() {
    const auto rep = matrix_rep(g.sig());
    if (g.json()) {
        Json arr = Json::array();
        for (const auto& t : rep->idempotents) arr.push_back(element_to_json(t));
        print_json(Json{{"idempotents", arr}});
        return;
    }
    for (const auto& t : rep->idempotents) std::cout << format_element(t) << "\n";
}

void cmd_rep(const std::string& export_path) {
    const auto rep = matrix_rep(g.sig());
    const Json j = rep_to_json(*rep);
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) throw ParseError("cannot write '" + export_path + "'");
        out << j.dump(2) << "\n";
    }
    if (g.json()) {
        print_json(j);
        return;
    }
    std::cout << "dim: " << rep->dim << "\nblocks:";
    for (auto b : rep->blocks) std::cout << " " << b;
    std::cout << "\n";
    for (const auto& t : rep->idempotents) std::cout << "idempotent: " << format_element(t) << "\n";
    for (int a = 1; a <= rep->sig.n(); ++a) std::cout << blade_name(generator_bit(a), rep->sig.n()) << ":\n" << matrix_text(rep->generator(a));
}

void cmd_pauli(const std::string& betas_text, const std::string& gammas_text) {
    const Signature sig = g.sig();
    const auto bt = split(betas_text, ';'), gt = split(gammas_text, ';');
    if (int(bt.size()) != sig.n() || int(gt.size()) != sig.n())
        throw ParseError("--betas and --gammas need n = " + std::to_string(sig.n()) + " elements separated by ';'");
    std::vector<std::string> all(bt);
    all.insert(all.end(), gt.begin(), gt.end());
    dispatch(any_imaginary(all), [&](auto tag) {
        using K = typename decltype(tag)::type;
        std::vector<Multivector<K>> betas, gammas;
        for (const auto& s : bt) betas.push_back(parse_element<K>(s, sig));
        for (const auto& s : gt) gammas.push_back(parse_element<K>(s, sig));
        auto r = compute_pauli_T(sig, betas, gammas, g.tol);
        if (g.json()) {
            print_json(Json{{"T", element_to_json(r.T)},
                            {"case", pauli_case_name(r.case_id)},
                            {"central", element_to_json(r.central)},
                            {"candidate", r.candidate}});
            return;
        }
        std::cout << "T: " << format_element(r.T) << "\ncase: " << pauli_case_name(r.case_id)
                  << "\ncentral: " << format_element(r.central) << "\ncandidate: " << r.candidate << "\n";
    });
}

void cmd_lift(const std::string& path, bool unnormalized) {
    const Json j = read_json_file(path);
    dispatch_real(false, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto m = ortho_from_json<K>(j);
        const auto t = unnormalized ? lift_orthogonal_unnormalized(m, g.tol) : lift_orthogonal(m, g.tol);
        print_element(t);
    });
}

void cmd_adjoint(const std::vector<std::string>& args, bool plain) {
    if (args.size() != 1) throw ParseError("expected exactly one element");
    const Signature sig = g.sig();
    dispatch_real(any_imaginary(args), [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto u = parse_element<K>(args[0], sig);
        const auto m = plain ? adjoint_matrix(u, g.tol) : twisted_adjoint_matrix(u, g.tol);
        if (g.json())
            print_json(ortho_to_json(m));
        else
            std::cout << matrix_text(m.P);
    });
}

void cmd_member(const std::vector<std::string>& args, const std::string& group) {
    if (group.empty()) throw ParseError("--group is required");
    const GroupId id = parse_group_id(group);
    unary_element(args, [&](const auto& u) {
        const auto res = group_membership(u, id, g.tol);
        if (g.json()) {
            print_json(Json{{"group", id.name}, {"member", res.member}, {"reason", res.reason}});
            return;
        }
        std::cout << (res.member ? "true" : "false") << "\n";
        if (!res.reason.empty()) std::cout << "reason: " << res.reason << "\n";
    });
}

void cmd_component(const std::vector<std::string>& args) {
    if (args.size() != 1) throw ParseError("expected exactly one element");
    const Signature sig = g.sig();
    dispatch_real(any_imaginary(args), [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto info = component_of(parse_element<K>(args[0], sig), g.tol);
        if (g.json()) {
            print_json(Json{{"component", component_name(info.tag)},
                            {"spin_component", spin_component_name(info.tag)},
                            {"norm_sq", format_scalar(info.norm_sq)},
                            {"upper_minor", format_scalar(info.upper)},
                            {"lower_minor", format_scalar(info.lower)},
                            {"matrix", matrix_to_json(info.matrix.P)}});
            return;
        }
        std::cout << component_name(info.tag) << "\nspin component: " << spin_component_name(info.tag)
                  << "\nnorm^2: " << format_scalar(info.norm_sq) << "\nupper minor: " << format_scalar(info.upper)
                  << "\nlower minor: " << format_scalar(info.lower) << "\n"
                  << matrix_text(info.matrix.P);
    });
}

void cmd_spin_class(const std::string& group) {
    const Signature sig = g.sig();
    const std::string name = liegroup_class_lookup(sig, group);
    if (g.json())
        print_json(Json{{"signature", signature_to_json(sig)}, {"group", group}, {"class", name}});
    else
        std::cout << name << "\n";
}

void cmd_spinor_info() {
    const auto info = spinor_info(g.sig());
    auto elem = [&](const std::optional<MvCQ>& x) -> Json { return x ? element_to_json(*x) : Json(nullptr); };
    if (g.json()) {
        print_json(Json{{"signature", signature_to_json(info->sig)},
                        {"omega", element_to_json(info->omega)},
                        {"idempotent", element_to_json(info->idempotent)},
                        {"weyl_exists", info->weyl_exists},
                        {"A+", elem(info->A_plus)},
                        {"A-", elem(info->A_minus)},
                        {"B+", elem(info->B_plus)},
                        {"B-", elem(info->B_minus)},
                        {"C+", elem(info->C_plus)},
                        {"C-", elem(info->C_minus)},
                        {"lambda", {info->lambda_plus, info->lambda_minus}},
                        {"epsilon", {info->epsilon_plus, info->epsilon_minus}},
                        {"majorana_exists", info->majorana_exists},
                        {"pseudo_majorana_exists", info->pseudo_majorana_exists},
                        {"majorana_weyl_exists", info->majorana_weyl_exists},
                        {"dims", {{"M", info->majorana_dim},
                                  {"psM", info->pseudo_majorana_dim},
                                  {"LMW", info->left_mw_dim},
                                  {"RMW", info->right_mw_dim}}}});
        return;
    }
    auto line = [](const char* name, const std::optional<MvCQ>& x) {
        std::cout << name << ": " << (x ? format_element(*x) : std::string("does not exist")) << "\n";
    };
    std::cout << "omega: " << format_element(info->omega) << "\n";
    std::cout << "idempotent: " << format_element(info->idempotent) << "\n";
    std::cout << "weyl: " << (info->weyl_exists ? "yes" : "no") << "\n";
    line("A+", info->A_plus);
    line("A-", info->A_minus);
    line("B+", info->B_plus);
    line("B-", info->B_minus);
    line("C+", info->C_plus);
    line("C-", info->C_minus);
    auto sgn = [](int s) { return s == 0 ? std::string("-") : (s > 0 ? "+1" : "-1"); };
    std::cout << "lambda+/-: " << sgn(info->lambda_plus) << " " << sgn(info->lambda_minus) << "\n";
    std::cout << "epsilon+/-: " << sgn(info->epsilon_plus) << " " << sgn(info->epsilon_minus) << "\n";
    std::cout << "majorana: " << (info->majorana_exists ? "yes" : "no") << " (dim " << info->majorana_dim << ")\n";
    std::cout << "pseudo-majorana: " << (info->pseudo_majorana_exists ? "yes" : "no") << " (dim " << info->pseudo_majorana_dim
              << ")\n";
    std::cout << "majorana-weyl: " << (info->majorana_weyl_exists ? "yes" : "no") << " (L " << info->left_mw_dim << ", R "
              << info->right_mw_dim << ")\n";
}

// dirac text uses e0..e3 for e^0..e^3; internally these are e1..e4 of Cl(1,3).
// Blade tokens are 'e' followed by a digit or '{'; exponents are always followed by a sign.
std::string shift_labels(const std::string& text, int delta) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        out += text[i];
        if (text[i] != 'e' || i + 1 >= text.size()) continue;
        if (std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            while (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))
                out += char(text[++i] + delta);
        } else if (text[i + 1] == '{') {
            std::size_t close = text.find('}', i);
            if (close == std::string::npos) continue;
            out += '{';
            auto parts = split(text.substr(i + 2, close - i - 2), ',');
            for (std::size_t k = 0; k < parts.size(); ++k) {
                int v = 0;
                auto [ptr, ec] = std::from_chars(parts[k].data(), parts[k].data() + parts[k].size(), v);
                out += (k ? "," : "") + (ec == std::errc() && ptr == parts[k].data() + parts[k].size()
                                             ? std::to_string(v + delta)
                                             : parts[k]);
            }
            out += '}';
            i = close;
        }
    }
    return out;
}

template <class K>
std::string spacetime_text(const Multivector<K>& u) {
    return shift_labels(format_element(u), -1);
}

void cmd_dirac(const std::string& p_text, const std::string& m_text, const std::string& psi_text, const std::string& check,
               const std::string& k_text, const std::string& matrix_path, bool off_shell) {
    if (!g.sig_text.empty() && parse_signature(g.sig_text) != dirac::minkowski())
        domain_fail("dirac works in Cl(1,3) only");
    dispatch_complex([&](auto tag) {
        using CK = typename decltype(tag)::type;
        using R = real_of<CK>;
        const auto p = parse_four_vector<R>(p_text, "--p");
        const R m = parse_element<R>(m_text, Signature(0, 0)).scalar_part();
        Multivector<CK> psi(dirac::minkowski());
        if (psi_text.empty()) {
            psi = dirac::plane_wave_dirac<CK>(p, m, !off_shell, g.tol);
        } else {
            try {
                psi = parse_element<CK>(shift_labels(psi_text, 1), dirac::minkowski());
            } catch (const SyntaxError& e) {
                throw ParseError("--psi: syntax error at column " + std::to_string(e.column) + " (labels are e0..e3)");
            }
        }
        const auto big = dirac::hestenes_form(psi);
        const R dr = dirac::dirac_residual(psi, p, m), hr = dirac::dh_residual(big, p, m);
        Json out{{"labels", "coeff keys are 1-based: key a is e^(a-1)"},
                 {"psi0", element_to_json(psi)},
                 {"Psi0", element_to_json(big)},
                 {"dirac_residual", format_scalar(dr)},
                 {"dh_residual", format_scalar(hr)},
                 {"current_conserved", dirac::current_conservation_holds(psi, p, m, g.tol)}};
        std::optional<Multivector<R>> lorentz_s;
        if (check == "gauge") {
            const auto k = k_text.empty() ? dirac::FourVector<R>{1, 0, 0, 0} : parse_four_vector<R>(k_text, "--k");
            out["gauge_invariant"] = dirac::gauge_check(psi, p, m, k, g.tol);
        } else if (check == "lorentz") {
            Matrix<R> lam(4, 4);
            if (matrix_path.empty()) {
                // default: boost along x with cosh = 5/4, sinh = 3/4
                lam(0, 0) = lam(1, 1) = Field<R>::from_rational(Rational(5, 4));
                lam(0, 1) = lam(1, 0) = Field<R>::from_rational(Rational(3, 4));
                lam(2, 2) = lam(3, 3) = Field<R>::one();
            } else {
                lam = matrix_from_json<R>(read_json_file(matrix_path).at("matrix"));
            }
            out["lorentz_invariant"] = dirac::relativistic_check(lam, g.tol);
            lorentz_s = dirac::lorentz_spinor(lam, g.tol);
            out["S"] = element_to_json(*lorentz_s);
        } else if (!check.empty()) {
            throw ParseError("--check must be gauge or lorentz");
        }
        if (g.json()) {
            print_json(out);
            return;
        }
        auto yes = [&](const char* key) { return out[key].template get<bool>() ? "true" : "false"; };
        std::cout << "psi0: " << spacetime_text(psi) << "\nPsi0: " << spacetime_text(big)
                  << "\ndirac residual: " << format_scalar(dr) << "\ndirac-hestenes residual: " << format_scalar(hr)
                  << "\ncurrent conserved: " << yes("current_conserved") << "\n";
        if (out.contains("gauge_invariant")) std::cout << "gauge invariant: " << yes("gauge_invariant") << "\n";
        if (lorentz_s)
            std::cout << "lorentz invariant: " << yes("lorentz_invariant") << "\nS: " << spacetime_text(*lorentz_s) << "\n";
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford algebra calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--sig", g.sig_text, "signature p,q[,r]");
    app.add_option("--mode", g.mode, "exact | float | real-exact | complex-exact | real-float | complex-float")
        ->check(CLI::IsMember({"exact", "float", "real-exact", "complex-exact", "real-float", "complex-float"}));
    app.add_option("--format", g.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tol", g.tol, "tolerance for float comparisons");

    std::function<void()> action;
    std::vector<std::string> elems;

    auto elem_cmd = [&](const std::string& name, const std::string& help, std::function<void()> fn) {
        auto* sc = app.add_subcommand(name, help);
        sc->add_option("elements", elems, "element expressions")->required();
        sc->callback([&action, fn] { action = fn; });
        return sc;
    };

    app.add_subcommand("classify", "Cartan class, exterior signature and quaternion-type dimensions")
        ->callback([&] { action = cmd_classify; });
    elem_cmd("mul", "geometric product A B", [&] { binary_element(elems, [](const auto& a, const auto& b) { print_element(a * b); }); });
    elem_cmd("add", "sum A + B", [&] { binary_element(elems, [](const auto& a, const auto& b) { print_element(a + b); }); });
    elem_cmd("inv", "inverse", [&] { unary_element(elems, [](const auto& u) { print_element(inverse(u, g.tol)); }); });
    elem_cmd("det", "determinant", [&] { unary_element(elems, [](const auto& u) { print_scalar(determinant(u)); }); });
    elem_cmd("trace", "trace (scalar part)", [&] { unary_element(elems, [](const auto& u) { print_scalar(trace(u)); }); });
    elem_cmd("herm", "Hermitian conjugate", [&] { unary_element(elems, [](const auto& u) { print_element(hermitian_conjugate(u)); }); });
    elem_cmd("rev", "reversion", [&] { unary_element(elems, [](const auto& u) { print_element(reversion(u)); }); });
    elem_cmd("gradeinv", "grade involution", [&] { unary_element(elems, [](const auto& u) { print_element(grade_involution(u)); }); });
    elem_cmd("conj", "Clifford conjugation", [&] { unary_element(elems, [](const auto& u) { print_element(clifford_conjugation(u)); }); });

    int k = -1;
    elem_cmd("grade", "projection onto grade k", [&] {
        unary_element(elems, [&](const auto& u) { print_element(grade_part(u, k)); });
    })->add_option("--k", k, "grade")->required();
    int j = -1;
    elem_cmd("qtype", "projection onto quaternion type j", [&] {
        if (j < 0 || j > 3) throw ParseError("--j must be 0..3");
        unary_element(elems, [&](const auto& u) { print_element(quaternion_type_part(u, j)); });
    })->add_option("--j", j, "quaternion type 0..3")->required();
    std::string kind;
    int avg_m = -1;
    auto* avg = elem_cmd("avg", "averaging operators", [&] { cmd_avg(elems, kind, avg_m); });
    avg->add_option("--kind", kind, "center | even | odd | m")->required();
    avg->add_option("--m", avg_m, "grade for --kind m");

    app.add_subcommand("idempotent", "primitive idempotent(s) of the representation")->callback([&] { action = cmd_idempotent; });
    std::string export_path;
    app.add_subcommand("rep", "matrix representation")
        ->callback([&] { action = [&] { cmd_rep(export_path); }; })
        ->add_option("--export", export_path, "write the representation as JSON");

    std::string betas, gammas;
    auto* pauli = app.add_subcommand("pauli", "T with gamma_a = c T^{-1} beta_a T");
    pauli->add_option("--betas", betas, "n elements separated by ';'")->required();
    pauli->add_option("--gammas", gammas, "n elements separated by ';'")->required();
    pauli->callback([&] { action = [&] { cmd_pauli(betas, gammas); }; });

    std::string matrix_path;
    bool unnormalized = false;
    auto* lift = app.add_subcommand("lift", "spin lift of an orthogonal matrix");
    lift->add_option("--matrix", matrix_path, "JSON file {\"signature\":[p,q],\"matrix\":[[...]]}")->required();
    lift->add_flag("--unnormalized", unnormalized, "skip the normalisation");
    lift->callback([&] { action = [&] { cmd_lift(matrix_path, unnormalized); }; });

    bool plain = false;
    std::string adj_elem;
    auto* adj = app.add_subcommand("adjoint", "matrix of the twisted adjoint action on vectors");
    adj->add_option("--element,element", adj_elem, "element")->required();
    adj->add_flag("--plain", plain, "untwisted adjoint (even elements)");
    adj->callback([&] { action = [&] { cmd_adjoint({adj_elem}, plain); }; });

    std::string group;
    elem_cmd("member", "group membership with the failing condition", [&] { cmd_member(elems, group); })
        ->add_option("--group", group, "Pin, Spin, Pin+, Pin-, Spin+, Lipschitz, Clifford-group, UCl, row names or row:k")
        ->required();
    elem_cmd("component", "connected component of a Pin element", [&] { cmd_component(elems); });

    std::string spin_group = "Spin+";
    app.add_subcommand("spin-class", "classical group isomorphic to Spin+ (or G2)")
        ->callback([&] { action = [&] { cmd_spin_class(spin_group); }; })
        ->add_option("--group", spin_group, "Spin+ | G2 | row:16");
    app.add_subcommand("spinor-info", "chirality, conjugation elements and Majorana existence")
        ->callback([&] { action = cmd_spinor_info; });

    std::string p_text, m_text, psi_text, check, k_text, dirac_matrix;
    bool off_shell = false;
    auto* dirac_cmd = app.add_subcommand("dirac", "plane-wave Dirac and Dirac-Hestenes check in Cl(1,3)");
    dirac_cmd->add_option("--p", p_text, "contravariant momentum E,px,py,pz")->required();
    dirac_cmd->add_option("--m", m_text, "mass")->required();
    dirac_cmd->add_option("--psi", psi_text, "spinor to test instead of the plane wave, labels e0..e3");
    dirac_cmd->add_option("--check", check, "gauge | lorentz");
    dirac_cmd->add_option("--k", k_text, "covariant gauge vector for --check gauge (default 1,0,0,0)");
    dirac_cmd->add_option("--matrix", dirac_matrix, "JSON file with a 4x4 \"matrix\" for --check lorentz");
    dirac_cmd->add_flag("--allow-off-shell", off_shell, "build the spinor even when p.p != m^2");
    dirac_cmd->callback([&] { action = [&] { cmd_dirac(p_text, m_text, psi_text, check, k_text, dirac_matrix, off_shell); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (action) action();
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
