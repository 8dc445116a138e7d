// Command-line front end for the Bihom-Lie algebra workbench.
//
// Exit codes: 0 all requested checks pass, 1 a mathematical check failed
// (witness printed), 2 input or usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bihom/bihom.hpp"

namespace {

using namespace bihom;

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

std::string term(const Rational& c, std::size_t k) {
    std::string s = to_string(c);
    return s + " e" + std::to_string(k + 1);
}

std::string format_combo(const Vec& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        if (out.empty()) {
            out += term(v[k], k);
        } else if (v[k] < 0) {
            out += " - " + term(-v[k], k);
        } else {
            out += " + " + term(v[k], k);
        }
    }
    return out.empty() ? "0" : out;
}

std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

void print_bracket_table(const StructureTensor& t, const std::string& op) {
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            std::cout << "  " << op << "e" << i + 1 << ", e" << j + 1
                      << (op == "[" ? "]" : "}") << " = " << format_combo(t.of_basis(i, j))
                      << "\n";
}

void print_matrix(const Matrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::cout << (j ? ", " : " ") << to_string(m(i, j));
        std::cout << " ]\n";
    }
}

void print_report(const AxiomReport& r) {
    std::cout << "commuting twists : " << pass_fail(r.commuting_twists) << "\n";
    std::cout << "skew-symmetry    : " << pass_fail(r.skew_symmetry);
    if (r.skew_witness)
        std::cout << "  at (e" << r.skew_witness->i + 1 << ", e" << r.skew_witness->j + 1
                  << "), defect = " << format_combo(r.skew_witness->defect);
    std::cout << "\n";
    std::cout << "Bihom-Jacobi     : " << pass_fail(r.bihom_jacobi);
    if (r.jacobi_witness)
        std::cout << "  at (e" << r.jacobi_witness->i + 1 << ", e" << r.jacobi_witness->j + 1
                  << ", e" << r.jacobi_witness->k + 1
                  << "), defect = " << format_combo(r.jacobi_witness->defect);
    std::cout << "\n";
    std::cout << "multiplicative   : alpha " << pass_fail(r.multiplicative.alpha_ok)
              << ", beta " << pass_fail(r.multiplicative.beta_ok) << "\n";
    std::cout << "regular          : alpha " << pass_fail(r.regular.alpha_ok) << ", beta "
              << pass_fail(r.regular.beta_ok) << "\n";
}

void print_assoc_report(const AssocAxiomReport& r) {
    std::cout << "commuting twists     : " << pass_fail(r.commuting_twists) << "\n";
    std::cout << "Bihom-associativity  : " << pass_fail(r.associativity);
    if (r.assoc_witness)
        std::cout << "  at (e" << r.assoc_witness->i + 1 << ", e" << r.assoc_witness->j + 1
                  << ", e" << r.assoc_witness->k + 1
                  << "), defect = " << format_combo(r.assoc_witness->defect);
    std::cout << "\n";
    std::cout << "multiplicative       : alpha " << pass_fail(r.multiplicative.alpha_ok)
              << ", beta " << pass_fail(r.multiplicative.beta_ok) << "\n";
    std::cout << "regular              : alpha " << pass_fail(r.regular.alpha_ok)
              << ", beta " << pass_fail(r.regular.beta_ok) << "\n";
}

std::string resolve_output(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    if (const char* dir = std::getenv("BIHOM_OUTPUT_DIR"))
        return std::string(dir) + "/" + path;
    return path;
}

void emit_if_requested(const std::string& emit_path, const BihomLieAlgebra& L,
                       const std::string& name) {
    if (emit_path.empty()) return;
    AlgebraFile f{name, AlgebraKind::lie, L.dim, L.bracket, L.alpha, L.beta};
    write_file(resolve_output(emit_path), emit_algebra(f));
}

/// Representation spec: "trivial", "adjoint:S,T", or a representation file path.
Representation resolve_representation(const std::string& spec, const BihomLieAlgebra& L) {
    if (spec == "trivial") return trivial_representation(L);
    if (spec.rfind("adjoint:", 0) == 0) {
        const std::string args = spec.substr(8);
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw InvalidParamsError("adjoint spec must be adjoint:S,T");
        long s = 0, t = 0;
        try {
            s = std::stol(args.substr(0, comma));
            t = std::stol(args.substr(comma + 1));
        } catch (const std::exception&) {
            throw InvalidParamsError("adjoint spec must be adjoint:S,T with integer S, T");
        }
        return adjoint_representation(L, s, t);
    }
    const Representation rep = load_representation(spec).bind(L);
    const auto check = check_representation(rep);
    if (!check.all_pass())
        throw InvalidRepresentationError(spec +
                                         ": representation fails the Def-4.1 identities");
    return rep;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic workbench for finite-dimensional Bihom-Lie algebras"};
    app.require_subcommand(1);

    // ---- check ----
    std::string check_file;
    bool req_mult = false, req_reg = false;
    auto* cmd_check = app.add_subcommand("check", "Verify the Bihom-Lie axioms of an algebra file");
    cmd_check->add_option("file", check_file, "algebra file (kind \"lie\")")->required();
    cmd_check->add_flag("--require-multiplicative", req_mult,
                        "also require alpha, beta to be bracket homomorphisms");
    cmd_check->add_flag("--require-regular", req_reg, "also require alpha, beta bijective");

    // ---- check-assoc ----
    std::string assoc_file;
    auto* cmd_assoc =
        app.add_subcommand("check-assoc", "Verify the Bihom-associative axioms");
    cmd_assoc->add_option("file", assoc_file, "algebra file (kind \"associative\")")->required();

    // ---- commutator ----
    std::string comm_file, comm_emit;
    auto* cmd_comm = app.add_subcommand(
        "commutator", "Commutator Bihom-Lie algebra L(A) of a Bihom-associative algebra");
    cmd_comm->add_option("file", comm_file, "associative algebra file")->required();
    cmd_comm->add_option("--emit", comm_emit, "write the resulting algebra file");

    // ---- twist ----
    std::string twist_file, twist_emit;
    auto* cmd_twist = app.add_subcommand(
        "twist", "Yau twist {a,b} = [alpha(a), beta(b)] of an ordinary Lie algebra");
    cmd_twist->add_option("file", twist_file, "Lie algebra file with twist maps attached")
        ->required();
    cmd_twist->add_option("--emit", twist_emit, "write the resulting algebra file");

    // ---- dsum ----
    std::string dsum_a, dsum_b, dsum_emit;
    auto* cmd_dsum = app.add_subcommand("dsum", "Direct sum of two Bihom-Lie algebras");
    cmd_dsum->add_option("first", dsum_a, "algebra file")->required();
    cmd_dsum->add_option("second", dsum_b, "algebra file")->required();
    cmd_dsum->add_option("--emit", dsum_emit, "write the resulting algebra file");

    // ---- semidirect ----
    std::string sd_file, sd_rep, sd_emit;
    auto* cmd_sd = app.add_subcommand("semidirect", "Semidirect product along a representation");
    cmd_sd->add_option("file", sd_file, "algebra file")->required();
    cmd_sd->add_option("--rep", sd_rep, "trivial | adjoint:S,T | representation file")
        ->required();
    cmd_sd->add_option("--emit", sd_emit, "write the resulting algebra file");

    // ---- extend-derivation ----
    std::string ed_file, ed_matrix, ed_emit;
    long ed_index = 0;
    auto* cmd_ed = app.add_subcommand(
        "extend-derivation",
        "Extension L + K·D; valid exactly when D is an alpha^0 beta^1-derivation");
    cmd_ed->add_option("file", ed_file, "algebra file")->required();
    cmd_ed->add_option("--matrix", ed_matrix, "JSON 2D array for D (default: computed basis element)");
    cmd_ed->add_option("--basis-index", ed_index,
                       "which basis element of Der_{alpha^0 beta^1}(L) to use");
    cmd_ed->add_option("--emit", ed_emit, "write the resulting algebra file");

    // ---- extend-central ----
    std::string ec_file, ec_theta, ec_emit;
    auto* cmd_ec = app.add_subcommand(
        "extend-central", "Central extension by a compatible antisymmetric 2-cochain");
    cmd_ec->add_option("file", ec_file, "algebra file")->required();
    cmd_ec->add_option("--theta", ec_theta, "JSON 2D array of theta(e_i,e_j)")->required();
    cmd_ec->add_option("--emit", ec_emit, "write the resulting algebra file");

    // ---- iso-extensions ----
    std::string ie_file, ie_t1, ie_t2, ie_f;
    auto* cmd_ie = app.add_subcommand(
        "iso-extensions",
        "Isomorphism (u,s) -> (u, s - f(u)) between central extensions with theta1 - theta2 = d_T f");
    cmd_ie->add_option("file", ie_file, "algebra file")->required();
    cmd_ie->add_option("--theta1", ie_t1, "JSON 2D array")->required();
    cmd_ie->add_option("--theta2", ie_t2, "JSON 2D array")->required();
    cmd_ie->add_option("--cochain", ie_f, "JSON array: the linear form f")->required();

    // ---- derivations ----
    std::string der_file, der_emit;
    long der_k = 0, der_l = 0;
    auto* cmd_der =
        app.add_subcommand("derivations", "Basis of Der_{alpha^k beta^l}(L)");
    cmd_der->add_option("file", der_file, "algebra file")->required();
    cmd_der->add_option("--k", der_k, "alpha exponent")->required();
    cmd_der->add_option("--l", der_l, "beta exponent")->required();
    cmd_der->add_option("--emit", der_emit, "write basis matrices as JSON");

    // ---- inner ----
    std::string inn_file, inn_emit;
    long inn_k = 0, inn_l = 0;
    auto* cmd_inn =
        app.add_subcommand("inner", "Basis of Inn_{alpha^k beta^l}(L)");
    cmd_inn->add_option("file", inn_file, "algebra file")->required();
    cmd_inn->add_option("--k", inn_k, "alpha exponent")->required();
    cmd_inn->add_option("--l", inn_l, "beta exponent")->required();
    cmd_inn->add_option("--emit", inn_emit, "write basis matrices as JSON");

    // ---- cohomology ----
    std::string coh_file, coh_rep = "trivial", coh_emit;
    long coh_deg = 0;
    auto* cmd_coh = app.add_subcommand("cohomology", "Cocycles, coboundaries and H^k");
    cmd_coh->add_option("file", coh_file, "algebra file")->required();
    cmd_coh->add_option("--rep", coh_rep, "trivial | adjoint:S,T | representation file");
    cmd_coh->add_option("--deg", coh_deg, "cochain degree")->required();
    cmd_coh->add_option("--emit", coh_emit, "write Z/B bases as JSON");

    // ---- morphism ----
    std::string mor_src, mor_dst, mor_matrix;
    auto* cmd_mor = app.add_subcommand("morphism", "Check a linear map for the morphism identities");
    cmd_mor->add_option("source", mor_src, "source algebra file")->required();
    cmd_mor->add_option("target", mor_dst, "target algebra file")->required();
    cmd_mor->add_option("--matrix", mor_matrix, "JSON 2D array (target.dim × source.dim)")
        ->required();

    // ---- examples gen ----
    std::string gen_name, gen_emit;
    std::vector<std::string> gen_params;
    auto* cmd_ex = app.add_subcommand("examples", "Parameter-instantiated example files");
    auto* cmd_gen = cmd_ex->add_subcommand("gen", "Generate a named example");
    cmd_gen->add_option("name", gen_name, "assoc2d | sl2_twist | sl2_remark | abelian")
        ->required();
    cmd_gen->add_option("--param", gen_params, "parameter as name=rational (repeatable)");
    cmd_gen->add_option("--emit", gen_emit, "write to a file instead of stdout");
    cmd_ex->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*cmd_check) {
        const BihomLieAlgebra L = load_algebra(check_file).as_lie();
        const AxiomReport r = check_bihom_lie(L);
        print_report(r);
        bool ok = r.lie_axioms_pass();
        if (req_mult) ok = ok && r.multiplicative.ok();
        if (req_reg) ok = ok && r.regular.ok();
        std::cout << (ok ? "OK: Bihom-Lie axioms hold\n" : "FAILED\n");
        return ok ? kExitPass : kExitMathFail;
    }

    if (*cmd_assoc) {
        const BihomAssociativeAlgebra A = load_algebra(assoc_file).as_associative();
        const AssocAxiomReport r = check_bihom_associative(A);
        print_assoc_report(r);
        std::cout << (r.axioms_pass() ? "OK: Bihom-associative axioms hold\n" : "FAILED\n");
        return r.axioms_pass() ? kExitPass : kExitMathFail;
    }

    if (*cmd_comm) {
        const AlgebraFile f = load_algebra(comm_file);
        const BihomLieAlgebra L = commutator_bihom_lie(f.as_associative());
        std::cout << "commutator Bihom-Lie algebra L(A), dim " << L.dim << ":\n";
        print_bracket_table(L.bracket, "[");
        emit_if_requested(comm_emit, L, "L(" + f.name + ")");
        return kExitPass;
    }

    if (*cmd_twist) {
        const AlgebraFile f = load_algebra(twist_file);
        const BihomLieAlgebra L = yau_twist(f.tensor, f.alpha, f.beta);
        std::cout << "Yau twist, dim " << L.dim << ":\n";
        print_bracket_table(L.bracket, "{");
        emit_if_requested(twist_emit, L, "yau_twist(" + f.name + ")");
        return kExitPass;
    }

    if (*cmd_dsum) {
        const AlgebraFile fa = load_algebra(dsum_a), fb = load_algebra(dsum_b);
        const BihomLieAlgebra L = direct_sum(fa.as_lie(), fb.as_lie());
        std::cout << "direct sum, dim " << L.dim << "\n";
        emit_if_requested(dsum_emit, L, fa.name + " (+) " + fb.name);
        return kExitPass;
    }

    if (*cmd_sd) {
        const AlgebraFile f = load_algebra(sd_file);
        const BihomLieAlgebra L = f.as_lie();
        const Representation rep = resolve_representation(sd_rep, L);
        const BihomLieAlgebra S = semidirect_product(L, rep);
        std::cout << "semidirect product, dim " << S.dim << "\n";
        print_bracket_table(S.bracket, "[");
        emit_if_requested(sd_emit, S, f.name + " |x " + sd_rep);
        return kExitPass;
    }

    if (*cmd_ed) {
        const AlgebraFile f = load_algebra(ed_file);
        const BihomLieAlgebra L = f.as_lie();
        Matrix D;
        if (!ed_matrix.empty()) {
            D = parse_matrix(read_file(ed_matrix));
        } else {
            const Subspace der = derivation_space(L, 0, 1);
            if (der.dim() == 0)
                throw InvalidInputError("Der_{alpha^0 beta^1}(L) is zero; supply --matrix");
            if (ed_index < 0 || static_cast<std::size_t>(ed_index) >= der.dim())
                throw InvalidParamsError("--basis-index out of range 0.." +
                                         std::to_string(der.dim() - 1));
            D = unflatten_col_major(der.basis()[ed_index], L.dim);
            std::cout << "using Der_{alpha^0 beta^1} basis element " << ed_index << ":\n";
            print_matrix(D, "  ");
        }
        const BihomLieAlgebra E = derivation_extension(L, D);
        const AxiomReport r = check_bihom_lie(E);
        print_report(r);
        std::cout << "derivation test: D "
                  << (is_derivation(L, D, 0, 1) ? "is" : "is NOT")
                  << " an alpha^0 beta^1-derivation\n";
        emit_if_requested(ed_emit, E, f.name + " + K.D");
        return r.lie_axioms_pass() ? kExitPass : kExitMathFail;
    }

    if (*cmd_ec) {
        const AlgebraFile f = load_algebra(ec_file);
        const BihomLieAlgebra L = f.as_lie();
        const ExtensionCocycle theta{parse_matrix(read_file(ec_theta))};
        const BihomLieAlgebra E = central_extension(L, theta);
        const AxiomReport r = check_bihom_lie(E);
        print_report(r);
        emit_if_requested(ec_emit, E, f.name + " central ext");
        return r.lie_axioms_pass() ? kExitPass : kExitMathFail;
    }

    if (*cmd_ie) {
        const AlgebraFile f = load_algebra(ie_file);
        const BihomLieAlgebra L = f.as_lie();
        const ExtensionCocycle t1{parse_matrix(read_file(ie_t1))};
        const ExtensionCocycle t2{parse_matrix(read_file(ie_t2))};
        const Vec form = parse_vector(read_file(ie_f));
        const AlgebraMorphism phi = extension_isomorphism(L, t1, t2, form);
        const MorphismCheck c = check_morphism(phi);
        std::cout << "phi(u,s) = (u, s - f(u)):\n";
        print_matrix(phi.map, "  ");
        std::cout << "morphism: " << pass_fail(c.ok()) << ", invertible: "
                  << pass_fail(is_invertible(phi.map)) << "\n";
        return c.ok() && is_invertible(phi.map) ? kExitPass : kExitMathFail;
    }

    auto emit_basis = [](const std::string& path, const Subspace& space, std::size_t n) {
        if (path.empty()) return;
        nlohmann::json j;
        j["dim"] = space.dim();
        auto basis = nlohmann::json::array();
        for (const Vec& v : space.basis()) {
            const Matrix m = unflatten_col_major(v, n);
            auto rows = nlohmann::json::array();
            for (std::size_t i = 0; i < n; ++i) {
                auto row = nlohmann::json::array();
                for (std::size_t jj = 0; jj < n; ++jj) row.push_back(to_string(m(i, jj)));
                rows.push_back(row);
            }
            basis.push_back(rows);
        }
        j["basis"] = basis;
        write_file(resolve_output(path), j.dump(2) + "\n");
    };

    if (*cmd_der) {
        const BihomLieAlgebra L = load_algebra(der_file).as_lie();
        const Subspace der = derivation_space(L, der_k, der_l);
        std::cout << "dim Der_{alpha^" << der_k << " beta^" << der_l << "}(L) = "
                  << der.dim() << "\n";
        for (const Vec& v : der.basis()) {
            std::cout << "basis matrix:\n";
            print_matrix(unflatten_col_major(v, L.dim), "  ");
        }
        emit_basis(der_emit, der, L.dim);
        return kExitPass;
    }

    if (*cmd_inn) {
        const BihomLieAlgebra L = load_algebra(inn_file).as_lie();
        const Subspace inn = inner_derivation_space(L, inn_k, inn_l);
        std::cout << "dim Inn_{alpha^" << inn_k << " beta^" << inn_l << "}(L) = "
                  << inn.dim() << "\n";
        for (const Vec& v : inn.basis()) {
            std::cout << "basis matrix:\n";
            print_matrix(unflatten_col_major(v, L.dim), "  ");
        }
        emit_basis(inn_emit, inn, L.dim);
        return kExitPass;
    }

    if (*cmd_coh) {
        const BihomLieAlgebra L = load_algebra(coh_file).as_lie();
        const Representation rep = resolve_representation(coh_rep, L);
        const CochainBasis cb = cochain_space(rep, coh_deg);
        const CohomologyResult res = cohomology(rep, coh_deg);
        std::cout << "degree " << coh_deg << ", representation " << coh_rep << "\n";
        std::cout << "dim compatible cochains = " << cb.compatible.dim() << "\n";
        std::cout << "dim Z^" << coh_deg << " = " << res.dim_cocycles << "\n";
        std::cout << "dim B^" << coh_deg << " = " << res.dim_coboundaries << "\n";
        std::cout << "dim H^" << coh_deg << " = " << res.dim_cohomology << "\n";
        if (!coh_emit.empty()) {
            nlohmann::json j;
            j["degree"] = coh_deg;
            j["dimZ"] = res.dim_cocycles;
            j["dimB"] = res.dim_coboundaries;
            j["dimH"] = res.dim_cohomology;
            auto dump_space = [](const Subspace& s) {
                auto arr = nlohmann::json::array();
                for (const Vec& v : s.basis()) {
                    auto row = nlohmann::json::array();
                    for (const auto& x : v) row.push_back(to_string(x));
                    arr.push_back(row);
                }
                return arr;
            };
            j["Z_basis"] = dump_space(res.cocycles);
            j["B_basis"] = dump_space(res.coboundaries);
            write_file(resolve_output(coh_emit), j.dump(2) + "\n");
        }
        return kExitPass;
    }

    if (*cmd_mor) {
        const BihomLieAlgebra src = load_algebra(mor_src).as_lie();
        const BihomLieAlgebra dst = load_algebra(mor_dst).as_lie();
        const AlgebraMorphism f{src, dst, parse_matrix(read_file(mor_matrix))};
        const MorphismCheck c = check_morphism(f);
        std::cout << "intertwines alpha : " << pass_fail(c.intertwines_alpha) << "\n";
        std::cout << "intertwines beta  : " << pass_fail(c.intertwines_beta) << "\n";
        std::cout << "preserves bracket : " << pass_fail(c.preserves_bracket);
        if (c.bracket_witness)
            std::cout << "  at (e" << c.bracket_witness->i + 1 << ", e"
                      << c.bracket_witness->j + 1
                      << "), defect = " << format_combo(c.bracket_witness->defect);
        std::cout << "\n" << (c.ok() ? "OK: morphism\n" : "FAILED\n");
        return c.ok() ? kExitPass : kExitMathFail;
    }

    if (*cmd_gen) {
        Params params;
        for (const std::string& p : gen_params) {
            const auto eq = p.find('=');
            if (eq == std::string::npos)
                throw InvalidParamsError("--param expects name=value, got \"" + p + '"');
            params[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
        }
        const AlgebraFile f = generate_example(gen_name, params);
        const std::string text = emit_algebra(f);
        if (gen_emit.empty())
            std::cout << text;
        else
            write_file(resolve_output(gen_emit), text);
        return kExitPass;
    }

    return kExitUsage; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bihom::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bihom::InvalidParamsError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bihom::DimensionMismatchError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bihom::DegreeOutOfRangeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bihom::Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
