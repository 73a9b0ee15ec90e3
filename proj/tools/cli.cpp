#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "capelli/fusion.hpp"
#include "capelli/json_io.hpp"
#include "capelli/verify.hpp"
#include "capelli/weyl.hpp"
#include "capelli/yangian.hpp"

namespace capelli::cli {

namespace {

struct Options {
    std::string format = "json";
    bool want_text() const { return format == "text"; }
};

void emit(const Json& j, const Options& opt, std::ostream& out) {
    if (opt.want_text())
        out << j.dump(2) << "\n";
    else
        out << j.dump() << "\n";
}

template <typename T>
Json element_payload(const char* kind, const std::string& shape, const T& value) {
    return Json{{"kind", kind}, {"shape", shape}, {"terms", to_json(value)}};
}

std::string coeff_text(const Rational& c) { return c.str(); }
std::string coeff_text(const RationalFunction& c) { return c.str(); }

template <typename C>
void print_terms(std::ostream& out, const GroupAlgebraElement<C>& x, const char* label) {
    out << label << " =";
    if (x.is_zero()) {
        out << " 0\n";
        return;
    }
    out << "\n";
    for (const auto& [p, c] : x.terms())
        out << "  " << coeff_text(c) << " * " << p.str() << "\n";
}

void print_ugl_poly(std::ostream& out, const UglPoly& p, const char* var) {
    if (p.is_zero()) {
        out << "  0\n";
        return;
    }
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero())
            out << "  " << var << "^" << k << ": " << p.coeff(k).str() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact fusion products, pole-order sweeps and Capelli operators"};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands inherit --format
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string shape_str, lambda_str, mu_str;
    int gl_n = 2, gl_m = 2;
    bool pole_only = false, z_poly = false;
    std::string formula = "image";
    verify::SweepConfig cfg;
    std::string suite_name = "all";

    CLI::App* fusion_cmd = app.add_subcommand("fusion", "fusion product limit for a shape");
    fusion_cmd->add_option("--shape", shape_str, "partition, e.g. 2,1")->required();

    CLI::App* upsilon_cmd = app.add_subcommand("upsilon", "limit of the triangular half");
    upsilon_cmd->add_option("--shape", shape_str, "partition")->required();

    CLI::App* symm_cmd = app.add_subcommand("symmetrizer", "row/column symmetrizers and the matrix element");
    symm_cmd->add_option("--shape", shape_str, "partition")->required();

    CLI::App* pair_cmd = app.add_subcommand("phi-pair", "two-diagram product over C(z)");
    pair_cmd->add_option("--lambda", lambda_str, "first partition")->required();
    pair_cmd->add_option("--mu", mu_str, "second partition")->required();
    pair_cmd->add_flag("--pole-order", pole_only, "print only the pole order at z=0");

    CLI::App* prop_cmd = app.add_subcommand("prop212", "one-row extension identity check");
    prop_cmd->add_option("--shape", shape_str, "partition")->required();

    CLI::App* qdet_cmd = app.add_subcommand("qdet", "quantum determinant coefficients");
    qdet_cmd->add_option("--N", gl_n, "gl size")->required()->check(CLI::PositiveNumber);

    CLI::App* el_cmd = app.add_subcommand("elambda", "central element for a shape");
    el_cmd->add_option("--shape", shape_str, "partition")->required();
    el_cmd->add_option("--N", gl_n, "gl size")->required()->check(CLI::PositiveNumber);
    el_cmd->add_flag("--z-poly", z_poly, "print the full polynomial in z");

    CLI::App* cap_cmd = app.add_subcommand("capelli", "invariant differential operator");
    cap_cmd->add_option("--shape", shape_str, "partition")->required();
    cap_cmd->add_option("--N", gl_n, "rows")->required()->check(CLI::PositiveNumber);
    cap_cmd->add_option("--M", gl_m, "columns")->required()->check(CLI::PositiveNumber);
    cap_cmd->add_option("--formula", formula, "which construction to print")
        ->check(CLI::IsMember({"1.1", "1.3", "image"}))
        ->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite_name, "fusion|pole|rtt|capelli|all")
        ->check(CLI::IsMember({"fusion", "pole", "rtt", "capelli", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--max-n", cfg.max_fusion_boxes, "fusion suite partition cap")
        ->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--max-pair-n", cfg.max_pair_n, "pole sweep cap for the left diagram")
        ->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--max-pair-m", cfg.max_pair_m, "pole sweep cap for the right diagram")
        ->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--max-gl-n", cfg.max_gl_n, "gl_N cap")
        ->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--max-gl-m", cfg.max_gl_m, "gl_M cap")
        ->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--jobs", cfg.jobs, "worker pool size (default: CAPELLI_JOBS or cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*fusion_cmd) {
            YoungDiagram shape = YoungDiagram::parse(shape_str);
            if (opt.want_text())
                print_terms(out, fusion_limit(shape), "fusion limit");
            else
                emit(element_payload("fusion-limit", shape.str(), fusion_limit(shape)), opt, out);
        } else if (*upsilon_cmd) {
            YoungDiagram shape = YoungDiagram::parse(shape_str);
            if (opt.want_text())
                print_terms(out, upsilon_limit(shape), "upsilon limit");
            else
                emit(element_payload("upsilon-limit", shape.str(), upsilon_limit(shape)), opt, out);
        } else if (*symm_cmd) {
            YoungDiagram shape = YoungDiagram::parse(shape_str);
            Symmetrizers sym = symmetrizers(shape);
            if (opt.want_text()) {
                print_terms(out, sym.P, "P");
                print_terms(out, sym.Q, "Q");
                print_terms(out, sym.Phi, "Phi");
            } else {
                Json j{{"kind", "symmetrizers"},
                       {"shape", shape.str()},
                       {"P", to_json(sym.P)},
                       {"Q", to_json(sym.Q)},
                       {"Phi", to_json(sym.Phi)}};
                emit(j, opt, out);
            }
        } else if (*pair_cmd) {
            YoungDiagram lambda = YoungDiagram::parse(lambda_str);
            YoungDiagram mu = YoungDiagram::parse(mu_str);
            if (pole_only) {
                int pole = pole_order_phi(lambda, mu);
                if (opt.want_text())
                    out << "pole order at z=0: " << pole << "\n";
                else
                    emit(Json{{"kind", "pole-order"},
                              {"lambda", lambda.str()},
                              {"mu", mu.str()},
                              {"pole_order", pole}},
                         opt, out);
            } else if (opt.want_text()) {
                print_terms(out, phi_lambda_mu(lambda, mu), "phi pair");
            } else {
                Json j{{"kind", "phi-pair"},
                       {"lambda", lambda.str()},
                       {"mu", mu.str()},
                       {"terms", to_json(phi_lambda_mu(lambda, mu))}};
                emit(j, opt, out);
            }
        } else if (*prop_cmd) {
            YoungDiagram shape = YoungDiagram::parse(shape_str);
            bool ok = verify_one_row_extension(shape);
            if (opt.want_text())
                out << "one-row extension identity: " << (ok ? "ok" : "FAILED") << "\n";
            else
                emit(Json{{"kind", "prop212"}, {"shape", shape.str()}, {"ok", ok}}, opt, out);
            if (!ok) return 1;
        } else if (*qdet_cmd) {
            QuantumDeterminant qd = quantum_determinant(gl_n);
            if (opt.want_text()) {
                for (size_t k = 0; k < qd.coefficients.size(); ++k)
                    out << "pi(D_" << k + 1 << ") = " << qd.coefficients[k].str() << "\n";
                out << "cleared series:\n";
                print_ugl_poly(out, qd.cleared, "u");
            } else {
                Json coeffs = Json::array();
                for (const auto& c : qd.coefficients) coeffs.push_back(to_json(c));
                Json j{{"kind", "qdet"}, {"N", gl_n}, {"coefficients", coeffs},
                       {"cleared", to_json(qd.cleared)}};
                emit(j, opt, out);
            }
        } else if (*el_cmd) {
            YoungDiagram shape = YoungDiagram::parse(shape_str);
            if (z_poly) {
                if (opt.want_text())
                    print_ugl_poly(out, e_lambda_poly(shape, gl_n), "z");
                else
                    emit(Json{{"kind", "elambda-poly"}, {"shape", shape.str()}, {"N", gl_n},
                              {"z_coefficients", to_json(e_lambda_poly(shape, gl_n))}},
                         opt, out);
            } else {
                UglElement e = e_lambda(shape, gl_n, Rational(0));
                if (opt.want_text())
                    out << "e = " << e.str() << "\n";
                else
                    emit(Json{{"kind", "elambda"}, {"shape", shape.str()}, {"N", gl_n},
                              {"terms", to_json(e)}},
                         opt, out);
            }
        } else if (*cap_cmd) {
            YoungDiagram shape = YoungDiagram::parse(shape_str);
            WeylElement op = formula == "1.1"   ? c_lambda(shape, gl_n, gl_m)
                             : formula == "1.3" ? capelli_product(shape, gl_n, gl_m)
                                                : ugl_to_weyl(e_lambda(shape, gl_n, Rational(0)), gl_m);
            if (opt.want_text()) {
                out << "c = " << op.str() << "\n";
            } else {
                Json j{{"kind", "capelli"}, {"shape", shape.str()}, {"N", gl_n}, {"M", gl_m},
                       {"formula", formula}, {"terms", to_json(op)}};
                emit(j, opt, out);
            }
        } else if (*verify_cmd) {
            verify::SweepConfig defaults;
            if (cfg.max_fusion_boxes > defaults.max_fusion_boxes ||
                cfg.max_pair_n > defaults.max_pair_n || cfg.max_pair_m > defaults.max_pair_m ||
                cfg.max_gl_n > defaults.max_gl_n || cfg.max_gl_m > defaults.max_gl_m)
                err << "warning: sweep caps exceed the reference ranges; expect a long run "
                       "(group orders and tensor dimensions grow factorially)\n";
            bool ok = verify::run(verify::suite(suite_name), cfg, out);
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace capelli::cli
