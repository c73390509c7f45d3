// Command-line front end: compute, verify, serialize and render morphisms
// of the Brauer category and its one-vertex enhancement, all in exact
// rational arithmetic.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "brauercat/brauer.hpp"
#include "brauercat/enhanced.hpp"
#include "brauercat/errors.hpp"
#include "brauercat/expr.hpp"
#include "brauercat/homspace.hpp"
#include "brauercat/json_io.hpp"
#include "brauercat/oracle.hpp"
#include "brauercat/render.hpp"
#include "brauercat/tensor.hpp"

namespace bc = brauercat;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        bc::save_file(out_path, text);
}

int print_report(const bc::Report& rep) {
    bool ok = true;
    for (const auto& c : rep) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.ok && !c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
        ok = ok && c.ok;
    }
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    return ok ? 0 : 1;
}

bc::EnhancedMorphism load_or_parse(int m, const std::string& expr,
                                   const std::string& in_path) {
    if (!expr.empty()) {
        const bc::ExprPtr tree = bc::parse_expression(expr, m);
        return bc::evaluate(*tree, m);
    }
    if (!in_path.empty()) return bc::enhanced_from_json(bc::load_file(in_path), m);
    throw bc::Error("need --expr or --in");
}

bc::Report run_suite(const std::string& suite, int m) {
    bc::Report rep;
    auto extend = [&rep](const bc::Report& r) { rep.insert(rep.end(), r.begin(), r.end()); };
    if (suite == "relations" || suite == "all") {
        extend(bc::verify_defining_relations(m));
        extend(bc::verify_relations_under_eval(m));
    }
    if (suite == "reduction" || suite == "all")
        for (int r = 2; r <= 5; ++r) extend(bc::verify_reduction_lemma(r));
    if (suite == "sigma" || suite == "all") extend(bc::verify_sigma_vanishing(m));
    if (suite == "delta" || suite == "all") extend(bc::delta_constraint_check(m));
    if (suite == "so-inv" || suite == "all")
        for (int r = 0; r <= 6; ++r) {
            extend(bc::verify_thm_so_inv(m, r));
            extend(bc::verify_fft_span(m, r));
        }
    if (suite == "dims" || suite == "all") {
        const auto rows = bc::dimension_report(m, 6);
        for (const auto& row : rows) {
            const std::string name = "dimension agreement (m=" + std::to_string(row.m) +
                                     ", s=" + std::to_string(row.s) +
                                     ", t=" + std::to_string(row.t) + ")";
            rep.push_back({name, row.agree,
                           "gram=" + std::to_string(row.gram) +
                               " functor=" + std::to_string(row.functor) +
                               " formula=" + std::to_string(row.formula)});
        }
    }
    if (rep.empty()) throw bc::Error("unknown suite '" + suite + "'");
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact diagram calculus for the Brauer category and its"
                 " one-vertex enhancement"};
    app.require_subcommand(1);
    std::cout.sync_with_stdio(false);

    int m = 2;
    int s = 0, t = 0, r = 0;
    std::string expr, route = "all", suite = "all", in_a, in_b, out_path;

    auto* c_eval = app.add_subcommand("eval", "evaluate an expression as a tensor");
    c_eval->add_option("--m", m, "dimension")->required();
    c_eval->add_option("--expr", expr, "expression")->required();
    c_eval->add_option("--out", out_path, "output file");

    auto* c_norm = app.add_subcommand("normalize", "rewrite an expression to canonical form");
    c_norm->add_option("--m", m, "dimension")->required();
    c_norm->add_option("--expr", expr, "expression");
    c_norm->add_option("--in", in_a, "morphism file");
    c_norm->add_option("--out", out_path, "output file");

    auto* c_compose = app.add_subcommand("compose", "compose two saved morphisms (second after first)");
    c_compose->add_option("--m", m, "dimension")->required();
    c_compose->add_option("--in", in_a, "first morphism (applied first)")->required();
    c_compose->add_option("--in2", in_b, "second morphism")->required();
    c_compose->add_option("--out", out_path, "output file");

    auto* c_tensor = app.add_subcommand("tensor", "tensor two saved morphisms");
    c_tensor->add_option("--m", m, "dimension")->required();
    c_tensor->add_option("--in", in_a, "left morphism")->required();
    c_tensor->add_option("--in2", in_b, "right morphism")->required();
    c_tensor->add_option("--out", out_path, "output file");

    auto* c_dim = app.add_subcommand("dim-hom", "Hom-space dimension by one or all routes");
    c_dim->add_option("--m", m, "dimension")->required();
    c_dim->add_option("--s", s, "source arity")->required();
    c_dim->add_option("--t", t, "target arity")->required();
    c_dim->add_option("--route", route, "gram|functor|formula|all");

    auto* c_oracle = app.add_subcommand("oracle", "joint invariant space dimensions");
    c_oracle->add_option("--m", m, "dimension")->required();
    c_oracle->add_option("--r", r, "tensor rank")->required();

    auto* c_dtable = app.add_subcommand("d-table", "plus-part dimension table as CSV");
    c_dtable->add_option("--m", m, "dimension")->required();
    c_dtable->add_option("--r", r, "maximum rank")->required();
    c_dtable->add_option("--out", out_path, "output file");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--m", m, "dimension")->required();
    c_verify->add_option("--suite", suite, "relations|reduction|sigma|delta|dims|so-inv|all");

    auto* c_render = app.add_subcommand("render", "render a morphism as SVG");
    c_render->add_option("--m", m, "dimension")->required();
    c_render->add_option("--expr", expr, "expression");
    c_render->add_option("--in", in_a, "morphism file");
    c_render->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_eval->parsed()) {
            const bc::ExprPtr tree = bc::parse_expression(expr, m);
            const bc::Tensor img = bc::eval_morphism(bc::evaluate(*tree, m));
            if (img.points() == 0)
                emit(bc::to_string(img[0]) + "\n", out_path);
            else
                emit(bc::to_json(img), out_path);
        } else if (c_norm->parsed()) {
            emit(bc::to_json(bc::normalize(load_or_parse(m, expr, in_a))), out_path);
        } else if (c_compose->parsed()) {
            const auto f = bc::enhanced_from_json(bc::load_file(in_a), m);
            const auto g = bc::enhanced_from_json(bc::load_file(in_b), m);
            emit(bc::to_json(bc::compose(f, g)), out_path);
        } else if (c_tensor->parsed()) {
            const auto f = bc::enhanced_from_json(bc::load_file(in_a), m);
            const auto g = bc::enhanced_from_json(bc::load_file(in_b), m);
            emit(bc::to_json(bc::tensor(f, g)), out_path);
        } else if (c_dim->parsed()) {
            if (route == "all") {
                const auto dtab = bc::d_table(m, s + t);
                const long dg = bc::dim_hom(m, s, t, bc::DimRoute::Gram);
                const long df = bc::dim_hom(m, s, t, bc::DimRoute::Functor);
                const long dc = bc::dim_hom(m, s, t, bc::DimRoute::Formula, &dtab);
                const bool agree = dg == df && df == dc;
                std::cout << "gram=" << dg << " functor=" << df << " formula=" << dc
                          << " agree=" << (agree ? "true" : "false") << "\n";
            } else {
                bc::DimRoute rt;
                if (route == "gram") rt = bc::DimRoute::Gram;
                else if (route == "functor") rt = bc::DimRoute::Functor;
                else if (route == "formula") rt = bc::DimRoute::Formula;
                else throw bc::Error("unknown route '" + route + "'");
                std::cout << route << "=" << bc::dim_hom(m, s, t, rt) << "\n";
            }
        } else if (c_oracle->parsed()) {
            const bc::InvariantSpace inv = bc::invariant_space(m, r);
            std::cout << "dim_plus=" << inv.dim_plus << " dim_minus=" << inv.dim_minus
                      << " total=" << inv.basis.size() << "\n";
        } else if (c_dtable->parsed()) {
            emit(bc::d_table_csv(bc::d_table(m, r)), out_path);
        } else if (c_verify->parsed()) {
            return print_report(run_suite(suite, m));
        } else if (c_render->parsed()) {
            bc::render_svg_file(bc::normalize(load_or_parse(m, expr, in_a)), out_path);
        }
    } catch (const bc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bc::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
