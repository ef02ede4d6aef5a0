#include "riordan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "riordan/riordan.hpp"

namespace riordan::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    int order = Series::kDefaultOrder;
    int rows = 8;
    std::string format = "table";
};

std::string str(const Rational& r) { return r.str(); }

json coeff_array(const Series& s) {
    json a = json::array();
    for (int i = 0; i <= s.order(); ++i)
        a.push_back(str(s[i]));
    return a;
}

json rational_array(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v)
        a.push_back(str(r));
    return a;
}

void emit_json(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string labeled_list(const std::string& label, const std::vector<std::string>& parts) {
    std::string out = label + ":";
    if (!parts.empty())
        out += " " + join(parts, " ");
    return out + "\n";
}

std::vector<std::string> coeff_strings(const Series& s) {
    std::vector<std::string> v;
    v.reserve(s.order() + 1);
    for (int i = 0; i <= s.order(); ++i)
        v.push_back(str(s[i]));
    return v;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& rs) {
    std::vector<std::string> v;
    v.reserve(rs.size());
    for (const auto& r : rs)
        v.push_back(str(r));
    return v;
}

void emit_series(const Series& s, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        emit_json(json{{"order", s.order()}, {"coeffs", coeff_array(s)}}, out);
    } else if (opt.format == "csv") {
        out << join(coeff_strings(s), ",") << "\n";
    } else {
        out << join(coeff_strings(s), " ") << "\n";
    }
}

void emit_element(const Element& e, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        emit_json(json{{"order", e.order()}, {"g", coeff_array(e.g())}, {"f", coeff_array(e.f())}}, out);
    } else if (opt.format == "csv") {
        out << "g," << join(coeff_strings(e.g()), ",") << "\n";
        out << "f," << join(coeff_strings(e.f()), ",") << "\n";
    } else {
        out << "g: " << join(coeff_strings(e.g()), " ") << "\n";
        out << "f: " << join(coeff_strings(e.f()), " ") << "\n";
    }
}

void emit_matrix(const Triangle& m, const Options& opt, std::ostream& out) {
    const int nrows = static_cast<int>(m.rows());
    if (opt.format == "json") {
        json rows = json::array();
        for (int n = 0; n < nrows; ++n) {
            json row = json::array();
            for (int k = 0; k <= n; ++k)
                row.push_back(str(m(n, k)));
            rows.push_back(std::move(row));
        }
        emit_json(json{{"order", nrows - 1}, {"rows", rows}}, out);
        return;
    }
    if (opt.format == "csv") {
        for (int n = 0; n < nrows; ++n) {
            std::vector<std::string> row;
            for (int k = 0; k <= n; ++k)
                row.push_back(str(m(n, k)));
            out << join(row, ",") << "\n";
        }
        return;
    }
    // table: right-aligned columns, no padding beyond alignment
    std::vector<std::size_t> width(nrows, 0);
    for (int n = 0; n < nrows; ++n)
        for (int k = 0; k <= n; ++k)
            width[k] = std::max(width[k], str(m(n, k)).size());
    for (int n = 0; n < nrows; ++n) {
        for (int k = 0; k <= n; ++k)
            out << (k ? " " : "") << std::setw(static_cast<int>(width[k])) << str(m(n, k));
        out << "\n";
    }
}

void emit_jfraction(const JFraction<Rational>& jf, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        emit_json(json{{"alphas", rational_array(jf.alphas)},
                       {"betas", rational_array(jf.betas)},
                       {"terminated", jf.terminated}},
                  out);
    } else if (opt.format == "csv") {
        out << "alphas," << join(rational_strings(jf.alphas), ",") << "\n";
        out << "betas," << join(rational_strings(jf.betas), ",") << "\n";
        out << "terminated," << (jf.terminated ? "true" : "false") << "\n";
    } else {
        out << labeled_list("alphas", rational_strings(jf.alphas));
        out << labeled_list("betas", rational_strings(jf.betas));
        out << "terminated: " << (jf.terminated ? "true" : "false") << "\n";
    }
}

std::string comparison_text(const SeriesComparison& c) {
    std::string line(1, c.component);
    line += " " + c.left + " vs " + c.right + ": ";
    if (c.skipped)
        return line + "skipped";
    if (c.match)
        return line + "match";
    return line + "mismatch at x^" + std::to_string(c.mismatch_order) + " (" + c.left_value + " vs " +
           c.right_value + ")";
}

// Shared flags; --order also honors the RIORDAN_ORDER environment override.
void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--order", opt.order, "truncation order N (series carry coefficients up to x^N)")
        ->envname("RIORDAN_ORDER")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
}

void add_rows_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--rows", opt.rows, "number of matrix rows")->check(CLI::PositiveNumber);
}

struct RationalOption {
    std::string text;
    Rational value;

    void parse(const std::string& name) {
        try {
            value = Rational::from_string(text);
        } catch (const Error&) {
            throw CLI::ValidationError(name, "'" + text + "' is not a rational (use p or p/q)");
        }
    }
};

void require_rows_fit(const Options& opt) {
    if (opt.order < opt.rows - 1)
        throw CLI::ValidationError("--rows", "needs --order >= rows - 1");
}

Series parse_series(const std::string& text, int order) { return eval(text, order); }

Element parse_element(const std::string& g, const std::string& f, int order) {
    return Element(parse_series(g, order), parse_series(f, order));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("riordan");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Riordan-group computations: truncated rational power series, "
                 "triangle matrices, involution constructions and continued-fraction analysis"};
    app.require_subcommand(1);

    Options opt;
    std::string expr_text, g_text, f_text, g2_text, f2_text, pg_text = "1/(1-x)", pf_text = "x/(1-x)";
    std::string emit = "";
    RationalOption r_opt, s_opt, t_opt, a_opt, b_opt, alpha_opt;
    int depth = -1;
    bool pseudo = false, use_default_p = true;

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "expand an expression into a truncated series");
    cmd_eval->add_option("--expr", expr_text, "expression, e.g. \"c(x)\" or \"x*(1-2*x)/(1+x+x^2)\"")->required();
    add_common_options(cmd_eval, opt);

    // product
    auto* cmd_product = app.add_subcommand("product", "group product (g1,f1)*(g2,f2)");
    cmd_product->add_option("--g1", g_text)->required();
    cmd_product->add_option("--f1", f_text)->required();
    cmd_product->add_option("--g2", g2_text)->required();
    cmd_product->add_option("--f2", f2_text)->required();
    cmd_product->add_option("--emit", emit)->check(CLI::IsMember({"gf", "matrix"}));
    add_common_options(cmd_product, opt);
    add_rows_option(cmd_product, opt);

    // inverse
    auto* cmd_inverse = app.add_subcommand("inverse", "group inverse of (g,f)");
    cmd_inverse->add_option("--g", g_text)->required();
    cmd_inverse->add_option("--f", f_text)->required();
    cmd_inverse->add_option("--emit", emit)->check(CLI::IsMember({"gf", "matrix"}));
    add_common_options(cmd_inverse, opt);
    add_rows_option(cmd_inverse, opt);

    // matrix
    auto* cmd_matrix = app.add_subcommand("matrix", "triangle realization a(n,k) = [x^n] g f^k");
    cmd_matrix->add_option("--g", g_text)->required();
    cmd_matrix->add_option("--f", f_text)->required();
    add_common_options(cmd_matrix, opt);
    add_rows_option(cmd_matrix, opt);

    // row-sums
    auto* cmd_rowsums = app.add_subcommand("row-sums", "row sums of the triangle realization");
    cmd_rowsums->add_option("--g", g_text)->required();
    cmd_rowsums->add_option("--f", f_text)->required();
    add_common_options(cmd_rowsums, opt);
    add_rows_option(cmd_rowsums, opt);

    // check-involution / check-pseudo
    auto* cmd_check_inv = app.add_subcommand("check-involution", "test (g,f)^2 = (1,x) to the working order");
    cmd_check_inv->add_option("--g", g_text)->required();
    cmd_check_inv->add_option("--f", f_text)->required();
    add_common_options(cmd_check_inv, opt);

    auto* cmd_check_pseudo = app.add_subcommand("check-pseudo", "test whether (g,-f) is an involution");
    cmd_check_pseudo->add_option("--g", g_text)->required();
    cmd_check_pseudo->add_option("--f", f_text)->required();
    add_common_options(cmd_check_pseudo, opt);

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "involution (g,f)^-1 * P * (g(-x),f(-x))");
    cmd_construct->add_option("--g", g_text)->required();
    cmd_construct->add_option("--f", f_text)->required();
    auto* pg = cmd_construct->add_option("--pg", pg_text, "g-part of the pseudo-involution P (default: identity)");
    auto* pf = cmd_construct->add_option("--pf", pf_text, "f-part of P");
    cmd_construct->add_option("--emit", emit)->check(CLI::IsMember({"gf", "matrix"}));
    add_common_options(cmd_construct, opt);
    add_rows_option(cmd_construct, opt);

    // family
    auto* cmd_family = app.add_subcommand("family", "the (r,s,t) involution");
    cmd_family->add_option("--r", r_opt.text)->required();
    cmd_family->add_option("--s", s_opt.text)->required();
    cmd_family->add_option("--t", t_opt.text)->required();
    cmd_family->add_flag("--pseudo", pseudo, "emit the pseudo-involution companion (g,-f)");
    cmd_family->add_option("--emit", emit)->check(CLI::IsMember({"gf", "matrix"}));
    add_common_options(cmd_family, opt);
    add_rows_option(cmd_family, opt);

    // corollary
    auto* cmd_corollary = app.add_subcommand("corollary", "the s = 0 involution from (r,t)");
    cmd_corollary->add_option("--r", r_opt.text)->required();
    cmd_corollary->add_option("--t", t_opt.text)->required();
    cmd_corollary->add_flag("--pseudo", pseudo, "emit the pseudo-involution companion (g,-f)");
    cmd_corollary->add_option("--emit", emit)->check(CLI::IsMember({"gf", "matrix"}));
    add_common_options(cmd_corollary, opt);
    add_rows_option(cmd_corollary, opt);

    // chebyshev
    auto* cmd_chebyshev = app.add_subcommand("chebyshev", "generalized Chebyshev coefficient array");
    cmd_chebyshev->add_option("--r", r_opt.text)->required();
    cmd_chebyshev->add_option("--s", s_opt.text)->required();
    cmd_chebyshev->add_option("--a", a_opt.text)->required();
    cmd_chebyshev->add_option("--b", b_opt.text)->required();
    cmd_chebyshev->add_option("--emit", emit)->check(CLI::IsMember({"gf", "matrix"}));
    add_common_options(cmd_chebyshev, opt);
    add_rows_option(cmd_chebyshev, opt);

    // ortho
    auto* cmd_ortho = app.add_subcommand("ortho", "orthogonal-polynomial coefficient array from (r,s)");
    cmd_ortho->add_option("--r", r_opt.text)->required();
    cmd_ortho->add_option("--s", s_opt.text)->required();
    cmd_ortho->add_option("--emit", emit)->check(CLI::IsMember({"gf", "matrix"}));
    add_common_options(cmd_ortho, opt);
    add_rows_option(cmd_ortho, opt);

    // jfraction
    auto* cmd_jfraction = app.add_subcommand("jfraction", "Jacobi continued-fraction expansion of g");
    cmd_jfraction->add_option("--g", g_text)->required();
    cmd_jfraction->add_option("--depth", depth, "number of beta layers (default: (order-1)/2)");
    add_common_options(cmd_jfraction, opt);

    // bseq
    auto* cmd_bseq = app.add_subcommand("bseq", "B-sequence of f via f = x + x f B(x f)");
    cmd_bseq->add_option("--f", f_text)->required();
    cmd_bseq->add_option("--depth", depth, "number of terms (default: order/2)");
    add_common_options(cmd_bseq, opt);

    // cross-validate
    auto* cmd_cross = app.add_subcommand("cross-validate", "compare the four routes to the (r,s,t) involution");
    cmd_cross->add_option("--r", r_opt.text)->required();
    cmd_cross->add_option("--s", s_opt.text)->required();
    cmd_cross->add_option("--t", t_opt.text)->required();
    add_common_options(cmd_cross, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }
    use_default_p = !(*pg || *pf);

    try {
        if (*cmd_eval) {
            emit_series(parse_series(expr_text, opt.order), opt, out);
        } else if (*cmd_product) {
            const auto e = product(parse_element(g_text, f_text, opt.order),
                                   parse_element(g2_text, f2_text, opt.order));
            if (emit == "matrix") {
                require_rows_fit(opt);
                emit_matrix(matrix(e, opt.rows), opt, out);
            } else {
                emit_element(e, opt, out);
            }
        } else if (*cmd_inverse) {
            const auto e = inverse(parse_element(g_text, f_text, opt.order));
            if (emit == "matrix") {
                require_rows_fit(opt);
                emit_matrix(matrix(e, opt.rows), opt, out);
            } else {
                emit_element(e, opt, out);
            }
        } else if (*cmd_matrix) {
            require_rows_fit(opt);
            emit_matrix(matrix(parse_element(g_text, f_text, opt.order), opt.rows), opt, out);
        } else if (*cmd_rowsums) {
            require_rows_fit(opt);
            const auto sums = row_sums(matrix(parse_element(g_text, f_text, opt.order), opt.rows));
            if (opt.format == "json")
                emit_json(json{{"rows", opt.rows}, {"sums", rational_array(sums)}}, out);
            else
                out << join(rational_strings(sums), opt.format == "csv" ? "," : " ") << "\n";
        } else if (*cmd_check_inv || *cmd_check_pseudo) {
            const auto e = parse_element(g_text, f_text, opt.order);
            const bool pseudo_check = static_cast<bool>(*cmd_check_pseudo);
            const auto check = pseudo_check ? is_pseudo_involution(e) : is_involution(e);
            const char* label = pseudo_check ? "pseudo-involution" : "involution";
            if (opt.format == "json") {
                json j{{"check", label}, {"ok", check.ok}};
                if (!check.ok)
                    j["first_failure"] = check.first_failure;
                emit_json(j, out);
            } else if (check.ok) {
                out << label << ": true\n";
            } else {
                out << label << ": false (fails at order " << check.first_failure << ")\n";
            }
            if (!check.ok)
                return 3;
        } else if (*cmd_construct) {
            const auto g = parse_series(g_text, opt.order);
            const auto f = parse_series(f_text, opt.order);
            const auto p = use_default_p ? Element::Identity(opt.order)
                                         : parse_element(pg_text, pf_text, opt.order);
            const auto e = involution_from(g, f, p);
            if (emit == "gf") {
                emit_element(e, opt, out);
            } else {
                require_rows_fit(opt);
                emit_matrix(matrix(e, opt.rows), opt, out);
            }
        } else if (*cmd_family || *cmd_corollary) {
            r_opt.parse("--r");
            t_opt.parse("--t");
            Element e = (*cmd_family)
                            ? (s_opt.parse("--s"),
                               family_rst(Params{r_opt.value, s_opt.value, t_opt.value}, opt.order))
                            : corollary_rt(r_opt.value, t_opt.value, opt.order);
            if (pseudo)
                e = companion(e);
            if (emit == "gf") {
                emit_element(e, opt, out);
            } else {
                require_rows_fit(opt);
                emit_matrix(matrix(e, opt.rows), opt, out);
            }
        } else if (*cmd_chebyshev || *cmd_ortho) {
            r_opt.parse("--r");
            s_opt.parse("--s");
            Element e = [&] {
                if (*cmd_chebyshev) {
                    a_opt.parse("--a");
                    b_opt.parse("--b");
                    return chebyshev_array(r_opt.value, s_opt.value, a_opt.value, b_opt.value, opt.order).first;
                }
                return ortho_rs_array(r_opt.value, s_opt.value, opt.order).first;
            }();
            if (emit == "gf") {
                emit_element(e, opt, out);
            } else {
                require_rows_fit(opt);
                emit_matrix(matrix(e, opt.rows), opt, out);
            }
        } else if (*cmd_jfraction) {
            emit_jfraction(jfraction_expand(parse_series(g_text, opt.order), depth), opt, out);
        } else if (*cmd_bseq) {
            const auto b = b_sequence(parse_series(f_text, opt.order), depth);
            if (opt.format == "json") {
                emit_json(json{{"terms", rational_array(b.terms)}, {"residual_ok", b.residual_ok}}, out);
            } else if (opt.format == "csv") {
                out << "terms," << join(rational_strings(b.terms), ",") << "\n";
                out << "residual_ok," << (b.residual_ok ? "true" : "false") << "\n";
            } else {
                out << labeled_list("terms", rational_strings(b.terms));
                out << "residual_ok: " << (b.residual_ok ? "true" : "false") << "\n";
            }
        } else if (*cmd_cross) {
            r_opt.parse("--r");
            s_opt.parse("--s");
            t_opt.parse("--t");
            const auto report = cross_validate(Params{r_opt.value, s_opt.value, t_opt.value}, opt.order);
            if (opt.format == "json") {
                json comparisons = json::array();
                for (const auto& c : report.comparisons) {
                    json j{{"left", c.left},
                           {"right", c.right},
                           {"component", std::string(1, c.component)},
                           {"skipped", c.skipped},
                           {"match", c.match}};
                    if (!c.skipped && !c.match) {
                        j["mismatch_order"] = c.mismatch_order;
                        j["left_value"] = c.left_value;
                        j["right_value"] = c.right_value;
                    }
                    comparisons.push_back(std::move(j));
                }
                emit_json(json{{"r", str(report.params.r)},
                               {"s", str(report.params.s)},
                               {"t", str(report.params.t)},
                               {"order", report.order},
                               {"tilde_degenerate", report.tilde_degenerate},
                               {"comparisons", comparisons}},
                          out);
            } else {
                if (report.tilde_degenerate)
                    out << "tilde: degenerate (s + t(r+t) = 0)\n";
                for (const auto& c : report.comparisons)
                    out << comparison_text(c) << "\n";
            }
        }
    } catch (const CLI::ParseError& e) { // post-parse validation (rational params, row bounds)
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace riordan::cli
