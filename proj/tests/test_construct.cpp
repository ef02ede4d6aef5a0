#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "oracles.hpp"
#include "riordan/construct.hpp"
#include "riordan/expr.hpp"

using oracles::Rng;
using riordan::Rational;
using Series = riordan::TruncatedSeries<Rational>;
using Element = riordan::RiordanElement<Rational>;
using Params = riordan::FamilyParams<Rational>;

namespace {

riordan::TriangleMatrix<Rational> load_fixture(const std::string& name, int& nrows) {
    std::ifstream in(std::string(RIORDAN_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    const auto j = nlohmann::json::parse(in);
    const auto& rows = j.at("rows");
    nrows = static_cast<int>(rows.size());
    riordan::TriangleMatrix<Rational> m(nrows, nrows);
    m.setConstant(Rational(0));
    for (int n = 0; n < nrows; ++n)
        for (int k = 0; k <= n; ++k)
            m(n, k) = Rational::from_string(rows[n][k].get<std::string>());
    return m;
}

void check_against_fixture(const Element& e, const std::string& fixture) {
    int nrows = 0;
    const auto expected = load_fixture(fixture, nrows);
    CHECK(riordan::exact_equal(matrix(e, nrows), expected));
}

// Independent recurrence evaluation with plain vector arithmetic.
std::vector<oracles::Vec> rows_from(const riordan::OrthoRecurrence<Rational>& rec, int nrows) {
    oracles::Vec alphas, betas;
    for (int n = 2; n < nrows; ++n) {
        alphas.push_back(rec.alpha(n));
        betas.push_back(rec.beta(n));
    }
    oracles::Vec p0(rec.p0().begin(), rec.p0().end());
    oracles::Vec p1(rec.p1().begin(), rec.p1().end());
    return oracles::recurrence_rows(p0, p1, alphas, betas, nrows);
}

void check_rows_match(const Element& e, const std::vector<oracles::Vec>& rows) {
    const int nrows = static_cast<int>(rows.size());
    const auto m = matrix(e, nrows);
    for (int n = 0; n < nrows; ++n) {
        REQUIRE(static_cast<int>(rows[n].size()) == n + 1);
        for (int k = 0; k <= n; ++k)
            CHECK(m(n, k) == rows[n][k]);
    }
}

} // namespace

TEST_CASE("the construction yields involutions") {
    const int n = 24;
    const auto c = riordan::eval("c(x)", n);
    const auto xc = riordan::eval("x*c(x)", n);
    const auto inv = riordan::involution_from(c, xc, Element::Identity(n));
    CHECK(is_involution(inv).ok);

    // column 0 begins 1, -2, 4, -12, 40, -144, 544 (the published closed form
    // ((1+xc)c, -x(1+xc)c) instead matches the construction applied to the
    // inverse pair (1-x, x(1-x)); see the test below)
    const Rational head[] = {1, -2, 4, -12, 40, -144, 544};
    for (int i = 0; i < 7; ++i)
        CHECK(inv.g()[i] == head[i]);
    CHECK(inv.f() == -(Series::X(n) * inv.g()));
}

TEST_CASE("the catalan closed form arises from (1-x, x(1-x))") {
    const int n = 20;
    const auto inv = riordan::involution_from(riordan::eval("1-x", n), riordan::eval("x*(1-x)", n),
                                              Element::Identity(n));
    const auto expected_g = riordan::eval("(1+x*c(x))*c(x)", n);
    CHECK(inv.g() == expected_g);
    CHECK(inv.f() == -(Series::X(n) * expected_g));
    CHECK(is_involution(inv).ok);
}

TEST_CASE("motzkin-derived involution matches its golden matrix") {
    const int n = 12;
    const auto m = riordan::eval("M(x)", n);
    const auto inv = riordan::involution_from(m, Series::X(n) * m, Element::Identity(n));
    check_against_fixture(inv, "motzkin_involution.json");
    CHECK(is_involution(inv).ok);
}

TEST_CASE("third catalan example collapses g to 1") {
    const int n = 16;
    const auto inv = riordan::involution_from(riordan::eval("1/(1+x^2)", n),
                                              riordan::eval("x*(1-x)/(1+x^2)", n), Element::Identity(n));
    CHECK(inv.g() == Series::One(n));
    CHECK(inv.f() == riordan::eval("-x*(1+x)*c(x*(1+x))", n));
}

TEST_CASE("RNA involution from the inverted element and the binomial P") {
    const int n = 12;
    const Element base(riordan::eval("1/(1+x^2)", n), riordan::eval("x/(1+x^2)", n));
    const auto arg = inverse(base);
    const auto pascal = riordan::bin_element(Rational(1), n);
    const auto inv = riordan::involution_from(arg.g(), arg.f(), pascal);
    check_against_fixture(inv, "rna_involution.json");
    CHECK(is_involution(inv).ok);
}

TEST_CASE("involution_from validates P") {
    const int n = 12;
    const auto c = riordan::eval("c(x)", n);
    const Element not_pseudo(c, Series::X(n) * c);
    REQUIRE_FALSE(is_pseudo_involution(not_pseudo).ok);
    CHECK_THROWS_AS(riordan::involution_from(c, Series::X(n) * c, not_pseudo), riordan::NotPseudoInvolution);
    CHECK_NOTHROW(riordan::involution_from_unchecked(c, Series::X(n) * c, not_pseudo));
}

TEST_CASE("involution grid with several P choices") {
    const int n = 24;
    Rng rng(808);
    const std::vector<Element> ps{Element::Identity(n), riordan::bin_element(Rational(1), n),
                                  riordan::bin_element(Rational(-1), n),
                                  riordan::bin_element(Rational(1, 2), n)};
    static const std::vector<Rational> f1{Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
    for (int it = 0; it < 5; ++it) {
        const auto g = rng.unit_series(n, 3, 2);
        const auto f = rng.composable_series(n, f1);
        for (const auto& p : ps) {
            const auto inv = riordan::involution_from(g, f, p);
            CHECK(is_involution(inv).ok);

            // (g,f) . I = P . (g(-x), f(-x)) and (g,f) = P . (g(-x), f(-x)) . I
            const Element a(g, f);
            const auto lhs = product(a, inv);
            const auto rhs = product(p, subst_neg(a));
            CHECK(lhs == rhs);
            CHECK(product(rhs, inv) == a);
        }
    }
}

TEST_CASE("chebyshev coefficient array") {
    const int n = 16;

    // (0,0,0,0): the identity array, P_n = x^n
    const auto trivial = riordan::chebyshev_array(Rational(0), Rational(0), Rational(0), Rational(0), n);
    CHECK(trivial.first == Element::Identity(n));
    const auto p5 = trivial.second.polynomial(5);
    for (int i = 0; i <= 5; ++i)
        CHECK(p5[static_cast<std::size_t>(i)] == Rational(i == 5 ? 1 : 0));

    // (0,0,2,1): row 2 is P_2 = (x-2)^2 - 1 = 3 - 4x + x^2
    const auto cheb = riordan::chebyshev_array(Rational(0), Rational(0), Rational(2), Rational(1), n);
    const auto m = matrix(cheb.first, 3);
    CHECK(m(2, 0) == Rational(3));
    CHECK(m(2, 1) == Rational(-4));
    CHECK(m(2, 2) == Rational(1));
}

TEST_CASE("chebyshev rows follow the stated seeds and recurrence") {
    const int nrows = 11;
    Rng rng(809);
    for (int it = 0; it < 12; ++it) {
        const auto r = rng.rational(), s = rng.rational(), a = rng.rational(), b = rng.rational();
        INFO("r=", r, " s=", s, " a=", a, " b=", b);
        const auto [elem, rec] = riordan::chebyshev_array(r, s, a, b, 16);

        // independent rows: P_0 = 1, P_1 = x - a - r,
        // P_2 = x^2 - (2a+r) x + a^2 + ar - b - s, then (x-a) P - b P.
        std::vector<oracles::Vec> rows{{Rational(1)}, {-a - r, Rational(1)}};
        rows.push_back({a * a + a * r - b - s, -(Rational(2) * a + r), Rational(1)});
        while (static_cast<int>(rows.size()) < nrows) {
            auto next = oracles::poly_mul({-a, Rational(1)}, rows.back());
            next = oracles::poly_sub(std::move(next), oracles::poly_scale(b, rows[rows.size() - 2]));
            rows.push_back(std::move(next));
        }
        check_rows_match(elem, rows);

        // and the recurrence object reproduces the same rows
        check_rows_match(elem, rows_from(rec, nrows));
    }
}

TEST_CASE("ortho (r,s) coefficient array") {
    const int n = 16;
    const auto trivial = riordan::ortho_rs_array(Rational(0), Rational(0), n);
    CHECK(trivial.first == Element::Identity(n));

    // row 1 of the matrix is (-2s, 1), i.e. P_1 = x - 2s
    Rng rng(810);
    for (int it = 0; it < 6; ++it) {
        const auto r = rng.rational(), s = rng.rational();
        const auto m = matrix(riordan::ortho_rs_array(r, s, n).first, 2);
        CHECK(m(1, 0) == Rational(-2) * s);
        CHECK(m(1, 1) == Rational(1));
    }
}

TEST_CASE("ortho rows follow their three-term recurrence") {
    const int nrows = 11;
    Rng rng(811);
    for (int it = 0; it < 12; ++it) {
        const auto r = rng.rational(), s = rng.rational();
        INFO("r=", r, " s=", s);
        const auto [elem, rec] = riordan::ortho_rs_array(r, s, 16);
        CHECK(rec.alpha(2) == Rational(2) * r + s);
        CHECK(rec.alpha(5) == Rational(2) * r + s);
        CHECK(rec.beta(3) == r * (r + s)); // the constant tail
        check_rows_match(elem, rows_from(rec, nrows));
    }
}

TEST_CASE("family closed forms") {
    const int n = 20;
    const auto schroder = riordan::family_rst(Params{Rational(1), Rational(0), Rational(1)}, n);
    const auto s = riordan::eval("S(x)", n);
    CHECK(schroder.g() == s);
    CHECK(schroder.f() == -(Series::X(n) * s * s));
    CHECK(is_involution(schroder).ok);

    const auto catalan2 = riordan::family_rst(Params{Rational(1), Rational(1, 4), Rational(1, 2)}, n);
    const auto c = riordan::eval("c(x)", n);
    CHECK(catalan2.g() == c * c);
    CHECK(catalan2.f() == -(Series::X(n) * c * c * c));
}

TEST_CASE("family golden matrices") {
    const int n = 12;
    check_against_fixture(riordan::family_rst(Params{Rational(1), Rational(0), Rational(1)}, n),
                          "schroder_involution.json");
    check_against_fixture(companion(riordan::family_rst(Params{Rational(1), Rational(0), Rational(2)}, n)),
                          "r1t2_pseudo_involution.json");
}

TEST_CASE("the two family routes agree and give involutions") {
    const int n = 20;
    Rng rng(812);
    for (int it = 0; it < 10; ++it) {
        const Params p{rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2)};
        INFO("params (", p.r, ", ", p.s, ", ", p.t, ")");
        const auto fam = riordan::family_rst(p, n);
        CHECK(fam == riordan::family_rst_via_construction(p, n));
        CHECK(is_involution(fam).ok);
    }
    // t = 0 degenerates to the Bin-subgroup image (1/(1-2rx), -x/(1-2rx))
    const auto bin_case = riordan::family_rst(Params{Rational(1), Rational(1), Rational(0)}, n);
    CHECK(bin_case.g() == riordan::eval("1/(1-2*x)", n));
    CHECK(bin_case.f() == riordan::eval("-x/(1-2*x)", n));
}

TEST_CASE("r = 2t, s = t^2 gives (c(2tx)^2, -x c(2tx)^3)") {
    const int n = 18;
    for (const auto& t : {Rational(1), Rational(2), Rational(1, 2)}) {
        INFO("t = ", t);
        const auto fam = riordan::family_rst(Params{Rational(2) * t, t * t, t}, n);
        const auto c2t = compose(riordan::eval("c(x)", n), Series::Monomial(n, 1, Rational(2) * t));
        CHECK(fam.g() == c2t * c2t);
        CHECK(fam.f() == -(Series::X(n) * c2t * c2t * c2t));
    }
}

TEST_CASE("corollary equals the s = 0 family") {
    const int n = 18;
    const auto schroder = riordan::corollary_rt(Rational(1), Rational(1), n);
    const auto s = riordan::eval("S(x)", n);
    CHECK(schroder.g() == s);
    CHECK(schroder.f() == -(Series::X(n) * s * s));

    const auto m = matrix(companion(riordan::corollary_rt(Rational(1), Rational(2), n)), 3);
    CHECK(m(2, 0) == Rational(8));
    CHECK(m(2, 1) == Rational(8));
    CHECK(m(2, 2) == Rational(1));

    Rng rng(813);
    for (int it = 0; it < 8; ++it) {
        const auto r = rng.rational(4, 2), t = rng.rational(4, 2);
        INFO("r=", r, " t=", t);
        CHECK(riordan::corollary_rt(r, t, n) == riordan::family_rst(Params{r, Rational(0), t}, n));
    }
}

TEST_CASE("published radical closed forms") {
    const int n = 16;
    // At (1,1,0) the published g~ collapses to 1/(1-x) by direct substitution.
    const auto [g110, f110] = riordan::tilde_closed_forms(Params{Rational(1), Rational(1), Rational(0)}, n);
    CHECK(g110 == riordan::eval("1/(1-x)", n));

    // s + t(r+t) = 0 degenerates.
    CHECK_THROWS_AS(riordan::tilde_closed_forms(Params{Rational(1), Rational(-2), Rational(1)}, n),
                    riordan::Degenerate);

    // The published f~ reproduces the construction's f; the published g~
    // reproduces the row sums of the involution, not its g.
    Rng rng(814);
    for (int it = 0; it < 8; ++it) {
        const Params p{rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
        if (p.s + p.t * (p.r + p.t) == Rational(0))
            continue;
        INFO("params (", p.r, ", ", p.s, ", ", p.t, ")");
        const auto fam = riordan::family_rst(p, n);
        const auto [gt, ft] = riordan::tilde_closed_forms(p, n);
        CHECK(ft == fam.f());
        CHECK(gt == riordan::row_sums_series(fam));
    }
}

TEST_CASE("cross validation at the two pinned points") {
    const int n = 24;

    const auto at110 = riordan::cross_validate(Params{Rational(1), Rational(1), Rational(0)}, n);
    CHECK(at110.construction_routes_agree());
    const auto* flag = at110.find("family", "tilde", 'g');
    REQUIRE(flag != nullptr);
    CHECK_FALSE(flag->match);
    CHECK(flag->mismatch_order == 1);
    CHECK(flag->left_value == "2");
    CHECK(flag->right_value == "1");

    const auto at101 = riordan::cross_validate(Params{Rational(1), Rational(0), Rational(1)}, n);
    CHECK(at101.construction_routes_agree());
    CHECK(at101.find("family", "construction", 'g')->match);
    CHECK(at101.find("family", "jfraction", 'g')->match);
    CHECK(at101.find("construction", "jfraction", 'g')->match);
    CHECK(at101.find("family", "construction", 'f')->match);

    // the supplementary diagnosis: published g~ = row sums
    CHECK(at110.find("tilde", "row_sums", 'g')->match);
    CHECK(at101.find("tilde", "row_sums", 'g')->match);
}

TEST_CASE("cross validation marks degenerate closed forms") {
    const auto report = riordan::cross_validate(Params{Rational(1), Rational(-2), Rational(1)}, 16);
    CHECK(report.tilde_degenerate);
    CHECK(report.find("family", "tilde", 'g')->skipped);
    CHECK(report.construction_routes_agree());

    // routes (i) and (ii) always agree
    Rng rng(815);
    for (int it = 0; it < 5; ++it) {
        const Params p{rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
        const auto r = riordan::cross_validate(p, 16);
        CHECK(r.find("family", "construction", 'g')->match);
        CHECK(r.find("family", "construction", 'f')->match);
    }
}
