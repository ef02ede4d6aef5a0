#ifndef RIORDAN_CONSTRUCT_HPP
#define RIORDAN_CONSTRUCT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "riordan/analysis.hpp"
#include "riordan/errors.hpp"
#include "riordan/group.hpp"
#include "riordan/params.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Orthogonal polynomial family P_n: P_{-1} = 0, P_0 and P_1 given as seeds,
// and P_n = (x - alpha(n)) P_{n-1} - beta(n) P_{n-2} for n >= 2.
// Coefficient vectors run from the constant term up; P_n has exact degree n.
template <typename Scalar>
class OrthoRecurrence {
  public:
    using Coeffs = std::vector<Scalar>;

    OrthoRecurrence(Coeffs p0, Coeffs p1, std::vector<Scalar> alphas, std::vector<Scalar> betas)
        : p0_(std::move(p0)), p1_(std::move(p1)), alphas_(std::move(alphas)), betas_(std::move(betas)) {
        if (alphas_.size() != betas_.size())
            throw Error("recurrence needs matching alpha/beta lists");
    }

    // Largest n for which polynomial(n) is defined.
    int max_degree() const { return static_cast<int>(alphas_.size()) + 1; }

    const Scalar& alpha(int n) const { return alphas_.at(n - 2); }
    const Scalar& beta(int n) const { return betas_.at(n - 2); }
    const Coeffs& p0() const { return p0_; }
    const Coeffs& p1() const { return p1_; }
    const std::vector<Scalar>& alphas() const { return alphas_; }
    const std::vector<Scalar>& betas() const { return betas_; }

    Coeffs polynomial(int n) const {
        if (n < 0 || n > max_degree())
            throw Error("polynomial degree outside recurrence data");
        if (n == 0)
            return p0_;
        if (n == 1)
            return p1_;
        Coeffs prev2 = p0_, prev1 = p1_;
        for (int m = 2; m <= n; ++m) {
            Coeffs next(m + 1, Scalar(0));
            for (std::size_t i = 0; i < prev1.size(); ++i) {
                next[i + 1] += prev1[i];             // x * P_{m-1}
                next[i] -= alpha(m) * prev1[i];      // -alpha_m * P_{m-1}
            }
            for (std::size_t i = 0; i < prev2.size(); ++i)
                next[i] -= beta(m) * prev2[i];       // -beta_m * P_{m-2}
            prev2 = std::move(prev1);
            prev1 = std::move(next);
        }
        return prev1;
    }

  private:
    Coeffs p0_, p1_;
    std::vector<Scalar> alphas_, betas_;
};

// The involution (g, f)^-1 . P . (g(-x), f(-x)) without validating P.
template <typename Scalar>
RiordanElement<Scalar> involution_from_unchecked(const TruncatedSeries<Scalar>& g, const TruncatedSeries<Scalar>& f,
                                                 const RiordanElement<Scalar>& p) {
    const RiordanElement<Scalar> a(g, f);
    return product(product(inverse(a), p), subst_neg(a));
}

// The involution (g, f)^-1 . P . (g(-x), f(-x)); P must pass the truncated
// pseudo-involution check.
template <typename Scalar>
RiordanElement<Scalar> involution_from(const TruncatedSeries<Scalar>& g, const TruncatedSeries<Scalar>& f,
                                       const RiordanElement<Scalar>& p) {
    const auto check = is_pseudo_involution(p);
    if (!check)
        throw NotPseudoInvolution("P fails the pseudo-involution check at order " +
                                  std::to_string(check.first_failure));
    return involution_from_unchecked(g, f, p);
}

// Coefficient array of the generalized Chebyshev family:
// ((1 - r x - s x^2) / (1 + a x + b x^2), x / (1 + a x + b x^2)).
// Rows are the polynomials of the recurrence with seeds P_0 = 1,
// P_1 = x - a - r and perturbed first step alpha_2 = a, beta_2 = b + s,
// then alpha_n = a, beta_n = b.
template <typename Scalar>
std::pair<RiordanElement<Scalar>, OrthoRecurrence<Scalar>> chebyshev_array(const Scalar& r, const Scalar& s,
                                                                           const Scalar& a, const Scalar& b,
                                                                           int order) {
    using Series = TruncatedSeries<Scalar>;
    const auto den = Series::Polynomial(order, {Scalar(1), a, b});
    const auto inv_den = reciprocal(den);
    RiordanElement<Scalar> elem(Series::Polynomial(order, {Scalar(1), -r, -s}) * inv_den,
                                Series::X(order) * inv_den);

    std::vector<Scalar> alphas, betas;
    for (int n = 2; n <= order; ++n) {
        alphas.push_back(a);
        betas.push_back(n == 2 ? b + s : b);
    }
    OrthoRecurrence<Scalar> rec({Scalar(1)}, {-a - r, Scalar(1)}, std::move(alphas), std::move(betas));
    return {std::move(elem), std::move(rec)};
}

// Coefficient array ((1 + (r-s) x) / (1 + (r+s) x), x / ((1 + r x)(1 + (r+s) x)))
// with seeds P_0 = 1, P_1 = x - 2s; the first recurrence step needs
// beta_2 = 2 r s, after which alpha_n = 2r + s and beta_n = r (r + s).
template <typename Scalar>
std::pair<RiordanElement<Scalar>, OrthoRecurrence<Scalar>> ortho_rs_array(const Scalar& r, const Scalar& s,
                                                                          int order) {
    using Series = TruncatedSeries<Scalar>;
    const auto den = Series::Polynomial(order, {Scalar(1), r + s});
    RiordanElement<Scalar> elem(Series::Polynomial(order, {Scalar(1), r - s}) / den,
                                Series::X(order) / (Series::Polynomial(order, {Scalar(1), r}) * den));

    std::vector<Scalar> alphas, betas;
    for (int n = 2; n <= order; ++n) {
        alphas.push_back(Scalar(2) * r + s);
        betas.push_back(n == 2 ? Scalar(2) * r * s : r * (r + s));
    }
    OrthoRecurrence<Scalar> rec({Scalar(1)}, {Scalar(-2) * s, Scalar(1)}, std::move(alphas), std::move(betas));
    return {std::move(elem), std::move(rec)};
}

namespace detail {

template <typename Scalar>
TruncatedSeries<Scalar> family_numerator(const FamilyParams<Scalar>& p, int order) {
    return TruncatedSeries<Scalar>::Polynomial(
        order, {Scalar(1), -(p.r - Scalar(2) * p.t), -(p.r * p.t - p.s - p.t * p.t)});
}

template <typename Scalar>
TruncatedSeries<Scalar> family_denominator(const FamilyParams<Scalar>& p, int order) {
    return TruncatedSeries<Scalar>::Polynomial(
        order, {Scalar(1), p.r + Scalar(2) * p.t, p.r * p.t + p.s + p.t * p.t});
}

} // namespace detail

// The (r, s, t) involution as the evaluated product
//   (N/D, x/D)^-1 . (1, -x(1 + 2t x)/N)
// with D = 1 + (r+2t) x + (rt+s+t^2) x^2 and N = 1 - (r-2t) x - (rt-s-t^2) x^2.
template <typename Scalar>
RiordanElement<Scalar> family_rst(const FamilyParams<Scalar>& p, int order) {
    using Series = TruncatedSeries<Scalar>;
    const auto num = detail::family_numerator(p, order);
    const auto den = detail::family_denominator(p, order);
    const RiordanElement<Scalar> first(num / den, Series::X(order) / den);
    const RiordanElement<Scalar> second(Series::One(order),
                                        -(Series::Polynomial(order, {Scalar(0), Scalar(1), Scalar(2) * p.t}) / num));
    return product(inverse(first), second);
}

// The same involution obtained through the general construction applied to
// (1/(1 + r x + s x^2), x (1 - t x)/(1 + r x + s x^2)) with P = (1, x).
template <typename Scalar>
RiordanElement<Scalar> family_rst_via_construction(const FamilyParams<Scalar>& p, int order) {
    using Series = TruncatedSeries<Scalar>;
    const auto den = Series::Polynomial(order, {Scalar(1), p.r, p.s});
    const auto inv_den = reciprocal(den);
    const auto g = inv_den;
    const auto f = Series::Polynomial(order, {Scalar(0), Scalar(1), -p.t}) * inv_den;
    return involution_from_unchecked(g, f, RiordanElement<Scalar>::Identity(order));
}

// Verbatim expansion of the published radical closed forms (g~, f~). They are
// reported through cross_validate rather than trusted: the g~ formula does
// not reproduce the construction (it expands to the row-sums generating
// function instead), while the f~ formula does match.
template <typename Scalar>
std::pair<TruncatedSeries<Scalar>, TruncatedSeries<Scalar>> tilde_closed_forms(const FamilyParams<Scalar>& p,
                                                                               int order) {
    using Series = TruncatedSeries<Scalar>;
    const Scalar unit = p.s + p.t * (p.r + p.t);
    if (unit == Scalar(0))
        throw Degenerate("closed forms degenerate when s + t(r + t) = 0");

    const auto radical =
        sqrt(Series::Polynomial(order, {Scalar(1), Scalar(-2) * (p.r + Scalar(2) * p.t), p.r * p.r - Scalar(4) * p.s}));

    const auto g_den = Series::Polynomial(order, {p.s + p.t * (p.t + Scalar(1)),
                                                  -(p.r * p.r * p.t + Scalar(2) * p.r * p.s - p.s + p.t * p.t)}) +
                       p.t * (p.r - Scalar(1)) * radical;
    const auto g_tilde = Series::Constant(order, unit) / g_den;

    const auto f_num = p.t * radical + Series::Polynomial(order, {-p.t, p.t * p.t - p.s});
    const auto f_den = Series::Polynomial(order, {p.s + p.t * p.t, -p.r * (p.r * p.t + Scalar(2) * p.s)}) +
                       p.r * p.t * radical;
    const auto f_tilde = f_num / f_den;

    return {g_tilde, f_tilde};
}

// s = 0 case of the family, via the factored product
//   ((1+(t-r)x)/(1+(t+r)x), x/((1+tx)(1+(t+r)x)))^-1 . (1, -x(1+2tx)/((1+tx)(1+(t-r)x))).
template <typename Scalar>
RiordanElement<Scalar> corollary_rt(const Scalar& r, const Scalar& t, int order) {
    using Series = TruncatedSeries<Scalar>;
    const auto one_tr = Series::Polynomial(order, {Scalar(1), t + r});
    const auto one_t = Series::Polynomial(order, {Scalar(1), t});
    const auto one_tmr = Series::Polynomial(order, {Scalar(1), t - r});
    const RiordanElement<Scalar> first(one_tmr / one_tr, Series::X(order) / (one_t * one_tr));
    const RiordanElement<Scalar> second(
        Series::One(order),
        -(Series::Polynomial(order, {Scalar(0), Scalar(1), Scalar(2) * t}) / (one_t * one_tmr)));
    return product(inverse(first), second);
}

// One pairwise comparison inside a cross-validation report.
struct SeriesComparison {
    std::string left;
    std::string right;
    char component = 'g';      // 'g' or 'f'
    bool skipped = false;      // comparison unavailable (degenerate route)
    bool match = false;
    int mismatch_order = -1;   // first differing power of x, when !match
    std::string left_value;    // coefficient at mismatch_order
    std::string right_value;
};

// Four-route consistency report for one parameter point. Routes:
//   family        the evaluated product (route i)
//   construction  the general construction with P = (1, x) (route ii)
//   tilde         the published radical closed forms (route iii)
//   jfraction     the predicted continued fraction for the g-part (route iv)
// A supplementary row compares tilde's g against the row-sums generating
// function, which is what that formula actually reproduces.
template <typename Scalar>
struct CrossValidateReport {
    FamilyParams<Scalar> params{};
    int order = 0;
    bool tilde_degenerate = false;
    std::vector<SeriesComparison> comparisons;

    const SeriesComparison* find(const std::string& left, const std::string& right, char component) const {
        for (const auto& c : comparisons)
            if (c.left == left && c.right == right && c.component == component)
                return &c;
        return nullptr;
    }

    bool construction_routes_agree() const {
        for (const auto& c : comparisons) {
            const bool tilde_free = c.left != "tilde" && c.right != "tilde";
            if (tilde_free && !c.skipped && !c.match)
                return false;
        }
        return true;
    }
};

namespace detail {

template <typename Scalar>
SeriesComparison compare_series(std::string left, std::string right, char component,
                                const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    SeriesComparison c;
    c.left = std::move(left);
    c.right = std::move(right);
    c.component = component;
    const auto mismatch = first_mismatch(a, b);
    c.match = !mismatch.has_value();
    if (mismatch) {
        c.mismatch_order = *mismatch;
        std::ostringstream lv, rv;
        lv << a[*mismatch];
        rv << b[*mismatch];
        c.left_value = lv.str();
        c.right_value = rv.str();
    }
    return c;
}

inline SeriesComparison skipped_comparison(std::string left, std::string right, char component) {
    SeriesComparison c;
    c.left = std::move(left);
    c.right = std::move(right);
    c.component = component;
    c.skipped = true;
    return c;
}

} // namespace detail

// Compare the four routes pairwise; mismatches are report content, never errors.
template <typename Scalar>
CrossValidateReport<Scalar> cross_validate(const FamilyParams<Scalar>& p, int order) {
    using Series = TruncatedSeries<Scalar>;
    CrossValidateReport<Scalar> report;
    report.params = p;
    report.order = order;

    const auto fam = family_rst(p, order);
    const auto cons = family_rst_via_construction(p, order);

    std::optional<std::pair<Series, Series>> tilde;
    try {
        tilde = tilde_closed_forms(p, order);
    } catch (const Degenerate&) {
        report.tilde_degenerate = true;
    }

    const int jdepth = (order + 1) / 2; // evaluation exact through the working order
    const auto predicted = predicted_jfractions(p, jdepth);
    const auto jg = jfraction_eval(predicted.first, order);

    auto& rows = report.comparisons;
    rows.push_back(detail::compare_series<Scalar>("family", "construction", 'g', fam.g(), cons.g()));
    rows.push_back(detail::compare_series<Scalar>("family", "construction", 'f', fam.f(), cons.f()));
    rows.push_back(detail::compare_series<Scalar>("family", "jfraction", 'g', fam.g(), jg));
    rows.push_back(detail::compare_series<Scalar>("construction", "jfraction", 'g', cons.g(), jg));
    if (tilde) {
        rows.push_back(detail::compare_series<Scalar>("family", "tilde", 'g', fam.g(), tilde->first));
        rows.push_back(detail::compare_series<Scalar>("construction", "tilde", 'g', cons.g(), tilde->first));
        rows.push_back(detail::compare_series<Scalar>("tilde", "jfraction", 'g', tilde->first, jg));
        rows.push_back(detail::compare_series<Scalar>("family", "tilde", 'f', fam.f(), tilde->second));
        rows.push_back(detail::compare_series<Scalar>("construction", "tilde", 'f', cons.f(), tilde->second));
        rows.push_back(
            detail::compare_series<Scalar>("tilde", "row_sums", 'g', tilde->first, row_sums_series(fam)));
    } else {
        rows.push_back(detail::skipped_comparison("family", "tilde", 'g'));
        rows.push_back(detail::skipped_comparison("construction", "tilde", 'g'));
        rows.push_back(detail::skipped_comparison("tilde", "jfraction", 'g'));
        rows.push_back(detail::skipped_comparison("family", "tilde", 'f'));
        rows.push_back(detail::skipped_comparison("construction", "tilde", 'f'));
        rows.push_back(detail::skipped_comparison("tilde", "row_sums", 'g'));
    }
    return report;
}

} // namespace riordan

#endif // RIORDAN_CONSTRUCT_HPP
