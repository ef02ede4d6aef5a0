#ifndef RIORDAN_ANALYSIS_HPP
#define RIORDAN_ANALYSIS_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/params.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Jacobi continued fraction
//   g = 1 / (1 - a0 x - b1 x^2 / (1 - a1 x - b2 x^2 / (...)))
// with alphas = (a0, a1, ...) and betas = (b1, b2, ...). `terminated` is set
// when the expansion met a vanishing beta, in which case the stored prefix
// represents g exactly (rational-function case) rather than a truncation.
template <typename Scalar>
struct JFraction {
    std::vector<Scalar> alphas;
    std::vector<Scalar> betas;
    bool terminated = false;

    int depth() const { return static_cast<int>(betas.size()); }
};

// B-sequence attached to f via f = x + x f B(x f), B the ordinary
// generating function of `terms`. `residual_ok` records whether the
// functional equation re-verified after extraction.
template <typename Scalar>
struct BSequence {
    std::vector<Scalar> terms;
    bool residual_ok = false;
};

namespace detail {

// Truncation order N supports reading alpha_0..alpha_d and beta_1..beta_d
// with d = floor((N - 1) / 2).
inline int default_jfraction_depth(int order) { return std::max(0, (order - 1) / 2); }

} // namespace detail

// Peel off J-fraction coefficients bottom-up: with h = 1 - 1/g_k,
// alpha_k = [x] h, beta_{k+1} = [x^2] h, g_{k+1} = (h - alpha_k x) / (beta_{k+1} x^2).
// Yields up to depth+1 alphas and depth betas (the truncation order permitting);
// a vanishing beta stops the expansion with terminated = true.
template <typename Scalar>
JFraction<Scalar> jfraction_expand(const TruncatedSeries<Scalar>& g, int depth = -1) {
    if (!(g[0] == Scalar(1)))
        throw NonUnitConstant("J-fraction expansion requires g(0) = 1");
    if (depth < 0)
        depth = detail::default_jfraction_depth(g.order());
    JFraction<Scalar> jf;
    auto gk = g;
    for (int k = 0;; ++k) {
        if (gk.order() < 1)
            break;
        const auto h = TruncatedSeries<Scalar>::One(gk.order()) - reciprocal(gk);
        jf.alphas.push_back(h[1]);
        if (k == depth || gk.order() < 3) // the beta below x^2 needs a readable alpha after it
            break;
        const Scalar beta = h[2];
        if (beta == Scalar(0)) {
            jf.terminated = true;
            break;
        }
        jf.betas.push_back(beta);
        const auto shifted = h - TruncatedSeries<Scalar>::Monomial(h.order(), 1, jf.alphas.back());
        gk = div_x_power(shifted, 2) * (Scalar(1) / beta);
    }
    return jf;
}

// Bottom-up evaluation of the stored truncation. Exact to order
// min(order, 2*depth+1), and to every order when terminated.
template <typename Scalar>
TruncatedSeries<Scalar> jfraction_eval(const JFraction<Scalar>& jf, int order) {
    using Series = TruncatedSeries<Scalar>;
    auto level = Series::One(order);
    for (int k = static_cast<int>(jf.alphas.size()) - 1; k >= 0; --k) {
        auto den = Series::One(order) - Series::Monomial(order, 1, jf.alphas[k]);
        if (k < static_cast<int>(jf.betas.size()))
            den = den - jf.betas[k] * mul_x_power(level, 2);
        level = reciprocal(den);
    }
    return level;
}

// Two J-fractions describe the same function through `depth` layers.
// Decided functionally: the evaluations agree to order 2*depth + 1 (this is
// exactly an (alpha, beta) prefix match, and is transparent to termination).
template <typename Scalar>
bool jfraction_agree(const JFraction<Scalar>& a, const JFraction<Scalar>& b, int depth) {
    const int order = 2 * depth + 1;
    return jfraction_eval(a, order) == jfraction_eval(b, order);
}

// The two continued fractions attached to the (r, s, t) family: the first
// expands the involution's g-part, the second the generating function of its
// row sums. Both share the tail alpha_k = r + 2t, beta_k = s + t(r + t); they
// differ in the head: (a0, b1) = (2r, 2rt) resp. (2r - 1, 2t(r - 1)).
template <typename Scalar>
std::pair<JFraction<Scalar>, JFraction<Scalar>> predicted_jfractions(const FamilyParams<Scalar>& p, int depth) {
    const Scalar tail_alpha = p.r + Scalar(2) * p.t;
    const Scalar tail_beta = p.s + p.t * (p.r + p.t);

    const auto build = [&](const Scalar& head_alpha, const Scalar& head_beta) {
        JFraction<Scalar> jf;
        jf.alphas.push_back(head_alpha);
        for (int k = 0; k < depth; ++k) {
            const Scalar beta = (k == 0) ? head_beta : tail_beta;
            if (beta == Scalar(0)) {
                jf.terminated = true;
                return jf;
            }
            jf.betas.push_back(beta);
            jf.alphas.push_back(tail_alpha);
        }
        return jf;
    };

    return {build(Scalar(2) * p.r, Scalar(2) * p.r * p.t),
            build(Scalar(2) * p.r - Scalar(1), Scalar(2) * p.t * (p.r - Scalar(1)))};
}

// Solve f = x + x f B(x f) for b_0 .. b_{depth-1}: the multiplier x f (x f)^k
// has leading coefficient 1 at x^{2k+2}, so b_k is read off the residual
// there. The full equation is then re-verified to order min(N, 2*depth+1).
template <typename Scalar>
BSequence<Scalar> b_sequence(const TruncatedSeries<Scalar>& f, int depth = -1) {
    using Series = TruncatedSeries<Scalar>;
    if (f.order() < 1 || !(f[0] == Scalar(0)) || !(f[1] == Scalar(1)))
        throw BadNormalization("B-sequence extraction requires f = x + O(x^2)");
    const int feasible = f.order() / 2;
    if (depth < 0 || depth > feasible)
        depth = feasible;

    const auto w = mul_x_power(f, 1); // x f, valuation 2, leading coefficient 1
    BSequence<Scalar> out;
    auto residual = f - Series::X(f.order());
    auto multiplier = w;
    for (int k = 0; k < depth; ++k) {
        const Scalar b = residual[2 * k + 2];
        out.terms.push_back(b);
        residual = residual - b * multiplier;
        if (k + 1 < depth)
            multiplier = multiplier * w;
    }

    // Independent re-verification of f = x + w * B(w) with the extracted B.
    auto bgf = Series::Zero(f.order());
    {
        typename Series::CoeffVector c(f.order() + 1);
        c.setConstant(Scalar(0));
        for (int k = 0; k < static_cast<int>(out.terms.size()) && k <= f.order(); ++k)
            c[k] = out.terms[k];
        bgf = Series(std::move(c));
    }
    const auto rhs = Series::X(f.order()) + w * compose(bgf, w);
    const auto diff = f - rhs;
    const int check_to = std::min(f.order(), 2 * depth + 1);
    out.residual_ok = true;
    for (int i = 0; i <= check_to; ++i)
        if (!(diff[i] == Scalar(0))) {
            out.residual_ok = false;
            break;
        }
    return out;
}

} // namespace riordan

#endif // RIORDAN_ANALYSIS_HPP
