#ifndef RIORDAN_GROUP_HPP
#define RIORDAN_GROUP_HPP

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Lower-triangular matrix realization; entries above the diagonal are zero.
template <typename Scalar>
using TriangleMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Group element (g, f): g invertible (g(0) != 0), f composable
// (f(0) = 0, f'(0) != 0). Both components share one truncation order.
template <typename Scalar>
class RiordanElement {
  public:
    using Series = TruncatedSeries<Scalar>;

    RiordanElement(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
        const int n = min_order(g_, f_);
        if (n < 1)
            throw InvalidElement("element needs truncation order >= 1");
        g_ = g_.truncated(n);
        f_ = f_.truncated(n);
        if (g_[0] == Scalar(0))
            throw InvalidElement("g(0) = 0: g is not invertible");
        if (!(f_[0] == Scalar(0)))
            throw InvalidElement("f(0) != 0: f is not composable");
        if (f_[1] == Scalar(0))
            throw InvalidElement("f'(0) = 0: f has no compositional inverse");
    }

    static RiordanElement Identity(int order) {
        return RiordanElement(Series::One(order), Series::X(order));
    }

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    int order() const { return g_.order(); }

  private:
    Series g_, f_;
};

// (g, f) . (u, v) = (g * u(f), v(f)).
template <typename Scalar>
RiordanElement<Scalar> product(const RiordanElement<Scalar>& a, const RiordanElement<Scalar>& b) {
    return RiordanElement<Scalar>(a.g() * compose(b.g(), a.f()), compose(b.f(), a.f()));
}

// (g, f)^-1 = (1 / g(fbar), fbar) with fbar the compositional inverse of f.
template <typename Scalar>
RiordanElement<Scalar> inverse(const RiordanElement<Scalar>& a) {
    const auto fbar = comp_inverse(a.f());
    return RiordanElement<Scalar>(reciprocal(compose(a.g(), fbar)), fbar);
}

// (g(-x), f(-x)), the product (1, -x) . (g, f).
template <typename Scalar>
RiordanElement<Scalar> subst_neg(const RiordanElement<Scalar>& a) {
    return RiordanElement<Scalar>(subst_neg(a.g()), subst_neg(a.f()));
}

template <typename Scalar>
bool operator==(const RiordanElement<Scalar>& a, const RiordanElement<Scalar>& b) {
    return a.g() == b.g() && a.f() == b.f();
}

template <typename Scalar>
bool operator!=(const RiordanElement<Scalar>& a, const RiordanElement<Scalar>& b) {
    return !(a == b);
}

// Matrix realization a(n,k) = [x^n] g * f^k for 0 <= k <= n < nrows.
// Columns are built incrementally: column k+1 = column k times f.
template <typename Scalar>
TriangleMatrix<Scalar> matrix(const RiordanElement<Scalar>& a, int nrows) {
    if (nrows < 1)
        throw Error("matrix needs at least one row");
    if (nrows - 1 > a.order())
        throw OrderTooSmall("matrix with " + std::to_string(nrows) + " rows needs truncation order >= " +
                            std::to_string(nrows - 1));
    TriangleMatrix<Scalar> m(nrows, nrows);
    m.setConstant(Scalar(0));
    auto col = a.g();
    for (int k = 0; k < nrows; ++k) {
        for (int n = k; n < nrows; ++n)
            m(n, k) = col[n];
        if (k + 1 < nrows)
            col = col * a.f();
    }
    return m;
}

// Outcome of a truncated identity check; `first_failure` is the smallest
// order at which the identity breaks (meaningful when !ok).
struct InvolutionCheck {
    bool ok = false;
    int first_failure = -1;

    explicit operator bool() const { return ok; }
};

// (g, f) is an involution iff g * g(f) = 1 and f(f) = x, checked to the
// working order.
template <typename Scalar>
InvolutionCheck is_involution(const RiordanElement<Scalar>& a) {
    const int n = a.order();
    const auto gg = a.g() * compose(a.g(), a.f());
    const auto ff = compose(a.f(), a.f());
    const auto m1 = first_mismatch(gg, TruncatedSeries<Scalar>::One(n));
    const auto m2 = first_mismatch(ff, TruncatedSeries<Scalar>::X(n));
    if (!m1 && !m2)
        return {true, -1};
    int fail = n + 1;
    if (m1)
        fail = std::min(fail, *m1);
    if (m2)
        fail = std::min(fail, *m2);
    return {false, fail};
}

// (g, f) is a pseudo-involution iff (g, -f) is an involution.
template <typename Scalar>
InvolutionCheck is_pseudo_involution(const RiordanElement<Scalar>& a) {
    return is_involution(RiordanElement<Scalar>(a.g(), -a.f()));
}

// The involution companion (g, -f) of a pseudo-involution, and vice versa.
template <typename Scalar>
RiordanElement<Scalar> companion(const RiordanElement<Scalar>& a) {
    return RiordanElement<Scalar>(a.g(), -a.f());
}

// Element (1/(1 - alpha x), x/(1 - alpha x)) of the Bin subgroup.
template <typename Scalar>
RiordanElement<Scalar> bin_element(const Scalar& alpha, int order) {
    using Series = TruncatedSeries<Scalar>;
    const auto den = Series::Polynomial(order, {Scalar(1), -alpha});
    return RiordanElement<Scalar>(reciprocal(den), Series::X(order) * reciprocal(den));
}

template <typename Scalar>
std::vector<Scalar> row_sums(const TriangleMatrix<Scalar>& m) {
    std::vector<Scalar> sums;
    sums.reserve(m.rows());
    for (Eigen::Index n = 0; n < m.rows(); ++n)
        sums.push_back(m.row(n).sum());
    return sums;
}

// Generating function of the row sums: g / (1 - f).
template <typename Scalar>
TruncatedSeries<Scalar> row_sums_series(const RiordanElement<Scalar>& a) {
    return a.g() / (TruncatedSeries<Scalar>::One(a.order()) - a.f());
}

template <typename Scalar>
bool exact_equal(const TriangleMatrix<Scalar>& a, const TriangleMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j)))
                return false;
    return true;
}

} // namespace riordan

#endif // RIORDAN_GROUP_HPP
