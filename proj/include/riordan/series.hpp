#ifndef RIORDAN_SERIES_HPP
#define RIORDAN_SERIES_HPP

#include <Eigen/Core>

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

// Formal power series truncated at an explicit order N: coefficients of
// x^0 .. x^N, nothing beyond is known. Every binary operation truncates to
// the minimum order of its inputs; an order is never extended silently.
// Values are immutable after construction.
template <typename Scalar>
class TruncatedSeries {
  public:
    using CoeffVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    static constexpr int kDefaultOrder = 24;

    explicit TruncatedSeries(CoeffVector coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() < 1)
            throw Error("series needs at least the constant coefficient");
    }

    static TruncatedSeries Zero(int order) { return TruncatedSeries(zeros(order)); }

    static TruncatedSeries Constant(int order, const Scalar& value) {
        CoeffVector c = zeros(order);
        c[0] = value;
        return TruncatedSeries(std::move(c));
    }

    static TruncatedSeries One(int order) { return Constant(order, Scalar(1)); }

    // The series x (composition identity). Requires order >= 1.
    static TruncatedSeries X(int order) { return Monomial(order, 1, Scalar(1)); }

    static TruncatedSeries Monomial(int order, int degree, const Scalar& value) {
        if (degree < 0 || degree > order)
            throw Error("monomial degree outside truncation order");
        CoeffVector c = zeros(order);
        c[degree] = value;
        return TruncatedSeries(std::move(c));
    }

    // Polynomial from low-order coefficients, zero-padded up to `order`.
    static TruncatedSeries Polynomial(int order, std::initializer_list<Scalar> low) {
        if (static_cast<int>(low.size()) > order + 1)
            throw Error("polynomial has more coefficients than the truncation order holds");
        CoeffVector c = zeros(order);
        int i = 0;
        for (const Scalar& v : low)
            c[i++] = v;
        return TruncatedSeries(std::move(c));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const CoeffVector& coeffs() const { return coeffs_; }

    const Scalar& operator[](int i) const { return coeffs_[i]; }

    // Coefficient access that treats indices beyond the order as unknown.
    const Scalar& coeff(int i) const {
        if (i < 0 || i > order())
            throw Error("coefficient index outside truncation order");
        return coeffs_[i];
    }

    bool is_zero() const {
        for (int i = 0; i <= order(); ++i)
            if (!(coeffs_[i] == Scalar(0)))
                return false;
        return true;
    }

    // Index of the first nonzero coefficient; nullopt for the zero series.
    std::optional<int> valuation() const {
        for (int i = 0; i <= order(); ++i)
            if (!(coeffs_[i] == Scalar(0)))
                return i;
        return std::nullopt;
    }

    // Restriction to a smaller order. Extension is deliberately unsupported.
    TruncatedSeries truncated(int new_order) const {
        if (new_order > order())
            throw Error("cannot extend a truncated series");
        if (new_order == order())
            return *this;
        return TruncatedSeries(CoeffVector(coeffs_.head(new_order + 1)));
    }

  private:
    static CoeffVector zeros(int order) {
        if (order < 0)
            throw Error("negative truncation order");
        CoeffVector c(order + 1);
        c.setConstant(Scalar(0));
        return c;
    }

    CoeffVector coeffs_;
};

template <typename Scalar>
int min_order(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    return std::min(a.order(), b.order());
}

template <typename Scalar>
TruncatedSeries<Scalar> operator+(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    const int n = min_order(a, b);
    typename TruncatedSeries<Scalar>::CoeffVector c = a.coeffs().head(n + 1) + b.coeffs().head(n + 1);
    return TruncatedSeries<Scalar>(std::move(c));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator-(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    const int n = min_order(a, b);
    typename TruncatedSeries<Scalar>::CoeffVector c = a.coeffs().head(n + 1) - b.coeffs().head(n + 1);
    return TruncatedSeries<Scalar>(std::move(c));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator-(const TruncatedSeries<Scalar>& a) {
    typename TruncatedSeries<Scalar>::CoeffVector c = -a.coeffs();
    return TruncatedSeries<Scalar>(std::move(c));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator*(const Scalar& s, const TruncatedSeries<Scalar>& a) {
    typename TruncatedSeries<Scalar>::CoeffVector c = a.coeffs();
    for (int i = 0; i < c.size(); ++i)
        c[i] = s * c[i];
    return TruncatedSeries<Scalar>(std::move(c));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator*(const TruncatedSeries<Scalar>& a, const Scalar& s) {
    return s * a;
}

// Cauchy product to the minimum order.
template <typename Scalar>
TruncatedSeries<Scalar> operator*(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    const int n = min_order(a, b);
    typename TruncatedSeries<Scalar>::CoeffVector c(n + 1);
    c.setConstant(Scalar(0));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == Scalar(0))
            continue;
        for (int j = 0; j + i <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries<Scalar>(std::move(c));
}

// Reciprocal of a unit series (nonzero constant term), same order.
template <typename Scalar>
TruncatedSeries<Scalar> reciprocal(const TruncatedSeries<Scalar>& b) {
    if (b[0] == Scalar(0))
        throw DivisionByNonUnit("reciprocal of a series with zero constant term");
    const int n = b.order();
    typename TruncatedSeries<Scalar>::CoeffVector q(n + 1);
    q[0] = Scalar(1) / b[0];
    for (int k = 1; k <= n; ++k) {
        Scalar acc(0);
        for (int i = 1; i <= k; ++i)
            acc += b[i] * q[k - i];
        q[k] = -acc / b[0];
    }
    return TruncatedSeries<Scalar>(std::move(q));
}

// Shift down by x^k. The first k coefficients must vanish; the order drops by k.
template <typename Scalar>
TruncatedSeries<Scalar> div_x_power(const TruncatedSeries<Scalar>& a, int k) {
    if (k < 0 || k > a.order())
        throw Error("x-power shift outside truncation order");
    for (int i = 0; i < k; ++i)
        if (!(a[i] == Scalar(0)))
            throw NonzeroLowOrder("nonzero coefficient of x^" + std::to_string(i) + " below the x^" +
                                  std::to_string(k) + " divisor");
    return TruncatedSeries<Scalar>(typename TruncatedSeries<Scalar>::CoeffVector(a.coeffs().tail(a.order() + 1 - k)));
}

// Shift up by x^k, keeping the order (top coefficients fall off).
template <typename Scalar>
TruncatedSeries<Scalar> mul_x_power(const TruncatedSeries<Scalar>& a, int k) {
    if (k < 0)
        throw Error("negative x-power shift");
    const int n = a.order();
    typename TruncatedSeries<Scalar>::CoeffVector c(n + 1);
    c.setConstant(Scalar(0));
    for (int i = k; i <= n; ++i)
        c[i] = a[i - k];
    return TruncatedSeries<Scalar>(std::move(c));
}

// Quotient q with q*b = a. A common factor x^v (v = valuation of b) is
// cancelled first, so the result order shrinks by v.
template <typename Scalar>
TruncatedSeries<Scalar> operator/(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    const int n = min_order(a, b);
    const auto vb = b.valuation();
    if (!vb)
        throw DivisionByNonUnit("division by the zero series");
    const auto va = a.valuation();
    if (va && *va < *vb)
        throw DivisionByNonUnit("divisor valuation " + std::to_string(*vb) + " exceeds dividend valuation " +
                                std::to_string(*va));
    if (!va && *vb > n)
        throw DivisionByNonUnit("divisor valuation exceeds truncation order");
    const auto num = div_x_power(a.truncated(n), *vb);
    const auto den = div_x_power(b.truncated(n), *vb);
    return num * reciprocal(den);
}

template <typename Scalar>
TruncatedSeries<Scalar> operator/(const TruncatedSeries<Scalar>& a, const Scalar& s) {
    return a * (Scalar(1) / s);
}

// outer(inner(x)) by Horner accumulation; inner must have zero constant term.
template <typename Scalar>
TruncatedSeries<Scalar> compose(const TruncatedSeries<Scalar>& outer, const TruncatedSeries<Scalar>& inner) {
    if (!(inner[0] == Scalar(0)))
        throw CompositionNonComposable("inner series has nonzero constant term");
    const int n = min_order(outer, inner);
    const auto in = inner.truncated(n);
    auto acc = TruncatedSeries<Scalar>::Zero(n);
    for (int i = outer.order() > n ? n : outer.order(); i >= 0; --i) {
        acc = acc * in;
        if (!(outer[i] == Scalar(0)))
            acc = acc + TruncatedSeries<Scalar>::Constant(n, outer[i]);
    }
    return acc;
}

template <typename Scalar>
TruncatedSeries<Scalar> derivative(const TruncatedSeries<Scalar>& a) {
    if (a.order() == 0)
        return TruncatedSeries<Scalar>::Zero(0);
    typename TruncatedSeries<Scalar>::CoeffVector c(a.order());
    for (int i = 1; i <= a.order(); ++i)
        c[i - 1] = Scalar(i) * a[i];
    return TruncatedSeries<Scalar>(std::move(c));
}

// Compositional inverse: the series u with f(u(x)) = x and u(0) = 0,
// found by solving coefficient by coefficient.
template <typename Scalar>
TruncatedSeries<Scalar> comp_inverse(const TruncatedSeries<Scalar>& f) {
    if (f.order() < 1 || !(f[0] == Scalar(0)))
        throw NotInvertible("compositional inverse requires f(0) = 0");
    if (f[1] == Scalar(0))
        throw NotInvertible("compositional inverse requires f'(0) != 0");
    const int n = f.order();
    typename TruncatedSeries<Scalar>::CoeffVector u(n + 1);
    u.setConstant(Scalar(0));
    u[1] = Scalar(1) / f[1];
    for (int k = 2; k <= n; ++k) {
        const auto r = compose(f, TruncatedSeries<Scalar>(u));
        u[k] = -r[k] / f[1];
    }
    return TruncatedSeries<Scalar>(std::move(u));
}

// Square root with the branch fixed by the nonnegative root of the constant
// term; requires that constant term to be a nonzero rational square.
template <typename Scalar>
TruncatedSeries<Scalar> sqrt(const TruncatedSeries<Scalar>& a) {
    if (a.is_zero())
        return a;
    if (a[0] == Scalar(0))
        throw NoRationalSqrt("square root of a series with zero constant term");
    const auto root = a[0].sqrt();
    if (!root) {
        std::ostringstream msg;
        msg << "constant term " << a[0] << " is not a rational square";
        throw NoRationalSqrt(msg.str());
    }
    const int n = a.order();
    typename TruncatedSeries<Scalar>::CoeffVector s(n + 1);
    s[0] = *root;
    const Scalar two_s0 = Scalar(2) * s[0];
    for (int k = 1; k <= n; ++k) {
        Scalar acc(0);
        for (int i = 1; i < k; ++i)
            acc += s[i] * s[k - i];
        s[k] = (a[k] - acc) / two_s0;
    }
    return TruncatedSeries<Scalar>(std::move(s));
}

// Substitute x -> -x (coefficient i picks up (-1)^i).
template <typename Scalar>
TruncatedSeries<Scalar> subst_neg(const TruncatedSeries<Scalar>& a) {
    typename TruncatedSeries<Scalar>::CoeffVector c = a.coeffs();
    for (int i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return TruncatedSeries<Scalar>(std::move(c));
}

template <typename Scalar>
TruncatedSeries<Scalar> pow(const TruncatedSeries<Scalar>& a, int exponent) {
    if (exponent < 0)
        throw Error("negative series exponent");
    auto out = TruncatedSeries<Scalar>::One(a.order());
    for (int i = 0; i < exponent; ++i)
        out = out * a;
    return out;
}

// First order at which the two series differ, up to the minimum order.
template <typename Scalar>
std::optional<int> first_mismatch(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    const int n = min_order(a, b);
    for (int i = 0; i <= n; ++i)
        if (!(a[i] == b[i]))
            return i;
    return std::nullopt;
}

// Equality means coefficientwise equality up to the minimum order.
template <typename Scalar>
bool operator==(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    return !first_mismatch(a, b).has_value();
}

template <typename Scalar>
bool operator!=(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    return first_mismatch(a, b).has_value();
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<Scalar>& a) {
    os << "[";
    for (int i = 0; i <= a.order(); ++i)
        os << (i ? ", " : "") << a[i];
    return os << "]";
}

} // namespace riordan

#endif // RIORDAN_SERIES_HPP
