#ifndef RIORDAN_RATIONAL_HPP
#define RIORDAN_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

// Exact rational scalar backed by GMP. Always kept in canonical form:
// positive denominator, gcd(|num|, den) = 1. Usable as an Eigen scalar
// (see the NumTraits specialization below).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                  // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(int n, int d) : Rational(mpz_class(n), mpz_class(d)) {}

    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0)
            throw Error("rational with zero denominator");
        v_.canonicalize();
    }

    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with integer p and positive integer q.
    static Rational from_string(std::string_view text) {
        std::string s(text);
        const auto slash = s.find('/');
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 ||
            s.empty() || s.back() == '/' || (slash != std::string::npos && slash + 1 < s.size() && s[slash + 1] == '-'))
            throw Error("not a rational literal: '" + s + "'");
        if (q.get_den() == 0)
            throw Error("rational with zero denominator: '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Nonnegative rational square root, if one exists.
    std::optional<Rational> sqrt() const {
        if (sgn(v_) < 0)
            return std::nullopt;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(rn, rd);
    }

    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw Error("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

  private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Integer power with nonnegative exponent.
inline Rational pow(Rational base, unsigned exp) {
    Rational out(1);
    while (exp) {
        if (exp & 1u)
            out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

} // namespace riordan

namespace Eigen {

template <>
struct NumTraits<riordan::Rational> : GenericNumTraits<riordan::Rational> {
    typedef riordan::Rational Real;
    typedef riordan::Rational NonInteger;
    typedef riordan::Rational Nested;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

} // namespace Eigen

#endif // RIORDAN_RATIONAL_HPP
