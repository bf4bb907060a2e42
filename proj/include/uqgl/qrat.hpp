#pragma once

#include <utility>
#include <vector>

#include "uqgl/errors.hpp"
#include "uqgl/laurent.hpp"
#include "uqgl/rational.hpp"

namespace uqgl {
namespace detail {

// Dense ordinary polynomial, coeffs[i] = coefficient of q^i.
// Invariant: empty means zero, otherwise back() != 0.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Splits a nonzero Laurent polynomial as q^shift * p with p(0) != 0.
inline std::pair<int, Poly> laurent_split(const LaurentPoly& l) {
    int shift = l.min_exp();
    Poly p(static_cast<std::size_t>(l.max_exp() - shift) + 1, Rational(0));
    for (const auto& [e, c] : l.terms()) p[static_cast<std::size_t>(e - shift)] = c;
    return {shift, p};
}

inline LaurentPoly poly_to_laurent(const Poly& p, int shift) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r += LaurentPoly::monomial(p[i], static_cast<int>(i) + shift);
    return r;
}

// Euclidean division over Q[q]; returns (quotient, remainder).
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    Poly quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        quot[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);  // top coefficient cancels exactly, so a shrinks
    }
    poly_trim(quot);
    return {quot, a};
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Poly poly_monic(Poly p) {
    if (p.empty()) return p;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

// Monic gcd over Q[q] by the Euclidean algorithm.
inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Exact division by (q - 1); caller must know p(1) == 0.
inline Poly poly_div_q_minus_1(const Poly& p) {
    if (p.empty()) return p;
    Poly out(p.size() - 1, Rational(0));
    Rational carry(0);  // synthetic division at root 1
    for (std::size_t i = p.size(); i-- > 1;) {
        carry += p[i];
        out[i - 1] = carry;
    }
    return out;
}

}  // namespace detail

// Element of Q(q) as a reduced fraction of Laurent polynomials.
// Canonical form: zero is 0/1; otherwise gcd(num, den) = 1 over Q[q],
// the denominator is an ordinary polynomial with nonzero constant term
// and leading coefficient 1. Negative q-powers live in the numerator.
class QRat {
  public:
    QRat() : num_(), den_(Rational(1)) {}
    /*implicit*/ QRat(const Rational& c) : num_(c), den_(Rational(1)) {}
    /*implicit*/ QRat(long c) : num_(Rational(c)), den_(Rational(1)) {}
    /*implicit*/ QRat(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}
    QRat(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static QRat q_power(int exp) { return QRat(LaurentPoly::q_power(exp)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const { return den_ == LaurentPoly(Rational(1)); }

    friend QRat operator+(const QRat& a, const QRat& b) {
        if (a.den_is_one() && b.den_is_one()) return QRat::raw(a.num_ + b.num_);
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        if (a.den_is_one() && b.den_is_one()) return QRat::raw(a.num_ - b.num_);
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a) {
        QRat r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        if (a.den_is_one() && b.den_is_one()) return QRat::raw(a.num_ * b.num_);
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero in Q(q)");
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    // Canonical forms are unique, so equality is syntactic.
    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  private:
    // Wraps an already-canonical numerator over denominator 1.
    static QRat raw(LaurentPoly n) {
        QRat r;
        r.num_ = std::move(n);
        return r;
    }

    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator in Q(q)");
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rational(1));
            return;
        }
        auto [ns, np] = detail::laurent_split(num_);
        auto [ds, dp] = detail::laurent_split(den_);
        int shift = ns - ds;
        detail::Poly g = detail::poly_gcd(np, dp);
        if (g.size() > 1) {
            np = detail::poly_divmod(np, g).first;
            dp = detail::poly_divmod(dp, g).first;
        }
        Rational lc = dp.back();
        for (auto& c : np) c /= lc;
        for (auto& c : dp) c /= lc;
        num_ = detail::poly_to_laurent(np, shift);
        den_ = detail::poly_to_laurent(dp, 0);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

// Balanced q-integer [n]_q = (q^n - q^-n)/(q - q^-1); always reduces to a
// Laurent polynomial.
inline QRat qnum(int n) {
    if (n == 0) return QRat();
    return QRat(LaurentPoly::q_power(n) - LaurentPoly::q_power(-n),
                LaurentPoly::q_power(1) - LaurentPoly::q_power(-1));
}

// q^d - q^-d for d = +-1; equals d * (q - q^-1).
inline QRat kappa(int d) {
    return QRat(LaurentPoly::q_power(d) - LaurentPoly::q_power(-d));
}

// Value at q = q0; throws PoleAtPoint when the reduced denominator vanishes
// (or when negative numerator exponents meet q0 = 0).
inline Rational eval_at(const QRat& x, const Rational& q0) {
    Rational d = x.den().evaluate(q0);
    if (d == 0) throw PoleAtPoint("denominator vanishes at evaluation point");
    return x.num().evaluate(q0) / d;
}

// Limit q -> 1, cancelling matching orders of (q - 1); PoleAtPoint when the
// denominator's vanishing order exceeds the numerator's.
inline Rational limit_at_one(const QRat& x) {
    if (x.is_zero()) return Rational(0);
    auto [ns, np] = detail::laurent_split(x.num());
    (void)ns;  // q^shift -> 1
    auto [ds, dp] = detail::laurent_split(x.den());
    (void)ds;
    while (detail::poly_eval(dp, Rational(1)) == 0) {
        if (detail::poly_eval(np, Rational(1)) != 0)
            throw PoleAtPoint("pole at q = 1");
        np = detail::poly_div_q_minus_1(np);
        dp = detail::poly_div_q_minus_1(dp);
    }
    return detail::poly_eval(np, Rational(1)) / detail::poly_eval(dp, Rational(1));
}

}  // namespace uqgl
