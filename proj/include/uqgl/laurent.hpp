#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uqgl/errors.hpp"
#include "uqgl/rational.hpp"

namespace uqgl {

// Laurent polynomial in q with exact rational coefficients, stored sparsely
// as exponent -> coefficient. Invariant: no stored coefficient is zero.
class LaurentPoly {
  public:
    using TermMap = std::map<int, Rational>;

    LaurentPoly() = default;
    /*implicit*/ LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    /*implicit*/ LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, int exp) {
        LaurentPoly p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }
    static LaurentPoly q_power(int exp) { return monomial(Rational(1), exp); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int min_exp() const {
        if (is_zero()) throw InternalError("min_exp of zero Laurent polynomial");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw InternalError("max_exp of zero Laurent polynomial");
        return terms_.rbegin()->first;
    }
    const Rational& leading_coeff() const {
        if (is_zero()) throw InternalError("leading_coeff of zero Laurent polynomial");
        return terms_.rbegin()->second;
    }
    Rational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // Multiply by q^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }
    LaurentPoly scaled(const Rational& s) const {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }
    // Lexicographic on the term maps; only used to orient fractions canonically.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ < b.terms_;
    }

    // Value at q = q0. q0 = 0 is a pole whenever a negative exponent is present.
    Rational evaluate(const Rational& q0) const {
        if (q0 == 0) {
            if (!is_zero() && min_exp() < 0)
                throw PoleAtPoint("negative q-exponent evaluated at q = 0");
            return coeff(0);
        }
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += c * rational_pow(q0, e);
        return acc;
    }

  private:
    void add_term(int e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

}  // namespace uqgl
