#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "uqgl/laurent.hpp"
#include "uqgl/pbw.hpp"
#include "uqgl/qrat.hpp"
#include "uqgl/rational.hpp"

namespace uqgl {

enum class TextStyle { Plain, Latex };

namespace detail {

inline std::string q_power_str(int e, TextStyle st) {
    if (st == TextStyle::Latex) {
        if (e == 1) return "q";
        return "q^{" + std::to_string(e) + "}";
    }
    if (e == 1) return "q";
    return "q^" + std::to_string(e);
}

inline std::string rational_str(const Rational& r, TextStyle st) {
    if (st == TextStyle::Latex && denominator(r) != 1)
        return "\\frac{" + numerator(r).str() + "}{" + denominator(r).str() + "}";
    return to_string(r);
}

// One Laurent term |c|*q^e without sign; caller handles the sign.
inline std::string laurent_term_str(const Rational& mag, int e, TextStyle st) {
    if (e == 0) return rational_str(mag, st);
    if (mag == 1) return q_power_str(e, st);
    const char* sep = st == TextStyle::Latex ? " " : "*";
    return rational_str(mag, st) + sep + q_power_str(e, st);
}

}  // namespace detail

// Terms in descending q-exponent, joined with extracted signs.
inline std::string render_laurent(const LaurentPoly& p, TextStyle st = TextStyle::Plain) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += detail::laurent_term_str(neg ? Rational(-c) : c, e, st);
    }
    return out;
}

// True when the printed form starts with a bare sign that a caller may pull
// out front: the numerator is a single Laurent term.
inline bool qrat_simple_negative(const QRat& x) {
    return !x.is_zero() && x.num().terms().size() == 1 &&
           x.num().terms().begin()->second < 0;
}

// Scalar rendering; output re-parses to the same value. With parenthesize
// set, multi-term numerators over denominator 1 are wrapped so the result
// can be juxtaposed with * factors.
inline std::string render_qrat(const QRat& x, TextStyle st = TextStyle::Plain,
                               bool parenthesize = false) {
    if (x.is_zero()) return "0";
    std::string num = render_laurent(x.num(), st);
    if (x.den_is_one()) {
        if (x.num().terms().size() > 1 && parenthesize)
            return st == TextStyle::Latex ? "\\left(" + num + "\\right)" : "(" + num + ")";
        return num;
    }
    std::string den = render_laurent(x.den(), st);
    if (st == TextStyle::Latex) return "\\frac{" + num + "}{" + den + "}";
    if (x.num().terms().size() > 1) num = "(" + num + ")";
    return num + "/(" + den + ")";
}

// Cartan exponent sum, e.g. "K1-K2" or "2*K1+K3" (plain) and
// "K_1 - K_2" (latex). Plain form is brace-body syntax for q^{...}.
inline std::string render_cartan_body(const CartanVector& c, TextStyle st) {
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        int mag = c[k] < 0 ? -c[k] : c[k];
        if (st == TextStyle::Latex) {
            if (out.empty()) {
                if (c[k] < 0) out += "-";
            } else {
                out += c[k] < 0 ? " - " : " + ";
            }
            if (mag != 1) out += std::to_string(mag);
            out += "K_" + std::to_string(k + 1);
        } else {
            out += c[k] < 0 ? "-" : (out.empty() ? "" : "+");
            if (mag != 1) out += std::to_string(mag) + "*";
            out += "K" + std::to_string(k + 1);
        }
    }
    return out;
}

inline std::string render_generator_factor(GenKind kind, const RootIndex& r, int exp,
                                           TextStyle st) {
    std::string base;
    if (st == TextStyle::Latex) {
        base = (kind == GenKind::E ? "E_{" : "F_{") + std::to_string(r.i) +
               (r.i > 9 || r.j > 9 ? "," : "") + std::to_string(r.j) + "}";
        if (exp != 1) base += "^{" + std::to_string(exp) + "}";
        return base;
    }
    base = (kind == GenKind::E ? "E[" : "F[") + std::to_string(r.i) + "," +
           std::to_string(r.j) + "]";
    if (exp != 1) base += "^" + std::to_string(exp);
    return base;
}

// Product of the monomial's letters without its coefficient; empty for the
// identity monomial.
inline std::string render_monomial(const PBWMonomial& m, TextStyle st = TextStyle::Plain) {
    const char* sep = st == TextStyle::Latex ? " " : "*";
    std::string out;
    auto push = [&](const std::string& s) {
        if (!out.empty()) out += sep;
        out += s;
    };
    for (const auto& [r, e] : m.f_block)
        push(render_generator_factor(GenKind::F, r, e, st));
    bool cartan_nonzero = false;
    for (int c : m.cartan) cartan_nonzero |= (c != 0);
    if (cartan_nonzero)
        push("q^{" + render_cartan_body(m.cartan, st) + "}");
    for (const auto& [r, e] : m.e_block)
        push(render_generator_factor(GenKind::E, r, e, st));
    return out;
}

// Canonical rendering: monomials in their total order, signs extracted for
// simple coefficients, unit coefficients dropped. Output re-parses and
// re-normalizes to the same element.
inline std::string render_element(const Element<QRat>& el,
                                  TextStyle st = TextStyle::Plain) {
    if (el.is_zero()) return "0";
    const char* times = st == TextStyle::Latex ? " " : "*";
    std::string out;
    for (const auto& [m, c] : el.terms) {
        bool neg = qrat_simple_negative(c);
        QRat shown = neg ? -c : c;
        std::string mono = render_monomial(m, st);
        std::string piece;
        bool unit = shown == QRat(1);
        if (mono.empty()) {
            piece = render_qrat(shown, st, /*parenthesize=*/false);
        } else if (unit) {
            piece = mono;
        } else {
            piece = render_qrat(shown, st, /*parenthesize=*/true) + times + mono;
        }
        if (out.empty()) {
            if (neg) out += "-";
            out += piece;
        } else {
            out += neg ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << render_laurent(p);
}
inline std::ostream& operator<<(std::ostream& os, const QRat& x) {
    return os << render_qrat(x);
}
inline std::ostream& operator<<(std::ostream& os, const Element<QRat>& e) {
    return os << render_element(e);
}

// Debug rendering for numeric coefficients (used in verification reports).
inline std::string render_element_numeric(const Element<Rational>& el) {
    if (el.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : el.terms) {
        if (!out.empty()) out += " + ";
        std::string mono = render_monomial(m, TextStyle::Plain);
        out += to_string(c);
        if (!mono.empty()) out += "*" + mono;
    }
    return out;
}

inline std::string render_residual(const Element<QRat>& el) { return render_element(el); }
inline std::string render_residual(const Element<Rational>& el) {
    return render_element_numeric(el);
}

}  // namespace uqgl
