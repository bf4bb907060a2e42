#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "uqgl/errors.hpp"
#include "uqgl/pbw.hpp"
#include "uqgl/qrat.hpp"
#include "uqgl/rootdata.hpp"

namespace uqgl {
namespace detail {

// Recursive-descent parser for algebra expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := 'q' ['^' (int | '{' cartan-body '}')]
//            | atom ['^' ['-'] uint]
//   atom    := root-letter | integer | '(' expr ')'
//            | 'scomm' '(' expr ',' expr ')'
//   root-letter := ('E' | 'F') '[' uint ',' uint ']'
//   cartan-body := ['-'] cterm (('+' | '-') cterm)*
//   cterm       := [uint ['*']] 'K' uint
//
// Division and negative exponents require a scalar operand. A braced
// exponent on q builds the group-like letter q^{sum_k c_k K_k}.
class ElementParser {
  public:
    ElementParser(const Superdim& dim, std::string_view text)
        : alg_(dim), s_(text) {}

    Element<QRat> parse() {
        Element<QRat> e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected trailing input");
        return e;
    }

  private:
    using Elem = Element<QRat>;

    SymbolicAlgebra alg_;
    std::string_view s_;
    std::size_t pos_ = 0;

    // --- character helpers ---------------------------------------------------

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char peek2() const { return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0'; }
    bool match(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (!match(c)) throw SyntaxError(pos_, std::string("expected ") + what);
    }

    long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) throw SyntaxError(pos_, "expected a number");
        if (pos_ - start > 9) throw SyntaxError(start, "number literal too large");
        long v = 0;
        for (std::size_t k = start; k < pos_; ++k) v = v * 10 + (s_[k] - '0');
        return v;
    }

    long parse_int() {
        skip_ws();
        bool negative = match('-');
        long v = parse_uint();
        return negative ? -v : v;
    }

    std::string_view parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    // --- grammar -------------------------------------------------------------

    Elem expr() {
        Elem acc = term();
        for (;;) {
            skip_ws();
            if (match('+'))
                acc += term();
            else if (match('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Elem term() {
        Elem acc = factor();
        for (;;) {
            skip_ws();
            if (match('*')) {
                acc = alg_.multiply(acc, factor());
            } else if (match('/')) {
                std::size_t at = pos_;
                acc = divide(acc, factor(), at);
            } else {
                return acc;
            }
        }
    }

    Elem factor() {
        skip_ws();
        if (match('-')) return -factor();
        return power();
    }

    Elem power() {
        skip_ws();
        if (peek() == 'q' && !std::isalpha(static_cast<unsigned char>(peek2())))
            return q_letter();
        Elem base = atom();
        skip_ws();
        if (!match('^')) return base;
        std::size_t at = pos_;
        if (peek() == '{')
            throw SyntaxError(at, "braced exponents follow the letter q only");
        return raise_to(base, parse_int(), at);
    }

    Elem q_letter() {
        ++pos_;  // the letter q
        skip_ws();
        if (!match('^')) return alg_.scalar(QRat::q_power(1));
        skip_ws();
        if (match('{')) {
            CartanVector c = cartan_body();
            expect('}', "'}'");
            return alg_.generator(Generator::K(std::move(c)));
        }
        std::size_t at = pos_;
        long e = parse_int();
        if (e < -100000 || e > 100000)
            throw SyntaxError(at, "q exponent out of supported range");
        return alg_.scalar(QRat::q_power(static_cast<int>(e)));
    }

    Elem atom() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            Elem inner = expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return alg_.scalar(QRat(Rational(parse_uint())));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string_view name = parse_name();
            if (name == "E" || name == "F") return root_letter(name == "E", at);
            if (name == "scomm") return scomm_call();
            if (name == "K")
                throw SyntaxError(at, "Cartan letters are written q^{...}");
            throw SyntaxError(at, "unknown name '" + std::string(name) + "'");
        }
        throw SyntaxError(pos_, "expected a generator, number, or '('");
    }

    Elem root_letter(bool raising, std::size_t at) {
        expect('[', "'['");
        long i = parse_uint();
        expect(',', "','");
        long j = parse_uint();
        expect(']', "']'");
        RootIndex r{static_cast<int>(i), static_cast<int>(j)};
        try {
            check_root(alg_.dim(), r);
        } catch (const Error& e) {
            throw SyntaxError(at, e.what());
        }
        return alg_.generator(raising ? Generator::E(r) : Generator::F(r));
    }

    Elem scomm_call() {
        expect('(', "'('");
        Elem a = expr();
        expect(',', "','");
        Elem b = expr();
        expect(')', "')'");
        return alg_.supercommutator(a, b);
    }

    CartanVector cartan_body() {
        CartanVector c(static_cast<std::size_t>(alg_.dim().total()), 0);
        skip_ws();
        int sign = match('-') ? -1 : 1;
        for (;;) {
            skip_ws();
            long coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = parse_uint();
                skip_ws();
                match('*');
            }
            skip_ws();
            std::size_t at = pos_;
            if (!match('K')) throw SyntaxError(pos_, "expected a Cartan letter K");
            long idx = parse_uint();
            if (idx < 1 || idx > alg_.dim().total())
                throw SyntaxError(at, "Cartan index out of range");
            c[static_cast<std::size_t>(idx - 1)] += static_cast<int>(sign * coeff);
            skip_ws();
            if (match('+'))
                sign = 1;
            else if (match('-'))
                sign = -1;
            else
                return c;
        }
    }

    // --- semantic helpers ------------------------------------------------------

    static bool is_scalar(const Elem& e) {
        return e.terms.empty() ||
               (e.terms.size() == 1 && e.terms.begin()->first.is_identity());
    }
    static QRat scalar_value(const Elem& e) {
        return e.terms.empty() ? QRat() : e.terms.begin()->second;
    }

    Elem divide(const Elem& a, const Elem& d, std::size_t at) const {
        if (!is_scalar(d)) throw SyntaxError(at, "divisor must be a scalar");
        QRat v = scalar_value(d);
        if (v.is_zero()) throw DivisionByZero("division by zero in expression");
        return a.scaled(QRat(1) / v);
    }

    Elem raise_to(const Elem& base, long e, std::size_t at) const {
        if (e < 0) {
            if (!is_scalar(base))
                throw SyntaxError(at, "negative exponent requires a scalar base");
            QRat v = scalar_value(base);
            if (v.is_zero()) throw DivisionByZero("zero raised to a negative power");
            QRat inv = QRat(1) / v;
            QRat acc(1);
            for (long k = 0; k < -e; ++k) acc = acc * inv;
            return alg_.scalar(acc);
        }
        if (e > 64) throw SyntaxError(at, "exponent out of supported range");
        Elem acc = alg_.one();
        for (long k = 0; k < e; ++k) acc = alg_.multiply(acc, base);
        return acc;
    }
};

}  // namespace detail

// Parses an expression in the letters E[i,j], F[i,j], q, q^{...}, integers,
// scomm(,), with + - * / ^ and parentheses, into a normalized element.
inline Element<QRat> parse_element(const Superdim& dim, std::string_view text) {
    return detail::ElementParser(dim, text).parse();
}

}  // namespace uqgl
