#include <random>
#include <vector>

#include "doctest.h"
#include "uqgl/qrat.hpp"
#include "uqgl/render.hpp"

using namespace uqgl;

namespace {

LaurentPoly q_pow(int e) { return LaurentPoly::q_power(e); }

// Independent long-division oracle: a / b over the Laurent ring, requiring an
// exact quotient. Works directly on term maps, no QRat machinery involved.
LaurentPoly exact_divide_oracle(LaurentPoly a, const LaurentPoly& b) {
    REQUIRE(!b.is_zero());
    LaurentPoly quot;
    while (!a.is_zero()) {
        int e = a.max_exp() - b.max_exp();
        Rational c = a.leading_coeff() / b.leading_coeff();
        LaurentPoly piece = LaurentPoly::monomial(c, e);
        quot += piece;
        a -= piece * b;
        if (!a.is_zero()) REQUIRE(a.max_exp() < e + b.max_exp());
    }
    return quot;
}

std::mt19937_64 rng(0x51a7eu);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    return Rational(num(rng), den(rng));
}

LaurentPoly random_laurent(bool nonzero = false) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> expd(-4, 4);
    LaurentPoly p;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(random_rational(), expd(rng));
    if (nonzero && p.is_zero()) p += LaurentPoly(Rational(1));
    return p;
}

QRat random_qrat(bool nonzero = false) {
    QRat x(random_laurent(nonzero), random_laurent(true));
    if (nonzero && x.is_zero()) x += QRat(1);
    return x;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPoly a = q_pow(2) - q_pow(-2);
    CHECK(a.coeff(2) == 1);
    CHECK(a.coeff(-2) == -1);
    CHECK(a.coeff(0) == 0);
    CHECK(a.min_exp() == -2);
    CHECK(a.max_exp() == 2);

    SUBCASE("cancellation keeps the term map clean") {
        LaurentPoly z = a - a;
        CHECK(z.is_zero());
        CHECK(z.terms().empty());
        LaurentPoly one = LaurentPoly(Rational(1));
        CHECK((a + one - a) == one);
    }
    SUBCASE("product") {
        // (q - q^-1)(q + q^-1) = q^2 - q^-2
        CHECK((q_pow(1) - q_pow(-1)) * (q_pow(1) + q_pow(-1)) == a);
    }
    SUBCASE("shift and scale") {
        CHECK(a.shifted(2) == q_pow(4) - q_pow(0));
        CHECK(a.scaled(Rational(-1)) == -a);
        CHECK(a.scaled(Rational(0)).is_zero());
    }
    SUBCASE("evaluation") {
        CHECK(a.evaluate(Rational(2)) == Rational(15, 4));
        CHECK(a.evaluate(Rational(3, 2)) == Rational(65, 36));
        CHECK(a.evaluate(Rational(1)) == 0);
        CHECK_THROWS_AS(a.evaluate(Rational(0)), PoleAtPoint);
        CHECK((q_pow(2) + LaurentPoly(Rational(5))).evaluate(Rational(0)) == 5);
    }
}

TEST_CASE("fraction reduction against the division oracle") {
    // (q^2 - q^-2)/(q - q^-1): oracle divides exactly to q + q^-1.
    LaurentPoly num = q_pow(2) - q_pow(-2);
    LaurentPoly den = q_pow(1) - q_pow(-1);
    LaurentPoly expected = exact_divide_oracle(num, den);
    CHECK(expected == q_pow(1) + q_pow(-1));
    QRat x(num, den);
    CHECK(x.den_is_one());
    CHECK(x.num() == expected);

    SUBCASE("balanced q-integers reduce to Laurent polynomials") {
        QRat three = qnum(3);
        CHECK(three.den_is_one());
        CHECK(three.num() == exact_divide_oracle(q_pow(3) - q_pow(-3), den));
        CHECK(three.num() == q_pow(2) + LaurentPoly(Rational(1)) + q_pow(-2));
        CHECK(qnum(1) == QRat(1));
        CHECK(qnum(0).is_zero());
        CHECK(qnum(-3) == -qnum(3));
    }
    SUBCASE("kappa is d*(q - q^-1)") {
        CHECK(kappa(1) == QRat(den));
        CHECK(kappa(-1) == -QRat(den));
    }
    SUBCASE("canonical denominator is monic with lowest exponent 0") {
        QRat inv(LaurentPoly(Rational(1)), den);
        CHECK(inv.den() == q_pow(2) - LaurentPoly(Rational(1)));
        CHECK(inv.num() == q_pow(1));
        // 1/(q^-1 - q) = -q/(q^2 - 1)
        QRat inv2(LaurentPoly(Rational(1)), q_pow(-1) - q_pow(1));
        CHECK(inv2 == -inv);
        CHECK(inv2.den().coeff(0) != 0);
        CHECK(inv2.den().leading_coeff() == 1);
    }
}

TEST_CASE("field laws and canonical uniqueness on random inputs") {
    for (int t = 0; t < 200; ++t) {
        QRat a = random_qrat();
        QRat b = random_qrat();
        QRat c = random_qrat(true);
        CHECK((a + b) - b == a);
        CHECK((a * c) / c == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(-(-a) == a);
        if (!a.is_zero()) {
            CHECK(a / a == QRat(1));
            // canonical invariants
            CHECK(a.den().coeff(0) != 0);
            CHECK(a.den().leading_coeff() == 1);
        }
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    const std::vector<Rational> points = {Rational(2), Rational(3, 2), Rational(-2)};
    for (int t = 0; t < 100; ++t) {
        QRat a = random_qrat();
        QRat b = random_qrat();
        for (const auto& q0 : points) {
            Rational ea, eb;
            try {
                ea = eval_at(a, q0);
                eb = eval_at(b, q0);
            } catch (const PoleAtPoint&) {
                continue;  // random denominator vanished at q0
            }
            CHECK(eval_at(a + b, q0) == ea + eb);
            CHECK(eval_at(a * b, q0) == ea * eb);
        }
    }
}

TEST_CASE("q-integer values at q = 1") {
    for (int n = -20; n <= 20; ++n) {
        CHECK(eval_at(qnum(n), Rational(1)) == Rational(n));
        CHECK(limit_at_one(qnum(n)) == Rational(n));
    }
}

TEST_CASE("poles and limits") {
    LaurentPoly den = q_pow(1) - q_pow(-1);
    QRat inv(LaurentPoly(Rational(1)), den);
    CHECK_THROWS_AS(eval_at(inv, Rational(1)), PoleAtPoint);
    CHECK_THROWS_AS(eval_at(inv, Rational(-1)), PoleAtPoint);
    CHECK(eval_at(inv, Rational(2)) == Rational(2, 3));
    CHECK_THROWS_AS(limit_at_one(inv), PoleAtPoint);

    // removable singularity: limit exists though q = 1 is a root of both
    QRat ratio = QRat(q_pow(2) - q_pow(-2), den);
    CHECK(limit_at_one(ratio) == 2);
    CHECK(limit_at_one(QRat(5)) == 5);
    CHECK(limit_at_one(QRat()) == 0);
    // vanishing numerator of higher order gives 0
    QRat vanish = QRat(den, LaurentPoly(Rational(1))) * QRat(den, LaurentPoly(Rational(1)));
    CHECK(limit_at_one(vanish / QRat(den, LaurentPoly(Rational(1)))) == 0);

    CHECK_THROWS_AS(eval_at(QRat(q_pow(-1)), Rational(0)), PoleAtPoint);
    CHECK_THROWS_AS(QRat(LaurentPoly(Rational(1)), LaurentPoly()), DivisionByZero);
    CHECK_THROWS_AS(QRat(1) / QRat(), DivisionByZero);
}

TEST_CASE("scalar rendering round-trips basic shapes") {
    CHECK(render_qrat(QRat()) == "0");
    CHECK(render_qrat(QRat(1)) == "1");
    CHECK(render_qrat(QRat(Rational(-3, 2))) == "-3/2");
    CHECK(render_qrat(QRat::q_power(1)) == "q");
    CHECK(render_qrat(QRat::q_power(-2)) == "q^-2");
    CHECK(render_qrat(qnum(2)) == "q + q^-1");
    QRat inv(LaurentPoly(Rational(1)), q_pow(1) - q_pow(-1));
    CHECK(render_qrat(inv) == "q/(q^2 - 1)");
    CHECK(render_qrat(-inv) == "-q/(q^2 - 1)");
    CHECK(render_qrat(qnum(2), TextStyle::Plain, true) == "(q + q^-1)");
    CHECK(render_qrat(qnum(2), TextStyle::Latex) == "q + q^{-1}");
    CHECK(render_qrat(inv, TextStyle::Latex) == "\\frac{q}{q^{2} - 1}");
}
