#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "uqgl/cli.hpp"
#include "uqgl/parser.hpp"
#include "uqgl/pbw.hpp"
#include "uqgl/render.hpp"

using namespace uqgl;

namespace {

Element<QRat> parse23(const std::string& s) {
    return parse_element(Superdim(2, 3), s);
}

std::size_t error_position(const Superdim& dim, const std::string& s) {
    try {
        parse_element(dim, s);
    } catch (const SyntaxError& e) {
        return e.position;
    }
    FAIL("expected a syntax error for: ", s);
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("parser handles letters, scalars, and Cartan exponentials") {
    Superdim dim(2, 3);
    SymbolicAlgebra alg(dim);

    CHECK(parse23("E[1,2]") == alg.generator(Generator::E(RootIndex{1, 2})));
    CHECK(parse23("F[2,4]") == alg.generator(Generator::F(RootIndex{2, 4})));
    CHECK(parse23("q") == alg.scalar(QRat::q_power(1)));
    CHECK(parse23("q^-3") == alg.scalar(QRat::q_power(-3)));
    CHECK(parse23("7") == alg.scalar(QRat(Rational(7))));
    CHECK(parse23("3/2") == alg.scalar(QRat(Rational(3) / 2)));

    CHECK(parse23("q^{K1-K2}") ==
          alg.generator(Generator::K(CartanVector{1, -1, 0, 0, 0})));
    CHECK(parse23("q^{2K1}") == parse23("q^{2*K1}"));
    CHECK(parse23("q^{-K3+2*K5}") ==
          alg.generator(Generator::K(CartanVector{0, 0, -1, 0, 2})));
    // repeated letters accumulate
    CHECK(parse23("q^{K1+K1}") == parse23("q^{2*K1}"));
}

TEST_CASE("parser arithmetic matches the algebra") {
    Superdim dim(2, 3);
    SymbolicAlgebra alg(dim);
    auto E = [&](int i, int j) { return alg.generator(Generator::E(RootIndex{i, j})); };
    auto F = [&](int i, int j) { return alg.generator(Generator::F(RootIndex{i, j})); };

    CHECK(parse23("E[2,3]*E[1,2]") == alg.multiply(E(2, 3), E(1, 2)));
    CHECK(parse23("E[1,2]^2") == alg.multiply(E(1, 2), E(1, 2)));
    CHECK(parse23("E[2,3]^0") == alg.one());
    CHECK(parse23("E[1,2] - E[1,2]").is_zero());
    CHECK(parse23("-E[1,2]") == -E(1, 2));
    CHECK(parse23("--E[1,2]") == E(1, 2));
    CHECK(parse23("2*3^2") == alg.scalar(QRat(Rational(18))));
    CHECK(parse23("(E[1,2]+F[1,2])*q") ==
          (E(1, 2) + F(1, 2)).scaled(QRat::q_power(1)));
    CHECK(parse23("E[1,2]/2") == E(1, 2).scaled(QRat(Rational(1) / 2)));
    CHECK(parse23("(q-q^-1)^-1") == alg.scalar(QRat(1) / kappa(1)));
    CHECK(parse23("scomm(E[1,2], F[1,2])") ==
          alg.supercommutator(E(1, 2), F(1, 2)));
    CHECK(parse23("scomm(E[1,2], E[2,3])") ==
          alg.supercommutator(E(1, 2), E(2, 3)));
    // whitespace is free
    CHECK(parse23("  E[ 1 , 2 ]  *  q ^ { K1 }  ") ==
          alg.multiply(E(1, 2), alg.generator(Generator::K(CartanVector{1, 0, 0, 0, 0}))));
}

TEST_CASE("parser reports positions for malformed input") {
    Superdim dim(2, 3);
    CHECK(error_position(dim, "") == 0);
    CHECK(error_position(dim, "E[2,1]") == 0);   // roots need i < j
    CHECK(error_position(dim, "E[1,9]") == 0);   // out of range for M+N=5
    CHECK(error_position(dim, "foo") == 0);
    CHECK(error_position(dim, "K1") == 0);
    CHECK(error_position(dim, "E[1,2] E[1,3]") == 7);  // missing operator
    CHECK(error_position(dim, "E[1,2]^-1") == 7);      // non-scalar inverse
    CHECK(error_position(dim, "q^{K7}") == 3);
    CHECK(error_position(dim, "E[1,") == 4);
    CHECK(error_position(dim, "(E[1,2]") == 7);
    CHECK(error_position(dim, "E[1,2]^{K1}") == 7);  // braces belong to q only
    CHECK_THROWS_AS(parse23("1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse23("q/E[1,2]"), SyntaxError);
    CHECK_THROWS_AS(parse23("0^-1"), DivisionByZero);
    // degree-sign and homogeneity domain errors pass through unchanged
    CHECK_THROWS_AS(parse23("scomm(q^{K1}, E[1,2])"), IndefiniteDegreeSign);
    CHECK_THROWS_AS(parse23("scomm(E[1,2]+E[1,3], E[1,2])"), NotHomogeneous);
}

TEST_CASE("render-parse round trip on random normalized elements") {
    for (auto [M, N] : {std::pair{2, 3}, {3, 1}}) {
        Superdim dim(M, N);
        SymbolicAlgebra alg(dim);
        std::mt19937_64 rng(0xc0ffee);
        std::uniform_int_distribution<int> len(0, 4);
        std::uniform_int_distribution<int> kind(0, 2);
        std::uniform_int_distribution<int> idx(1, dim.total());
        std::uniform_int_distribution<int> centry(-2, 2);
        std::uniform_int_distribution<int> qexp(-2, 2);
        for (int trial = 0; trial < 30; ++trial) {
            Word w;
            int n = len(rng);
            for (int k = 0; k < n; ++k) {
                int which = kind(rng);
                if (which == 1) {
                    CartanVector c(static_cast<std::size_t>(dim.total()), 0);
                    for (auto& x : c) x = centry(rng);
                    w.push_back(Generator::K(std::move(c)));
                    continue;
                }
                int i = idx(rng), j = idx(rng);
                if (i == j) continue;
                if (i > j) std::swap(i, j);
                w.push_back(which == 0 ? Generator::F(RootIndex{i, j})
                                       : Generator::E(RootIndex{i, j}));
            }
            Element<QRat> e = alg.normalize(QRat::q_power(qexp(rng)), w);
            std::string text = render_element(e);
            CAPTURE(text);
            Element<QRat> back = parse_element(dim, text);
            CHECK(back == e);
        }
    }
}

TEST_CASE("cli normalizes expressions") {
    CliResult r = run_cli({"--M", "2", "--N", "3", "normalize", "E[2,3]*E[1,2]"});
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    Element<QRat> expect =
        parse_element(Superdim(2, 3), "E[2,3]*E[1,2]");
    CHECK(r.out == render_element(expect) + "\n");

    r = run_cli({"--M", "2", "--N", "3", "--format", "latex", "normalize", "E[1,2]^2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "E_{12}^{2}\n");

    r = run_cli({"--M", "2", "--N", "3", "--format", "json", "normalize", "E[1,2]^2"});
    CHECK(r.exit_code == 0);
    // machine output: one compact record per line
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["text"] == "E[1,2]^2");
    CHECK(doc["terms"].size() == 1);
    CHECK(doc["terms"][0]["coeff"] == "1");
    CHECK(doc["terms"][0]["monomial"] == "E[1,2]^2");
}

TEST_CASE("cli reads stdin for the - placeholder") {
    std::istringstream in("E[1,2]*E[1,2]");
    CliResult r = run_cli({"--M", "2", "--N", "3", "normalize", "-"}, in);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "E[1,2]^2\n");

    std::istringstream in2("E[1,2]");
    r = run_cli({"--M", "2", "--N", "3", "comm", "-", "-"}, in2);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("at most one expression") != std::string::npos);
}

TEST_CASE("cli commutator subcommand") {
    CliResult r = run_cli({"--M", "2", "--N", "3", "comm", "E[1,2]", "F[1,2]"});
    CHECK(r.exit_code == 0);
    SymbolicAlgebra alg(Superdim{2, 3});
    Element<QRat> expect = alg.supercommutator(
        alg.generator(Generator::E(RootIndex{1, 2})),
        alg.generator(Generator::F(RootIndex{1, 2})));
    CHECK(r.out == render_element(expect) + "\n");

    // zero-weight operand has no definite degree sign: input-domain error
    r = run_cli({"--M", "2", "--N", "3", "comm", "q^{K1}", "E[1,2]"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cli usage and input errors") {
    // no subcommand
    CliResult r = run_cli({"--M", "2", "--N", "3"});
    CHECK(r.exit_code == 2);
    // unknown option
    r = run_cli({"--M", "2", "--N", "3", "--bogus", "normalize", "q"});
    CHECK(r.exit_code == 2);
    // invalid dimension (M == N)
    r = run_cli({"--M", "2", "--N", "2", "normalize", "q"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    // syntax error with position
    r = run_cli({"--M", "2", "--N", "3", "normalize", "E[3,2]"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("syntax error at position 0") != std::string::npos);
    // help succeeds
    r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("normalize") != std::string::npos);
}

TEST_CASE("cli bracket table is deterministic and sectioned") {
    CliResult a = run_cli({"--M", "2", "--N", "1", "table"});
    CliResult b = run_cli({"--M", "2", "--N", "1", "table"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# raising-raising") != std::string::npos);
    CHECK(a.out.find("# lowering-lowering") != std::string::npos);
    CHECK(a.out.find("# raising-lowering") != std::string::npos);
    CHECK(a.out.find("scomm(E[1,3], E[1,2]) = ") != std::string::npos);
    // 3 roots: 3 ee + 3 ff + 9 ef rows plus 3 section headers
    std::size_t lines = 0;
    for (char c : a.out) lines += (c == '\n');
    CHECK(lines == 18);

    // json output: one record per bracket row
    CliResult j = run_cli({"--M", "2", "--N", "1", "--format", "json", "table"});
    std::vector<nlohmann::json> records;
    {
        std::istringstream stream(j.out);
        std::string rec;
        while (std::getline(stream, rec)) records.push_back(nlohmann::json::parse(rec));
    }
    CHECK(records.size() == 15);
    CHECK(records[0]["kind"] == "ee");
    CHECK(records[14]["kind"] == "ef");

    // every text row round-trips through the parser as a checked identity
    std::istringstream rows(a.out);
    std::string line;
    Superdim dim(2, 1);
    while (std::getline(rows, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find(" = ");
        REQUIRE(eq != std::string::npos);
        Element<QRat> lhs = parse_element(dim, line.substr(0, eq));
        Element<QRat> rhs = parse_element(dim, line.substr(eq + 3));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cli verify subcommand") {
    CliResult r = run_cli({"--M", "2", "--N", "1", "verify", "--suite", "defining"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("suite=defining") != std::string::npos);
    CHECK(r.out.find("all suites passed") != std::string::npos);

    r = run_cli({"--M", "2", "--N", "1", "--format", "json", "verify", "--suite", "assoc",
                 "--trials", "5", "--max-len", "3", "--seed", "99"});
    CHECK(r.exit_code == 0);
    // one record per report, then a summary record
    std::vector<nlohmann::json> records;
    {
        std::istringstream stream(r.out);
        std::string rec;
        while (std::getline(stream, rec)) records.push_back(nlohmann::json::parse(rec));
    }
    REQUIRE(records.size() == 2);
    CHECK(records[0]["suite"] == "associativity");
    CHECK(records[0]["instances"] == 5);
    CHECK(records[0]["passed"] == true);
    CHECK(records[1]["passed"] == true);
}
