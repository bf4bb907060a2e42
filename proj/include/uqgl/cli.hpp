#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uqgl/errors.hpp"
#include "uqgl/parser.hpp"
#include "uqgl/pbw.hpp"
#include "uqgl/render.hpp"
#include "uqgl/verify.hpp"

namespace uqgl {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline TextStyle style_of(const std::string& format) {
    return format == "latex" ? TextStyle::Latex : TextStyle::Plain;
}

inline nlohmann::ordered_json element_json(const Element<QRat>& e) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : e.terms)
        terms.push_back({{"coeff", render_qrat(c)}, {"monomial", render_monomial(m)}});
    return {{"text", render_element(e)}, {"terms", terms}};
}

inline nlohmann::ordered_json report_json(const CheckReport& r) {
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"relation", f.relation},
                         {"indices", f.indices},
                         {"residual", f.residual}});
    return {{"suite", r.suite},    {"M", r.M},
            {"N", r.N},            {"instances", r.instances},
            {"failures", fails},   {"notes", r.notes},
            {"seconds", r.seconds}, {"passed", r.passed()}};
}

struct TableRow {
    const char* kind;
    GenKind left_kind;
    RootIndex left;
    GenKind right_kind;
    RootIndex right;
    Element<QRat> bracket;
};

// Deterministic bracket table: same-kind brackets for lex-ordered root pairs
// (higher root first, matching the straightening direction), then
// raising-lowering brackets for every ordered pair including equal roots.
inline std::vector<TableRow> bracket_table(const Superdim& dim) {
    SymbolicAlgebra alg(dim);
    std::vector<RootIndex> roots;
    for (int i = 1; i <= dim.total(); ++i)
        for (int j = i + 1; j <= dim.total(); ++j) roots.push_back(RootIndex{i, j});
    auto gen = [&](GenKind k, RootIndex r) {
        return alg.generator(k == GenKind::E ? Generator::E(r) : Generator::F(r));
    };
    std::vector<TableRow> rows;
    for (const auto& lo : roots)
        for (const auto& hi : roots) {
            if (!(lo < hi)) continue;
            rows.push_back({"ee", GenKind::E, hi, GenKind::E, lo,
                            alg.supercommutator(gen(GenKind::E, hi), gen(GenKind::E, lo))});
        }
    for (const auto& lo : roots)
        for (const auto& hi : roots) {
            if (!(lo < hi)) continue;
            rows.push_back({"ff", GenKind::F, hi, GenKind::F, lo,
                            alg.supercommutator(gen(GenKind::F, hi), gen(GenKind::F, lo))});
        }
    for (const auto& a : roots)
        for (const auto& b : roots)
            rows.push_back({"ef", GenKind::E, a, GenKind::F, b,
                            alg.supercommutator(gen(GenKind::E, a), gen(GenKind::F, b))});
    return rows;
}

inline std::string table_row_text(const TableRow& row, TextStyle st) {
    std::string l = render_generator_factor(row.left_kind, row.left, 1, st);
    std::string r = render_generator_factor(row.right_kind, row.right, 1, st);
    std::string body = render_element(row.bracket, st);
    if (st == TextStyle::Latex) return "[" + l + ", " + r + "] = " + body;
    return "scomm(" + l + ", " + r + ") = " + body;
}

}  // namespace detail

// Runs the command-line front end on an argument list (program name
// excluded). Exit codes: 0 success, 1 verification failure, 2 usage or
// input errors, 3 internal errors.
inline CliResult run_cli(const std::vector<std::string>& args, std::istream& in = std::cin) {
    CliResult res;
    std::ostringstream out, err;

    CLI::App app{"exact calculator for the quantum general linear superalgebra"};
    app.name("uqgl");
    int M = 0, N = 0;
    std::string format = "text";
    app.add_option("--M", M, "even block size (>= 1)")->required();
    app.add_option("--N", N, "odd block size (>= 1, different from M)")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    app.require_subcommand(1);

    auto* norm = app.add_subcommand("normalize", "rewrite an expression in the ordered basis");
    std::string norm_expr;
    norm->add_option("expr", norm_expr, "expression, or - to read stdin")->required();

    auto* comm = app.add_subcommand("comm", "graded commutator of two expressions");
    std::string comm_left, comm_right;
    comm->add_option("left", comm_left, "expression, or - to read stdin")->required();
    comm->add_option("right", comm_right, "expression, or - to read stdin")->required();

    auto* table = app.add_subcommand("table", "print all pairwise root-vector brackets");

    auto* verify = app.add_subcommand("verify", "run the relation batteries");
    std::string suite = "all";
    std::uint64_t seed = 12345;
    int trials = 100;
    int max_len = 4;
    verify->add_option("--suite", suite, "battery to run")
        ->check(CLI::IsMember({"defining", "propositions", "assoc", "classical", "eval", "all"}))
        ->capture_default_str();
    verify->add_option("--seed", seed, "seed for randomized batteries")->capture_default_str();
    verify->add_option("--trials", trials, "associativity trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--max-len", max_len, "max word length per associativity operand")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        res.out = out.str();
        res.err = err.str();
        res.exit_code = code == 0 ? 0 : 2;
        return res;
    }

    bool stdin_used = false;
    auto resolve = [&](const std::string& text) -> std::string {
        if (text != "-") return text;
        if (stdin_used) throw Error("stdin may supply at most one expression");
        stdin_used = true;
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    try {
        Superdim dim(M, N);
        TextStyle st = detail::style_of(format);
        const bool json_out = format == "json";

        // JSON output is line-delimited: one compact record per line.
        if (app.got_subcommand(norm)) {
            Element<QRat> e = parse_element(dim, resolve(norm_expr));
            if (json_out)
                out << detail::element_json(e).dump() << "\n";
            else
                out << render_element(e, st) << "\n";
        } else if (app.got_subcommand(comm)) {
            SymbolicAlgebra alg(dim);
            Element<QRat> a = parse_element(dim, resolve(comm_left));
            Element<QRat> b = parse_element(dim, resolve(comm_right));
            Element<QRat> e = alg.supercommutator(a, b);
            if (json_out)
                out << detail::element_json(e).dump() << "\n";
            else
                out << render_element(e, st) << "\n";
        } else if (app.got_subcommand(table)) {
            auto rows = detail::bracket_table(dim);
            if (json_out) {
                for (const auto& row : rows)
                    out << nlohmann::ordered_json(
                               {{"kind", row.kind},
                                {"left", render_generator_factor(row.left_kind, row.left, 1,
                                                                 TextStyle::Plain)},
                                {"right", render_generator_factor(row.right_kind, row.right,
                                                                  1, TextStyle::Plain)},
                                {"bracket", render_element(row.bracket)}})
                               .dump()
                        << "\n";
            } else {
                const char* section = "";
                for (const auto& row : rows) {
                    if (std::string(section) != row.kind) {
                        section = row.kind;
                        const char* title = std::string(section) == "ee"
                                                ? "raising-raising"
                                                : (std::string(section) == "ff"
                                                       ? "lowering-lowering"
                                                       : "raising-lowering");
                        out << (st == TextStyle::Latex ? "% " : "# ") << title << "\n";
                    }
                    out << detail::table_row_text(row, st) << "\n";
                }
            }
        } else if (app.got_subcommand(verify)) {
            std::vector<CheckReport> reports;
            const std::vector<Rational> points{Rational(2), Rational(3) / 2, Rational(-2)};
            if (suite == "defining" || suite == "all") reports.push_back(check_defining(dim));
            if (suite == "propositions" || suite == "all")
                reports.push_back(check_propositions(dim));
            if (suite == "classical" || suite == "all")
                reports.push_back(check_classical_limit(dim));
            if (suite == "eval" || suite == "all")
                reports.push_back(check_random_eval(dim, points, seed));
            if (suite == "assoc" || suite == "all")
                reports.push_back(check_associativity(dim, trials, max_len, seed));
            bool ok = true;
            for (const auto& r : reports) ok = ok && r.passed();
            if (json_out) {
                for (const auto& r : reports)
                    out << detail::report_json(r).dump() << "\n";
                out << nlohmann::ordered_json{{"passed", ok}}.dump() << "\n";
            } else {
                for (const auto& r : reports) out << report_to_text(r) << "\n";
                out << (ok ? "all suites passed" : "verification FAILED") << "\n";
            }
            if (!ok) res.exit_code = 1;
        }
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        res.exit_code = 3;
    } catch (const SyntaxError& e) {
        err << "syntax error at position " << e.position << ": " << e.what() << "\n";
        res.exit_code = 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        res.exit_code = 3;
    }

    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace uqgl
