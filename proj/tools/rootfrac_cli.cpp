// SPDX-License-Identifier: Apache-2.0
// Command-line front end: table generation, chi tables, and check suites.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootfrac/checks.hpp"
#include "rootfrac/errors.hpp"
#include "rootfrac/mfun.hpp"
#include "rootfrac/periodic.hpp"
#include "rootfrac/render.hpp"

namespace {

using namespace rootfrac;

int apply_precision_cap(long flag_value) {
    if (flag_value > 0) {
        set_precision_cap(flag_value);
        return 0;
    }
    if (const char* env = std::getenv("ROOTFRAC_PRECISION_CAP")) {
        long v = std::atol(env);
        if (v < 64) {
            std::cerr << "error: ROOTFRAC_PRECISION_CAP must be >= 64\n";
            return 2;
        }
        set_precision_cap(v);
    }
    return 0;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "grid") return OutputFormat::Grid;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json-lines") return OutputFormat::JsonLines;
    throw Error("unknown format '" + s + "' (expected grid, csv or json-lines)");
}

int cmd_table(const std::string& theta_str, long from, long to,
              const std::string& format, long columns) {
    ThetaExpr theta = parse_theta(theta_str);
    MSequence seq = m_sequence(theta, from, to);
    OutputSpec spec;
    spec.format = parse_format(format);
    spec.columns_per_row = columns;
    std::cout << render_sequence(seq, spec);
    return 0;
}

int cmd_chi(long k, long l) {
    std::cout << chi_table(k, l).render();
    std::cout << "threshold " << threshold(k, l) << "\n";
    return 0;
}

int cmd_check(const std::string& suite, const std::string& theta_str,
              unsigned long seed, long horizon) {
    SuiteResult total;
    bool want_all = suite == "all";
    if (suite == "inequalities" || want_all)
        total.merge(run_inequality_sweep(seed, want_all ? 100 : 1000));
    if (suite == "periodicity" || want_all) {
        ThetaExpr theta = parse_theta(theta_str.empty() ? "e^3/7" : theta_str);
        if (theta.kind() != ThetaExpr::Kind::ExpRational) {
            std::cerr << "error: periodicity suite needs an e^k/l base\n";
            return 2;
        }
        total.merge(run_periodicity_suite(theta, 200, horizon));
    }
    if (suite == "beatty" || want_all) {
        if (!theta_str.empty()) {
            total.merge(run_beatty_suite(parse_theta(theta_str), horizon));
        } else {
            for (const ThetaExpr& t : sweep_theta_set())
                total.merge(run_beatty_suite(t, want_all ? 200 : horizon));
        }
    }
    if (suite == "stats" || want_all)
        total.merge(run_stats_suite(want_all ? 500 : 5000, want_all ? 500 : 1000));
    if (!want_all && suite != "inequalities" && suite != "periodicity" &&
        suite != "beatty" && suite != "stats") {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    for (const std::string& line : total.lines)
        if (!line.empty()) std::cout << line << "\n";
    std::cout << (total.ok() ? "OK" : "FAILED") << " (" << total.passed
              << " passed, " << total.failed << " failed)\n";
    return total.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified integer parts of reciprocal fractional parts of roots"};
    app.require_subcommand(1);

    std::string theta_str, format = "grid", suite;
    long from = 1, to = 90, columns = 15, k = 0, l = 0;
    long precision_cap_flag = 0, horizon = 2000;
    unsigned long seed = 42;

    CLI::App* table = app.add_subcommand("table", "print M values over a range of n");
    table->add_option("--theta", theta_str, "base (rational p/q, decimal, e, e^k/l, pi)")
        ->required();
    table->add_option("--from", from, "first n (default 1)");
    table->add_option("--to", to, "last n (default 90)");
    table->add_option("--format", format, "grid, csv or json-lines");
    table->add_option("--columns", columns, "grid entries per row");
    table->add_option("--precision-cap", precision_cap_flag, "escalation cap in bits");

    CLI::App* chi = app.add_subcommand("chi", "print the residue correction table for e^k/l");
    chi->add_option("k", k, "exponent numerator")->required();
    chi->add_option("l", l, "exponent denominator")->required();

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite, "inequalities, periodicity, beatty, stats or all")
        ->required();
    check->add_option("--theta", theta_str, "base for base-specific suites");
    check->add_option("--seed", seed, "RNG seed for randomized sweeps");
    check->add_option("--horizon", horizon, "verification horizon");
    check->add_option("--precision-cap", precision_cap_flag, "escalation cap in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (int rc = apply_precision_cap(precision_cap_flag)) return rc;
        if (table->parsed()) return cmd_table(theta_str, from, to, format, columns);
        if (chi->parsed()) return cmd_chi(k, l);
        if (check->parsed()) return cmd_check(suite, theta_str, seed, horizon);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
