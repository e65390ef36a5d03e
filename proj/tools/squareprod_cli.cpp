// squareprod: decide, certify, and enumerate perfect-square products of
// consecutive values of quartics P(k) = f(k) f(k+1), f(x) = x^2 + ax + b.

#include "squareprod/squareprod.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace squareprod;

enum class Format { text, json, csv };

struct GlobalOptions {
    Format format = Format::text;
    std::string scan_bound = "2000";
    int jobs = 1;
};

void emit(const Report& report, Format format) {
    switch (format) {
        case Format::text: std::cout << to_text(report); break;
        case Format::json: std::cout << to_json_string(report); break;
        case Format::csv: std::cout << to_csv(report); break;
    }
    for (const std::string& line : report.diagnostics) std::cerr << line << "\n";
}

long brute_limit_from_env() {
    if (const char* env = std::getenv("SQUAREPROD_SCAN_LIMIT")) {
        try {
            const long value = std::stol(env);
            if (value < 0) throw std::invalid_argument("negative");
            return value;
        } catch (const std::exception&) {
            throw std::domain_error("SQUAREPROD_SCAN_LIMIT must be a nonnegative integer");
        }
    }
    return kDefaultBruteLimit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact square-product certification for quartic families f(k)f(k+1)"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    std::map<std::string, Format> format_map{
        {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", opts.format, "output format")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case))
        ->default_val("text");
    app.add_option("--scan-bound", opts.scan_bound, "bound for scan-style searches")
        ->default_val("2000");
    app.add_option("--jobs", opts.jobs, "threads for grid sweeps (output stays deterministic)")
        ->default_val(1)
        ->check(CLI::Range(1, 256));

    std::string a_str = "0", b_str = "0", k0_str = "1", n_str = "0";
    std::string x_lo_str = "-10", x_hi_str = "10", d_str = "2";
    std::string mode_name = "fast", sign_name = "negative", which_name;
    int count = 1;

    CLI::App* identity = app.add_subcommand("identity", "verify f(f(x)+x) = f(x)f(x+1) on a grid");
    identity->add_option("-a,--a", a_str, "quadratic coefficient a")->required();
    identity->add_option("-b,--b", b_str, "quadratic coefficient b")->required();
    identity->add_option("--x-lo", x_lo_str, "grid start")->default_val("-10");
    identity->add_option("--x-hi", x_hi_str, "grid end")->default_val("10");

    CLI::App* expand = app.add_subcommand("expand", "expand f(k)f(k+1) into quartic coefficients");
    expand->add_option("-a,--a", a_str)->required();
    expand->add_option("-b,--b", b_str)->required();

    CLI::App* check = app.add_subcommand("check-product",
                                         "decide whether prod_{k=k0}^{n} f(k)f(k+1) is a square");
    check->add_option("-a,--a", a_str)->required();
    check->add_option("-b,--b", b_str)->required();
    check->add_option("--k0", k0_str, "product start index")->required();
    check->add_option("-n,--n", n_str, "product end index")->required();
    std::map<std::string, CheckMode> mode_map{
        {"fast", CheckMode::fast}, {"brute", CheckMode::brute}, {"both", CheckMode::both}};
    CheckMode mode = CheckMode::fast;
    check->add_option("--mode", mode, "fast (telescoped residual), brute (full product), or both")
        ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case))
        ->default_val("fast");

    CLI::App* solve = app.add_subcommand("solve-square-values",
                                         "solve k^2 + ak + b = z^2 completely");
    solve->add_option("-a,--a", a_str)->required();
    solve->add_option("-b,--b", b_str)->required();

    CLI::App* pell_cmd = app.add_subcommand("pell", "solve X^2 - D Y^2 = -1 or +1");
    pell_cmd->add_option("-D,--D", d_str, "nonsquare D >= 2")->required();
    pell_cmd->add_option("--count", count, "number of solutions to list")
        ->default_val(1)
        ->check(CLI::Range(1, 1000));
    std::map<std::string, PellSign> sign_map{{"negative", PellSign::negative},
                                             {"positive", PellSign::positive}};
    PellSign sign = PellSign::negative;
    pell_cmd->add_option("--sign", sign, "which equation to solve")
        ->transform(CLI::CheckedTransformer(sign_map, CLI::ignore_case))
        ->default_val("negative");

    CLI::App* classify = app.add_subcommand("classify-family",
                                            "classify the solution set of the product equation");
    classify->add_option("-a,--a", a_str)->required();
    classify->add_option("-b,--b", b_str)->required();
    classify->add_option("--k0", k0_str, "product start index")->default_val("1");

    CLI::App* scan_intro = app.add_subcommand("scan-intro",
                                              "scan a reference quadratic-factor product");
    std::map<std::string, ReferenceProduct> which_map{{"cilleruelo", ReferenceProduct::cilleruelo},
                                                      {"fang1", ReferenceProduct::fang1},
                                                      {"fang2", ReferenceProduct::fang2}};
    ReferenceProduct which = ReferenceProduct::cilleruelo;
    scan_intro->add_option("--which", which, "cilleruelo (k^2+1), fang1 (4k^2+1), or fang2 (2k(k-1)+1)")
        ->transform(CLI::CheckedTransformer(which_map, CLI::ignore_case))
        ->required();

    CLI::App* reproduce = app.add_subcommand("reproduce-paper",
                                             "re-derive and check all published values in one shot");
    (void)reproduce;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        Report report;
        const Int scan_bound = parse_int(opts.scan_bound);
        if (identity->parsed()) {
            report = cmd_identity(parse_int(a_str), parse_int(b_str), parse_int(x_lo_str),
                                  parse_int(x_hi_str), opts.jobs);
        } else if (expand->parsed()) {
            report = cmd_expand(parse_int(a_str), parse_int(b_str));
        } else if (check->parsed()) {
            report = cmd_check_product(parse_int(a_str), parse_int(b_str), parse_int(k0_str),
                                       parse_int(n_str), mode, brute_limit_from_env());
        } else if (solve->parsed()) {
            report = cmd_solve_square_values(parse_int(a_str), parse_int(b_str));
        } else if (pell_cmd->parsed()) {
            report = cmd_pell(parse_int(d_str), count, sign);
        } else if (classify->parsed()) {
            report = cmd_classify(parse_int(a_str), parse_int(b_str), parse_int(k0_str), scan_bound);
        } else if (scan_intro->parsed()) {
            report = cmd_scan_intro(which, scan_bound);
        } else {
            report = cmd_reproduce_paper(scan_bound, opts.jobs);
        }
        emit(report, opts.format);
        return report.ok ? 0 : 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
