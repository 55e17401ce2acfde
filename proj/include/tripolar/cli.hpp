#pragma once

// Command-line front end:
//
//   tripolar <eval|canon|render|check|tables> [--grid 380:780:5] [--square 1]
//            [--tol 1e-9] [--seed N] [--format json|csv|pretty] [--out DIR]
//            "<expr>"
//
// Exit codes: 0 success, 1 property failure, 2 syntax or usage error,
// 3 singular divisor, 4 grid mismatch, 5 any other failure (I/O, malformed
// input files, unsupported square).

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tripolar/check.hpp"
#include "tripolar/colourspace.hpp"
#include "tripolar/diagnostics.hpp"
#include "tripolar/dsl.hpp"
#include "tripolar/error.hpp"
#include "tripolar/io.hpp"
#include "tripolar/poles.hpp"

namespace tripolar::cli {

enum ExitCode : int {
    Ok = 0,
    PropertyFailure = 1,
    Syntax = 2,
    Singular = 3,
    GridMismatch = 4,
    Other = 5,
};

struct CliConfig {
    std::string grid = "380:780:5";
    int square = 1;
    double tol = default_tolerance;
    bool resample = false;
    std::string format;
    std::uint64_t seed = 42;
    std::size_t cases = 1000;
    std::string out_dir = ".";
    std::string fault;
    std::string expr;
};

inline Grid parse_grid(const std::string& text)
{
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
    if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
        throw Error(ErrorKind::InvalidGrid, "grid must look like START:STOP:STEP");
    try {
        std::size_t used = 0;
        const auto num = [&](const std::string& s) {
            const double v = std::stod(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return v;
        };
        return Grid(num(text.substr(0, a)), num(text.substr(a + 1, b - a - 1)), num(text.substr(b + 1)));
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidGrid, "grid must look like START:STOP:STEP");
    }
}

inline int exit_code_for(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::SyntaxError:
        case ErrorKind::NegativeRealPart:
        case ErrorKind::NonPositiveSigma:
        case ErrorKind::InvalidGrid:
            return Syntax;
        case ErrorKind::SingularDivisor:
            return Singular;
        case ErrorKind::GridMismatch:
        case ErrorKind::OutOfSpan:
            return GridMismatch;
        default:
            return Other;
    }
}

inline dsl::EvalContext context_for(const CliConfig& cfg)
{
    return {parse_grid(cfg.grid), cfg.square, cfg.tol, cfg.resample};
}

inline void print_tables(std::ostream& out)
{
    bool first = true;
    for (const auto& sq : all_latin_squares()) {
        if (!first)
            out << '\n';
        first = false;
        out << "square " << sq.index();
        if (auto e = identity_pole(sq))
            out << " (identity " << pole_name(*e) << ")";
        out << "\n  | R G B\n--+------\n";
        for (Pole row : all_poles) {
            out << pole_name(row) << " |";
            for (Pole col : all_poles)
                out << ' ' << pole_name(sq(row, col));
            out << '\n';
        }
    }
}

inline void print_colour(const Colour& c, const std::string& format, const std::string& fallback,
                         double tol, std::ostream& out)
{
    const std::string& f = format.empty() ? fallback : format;
    if (f == "json")
        out << colour_to_json(c) << '\n';
    else if (f == "csv")
        write_csv(stimulus_curve(c, RenderModel::gaussian_default(c.grid())), out);
    else
        out << colour_to_pretty(c, tol) << '\n';
}

inline int cmd_eval(const CliConfig& cfg, std::ostream& out)
{
    const auto c = dsl::eval(cfg.expr, context_for(cfg));
    print_colour(c, cfg.format, "pretty", cfg.tol, out);
    return Ok;
}

inline int cmd_canon(const CliConfig& cfg, std::ostream& out)
{
    const auto c = dsl::eval(cfg.expr, context_for(cfg));
    print_colour(c, cfg.format, "json", cfg.tol, out);
    return Ok;
}

/// Writes curve.csv and report.json into the output directory and echoes the
/// report on stdout.
inline int cmd_render(const CliConfig& cfg, std::ostream& out)
{
    const auto c = dsl::eval(cfg.expr, context_for(cfg));
    const auto model = RenderModel::gaussian_default(c.grid());
    const Spectrum curve = stimulus_curve(c, model);
    const HsbReport report = hsb_report(c, model);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec)
        throw Error(ErrorKind::Io, "cannot create '" + cfg.out_dir + "': " + ec.message());
    to_csv(curve, (fs::path(cfg.out_dir) / "curve.csv").string());
    const auto json_path = (fs::path(cfg.out_dir) / "report.json").string();
    std::ofstream js(json_path, std::ios::binary);
    if (!js)
        throw Error(ErrorKind::Io, "cannot open '" + json_path + "' for writing");
    js << hsb_to_json(report) << '\n';

    if (cfg.format == "csv")
        write_csv(curve, out);
    else if (cfg.format == "pretty")
        out << "hue " << format_number(report.hue_nm) << " nm, energy "
            << format_number(report.energy) << ", peak " << format_number(report.peak)
            << ", saturation " << format_number(report.saturation) << ", swatch " << report.swatch
            << '\n';
    else
        out << hsb_to_json(report) << '\n';
    return Ok;
}

/// Operations with one deliberately broken member, for testing the checker.
inline check::Operations faulty_operations(const std::string& fault)
{
    check::Operations ops;
    if (fault.empty())
        return ops;
    if (fault == "mul")
        ops.mul = [](const Colour& x, const Colour& y) { return c_conj(c_mul(x, y)); };
    else if (fault == "add")
        ops.add = [](const Colour& x, const Colour& y) { return c_add(x, c_add(y, y)); };
    else if (fault == "neg")
        ops.neg = [](const Colour& x) { return x; };
    else if (fault == "conj")
        ops.conj = [](const Colour& x) { return x; };
    else if (fault == "recip")
        ops.recip = [](const Colour& x, double) { return c_conj(x); };
    else
        throw Error(ErrorKind::SyntaxError, "unknown fault '" + fault + "'");
    return ops;
}

inline int cmd_check(const CliConfig& cfg, std::ostream& out)
{
    if (cfg.cases < 1)
        throw Error(ErrorKind::SyntaxError, "--cases must be at least 1");
    check::Config ccfg{parse_grid(cfg.grid), cfg.square, cfg.tol, cfg.seed, cfg.cases};
    const auto report = check::run_all(ccfg, faulty_operations(cfg.fault));
    out << report.text();
    return report.passed() ? Ok : PropertyFailure;
}

/// Runs the CLI with argv-style arguments (args[0] is the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tri-polar RGB colour algebra"};
    app.require_subcommand(1);
    CliConfig cfg;

    const auto add_common = [&](CLI::App* sub, bool with_expr) {
        sub->add_option("--grid", cfg.grid, "wavelength grid START:STOP:STEP in nm");
        sub->add_option("--square", cfg.square, "Latin square (1, 2 or 3)")
            ->check(CLI::Range(1, 3));
        sub->add_option("--tol", cfg.tol, "comparison tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--resample", cfg.resample, "interpolate csv: spectra onto the grid");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
        sub->add_option("--out", cfg.out_dir, "output directory for render");
        if (with_expr)
            sub->add_option("expr", cfg.expr, "colour expression")->required();
    };

    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    auto* canon = app.add_subcommand("canon", "print the canonical form as JSON");
    auto* render = app.add_subcommand("render", "write the stimulus curve and HSB report");
    auto* check = app.add_subcommand("check", "run the randomized property suites");
    auto* tables = app.add_subcommand("tables", "print the six Latin squares");
    add_common(eval, true);
    add_common(canon, true);
    add_common(render, true);
    add_common(check, false);
    check->add_option("--cases", cfg.cases, "cases per property");
    check->add_option("--inject-fault", cfg.fault, "break one operation (test of the tests)")
        ->group("");

    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return Syntax;
    }

    try {
        if (*eval)
            return cmd_eval(cfg, out);
        if (*canon)
            return cmd_canon(cfg, out);
        if (*render)
            return cmd_render(cfg, out);
        if (*check)
            return cmd_check(cfg, out);
        if (*tables) {
            print_tables(out);
            return Ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Other;
    }
    return Syntax;
}

} // namespace tripolar::cli
