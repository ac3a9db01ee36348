// severi: counts of nodal plane curves with prescribed contact to a line,
// their node polynomials, recursion traces, and a self-verification suite.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "severi/cache.hpp"
#include "severi/engine.hpp"
#include "severi/format.hpp"
#include "severi/nodepoly.hpp"
#include "severi/parallel.hpp"
#include "severi/verify.hpp"

namespace {

using namespace severi;

struct ComputeArgs {
    int delta = 0;
    int degree = 1;
    std::string pi;
    std::string format = "text";
};

struct PolynomialArgs {
    int delta = 0;
    std::string tail = "[]";
    int e_min = -1;   // -1: use the family default
    int samples = -1; // -1: expected degree + 2
    std::string format = "text";
};

struct TableArgs {
    int delta_max = 0;
    int degree_max = 1;
    int threads = 1;
    std::string format = "text";
};

struct TraceArgs {
    int degree = 2;
    int delta = 0;
    std::string alpha = "[]";
    std::string beta; // empty: all remaining contacts transverse and free
    int depth = 1;
};

struct VerifyArgs {
    std::string suite = "quick";
    int threads = 1;
    std::string format = "text";
};

int run_compute(SeveriEngine& engine, const ComputeArgs& args) {
    ComputeResult result;
    result.delta = args.delta;
    result.d = args.degree;
    result.pi = args.pi.empty() ? TangencyVector({args.degree}) : TangencyVector::parse(args.pi);

    if (result.pi.weight() != args.degree) {
        std::cerr << "error: contact pattern " << result.pi.str() << " has weight " << result.pi.weight()
                  << " but a degree-" << args.degree << " curve meets a line in exactly " << args.degree
                  << " points\n";
        return 2;
    }
    const SeveriState state{args.degree, args.delta, TangencyVector(), result.pi};
    if (state.point_count() < 0)
        std::cerr << "warning: " << state.str() << " has point budget " << state.point_count()
                  << "; the locus is over-constrained and the count is 0\n";

    result.value = engine.severi_number(state);
    std::cout << format_compute(result, parse_format(args.format));
    return 0;
}

int run_polynomial(SeveriEngine& engine, const PolynomialArgs& args) {
    const PolynomialFamily family(args.delta, TangencyVector::parse(args.tail).entries());
    PolynomialResult result{family, 0, 0, RationalPoly()};
    result.e_min = args.e_min >= 0 ? args.e_min : family.default_e_min();
    result.samples = args.samples >= 0 ? args.samples : family.expected_degree() + 2;
    result.poly = node_polynomial(engine, family, result.e_min, result.samples);
    std::cout << format_polynomial(result, parse_format(args.format));
    return 0;
}

int run_table(SeveriEngine& engine, const TableArgs& args) {
    if (args.threads > 1) {
        // Warm the memo cell by cell, then assemble from memo hits.
        std::vector<std::function<void()>> tasks;
        for (int delta = 0; delta <= args.delta_max; ++delta)
            for (int d = 1; d <= args.degree_max; ++d)
                tasks.push_back([&engine, delta, d] { engine.severi_degree(delta, d); });
        run_parallel(std::move(tasks), args.threads);
    }
    TableResult result{args.delta_max, args.degree_max, engine.severi_table(args.delta_max, args.degree_max)};
    std::cout << format_table(result, parse_format(args.format));
    return 0;
}

int run_trace(SeveriEngine& engine, const TraceArgs& args) {
    const TangencyVector alpha = TangencyVector::parse(args.alpha);
    TangencyVector beta;
    if (args.beta.empty()) {
        const int rest = args.degree - alpha.weight();
        if (rest < 0) {
            std::cerr << "error: fixed contacts " << alpha.str() << " already exceed the degree " << args.degree
                      << "\n";
            return 2;
        }
        beta = TangencyVector({rest});
    } else {
        beta = TangencyVector::parse(args.beta);
    }
    const SeveriState root{args.degree, args.delta, alpha, beta};
    std::cout << format_trace(engine, root, args.depth);
    return 0;
}

int run_verify(SeveriEngine& engine, const VerifyArgs& args) {
    const VerifySuite suite = args.suite == "paper" ? VerifySuite::paper : VerifySuite::quick;
    const VerificationReport report = run_verification(engine, suite, args.threads);
    std::cout << format_verify(report, parse_format(args.format));
    return report.ok() ? 0 : 1;
}

void add_format_flag(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts of nodal plane curves with prescribed contact to a fixed line,\n"
                 "computed by a degeneration recursion in exact arithmetic."};
    app.require_subcommand(1);
    app.fallthrough(); // lets global options like --cache appear after the subcommand

    std::string cache_path;
    if (const char* env = std::getenv("SEVERI_CACHE")) cache_path = env;
    app.add_option("--cache", cache_path, "Memo cache file, loaded before and saved after the run\n"
                                          "(default: $SEVERI_CACHE)");

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "Count curves for one (delta, degree, contact pattern)");
    compute->add_option("--delta", compute_args.delta, "Number of nodes")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--degree", compute_args.degree, "Curve degree")->required()->check(CLI::PositiveNumber);
    compute->add_option("--pi", compute_args.pi,
                        "Contact pattern with the line, e.g. [2,1] = two transverse points\n"
                        "plus one simple tangency (default: all transverse)");
    add_format_flag(compute, compute_args.format);

    PolynomialArgs polynomial_args;
    auto* polynomial = app.add_subcommand("polynomial", "Interpolate a family polynomial in the curve degree e");
    polynomial->add_option("--delta", polynomial_args.delta, "Number of nodes")
        ->required()
        ->check(CLI::NonNegativeNumber);
    polynomial->add_option("--tail", polynomial_args.tail,
                           "Higher contact multiplicities [l2,l3,...] held fixed along the\n"
                           "family; transverse contacts fill the rest (default [])");
    polynomial->add_option("--e-min", polynomial_args.e_min, "First sampled degree (default: delta + tail weight,\n"
                                                             "at least delta + 1)");
    polynomial->add_option("--samples", polynomial_args.samples,
                           "Number of samples; everything beyond degree+1 is a polynomiality\n"
                           "guard (default: degree + 2)");
    add_format_flag(polynomial, polynomial_args.format);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Tabulate counts for delta = 0..delta-max, d = 1..degree-max");
    table->add_option("--delta-max", table_args.delta_max, "Largest node count")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table->add_option("--degree-max", table_args.degree_max, "Largest curve degree")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--threads", table_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    add_format_flag(table, table_args.format);

    TraceArgs trace_args;
    auto* trace = app.add_subcommand("trace", "Print the expansion tree under a state (text only)");
    trace->add_option("--degree", trace_args.degree, "Curve degree (>= 2)")->required()->check(CLI::PositiveNumber);
    trace->add_option("--delta", trace_args.delta, "Number of nodes")->required()->check(CLI::NonNegativeNumber);
    trace->add_option("--alpha", trace_args.alpha, "Fixed contact pattern (default [])");
    trace->add_option("--beta", trace_args.beta, "Free contact pattern (default: degree minus the fixed\n"
                                                 "contacts, all transverse)");
    trace->add_option("--depth", trace_args.depth, "Expansion depth")->check(CLI::PositiveNumber);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the reference checks");
    verify->add_option("--suite", verify_args.suite, "quick: closed forms, fixed counts, families;\n"
                                                     "paper: adds the delta = 6, 7 windows and advisory formulas")
        ->check(CLI::IsMember({"quick", "paper"}))
        ->capture_default_str();
    verify->add_option("--threads", verify_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    add_format_flag(verify, verify_args.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    SeveriEngine engine;
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        try {
            engine.preload(cache_load(cache_path));
        } catch (const std::exception& err) {
            std::cerr << "warning: " << err.what() << "; starting with an empty memo\n";
        }
    }

    int code = 2;
    try {
        if (compute->parsed()) code = run_compute(engine, compute_args);
        else if (polynomial->parsed()) code = run_polynomial(engine, polynomial_args);
        else if (table->parsed()) code = run_table(engine, table_args);
        else if (trace->parsed()) code = run_trace(engine, trace_args);
        else if (verify->parsed()) code = run_verify(engine, verify_args);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }

    if (!cache_path.empty() && code != 2) {
        try {
            cache_save(cache_path, engine.snapshot());
        } catch (const std::exception& err) {
            std::cerr << "warning: " << err.what() << "\n";
        }
    }
    return code;
}
