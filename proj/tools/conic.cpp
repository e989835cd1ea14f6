#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conic/cli/problem.hpp"
#include "conic/cli/report.hpp"
#include "conic/cli/tasks.hpp"

namespace {

enum Exit { ok = 0, analysis_failure = 1, input_error = 2 };

struct Flags
{
    std::uint64_t seed = 1;
    std::string norm = "linf";
    std::size_t truncation = 64;
    std::string format = "text";
    bool verbose = false;
};

void add_flags(CLI::App& app, Flags& f)
{
    app.add_option("--seed", f.seed, "Seed for sampled instances");
    app.add_option("--norm", f.norm, "Norm for distances")->check(CLI::IsMember({"linf", "l1"}));
    app.add_option("--truncation", f.truncation, "Family window / example truncation")->check(CLI::Range(3, 4096));
    app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--verbose", f.verbose, "Progress on stderr and extra tables");
}

conic::cli::Options to_options(const Flags& f)
{
    conic::cli::Options o;
    o.seed = f.seed;
    o.norm = conic::parse_norm(f.norm);
    o.truncation = f.truncation;
    o.verbose = f.verbose;
    return o;
}

void emit(const conic::cli::Report& r, const Flags& f)
{
    std::cout << (f.format == "machine" ? conic::cli::render_machine(r) : conic::cli::render_text(r));
    for (const auto& msg : r.failures)
        std::cerr << r.source << ": " << msg << "\n";
}

// Runs one unit of work and maps exceptions onto exit codes.
template <class Fn>
int guarded(const std::string& where, Fn&& fn)
{
    try {
        return fn();
    } catch (const conic::MalformedInput& e) {
        std::cerr << where << ": input error: " << e.what() << "\n";
        return input_error;
    } catch (const conic::Error& e) {
        std::cerr << where << ": analysis failed: " << e.what() << "\n";
        return analysis_failure;
    }
}

int run_file(const std::string& path, const Flags& f)
{
    return guarded(path, [&] {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw conic::MalformedInput("cannot open file");
        std::ostringstream buf;
        buf << in.rdbuf();
        const conic::cli::ProblemFile pf = conic::cli::parse_problem(buf.str());
        if (f.verbose)
            std::cerr << path << ": task " << pf.task << ", dimension " << pf.dimension << ", " << pf.sets.size()
                      << " set(s)\n";
        const conic::cli::Report r = conic::cli::run_problem(pf, to_options(f), path);
        emit(r, f);
        return r.failures.empty() ? ok : analysis_failure;
    });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Conic analysis: cone algebra, boundedness, cancellation, Radstrom embedding, Pareto points"};
    app.require_subcommand(1);
    Flags flags;

    std::vector<std::string> files;
    auto* run = app.add_subcommand("run", "Run problem files (one task per file)");
    run->add_option("files", files, "Problem files (JSON)")->required();
    add_flags(*run, flags);

    std::string name;
    auto* example = app.add_subcommand("example", "Reproduce a built-in example");
    example->add_option("name", name, "c0-family | ice-cream | hyperbola | c00-open")->required();
    add_flags(*example, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    int worst = ok;
    if (*run) {
        for (const auto& path : files)
            worst = std::max(worst, run_file(path, flags));
    } else {
        worst = guarded(name, [&] {
            if (flags.verbose)
                std::cerr << "example " << name << ", seed " << flags.seed << ", truncation " << flags.truncation << "\n";
            const conic::cli::Report r = conic::cli::run_example(name, to_options(flags));
            emit(r, flags);
            return r.failures.empty() ? ok : analysis_failure;
        });
    }
    return worst;
}
