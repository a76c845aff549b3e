#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "liecent/report.hpp"

using namespace liecent;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

int write_output(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return exit_usage;
    }
    out << text;
    return exit_ok;
}

std::vector<std::string> split_names(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

// Grammar and usage problems exit 2; everything raised while building or
// analysing a well-formed request exits 1.
template <typename F>
int guarded(F&& body)
{
    try {
        return body();
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact structure computations for finite-dimensional Lie algebras over Q"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    std::string format = "json";
    std::string out_path;

    auto* analyze = app.add_subcommand("analyze", "Run analyses on one algebra");
    std::string algebra;
    std::string analyses;
    analyze->add_option("--algebra", algebra, "Algebra description, e.g. sl:2, cur:sl:2,jet:1,3, @file.json")
        ->required();
    analyze->add_option("--analyze", analyses, "Comma-separated analyses: " + [] {
        std::string s;
        for (const auto& n : analysis_registry()) {
            s += (s.empty() ? "" : ",") + n;
        }
        return s;
    }());
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* sections = app.add_subcommand("sections", "Finite-model checks for Lie algebras of sections");
    SectionsRequest sreq;
    sections->add_option("--check", sreq.check, "Check to run")->required()->check(CLI::IsMember(section_checks()));
    sections->add_option("--k", sreq.k, "Fibre Lie algebra");
    sections->add_option("--A", sreq.a, "Coefficient algebra: jet:m,N, points:k or gauss");
    sections->add_option("--m", sreq.m, "Number of base variables");
    sections->add_option("--alpha", sreq.alpha, "Multi-index for multinom, e.g. 1,0,2");
    sections->add_option("--n", sreq.n, "Shift coefficients for jetauto, e.g. 0,0,1");
    sections->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sections->add_option("--out", out_path, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    const OutputFormat fmt = format == "text" ? OutputFormat::text : OutputFormat::json;

    if (analyze->parsed()) {
        return guarded([&] {
            const Report report = run(AnalysisRequest{algebra, split_names(analyses), fmt});
            const int written = write_output(emit(report, fmt), out_path);
            if (written != exit_ok) {
                return written;
            }
            return report.ok() ? exit_ok : exit_failed;
        });
    }
    return guarded([&] {
        const SectionsReport report = run_sections(sreq);
        const int written = write_output(emit(report, fmt), out_path);
        if (written != exit_ok) {
            return written;
        }
        return report.check.passed() ? exit_ok : exit_failed;
    });
}
