#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecent/algebra_spec.hpp"
#include "liecent/json_io.hpp"
#include "liecent/sections.hpp"

namespace liecent {

inline constexpr int report_schema = 1;
inline constexpr const char* tool_version = "1.0.0";

/// Bad command-line usage: unknown analysis or check, missing argument.
class UsageError : public InputError {
public:
    using InputError::InputError;
};

enum class OutputFormat { json, text };

struct AnalysisRequest {
    std::string algebra_spec;
    std::vector<std::string> analyses;
    OutputFormat format = OutputFormat::json;
};

struct AnalysisResult {
    std::string name;
    Json result = Json::object();
    std::vector<std::string> failures;
    std::optional<std::string> error;

    [[nodiscard]] bool ok() const { return failures.empty() && !error; }
};

struct Report {
    AnalysisRequest request;
    Json algebra = Json::object();
    std::vector<AnalysisResult> results;
    double timing_ms = 0;

    [[nodiscard]] bool ok() const;
};

const std::vector<std::string>& analysis_registry();
/// Throws UsageError naming the first unknown analysis and listing the registry.
void validate_analyses(const std::vector<std::string>& names);

/// Parses the algebra (SpecError on bad grammar, ValidationError from the build)
/// and runs each analysis in request order; one failing analysis does not stop
/// the others.
Report run(const AnalysisRequest& request);

Json report_to_json(const Report& report);
std::string emit(const Report& report, OutputFormat format);

const std::vector<std::string>& section_checks();

struct SectionsRequest {
    std::string check;
    std::optional<std::string> k;
    std::optional<std::string> a;
    std::optional<std::size_t> m;
    std::optional<std::string> alpha; ///< comma-separated components
    std::optional<std::string> n;     ///< comma-separated rational coefficients
};

struct SectionsReport {
    SectionsRequest request;
    CheckReport check;
    double timing_ms = 0;
};

SectionsReport run_sections(const SectionsRequest& request);
Json sections_to_json(const SectionsReport& report);
std::string emit(const SectionsReport& report, OutputFormat format);

Json check_to_json(const CheckReport& r);

} // namespace liecent
