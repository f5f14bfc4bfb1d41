#ifndef TANNER_ANALYZE_HPP
#define TANNER_ANALYZE_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "tanner/matrix.hpp"

namespace tanner {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

enum class InputFormat { alist, expmat };
enum class MethodChoice { automatic, recursive, ek, lambda, all };

InputFormat parse_format_tag(const std::string& tag);
MethodChoice parse_method_tag(const std::string& tag);

struct AnalysisRequest {
    std::string text;  // raw file contents
    InputFormat format = InputFormat::expmat;
    MethodChoice method = MethodChoice::automatic;
    int kmax = 7;
    bool verify_dfs = false;
    bool verify_edge = false;
    bool verify_theorem2 = false;
    bool json_output = false;
    bool allow_disconnected = false;
    bool paranoid = false;
};

struct AnalysisResult {
    ojson report;
    std::string human;
    int exit_code = 0;  // 0 ok, 1 input error, 2 method disagreement
};

/// Full pipeline: parse, validate, traces, counts, certificate,
/// optional verification legs, report assembly.
AnalysisResult run_analyze(const AnalysisRequest& req);

/// Root-of-unity block diagnostics for a QC input: per-j characteristic
/// polynomials (snapped where integral) and numeric eigenvalues, with
/// equal/conjugate blocks grouped.
AnalysisResult run_spectrum(const std::string& expmat_text, bool json_output);

}  // namespace tanner

#endif
