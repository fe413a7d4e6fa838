#pragma once

#include "lagherm/types.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lagherm {

enum class RowKind {
    Numeric,   // pass iff rel_err <= tol
    Exact,     // pass iff the exact values are equal
    Predicate, // pass decided by the suite (monotonicity and similar)
};

struct IdentityReport {
    std::string suite;
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> params;
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    RowKind kind = RowKind::Numeric;
    bool pass = false;
    double elapsed = 0.0; // seconds; never part of the report body
};

// "name=value;name=value", values printed with %.17g.
std::string join_params(const std::vector<std::pair<std::string, std::string>>& params);
std::string format_real(double v);
std::string format_complex(Complex v);

struct SuiteSummary {
    std::string suite;
    std::size_t rows = 0;
    std::size_t failures = 0;
    double max_rel_err = 0.0;
    double elapsed = 0.0;
};

struct ReportSummary {
    std::vector<SuiteSummary> suites; // in first-appearance order
    std::size_t rows = 0;
    std::size_t failures = 0;
    double max_rel_err = 0.0;
};

ReportSummary summarize(const std::vector<IdentityReport>& rows);

enum class ReportFormat { Text, JSON, CSV };

// Body output. Timing appears only when with_timing is set.
void write_report(std::ostream& out, const std::vector<IdentityReport>& rows, ReportFormat format,
                  bool with_timing = false);

// Reads back the JSON form. Throws std::runtime_error on malformed input.
std::vector<IdentityReport> load_report_json(std::istream& in);

} // namespace lagherm
