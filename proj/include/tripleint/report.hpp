#ifndef TRIPLEINT_REPORT_HPP
#define TRIPLEINT_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tripleint {

/// One verified identity instance. abs_error/rel_error empty means the
/// comparison was exact; serialization renders them as the string "exact".
struct VerificationReport {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs;
    std::string rhs;
    std::optional<double> abs_error;
    std::optional<double> rel_error;
    std::optional<double> tail_bound;
    bool pass = false;
    long long runtime_ms = 0;
};

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& name);

/// Canonical full-precision rendering of a double ("%.17g").
std::string render_double(double v);

/// Serialize reports with canonical field ordering. runtime_ms is rendered
/// as 0 unless include_timings is set, so that two runs with the same
/// configuration produce byte-identical output.
void emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                 std::ostream& out, bool include_timings = false);

} // namespace tripleint

#endif
