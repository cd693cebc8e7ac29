#pragma once

#include <string>
#include <vector>

#include "qlt/verify.hpp"

namespace qlt {

enum class ReportFormat { text, json };

/// Serializes one report. The JSON schema is stable:
///   {"params": {"q","a","b","c","d","field","basis"},
///    "checks": [{"id","paper_ref","status","detail"}, ...],
///    "summary": {"pass","fail","skipped"}}
/// with field elements rendered as canonical literals ("n" or "n/d" for
/// rationals, the decimal residue for prime fields). The text format is a
/// fixed-width table. Identical reports serialize to identical bytes.
std::string emit_report(const VerificationReport& report, ReportFormat format);

/// Serializes several reports: a JSON array, or text tables separated by a
/// blank line.
std::string emit_reports(const std::vector<VerificationReport>& reports, ReportFormat format);

/// Inverse of emit_report for the JSON format.
VerificationReport parse_report(const std::string& json_text);

} // namespace qlt
