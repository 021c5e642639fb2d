#pragma once

// Serialization of analysis reports: JSON (lossless) and plain text.

#include <string>

#include "json.hpp"

#include "qhcurve/quasihom.hpp"

namespace qhcurve {

/// {"precision": P, "terms": [[exponent, "p/q"], ...]}
nlohmann::json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Keys follow the AnalysisReport field names; rationals are "p/q" strings
/// and infinite orders are "inf".
nlohmann::json report_to_json(const AnalysisReport& report);
/// Inverse of report_to_json; throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
AnalysisReport report_from_json(const nlohmann::json& j);

/// Polynomial part of a series without the O-term, e.g. "t^4 + 3/2*t^5".
std::string polynomial_text(const TruncatedSeries& f);

/// One-line verdict, e.g. "NOT quasihomogeneous (trace criterion); valuation
/// criterion inconclusive (6 < 10)".
std::string verdict_line(const AnalysisReport& report);
std::string render_text(const AnalysisReport& report);

}  // namespace qhcurve
