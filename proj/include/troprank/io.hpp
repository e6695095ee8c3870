#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "troprank/rating.hpp"

namespace troprank::io {

using Json = nlohmann::json;

/// Parses a matrix from CSV (one row per line, comma-separated entries,
/// blank lines and '#' comments skipped) or from JSON
/// {"tag": ..., "rows": n, "cols": m, "entries": [[...], ...]}. The format is
/// detected from the first non-blank character. A JSON tag must agree with
/// `field`. Throws ParseError (with line number for CSV) or UsageError.
Matrix parse_matrix(std::string_view text, Semifield field);

std::string matrix_to_csv(const Matrix& m);

// Exact scalars are strings ("1/6", "12^(1/2)"); float scalars are numbers,
// except infinities, which are the strings "-inf"/"inf".
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Semifield field);

Json matrix_to_json(const Matrix& m);
// Accepts the object form above or a bare array of rows.
Matrix matrix_from_json(const Json& j, Semifield field);

Json vector_to_json(const Vector& v);

/// Problem JSON:
///   {"scale": "max-times"|"max-plus", "backend": "exact"|"float" (optional),
///    "labels": [...], "matrices": [...], "constraints": {...}|null}
RatingProblem problem_from_json(const Json& j);
Json problem_to_json(const RatingProblem& p);

// Labels default to alt1..altn when the problem has none.
std::vector<std::string> effective_labels(const RatingProblem& p);

Json consistency_to_json(const ConsistencyReport& r);

/// Result JSON mirroring RatingResult. Indices are 1-based.
Json result_to_json(const RatingResult& r, const RatingProblem& p);

std::string format_ranking(const Ranking& ranking,
                           const std::vector<std::string>& labels);

}  // namespace troprank::io
