#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "troprank/rating.hpp"

namespace troprank::cli {

enum class NormalizeOutput { None, Sum, Max };
enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  SemifieldKind scale = SemifieldKind::MaxTimes;
  Backend backend = Backend::Exact;
  std::vector<std::string> inputs;
  std::optional<std::string> constraints_path;
  std::vector<std::string> labels;
  NormalizeOutput normalize = NormalizeOutput::None;
  OutputFormat format = OutputFormat::Text;
};

NormalizeOutput parse_normalize(const std::string& text);
OutputFormat parse_format(const std::string& text);

// Reads the inputs named in `config` into a validated problem.
RatingProblem load_problem(const RunConfig& config);

/// Rates the configured problem: one input is a single-matrix problem,
/// several inputs the multi-matrix one, constraints need exactly one input.
/// Report goes to `out`, diagnostics to `err`. Exit code 0 on success, 1 on
/// domain errors (including infeasible constraints), 2 on usage or parse
/// errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string format_text(const RatingResult& result, const RatingProblem& problem,
                        NormalizeOutput normalize);
std::string format_csv(const RatingResult& result, const RatingProblem& problem,
                       NormalizeOutput normalize);

}  // namespace troprank::cli
