#include "troprank/cli.hpp"

#include <fstream>
#include <sstream>

#include "troprank/errors.hpp"
#include "troprank/io.hpp"

namespace troprank::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix load_matrix(const std::string& path, Semifield field) {
  try {
    return io::parse_matrix(read_file(path), field);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string join(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out;
}

// Scores shown for a candidate under the requested normalization.
Vector shown_scores(const Candidate& c, NormalizeOutput normalize) {
  switch (normalize) {
    case NormalizeOutput::None:
      return c.column;
    case NormalizeOutput::Max:
      return c.scores;
    case NormalizeOutput::Sum:
      if (!c.sum_to_one) {
        throw UsageError(
            "sum-to-one normalization is undefined on the additive scale");
      }
      return *c.sum_to_one;
  }
  return c.column;
}

std::string label(const std::vector<std::string>& labels, std::size_t i) {
  return labels.at(i);
}

}  // namespace

NormalizeOutput parse_normalize(const std::string& text) {
  if (text == "none") return NormalizeOutput::None;
  if (text == "sum") return NormalizeOutput::Sum;
  if (text == "max") return NormalizeOutput::Max;
  throw UsageError("unknown normalization '" + text + "' (expected sum|max|none)");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw UsageError("unknown format '" + text + "' (expected text|json|csv)");
}

RatingProblem load_problem(const RunConfig& config) {
  if (config.inputs.empty()) throw UsageError("at least one input matrix is required");
  if (config.constraints_path && config.inputs.size() != 1) {
    throw UsageError(
        "--constraints combines with exactly one input matrix; constrained "
        "problems over several comparison matrices are not defined");
  }
  RatingProblem problem;
  problem.field = Semifield{config.scale, config.backend};
  for (const auto& path : config.inputs) {
    problem.matrices.push_back(load_matrix(path, problem.field));
  }
  if (config.constraints_path) {
    problem.constraints = load_matrix(*config.constraints_path, problem.field);
  }
  problem.labels = config.labels;
  problem.validate();
  return problem;
}

std::string format_text(const RatingResult& result, const RatingProblem& problem,
                        NormalizeOutput normalize) {
  const auto labels = io::effective_labels(problem);
  std::ostringstream os;
  os << "mode: " << to_string(result.mode) << "\n";
  os << "scale: " << problem.field.name() << " (" << problem.field.backend_name()
     << ")\n";
  os << "minimum: " << result.minimum.to_string() << "\n";
  for (std::size_t k = 0; k < result.candidates.size(); ++k) {
    const Candidate& c = result.candidates[k];
    os << "candidate " << k + 1;
    if (c.uniform) os << " [uniform, uninformative]";
    if (normalize == NormalizeOutput::Sum && !c.sum_to_one_exact) {
      os << " [approximate weights]";
    }
    os << ": " << join(shown_scores(c, normalize)) << "\n";
    os << "  ranking: " << io::format_ranking(c.ranking, labels) << "\n";
  }
  os << "consistency:\n";
  for (std::size_t m = 0; m < result.diagnostics.size(); ++m) {
    const ConsistencyReport& d = result.diagnostics[m];
    os << "  matrix " << m + 1 << ": "
       << (d.is_reciprocal ? "reciprocal" : "not reciprocal") << " (defect "
       << d.max_reciprocity_defect.to_string() << "), "
       << (d.is_consistent ? "consistent" : "inconsistent")
       << " (transitivity defect " << d.max_transitivity_defect.to_string();
    if (!d.is_consistent) {
      os << " at " << label(labels, d.worst_triple[0]) << ", "
         << label(labels, d.worst_triple[1]) << ", "
         << label(labels, d.worst_triple[2]);
    }
    os << ")\n";
  }
  return os.str();
}

std::string format_csv(const RatingResult& result, const RatingProblem& problem,
                       NormalizeOutput normalize) {
  const auto labels = io::effective_labels(problem);
  std::ostringstream os;
  os << "minimum," << result.minimum.to_string() << "\n";
  os << "candidate,alternative,score,rank,uniform\n";
  for (std::size_t k = 0; k < result.candidates.size(); ++k) {
    const Candidate& c = result.candidates[k];
    const Vector shown = shown_scores(c, normalize);
    std::vector<std::size_t> position(shown.dim(), 0);
    for (std::size_t g = 0; g < c.ranking.size(); ++g) {
      for (auto idx : c.ranking[g]) position[idx] = g + 1;
    }
    for (std::size_t i = 0; i < shown.dim(); ++i) {
      os << k + 1 << "," << labels[i] << "," << shown[i].to_string() << ","
         << position[i] << "," << (c.uniform ? "yes" : "no") << "\n";
    }
  }
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const RatingProblem problem = load_problem(config);
    const RatingResult result = rate(problem);
    switch (config.format) {
      case OutputFormat::Text:
        out << format_text(result, problem, config.normalize);
        break;
      case OutputFormat::Csv:
        out << format_csv(result, problem, config.normalize);
        break;
      case OutputFormat::Json:
        if (config.normalize == NormalizeOutput::Sum &&
            problem.field.kind == SemifieldKind::MaxPlus) {
          throw UsageError(
              "sum-to-one normalization is undefined on the additive scale");
        }
        out << io::result_to_json(result, problem).dump(2) << "\n";
        break;
    }
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    return 0;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace troprank::cli
