#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troprank/approximation.hpp"

namespace troprank {

/// Reciprocity and transitivity defects of a pairwise comparison matrix.
/// Defects are one (max-times) / zero (max-plus) exactly when the property
/// holds.
struct ConsistencyReport {
  bool is_reciprocal = false;
  // (+)_{i,j} (a_ij a_ji) (+) (a_ij a_ji)^{-1}
  Scalar max_reciprocity_defect;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  bool is_consistent = false;
  // (+)_{i,k,j} of a_ij / (a_ik a_kj) and its inverse
  Scalar max_transitivity_defect;
  // (i, k, j) attaining the transitivity defect.
  std::array<std::size_t, 3> worst_triple{0, 0, 0};
};

ConsistencyReport check_consistency(const Matrix& a);

// B = A (+) A-. Requires A without zero entries.
Matrix symmetrize(const Matrix& a);

enum class NormalizeMode { SumToOne, MaxToOne };

/// SumToOne divides by the ordinary arithmetic sum of the entries (max-times
/// only; exact results require rational entries). MaxToOne scales the
/// largest entry to the semifield one.
Vector normalize(const Vector& x, NormalizeMode mode);

// Alternatives grouped by equal score, best group first.
using Ranking = std::vector<std::vector<std::size_t>>;
Ranking rank(const Vector& scores);

/// One collinearity class of generator columns.
struct Candidate {
  Vector column;  // first generator column of the class, unscaled
  Vector scores;  // MaxToOne-scaled representative
  bool uniform = false;
  std::vector<std::size_t> columns;
  // Sum-to-one weights; absent under max-plus. Float-valued (and
  // sum_to_one_exact == false) when exact entries are irrational.
  std::optional<Vector> sum_to_one;
  bool sum_to_one_exact = false;
  Ranking ranking;
};

/// Partitions the columns of a generator into collinearity classes
/// (y = c x), one MaxToOne-scaled representative per class, in order of
/// first appearance.
std::vector<Candidate> extract_candidates(const Matrix& generator);

enum class RatingMode { Single, Multi, Constrained };

struct RatingProblem {
  Semifield field = Semifield::max_times();
  std::vector<Matrix> matrices;
  std::optional<Matrix> constraints;
  std::vector<std::string> labels;

  std::size_t order() const { return matrices.empty() ? 0 : matrices.front().rows(); }
  // UsageError on inconsistent shapes, fields, labels or combinations.
  void validate() const;
};

struct RatingResult {
  RatingMode mode = RatingMode::Single;
  Scalar minimum;  // mu or theta
  std::vector<Candidate> candidates;
  // One report per input matrix.
  std::vector<ConsistencyReport> diagnostics;
  std::vector<std::string> warnings;
  Matrix combined;  // B
  SolutionSpace solution_space;
};

RatingResult rate_single(const Matrix& a);
RatingResult rate_multi(const std::vector<Matrix>& matrices);
RatingResult rate_constrained(const Matrix& a, const Matrix& c);

// Dispatches on the problem shape: constraints -> constrained, several
// matrices -> multi, otherwise single.
RatingResult rate(const RatingProblem& problem);

std::string to_string(RatingMode mode);

}  // namespace troprank
