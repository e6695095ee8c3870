#include "troprank/rating.hpp"

#include <algorithm>
#include <numeric>

#include "troprank/errors.hpp"

namespace troprank {

namespace {

void require_positive(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw UsageError(std::string(op) + ": comparison matrix must be square");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) {
        throw DomainError(std::string(op) + ": zero entry at (" +
                          std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                          ")");
      }
    }
  }
}

Scalar two_sided(const Scalar& r) { return r + inv(r); }

void attach_candidates(RatingResult& result) {
  result.candidates = extract_candidates(result.solution_space.generator);
}

void attach_diagnostics(RatingResult& result,
                        const std::vector<Matrix>& matrices) {
  for (std::size_t m = 0; m < matrices.size(); ++m) {
    result.diagnostics.push_back(check_consistency(matrices[m]));
    if (!result.diagnostics.back().is_reciprocal) {
      result.warnings.push_back(
          "matrix " + std::to_string(m + 1) +
          " is not reciprocal; it is corrected through B = A (+) A-");
    }
  }
}

}  // namespace

ConsistencyReport check_consistency(const Matrix& a) {
  require_positive(a, "check_consistency");
  const Semifield f = a.field();
  const Scalar one = Scalar::one(f);
  const std::size_t n = a.rows();
  ConsistencyReport report;
  report.max_reciprocity_defect = one;
  report.max_transitivity_defect = one;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar d = two_sided(a(i, j) * a(j, i));
      if (less(report.max_reciprocity_defect, d)) {
        report.max_reciprocity_defect = d;
        report.worst_pair = {i, j};
      }
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar t = two_sided(div(a(i, j), a(i, k) * a(k, j)));
        if (less(report.max_transitivity_defect, t)) {
          report.max_transitivity_defect = t;
          report.worst_triple = {i, k, j};
        }
      }
    }
  }
  report.is_reciprocal = equivalent(report.max_reciprocity_defect, one);
  report.is_consistent =
      report.is_reciprocal && equivalent(report.max_transitivity_defect, one);
  return report;
}

Matrix symmetrize(const Matrix& a) {
  require_positive(a, "symmetrize");
  return a + conjugate_transpose(a);
}

Vector normalize(const Vector& x, NormalizeMode mode) {
  if (!x.is_regular()) {
    throw DomainError("normalize: vector " + x.to_string() +
                      " has zero entries");
  }
  const Semifield f = x.field();
  if (mode == NormalizeMode::MaxToOne) {
    Scalar top = x[0];
    for (const auto& e : x.entries()) top += e;
    return inv(top) * x;
  }
  if (f.kind == SemifieldKind::MaxPlus) {
    throw UsageError(
        "sum-to-one normalization is undefined on the additive scale");
  }
  std::vector<Scalar> out;
  out.reserve(x.dim());
  if (f.exact()) {
    Rational total(0);
    for (const auto& e : x.entries()) total += e.to_rational();
    for (const auto& e : x.entries()) {
      out.push_back(Scalar::from_rational(f, Rational(e.to_rational() / total)));
    }
  } else {
    double total = 0.0;
    for (const auto& e : x.entries()) total += e.to_double();
    for (const auto& e : x.entries()) {
      out.push_back(Scalar::from_double(f, e.to_double() / total));
    }
  }
  return Vector(f, std::move(out));
}

Ranking rank(const Vector& scores) {
  std::vector<std::size_t> order(scores.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return less(scores[b], scores[a]);
                   });
  Ranking out;
  for (std::size_t idx : order) {
    if (!out.empty() && equivalent(scores[out.back().front()], scores[idx])) {
      out.back().push_back(idx);
    } else {
      out.push_back({idx});
    }
  }
  return out;
}

std::vector<Candidate> extract_candidates(const Matrix& generator) {
  std::vector<Candidate> out;
  const Semifield f = generator.field();
  for (std::size_t j = 0; j < generator.cols(); ++j) {
    const Vector col = generator.column(j);
    bool any_nonzero = false;
    for (const auto& e : col.entries()) any_nonzero = any_nonzero || !e.is_zero();
    if (!any_nonzero) continue;
    Scalar top = Scalar::zero(f);
    for (const auto& e : col.entries()) top += e;
    const Vector scaled = inv(top) * col;
    auto same = std::find_if(out.begin(), out.end(), [&](const Candidate& c) {
      return equivalent(c.scores, scaled);
    });
    if (same != out.end()) {
      same->columns.push_back(j);
      continue;
    }
    Candidate cand;
    cand.column = col;
    cand.scores = scaled;
    cand.columns = {j};
    cand.uniform = std::all_of(
        scaled.entries().begin(), scaled.entries().end(),
        [&](const Scalar& s) { return equivalent(s, scaled[0]); });
    cand.ranking = rank(scaled);
    if (f.kind == SemifieldKind::MaxTimes && scaled.is_regular()) {
      const bool rational =
          std::all_of(scaled.entries().begin(), scaled.entries().end(),
                      [](const Scalar& s) { return s.is_rational(); });
      if (rational) {
        cand.sum_to_one = normalize(scaled, NormalizeMode::SumToOne);
        cand.sum_to_one_exact = f.exact();
      } else {
        std::vector<Scalar> approx;
        for (const auto& e : scaled.entries()) {
          approx.push_back(Scalar::from_double(
              Semifield::max_times(Backend::Float), e.to_double()));
        }
        cand.sum_to_one = normalize(
            Vector(Semifield::max_times(Backend::Float), std::move(approx)),
            NormalizeMode::SumToOne);
        cand.sum_to_one_exact = false;
      }
    }
    out.push_back(std::move(cand));
  }
  return out;
}

void RatingProblem::validate() const {
  if (matrices.empty()) throw UsageError("rating problem needs a matrix");
  const std::size_t n = matrices.front().rows();
  for (std::size_t m = 0; m < matrices.size(); ++m) {
    const Matrix& a = matrices[m];
    require_same_field(field, a.field(), "rating problem");
    if (!a.is_square() || a.rows() != n) {
      throw UsageError("matrix " + std::to_string(m + 1) + " must be " +
                       std::to_string(n) + "x" + std::to_string(n));
    }
  }
  if (constraints) {
    require_same_field(field, constraints->field(), "rating problem");
    if (constraints->rows() != n || constraints->cols() != n) {
      throw UsageError("constraint matrix must be " + std::to_string(n) + "x" +
                       std::to_string(n));
    }
    if (matrices.size() != 1) {
      throw UsageError(
          "constraints combine with exactly one comparison matrix; "
          "constrained multi-matrix problems are not defined");
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw UsageError("expected " + std::to_string(n) + " labels, got " +
                     std::to_string(labels.size()));
  }
}

RatingResult rate_single(const Matrix& a) {
  RatingResult result;
  result.mode = RatingMode::Single;
  result.combined = symmetrize(a);
  attach_diagnostics(result, {a});
  result.solution_space = minimize_rayleigh(result.combined);
  result.minimum = result.solution_space.optimum;
  attach_candidates(result);
  return result;
}

RatingResult rate_multi(const std::vector<Matrix>& matrices) {
  if (matrices.empty()) throw UsageError("rate_multi: no matrices");
  const std::size_t n = matrices.front().rows();
  for (const auto& a : matrices) {
    require_same_field(matrices.front().field(), a.field(), "rate_multi");
    if (!a.is_square() || a.rows() != n) {
      throw UsageError("rate_multi: all matrices must have order " +
                       std::to_string(n));
    }
  }
  RatingResult result;
  result.mode = RatingMode::Multi;
  result.combined = symmetrize(matrices.front());
  for (std::size_t m = 1; m < matrices.size(); ++m) {
    result.combined = result.combined + symmetrize(matrices[m]);
  }
  attach_diagnostics(result, matrices);
  result.solution_space = minimize_rayleigh(result.combined);
  result.minimum = result.solution_space.optimum;
  attach_candidates(result);
  return result;
}

RatingResult rate_constrained(const Matrix& a, const Matrix& c) {
  RatingResult result;
  result.mode = RatingMode::Constrained;
  result.combined = symmetrize(a);
  attach_diagnostics(result, {a});
  result.solution_space = minimize_constrained(result.combined, c);
  result.minimum = result.solution_space.optimum;
  attach_candidates(result);
  return result;
}

RatingResult rate(const RatingProblem& problem) {
  problem.validate();
  if (problem.constraints) {
    return rate_constrained(problem.matrices.front(), *problem.constraints);
  }
  if (problem.matrices.size() > 1) return rate_multi(problem.matrices);
  return rate_single(problem.matrices.front());
}

std::string to_string(RatingMode mode) {
  switch (mode) {
    case RatingMode::Single:
      return "single";
    case RatingMode::Multi:
      return "multi";
    case RatingMode::Constrained:
      return "constrained";
  }
  return "single";
}

}  // namespace troprank
