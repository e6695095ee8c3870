#pragma once

#include <cstddef>
#include <vector>

#include "troprank/linalg.hpp"

namespace troprank {

// Chebyshev-like distance between regular vectors: y- x (+) x- y.
Scalar vec_distance(const Vector& x, const Vector& y);

// Chebyshev-like distance between matrices without zero entries:
// tr(B- A) (+) tr(A- B).
Scalar mat_distance(const Matrix& a, const Matrix& b);

enum class ObjectiveKind { Unconstrained, Constrained };

/// Solution set of  minimize x- A x  (optionally subject to C x <= x).
///
/// `generator` is a Kleene star; the regular solutions are exactly the
/// vectors generator (x) u for regular u.
struct SolutionSpace {
  Scalar optimum;
  Matrix generator;
  ObjectiveKind kind = ObjectiveKind::Unconstrained;
  // Constrained problems only: term_maxima[k-1] is the (+) of
  // tr^{1/k}(A C^{i1} ... A C^{ik}) over all admissible exponent tuples of
  // length k. Entries are zero when no tuple of that length exists.
  std::vector<Scalar> term_maxima;
};

/// minimize x- A x over regular x. Optimum is the spectral radius lambda,
/// generator (lambda^{-1} A)*. DomainError when lambda is zero.
SolutionSpace minimize_rayleigh(const Matrix& a);

/// All tuples (i1, ..., ik) of nonnegative integers with
/// 1 <= i1 + ... + ik <= n - k, in lexicographic order. 1 <= k <= n - 1.
std::vector<std::vector<std::size_t>> enumerate_exponents(std::size_t n,
                                                          std::size_t k);

/// minimize x- A x subject to C x <= x.
///
/// theta = lambda (+) (+)_k (+)_{tuples} tr^{1/k}(A C^{i1} ... A C^{ik}),
/// enumerated over the full index set with shared prefix products.
/// Generator (theta^{-1} A (+) C)*. Throws InfeasibleError if Tr(C) > 1.
SolutionSpace minimize_constrained(const Matrix& a, const Matrix& c);

/// A cycle of C whose arc product exceeds one, as 0-based indices, or empty
/// if Tr(C) <= 1.
std::vector<std::size_t> find_violating_cycle(const Matrix& c);

}  // namespace troprank
