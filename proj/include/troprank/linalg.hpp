#pragma once

#include <cstddef>
#include <string>

#include "troprank/matrix.hpp"

namespace troprank {

// Entry-wise (+) (max).
Matrix operator+(const Matrix& a, const Matrix& b);
// Tropical product: C_ij = (+)_k a_ik (x) b_kj.
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);
Vector operator+(const Vector& x, const Vector& y);
Vector operator*(const Scalar& c, const Vector& x);

inline Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
inline Matrix scalar_mul(const Scalar& c, const Matrix& a) { return c * a; }

// A^k for k >= 0 (A^0 = I).
Matrix power(const Matrix& a, std::size_t k);

/// Multiplicative conjugate transpose: (A-)_ij = a_ji^{-1}, zeros stay zero.
/// Throws DomainError for the zero matrix.
Matrix conjugate_transpose(const Matrix& a);

// x- y for column vectors x, y (x- is the conjugate row vector).
Scalar conj_dot(const Vector& x, const Vector& y);
// x y-, the rank-one matrix with entries x_i y_j^{-1} (zeros stay zero).
Matrix outer_conj(const Vector& x, const Vector& y);

// Entry-wise partial order.
bool leq(const Matrix& a, const Matrix& b);
bool leq(const Vector& x, const Vector& y);
// Entry-wise `equivalent` (exact equality, or 1e-9 relative for floats).
bool equivalent(const Matrix& a, const Matrix& b);
bool equivalent(const Vector& x, const Vector& y);

// tr A = a_11 (+) ... (+) a_nn.
Scalar trace(const Matrix& a);
// Tr(A) = tr A (+) tr A^2 (+) ... (+) tr A^n.
Scalar tr_fn(const Matrix& a);

/// Kleene star A* = I (+) A (+) ... (+) A^{n-1}, computed by repeated
/// squaring of I (+) A. Requires Tr(A) <= 1 (float backend: up to 1e-9
/// relative slack); otherwise throws DomainError naming the value of Tr(A).
Matrix kleene_star(const Matrix& a);

enum class SpectralMethod {
  Auto,         // trace powers, except Karp for float matrices of order >= 16
  TracePowers,  // tr A (+) tr^{1/2}(A^2) (+) ... (+) tr^{1/n}(A^n)
  Karp,         // maximum cycle mean dynamic program, float backend only
};

/// Spectral radius, i.e. the maximum geometric cycle mean of A.
Scalar spectral_radius(const Matrix& a,
                       SpectralMethod method = SpectralMethod::Auto);

struct EigenSpace {
  Scalar eigenvalue;
  // Columns of A_lambda* that coincide with the same columns of
  // A_lambda (x) A_lambda*. Empty (cols() == 0 via `empty()`) when none do.
  std::vector<Vector> generators;
  // Indices of the retained columns.
  std::vector<std::size_t> columns;
  std::string diagnostic;

  bool empty() const noexcept { return generators.empty(); }
  Matrix generator_matrix() const;
};

/// Eigenvectors for the spectral radius: every x = A_lambda^+ u satisfies
/// A x = lambda x.
EigenSpace eigenvectors(const Matrix& a);

}  // namespace troprank
