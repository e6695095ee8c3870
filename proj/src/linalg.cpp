#include "troprank/linalg.hpp"

#include <cmath>
#include <limits>

#include "troprank/errors.hpp"

namespace troprank {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw UsageError(std::string(op) + ": matrix must be square, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  require_same_field(a.field(), b.field(), op);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw UsageError(std::string(op) + ": shape mismatch " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

void require_same_dim(const Vector& x, const Vector& y, const char* op) {
  require_same_field(x.field(), y.field(), op);
  if (x.dim() != y.dim()) {
    throw UsageError(std::string(op) + ": dimension mismatch " +
                     std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
  }
}

// Karp's maximum cycle mean over arc weights w (additive, -inf = no arc).
double max_cycle_mean(const std::vector<double>& w, std::size_t n) {
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  // walks[k][v]: heaviest walk with k arcs ending at v, starting anywhere.
  std::vector<std::vector<double>> walks(n + 1, std::vector<double>(n, kNone));
  std::fill(walks[0].begin(), walks[0].end(), 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (walks[k - 1][u] == kNone) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const double arc = w[u * n + v];
        if (arc == kNone) continue;
        walks[k][v] = std::max(walks[k][v], walks[k - 1][u] + arc);
      }
    }
  }
  double best = kNone;
  for (std::size_t v = 0; v < n; ++v) {
    if (walks[n][v] == kNone) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (walks[k][v] == kNone) continue;
      worst = std::min(worst, (walks[n][v] - walks[k][v]) /
                                  static_cast<double>(n - k));
    }
    best = std::max(best, worst);
  }
  return best;
}

Scalar spectral_radius_traces(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix p = a;
  Scalar lambda = trace(p);
  for (std::size_t k = 2; k <= n; ++k) {
    p = p * a;
    lambda += root(trace(p), k);
  }
  return lambda;
}

Scalar spectral_radius_karp(const Matrix& a) {
  const Semifield f = a.field();
  if (f.exact()) {
    throw UsageError("Karp's method is only available for the float backend");
  }
  const std::size_t n = a.rows();
  const bool times = f.kind == SemifieldKind::MaxTimes;
  std::vector<double> w(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = a(i, j).to_double();
      w[i * n + j] = times ? (v == 0.0 ? -std::numeric_limits<double>::infinity()
                                       : std::log(v))
                           : v;
    }
  }
  const double mean = max_cycle_mean(w, n);
  if (mean == -std::numeric_limits<double>::infinity()) return Scalar::zero(f);
  return Scalar::from_double(f, times ? std::exp(mean) : mean);
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j) + b(i, j));
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "mat_mul");
  if (a.cols() != b.rows()) {
    throw UsageError("mat_mul: inner dimensions differ (" +
                     std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero(a.field());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  require_same_field(c.field(), a.field(), "scalar_mul");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, c * a(i, j));
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require_same_field(a.field(), x.field(), "mat_vec");
  if (a.cols() != x.dim()) {
    throw UsageError("mat_vec: dimension mismatch");
  }
  Vector out(a.field(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = Scalar::zero(a.field());
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    out.set(i, std::move(acc));
  }
  return out;
}

Vector operator+(const Vector& x, const Vector& y) {
  require_same_dim(x, y, "vec_add");
  Vector out(x.field(), x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.set(i, x[i] + y[i]);
  return out;
}

Vector operator*(const Scalar& c, const Vector& x) {
  require_same_field(c.field(), x.field(), "scalar_vec");
  Vector out(x.field(), x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.set(i, c * x[i]);
  return out;
}

Matrix power(const Matrix& a, std::size_t k) {
  require_square(a, "power");
  Matrix out = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (k > 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return out;
}

Matrix conjugate_transpose(const Matrix& a) {
  if (a.is_zero()) {
    throw DomainError("conjugate transpose of the zero matrix is undefined");
  }
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) {
      if (!a(j, i).is_zero()) out.set(i, j, inv(a(j, i)));
    }
  }
  return out;
}

Scalar conj_dot(const Vector& x, const Vector& y) {
  require_same_dim(x, y, "conj_dot");
  Scalar acc = Scalar::zero(x.field());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero()) acc += inv(x[i]) * y[i];
  }
  return acc;
}

Matrix outer_conj(const Vector& x, const Vector& y) {
  require_same_field(x.field(), y.field(), "outer_conj");
  Matrix out(x.field(), x.dim(), y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = 0; j < y.dim(); ++j) {
      if (!y[j].is_zero()) out.set(i, j, x[i] * inv(y[j]));
    }
  }
  return out;
}

bool leq(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "leq");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!leq(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

bool leq(const Vector& x, const Vector& y) {
  require_same_dim(x, y, "leq");
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!leq(x[i], y[i])) return false;
  }
  return true;
}

bool equivalent(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "equivalent");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!equivalent(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

bool equivalent(const Vector& x, const Vector& y) {
  require_same_dim(x, y, "equivalent");
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!equivalent(x[i], y[i])) return false;
  }
  return true;
}

Scalar trace(const Matrix& a) {
  require_square(a, "trace");
  Scalar acc = Scalar::zero(a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

Scalar tr_fn(const Matrix& a) {
  require_square(a, "Tr");
  Matrix p = a;
  Scalar acc = trace(p);
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    p = p * a;
    acc += trace(p);
  }
  return acc;
}

Matrix kleene_star(const Matrix& a) {
  require_square(a, "kleene_star");
  const Semifield f = a.field();
  const Scalar tr = tr_fn(a);
  const Scalar one = Scalar::one(f);
  if (!leq(tr, one) && !equivalent(tr, one)) {
    throw DomainError("Kleene star requires Tr(A) <= 1, got Tr(A) = " +
                      tr.to_string());
  }
  const std::size_t n = a.rows();
  Matrix s = Matrix::identity(f, n) + a;
  for (std::size_t reach = 1; reach < n - 1; reach *= 2) s = s * s;
  return s;
}

Scalar spectral_radius(const Matrix& a, SpectralMethod method) {
  require_square(a, "spectral_radius");
  switch (method) {
    case SpectralMethod::TracePowers:
      return spectral_radius_traces(a);
    case SpectralMethod::Karp:
      return spectral_radius_karp(a);
    case SpectralMethod::Auto:
      break;
  }
  if (!a.field().exact() && a.rows() >= 16) return spectral_radius_karp(a);
  return spectral_radius_traces(a);
}

Matrix EigenSpace::generator_matrix() const {
  if (generators.empty()) throw DomainError("eigenspace has no generators");
  return Matrix::from_columns(generators.front().field(),
                              generators.front().dim(), generators);
}

EigenSpace eigenvectors(const Matrix& a) {
  require_square(a, "eigenvectors");
  EigenSpace out{spectral_radius(a), {}, {}, {}};
  if (out.eigenvalue.is_zero()) {
    out.diagnostic = "spectral radius is zero; no eigenvector construction";
    return out;
  }
  const Matrix scaled = inv(out.eigenvalue) * a;
  const Matrix star = kleene_star(scaled);
  const Matrix plus = scaled * star;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Vector col = star.column(j);
    if (equivalent(col, plus.column(j))) {
      out.generators.push_back(col);
      out.columns.push_back(j);
    }
  }
  if (out.generators.empty()) {
    out.diagnostic =
        "no column of A_lambda* coincides with A_lambda A_lambda*";
  } else if (!a.is_regular()) {
    out.diagnostic = "matrix has zero entries; generators computed by the "
                     "column-coincidence rule";
  }
  return out;
}

}  // namespace troprank
