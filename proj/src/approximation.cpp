#include "troprank/approximation.hpp"

#include <algorithm>
#include <functional>

#include "troprank/errors.hpp"

namespace troprank {

namespace {

void require_regular(const Vector& x, const char* op) {
  if (!x.is_regular()) {
    throw DomainError(std::string(op) + ": vector " + x.to_string() +
                      " has zero entries");
  }
}

void require_regular(const Matrix& a, const char* op) {
  if (!a.is_regular()) {
    throw DomainError(std::string(op) + ": matrix has zero entries");
  }
}

std::string format_cycle(const std::vector<std::size_t>& cycle) {
  std::string out;
  for (auto v : cycle) out += std::to_string(v + 1) + " -> ";
  return out + std::to_string(cycle.front() + 1);
}

Scalar cycle_product(const Matrix& c, const std::vector<std::size_t>& cycle) {
  Scalar p = Scalar::one(c.field());
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    p *= c(cycle[t], cycle[(t + 1) % cycle.size()]);
  }
  return p;
}

}  // namespace

Scalar vec_distance(const Vector& x, const Vector& y) {
  require_regular(x, "vec_distance");
  require_regular(y, "vec_distance");
  return conj_dot(y, x) + conj_dot(x, y);
}

Scalar mat_distance(const Matrix& a, const Matrix& b) {
  require_regular(a, "mat_distance");
  require_regular(b, "mat_distance");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw UsageError("mat_distance: shape mismatch");
  }
  return trace(conjugate_transpose(b) * a) + trace(conjugate_transpose(a) * b);
}

SolutionSpace minimize_rayleigh(const Matrix& a) {
  if (!a.is_square()) throw UsageError("minimize_rayleigh: matrix must be square");
  const Scalar lambda = spectral_radius(a);
  if (lambda.is_zero()) {
    throw DomainError("minimize_rayleigh: spectral radius is zero");
  }
  return {lambda, kleene_star(inv(lambda) * a), ObjectiveKind::Unconstrained,
          {}};
}

std::vector<std::vector<std::size_t>> enumerate_exponents(std::size_t n,
                                                          std::size_t k) {
  if (k < 1 || n < 2 || k > n - 1) {
    throw UsageError("enumerate_exponents: need 1 <= k <= n-1, got n=" +
                     std::to_string(n) + ", k=" + std::to_string(k));
  }
  const std::size_t cap = n - k;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> tuple(k, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos,
                                                            std::size_t sum) {
    if (pos == k) {
      if (sum >= 1) out.push_back(tuple);
      return;
    }
    for (std::size_t i = 0; sum + i <= cap; ++i) {
      tuple[pos] = i;
      fill(pos + 1, sum + i);
    }
  };
  fill(0, 0);
  return out;
}

std::vector<std::size_t> find_violating_cycle(const Matrix& c) {
  if (!c.is_square()) throw UsageError("constraint matrix must be square");
  const std::size_t n = c.rows();
  const Semifield f = c.field();
  const Scalar one = Scalar::one(f);
  // walk[i][j]: heaviest walk of the current length from i to j;
  // pred[k][i][j]: last-but-one vertex of that walk.
  std::vector<std::vector<Scalar>> walk(n, std::vector<Scalar>(n));
  std::vector<std::vector<std::vector<std::size_t>>> pred(
      n + 1, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      walk[i][j] = c(i, j);
      pred[1][i][j] = i;
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      auto next = walk;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Scalar best = Scalar::zero(f);
          std::size_t arg = 0;
          for (std::size_t l = 0; l < n; ++l) {
            const Scalar cand = walk[i][l] * c(l, j);
            if (less(best, cand)) {
              best = cand;
              arg = l;
            }
          }
          next[i][j] = best;
          pred[k][i][j] = arg;
        }
      }
      walk = std::move(next);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!less(one, walk[i][i]) || equivalent(one, walk[i][i])) continue;
      // Rebuild the closed walk i -> ... -> i of length k.
      std::vector<std::size_t> closed(k + 1);
      closed[k] = i;
      std::size_t cur = i;
      for (std::size_t len = k; len >= 1; --len) {
        cur = pred[len][i][cur];
        closed[len - 1] = cur;
      }
      // Split into simple cycles; at least one has product above one.
      std::vector<std::size_t> best_cycle;
      Scalar best = Scalar::zero(f);
      std::vector<std::size_t> stack;
      for (std::size_t v : closed) {
        auto it = std::find(stack.begin(), stack.end(), v);
        if (it != stack.end()) {
          std::vector<std::size_t> cyc(it, stack.end());
          const Scalar p = cycle_product(c, cyc);
          if (best_cycle.empty() || less(best, p)) {
            best = p;
            best_cycle = cyc;
          }
          stack.erase(it + 1, stack.end());
        } else {
          stack.push_back(v);
        }
      }
      return best_cycle;
    }
  }
  return {};
}

SolutionSpace minimize_constrained(const Matrix& a, const Matrix& c) {
  if (!a.is_square()) throw UsageError("minimize_constrained: A must be square");
  require_same_field(a.field(), c.field(), "minimize_constrained");
  if (c.rows() != a.rows() || c.cols() != a.cols()) {
    throw UsageError("minimize_constrained: C must have the same order as A");
  }
  const Semifield f = a.field();
  const std::size_t n = a.rows();
  const Scalar one = Scalar::one(f);

  const Scalar tr_c = tr_fn(c);
  if (!leq(tr_c, one) && !equivalent(tr_c, one)) {
    auto cycle = find_violating_cycle(c);
    const std::string value =
        cycle.empty() ? tr_c.to_string() : cycle_product(c, cycle).to_string();
    const std::string message =
        "infeasible constraints: Tr(C) = " + tr_c.to_string() + " exceeds one" +
        (cycle.empty() ? std::string()
                       : "; cycle " + format_cycle(cycle) + " has product " + value);
    throw InfeasibleError(message, std::move(cycle), value);
  }

  const Scalar lambda = spectral_radius(a);
  if (lambda.is_zero()) {
    throw DomainError("minimize_constrained: spectral radius of A is zero");
  }

  std::vector<Scalar> term_maxima(n > 1 ? n - 1 : 0, Scalar::zero(f));
  if (n > 1) {
    // blocks[i] = A C^i, i = 0..n-1
    std::vector<Matrix> blocks;
    Matrix c_pow = Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      blocks.push_back(a * c_pow);
      c_pow = c_pow * c;
    }
    // Depth-first over tuples; a node holding j blocks with exponent sum s
    // is a valid tuple of length j when 1 <= s <= n - j.
    std::function<void(const Matrix*, std::size_t, std::size_t)> visit =
        [&](const Matrix* prefix, std::size_t depth, std::size_t sum) {
          const std::size_t next_depth = depth + 1;
          if (next_depth > n - 1) return;
          for (std::size_t i = 0; sum + i <= n - next_depth; ++i) {
            const Matrix product = prefix ? *prefix * blocks[i] : blocks[i];
            const std::size_t next_sum = sum + i;
            if (next_sum >= 1) {
              term_maxima[next_depth - 1] += root(trace(product), next_depth);
            }
            visit(&product, next_depth, next_sum);
          }
        };
    visit(nullptr, 0, 0);
  }

  Scalar theta = lambda;
  for (const auto& t : term_maxima) theta += t;
  Matrix generator = kleene_star(inv(theta) * a + c);
  return {theta, std::move(generator), ObjectiveKind::Constrained,
          std::move(term_maxima)};
}

}  // namespace troprank
