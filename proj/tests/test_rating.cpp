#include <doctest.h>

#include "examples.hpp"
#include "oracles.hpp"
#include "troprank/errors.hpp"
#include "troprank/rating.hpp"

using namespace troprank;

namespace {

const Semifield kTimes = Semifield::max_times();
const Semifield kPlus = Semifield::max_plus();
const Semifield kTimesF = Semifield::max_times(Backend::Float);

Scalar t(const char* s) { return Scalar::parse(kTimes, s); }

// The consistent matrix (x_i / x_j) of a positive vector.
Matrix consistent_from(const Vector& x) {
  Matrix m(x.field(), x.dim(), x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = 0; j < x.dim(); ++j) m.set(i, j, x[i] * inv(x[j]));
  }
  return m;
}

bool collinear(const Vector& a, const Vector& b) {
  const Scalar r = b[0] * inv(a[0]);
  return r * a == b;
}

}  // namespace

TEST_CASE("consistency diagnostics") {
  const ConsistencyReport r = check_consistency(examples::reciprocal_a());
  CHECK(r.is_reciprocal);
  CHECK_FALSE(r.is_consistent);
  // Brute-force worst transitivity ratio over all triples.
  const auto q = oracle::to_rationals(examples::reciprocal_a());
  Rational worst(1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j) {
        const Rational v = q[i][j] / (q[i][k] * q[k][j]);
        if (v > worst) worst = v;
        if (1 / v > worst) worst = 1 / v;
      }
  CHECK(r.max_transitivity_defect == Scalar::from_rational(kTimes, worst));
  // a_13 = 2 while a_14 a_43 = 16: the chain through alternative 4 is off by 8.
  CHECK(r.max_transitivity_defect == t("8"));

  const Vector x = Vector::from_strings(kTimes, {"3", "1", "1/2"});
  const ConsistencyReport c = check_consistency(consistent_from(x));
  CHECK(c.is_consistent);
  CHECK(c.max_transitivity_defect == Scalar::one(kTimes));

  const Matrix skew = Matrix::from_strings(kTimes, {{"1", "2"}, {"1", "1"}});
  const ConsistencyReport s = check_consistency(skew);
  CHECK_FALSE(s.is_reciprocal);
  CHECK(s.max_reciprocity_defect == t("2"));
  CHECK_THROWS_AS(check_consistency(examples::cyclic_constraints()), DomainError);
}

TEST_CASE("symmetrization") {
  CHECK(symmetrize(examples::reciprocal_a()) == examples::reciprocal_a());
  CHECK(symmetrize(examples::judge_1()) == examples::judge_1());
  oracle::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = oracle::random_positive(kTimes, 2 + trial % 4, rng);
    const Matrix b = symmetrize(a);
    // B is the same for A and A^-, dominates its own conjugate
    // (b_ij b_ji >= 1) and is a fixed point of symmetrization.
    CHECK(symmetrize(conjugate_transpose(a)) == b);
    CHECK(leq(conjugate_transpose(b), b));
    CHECK(symmetrize(b) == b);
    CHECK(leq(a, b));
  }
}

TEST_CASE("single-matrix rating of the worked example") {
  const RatingResult r = rate_single(examples::reciprocal_a());
  CHECK(r.mode == RatingMode::Single);
  CHECK(r.minimum == t("2"));
  CHECK(r.combined == examples::reciprocal_a());
  CHECK(r.solution_space.generator == examples::b_mu_star());
  REQUIRE(r.candidates.size() == 1);
  const Candidate& c = r.candidates.front();
  CHECK(c.scores == Vector::from_strings(kTimes, {"1", "1/6", "1/4", "1/2"}));
  CHECK(c.columns == std::vector<std::size_t>{0, 1, 2, 3});
  REQUIRE(c.sum_to_one);
  CHECK(c.sum_to_one_exact);
  CHECK(*c.sum_to_one == Vector::from_strings(kTimes, {"12/23", "2/23", "3/23", "6/23"}));
  CHECK(c.ranking == Ranking{{0}, {3}, {2}, {1}});
  CHECK_FALSE(c.uniform);
  CHECK(r.warnings.empty());
}

TEST_CASE("multi-matrix rating of two judges") {
  const RatingResult r = rate_multi({examples::judge_1(), examples::judge_2()});
  CHECK(r.mode == RatingMode::Multi);
  CHECK(r.combined == examples::judges_combined());
  // The combined matrix differs from the single-matrix example in four
  // entries, yet has the same minimum and the same candidate.
  std::size_t differing = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!(r.combined(i, j) == examples::reciprocal_a()(i, j))) ++differing;
  CHECK(differing == 4);
  CHECK(r.minimum == t("2"));
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].scores ==
        Vector::from_strings(kTimes, {"1", "1/6", "1/4", "1/2"}));
  CHECK(r.solution_space.generator == examples::b_mu_star());
}

TEST_CASE("multi-matrix degenerate cases") {
  oracle::Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Matrix a = oracle::random_positive(kTimes, n, rng);
    const Matrix b = oracle::random_positive(kTimes, n, rng);
    const RatingResult single = rate_single(a);
    const RatingResult one = rate_multi({a});
    const RatingResult twice = rate_multi({a, a});
    CHECK(one.minimum == single.minimum);
    CHECK(twice.minimum == single.minimum);
    CHECK(twice.solution_space.generator == single.solution_space.generator);
    // Adding a judge never lowers the minimum.
    CHECK(leq(single.minimum, rate_multi({a, b}).minimum));
  }
  CHECK_THROWS_AS(rate_multi({examples::reciprocal_a(), Matrix::identity(kTimes, 3)}),
                  UsageError);
  CHECK_THROWS_AS(rate_multi({}), UsageError);
}

TEST_CASE("constrained rating of the worked example") {
  const RatingResult r =
      rate_constrained(examples::reciprocal_a(), examples::cyclic_constraints());
  CHECK(r.mode == RatingMode::Constrained);
  CHECK(r.minimum == t("4"));
  CHECK(r.solution_space.generator == examples::constrained_star());
  REQUIRE(r.candidates.size() == 2);
  CHECK(r.candidates[0].scores ==
        Vector::from_strings(kTimes, {"1", "1/8", "1/8", "1/8"}));
  CHECK_FALSE(r.candidates[0].uniform);
  CHECK(r.candidates[0].ranking == Ranking{{0}, {1, 2, 3}});
  CHECK(r.candidates[1].uniform);
  CHECK(r.candidates[1].scores == Vector::from_strings(kTimes, {"1", "1", "1", "1"}));
  for (const auto& c : r.candidates) {
    CHECK(c.scores[1] == c.scores[2]);
    CHECK(c.scores[2] == c.scores[3]);
    CHECK(oracle::satisfies(examples::cyclic_constraints(), c.scores));
  }
}

TEST_CASE("zero constraints match the unconstrained rating") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Matrix a = oracle::random_positive(kTimes, n, rng);
    const RatingResult u = rate_single(a);
    const RatingResult c = rate_constrained(a, Matrix(kTimes, n, n));
    CHECK(c.minimum == u.minimum);
    REQUIRE(c.candidates.size() == u.candidates.size());
    for (std::size_t k = 0; k < c.candidates.size(); ++k) {
      CHECK(c.candidates[k].scores == u.candidates[k].scores);
    }
  }
}

TEST_CASE("rating properties on random instances") {
  oracle::Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    // A consistent matrix is recovered exactly with minimum one.
    const Vector x = oracle::random_regular(kTimes, n, rng);
    const RatingResult rc = rate_single(consistent_from(x));
    CHECK(rc.minimum == Scalar::one(kTimes));
    REQUIRE(rc.candidates.size() == 1);
    CHECK(collinear(rc.candidates[0].scores, x));

    // Scaling the matrix scales the minimum, not the candidates.
    const Matrix a = oracle::random_positive(kTimes, n, rng);
    const RatingResult r = rate_single(a);
    const Scalar s = Scalar::from_rational(kTimes, oracle::random_ratio(rng));
    const RatingResult scaled = rate_single(s * a);
    const Scalar k = s + inv(s);
    CHECK(leq(scaled.minimum, k * r.minimum));

    // Every candidate attains the minimum and satisfies random constraints.
    const Matrix c = oracle::random_dyadic_constraints(kTimes, n, rng);
    const RatingResult con = rate_constrained(a, c);
    CHECK(leq(r.minimum, con.minimum));
    for (const auto& cand : con.candidates) {
      CHECK(oracle::satisfies(c, cand.scores));
      CHECK(oracle::objective(con.combined, cand.scores) == con.minimum);
    }
  }
}

TEST_CASE("normalization") {
  const Vector x = Vector::from_strings(kTimes, {"2", "1/3", "1/2", "1"});
  CHECK(normalize(x, NormalizeMode::MaxToOne) ==
        Vector::from_strings(kTimes, {"1", "1/6", "1/4", "1/2"}));
  CHECK(normalize(x, NormalizeMode::SumToOne) ==
        Vector::from_strings(kTimes, {"12/23", "2/23", "3/23", "6/23"}));
  const Vector p = Vector::from_strings(kPlus, {"1", "3", "-2"});
  CHECK(normalize(p, NormalizeMode::MaxToOne) == Vector::from_strings(kPlus, {"-2", "0", "-5"}));
  CHECK_THROWS_AS(normalize(p, NormalizeMode::SumToOne), UsageError);
  CHECK_THROWS_AS(normalize(Vector::from_strings(kTimes, {"1", "0"}), NormalizeMode::MaxToOne),
                  DomainError);
  const Vector f = Vector::from_strings(kTimesF, {"1", "1", "2"});
  const Vector nf = normalize(f, NormalizeMode::SumToOne);
  CHECK(nf[2].to_double() == doctest::Approx(0.5));
}

TEST_CASE("ranking groups ties") {
  CHECK(rank(Vector::from_strings(kTimes, {"1", "1/8", "1/8", "1/8"})) ==
        Ranking{{0}, {1, 2, 3}});
  CHECK(rank(Vector::from_strings(kTimes, {"1/2", "1", "1/2"})) == Ranking{{1}, {0, 2}});
}

TEST_CASE("candidate extraction merges collinear columns") {
  const auto one = extract_candidates(examples::b_mu_star());
  CHECK(one.size() == 1);
  const auto two = extract_candidates(examples::constrained_star());
  REQUIRE(two.size() == 2);
  CHECK(two[1].columns == std::vector<std::size_t>{1, 2, 3});
  CHECK(extract_candidates(Matrix::identity(kTimes, 2)).size() == 2);
}

TEST_CASE("problem validation") {
  RatingProblem p;
  p.matrices = {examples::reciprocal_a(), examples::judge_2()};
  p.constraints = examples::cyclic_constraints();
  CHECK_THROWS_AS(p.validate(), UsageError);
  p.constraints.reset();
  p.labels = {"a", "b"};
  CHECK_THROWS_AS(p.validate(), UsageError);
  p.labels = {"a", "b", "c", "d"};
  CHECK_NOTHROW(p.validate());
  CHECK(rate(p).mode == RatingMode::Multi);
  const Matrix one = Matrix::from_strings(kTimes, {{"1"}});
  const RatingResult r = rate_single(one);
  CHECK(r.minimum == Scalar::one(kTimes));
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].scores == Vector::from_strings(kTimes, {"1"}));
}

TEST_CASE("non-reciprocal input is corrected with a warning") {
  const Matrix skew = Matrix::from_strings(kTimes, {{"1", "2"}, {"1", "1"}});
  const RatingResult r = rate_single(skew);
  // b_21 = max(a_21, 1 / a_12) = 1.
  CHECK(r.combined == skew);
  CHECK(r.warnings.size() == 1);
  CHECK(r.minimum == t("2^(1/2)"));
}
