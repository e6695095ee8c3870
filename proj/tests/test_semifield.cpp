#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "troprank/errors.hpp"
#include "troprank/semifield.hpp"

using namespace troprank;

namespace {

const Semifield kTimes = Semifield::max_times();
const Semifield kPlus = Semifield::max_plus();
const Semifield kTimesF = Semifield::max_times(Backend::Float);
const Semifield kPlusF = Semifield::max_plus(Backend::Float);

Scalar t(const char* s) { return Scalar::parse(kTimes, s); }
Scalar p(const char* s) { return Scalar::parse(kPlus, s); }

// A random exact max-times value: a ratio, occasionally a root of one.
Scalar random_value(oracle::Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  const int k = kind(rng);
  if (k == 0) return Scalar::zero(kTimes);
  const Rational q = oracle::random_ratio(rng);
  if (k == 1) return Scalar::from_rooted(kTimes, RootedRational(q, 2));
  if (k == 2) return Scalar::from_rooted(kTimes, RootedRational(q, 3));
  return Scalar::from_rational(kTimes, q);
}

}  // namespace

TEST_CASE("addition is the maximum") {
  CHECK(t("3") + t("3") == t("3"));
  CHECK(t("12^(1/2)") + t("4") == t("4"));
  CHECK(t("1/2") + t("1/3") == t("1/2"));
  CHECK(p("-inf") + p("5") == p("5"));
  CHECK(p("-2") + p("-3") == p("-2"));
}

TEST_CASE("multiplication is times or plus") {
  CHECK(t("3") * t("1/3") == Scalar::one(kTimes));
  CHECK(t("12^(1/2)") * t("12^(1/2)") == t("12"));
  CHECK(t("2^(1/2)") * t("3^(1/2)") == t("6^(1/2)"));
  CHECK(p("2") * p("3") == p("5"));
  CHECK(p("-inf") * p("3") == Scalar::zero(kPlus));
  CHECK(t("0") * t("12^(1/2)") == Scalar::zero(kTimes));
}

TEST_CASE("inversion") {
  CHECK(inv(t("4")) == t("1/4"));
  CHECK(inv(p("7")) == p("-7"));
  CHECK(inv(t("12^(1/2)")) == t("(1/12)^(1/2)"));
  CHECK(inv(t("12^(1/2)")).to_string() == "(1/12)^(1/2)");
  CHECK_THROWS_AS(inv(Scalar::zero(kTimes)), DomainError);
  CHECK_THROWS_AS(inv(Scalar::zero(kPlus)), DomainError);
}

TEST_CASE("rational powers and roots") {
  CHECK(pow(t("8"), Rational(1, 3)) == t("2"));
  const Scalar r = pow(t("12"), Rational(1, 3));
  CHECK(r.rooted().base() == Rational(12));
  CHECK(r.rooted().root() == 3);
  CHECK(r.to_string() == "12^(1/3)");
  CHECK(pow(p("6"), Rational(1, 2)) == p("3"));
  CHECK(root(t("16"), 4) == t("2"));
  CHECK(pow(t("4"), Rational(-3, 2)) == t("1/8"));
  CHECK(pow(Scalar::zero(kTimes), Rational(2)) == Scalar::zero(kTimes));
  CHECK_THROWS_AS(pow(Scalar::zero(kTimes), Rational(-1)), DomainError);
  CHECK_THROWS_AS(pow(Scalar::zero(kTimes), Rational(0)), DomainError);
}

TEST_CASE("canonical rooted form") {
  CHECK(t("4^(1/2)").to_string() == "2");
  CHECK(t("64^(1/6)").to_string() == "2");
  CHECK(t("8^(1/6)").to_string() == "2^(1/2)");
  CHECK(t("(1/4)^(1/4)").to_string() == "(1/2)^(1/2)");
  CHECK(t("4^(1/2)").is_rational());
  CHECK_FALSE(t("2^(1/2)").is_rational());
  CHECK_THROWS_AS(t("2^(1/2)").to_rational(), DomainError);
}

TEST_CASE("order agrees with big-integer cross exponentiation") {
  // 12^(1/2) <= 4 because 12 <= 16.
  CHECK(leq(t("12^(1/2)"), t("4")));
  CHECK_FALSE(leq(t("4"), t("12^(1/2)")));
  CHECK(less(t("12^(1/3)"), t("12^(1/2)")));
  CHECK(leq(p("-inf"), p("-1000")));
  oracle::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = oracle::random_ratio(rng), b = oracle::random_ratio(rng);
    const unsigned long ka = 1 + trial % 3, kb = 1 + (trial / 3) % 3;
    // a^(1/ka) <= b^(1/kb)  <=>  a^kb <= b^ka
    const bool expected = rational_pow(a, kb) <= rational_pow(b, ka);
    CHECK(leq(Scalar::from_rooted(kTimes, RootedRational(a, ka)),
              Scalar::from_rooted(kTimes, RootedRational(b, kb))) == expected);
  }
}

TEST_CASE("mixing semifields is a usage error") {
  CHECK_THROWS_AS(t("2") + p("2"), UsageError);
  CHECK_THROWS_AS(t("2") * Scalar::from_double(kTimesF, 2.0), UsageError);
  CHECK_THROWS_AS(leq(t("2"), p("2")), UsageError);
}

TEST_CASE("parsing and rejection") {
  CHECK(t("0.25") == t("1/4"));
  CHECK(t("1e-3") == t("1/1000"));
  CHECK(t("2.5E1") == t("25"));
  CHECK(p("log2(3)/2") == pow(p("log2(3)"), Rational(1, 2)));
  CHECK(p("-inf").is_zero());
  CHECK(p("0").is_one());
  CHECK_THROWS_AS(t("abc"), ParseError);
  CHECK_THROWS_AS(t("-2"), ParseError);
  CHECK_THROWS_AS(t("1/0"), ParseError);
  CHECK_THROWS_AS(t("-inf"), ParseError);
  CHECK_THROWS_AS(Scalar::from_double(kTimesF, -1.0), DomainError);
  CHECK(std::abs(Scalar::parse(kTimesF, "1/3").to_double() - 1.0 / 3) < 1e-15);
}

TEST_CASE("text round trip") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar v = random_value(rng);
    CHECK(Scalar::parse(kTimes, v.to_string()) == v);
    const Scalar w = Scalar::from_rooted(kPlus, v.rooted());
    CHECK(Scalar::parse(kPlus, w.to_string()) == w);
  }
}

TEST_CASE("semifield axioms hold exactly on random values") {
  oracle::Rng rng(17);
  const Scalar zero = Scalar::zero(kTimes), one = Scalar::one(kTimes);
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar a = random_value(rng), b = random_value(rng), c = random_value(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + a == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a * zero == zero);
    if (!a.is_zero()) CHECK(a * inv(a) == one);
    // a <= b iff a (+) b = b
    CHECK(leq(a, b) == (a + b == b));
  }
}

TEST_CASE("float backend agrees with exact where the floats are exact") {
  oracle::Rng rng(23);
  std::uniform_int_distribution<long> d(0, 64);
  for (int trial = 0; trial < 200; ++trial) {
    // Dyadic values are exact in binary floating point.
    const Rational a(d(rng) + 1, 8), b(d(rng) + 1, 16);
    const Scalar ea = Scalar::from_rational(kTimes, a), eb = Scalar::from_rational(kTimes, b);
    const Scalar fa = Scalar::from_double(kTimesF, a.get_d());
    const Scalar fb = Scalar::from_double(kTimesF, b.get_d());
    CHECK((ea + eb).to_double() == (fa + fb).to_double());
    CHECK((ea * eb).to_double() == (fa * fb).to_double());
    CHECK(leq(ea, eb) == leq(fa, fb));
  }
}

TEST_CASE("logarithm maps max-times onto max-plus") {
  oracle::Rng rng(29);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const Scalar tx = Scalar::from_double(kTimesF, x);
    const Scalar ty = Scalar::from_double(kTimesF, y);
    const Scalar tz = Scalar::from_double(kTimesF, z);
    const Scalar px = Scalar::from_double(kPlusF, std::log(x));
    const Scalar py = Scalar::from_double(kPlusF, std::log(y));
    const Scalar pz = Scalar::from_double(kPlusF, std::log(z));
    const double lhs = std::log((tx * inv(ty) + pow(tz, Rational(1, 3))).to_double());
    const double rhs = (px * inv(py) + pow(pz, Rational(1, 3))).to_double();
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  }
  // Exactly, with base-2 logarithms: log2(12^(1/2) * 3) = log2(12)/2 + log2(3).
  const Scalar v = t("12^(1/2)") * t("3");
  CHECK(Scalar::parse(kPlus, oracle::log2_text(v)) == p("log2(12)/2") * p("log2(3)"));
}

TEST_CASE("float equivalence uses relative tolerance") {
  const Scalar a = Scalar::from_double(kTimesF, 1.0);
  CHECK(equivalent(a, Scalar::from_double(kTimesF, 1.0 + 1e-12)));
  CHECK_FALSE(equivalent(a, Scalar::from_double(kTimesF, 1.0 + 1e-6)));
  CHECK(equivalent(t("2"), t("4^(1/2)")));
}
