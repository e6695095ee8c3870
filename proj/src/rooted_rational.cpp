#include "troprank/rooted_rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "troprank/errors.hpp"

namespace troprank {

namespace {

Integer integer_pow(const Integer& z, unsigned long k) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), k);
  return out;
}

unsigned long checked_mul(unsigned long a, unsigned long b) {
  unsigned long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw UsageError("rooted rational: root exponent overflow");
  }
  return out;
}

double log_of_integer(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

// Exponent e if z == 2^e, otherwise -1.
long power_of_two_exponent(const Integer& z) {
  if (sgn(z) <= 0 || mpz_popcount(z.get_mpz_t()) != 1) return -1;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)) - 1;
}

}  // namespace

Rational rational_pow(const Rational& q, unsigned long k) {
  Rational out(integer_pow(q.get_num(), k), integer_pow(q.get_den(), k));
  out.canonicalize();
  return out;
}

bool exact_root(const Rational& q, unsigned long k, Rational& out) {
  if (k == 1) {
    out = q;
    return true;
  }
  Integer num;
  Integer den;
  if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), k) == 0) return false;
  if (mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), k) == 0) return false;
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

RootedRational::RootedRational(Rational base, unsigned long root)
    : base_(std::move(base)), root_(root) {
  base_.canonicalize();
  if (root_ == 0) throw UsageError("rooted rational: root must be positive");
  if (sgn(base_) < 0) {
    throw DomainError("rooted rational: negative base " + base_.get_str());
  }
  canonicalize();
}

void RootedRational::canonicalize() {
  if (sgn(base_) == 0 || base_ == 1) {
    root_ = 1;
    return;
  }
  Rational reduced;
  for (unsigned long d = 2; d <= root_;) {
    if (root_ % d == 0 && exact_root(base_, d, reduced)) {
      base_ = reduced;
      root_ /= d;
    } else {
      ++d;
    }
  }
}

RootedRational RootedRational::operator*(const RootedRational& other) const {
  if (is_zero() || other.is_zero()) return zero();
  const unsigned long l = std::lcm(root_, other.root_);
  return RootedRational(rational_pow(base_, l / root_) *
                            rational_pow(other.base_, l / other.root_),
                        l);
}

RootedRational RootedRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero is undefined");
  return RootedRational(1 / base_, root_);
}

RootedRational RootedRational::pow(const Rational& exponent) const {
  Rational e = exponent;
  e.canonicalize();
  const int s = sgn(e);
  if (is_zero()) {
    if (s <= 0) {
      throw DomainError("zero raised to a non-positive power is undefined");
    }
    return zero();
  }
  if (s == 0) return one();
  if (!e.get_num().fits_slong_p() || !e.get_den().fits_ulong_p()) {
    throw UsageError("exponent " + e.get_str() + " is too large");
  }
  const long num = e.get_num().get_si();
  const unsigned long den = e.get_den().get_ui();
  const unsigned long mag = num < 0 ? static_cast<unsigned long>(-num)
                                    : static_cast<unsigned long>(num);
  Rational b = rational_pow(base_, mag);
  if (num < 0) b = 1 / b;
  return RootedRational(std::move(b), checked_mul(root_, den));
}

std::strong_ordering operator<=>(const RootedRational& a,
                                 const RootedRational& b) {
  if (a == b) return std::strong_ordering::equal;
  if (a.is_zero()) return std::strong_ordering::less;
  if (b.is_zero()) return std::strong_ordering::greater;
  const unsigned long l = std::lcm(a.root_, b.root_);
  const Rational lhs = rational_pow(a.base_, l / a.root_);
  const Rational rhs = rational_pow(b.base_, l / b.root_);
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double RootedRational::log() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return (log_of_integer(base_.get_num()) - log_of_integer(base_.get_den())) /
         static_cast<double>(root_);
}

double RootedRational::to_double() const {
  if (is_zero()) return 0.0;
  if (root_ == 1) return base_.get_d();
  return std::exp(log());
}

std::string RootedRational::to_string() const {
  if (root_ == 1) return base_.get_str();
  const std::string b = base_.get_den() == 1 ? base_.get_str()
                                             : "(" + base_.get_str() + ")";
  return b + "^(1/" + std::to_string(root_) + ")";
}

std::string RootedRational::to_log2_string() const {
  if (is_zero()) return "-inf";
  const long en = power_of_two_exponent(base_.get_num());
  const long ed = power_of_two_exponent(base_.get_den());
  if (en >= 0 && ed >= 0) {
    Rational v(Integer(en - ed), Integer(root_));
    v.canonicalize();
    return v.get_str();
  }
  std::string out = "log2(" + base_.get_str() + ")";
  if (root_ != 1) out += "/" + std::to_string(root_);
  return out;
}

}  // namespace troprank
