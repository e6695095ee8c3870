#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace troprank {

using Rational = mpq_class;
using Integer = mpz_class;

/// A nonnegative real of the form base^(1/root) with rational base and
/// positive integer root.
///
/// The representation is kept canonical: root is the smallest positive
/// integer k for which value^k is rational, and zero is stored as 0^(1/1).
/// Two values are therefore equal iff their (base, root) pairs are equal.
/// Ordering is decided exactly by raising both sides to the lcm of roots.
class RootedRational {
 public:
  RootedRational() : base_(0), root_(1) {}
  explicit RootedRational(Rational base, unsigned long root = 1);

  static RootedRational zero() { return {}; }
  static RootedRational one() { return RootedRational(Rational(1)); }

  const Rational& base() const noexcept { return base_; }
  unsigned long root() const noexcept { return root_; }

  bool is_zero() const noexcept { return sgn(base_) == 0; }
  bool is_one() const noexcept { return root_ == 1 && base_ == 1; }
  // True when the value is itself rational (root == 1).
  bool is_rational() const noexcept { return root_ == 1; }

  RootedRational operator*(const RootedRational& other) const;
  RootedRational inverse() const;
  // value^exponent; a zero value requires exponent > 0.
  RootedRational pow(const Rational& exponent) const;

  friend bool operator==(const RootedRational& a, const RootedRational& b) {
    return a.root_ == b.root_ && a.base_ == b.base_;
  }
  friend std::strong_ordering operator<=>(const RootedRational& a,
                                          const RootedRational& b);

  // Natural logarithm of the value; -inf for zero.
  double log() const;
  double to_double() const;

  // "12", "1/6", "12^(1/2)", "(1/12)^(1/2)".
  std::string to_string() const;
  // Value of log2(this) rendered exactly: a rational when base is a power of
  // two, otherwise "log2(b)" or "log2(b)/k". Zero renders as "-inf".
  std::string to_log2_string() const;

 private:
  void canonicalize();

  Rational base_;
  unsigned long root_;
};

// Integer k-th power of a rational.
Rational rational_pow(const Rational& q, unsigned long k);

// Exact k-th root of q if q is a perfect k-th power.
bool exact_root(const Rational& q, unsigned long k, Rational& out);

}  // namespace troprank
