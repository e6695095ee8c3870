#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "troprank/rooted_rational.hpp"

namespace troprank {

enum class SemifieldKind { MaxTimes, MaxPlus };
enum class Backend { Exact, Float };

/// Identifies the active idempotent semifield and the scalar backend.
///
///   MaxTimes: (R+ u {0}, max, *, 0, 1)
///   MaxPlus:  (R u {-inf}, max, +, -inf, 0)
///
/// The exact backend stores every value as a RootedRational. Under MaxTimes
/// that is the value itself; under MaxPlus it is 2^value, so max, + and
/// rational scaling map onto max, * and rational powers. Every rational
/// max-plus value is representable, and so is log2 of any rooted rational.
struct Semifield {
  SemifieldKind kind = SemifieldKind::MaxTimes;
  Backend backend = Backend::Exact;

  friend bool operator==(const Semifield&, const Semifield&) = default;

  static Semifield max_times(Backend b = Backend::Exact) {
    return {SemifieldKind::MaxTimes, b};
  }
  static Semifield max_plus(Backend b = Backend::Exact) {
    return {SemifieldKind::MaxPlus, b};
  }

  bool exact() const noexcept { return backend == Backend::Exact; }

  // "max-times" / "max-plus"
  std::string name() const;
  std::string backend_name() const;
};

SemifieldKind parse_semifield_kind(std::string_view text);
Backend parse_backend(std::string_view text);

/// Element of a Semifield. Value type; cheap enough to copy for the matrix
/// sizes this library targets.
class Scalar {
 public:
  // MaxTimes exact zero.
  Scalar() = default;

  static Scalar zero(Semifield f);
  static Scalar one(Semifield f);
  // The semifield element whose ordinary numeric value is q (MaxPlus: q as an
  // additive number).
  static Scalar from_rational(Semifield f, const Rational& q);
  static Scalar from_int(Semifield f, long v) {
    return from_rational(f, Rational(v));
  }
  // Float backend only.
  static Scalar from_double(Semifield f, double v);
  // Exact backend only: wraps the internal representation directly.
  static Scalar from_rooted(Semifield f, RootedRational r);

  /// Text syntax: integers, decimals ("0.25", "1e-3"), fractions "p/q",
  /// rooted forms "12^(1/2)" / "(1/12)^(1/2)" (max-times), "log2(b)" /
  /// "log2(b)/k" (max-plus) and "-inf" (max-plus zero).
  static Scalar parse(Semifield f, std::string_view text);

  const Semifield& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Ordinary numeric value (MaxPlus: the additive number, -inf for zero).
  double to_double() const;
  // Exact backend only.
  const RootedRational& rooted() const;
  // True if the ordinary numeric value is rational (float: finite).
  bool is_rational() const;
  // Ordinary numeric value as a rational; DomainError if irrational.
  Rational to_rational() const;

  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);  // max
  friend Scalar operator*(const Scalar& a, const Scalar& b);  // times / plus
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  // Structural equality: exact for the exact backend, bitwise for floats.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend Scalar inv(const Scalar& a);
  friend Scalar pow(const Scalar& a, const Rational& p);
  friend bool leq(const Scalar& a, const Scalar& b);
  friend bool less(const Scalar& a, const Scalar& b);

  Scalar(Semifield f, std::variant<RootedRational, double> v)
      : field_(f), value_(std::move(v)) {}

  Semifield field_{};
  std::variant<RootedRational, double> value_{};
};

inline Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar inv(const Scalar& a);
Scalar pow(const Scalar& a, const Rational& p);
inline Scalar pow(const Scalar& a, long p) { return pow(a, Rational(p)); }
// a^(1/k)
Scalar root(const Scalar& a, unsigned long k);
// a (x) b^{-1}
Scalar div(const Scalar& a, const Scalar& b);

bool leq(const Scalar& a, const Scalar& b);
bool less(const Scalar& a, const Scalar& b);

// Equality as surfaced to users: exact for the exact backend, relative
// tolerance 1e-9 for floats.
bool equivalent(const Scalar& a, const Scalar& b);

inline constexpr double kFloatTolerance = 1e-9;

// Throws UsageError unless both scalars live in the same semifield/backend.
void require_same_field(const Semifield& a, const Semifield& b,
                        std::string_view op);

}  // namespace troprank
