#include "troprank/semifield.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "troprank/errors.hpp"

namespace troprank {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long kMaxPlusExponentLimit = 1L << 20;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

Integer pow10(unsigned long k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
  return out;
}

// Integer or decimal literal with optional sign and exponent, e.g. "-1.25e-3".
Rational parse_decimal(std::string_view s) {
  const std::string_view original = s;
  auto fail = [&]() -> Rational {
    throw ParseError("not a number: '" + std::string(original) + "'");
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      return fail();
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) return fail();
    digits = std::string(s);
  }
  Rational out(Integer(digits, 10));
  if (exponent > 0) out *= pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) out /= pow10(static_cast<unsigned long>(-exponent));
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

// Decimal or fraction "p/q" literal.
Rational parse_rational(std::string_view s) {
  s = trim(s);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(trim(s.substr(0, slash)));
    const Rational den = parse_decimal(trim(s.substr(slash + 1)));
    if (sgn(den) == 0) {
      throw ParseError("zero denominator in '" + std::string(s) + "'");
    }
    Rational out = num / den;
    out.canonicalize();
    return out;
  }
  return parse_decimal(s);
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    return trim(s.substr(1, s.size() - 2));
  }
  return s;
}

RootedRational two_to_the(const Rational& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_ulong_p() ||
      std::abs(q.get_num().get_si()) > kMaxPlusExponentLimit) {
    throw UsageError("max-plus value " + q.get_str() +
                     " is outside the exact backend's range");
  }
  const long num = q.get_num().get_si();
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::abs(num)));
  Rational base = num >= 0 ? Rational(p) : Rational(Integer(1), p);
  return RootedRational(std::move(base), q.get_den().get_ui());
}

// Exponent e with z == 2^e, or -1.
long two_exponent(const Integer& z) {
  if (sgn(z) <= 0 || mpz_popcount(z.get_mpz_t()) != 1) return -1;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)) - 1;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

RootedRational parse_exact_max_times(std::string_view text) {
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    const Rational base = parse_rational(strip_parens(text.substr(0, caret)));
    const Rational exponent =
        parse_rational(strip_parens(text.substr(caret + 1)));
    if (sgn(base) < 0) {
      throw ParseError("negative value '" + std::string(text) +
                       "' in max-times");
    }
    return RootedRational(base).pow(exponent);
  }
  const Rational q = parse_rational(text);
  if (sgn(q) < 0) {
    throw ParseError("negative value '" + std::string(text) +
                     "' in max-times");
  }
  return RootedRational(q);
}

RootedRational parse_exact_max_plus(std::string_view text) {
  if (text == "-inf" || text == "-infinity" || text == "-Infinity" ||
      text == "\xE2\x88\x92\xE2\x88\x9E") {
    return RootedRational::zero();
  }
  bool negated = false;
  std::string_view body = text;
  if (body.starts_with("-log2(")) {
    negated = true;
    body.remove_prefix(1);
  }
  if (body.starts_with("log2(")) {
    const auto close = body.find(')');
    if (close == std::string_view::npos) {
      throw ParseError("unterminated log2( in '" + std::string(text) + "'");
    }
    const Rational base = parse_rational(body.substr(5, close - 5));
    if (sgn(base) <= 0) {
      throw ParseError("log2 of non-positive value in '" + std::string(text) +
                       "'");
    }
    Rational divisor(1);
    std::string_view rest = trim(body.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != '/') {
        throw ParseError("unexpected '" + std::string(rest) + "' in '" +
                         std::string(text) + "'");
      }
      divisor = parse_rational(rest.substr(1));
      if (sgn(divisor) <= 0) {
        throw ParseError("log2 divisor must be positive in '" +
                         std::string(text) + "'");
      }
    }
    RootedRational out = RootedRational(base).pow(1 / divisor);
    return negated ? out.inverse() : out;
  }
  return two_to_the(parse_rational(text));
}

}  // namespace

std::string Semifield::name() const {
  return kind == SemifieldKind::MaxTimes ? "max-times" : "max-plus";
}

std::string Semifield::backend_name() const {
  return backend == Backend::Exact ? "exact" : "float";
}

SemifieldKind parse_semifield_kind(std::string_view text) {
  if (text == "max-times" || text == "mult" || text == "maxtimes") {
    return SemifieldKind::MaxTimes;
  }
  if (text == "max-plus" || text == "add" || text == "maxplus") {
    return SemifieldKind::MaxPlus;
  }
  throw UsageError("unknown scale '" + std::string(text) +
                   "' (expected max-times|mult or max-plus|add)");
}

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::Exact;
  if (text == "float") return Backend::Float;
  throw UsageError("unknown backend '" + std::string(text) +
                   "' (expected exact or float)");
}

void require_same_field(const Semifield& a, const Semifield& b,
                        std::string_view op) {
  if (a != b) {
    throw UsageError(std::string(op) + ": mixed semifields (" + a.name() + "/" +
                     a.backend_name() + " vs " + b.name() + "/" +
                     b.backend_name() + ")");
  }
}

Scalar Scalar::zero(Semifield f) {
  if (f.exact()) return Scalar(f, RootedRational::zero());
  return Scalar(f, f.kind == SemifieldKind::MaxTimes ? 0.0 : kNegInf);
}

Scalar Scalar::one(Semifield f) {
  if (f.exact()) return Scalar(f, RootedRational::one());
  return Scalar(f, f.kind == SemifieldKind::MaxTimes ? 1.0 : 0.0);
}

Scalar Scalar::from_rational(Semifield f, const Rational& q) {
  if (f.kind == SemifieldKind::MaxTimes && sgn(q) < 0) {
    throw DomainError("max-times values must be nonnegative, got " +
                      q.get_str());
  }
  if (!f.exact()) return Scalar(f, q.get_d());
  if (f.kind == SemifieldKind::MaxTimes) return Scalar(f, RootedRational(q));
  return Scalar(f, two_to_the(q));
}

Scalar Scalar::from_double(Semifield f, double v) {
  if (f.exact()) {
    throw UsageError("from_double requires the float backend");
  }
  if (std::isnan(v)) throw DomainError("NaN is not a semifield element");
  if (f.kind == SemifieldKind::MaxTimes && v < 0) {
    throw DomainError("max-times values must be nonnegative");
  }
  if (f.kind == SemifieldKind::MaxPlus && v == std::numeric_limits<double>::infinity()) {
    throw DomainError("+inf is not a max-plus element");
  }
  return Scalar(f, v);
}

Scalar Scalar::from_rooted(Semifield f, RootedRational r) {
  if (!f.exact()) throw UsageError("from_rooted requires the exact backend");
  return Scalar(f, std::move(r));
}

Scalar Scalar::parse(Semifield f, std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty scalar");
  RootedRational r = f.kind == SemifieldKind::MaxTimes
                         ? parse_exact_max_times(t)
                         : parse_exact_max_plus(t);
  Scalar exact(Semifield{f.kind, Backend::Exact}, std::move(r));
  if (f.exact()) return exact;
  return Scalar(f, exact.to_double());
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<RootedRational>(&value_)) return r->is_zero();
  const double v = std::get<double>(value_);
  return field_.kind == SemifieldKind::MaxTimes ? v == 0.0 : v == kNegInf;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<RootedRational>(&value_)) return r->is_one();
  const double v = std::get<double>(value_);
  return field_.kind == SemifieldKind::MaxTimes ? v == 1.0 : v == 0.0;
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<RootedRational>(&value_)) {
    if (field_.kind == SemifieldKind::MaxTimes) return r->to_double();
    return r->is_zero() ? kNegInf : r->log() / std::log(2.0);
  }
  return std::get<double>(value_);
}

const RootedRational& Scalar::rooted() const {
  const auto* r = std::get_if<RootedRational>(&value_);
  if (r == nullptr) throw UsageError("rooted() requires the exact backend");
  return *r;
}

bool Scalar::is_rational() const {
  const auto* r = std::get_if<RootedRational>(&value_);
  if (r == nullptr) return std::isfinite(std::get<double>(value_));
  if (field_.kind == SemifieldKind::MaxTimes) return r->is_rational();
  if (r->is_zero()) return false;
  return two_exponent(r->base().get_num()) >= 0 &&
         two_exponent(r->base().get_den()) >= 0;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) {
    throw DomainError("value " + to_string() + " is not rational");
  }
  const auto* r = std::get_if<RootedRational>(&value_);
  if (r == nullptr) return Rational(std::get<double>(value_));
  if (field_.kind == SemifieldKind::MaxTimes) return r->base();
  Rational out(Integer(two_exponent(r->base().get_num()) -
                       two_exponent(r->base().get_den())),
               Integer(r->root()));
  out.canonicalize();
  return out;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<RootedRational>(&value_)) {
    return field_.kind == SemifieldKind::MaxTimes ? r->to_string()
                                                  : r->to_log2_string();
  }
  return format_double(std::get<double>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_, "add");
  return leq(a, b) ? b : a;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_, "mul");
  if (a.field_.exact()) {
    return Scalar(a.field_, std::get<RootedRational>(a.value_) *
                                std::get<RootedRational>(b.value_));
  }
  const double x = std::get<double>(a.value_);
  const double y = std::get<double>(b.value_);
  if (a.is_zero() || b.is_zero()) return Scalar::zero(a.field_);
  return Scalar(a.field_,
                a.field_.kind == SemifieldKind::MaxTimes ? x * y : x + y);
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw DomainError("inverse of zero is undefined");
  if (a.field_.exact()) {
    return Scalar(a.field_, std::get<RootedRational>(a.value_).inverse());
  }
  const double x = std::get<double>(a.value_);
  return Scalar(a.field_,
                a.field_.kind == SemifieldKind::MaxTimes ? 1.0 / x : -x);
}

Scalar pow(const Scalar& a, const Rational& p) {
  if (a.field_.exact()) {
    return Scalar(a.field_, std::get<RootedRational>(a.value_).pow(p));
  }
  if (a.is_zero()) {
    if (sgn(p) <= 0) {
      throw DomainError("zero raised to a non-positive power is undefined");
    }
    return a;
  }
  const double x = std::get<double>(a.value_);
  const double e = p.get_d();
  return Scalar(a.field_, a.field_.kind == SemifieldKind::MaxTimes
                              ? std::pow(x, e)
                              : x * e);
}

Scalar root(const Scalar& a, unsigned long k) {
  if (k == 0) throw UsageError("root of order zero");
  return pow(a, Rational(Integer(1), Integer(k)));
}

Scalar div(const Scalar& a, const Scalar& b) { return a * inv(b); }

bool leq(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_, "leq");
  if (a.field_.exact()) {
    return std::get<RootedRational>(a.value_) <=
           std::get<RootedRational>(b.value_);
  }
  return std::get<double>(a.value_) <= std::get<double>(b.value_);
}

bool less(const Scalar& a, const Scalar& b) { return !leq(b, a); }

bool equivalent(const Scalar& a, const Scalar& b) {
  require_same_field(a.field(), b.field(), "equivalent");
  if (a.field().exact()) return a == b;
  const double x = a.to_double();
  const double y = b.to_double();
  if (x == y) return true;
  if (std::isinf(x) || std::isinf(y)) return false;
  double scale = std::max(std::abs(x), std::abs(y));
  if (a.field().kind == SemifieldKind::MaxPlus) scale = std::max(scale, 1.0);
  return std::abs(x - y) <= kFloatTolerance * scale;
}

}  // namespace troprank
