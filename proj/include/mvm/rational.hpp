#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mvm {

/// Raised for malformed user input (text, JSON, CLI arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so structural
/// equality is numeric equality. Canonical text form is "num/den", or just
/// "num" when the denominator is 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Accepts "a/b", "a", and terminating decimals such as "-0.25".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// True when the denominator is a power of two.
  bool is_dyadic() const;
  /// Exponent e with den = 2^e, if dyadic.
  std::optional<unsigned> dyadic_exponent() const;

  mpz_class floor() const;
  mpz_class ceil() const;

  std::string str() const;
  double to_double() const { return q_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& a);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// 2^-n as an exact rational.
Rational pow2_inv(unsigned n);

/// Clip into [0,1]: (a ∨ 0) ∧ 1.
Rational unit_clip(const Rational& a);

/// A rational known to lie in [0,1].
class UnitRational {
 public:
  /// Throws InputError when the value is outside [0,1].
  explicit UnitRational(Rational value);
  static UnitRational clip(const Rational& a) { return UnitRational(unit_clip(a)); }

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT

  friend bool operator==(const UnitRational&, const UnitRational&) = default;
  friend auto operator<=>(const UnitRational& a, const UnitRational& b) { return a.value_ <=> b.value_; }

 private:
  Rational value_;
};

enum class Pole { lower, upper };

/// lower: 1/2^n (= h^n(1)); upper: 1 - 1/2^n (= j^n(0)).
UnitRational dyadic_unit(unsigned n, Pole pole);

}  // namespace mvm

template <>
struct std::hash<mvm::Rational> {
  std::size_t operator()(const mvm::Rational& r) const { return r.hash(); }
};
