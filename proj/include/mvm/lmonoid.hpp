#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mvm/value.hpp"

namespace mvm {

/// Unital commutative distributive ℓ-monoid with decidable order.
///
/// Elements are Values. Arithmetic is defined on the ambient rational
/// coordinates, so operations also make sense on the dyadic envelope used
/// for constants; contains() is the membership test for the carrier proper.
class LMonoidModel {
 public:
  virtual ~LMonoidModel() = default;

  virtual std::string name() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value join(const Value& a, const Value& b) const = 0;
  virtual Value meet(const Value& a, const Value& b) const = 0;
  virtual Value zero() const = 0;
  /// The positive unit 1 and the negative unit −1.
  virtual Value unit() const = 0;
  virtual Value neg_unit() const = 0;
  virtual bool contains(const Value& v) const = 0;
  virtual bool totally_ordered() const = 0;

  /// t·1 inside the dyadic envelope, for dyadic t.
  virtual Value constant(const Rational& t) const = 0;
  /// Whether constant(t) lies in the carrier for every dyadic t.
  virtual bool has_dyadic_constants() const = 0;

  /// Whether every element has a half, as in 𝔻.
  virtual bool two_divisible() const { return false; }
  virtual Value halve(const Value& a) const;

  /// Bounded sample of carrier elements for law checks.
  virtual std::vector<Value> samples(unsigned level) const = 0;
  /// Γ(M) = {x : 0 ≤ x ≤ 1} when finite.
  virtual std::optional<std::vector<Value>> unit_interval() const = 0;
  /// Elements of Γ(M) at grid resolution level.
  virtual std::vector<Value> unit_interval_grid(unsigned level) const = 0;

  /// Least n ≥ 1 with −n·1 ≤ x ≤ n·1, computed from the coordinates.
  virtual unsigned long order_unit(const Value& x) const = 0;

  bool leq(const Value& a, const Value& b) const { return meet(a, b) == a; }
  /// n·u for n ≥ 0 by repeated addition.
  Value times(unsigned long n, const Value& u) const;
  /// The integer k as k·1 or |k|·(−1).
  Value integer(long k) const;
};

using LMonoidPtr = std::shared_ptr<const LMonoidModel>;

enum class Component { integers, dyadics, flat, };

/// ℤ or 𝔻 with the usual order and addition.
LMonoidPtr make_scalar_lmonoid(Component kind);
/// first ⃗× second with componentwise + and lexicographic order.
/// first is integers or dyadics; second is flat ({0,1}, + = ∨) or integers.
LMonoidPtr make_lex_lmonoid(Component first, Component second);

/// z, dyadics, lex-z-flat, lex-z-z, lex-d-flat.
LMonoidPtr lmonoid_builtin(const std::string& name);
std::vector<std::string> lmonoid_builtin_names();

}  // namespace mvm
