#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "mvm/rational.hpp"

namespace mvm {

/// An element of some model's carrier, as a short vector of exact rationals.
///
/// Scalar models (the unit interval, Łukasiewicz chains) use one coordinate;
/// function algebras use one coordinate per poset point; lexicographic
/// monoids use two; finite-table algebras store the element index.
class Value {
 public:
  Value() = default;
  Value(Rational scalar) : coords_{std::move(scalar)} {}  // NOLINT(google-explicit-constructor)
  Value(long scalar) : coords_{Rational(scalar)} {}       // NOLINT
  Value(int scalar) : coords_{Rational(scalar)} {}        // NOLINT
  explicit Value(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Value(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  /// The single coordinate of a scalar value.
  const Rational& scalar() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  /// "1/2" for scalars, "(0,1/2,1)" otherwise.
  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<Rational> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

using Env = std::vector<Value>;

std::string format_env(const Env& env);

}  // namespace mvm

template <>
struct std::hash<mvm::Value> {
  std::size_t operator()(const mvm::Value& v) const { return v.hash(); }
};
