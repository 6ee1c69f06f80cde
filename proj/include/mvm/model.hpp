#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvm/value.hpp"

namespace mvm {

/// Signature fragments a model may interpret.
enum class Fragment {
  mvm_core,          // ⊕ ⊙ ∨ ∧ 0 1
  dyadic_constants,  // every t in 𝔻∩[0,1] as a nullary symbol
  two_div,           // h, j
  lambda,            // λ of countably infinite arity
};

std::string_view fragment_name(Fragment f);

/// Raised when a term or suite uses a symbol the model does not interpret.
class UnsupportedSymbol : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A concrete algebra interpreting (part of) the MV-monoidal signatures.
///
/// Implementations are immutable after construction and safe for concurrent
/// reads. Every declared operation must be total on the carrier.
class AlgebraModel {
 public:
  virtual ~AlgebraModel() = default;

  virtual std::string name() const = 0;
  virtual bool supports(Fragment f) const = 0;

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value oplus(const Value& a, const Value& b) const = 0;
  virtual Value odot(const Value& a, const Value& b) const = 0;
  virtual Value join(const Value& a, const Value& b) const = 0;
  virtual Value meet(const Value& a, const Value& b) const = 0;

  /// h(x); the x/2 of 2-divisible algebras.
  virtual Value half(const Value& a) const;
  /// j(x); the (1+x)/2 of 2-divisible algebras.
  virtual Value cohalf(const Value& a) const;

  /// Interpretation t^A of a constant; 0 and 1 always, others only with
  /// the dyadic fragment.
  virtual Value constant(const Rational& t) const;
  /// t^A taken in an enveloping algebra that has every dyadic constant and
  /// on which the operations still compute. Used for distances and ess on
  /// models such as finite chains, whose carrier lacks most constants.
  virtual std::optional<Value> envelope_constant(const Rational& t) const;

  /// λ on the eventually-constant sequence prefix, tail, tail, ...
  virtual Value lambda(std::span<const Value> prefix, const Value& tail) const;

  virtual bool contains(const Value& v) const = 0;
  /// The whole carrier, listed once per element, when it is finite.
  virtual std::optional<std::vector<Value>> finite_carrier() const = 0;
  /// Elements whose coordinates have denominators dividing 2^exponent.
  /// Finite models return their carrier.
  virtual std::vector<Value> grid(unsigned exponent) const;
  /// A pseudo-random element with denominators bounded by max_den.
  virtual Value random_element(std::mt19937_64& rng, unsigned max_den) const;

  virtual bool totally_ordered() const { return false; }
  /// Exact comparison of x against t^A, where the model can decide it.
  virtual std::optional<std::strong_ordering> compare_constant(const Value& x, const Rational& t) const;
  /// Closed-form uniform distance, where the model knows one.
  virtual std::optional<Rational> distance_hint(const Value& x, const Value& y) const;

  virtual std::string format(const Value& v) const { return v.str(); }
  virtual Value parse(std::string_view text) const;

  bool is_trivial() const { return zero() == one(); }
  bool leq(const Value& a, const Value& b) const { return meet(a, b) == a; }
};

using ModelPtr = std::shared_ptr<const AlgebraModel>;

/// Parses "1/2" or "(0,1/2,1)" into a Value.
Value parse_value_text(std::string_view text);

/// Uniformly random rational in [0,1] with denominator at most max_den.
Rational random_unit_rational(std::mt19937_64& rng, unsigned max_den);

}  // namespace mvm
