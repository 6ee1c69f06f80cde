#pragma once

#include <string>
#include <vector>

#include "mvm/finite_algebra.hpp"
#include "mvm/lmonoid.hpp"
#include "mvm/model.hpp"
#include "mvm/poset.hpp"

namespace mvm {

/// [0,1] ∩ ℚ with clipped arithmetic, h, j, all dyadic constants and λ.
ModelPtr make_interval_algebra();

/// {i/2^k : 0 ≤ i ≤ 2^k} with the interval operations restricted.
ModelPtr make_luka_chain(unsigned k);

/// ⊕ = ∨, ⊙ = ∧ on a finite bounded distributive lattice.
ModelPtr make_lattice_mvm(const FinPoset& lattice);

/// Order-preserving maps X → [0,1] ∩ ℚ with pointwise operations.
class FunctionAlgebra final : public AlgebraModel {
 public:
  explicit FunctionAlgebra(FinPoset base);

  const FinPoset& base() const { return base_; }

  std::string name() const override;
  bool supports(Fragment) const override { return true; }
  Value zero() const override;
  Value one() const override;
  Value oplus(const Value& a, const Value& b) const override;
  Value odot(const Value& a, const Value& b) const override;
  Value join(const Value& a, const Value& b) const override;
  Value meet(const Value& a, const Value& b) const override;
  Value half(const Value& a) const override;
  Value cohalf(const Value& a) const override;
  Value constant(const Rational& t) const override;
  Value lambda(std::span<const Value> prefix, const Value& tail) const override;
  bool contains(const Value& v) const override;
  std::optional<std::vector<Value>> finite_carrier() const override { return std::nullopt; }
  /// All monotone maps into {i/2^exponent}; throws InputError above 10⁶ elements.
  std::vector<Value> grid(unsigned exponent) const override;
  Value random_element(std::mt19937_64& rng, unsigned max_den) const override;
  bool totally_ordered() const override { return base_.size() <= 1; }
  std::optional<Rational> distance_hint(const Value& x, const Value& y) const override;

 private:
  FinPoset base_;
};

std::shared_ptr<const FunctionAlgebra> make_function_algebra(FinPoset base);

/// Γ(M) = {x ∈ M : 0 ≤ x ≤ 1} with x⊕y = (x+y)∧1 and x⊙y = (x+y−1)∨0.
ModelPtr gamma_of(LMonoidPtr m);

/// ⊕/⊙, ∨/∧ and 0/1 swapped.
ModelPtr make_dual(ModelPtr base);

struct Generated {
  std::vector<Value> elements;  // sorted
  bool truncated = false;
};

/// Closure of gens ∪ constants under ⊕, ⊙, ∨, ∧, and also h and j when
/// with_halving is set and the model supports them, stopping once bound
/// elements exist.
Generated subalgebra_generate(const AlgebraModel& alg, const std::vector<Value>& gens, std::size_t bound,
                              const std::vector<Rational>& constants = {}, bool with_halving = false);

/// interval, luka:K, gamma:NAME (or a bare ℓ-monoid name), lattice:POSET,
/// func:POSET, dual:SPEC, file:PATH (finite-table JSON).
ModelPtr load_model(const std::string& spec);

}  // namespace mvm
