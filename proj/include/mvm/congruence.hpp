#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mvm/finite_algebra.hpp"
#include "mvm/verify.hpp"

namespace mvm {

/// A partition of {0, …, n−1}, stored as block labels in first-occurrence
/// order, so equal partitions have equal label vectors.
class Congruence {
 public:
  Congruence() = default;
  /// Relabels arbitrary block ids canonically.
  explicit Congruence(const std::vector<std::size_t>& blocks);
  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const { return label_.size(); }
  std::size_t block_of(std::size_t a) const { return label_[a]; }
  bool same(std::size_t a, std::size_t b) const { return label_[a] == label_[b]; }
  std::size_t block_count() const;
  std::vector<std::vector<std::size_t>> blocks() const;
  bool is_identity() const { return block_count() == size(); }
  bool is_total() const { return block_count() <= 1; }
  /// Every pair identified here is identified in other.
  bool refines(const Congruence& other) const;
  Congruence meet(const Congruence& other) const;
  Congruence join(const Congruence& other) const;
  /// "{a,b}{c}" with the given element labels.
  std::string str(const std::vector<std::string>& labels) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  std::vector<std::uint32_t> label_;
};

/// Which operations a partition has to respect.
enum class Signature { full, lattice };

bool is_compatible(const FiniteAlgebra& alg, const Congruence& c, Signature sig = Signature::full);

/// Least congruence containing the given pairs, by closure under the operations.
Congruence generated_congruence(const FiniteAlgebra& alg, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                Signature sig = Signature::full);
Congruence principal_congruence(const FiniteAlgebra& alg, std::size_t a, std::size_t b);

inline constexpr std::size_t kPartitionBound = 8;

struct CongruenceSet {
  std::vector<Congruence> all;  // sorted; contains Δ and ∇
  std::size_t identity = 0;
  std::size_t total = 0;
};

/// All congruences: partition filtering up to partition_bound elements,
/// cross-checked against the join closure of principal congruences
/// (logic_error on disagreement); join closure alone above the bound.
/// Throws InputError when the join closure exceeds max_count congruences.
CongruenceSet enumerate_congruences(const FiniteAlgebra& alg, std::size_t partition_bound = kPartitionBound,
                                    std::size_t max_count = 4096);
/// The two enumeration methods on their own.
std::vector<Congruence> congruences_by_partitions(const FiniteAlgebra& alg, Signature sig = Signature::full);
std::vector<Congruence> congruences_by_joins(const FiniteAlgebra& alg, std::size_t max_count = 4096);

/// Non-trivial with a least non-identity congruence.
bool is_subdirectly_irreducible(const FiniteAlgebra& alg);
bool is_subdirectly_irreducible(const CongruenceSet& cons);

/// Congruences below ∇ with exactly one upper cover.
std::vector<Congruence> meet_irreducibles(const CongruenceSet& cons);

/// {(a,b) : (a⊕x, b⊕x) ∈ θ and (a⊙x, b⊙x) ∈ θ for all x}, for a two-block
/// lattice congruence θ (InputError otherwise). When the carrier is small
/// enough to enumerate, also checks it is the greatest congruence below θ.
Congruence theta_star(const FiniteAlgebra& alg, const Congruence& theta);

enum class End { bottom, top };
/// bottom: x ∼ y iff x ⊕ n·t ≥ y and y ⊕ n·t ≥ x for some n.
/// top: x ∼ y iff x ⊙ tⁿ ≤ y and y ⊙ tⁿ ≤ x for some n.
/// Throws logic_error unless the result equals the principal congruence of
/// (t, 0), respectively (t, 1).
Congruence sim_closure(const FiniteAlgebra& alg, std::size_t t, End end);

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c);

/// Chain, good-pair dichotomy and the SI property for subdirectly
/// irreducible algebras; otherwise a decomposition through meet-irreducible
/// congruences with trivial intersection, SI factors and an injective
/// embedding into their product.
VerificationReport verify_si_theorems(const FiniteAlgebra& alg);

/// Łukasiewicz chains k ≤ 3, distributive lattice models up to
/// max_lattice elements, Γ(ℤ ⃗× {0,1}), binary products of small members
/// up to max_product elements, and every proper quotient of all of these.
std::vector<FiniteAlgebra> curated_family(std::size_t max_lattice = 6, std::size_t max_product = 16);

/// Every distributive lattice with at most n elements, one per isomorphism type.
std::vector<FiniteAlgebra> distributive_lattice_models(std::size_t n);

/// The congruence lattice as poset JSON, ordered by refinement.
nlohmann::json congruence_lattice_json(const FiniteAlgebra& alg, const CongruenceSet& cons);

}  // namespace mvm
