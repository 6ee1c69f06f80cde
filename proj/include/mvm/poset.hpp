#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mvm/rational.hpp"

namespace mvm {

/// Binary relation on {0, …, n−1} as bitmask rows (n ≤ 64): row i holds every j with i R j.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, 0) {}
  static Relation identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool has(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1U; }
  void add(std::size_t i, std::size_t j) { rows_[i] |= std::uint64_t{1} << j; }
  std::uint64_t row(std::size_t i) const { return rows_[i]; }
  std::uint64_t column(std::size_t j) const;

  void close_transitively();
  bool reflexive() const;
  bool transitive() const;
  bool antisymmetric() const;
  bool is_preorder() const { return reflexive() && transitive(); }
  bool contains(const Relation& other) const;
  std::size_t pair_count() const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

/// Finite partial order with named points.
class FinPoset {
 public:
  static constexpr std::size_t kMaxPoints = 64;

  /// Applies reflexive-transitive closure. Throws InputError on a cycle
  /// between distinct points or on duplicate names.
  static FinPoset from_pairs(std::vector<std::string> names, const std::vector<std::pair<std::size_t, std::size_t>>& le);
  static FinPoset from_json(const nlohmann::json& doc);
  static FinPoset chain(std::size_t n);
  static FinPoset antichain(std::size_t n);
  /// Two minimal points below one maximal point: a, b ≤ c.
  static FinPoset vee();
  /// chainN, antichainN, vee.
  static FinPoset builtin(const std::string& name);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::size_t index_of(const std::string& name) const;
  bool le(std::size_t i, std::size_t j) const { return order_.has(i, j); }
  const Relation& order() const { return order_; }

  std::uint64_t up(std::size_t i) const { return order_.row(i); }
  std::uint64_t down(std::size_t i) const { return order_.column(i); }
  std::uint64_t all_mask() const;
  bool is_up_set(std::uint64_t mask) const;
  bool is_down_set(std::uint64_t mask) const;
  /// All up-sets, in increasing mask order (n ≤ 20).
  std::vector<std::uint64_t> up_sets() const;

  bool monotone(const std::vector<Rational>& f) const;
  /// Canonical bit string invariant under relabelling (n ≤ 8).
  std::string canonical_key() const;

  nlohmann::json to_json() const;

 private:
  std::vector<std::string> names_;
  Relation order_;
};

/// One representative per isomorphism type of posets with n points (n ≤ 6).
std::vector<FinPoset> all_posets(std::size_t n);

/// ⪯_f on X for a monotone map f: X → Y given by point indices.
Relation preorder_of_map(const FinPoset& x, const FinPoset& y, const std::vector<std::size_t>& f);

struct Quotient {
  FinPoset poset;
  std::vector<std::size_t> projection;
};

/// X / (p ∩ pᵒᵖ) ordered by [x] ≤ [y] iff x p y.
Quotient quotient_poset(const FinPoset& x, const Relation& p);

using Witness = std::vector<Rational>;

/// Indicator of F1 for a down-set F0 and a disjoint up-set F1.
Witness urysohn_witness(const FinPoset& x, std::uint64_t f0, std::uint64_t f1);
/// Indicator of ↑y, requiring x ≱ y.
Witness point_separator(const FinPoset& x, std::size_t a, std::size_t b);
/// x ⊑ y iff f(x) ≤ f(y) for every f in the family.
Relation reconstruct_order(const FinPoset& x, const std::vector<Witness>& family);

}  // namespace mvm
