#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mvm/poset.hpp"

namespace mvm {

struct TaggedPoint {
  std::size_t x;
  int tag;  // 0 or 1; the involution i* is 1 − i

  TaggedPoint star() const { return {x, 1 - tag}; }
};

/// Coproduct order on X+X: (x,i) ≤ (y,j) iff i = j and x ≤ y.
/// Tagged point (x,i) has index i·|X| + x.
Relation coproduct_order(const FinPoset& x);

/// A preorder on X+X extending the coproduct order. On a finite discrete
/// space every preorder is closed, so no topology is stored.
class CorelStructure {
 public:
  /// Throws InputError unless rel is a preorder on X+X extending the coproduct order.
  CorelStructure(const FinPoset& x, Relation rel);
  /// Least structure containing the given pairs.
  static CorelStructure generated(const FinPoset& x, const std::vector<std::pair<TaggedPoint, TaggedPoint>>& pairs);
  /// Tagged pairs [["a",0],["b",1]] as a JSON array of pairs.
  static CorelStructure from_json(const FinPoset& x, const nlohmann::json& doc);

  std::size_t base_size() const { return n_; }
  const Relation& relation() const { return rel_; }
  bool rel(std::size_t x, int i, std::size_t y, int j) const { return rel_.has(i * n_ + x, j * n_ + y); }
  bool rel(TaggedPoint a, TaggedPoint b) const { return rel(a.x, a.tag, b.x, b.tag); }
  /// Y = {z : (z,0) ⪯ (z,1) ⪯ (z,0)}.
  std::uint64_t diagonal_set() const;

  friend bool operator==(const CorelStructure& a, const CorelStructure& b) { return a.rel_ == b.rel_; }

 private:
  std::size_t n_ = 0;
  Relation rel_;
};

/// ⪯^Y: same-tag pairs by ≤, cross-tag pairs iff some z ∈ Y has x ≤ z ≤ y.
CorelStructure corel_from_subset(const FinPoset& x, std::uint64_t y);

enum class Flag { yes, no, not_applicable };

const char* flag_name(Flag f);

struct CorelFlags {
  bool reflexive = false;
  bool symmetric = false;
  Flag transitive = Flag::not_applicable;  // evaluated only for reflexive structures
  bool equivalence = false;
  Flag effective = Flag::not_applicable;   // evaluated only for equivalence structures
};

CorelFlags corel_classify(const FinPoset& x, const CorelStructure& s);

inline constexpr std::size_t kCorelDefaultBound = 3;

/// Streams every preorder on X+X extending the coproduct order, exactly once.
/// Returns the number visited. Throws InputError when |X| exceeds bound.
std::size_t corel_enumerate(const FinPoset& x, const std::function<void(const CorelStructure&)>& visit,
                            std::size_t bound = kCorelDefaultBound);

struct EffectivenessReport {
  std::size_t structures = 0;
  std::size_t equivalence_structures = 0;
  std::size_t effective = 0;
  std::size_t matches_subset = 0;
  std::vector<std::uint64_t> subsets;  // Y of each equivalence structure, sorted

  bool pass() const { return effective == equivalence_structures && matches_subset == equivalence_structures; }
};

EffectivenessReport check_effectiveness(const FinPoset& x, std::size_t bound = kCorelDefaultBound);

}  // namespace mvm
