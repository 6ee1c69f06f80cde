#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "mvm/model.hpp"
#include "mvm/poset.hpp"

namespace mvm {

enum class BinOp { oplus = 0, odot = 1, join = 2, meet = 3 };
inline constexpr std::array<BinOp, 4> kBinOps{BinOp::oplus, BinOp::odot, BinOp::join, BinOp::meet};
const char* binop_name(BinOp op);

/// A finite algebra in the MVM signature given by Cayley tables.
struct FiniteAlgebra {
  std::string name;
  std::vector<std::string> labels;
  std::array<std::vector<std::uint32_t>, 4> tables;  // row-major n×n
  std::size_t zero = 0;
  std::size_t one = 0;

  std::size_t size() const { return labels.size(); }
  std::size_t op(BinOp o, std::size_t a, std::size_t b) const { return tables[static_cast<int>(o)][a * size() + b]; }
  void set(BinOp o, std::size_t a, std::size_t b, std::size_t v) {
    tables[static_cast<int>(o)][a * size() + b] = static_cast<std::uint32_t>(v);
  }
  bool leq(std::size_t a, std::size_t b) const { return op(BinOp::meet, a, b) == a; }
  bool is_chain() const;

  /// Empty tables of the given size.
  static FiniteAlgebra blank(std::string name, std::vector<std::string> labels);
  /// {"carrier": [...], "ops": {"oplus": [[...]], "odot", "join", "meet", "zero": i, "one": j}}.
  /// A document with only join and meet is read as a lattice and must be
  /// bounded and distributive; ⊕ and ⊙ then default to ∨ and ∧.
  static FiniteAlgebra from_json(const nlohmann::json& doc, std::string name);
  nlohmann::json to_json() const;
  /// Tables of a model with a finite carrier, labelled by its format().
  static FiniteAlgebra tabulate(const AlgebraModel& model);
};

/// Checks the lattice laws on join/meet tables; throws InputError naming the first failure.
void validate_lattice(const FiniteAlgebra& alg);
/// Throws InputError if the lattice is not distributive or 0/1 are not its bounds.
void validate_bounded_distributive(const FiniteAlgebra& alg);

/// ⊕ = ∨ and ⊙ = ∧ on a finite lattice given as a poset. Throws InputError
/// when the poset is not a lattice or the lattice is not distributive.
FiniteAlgebra lattice_mvm_tables(const FinPoset& lattice);

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

ModelPtr make_table_model(FiniteAlgebra alg);

}  // namespace mvm
