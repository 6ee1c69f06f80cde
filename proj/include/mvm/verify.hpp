#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mvm/model.hpp"
#include "mvm/term.hpp"

namespace mvm {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// How environments are drawn when checking an identity.
struct Strategy {
  enum class Kind { exhaustive, grid, random };

  Kind kind = Kind::exhaustive;
  unsigned grid_exponent = 4;
  std::size_t count = 1000;  // random tuples
  std::uint64_t seed = kDefaultSeed;
  unsigned max_den = 64;     // denominators of random elements
  unsigned schema_depth = 8; // instantiation bound for indexed families
  unsigned jobs = 1;
  /// Grids with more tuples than this are sampled instead, seeded.
  std::size_t max_tuples = 50000;

  /// exhaustive | grid:D | random:N
  static Strategy parse(std::string_view text);
  std::string str() const;
};

enum class Comparison { eq, leq };

struct Identity {
  std::string id;
  Term lhs;
  Term rhs;
  Comparison cmp = Comparison::eq;

  std::size_t arity() const { return std::max(lhs.arity(), rhs.arity()); }
  std::string str() const;
};

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

struct CheckResult {
  std::string id;
  Status status = Status::pass;
  std::size_t tuples = 0;
  bool sampled = false;
  /// Set on failure: the environment and the two sides there.
  std::optional<Env> counterexample;
  std::optional<Value> lhs;
  std::optional<Value> rhs;
  /// The checked statement, for identities: lhs and rhs terms.
  std::string lhs_term;
  std::string rhs_term;
  Comparison cmp = Comparison::eq;
  std::string reason;
};

struct AxiomResult {
  std::string id;
  std::vector<CheckResult> checks;

  Status status() const;
  std::size_t tuples() const;
  bool sampled() const;
  const CheckResult* first_failure() const;
};

struct VerificationReport {
  std::string suite;
  std::string model;
  std::string strategy;
  unsigned schema_depth = 0;
  std::vector<AxiomResult> axioms;

  /// No axiom failed. Skipped axioms do not count as failures.
  bool passed() const;
  const AxiomResult* find(std::string_view id) const;
};

/// Evaluates both sides of an identity on every environment the strategy
/// produces, stopping at the first counterexample in enumeration order.
///
/// Throws UnsupportedSymbol when the model lacks a fragment the identity
/// uses and InputError for an exhaustive strategy on an infinite carrier.
CheckResult check_identity(const AlgebraModel& alg, const Identity& identity, const Strategy& strategy);

/// The first counterexample in the deterministic enumeration order.
std::optional<Env> find_counterexample(const AlgebraModel& alg, const Identity& identity, const Strategy& strategy);

/// Re-evaluates an identity at one environment; true when it fails there.
bool fails_at(const AlgebraModel& alg, const Identity& identity, const Env& env);

/// The environments a strategy draws for the given arity, in order, and
/// whether they are a sample of a larger grid.
struct EnvSource {
  std::vector<Value> domain;
  std::size_t arity = 0;
  std::size_t total = 0;
  bool random = false;
  bool sampled = false;
  std::uint64_t seed = 0;
  unsigned max_den = 0;
};
EnvSource env_source(const AlgebraModel& alg, std::size_t arity, const Strategy& strategy, std::string_view salt);

/// Fills env with the i-th environment of the source. Random tuples are
/// seeded per index, so any range can be replayed independently.
void env_at(const AlgebraModel& alg, const EnvSource& src, std::size_t i, Env& env);

std::uint64_t derive_seed(std::uint64_t seed, std::string_view salt);

}  // namespace mvm
