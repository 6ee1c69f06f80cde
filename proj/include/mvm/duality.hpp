#pragma once

#include <cstdint>
#include <vector>

#include "mvm/limit.hpp"
#include "mvm/model.hpp"
#include "mvm/rational.hpp"
#include "mvm/verify.hpp"

namespace mvm {

/// y ⊙ (1−t)^A ≤ x ≤ y ⊕ t^A, with constants taken from the model's envelope.
/// Throws UnsupportedSymbol when the model has no dyadic envelope.
bool within_distance(const AlgebraModel& alg, const Value& x, const Value& y, const Rational& t);

/// Checks within_distance at the least dyadic k/2^m ≥ d and its failure at
/// the greatest dyadic k/2^m < d, for every m ≤ exponent. Throws logic_error
/// naming the offending t.
void certify_distance(const AlgebraModel& alg, const Value& x, const Value& y, const Rational& d,
                      unsigned exponent = 16);

/// The infimum of dyadic t with within_distance(x, y, t). Uses the model's
/// closed form when it has one, otherwise |ess x − ess y| on totally ordered
/// models with exact ess, and certifies the result either way.
Rational dist_int(const AlgebraModel& alg, const Value& x, const Value& y);

/// Dyadic bisection on t alone: [lo, hi] with hi the least k/2^exponent
/// satisfying the condition.
CertifiedInterval dist_bisect(const AlgebraModel& alg, const Value& x, const Value& y, unsigned exponent = 32);

/// dist_int(x, y) > 0 for all distinct pairs (i, j), j < i, of elements.
/// A failure carries the pair as its counterexample.
VerificationReport archimedean_check(const AlgebraModel& alg, const std::vector<Value>& elements);

/// Symmetry, dist(x,x) = 0 and the triangle inequality on seeded triples.
VerificationReport check_pseudometric(const AlgebraModel& alg, const std::vector<Value>& elements,
                                      std::size_t triples, std::uint64_t seed = kDefaultSeed);

struct EssResult {
  Rational lo;
  Rational hi;
  bool exact = false;  // x equals lo^A

  /// The dyadic with least denominator in [lo, hi].
  Rational estimate() const;
};

/// sup I_x = inf S_x by bisection against dyadic constants, exact when x is
/// itself a constant and otherwise to width at most 2^-precision. Requires
/// compare_constant; throws InputError on a trivial algebra.
EssResult ess_value(const AlgebraModel& alg, const Value& x, unsigned precision = 32);

}  // namespace mvm
