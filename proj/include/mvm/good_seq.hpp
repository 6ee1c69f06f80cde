#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mvm/finite_algebra.hpp"
#include "mvm/lmonoid.hpp"
#include "mvm/model.hpp"
#include "mvm/verify.hpp"

namespace mvm {

/// x₀ ⊕ x₁ = x₀ and x₀ ⊙ x₁ = x₁.
bool is_good_pair(const AlgebraModel& alg, const Value& x0, const Value& x1);

/// A good ℤ-sequence in canonical form: 1 below offset, then values, then 0.
/// The value list never starts with 1 nor ends with 0, so equality of
/// representations is equality of the denoted sequences.
struct GoodZSeq {
  long offset = 0;
  std::vector<Value> values;

  /// One past the last listed index.
  long end() const { return offset + static_cast<long>(values.size()); }
  Value at(const AlgebraModel& alg, long k) const;
  /// "@offset [v1, v2]" with values in the model's format.
  std::string str(const AlgebraModel& alg) const;

  friend bool operator==(const GoodZSeq&, const GoodZSeq&) = default;
  friend auto operator<=>(const GoodZSeq&, const GoodZSeq&) = default;
};

/// Validates goodness of every adjacent pair (including the boundary pairs
/// with the surrounding 1s and 0s) and trims. Throws InputError naming the
/// first index k at which (seq(k), seq(k+1)) is not good.
GoodZSeq gz_canonicalize(const AlgebraModel& alg, long offset, std::vector<Value> values);

/// Parses "@offset [v1, v2, ...]".
GoodZSeq gz_parse(const AlgebraModel& alg, std::string_view text);

/// The integer k: 1 below k, 0 from k on.
GoodZSeq gz_integer(long k);

/// (a+b)(n) = ⨀ₖ a(k) ⊕ b(n−k). With cross_check, every index is also
/// computed as ⨁ₖ a(k) ⊙ b(n−k−1) and a disagreement throws logic_error.
GoodZSeq gz_add(const AlgebraModel& alg, const GoodZSeq& a, const GoodZSeq& b, bool cross_check = true);
/// The ⨁ form on its own.
GoodZSeq gz_add_oplus_form(const AlgebraModel& alg, const GoodZSeq& a, const GoodZSeq& b);

/// Pointwise join or meet.
GoodZSeq gz_lattice(const AlgebraModel& alg, BinOp op, const GoodZSeq& a, const GoodZSeq& b);
bool gz_leq(const AlgebraModel& alg, const GoodZSeq& a, const GoodZSeq& b);

/// t at offset ⌊t⌋ with the single value (t − ⌊t⌋)^A.
GoodZSeq gz_constant(const AlgebraModel& alg, const Rational& t);

/// The one-step sequence (x) at offset 0.
GoodZSeq eta(const AlgebraModel& alg, const Value& x);

/// An integer in [−2, 2] plus up to max_terms one-step sequences of random
/// elements. The support is at most max_terms wide.
GoodZSeq random_good_sequence(const AlgebraModel& alg, std::mt19937_64& rng, std::size_t max_terms, unsigned max_den);

/// ζ_M(x)(n) = ((x − n) ∨ 0) ∧ 1, a good sequence over Γ(M).
GoodZSeq zeta(const LMonoidModel& m, const Value& x);
/// θ_M(s) = offset + Σ values, computed in M.
Value theta(const LMonoidModel& m, const GoodZSeq& s);

/// The y with x ⊕ y = 1 and x ⊙ y = 0, searched over the finite carrier or
/// over grid(exponent) for infinite models.
std::optional<Value> mv_complement(const AlgebraModel& alg, const Value& x, unsigned exponent = 6);

/// Ξ(A): good ℤ-sequences over A as a unital ℓ-monoid.
class XiAlgebra {
 public:
  explicit XiAlgebra(const AlgebraModel& base) : a_(base) {}

  const AlgebraModel& base() const { return a_; }
  GoodZSeq add(const GoodZSeq& x, const GoodZSeq& y) const { return gz_add(a_, x, y); }
  GoodZSeq join(const GoodZSeq& x, const GoodZSeq& y) const { return gz_lattice(a_, BinOp::join, x, y); }
  GoodZSeq meet(const GoodZSeq& x, const GoodZSeq& y) const { return gz_lattice(a_, BinOp::meet, x, y); }
  GoodZSeq zero() const { return gz_integer(0); }
  GoodZSeq unit() const { return gz_integer(1); }
  GoodZSeq neg_unit() const { return gz_integer(-1); }
  bool leq(const GoodZSeq& x, const GoodZSeq& y) const { return meet(x, y) == x; }
  GoodZSeq times(unsigned long n, const GoodZSeq& u) const;
  /// Least n ≥ 1 with −n ≤ x ≤ n, read off the canonical support.
  unsigned long order_unit(const GoodZSeq& x) const;

  /// The MV-monoidal operations on Γ(Ξ(A)): (x+y) ∧ 1 and (x+y−1) ∨ 0.
  GoodZSeq gamma_oplus(const GoodZSeq& x, const GoodZSeq& y) const;
  GoodZSeq gamma_odot(const GoodZSeq& x, const GoodZSeq& y) const;

  /// Every good sequence whose listed values fit in a window of the given
  /// width starting at each offset in [lo, hi], values from the carrier
  /// (or grid(exponent) for infinite models).
  std::vector<GoodZSeq> enumerate(long lo, long hi, std::size_t width, unsigned exponent = 2) const;

 private:
  const AlgebraModel& a_;
};

/// The sequence n ↦ ¬s(−n−1), or nothing when some value of s has no MV
/// complement. When it exists it is the additive inverse of s.
std::optional<GoodZSeq> gz_negate(const AlgebraModel& alg, const GoodZSeq& s);

/// θ∘ζ = id on the samples, ζ∘θ = id on good sequences over the unit
/// interval grid, and ζ preserving +, ∨, ∧, 0, 1 and −1.
VerificationReport check_equiv_roundtrip(const LMonoidModel& m, const std::vector<Value>& samples,
                                         const std::vector<GoodZSeq>& sequences, const AlgebraModel& gamma);

/// η injective, η onto one-step sequences, η(x) ⊕ η(y) = η(x ⊕ y) and
/// dually, on a finite A; goodness of all sums of sequences of support at
/// most width; and, when every element has a complement, additive inverses
/// for every enumerated element.
VerificationReport check_equiv_roundtrip(const AlgebraModel& alg, std::size_t width = 3);

}  // namespace mvm
