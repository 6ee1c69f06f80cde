#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mvm/rational.hpp"

namespace mvm {

/// τₙ(x, y) = (x ∧ (y ⊕ 1/2ⁿ)) ∨ (y ⊙ (1 − 1/2ⁿ)) on [0,1].
Rational tau_value(unsigned n, const Rational& x, const Rational& y);

/// μ_N(x₁, …, x_N) by the iterative recursion. Throws InputError on an empty prefix.
Rational mu_fold(std::span<const Rational> prefix);
/// (μ₁, μ₂, …, μ_N) for the given prefix.
std::vector<Rational> mu_image(std::span<const Rational> prefix);

/// xₙ ⊙ (1 − 1/2ⁿ) ≤ xₙ₊₁ ≤ xₙ ⊕ 1/2ⁿ at every adjacent index (1-based),
/// including the step from the last prefix element into the tail.
bool is_2cauchy(std::span<const Rational> prefix, const std::optional<Rational>& tail = std::nullopt);

/// Exact λ of prefix, tail, tail, ...: the tail clamped into
/// [μ_N ⊙ (1 − 1/2^{N−1}), μ_N ⊕ 1/2^{N−1}], or the tail itself when N = 0.
Rational lambda_exact(std::span<const Rational> prefix, const Rational& tail);

struct CertifiedInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
};

/// The LDE3 sandwich around μ_N of the first N prefix elements.
CertifiedInterval lambda_interval(std::span<const Rational> prefix, unsigned n);

enum class Doubling { oplus, odot };

/// Applies x ↦ x⊕x or x ↦ x⊙x on [0,1], first letter first.
Rational apply_word(std::span<const Doubling> word, const Rational& x);

struct PiecewiseProfile {
  unsigned n = 0;
  unsigned long k = 0;

  /// The interpolant through (k/2ⁿ, 0) and ((k+1)/2ⁿ, 1), clipped to [0,1].
  Rational interpolant(const Rational& x) const;
};

/// Locates k by scanning breakpoints for the rising segment of the word's map.
PiecewiseProfile piecewise_profile(std::span<const Doubling> word);

/// Exact agreement of the word's map with the interpolant at every
/// breakpoint i/2ⁿ and at each extra sample.
bool check_profile(std::span<const Doubling> word, const PiecewiseProfile& profile,
                   std::span<const Rational> samples = {});

}  // namespace mvm
