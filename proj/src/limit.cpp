#include "mvm/limit.hpp"

#include <stdexcept>
#include <string>

namespace mvm {

namespace {

const Rational kZero(0);
const Rational kOne(1);

Rational tplus(const Rational& a, const Rational& b) {
  Rational s = a + b;
  return s > kOne ? kOne : s;
}
Rational tdot(const Rational& a, const Rational& b) {
  Rational s = a + b;
  s -= kOne;
  return s.sign() < 0 ? kZero : s;
}

}  // namespace

Rational tau_value(unsigned n, const Rational& x, const Rational& y) {
  const Rational d = pow2_inv(n);
  const Rational hi = tplus(y, d);
  if (x > hi) return hi;
  const Rational lo = tdot(y, kOne - d);
  return x < lo ? lo : x;
}

std::vector<Rational> mu_image(std::span<const Rational> prefix) {
  if (prefix.empty()) throw InputError("mu_fold needs a non-empty prefix");
  std::vector<Rational> out;
  out.reserve(prefix.size());
  out.push_back(prefix[0]);
  for (std::size_t n = 2; n <= prefix.size(); ++n)
    out.push_back(tau_value(static_cast<unsigned>(n - 1), prefix[n - 1], out.back()));
  return out;
}

Rational mu_fold(std::span<const Rational> prefix) {
  if (prefix.empty()) throw InputError("mu_fold needs a non-empty prefix");
  Rational m = prefix[0];
  for (std::size_t n = 2; n <= prefix.size(); ++n) m = tau_value(static_cast<unsigned>(n - 1), prefix[n - 1], m);
  return m;
}

bool is_2cauchy(std::span<const Rational> prefix, const std::optional<Rational>& tail) {
  std::vector<Rational> seq(prefix.begin(), prefix.end());
  if (tail) seq.push_back(*tail);
  for (std::size_t n = 1; n < seq.size(); ++n) {
    const Rational d = pow2_inv(static_cast<unsigned>(n));
    const Rational& cur = seq[n - 1];
    const Rational& next = seq[n];
    if (tdot(cur, kOne - d) > next || next > tplus(cur, d)) return false;
  }
  return true;
}

CertifiedInterval lambda_interval(std::span<const Rational> prefix, unsigned n) {
  if (n == 0 || n > prefix.size())
    throw InputError("interval index " + std::to_string(n) + " outside 1.." + std::to_string(prefix.size()));
  const Rational m = mu_fold(prefix.first(n));
  const Rational d = pow2_inv(n - 1);
  return {tdot(m, kOne - d), tplus(m, d)};
}

Rational lambda_exact(std::span<const Rational> prefix, const Rational& tail) {
  if (prefix.empty()) return tail;
  const auto box = lambda_interval(prefix, static_cast<unsigned>(prefix.size()));
  return max(min(tail, box.hi), box.lo);
}

Rational apply_word(std::span<const Doubling> word, const Rational& x) {
  Rational v = x;
  for (auto d : word) v = d == Doubling::oplus ? tplus(v, v) : tdot(v, v);
  return v;
}

Rational PiecewiseProfile::interpolant(const Rational& x) const {
  mpz_class scale = 1;
  scale <<= n;
  const Rational s(mpq_class(scale, 1));
  const Rational kk(mpq_class(mpz_class(k), 1));
  return unit_clip(s * x - kk);
}

PiecewiseProfile piecewise_profile(std::span<const Doubling> word) {
  if (word.empty()) throw InputError("doubling word must be non-empty");
  if (word.size() > 40) throw InputError("doubling word longer than 40 letters");
  const unsigned n = static_cast<unsigned>(word.size());
  const unsigned long segments = 1UL << n;
  const Rational step = pow2_inv(n);
  Rational left = apply_word(word, kZero);
  for (unsigned long i = 0; i < segments; ++i) {
    const Rational right = apply_word(word, step * Rational(static_cast<long>(i + 1)));
    if (left.is_zero() && right == kOne) return {n, i};
    left = right;
  }
  throw std::logic_error("doubling word has no rising segment");
}

bool check_profile(std::span<const Doubling> word, const PiecewiseProfile& profile, std::span<const Rational> samples) {
  const unsigned long segments = 1UL << profile.n;
  const Rational step = pow2_inv(profile.n);
  for (unsigned long i = 0; i <= segments; ++i) {
    const Rational x = step * Rational(static_cast<long>(i));
    if (apply_word(word, x) != profile.interpolant(x)) return false;
  }
  for (const auto& x : samples)
    if (apply_word(word, x) != profile.interpolant(x)) return false;
  return true;
}

}  // namespace mvm
