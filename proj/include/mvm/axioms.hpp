#pragma once

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mvm/lmonoid.hpp"
#include "mvm/verify.hpp"

namespace mvm {

enum class SuiteId { mvm, ulm, dyadic_mvm, two_div, limit_dyadic, limit_two_div };

/// mvm, ulm, dyadic, two-div, limit-dyadic, limit-two-div.
std::string_view suite_name(SuiteId id);
SuiteId parse_suite(std::string_view text);
/// Fragments an algebra must interpret to run the suite (not used for ulm).
std::set<Fragment> suite_fragments(SuiteId id);

/// One axiom of a suite: a list of identities, or a check that does not
/// fit the identity shape (interval containment for LDE2).
struct AxiomSpec {
  std::string id;
  std::vector<Identity> identities;
  std::function<std::vector<CheckResult>(const AlgebraModel&, const Strategy&)> extra;
};

/// Axioms of an equational suite, indexed families instantiated for
/// n = 1..depth. Throws InputError for the ulm suite, which is checked on
/// ℓ-monoids instead.
std::vector<AxiomSpec> suite_axioms(SuiteId id, unsigned depth);

/// h(0) = 0, j(1) = 1 and h(1) = j(0).
std::vector<Identity> two_div_facts();

/// σᵢ(x_τ(1), x_τ(2), x_τ(3)) = σ₁(x₁, x₂, x₃) for every i and permutation τ.
std::vector<Identity> sigma_permutation_identities();

/// Runs every axiom of the suite. Throws UnsupportedSymbol when the model
/// lacks one of the suite's fragments.
VerificationReport check_suite(const AlgebraModel& alg, SuiteId id, const Strategy& strategy);

/// Least n ≥ 1 with −n·1 ≤ x ≤ n·1, with the witness and its minimality re-checked.
unsigned long check_order_unit(const LMonoidModel& m, const Value& x);

/// M0–M3 over sampled elements of any ℓ-monoid-shaped structure. M must
/// provide add, join, meet, zero, unit, neg_unit, leq, times and order_unit.
template <class M, class Elem>
VerificationReport check_ulm(const M& m, const std::vector<Elem>& samples, std::string model_name,
                             const std::function<std::string(const Elem&)>& show);

VerificationReport check_ulm(const LMonoidModel& m, unsigned level);

// ---------------------------------------------------------------------------

namespace detail {

template <class Elem>
CheckResult law(std::string id, const std::vector<Elem>& s, std::size_t arity,
                const std::function<bool(const std::vector<const Elem*>&)>& ok,
                const std::function<std::string(const Elem&)>& show) {
  CheckResult r;
  r.id = std::move(id);
  std::vector<std::size_t> idx(arity, 0);
  std::vector<const Elem*> args(arity);
  if (s.empty() && arity > 0) return r;
  for (;;) {
    for (std::size_t k = 0; k < arity; ++k) args[k] = &s[idx[k]];
    ++r.tuples;
    if (!ok(args)) {
      r.status = Status::fail;
      std::string where;
      for (std::size_t k = 0; k < arity; ++k) where += (k ? ", x" : "x") + std::to_string(k + 1) + "=" + show(*args[k]);
      r.reason = "fails at " + where;
      return r;
    }
    std::size_t k = arity;
    while (k > 0 && ++idx[k - 1] == s.size()) idx[--k] = 0;
    if (k == 0) return r;
  }
}

}  // namespace detail

template <class M, class Elem>
VerificationReport check_ulm(const M& m, const std::vector<Elem>& samples, std::string model_name,
                             const std::function<std::string(const Elem&)>& show) {
  using Args = std::vector<const Elem*>;
  VerificationReport rep;
  rep.suite = "ulm";
  rep.model = std::move(model_name);
  rep.strategy = "samples:" + std::to_string(samples.size());
  auto law = [&](AxiomResult& ax, std::string id, std::size_t arity, std::function<bool(const Args&)> ok) {
    ax.checks.push_back(detail::law<Elem>(std::move(id), samples, arity, ok, show));
  };

  AxiomResult m0{"M0", {}};
  law(m0, "join-assoc", 3, [&](const Args& a) {
    return m.join(*a[0], m.join(*a[1], *a[2])) == m.join(m.join(*a[0], *a[1]), *a[2]);
  });
  law(m0, "join-comm", 2, [&](const Args& a) { return m.join(*a[0], *a[1]) == m.join(*a[1], *a[0]); });
  law(m0, "meet-assoc", 3, [&](const Args& a) {
    return m.meet(*a[0], m.meet(*a[1], *a[2])) == m.meet(m.meet(*a[0], *a[1]), *a[2]);
  });
  law(m0, "meet-comm", 2, [&](const Args& a) { return m.meet(*a[0], *a[1]) == m.meet(*a[1], *a[0]); });
  law(m0, "absorb-join", 2, [&](const Args& a) { return m.join(*a[0], m.meet(*a[0], *a[1])) == *a[0]; });
  law(m0, "absorb-meet", 2, [&](const Args& a) { return m.meet(*a[0], m.join(*a[0], *a[1])) == *a[0]; });
  law(m0, "distributive", 3, [&](const Args& a) {
    return m.meet(*a[0], m.join(*a[1], *a[2])) == m.join(m.meet(*a[0], *a[1]), m.meet(*a[0], *a[2]));
  });
  law(m0, "add-assoc", 3, [&](const Args& a) {
    return m.add(*a[0], m.add(*a[1], *a[2])) == m.add(m.add(*a[0], *a[1]), *a[2]);
  });
  law(m0, "add-comm", 2, [&](const Args& a) { return m.add(*a[0], *a[1]) == m.add(*a[1], *a[0]); });
  law(m0, "add-zero", 1, [&](const Args& a) { return m.add(*a[0], m.zero()) == *a[0]; });
  law(m0, "add-over-join", 3, [&](const Args& a) {
    return m.add(*a[0], m.join(*a[1], *a[2])) == m.join(m.add(*a[0], *a[1]), m.add(*a[0], *a[2]));
  });
  law(m0, "add-over-meet", 3, [&](const Args& a) {
    return m.add(*a[0], m.meet(*a[1], *a[2])) == m.meet(m.add(*a[0], *a[1]), m.add(*a[0], *a[2]));
  });
  rep.axioms.push_back(std::move(m0));

  AxiomResult m1{"M1", {}};
  law(m1, "neg-unit-left", 0, [&](const Args&) { return m.add(m.neg_unit(), m.unit()) == m.zero(); });
  law(m1, "neg-unit-right", 0, [&](const Args&) { return m.add(m.unit(), m.neg_unit()) == m.zero(); });
  rep.axioms.push_back(std::move(m1));

  AxiomResult m2{"M2", {}};
  law(m2, "neg-unit-below-zero", 0, [&](const Args&) { return m.leq(m.neg_unit(), m.zero()); });
  law(m2, "zero-below-unit", 0, [&](const Args&) { return m.leq(m.zero(), m.unit()); });
  rep.axioms.push_back(std::move(m2));

  AxiomResult m3{"M3", {}};
  law(m3, "order-unit", 1, [&](const Args& a) {
    const unsigned long n = m.order_unit(*a[0]);
    if (n == 0) return false;
    const bool bounded = m.leq(m.times(n, m.neg_unit()), *a[0]) && m.leq(*a[0], m.times(n, m.unit()));
    const bool least = n == 1 || !(m.leq(m.times(n - 1, m.neg_unit()), *a[0]) && m.leq(*a[0], m.times(n - 1, m.unit())));
    return bounded && least;
  });
  rep.axioms.push_back(std::move(m3));
  return rep;
}

}  // namespace mvm
