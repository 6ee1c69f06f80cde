#include "mvm/axioms.hpp"

#include <array>

#include "mvm/limit.hpp"

namespace mvm {

namespace {

const Term X = Term::var(0);
const Term Y = Term::var(1);
const Term Z = Term::var(2);

Term c(const Rational& t) { return Term::constant(t); }
Term op(const Term& a, const Term& b) { return Term::oplus(a, b); }
Term od(const Term& a, const Term& b) { return Term::odot(a, b); }
Term jn(const Term& a, const Term& b) { return Term::join(a, b); }
Term mt(const Term& a, const Term& b) { return Term::meet(a, b); }
Term h(const Term& a) { return Term::half(a); }
Term j(const Term& a) { return Term::cohalf(a); }

Identity eq(std::string id, Term l, Term r) { return {std::move(id), std::move(l), std::move(r), Comparison::eq}; }
Identity le(std::string id, Term l, Term r) { return {std::move(id), std::move(l), std::move(r), Comparison::leq}; }

std::string indexed(const std::string& base, unsigned n) { return base + "[n=" + std::to_string(n) + "]"; }

std::vector<Term> vars(std::size_t from, std::size_t count) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(Term::var(from + i));
  return out;
}

std::vector<AxiomSpec> mvm_axioms() {
  std::vector<AxiomSpec> out;
  out.push_back({"E1",
                 {eq("join-assoc", jn(X, jn(Y, Z)), jn(jn(X, Y), Z)), eq("join-comm", jn(X, Y), jn(Y, X)),
                  eq("meet-assoc", mt(X, mt(Y, Z)), mt(mt(X, Y), Z)), eq("meet-comm", mt(X, Y), mt(Y, X)),
                  eq("absorb-join", jn(X, mt(X, Y)), X), eq("absorb-meet", mt(X, jn(X, Y)), X),
                  eq("distributive", mt(X, jn(Y, Z)), jn(mt(X, Y), mt(X, Z)))},
                 {}});
  out.push_back({"E2",
                 {eq("oplus-zero", op(X, c(0)), X), eq("odot-one", od(X, c(1)), X),
                  eq("oplus-assoc", op(X, op(Y, Z)), op(op(X, Y), Z)), eq("oplus-comm", op(X, Y), op(Y, X)),
                  eq("odot-assoc", od(X, od(Y, Z)), od(od(X, Y), Z)), eq("odot-comm", od(X, Y), od(Y, X))},
                 {}});
  out.push_back({"E3",
                 {eq("oplus-over-join", op(X, jn(Y, Z)), jn(op(X, Y), op(X, Z))),
                  eq("oplus-over-meet", op(X, mt(Y, Z)), mt(op(X, Y), op(X, Z))),
                  eq("odot-over-join", od(X, jn(Y, Z)), jn(od(X, Y), od(X, Z))),
                  eq("odot-over-meet", od(X, mt(Y, Z)), mt(od(X, Y), od(X, Z)))},
                 {}});
  out.push_back({"E4", {eq("E4", sigma(1), sigma(3))}, {}});
  out.push_back({"E5", {eq("E5", sigma(2), sigma(4))}, {}});
  out.push_back({"E6", {eq("E6", op(od(X, Y), Z), jn(sigma(1), Z))}, {}});
  out.push_back({"E7", {eq("E7", od(op(X, Y), Z), mt(sigma(2), Z))}, {}});
  return out;
}

std::vector<Identity> flatten(const std::vector<AxiomSpec>& axioms) {
  std::vector<Identity> out;
  for (const auto& a : axioms)
    for (const auto& i : a.identities) out.push_back(i.id == a.id ? i : Identity{a.id + "." + i.id, i.lhs, i.rhs, i.cmp});
  return out;
}

std::vector<AxiomSpec> dyadic_axioms(unsigned depth) {
  std::vector<AxiomSpec> out;
  out.push_back({"DE'0", flatten(mvm_axioms()), {}});
  auto d = [](unsigned n) { return c(dyadic_unit(n, Pole::lower)); };
  auto u = [](unsigned n) { return c(dyadic_unit(n, Pole::upper)); };
  std::array<AxiomSpec, 6> fam{AxiomSpec{"DE'1", {}, {}}, AxiomSpec{"DE'2", {}, {}}, AxiomSpec{"DE'3", {}, {}},
                               AxiomSpec{"DE'4", {}, {}}, AxiomSpec{"DE'5", {}, {}}, AxiomSpec{"DE'6", {}, {}}};
  for (unsigned n = 0; n <= depth; ++n) {
    if (n >= 1) {
      fam[0].identities.push_back(eq(indexed("DE'1", n), op(d(n), d(n)), d(n - 1)));
      fam[1].identities.push_back(eq(indexed("DE'2", n), od(u(n), u(n)), u(n - 1)));
      fam[2].identities.push_back(eq(indexed("DE'3", n), od(d(n), d(n)), c(0)));
      fam[3].identities.push_back(eq(indexed("DE'4", n), op(u(n), u(n)), c(1)));
    }
    fam[4].identities.push_back(eq(indexed("DE'5", n), op(d(n), u(n)), c(1)));
    fam[5].identities.push_back(eq(indexed("DE'6", n), od(d(n), u(n)), c(0)));
  }
  for (auto& a : fam) out.push_back(std::move(a));
  return out;
}

std::vector<AxiomSpec> two_div_axioms() {
  std::vector<AxiomSpec> out;
  out.push_back({"TE0", flatten(mvm_axioms()), {}});
  out.push_back({"TE1", {eq("TE1", j(X), op(h(c(1)), h(X)))}, {}});
  out.push_back({"TE2", {eq("TE2", h(X), od(j(c(0)), j(X)))}, {}});
  out.push_back({"TE3", {eq("TE3", op(h(X), h(X)), X)}, {}});
  out.push_back({"TE4", {eq("TE4", od(j(X), j(X)), X)}, {}});
  out.push_back({"TE5", {eq("TE5", h(op(h(X), h(Y))), op(h(h(X)), h(h(Y))))}, {}});
  out.push_back({"TE6", {eq("TE6", j(od(j(X), j(Y))), od(j(j(X)), j(j(Y))))}, {}});
  return out;
}

/// λ(x, x, …) = x with the constant sequence written as k copies then the tail.
std::vector<Identity> constant_lambda(const std::string& id, unsigned depth) {
  std::vector<Identity> out;
  for (unsigned k = 0; k <= depth; ++k)
    out.push_back(eq(indexed(id, k), Term::lambda(std::vector<Term>(k, X), X), X));
  return out;
}

/// λ(τ₀(x,y), …, τ_{K−1}(x,y), y, y, …) = y.
std::vector<Identity> tau_lambda(const std::string& id, unsigned depth, ConstStyle style) {
  std::vector<Identity> out;
  for (unsigned k = 1; k <= depth; ++k) {
    std::vector<Term> prefix;
    for (unsigned i = 0; i < k; ++i) prefix.push_back(tau(i, X, Y, style));
    out.push_back(eq(indexed(id, k), Term::lambda(prefix, Y), Y));
  }
  return out;
}

/// Certified containment of y in the LDE3 sandwich of the τ-sequence, with
/// the sandwich width shrinking as 1/2^{N−2}.
std::vector<CheckResult> tau_interval_check(const AlgebraModel& alg, const Strategy& strategy) {
  CheckResult r;
  r.id = "LDE2.interval";
  if (!alg.supports(Fragment::lambda) || alg.zero().size() != 1) {
    r.status = Status::skipped;
    r.reason = "interval containment needs a scalar model with lambda";
    return {r};
  }
  constexpr unsigned kMaxN = 20;
  const unsigned exponent = strategy.kind == Strategy::Kind::grid ? strategy.grid_exponent : 3;
  const auto grid = alg.grid(exponent);
  for (const auto& xv : grid)
    for (const auto& yv : grid) {
      const Rational& x = xv.scalar();
      const Rational& y = yv.scalar();
      std::vector<Rational> prefix;
      for (unsigned n = 1; n <= kMaxN; ++n) {
        prefix.push_back(tau_value(n - 1, x, y));
        const auto iv = lambda_interval(prefix, n);
        ++r.tuples;
        const bool narrow = n < 2 || iv.width() <= pow2_inv(n - 2);
        if (!iv.contains(y) || !narrow) {
          r.status = Status::fail;
          r.counterexample = Env{xv, yv};
          r.reason = "N=" + std::to_string(n) + ": [" + iv.lo.str() + ", " + iv.hi.str() + "]";
          return {r};
        }
      }
    }
  return {r};
}

std::vector<AxiomSpec> limit_dyadic_axioms(unsigned depth) {
  std::vector<AxiomSpec> out;
  out.push_back({"LDE0", flatten(dyadic_axioms(depth)), {}});
  out.push_back({"LDE1", constant_lambda("LDE1", depth), {}});
  out.push_back({"LDE2", tau_lambda("LDE2", depth, ConstStyle::dyadic), tau_interval_check});
  AxiomSpec lde3{"LDE3", {}, {}};
  for (unsigned n = 1; n <= depth; ++n) {
    const auto xs = vars(0, n);
    const Term m = mu(xs, ConstStyle::dyadic);
    const Term lam = Term::lambda(xs, Term::var(n));
    lde3.identities.push_back(le(indexed("LDE3.lower", n), od(m, c(dyadic_unit(n - 1, Pole::upper))), lam));
    lde3.identities.push_back(le(indexed("LDE3.upper", n), lam, op(m, c(dyadic_unit(n - 1, Pole::lower)))));
  }
  out.push_back(std::move(lde3));
  return out;
}

std::vector<AxiomSpec> limit_two_div_axioms(unsigned depth) {
  std::vector<AxiomSpec> out;
  out.push_back({"LTE0", flatten(two_div_axioms()), {}});
  out.push_back({"LTE1", constant_lambda("LTE1", depth), {}});
  out.push_back({"LTE2", tau_lambda("LTE2", depth, ConstStyle::halving), {}});
  const auto H = ConstStyle::halving;
  AxiomSpec lte3{"LTE3", {}, {}};
  AxiomSpec lte5{"LTE5", {}, {}};
  AxiomSpec lte6{"LTE6", {}, {}};
  for (unsigned k = 1; k <= depth; ++k) {
    const auto xs = vars(0, k);
    const Term tail = Term::var(k);
    const Term lam = Term::lambda(xs, tail);
    std::vector<Term> mus;
    for (unsigned i = 1; i <= k; ++i) mus.push_back(mu(std::span<const Term>(xs).first(i), H));
    lte3.identities.push_back(eq(indexed("LTE3", k), lam, Term::lambda(mus, tail)));
    if (k < 2) continue;
    std::vector<Term> doubled;
    std::vector<Term> squared;
    for (unsigned i = 2; i <= k; ++i) {
      doubled.push_back(op(mus[i - 1], mus[i - 1]));
      squared.push_back(od(mus[i - 1], mus[i - 1]));
    }
    lte5.identities.push_back(eq(indexed("LTE5", k), op(lam, lam), Term::lambda(doubled, op(lam, lam))));
    lte6.identities.push_back(eq(indexed("LTE6", k), od(lam, lam), Term::lambda(squared, od(lam, lam))));
  }
  const Term m2 = mu(std::vector<Term>{X, Y}, H);
  const Term lam3 = Term::lambda({X, Y}, Z);
  AxiomSpec lte4{"LTE4",
                 {le("LTE4.lower", od(m2, j(c(0))), lam3), le("LTE4.upper", lam3, op(m2, h(c(1))))},
                 {}};
  out.push_back(std::move(lte3));
  out.push_back(std::move(lte4));
  out.push_back(std::move(lte5));
  out.push_back(std::move(lte6));
  return out;
}

}  // namespace

std::string_view suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::mvm: return "mvm";
    case SuiteId::ulm: return "ulm";
    case SuiteId::dyadic_mvm: return "dyadic";
    case SuiteId::two_div: return "two-div";
    case SuiteId::limit_dyadic: return "limit-dyadic";
    case SuiteId::limit_two_div: return "limit-two-div";
  }
  return "?";
}

SuiteId parse_suite(std::string_view text) {
  for (auto id : {SuiteId::mvm, SuiteId::ulm, SuiteId::dyadic_mvm, SuiteId::two_div, SuiteId::limit_dyadic,
                  SuiteId::limit_two_div})
    if (suite_name(id) == text) return id;
  throw InputError("unknown suite '" + std::string(text) +
                   "' (expected mvm, ulm, dyadic, two-div, limit-dyadic or limit-two-div)");
}

std::set<Fragment> suite_fragments(SuiteId id) {
  switch (id) {
    case SuiteId::mvm:
    case SuiteId::ulm: return {Fragment::mvm_core};
    case SuiteId::dyadic_mvm: return {Fragment::mvm_core, Fragment::dyadic_constants};
    case SuiteId::two_div: return {Fragment::mvm_core, Fragment::two_div};
    case SuiteId::limit_dyadic: return {Fragment::mvm_core, Fragment::dyadic_constants, Fragment::lambda};
    case SuiteId::limit_two_div: return {Fragment::mvm_core, Fragment::two_div, Fragment::lambda};
  }
  return {};
}

std::vector<AxiomSpec> suite_axioms(SuiteId id, unsigned depth) {
  switch (id) {
    case SuiteId::mvm: return mvm_axioms();
    case SuiteId::dyadic_mvm: return dyadic_axioms(depth);
    case SuiteId::two_div: return two_div_axioms();
    case SuiteId::limit_dyadic: return limit_dyadic_axioms(depth);
    case SuiteId::limit_two_div: return limit_two_div_axioms(depth);
    case SuiteId::ulm: break;
  }
  throw InputError("the ulm suite runs on l-monoids, not on MV-monoidal models");
}

std::vector<Identity> two_div_facts() {
  return {eq("h(0)=0", h(c(0)), c(0)), eq("j(1)=1", j(c(1)), c(1)), eq("h(1)=j(0)", h(c(1)), j(c(0)))};
}

std::vector<Identity> sigma_permutation_identities() {
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const std::array<Term, 3> v{X, Y, Z};
  std::vector<Identity> out;
  for (int i = 1; i <= 4; ++i)
    for (const auto& p : perms) {
      const std::string id = "sigma" + std::to_string(i) + "(x" + std::to_string(p[0] + 1) + ",x" +
                             std::to_string(p[1] + 1) + ",x" + std::to_string(p[2] + 1) + ")";
      out.push_back(eq(id, sigma(i, v[p[0]], v[p[1]], v[p[2]]), sigma(1)));
    }
  return out;
}

VerificationReport check_suite(const AlgebraModel& alg, SuiteId id, const Strategy& strategy) {
  for (Fragment f : suite_fragments(id))
    if (!alg.supports(f))
      throw UnsupportedSymbol(alg.name() + " does not interpret the " + std::string(fragment_name(f)) +
                              " fragment needed by the " + std::string(suite_name(id)) + " suite");
  VerificationReport rep;
  rep.suite = std::string(suite_name(id));
  rep.model = alg.name();
  rep.strategy = strategy.str();
  rep.schema_depth = strategy.schema_depth;
  for (const auto& spec : suite_axioms(id, strategy.schema_depth)) {
    AxiomResult ax{spec.id, {}};
    for (const auto& identity : spec.identities) ax.checks.push_back(check_identity(alg, identity, strategy));
    if (spec.extra)
      for (auto& r : spec.extra(alg, strategy)) ax.checks.push_back(std::move(r));
    rep.axioms.push_back(std::move(ax));
  }
  if (id == SuiteId::two_div || id == SuiteId::limit_two_div) {
    AxiomResult facts{"derived", {}};
    for (const auto& identity : two_div_facts()) facts.checks.push_back(check_identity(alg, identity, strategy));
    rep.axioms.push_back(std::move(facts));
  }
  return rep;
}

unsigned long check_order_unit(const LMonoidModel& m, const Value& x) {
  if (!m.contains(x)) throw InputError(x.str() + " is not an element of " + m.name());
  const unsigned long n = m.order_unit(x);
  auto within = [&](unsigned long k) { return m.leq(m.times(k, m.neg_unit()), x) && m.leq(x, m.times(k, m.unit())); };
  if (n == 0 || !within(n) || (n > 1 && within(n - 1)))
    throw std::logic_error(m.name() + ": order unit witness " + std::to_string(n) + " for " + x.str() + " is wrong");
  return n;
}

VerificationReport check_ulm(const LMonoidModel& m, unsigned level) {
  const std::function<std::string(const Value&)> show = [](const Value& v) { return v.str(); };
  return check_ulm(m, m.samples(level), m.name(), show);
}

}  // namespace mvm
