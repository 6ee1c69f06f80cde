#include "battery.hpp"

#include <chrono>
#include <random>
#include <set>

#include "mvm/axioms.hpp"
#include "mvm/congruence.hpp"
#include "mvm/corel.hpp"
#include "mvm/duality.hpp"
#include "mvm/good_seq.hpp"
#include "mvm/limit.hpp"
#include "mvm/lmonoid.hpp"
#include "mvm/models.hpp"
#include "mvm/poset.hpp"

namespace mvm {

namespace {

CheckResult verdict(std::string id, std::size_t tuples, std::optional<std::string> failure = std::nullopt) {
  CheckResult r;
  r.id = std::move(id);
  r.tuples = tuples;
  if (failure) {
    r.status = Status::fail;
    r.reason = std::move(*failure);
  }
  return r;
}

/// Folds a whole report into one check named after it.
CheckResult summarize(const VerificationReport& rep) {
  std::size_t tuples = 0;
  for (const auto& ax : rep.axioms) tuples += ax.tuples();
  for (const auto& ax : rep.axioms)
    if (const auto* f = ax.first_failure()) {
      auto r = *f;
      r.id = rep.model + " " + ax.id + " " + f->id;
      return r;
    }
  auto r = verdict(rep.suite + " on " + rep.model, tuples);
  for (const auto& ax : rep.axioms) r.sampled |= ax.sampled();
  return r;
}

Strategy strategy(const std::string& text, unsigned jobs, std::uint64_t seed) {
  Strategy s = Strategy::parse(text);
  s.jobs = jobs;
  s.seed = seed;
  return s;
}

AxiomResult worked_mu() {
  AxiomResult ax{"A1", {}};
  const std::vector<Rational> three{Rational(1, 10), Rational(1, 2), Rational(0)};
  const std::vector<Rational> four{Rational(1, 10), Rational(1, 2), Rational(0), Rational(3, 10)};
  const Rational m3 = mu_fold(three), m4 = mu_fold(four);
  ax.checks.push_back(verdict("mu3", 1, m3 == Rational(1, 4) ? std::nullopt : std::optional("got " + m3.str())));
  ax.checks.push_back(verdict("mu4", 1, m4 == Rational(3, 10) ? std::nullopt : std::optional("got " + m4.str())));
  return ax;
}

AxiomResult four_structures() {
  AxiomResult ax{"A2", {}};
  const auto rep = check_effectiveness(FinPoset::chain(2));
  const std::vector<std::uint64_t> expected{0b00, 0b01, 0b10, 0b11};
  std::optional<std::string> bad;
  if (rep.equivalence_structures != 4) bad = std::to_string(rep.equivalence_structures) + " equivalence structures";
  else if (rep.subsets != expected) bad = "subsets differ from the four subsets of the chain";
  else if (!rep.pass()) bad = "a structure is not of the form Y";
  ax.checks.push_back(verdict("chain2", rep.structures, bad));
  return ax;
}

AxiomResult effectiveness() {
  AxiomResult ax{"A3", {}};
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& p : all_posets(n)) {
      const auto rep = check_effectiveness(p);
      ax.checks.push_back(verdict("poset " + p.canonical_key(), rep.equivalence_structures,
                                  rep.pass() ? std::nullopt : std::optional<std::string>("not all effective")));
    }
  return ax;
}

AxiomResult lex_counterexample() {
  AxiomResult ax{"A4", {}};
  const auto g = gamma_of(lmonoid_builtin("lex-z-flat"));
  const Value a{Rational(0), Rational(1)}, b{Rational(0), Rational(0)};
  ax.checks.push_back(verdict("oplus", 1, g->oplus(a, a) == a ? std::nullopt : std::optional<std::string>("differs")));
  ax.checks.push_back(verdict("odot", 1, g->odot(a, a) == b ? std::nullopt : std::optional<std::string>("differs")));
  const Rational d = dist_int(*g, a, b);
  ax.checks.push_back(verdict("dist", 1, d.is_zero() ? std::nullopt : std::optional("dist = " + d.str())));
  const auto arch = archimedean_check(*g, *g->finite_carrier());
  const auto* f = arch.axioms.front().first_failure();
  ax.checks.push_back(verdict("archimedean-fails", 1,
                              f && f->counterexample == Env{a, b} ? std::nullopt
                                                                  : std::optional<std::string>("no witness ((0,1),(0,0))")));
  return ax;
}

AxiomResult mvm_suite(unsigned jobs, std::uint64_t seed) {
  AxiomResult ax{"A5", {}};
  const auto exhaustive = strategy("exhaustive", jobs, seed);
  for (unsigned k = 0; k <= 4; ++k) ax.checks.push_back(summarize(check_suite(*make_luka_chain(k), SuiteId::mvm, exhaustive)));
  for (auto& lat : distributive_lattice_models(6))
    ax.checks.push_back(summarize(check_suite(*make_table_model(std::move(lat)), SuiteId::mvm, exhaustive)));
  const auto grid = strategy("grid:4", jobs, seed);
  for (const auto& name : lmonoid_builtin_names())
    ax.checks.push_back(summarize(check_suite(*gamma_of(lmonoid_builtin(name)), SuiteId::mvm, grid)));
  const auto interval = make_interval_algebra();
  const auto random = strategy("random:10000", jobs, seed);
  for (const auto& id : sigma_permutation_identities()) ax.checks.push_back(check_identity(*interval, id, random));
  return ax;
}

AxiomResult limit_suites(unsigned jobs, std::uint64_t seed) {
  AxiomResult ax{"A6", {}};
  auto s = strategy("grid:3", jobs, seed);
  s.schema_depth = 8;
  const auto interval = make_interval_algebra();
  ax.checks.push_back(summarize(check_suite(*interval, SuiteId::limit_dyadic, s)));
  ax.checks.push_back(summarize(check_suite(*interval, SuiteId::limit_two_div, s)));
  return ax;
}

AxiomResult round_trip(std::uint64_t seed) {
  AxiomResult ax{"A7", {}};
  auto theta_zeta = [&](const std::string& name, const std::vector<Value>& xs) {
    const auto m = lmonoid_builtin(name);
    std::optional<std::string> bad;
    for (const auto& x : xs)
      if (!bad && theta(*m, zeta(*m, x)) != x) bad = "at " + x.str();
    ax.checks.push_back(verdict("theta-zeta " + name, xs.size(), bad));
  };
  std::vector<Value> ints, dyads;
  for (long k = -20; k <= 20; ++k) ints.emplace_back(Rational(k));
  for (long k = -64; k <= 64; ++k) dyads.emplace_back(Rational(k, 16));
  theta_zeta("z", ints);
  theta_zeta("dyadics", dyads);

  std::vector<ModelPtr> bases{make_luka_chain(0), make_luka_chain(1), make_luka_chain(2), make_interval_algebra()};
  for (const auto& alg : bases) {
    std::mt19937_64 rng(derive_seed(seed, "round-trip " + alg->name()));
    std::optional<std::string> bad;
    for (int i = 0; i < 1000 && !bad; ++i) {
      const auto a = random_good_sequence(*alg, rng, 4, 16);
      const auto b = random_good_sequence(*alg, rng, 4, 16);
      const auto c = random_good_sequence(*alg, rng, 4, 16);
      const auto ab = gz_add(*alg, a, b);
      const std::string where = " at " + a.str(*alg) + ", " + b.str(*alg);
      if (ab != gz_add(*alg, b, a)) bad = "not commutative" + where;
      else if (gz_add(*alg, ab, c) != gz_add(*alg, a, gz_add(*alg, b, c))) bad = "not associative" + where;
      else if (gz_add(*alg, a, gz_integer(0)) != a) bad = "0 is not neutral" + where;
      else if (gz_add_oplus_form(*alg, a, b) != ab) bad = "the two sum formulas differ" + where;
    }
    ax.checks.push_back(verdict("sum " + alg->name(), 1000, bad));
  }
  return ax;
}

AxiomResult piecewise(std::uint64_t seed) {
  AxiomResult ax{"A8", {}};
  std::mt19937_64 rng(derive_seed(seed, "piecewise"));
  std::vector<Rational> samples;
  for (int i = 0; i < 1000; ++i) samples.push_back(random_unit_rational(rng, 1000));
  for (unsigned n = 1; n <= 6; ++n) {
    std::set<unsigned long> ks;
    std::optional<std::string> bad;
    for (unsigned long w = 0; w < (1UL << n); ++w) {
      std::vector<Doubling> word;
      for (unsigned i = 0; i < n; ++i) word.push_back((w >> (n - 1 - i)) & 1U ? Doubling::odot : Doubling::oplus);
      const auto profile = piecewise_profile(word);
      ks.insert(profile.k);
      if (!bad && !check_profile(word, profile, samples)) bad = "word " + std::to_string(w) + " disagrees";
    }
    if (!bad && (ks.size() != (1UL << n) || *ks.rbegin() != (1UL << n) - 1)) bad = "not a bijection";
    ax.checks.push_back(verdict("n=" + std::to_string(n), 1UL << n, bad));
  }
  return ax;
}

AxiomResult subdirect() {
  AxiomResult ax{"A9", {}};
  for (const auto& alg : curated_family()) ax.checks.push_back(summarize(verify_si_theorems(alg)));
  return ax;
}

AxiomResult distances(std::uint64_t seed) {
  AxiomResult ax{"A10", {}};
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      const auto fa = make_function_algebra(p);
      std::mt19937_64 rng(derive_seed(seed, "distance " + p.canonical_key()));
      std::vector<Value> elements;
      for (int i = 0; i < 40; ++i) elements.push_back(fa->random_element(rng, 32));
      std::optional<std::string> bad;
      for (std::size_t i = 0; i < elements.size() && !bad; ++i)
        for (std::size_t j = 0; j < elements.size() && !bad; ++j) {
          Rational uniform(0);
          for (std::size_t q = 0; q < n; ++q) uniform = max(uniform, abs(elements[i][q] - elements[j][q]));
          if (dist_int(*fa, elements[i], elements[j]) != uniform) bad = "differs from the uniform distance";
        }
      ax.checks.push_back(verdict("uniform " + fa->name(), elements.size() * elements.size(), bad));
      ax.checks.push_back(summarize(check_pseudometric(*fa, elements, 1000, seed)));
    }
  return ax;
}

AxiomResult urysohn() {
  AxiomResult ax{"A11", {}};
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : all_posets(n)) {
      std::vector<Witness> family;
      std::optional<std::string> bad;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (p.le(y, x)) continue;
          auto w = point_separator(p, x, y);
          if (!bad && (!p.monotone(w) || !w[x].is_zero() || w[y] != Rational(1)))
            bad = "bad separator for " + p.name(x) + ", " + p.name(y);
          family.push_back(std::move(w));
        }
      if (!bad && reconstruct_order(p, family) != p.order()) bad = "reconstruction differs";
      ax.checks.push_back(verdict("poset " + p.canonical_key(), family.size(), bad));
    }
  return ax;
}

AxiomResult density() {
  AxiomResult ax{"A12", {}};
  const std::vector<Rational> quarters{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n)) {
      const auto fa = make_function_algebra(p);
      std::vector<Value> indicators;
      for (std::uint64_t u : p.up_sets()) {
        std::vector<Rational> f(n, Rational(0));
        for (std::size_t q = 0; q < n; ++q)
          if ((u >> q) & 1U) f[q] = Rational(1);
        indicators.emplace_back(std::move(f));
      }
      const auto gen = subalgebra_generate(*fa, indicators, 500, quarters);
      const std::set<Value> closure(gen.elements.begin(), gen.elements.end());
      std::vector<Rational> levels{Rational(0)};
      levels.insert(levels.end(), quarters.begin(), quarters.end());
      levels.push_back(Rational(1));
      std::optional<std::string> bad;
      std::size_t targets = 0;
      for (unsigned len = 1; len <= 3 && !bad; ++len)
        for (unsigned long w = 0; w < (1UL << len) && !bad; ++w) {
          std::vector<Doubling> word;
          for (unsigned i = 0; i < len; ++i) word.push_back((w >> (len - 1 - i)) & 1U ? Doubling::odot : Doubling::oplus);
          const auto profile = piecewise_profile(word);
          for (const auto& ind : indicators)
            for (const auto& a : levels)
              for (const auto& b : levels) {
                if (b < a) continue;
                std::vector<Rational> target;
                for (std::size_t q = 0; q < n; ++q) target.push_back(profile.interpolant(max(min(ind[q], b), a)));
                ++targets;
                if (!bad && !closure.count(Value(target))) bad = "missing " + Value(target).str();
              }
        }
      if (!bad && gen.truncated) bad = "closure truncated at 500";
      ax.checks.push_back(verdict("poset " + p.canonical_key(), targets, bad));
    }
  return ax;
}

}  // namespace

VerificationReport run_battery(unsigned jobs, std::uint64_t seed,
                               const std::function<void(const std::string&, double)>& progress) {
  VerificationReport rep;
  rep.suite = "acceptance";
  rep.model = "builtin";
  rep.strategy = "fixed";
  auto timed = [&](const std::function<AxiomResult()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    rep.axioms.push_back(fn());
    if (progress)
      progress(rep.axioms.back().id, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  timed(worked_mu);
  timed(four_structures);
  timed(effectiveness);
  timed(lex_counterexample);
  timed([&] { return mvm_suite(jobs, seed); });
  timed([&] { return limit_suites(jobs, seed); });
  timed([&] { return round_trip(seed); });
  timed([&] { return piecewise(seed); });
  timed(subdirect);
  timed([&] { return distances(seed); });
  timed(urysohn);
  timed(density);
  return rep;
}

}  // namespace mvm
