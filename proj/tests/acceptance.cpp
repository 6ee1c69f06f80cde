// Acceptance criteria 1-12. Each check recomputes its expected values with a
// small local oracle, then compares the library's answer exactly and holds
// the run to its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mvm/axioms.hpp"
#include "mvm/congruence.hpp"
#include "mvm/corel.hpp"
#include "mvm/duality.hpp"
#include "mvm/good_seq.hpp"
#include "mvm/limit.hpp"
#include "mvm/models.hpp"

using namespace mvm;

namespace {

using Failure = std::optional<std::string>;

Rational R(long n, long d = 1) { return Rational(n, d); }

// Interval arithmetic on [0,1], written out once for all oracles.
Rational clip(const Rational& a) { return min(max(a, 0), 1); }
Rational plus(const Rational& a, const Rational& b) { return min(a + b, 1); }
Rational dot(const Rational& a, const Rational& b) { return max(a + b - 1, 0); }
Rational tau_oracle(unsigned n, const Rational& x, const Rational& y) {
  Rational d = 1;
  for (unsigned i = 0; i < n; ++i) d = d * R(1, 2);
  return max(min(x, plus(y, d)), dot(y, 1 - d));
}
Rational mu_oracle(const std::vector<Rational>& xs) {
  Rational m = xs[0];
  for (std::size_t k = 1; k < xs.size(); ++k) m = tau_oracle(static_cast<unsigned>(k), xs[k], m);
  return m;
}

std::vector<Doubling> word_of(unsigned long code, unsigned n) {
  std::vector<Doubling> w;
  for (unsigned i = 0; i < n; ++i) w.push_back((code >> (n - 1 - i)) & 1U ? Doubling::odot : Doubling::oplus);
  return w;
}
Rational run_word(const std::vector<Doubling>& w, Rational x) {
  for (auto d : w) x = d == Doubling::oplus ? plus(x, x) : dot(x, x);
  return x;
}

Failure first_failure(const VerificationReport& rep) {
  for (const auto& ax : rep.axioms)
    if (const auto* f = ax.first_failure())
      return rep.model + " " + ax.id + " " + f->id + (f->counterexample ? " at " + format_env(*f->counterexample) : "");
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Failure c1() {
  const std::vector<Rational> three{R(1, 10), R(1, 2), 0}, four{R(1, 10), R(1, 2), 0, R(3, 10)};
  if (mu_fold(three) != R(1, 4) || mu_oracle(three) != R(1, 4)) return "mu_fold of three = " + mu_fold(three).str();
  if (mu_fold(four) != R(3, 10) || mu_oracle(four) != R(3, 10)) return "mu_fold of four = " + mu_fold(four).str();
  return std::nullopt;
}

Failure c2() {
  const auto x = FinPoset::chain(2);
  std::set<Relation> equivalence;
  corel_enumerate(x, [&](const CorelStructure& s) {
    if (corel_classify(x, s).equivalence) equivalence.insert(s.relation());
  });
  if (equivalence.size() != 4) return std::to_string(equivalence.size()) + " equivalence structures";
  // ⪯^Y written out by hand: same tag by ≤, cross tag iff x ≤ z ≤ y for some z in Y.
  for (std::uint64_t y = 0; y < 4; ++y) {
    Relation r(4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            bool rel = false;
            if (i == j) rel = a <= b;
            else
              for (std::size_t z = 0; z < 2; ++z) rel = rel || (((y >> z) & 1U) && a <= z && z <= b);
            if (rel) r.add(static_cast<std::size_t>(i) * 2 + a, static_cast<std::size_t>(j) * 2 + b);
          }
    if (!equivalence.count(r)) return "no structure for Y = " + std::to_string(y);
  }
  return std::nullopt;
}

Failure c3() {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& p : all_posets(n)) {
      std::set<Relation> by_subset;
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) by_subset.insert(corel_from_subset(p, y).relation());
      std::set<Relation> equivalence;
      Failure bad;
      corel_enumerate(p, [&](const CorelStructure& s) {
        const auto f = corel_classify(p, s);
        if (!f.equivalence) return;
        equivalence.insert(s.relation());
        if (f.effective != Flag::yes && !bad) bad = "non-effective structure on " + p.canonical_key();
        if (corel_from_subset(p, s.diagonal_set()) != s && !bad) bad = "structure differs from its Y on " + p.canonical_key();
      });
      if (bad) return bad;
      if (equivalence != by_subset) return "equivalence structures differ from subsets on " + p.canonical_key();
    }
  return std::nullopt;
}

Failure c4() {
  const auto g = gamma_of(lmonoid_builtin("lex-z-flat"));
  const Value a{0, 1}, z{0, 0};
  if (g->oplus(a, a) != a) return "(0,1)+(0,1) = " + g->oplus(a, a).str();
  if (g->odot(a, a) != z) return "(0,1)*(0,1) = " + g->odot(a, a).str();
  if (!dist_int(*g, a, z).is_zero()) return "dist = " + dist_int(*g, a, z).str();
  const auto rep = archimedean_check(*g, *g->finite_carrier());
  const auto* f = rep.axioms.front().first_failure();
  if (!f || f->counterexample != Env{a, z}) return "archimedean check did not fail at ((0,1),(0,0))";
  return std::nullopt;
}

Failure c5() {
  const auto ex = Strategy::parse("exhaustive");
  for (unsigned k = 0; k <= 4; ++k)
    if (auto f = first_failure(check_suite(*make_luka_chain(k), SuiteId::mvm, ex))) return f;
  std::size_t lattices = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : all_posets(n)) {
      FiniteAlgebra t;
      try {
        t = lattice_mvm_tables(p);
      } catch (const InputError&) {
        continue;
      }
      ++lattices;
      if (auto f = first_failure(check_suite(*make_table_model(t), SuiteId::mvm, ex))) return f;
    }
  // distributive lattices with 1..6 elements: 1, 1, 1, 2, 3, 5
  if (lattices != 13) return std::to_string(lattices) + " distributive lattices up to 6 elements";
  const auto grid = Strategy::parse("grid:4");
  for (const auto& name : lmonoid_builtin_names())
    if (auto f = first_failure(check_suite(*gamma_of(lmonoid_builtin(name)), SuiteId::mvm, grid))) return f;

  const auto interval = make_interval_algebra();
  std::mt19937_64 rng(kDefaultSeed);
  const auto perms = sigma_permutation_identities();
  for (int t = 0; t < 10000; ++t) {
    const Env env{random_unit_rational(rng, 64), random_unit_rational(rng, 64), random_unit_rational(rng, 64)};
    const Rational want = clip(env[0].scalar() + env[1].scalar() + env[2].scalar() - 1);
    for (const auto& id : perms)
      if (eval(id.lhs, *interval, env).scalar() != want || eval(id.rhs, *interval, env).scalar() != want)
        return id.id + " at " + format_env(env);
  }
  return std::nullopt;
}

Failure c6() {
  auto s = Strategy::parse("grid:3");
  s.schema_depth = 8;
  const auto interval = make_interval_algebra();
  for (auto suite : {SuiteId::limit_dyadic, SuiteId::limit_two_div}) {
    const auto rep = check_suite(*interval, suite, s);
    if (auto f = first_failure(rep)) return f;
    const std::string prefix = suite == SuiteId::limit_dyadic ? "LDE" : "LTE";
    for (int i = 0; i <= (suite == SuiteId::limit_dyadic ? 3 : 6); ++i)
      if (!rep.find(prefix + std::to_string(i))) return "missing " + prefix + std::to_string(i);
  }
  for (long a = 0; a <= 8; ++a)
    for (long b = 0; b <= 8; ++b) {
      const Rational x = R(a, 8), y = R(b, 8);
      std::vector<Rational> taus;
      for (unsigned n = 0; n < 20; ++n) taus.push_back(tau_oracle(n, x, y));
      for (unsigned n = 1; n <= 20; ++n) {
        std::vector<Rational> head(taus.begin(), taus.begin() + n);
        const Rational m = mu_oracle(head);
        Rational d = 1;
        for (unsigned i = 1; i < n; ++i) d = d * R(1, 2);
        const auto iv = lambda_interval(taus, n);
        if (iv.lo != dot(m, 1 - d) || iv.hi != plus(m, d)) return "sandwich differs at N = " + std::to_string(n);
        if (!iv.contains(y)) return "LDE2 at x=" + x.str() + " y=" + y.str() + " N=" + std::to_string(n);
        if (n >= 2 && iv.width() > d * 2) return "sandwich too wide at N = " + std::to_string(n);
      }
    }
  return std::nullopt;
}

Failure c7() {
  const auto Z = lmonoid_builtin("z");
  for (long k = -20; k <= 20; ++k) {
    const auto s = zeta(*Z, Value(k));
    for (long n = -22; n <= 22; ++n)
      if (s.at(*gamma_of(Z), n) != Value(clip(R(k - n)))) return "zeta(" + std::to_string(k) + ") wrong at " + std::to_string(n);
    if (theta(*Z, s) != Value(k)) return "theta(zeta(" + std::to_string(k) + "))";
  }
  const auto D = lmonoid_builtin("dyadics");
  for (long k = -64; k <= 64; ++k)
    for (long den : {1L, 2L, 4L, 8L, 16L}) {
      if ((k * den) % 16 != 0 && den != 16) continue;
      const Rational x = R(k, 16);
      if (theta(*D, zeta(*D, Value(x))) != Value(x)) return "theta(zeta(" + x.str() + "))";
    }

  std::vector<ModelPtr> bases{make_luka_chain(0), make_luka_chain(1), make_luka_chain(2), make_interval_algebra()};
  for (const auto& A : bases) {
    std::mt19937_64 rng(derive_seed(kDefaultSeed, "acceptance " + A->name()));
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_good_sequence(*A, rng, 4, 16), b = random_good_sequence(*A, rng, 4, 16),
                 c = random_good_sequence(*A, rng, 4, 16);
      const auto ab = gz_add(*A, a, b);
      if (ab != gz_add(*A, b, a)) return "not commutative over " + A->name();
      if (gz_add(*A, ab, c) != gz_add(*A, a, gz_add(*A, b, c))) return "not associative over " + A->name();
      if (gz_add(*A, a, gz_integer(0)) != a) return "0 not neutral over " + A->name();
      if (gz_add_oplus_form(*A, a, b) != ab) return "sum formulas differ over " + A->name();
      // brute-force ⨀ and ⨁ convolutions on a window wide enough for support ≤ 4 and offsets in [−2, 2]
      for (long n = -6; n <= 10; ++n) {
        Value big_dot = A->one(), big_plus = A->zero();
        for (long k = -12; k <= 12; ++k) {
          big_dot = A->odot(big_dot, A->oplus(a.at(*A, k), b.at(*A, n - k)));
          big_plus = A->oplus(big_plus, A->odot(a.at(*A, k), b.at(*A, n - k - 1)));
        }
        if (ab.at(*A, n) != big_dot || big_dot != big_plus) return "convolution differs over " + A->name();
      }
    }
  }
  return std::nullopt;
}

Failure c8() {
  std::mt19937_64 rng(derive_seed(kDefaultSeed, "acceptance piecewise"));
  std::vector<Rational> samples;
  for (int i = 0; i < 1000; ++i) samples.push_back(random_unit_rational(rng, 1000));
  for (unsigned n = 1; n <= 6; ++n) {
    std::set<unsigned long> ks;
    const Rational scale(1L << n);
    for (unsigned long code = 0; code < (1UL << n); ++code) {
      const auto w = word_of(code, n);
      const auto prof = piecewise_profile(w);
      ks.insert(prof.k);
      const Rational k(static_cast<long>(prof.k));
      for (unsigned long i = 0; i <= (1UL << n); ++i) {
        const Rational x = Rational(static_cast<long>(i)) / scale;
        if (run_word(w, x) != clip(scale * x - k)) return "breakpoint mismatch, n=" + std::to_string(n);
      }
      for (const auto& x : samples)
        if (run_word(w, x) != clip(scale * x - k) || apply_word(w, x) != run_word(w, x))
          return "sample mismatch at " + x.str();
      if (!check_profile(w, prof, samples)) return "check_profile rejects word " + std::to_string(code);
    }
    if (ks.size() != (1UL << n) || *ks.rbegin() != (1UL << n) - 1) return "not a bijection at n=" + std::to_string(n);
  }
  return std::nullopt;
}

Failure c9() {
  std::size_t si = 0, other = 0;
  for (const auto& a : curated_family()) {
    if (auto f = first_failure(verify_si_theorems(a))) return f;
    if (a.size() < 2) continue;
    if (is_subdirectly_irreducible(a)) {
      ++si;
      for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y) {
          if (!a.leq(x, y) && !a.leq(y, x)) return a.name + " is SI but not a chain";
          if (a.op(BinOp::oplus, x, y) != a.one && a.op(BinOp::odot, x, y) != a.zero) return a.name + " breaks the dichotomy";
        }
    } else {
      ++other;
      // Birkhoff on the instance: meet-irreducible congruences intersect to Δ
      const auto cons = enumerate_congruences(a);
      Congruence meet = Congruence::total(a.size());
      for (const auto& c : meet_irreducibles(cons)) meet = meet.meet(c);
      if (!meet.is_identity()) return a.name + ": meet-irreducibles do not intersect to identity";
    }
  }
  if (si == 0 || other == 0) return "family lacks SI or non-SI members";
  return std::nullopt;
}

Failure c10() {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      const auto F = make_function_algebra(p);
      std::mt19937_64 rng(derive_seed(kDefaultSeed, "acceptance distance " + p.canonical_key()));
      std::vector<Value> xs;
      for (int i = 0; i < 24; ++i) xs.push_back(F->random_element(rng, 32));
      for (const auto& a : xs)
        for (const auto& b : xs) {
          Rational uniform = 0;
          for (std::size_t q = 0; q < n; ++q) uniform = max(uniform, abs(a[q] - b[q]));
          if (dist_int(*F, a, b) != uniform) return "dist differs from the uniform max on " + F->name();
          try {
            certify_distance(*F, a, b, uniform);
          } catch (const std::logic_error& e) {
            return std::string(e.what());
          }
        }
      if (auto f = first_failure(check_pseudometric(*F, xs, 1000))) return f;
    }
  return std::nullopt;
}

Failure c11() {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : all_posets(n)) {
      std::vector<Witness> family;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (p.le(y, x)) continue;
          const auto f = point_separator(p, x, y);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              if (p.le(a, b) && f[a] > f[b]) return "separator not monotone on " + p.canonical_key();
          if (f[x] != R(0) || f[y] != R(1)) return "separator values wrong on " + p.canonical_key();
          family.push_back(f);
        }
      const auto r = reconstruct_order(p, family);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (r.has(a, b) != p.le(a, b)) return "reconstruction differs on " + p.canonical_key();
    }
  return std::nullopt;
}

Failure c12() {
  const std::vector<Rational> consts{R(1, 4), R(1, 2), R(3, 4)};
  const std::vector<Rational> levels{0, R(1, 4), R(1, 2), R(3, 4), 1};
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n)) {
      const auto F = make_function_algebra(p);
      std::vector<Value> gens;
      for (auto u : p.up_sets()) {
        std::vector<Rational> f(n);
        for (std::size_t q = 0; q < n; ++q) f[q] = (u >> q) & 1U ? 1 : 0;
        gens.emplace_back(f);
      }
      const auto g = subalgebra_generate(*F, gens, 500, consts);
      if (g.truncated) return "closure truncated on " + p.canonical_key();
      const std::set<Value> closure(g.elements.begin(), g.elements.end());
      for (unsigned len = 1; len <= 3; ++len)
        for (unsigned long code = 0; code < (1UL << len); ++code) {
          const auto w = word_of(code, len);
          const auto prof = piecewise_profile(w);
          for (const auto& ind : gens)
            for (const auto& a : levels)
              for (const auto& b : levels) {
                if (b < a) continue;
                std::vector<Rational> target;
                for (std::size_t q = 0; q < n; ++q) {
                  const Rational x = max(min(ind[q], b), a);
                  if (prof.interpolant(x) != run_word(w, x)) return "profile disagrees with its word";
                  target.push_back(run_word(w, x));
                }
                if (!closure.count(Value(target))) return "missing " + Value(target).str() + " on " + p.canonical_key();
              }
        }
    }
  return std::nullopt;
}

struct Criterion {
  int id;
  const char* what;
  double limit_seconds;
  std::function<Failure()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked mu example", 0.001, c1},
      {2, "four equivalence structures on the 2-chain", 1, c2},
      {3, "effectiveness on posets up to 3 points", 60, c3},
      {4, "lexicographic counterexample", 0.001, c4},
      {5, "MVM suite and sigma permutations", 60, c5},
      {6, "limit suites and LDE2 containment", 120, c6},
      {7, "good sequence round trip and sums", 60, c7},
      {8, "piecewise-linear doubling words", 30, c8},
      {9, "subdirect theorems on the curated family", 120, c9},
      {10, "distance coherence on function algebras", 60, c10},
      {11, "ordered Urysohn separation", 10, c11},
      {12, "generation density", 60, c12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    // sub-millisecond limits are timed on a warm run
    if (c.limit_seconds < 0.01) c.run();
    const auto t0 = std::chrono::steady_clock::now();
    Failure f;
    try {
      f = c.run();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!f && secs > c.limit_seconds) f = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    std::printf("%s  criterion %2d  %-45s %9.4f s%s%s\n", f ? "FAIL" : "PASS", c.id, c.what, secs, f ? "  " : "",
                f ? f->c_str() : "");
    std::fflush(stdout);
    if (f) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
