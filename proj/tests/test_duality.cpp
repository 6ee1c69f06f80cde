#include <random>

#include <gtest/gtest.h>

#include "mvm/corel.hpp"
#include "mvm/duality.hpp"
#include "mvm/models.hpp"
#include "mvm/poset.hpp"

using namespace mvm;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

// Brute force over all relations on X+X: count preorders extending the
// coproduct order. Feasible for |X+X| ≤ 4.
std::size_t count_preorders_bruteforce(const FinPoset& x) {
  const std::size_t n = 2 * x.size();
  const Relation base = coproduct_order(x);
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((bits >> (i * n + j)) & 1U) r.add(i, j);
    if (r.is_preorder() && r.contains(base)) ++count;
  }
  return count;
}

std::set<Relation> subset_structures(const FinPoset& x) {
  std::set<Relation> out;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << x.size()); ++y) out.insert(corel_from_subset(x, y).relation());
  return out;
}

Rational uniform(const Value& a, const Value& b) {
  Rational m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = max(m, abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Poset, Load) {
  const auto two = FinPoset::from_json(nlohmann::json::parse(R"({"elements":["a","b"],"le":[["a","b"]]})"));
  EXPECT_TRUE(two.le(0, 1));
  EXPECT_FALSE(two.le(1, 0));
  EXPECT_THROW(FinPoset::from_json(nlohmann::json::parse(R"({"elements":["a","b"],"le":[["a","b"],["b","a"]]})")),
               InputError);
  EXPECT_THROW(FinPoset::from_json(nlohmann::json::parse(R"({"elements":["a","a"],"le":[]})")), InputError);
  EXPECT_THROW(FinPoset::from_json(nlohmann::json::parse(R"({"elements":["a"],"le":[["a","z"]]})")), InputError);
  const auto anti = FinPoset::from_json(nlohmann::json::parse(R"({"elements":["a","b","c"],"le":[]})"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(anti.le(i, j), i == j);
  const auto closed = FinPoset::from_pairs({"a", "b", "c"}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(closed.le(0, 2));
}

TEST(Poset, IsomorphismTypes) {
  const std::vector<std::size_t> counts{1, 1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ps = all_posets(n);
    EXPECT_EQ(ps.size(), counts[n]) << n;
    std::set<std::string> keys;
    for (const auto& p : ps) keys.insert(p.canonical_key());
    EXPECT_EQ(keys.size(), ps.size());
  }
}

TEST(Poset, CoproductOrder) {
  const auto c2 = FinPoset::chain(2);
  const auto r = coproduct_order(c2);
  EXPECT_EQ(r.size(), 4U);
  EXPECT_EQ(r.pair_count(), 6U);  // two 2-chains: 3 pairs each
  EXPECT_FALSE(r.has(0, 3));
  const auto a2 = coproduct_order(FinPoset::antichain(2));
  EXPECT_EQ(a2, Relation::identity(4));
}

TEST(Urysohn, Witnesses) {
  const auto c2 = FinPoset::chain(2);
  EXPECT_EQ(urysohn_witness(c2, 0b01, 0b10), (Witness{0, 1}));
  const auto v = FinPoset::vee();
  EXPECT_EQ(urysohn_witness(v, 0b001, 0b110), (Witness{0, 1, 1}));
  EXPECT_THROW(urysohn_witness(v, 0b001, 0b011), InputError);
  EXPECT_THROW(urysohn_witness(v, 0b100, 0b000), InputError);  // {c} is not a down-set
}

TEST(Urysohn, PointSeparators) {
  EXPECT_EQ(point_separator(FinPoset::chain(2), 0, 1), (Witness{0, 1}));
  EXPECT_EQ(point_separator(FinPoset::antichain(2), 0, 1), (Witness{0, 1}));
  EXPECT_THROW(point_separator(FinPoset::chain(2), 1, 1), InputError);
  EXPECT_THROW(point_separator(FinPoset::chain(2), 1, 0), InputError);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : all_posets(n)) {
      std::vector<Witness> family;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (p.le(b, a)) continue;
          const auto f = point_separator(p, a, b);
          EXPECT_TRUE(p.monotone(f));
          EXPECT_EQ(f[a], R(0));
          EXPECT_EQ(f[b], R(1));
          family.push_back(f);
        }
      if (family.empty()) family.push_back(Witness(n, 0));
      EXPECT_EQ(reconstruct_order(p, family), p.order());
    }
}

TEST(Urysohn, Reconstruct) {
  const auto v = FinPoset::vee();
  std::vector<Witness> ups;
  for (auto m : v.up_sets()) {
    Witness f(3);
    for (std::size_t i = 0; i < 3; ++i) f[i] = (m >> i) & 1U ? 1 : 0;
    ups.push_back(f);
  }
  EXPECT_EQ(reconstruct_order(v, ups), v.order());
  const auto total = reconstruct_order(v, {Witness(3, 0)});
  EXPECT_EQ(total.pair_count(), 9U);
}

TEST(PreorderOfMap, Example) {
  const auto x = FinPoset::from_pairs({"a", "b", "c"}, {{0, 1}});
  const auto y = FinPoset::chain(2);
  const auto p = preorder_of_map(x, y, {0, 0, 1});
  EXPECT_TRUE(p.has(0, 1));
  EXPECT_TRUE(p.has(1, 0));
  EXPECT_TRUE(p.has(1, 2));
  EXPECT_TRUE(p.has(0, 2));
  EXPECT_FALSE(p.has(2, 0));
  EXPECT_FALSE(p.has(2, 1));
  const auto q = quotient_poset(x, p);
  EXPECT_EQ(q.poset.size(), 2U);
  EXPECT_EQ(q.poset.canonical_key(), FinPoset::chain(2).canonical_key());
  EXPECT_EQ(preorder_of_map(x, q.poset, q.projection), p);
  EXPECT_THROW(preorder_of_map(y, y, {1, 0}), InputError);
}

TEST(PreorderOfMap, IdentityAndConstant) {
  const auto v = FinPoset::vee();
  EXPECT_EQ(preorder_of_map(v, v, {0, 1, 2}), v.order());
  EXPECT_EQ(preorder_of_map(v, FinPoset::chain(1), {0, 0, 0}).pair_count(), 9U);
  EXPECT_EQ(quotient_poset(v, v.order()).poset.size(), 3U);
  Relation all(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) all.add(i, j);
  EXPECT_EQ(quotient_poset(v, all).poset.size(), 1U);
}

TEST(PreorderOfMap, SurjectionsRoundTrip) {
  // every monotone surjection onto chain(2) from each 3-point poset
  for (const auto& x : all_posets(3)) {
    const auto y = FinPoset::chain(2);
    for (std::size_t code = 0; code < 8; ++code) {
      std::vector<std::size_t> f{code & 1, (code >> 1) & 1, (code >> 2) & 1};
      bool mono = true, hit0 = false, hit1 = false;
      for (std::size_t a = 0; a < 3; ++a) {
        (f[a] ? hit1 : hit0) = true;
        for (std::size_t b = 0; b < 3; ++b)
          if (x.le(a, b) && f[a] > f[b]) mono = false;
      }
      if (!mono || !hit0 || !hit1) continue;
      const auto q = quotient_poset(x, preorder_of_map(x, y, f));
      EXPECT_EQ(q.poset.canonical_key(), y.canonical_key());
    }
  }
}

TEST(Corel, ClassifyExamples) {
  const auto c2 = FinPoset::chain(2);
  const TaggedPoint bot0{0, 0}, top1{1, 1}, bot1{0, 1}, top0{1, 0};
  const auto one = CorelStructure::generated(c2, {{bot0, top1}});
  const auto f1 = corel_classify(c2, one);
  EXPECT_TRUE(f1.reflexive);
  EXPECT_FALSE(f1.symmetric);
  const auto both = CorelStructure::generated(c2, {{bot0, top1}, {bot1, top0}});
  const auto f2 = corel_classify(c2, both);
  EXPECT_TRUE(f2.reflexive);
  EXPECT_TRUE(f2.symmetric);
  EXPECT_EQ(f2.transitive, Flag::no);
  EXPECT_FALSE(f2.equivalence);
  for (std::uint64_t y = 0; y < 4; ++y) {
    const auto f = corel_classify(c2, corel_from_subset(c2, y));
    EXPECT_TRUE(f.equivalence);
    EXPECT_EQ(f.effective, Flag::yes);
    EXPECT_EQ(corel_from_subset(c2, y).diagonal_set(), y);
  }
  EXPECT_EQ(corel_from_subset(c2, 0).relation(), coproduct_order(c2));
  // Y = X: cross pairs exactly when x ≤ y, so 6 same-tag and 6 cross pairs
  EXPECT_EQ(corel_from_subset(c2, 3).relation().pair_count(), 12U);
}

TEST(Corel, FromJson) {
  const auto c2 = FinPoset::builtin("chain2");
  const auto s = CorelStructure::from_json(c2, nlohmann::json::parse(R"([[["c0",0],["c1",1]]])"));
  EXPECT_TRUE(s.rel(0, 0, 1, 1));
  EXPECT_THROW(CorelStructure::from_json(c2, nlohmann::json::parse(R"([[["zz",0],["c1",1]]])")), InputError);
  EXPECT_THROW(CorelStructure::from_json(c2, nlohmann::json::parse(R"([[["c0",2],["c1",1]]])")), InputError);
}

TEST(Corel, EnumerationCounts) {
  for (const auto& x : {FinPoset::chain(1), FinPoset::chain(2), FinPoset::antichain(2)}) {
    std::size_t equiv = 0;
    std::set<Relation> seen;
    const auto n = corel_enumerate(x, [&](const CorelStructure& s) {
      seen.insert(s.relation());
      if (corel_classify(x, s).equivalence) ++equiv;
    });
    EXPECT_EQ(n, seen.size());
    EXPECT_EQ(n, count_preorders_bruteforce(x));
    EXPECT_EQ(equiv, subset_structures(x).size());
  }
  EXPECT_EQ(check_effectiveness(FinPoset::chain(1)).equivalence_structures, 2U);
  EXPECT_EQ(corel_enumerate(FinPoset::from_pairs({}, {}), [](const CorelStructure&) {}), 1U);
  EXPECT_THROW(corel_enumerate(FinPoset::chain(4), [](const CorelStructure&) {}), InputError);
}

TEST(Corel, Effectiveness) {
  const auto rep = check_effectiveness(FinPoset::chain(2));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.equivalence_structures, 4U);
  EXPECT_EQ(rep.subsets, (std::vector<std::uint64_t>{0, 1, 2, 3}));
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n)) {
      const auto r = check_effectiveness(p);
      EXPECT_TRUE(r.pass());
      std::set<Relation> eq;
      corel_enumerate(p, [&](const CorelStructure& s) {
        if (corel_classify(p, s).equivalence) eq.insert(s.relation());
      });
      EXPECT_EQ(eq, subset_structures(p));
    }
}

TEST(Distance, Examples) {
  const auto F = make_function_algebra(FinPoset::chain(2));
  EXPECT_EQ(dist_int(*F, Value{0, 1}, Value{0, R(1, 2)}), R(1, 2));
  EXPECT_EQ(dist_int(*F, Value{R(1, 3), 1}, Value{R(1, 3), 1}), R(0));
  const auto lex = gamma_of(lmonoid_builtin("lex-z-flat"));
  EXPECT_EQ(dist_int(*lex, Value{0, 1}, Value{0, 0}), R(0));
  EXPECT_TRUE(within_distance(*lex, Value{0, 1}, Value{0, 0}, R(1, 1024)));
  EXPECT_FALSE(within_distance(*lex, Value{1, 0}, Value{0, 0}, R(1, 2)));
  EXPECT_EQ(dist_int(*make_luka_chain(2), R(1, 4), 1), R(3, 4));
  EXPECT_EQ(dist_int(*make_interval_algebra(), R(1, 10), R(1, 3)), R(7, 30));
}

TEST(Distance, UniformMaxOnFunctionAlgebras) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      const auto F = make_function_algebra(p);
      std::vector<Value> xs;
      for (int i = 0; i < 12; ++i) xs.push_back(F->random_element(rng, 32));
      for (const auto& a : xs)
        for (const auto& b : xs) {
          const Rational d = dist_int(*F, a, b);
          EXPECT_EQ(d, uniform(a, b));
          EXPECT_NO_THROW(certify_distance(*F, a, b, d));
        }
      EXPECT_TRUE(check_pseudometric(*F, xs, 200).passed());
      EXPECT_TRUE(archimedean_check(*F, xs).passed());
    }
}

TEST(Distance, CertificationRejectsWrongValues) {
  const auto F = make_function_algebra(FinPoset::chain(2));
  EXPECT_THROW(certify_distance(*F, Value{0, 1}, Value{0, R(1, 2)}, R(1, 4)), std::logic_error);
  EXPECT_THROW(certify_distance(*F, Value{0, 1}, Value{0, R(1, 2)}, R(3, 4)), std::logic_error);
}

TEST(Distance, BisectionBracketsClosedForm) {
  const auto I = make_interval_algebra();
  const auto iv = dist_bisect(*I, R(1, 10), R(1, 3), 20);
  EXPECT_TRUE(iv.contains(R(7, 30)));
  EXPECT_LE(iv.width(), pow2_inv(20));
}

TEST(Archimedean, Examples) {
  const auto lex = gamma_of(lmonoid_builtin("lex-z-flat"));
  const auto rep = archimedean_check(*lex, *lex->finite_carrier());
  ASSERT_FALSE(rep.passed());
  const auto* f = rep.axioms.at(0).first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(*f->counterexample, (Env{Value{0, 1}, Value{0, 0}}));
  for (unsigned k = 0; k <= 3; ++k) {
    const auto L = make_luka_chain(k);
    EXPECT_TRUE(archimedean_check(*L, *L->finite_carrier()).passed()) << k;
  }
}

TEST(Ess, Examples) {
  const auto lex = gamma_of(lmonoid_builtin("lex-z-flat"));
  const auto e = ess_value(*lex, Value{0, 1});
  EXPECT_FALSE(e.exact);
  EXPECT_EQ(e.lo, R(0));
  EXPECT_LE(e.hi, pow2_inv(32));
  EXPECT_EQ(e.estimate(), R(0));
  const auto l2 = make_luka_chain(2);
  const auto c = ess_value(*l2, R(3, 4));
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.lo, R(3, 4));
  const auto I = make_interval_algebra();
  for (long k = 0; k <= 16; ++k) {
    const auto r = ess_value(*I, I->constant(R(k, 16)));
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.lo, R(k, 16));
  }
  const auto third = ess_value(*I, R(1, 3));
  EXPECT_TRUE(third.lo <= R(1, 3) && R(1, 3) <= third.hi);
  EXPECT_THROW(ess_value(*make_function_algebra(FinPoset::antichain(2)), Value{0, 0}), UnsupportedSymbol);
}
