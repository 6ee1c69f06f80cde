#include <random>

#include <gtest/gtest.h>

#include "mvm/models.hpp"

using namespace mvm;

namespace {

std::vector<Value> carrier(const AlgebraModel& m) { return *m.finite_carrier(); }

Rational R(long n, long d = 1) { return Rational(n, d); }

std::vector<ModelPtr> finite_zoo() {
  std::vector<ModelPtr> out;
  for (unsigned k = 0; k <= 3; ++k) out.push_back(make_luka_chain(k));
  out.push_back(make_lattice_mvm(FinPoset::builtin("chain3")));
  out.push_back(make_lattice_mvm(FinPoset::from_pairs({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
  out.push_back(gamma_of(lmonoid_builtin("lex-z-flat")));
  out.push_back(gamma_of(lmonoid_builtin("z")));
  out.push_back(make_dual(make_luka_chain(2)));
  return out;
}

std::vector<Value> elements(const AlgebraModel& m) {
  if (auto c = m.finite_carrier()) return *c;
  return m.grid(2);
}

}  // namespace

TEST(Interval, Operations) {
  const auto I = make_interval_algebra();
  EXPECT_EQ(I->oplus(R(3, 4), R(1, 2)), Value(1));
  EXPECT_EQ(I->odot(R(3, 4), R(1, 2)), Value(R(1, 4)));
  EXPECT_EQ(I->half(R(1, 2)), Value(R(1, 4)));
  EXPECT_EQ(I->cohalf(R(1, 2)), Value(R(3, 4)));
  EXPECT_TRUE(I->supports(Fragment::lambda));
  EXPECT_FALSE(I->contains(Value(R(3, 2))));
}

TEST(Luka, Chains) {
  const auto l1 = make_luka_chain(1);
  EXPECT_EQ(*l1->finite_carrier(), (std::vector<Value>{0, R(1, 2), 1}));
  EXPECT_EQ(l1->oplus(R(1, 2), R(1, 2)), Value(1));
  EXPECT_EQ(l1->odot(R(1, 2), R(1, 2)), Value(0));
  EXPECT_EQ(make_luka_chain(0)->finite_carrier()->size(), 2U);
  EXPECT_EQ(make_luka_chain(4)->finite_carrier()->size(), 17U);
  // h(1/2^k) = 1/2^(k+1) leaves the carrier
  EXPECT_FALSE(l1->supports(Fragment::two_div));
  EXPECT_THROW(l1->half(Value(R(1, 2))), UnsupportedSymbol);
}

TEST(Lattice, Validation) {
  const auto m3 = FinPoset::from_pairs({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  EXPECT_THROW(make_lattice_mvm(m3), InputError);
  EXPECT_THROW(make_lattice_mvm(FinPoset::antichain(2)), InputError);

  // 4-element Boolean lattice on bitmasks: ⊕ is ∨
  const auto b4 = FinPoset::from_pairs({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto L = make_lattice_mvm(b4);
  for (const auto& a : carrier(*L))
    for (const auto& b : carrier(*L))
      for (const auto& c : carrier(*L))
        EXPECT_EQ(L->oplus(L->join(a, b), c), L->join(L->join(a, b), c));
}

TEST(FunctionAlgebra, Pointwise) {
  const auto F = make_function_algebra(FinPoset::chain(2));
  EXPECT_EQ(F->oplus(Value{0, 1}, Value{R(1, 2), R(1, 2)}), (Value{R(1, 2), 1}));
  EXPECT_FALSE(F->contains(Value{1, 0}));
  EXPECT_TRUE(F->contains(Value{0, 1}));
  for (unsigned n = 0; n <= 6; ++n) {
    const Rational t = R(1, 1L << n) * R(static_cast<long>(n) % 3);
    EXPECT_TRUE(F->contains(F->constant(unit_clip(t))));
  }
  EXPECT_EQ(F->constant(R(3, 8)), (Value{R(3, 8), R(3, 8)}));
}

TEST(FunctionAlgebra, GridIsMonotoneMaps) {
  const auto F = make_function_algebra(FinPoset::vee());
  const auto g = F->grid(1);
  // oracle: count monotone maps {a,b} ≤ c into {0,1/2,1}
  std::size_t count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) count += (a <= c && b <= c);
  EXPECT_EQ(g.size(), count);
  for (const auto& v : g) EXPECT_TRUE(F->contains(v));
}

TEST(Lex, GammaOfFlat) {
  const auto G = gamma_of(lmonoid_builtin("lex-z-flat"));
  EXPECT_EQ(*G->finite_carrier(), (std::vector<Value>{Value{0, 0}, Value{0, 1}, Value{1, 0}}));
  EXPECT_EQ(G->oplus(Value{0, 1}, Value{0, 1}), (Value{0, 1}));
  EXPECT_EQ(G->odot(Value{0, 1}, Value{0, 1}), (Value{0, 0}));
  const auto M = lmonoid_builtin("lex-z-flat");
  EXPECT_EQ(M->meet(Value{1, 0}, Value{0, 1}), (Value{0, 1}));
  EXPECT_EQ(M->join(Value{1, 0}, Value{0, 1}), (Value{1, 0}));
}

TEST(Gamma, Integers) {
  const auto G = gamma_of(lmonoid_builtin("z"));
  EXPECT_EQ(*G->finite_carrier(), (std::vector<Value>{0, 1}));
  EXPECT_EQ(G->oplus(1, 1), Value(1));
  EXPECT_EQ(G->odot(0, 1), Value(0));
  const auto D = gamma_of(lmonoid_builtin("dyadics"));
  EXPECT_FALSE(D->finite_carrier().has_value());
  EXPECT_EQ(D->oplus(R(3, 4), R(5, 8)), Value(1));
  EXPECT_EQ(D->odot(R(3, 4), R(5, 8)), Value(R(3, 8)));
}

TEST(Generate, Examples) {
  const auto I = make_interval_algebra();
  const auto g = subalgebra_generate(*I, {Value(R(1, 2))}, 10);
  EXPECT_FALSE(g.truncated);
  EXPECT_EQ(g.elements, (std::vector<Value>{0, R(1, 2), 1}));

  const auto l1 = make_luka_chain(1);
  EXPECT_EQ(subalgebra_generate(*l1, {}, 10).elements, (std::vector<Value>{0, 1}));
  EXPECT_EQ(subalgebra_generate(*l1, *l1->finite_carrier(), 10).elements, carrier(*l1));

  const auto quarter = subalgebra_generate(*I, {}, 100, {R(1, 4)});
  EXPECT_EQ(quarter.elements, (std::vector<Value>{0, R(1, 4), R(1, 2), R(3, 4), 1}));
  EXPECT_TRUE(subalgebra_generate(*I, {}, 3, {R(1, 8)}).truncated);
  EXPECT_EQ(subalgebra_generate(*I, {}, 100, {}, true).elements.size(), 100U);
}

TEST(Generate, ClosedUnderOperations) {
  const auto F = make_function_algebra(FinPoset::chain(2));
  const auto g = subalgebra_generate(*F, {Value{0, 1}}, 200, {R(1, 2)});
  ASSERT_FALSE(g.truncated);
  const std::set<Value> s(g.elements.begin(), g.elements.end());
  for (const auto& a : g.elements)
    for (const auto& b : g.elements) {
      EXPECT_TRUE(s.count(F->oplus(a, b)));
      EXPECT_TRUE(s.count(F->odot(a, b)));
      EXPECT_TRUE(s.count(F->join(a, b)));
      EXPECT_TRUE(s.count(F->meet(a, b)));
    }
}

TEST(LMonoid, LatticeSumIdentity) {
  for (const auto& name : lmonoid_builtin_names()) {
    const auto M = lmonoid_builtin(name);
    const auto xs = M->samples(2);
    for (const auto& x : xs)
      for (const auto& y : xs) {
        if (!M->leq(x, y) && !M->leq(y, x)) continue;
        EXPECT_EQ(M->add(M->meet(x, y), M->join(x, y)), M->add(x, y)) << name;
      }
  }
}

TEST(LMonoid, GammaOplusOdotSum) {
  for (const auto& name : lmonoid_builtin_names()) {
    const auto M = lmonoid_builtin(name);
    const auto G = gamma_of(M);
    const auto xs = G->finite_carrier() ? *G->finite_carrier() : G->grid(4);
    for (const auto& x : xs)
      for (const auto& y : xs) EXPECT_EQ(M->add(G->oplus(x, y), G->odot(x, y)), M->add(x, y)) << name;
  }
}

TEST(Zoo, OperationsMonotoneAndBounded) {
  for (const auto& m : finite_zoo()) {
    const auto xs = elements(*m);
    for (const auto& x : xs) {
      EXPECT_TRUE(m->leq(m->zero(), x)) << m->name();
      EXPECT_TRUE(m->leq(x, m->one())) << m->name();
    }
    for (const auto& x : xs)
      for (const auto& x2 : xs) {
        if (!m->leq(x, x2)) continue;
        for (const auto& y : xs) {
          EXPECT_TRUE(m->leq(m->oplus(x, y), m->oplus(x2, y))) << m->name();
          EXPECT_TRUE(m->leq(m->odot(x, y), m->odot(x2, y))) << m->name();
          EXPECT_TRUE(m->leq(m->join(y, x), m->join(y, x2))) << m->name();
          EXPECT_TRUE(m->leq(m->meet(y, x), m->meet(y, x2))) << m->name();
        }
      }
  }
}

TEST(Zoo, IntervalMonotoneOnRandomPairs) {
  const auto I = make_interval_algebra();
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    Rational a = random_unit_rational(rng, 50), b = random_unit_rational(rng, 50), y = random_unit_rational(rng, 50);
    if (b < a) std::swap(a, b);
    EXPECT_LE(I->oplus(a, y).scalar(), I->oplus(b, y).scalar());
    EXPECT_LE(I->odot(a, y).scalar(), I->odot(b, y).scalar());
    EXPECT_LE(I->half(a).scalar(), I->half(b).scalar());
    EXPECT_LE(I->cohalf(a).scalar(), I->cohalf(b).scalar());
  }
}

TEST(Dual, SwapsOperations) {
  const auto base = make_luka_chain(2);
  const auto d = make_dual(base);
  EXPECT_EQ(d->zero(), base->one());
  for (const auto& a : carrier(*base))
    for (const auto& b : carrier(*base)) {
      EXPECT_EQ(d->oplus(a, b), base->odot(a, b));
      EXPECT_EQ(d->join(a, b), base->meet(a, b));
    }
}

TEST(Load, Specs) {
  EXPECT_EQ(load_model("luka:2")->finite_carrier()->size(), 5U);
  EXPECT_EQ(load_model("interval")->name(), "interval");
  EXPECT_EQ(load_model("lex-z-flat")->finite_carrier()->size(), 3U);
  EXPECT_THROW(load_model("nonsense"), InputError);
  EXPECT_THROW(load_model("luka:x"), InputError);
}
