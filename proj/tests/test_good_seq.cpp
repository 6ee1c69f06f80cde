#include <random>

#include <gtest/gtest.h>

#include "mvm/axioms.hpp"
#include "mvm/good_seq.hpp"
#include "mvm/models.hpp"

using namespace mvm;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

const AlgebraModel& interval() {
  static const ModelPtr m = make_interval_algebra();
  return *m;
}

GoodZSeq seq(long offset, std::vector<Value> values) { return GoodZSeq{offset, std::move(values)}; }

// Pointwise oracle: the denoted function on a window.
std::vector<Value> window(const AlgebraModel& a, const GoodZSeq& s, long lo, long hi) {
  std::vector<Value> out;
  for (long k = lo; k <= hi; ++k) out.push_back(s.at(a, k));
  return out;
}

// ⨀ₖ a(k) ⊕ b(n−k) evaluated by brute force over a wide window.
Value sum_at(const AlgebraModel& A, const GoodZSeq& a, const GoodZSeq& b, long n) {
  Value acc = A.one();
  for (long k = -30; k <= 30; ++k) acc = A.odot(acc, A.oplus(a.at(A, k), b.at(A, n - k)));
  return acc;
}

std::vector<ModelPtr> bases() {
  return {make_luka_chain(0), make_luka_chain(1), make_luka_chain(2), make_interval_algebra(),
          make_lattice_mvm(FinPoset::builtin("chain3")), gamma_of(lmonoid_builtin("lex-z-flat"))};
}

}  // namespace

TEST(GoodPair, Examples) {
  EXPECT_TRUE(is_good_pair(interval(), 1, R(1, 4)));
  const auto lex = gamma_of(lmonoid_builtin("lex-z-flat"));
  EXPECT_FALSE(is_good_pair(*lex, Value{0, 1}, Value{0, 1}));
  std::mt19937_64 rng(1);
  for (const auto& A : bases())
    for (int t = 0; t < 100; ++t) {
      const Value x = A->random_element(rng, 16), y = A->random_element(rng, 16);
      EXPECT_TRUE(is_good_pair(*A, A->oplus(x, y), A->odot(x, y))) << A->name();
    }
}

TEST(GoodPair, MixedAssociativity) {
  for (const auto& A : bases()) {
    const auto xs = A->finite_carrier() ? *A->finite_carrier() : A->grid(3);
    for (const auto& x0 : xs)
      for (const auto& x1 : xs) {
        if (!is_good_pair(*A, x0, x1)) continue;
        for (const auto& y : xs) EXPECT_EQ(A->odot(x0, A->oplus(x1, y)), A->oplus(x1, A->odot(x0, y))) << A->name();
      }
  }
}

TEST(GoodPair, Bipartite) {
  std::mt19937_64 rng(2);
  const auto A = make_luka_chain(3);
  const auto xs = *A->finite_carrier();
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1), len(1, 4);
  int tried = 0;
  for (int t = 0; t < 20000 && tried < 300; ++t) {
    std::vector<Value> x(len(rng)), y(len(rng));
    for (auto& v : x) v = xs[pick(rng)];
    for (auto& v : y) v = xs[pick(rng)];
    bool all_good = true;
    for (const auto& a : x)
      for (const auto& b : y) all_good = all_good && is_good_pair(*A, a, b);
    if (!all_good) continue;
    ++tried;
    Value px = A->one(), sy = A->zero();
    for (const auto& a : x) px = A->odot(px, a);
    for (const auto& b : y) sy = A->oplus(sy, b);
    EXPECT_TRUE(is_good_pair(*A, px, sy));
  }
  EXPECT_GT(tried, 50);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(gz_canonicalize(interval(), 0, {1, R(1, 2), 0}), seq(1, {R(1, 2)}));
  EXPECT_EQ(gz_canonicalize(interval(), 5, {}), seq(5, {}));
  EXPECT_NE(gz_canonicalize(interval(), 5, {}), gz_canonicalize(interval(), 0, {}));
  try {
    gz_canonicalize(interval(), 0, {R(1, 2), R(3, 4)});
    FAIL() << "expected a goodness error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("0"), std::string::npos);
  }
}

TEST(Canonicalize, ParseAndPrint) {
  const auto s = gz_parse(interval(), "@-1 [1, 3/4, 0]");
  EXPECT_EQ(s, seq(0, {R(3, 4)}));
  const auto F = make_function_algebra(FinPoset::chain(2));
  const auto two = gz_parse(*F, "@0 [(1/2,1), (0,1/2)]");
  EXPECT_EQ(two.values.size(), 2U);
  EXPECT_EQ(gz_parse(*F, two.str(*F)), two);
  EXPECT_EQ(gz_parse(interval(), s.str(interval())), s);
  EXPECT_THROW(gz_parse(interval(), "@x []"), InputError);
}

TEST(Sum, Examples) {
  const auto a = eta(interval(), R(3, 4)), b = eta(interval(), R(1, 2));
  EXPECT_EQ(gz_add(interval(), a, b), seq(1, {R(1, 4)}));
  EXPECT_EQ(gz_add(interval(), a, gz_integer(0)), a);
  EXPECT_EQ(gz_add(interval(), gz_integer(1), gz_integer(-1)), gz_integer(0));
  EXPECT_EQ(gz_add(interval(), gz_integer(3), gz_integer(-5)), gz_integer(-2));
}

TEST(Sum, MatchesBruteForceConvolution) {
  std::mt19937_64 rng(3);
  for (const auto& A : bases())
    for (int t = 0; t < 60; ++t) {
      const auto a = random_good_sequence(*A, rng, 3, 8), b = random_good_sequence(*A, rng, 3, 8);
      const auto s = gz_add(*A, a, b);
      for (long n = -8; n <= 8; ++n) EXPECT_EQ(s.at(*A, n), sum_at(*A, a, b, n)) << A->name();
      EXPECT_EQ(gz_add_oplus_form(*A, a, b), s);
    }
}

TEST(Sum, MonoidLaws) {
  std::mt19937_64 rng(4);
  for (const auto& A : bases())
    for (int t = 0; t < 80; ++t) {
      const auto a = random_good_sequence(*A, rng, 4, 8), b = random_good_sequence(*A, rng, 4, 8),
                 c = random_good_sequence(*A, rng, 4, 8);
      EXPECT_EQ(gz_add(*A, a, b), gz_add(*A, b, a));
      EXPECT_EQ(gz_add(*A, gz_add(*A, a, b), c), gz_add(*A, a, gz_add(*A, b, c)));
      EXPECT_EQ(gz_add(*A, a, gz_integer(0)), a);
      const auto ab = gz_add(*A, a, b);
      EXPECT_EQ(gz_canonicalize(*A, ab.offset, ab.values), ab);
      EXPECT_EQ(gz_add(*A, a, gz_lattice(*A, BinOp::join, b, c)),
                gz_lattice(*A, BinOp::join, gz_add(*A, a, b), gz_add(*A, a, c)));
      EXPECT_EQ(gz_add(*A, a, gz_lattice(*A, BinOp::meet, b, c)),
                gz_lattice(*A, BinOp::meet, gz_add(*A, a, b), gz_add(*A, a, c)));
    }
}

TEST(Lattice, Examples) {
  const auto& I = interval();
  EXPECT_EQ(gz_lattice(I, BinOp::join, eta(I, R(3, 4)), eta(I, R(1, 2))), eta(I, R(3, 4)));
  EXPECT_EQ(gz_lattice(I, BinOp::meet, seq(1, {R(1, 4)}), eta(I, R(1, 2))), eta(I, R(1, 2)));
  const auto a = seq(-1, {R(1, 8)});
  EXPECT_EQ(gz_lattice(I, BinOp::join, a, a), a);
}

TEST(Lattice, OrderIsPointwise) {
  std::mt19937_64 rng(5);
  for (const auto& A : bases())
    for (int t = 0; t < 200; ++t) {
      const auto a = random_good_sequence(*A, rng, 3, 4), b = random_good_sequence(*A, rng, 3, 4);
      const auto wa = window(*A, a, -6, 8), wb = window(*A, b, -6, 8);
      bool pointwise = true;
      for (std::size_t i = 0; i < wa.size(); ++i) pointwise = pointwise && A->leq(wa[i], wb[i]);
      EXPECT_EQ(gz_leq(*A, a, b), pointwise) << A->name();
    }
}

TEST(Constants, Examples) {
  const auto& I = interval();
  EXPECT_EQ(gz_constant(I, R(3, 2)), seq(1, {R(1, 2)}));
  EXPECT_EQ(gz_constant(I, R(2)), seq(2, {}));
  EXPECT_EQ(gz_constant(I, R(-1, 2)), seq(-1, {R(1, 2)}));
  EXPECT_EQ(gz_constant(I, 0), gz_integer(0));
}

TEST(ZetaTheta, Examples) {
  const auto Z = lmonoid_builtin("z");
  const auto D = lmonoid_builtin("dyadics");
  EXPECT_EQ(zeta(*Z, Value(2)), seq(2, {}));
  EXPECT_EQ(zeta(*D, Value(R(3, 2))), seq(1, {R(1, 2)}));
  for (const auto& name : lmonoid_builtin_names()) {
    const auto M = lmonoid_builtin(name);
    EXPECT_EQ(zeta(*M, M->zero()), gz_integer(0)) << name;
    EXPECT_EQ(theta(*M, gz_integer(0)), M->zero()) << name;
  }
  EXPECT_EQ(theta(*D, seq(1, {R(1, 2)})), Value(R(3, 2)));
  for (long x = -20; x <= 20; ++x) EXPECT_EQ(theta(*Z, zeta(*Z, Value(x))), Value(x));
}

TEST(ZetaTheta, FormulaOracle) {
  const auto D = lmonoid_builtin("dyadics");
  const auto G = gamma_of(D);
  for (long k = -48; k <= 48; ++k) {
    const Rational x = R(k, 8);
    const auto z = zeta(*D, Value(x));
    for (long n = -8; n <= 8; ++n) EXPECT_EQ(z.at(*G, n), Value(unit_clip(x - n)));
    EXPECT_EQ(theta(*D, z), Value(x));
  }
}

TEST(Eta, Examples) {
  const auto& I = interval();
  EXPECT_EQ(eta(I, R(1, 2)), seq(0, {R(1, 2)}));
  EXPECT_EQ(eta(I, 0), gz_integer(0));
  EXPECT_EQ(eta(I, 1), gz_integer(1));
  const auto A = make_luka_chain(2);
  const XiAlgebra xi(*A);
  const auto carrier = *A->finite_carrier();
  for (const auto& x : carrier)
    for (const auto& y : carrier) {
      EXPECT_EQ(xi.gamma_oplus(eta(*A, x), eta(*A, y)), eta(*A, A->oplus(x, y)));
      EXPECT_EQ(xi.gamma_odot(eta(*A, x), eta(*A, y)), eta(*A, A->odot(x, y)));
    }
}

TEST(Complement, Examples) {
  EXPECT_EQ(mv_complement(*make_luka_chain(2), R(1, 4)), Value(R(3, 4)));
  const auto F = make_function_algebra(FinPoset::chain(2));
  EXPECT_FALSE(mv_complement(*F, Value{0, 1}).has_value());
  EXPECT_EQ(mv_complement(*F, F->zero()), F->one());
  EXPECT_EQ(mv_complement(*make_luka_chain(1), 0), Value(1));
  EXPECT_FALSE(mv_complement(*make_lattice_mvm(FinPoset::builtin("chain3")), Value(1)).has_value());
}

TEST(Negation, InversesOnChains) {
  const auto A = make_luka_chain(2);
  const XiAlgebra xi(*A);
  for (const auto& s : xi.enumerate(-2, 2, 2)) {
    const auto neg = gz_negate(*A, s);
    ASSERT_TRUE(neg.has_value());
    EXPECT_EQ(gz_add(*A, s, *neg), gz_integer(0)) << s.str(*A);
  }
}

TEST(Roundtrip, LMonoids) {
  for (const auto& name : {"z", "dyadics", "lex-z-flat"}) {
    const auto M = lmonoid_builtin(name);
    const auto G = gamma_of(M);
    const XiAlgebra xi(*G);
    const auto rep = check_equiv_roundtrip(*M, M->samples(2), xi.enumerate(-1, 1, 2), *G);
    EXPECT_TRUE(rep.passed()) << name;
  }
}

TEST(Roundtrip, FiniteAlgebras) {
  for (unsigned k = 0; k <= 2; ++k) EXPECT_TRUE(check_equiv_roundtrip(*make_luka_chain(k), 3).passed()) << k;
  EXPECT_TRUE(check_equiv_roundtrip(*make_lattice_mvm(FinPoset::builtin("chain3")), 3).passed());
}

TEST(Xi, UlmLaws) {
  const auto A = make_luka_chain(1);
  const XiAlgebra xi(*A);
  const auto rep = check_ulm<XiAlgebra, GoodZSeq>(xi, xi.enumerate(-1, 0, 2), "xi", [&](const GoodZSeq& s) {
    return s.str(*A);
  });
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(xi.order_unit(gz_integer(-3)), 3UL);
  EXPECT_EQ(xi.order_unit(seq(2, {R(1, 2)})), 3UL);
}
