#include "mvm/models.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <set>

#include "mvm/limit.hpp"

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

bool in_unit(const Rational& r) { return r.sign() >= 0 && r <= kOne; }

Rational random_dyadic_unit(std::mt19937_64& rng, unsigned max_den) {
  unsigned e = 0;
  while ((2UL << e) <= max_den && e < 30) ++e;
  std::uniform_int_distribution<unsigned> exp_dist(0, e);
  const long den = 1L << exp_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, den);
  return Rational(num_dist(rng), den);
}

/// Shared scalar arithmetic of the interval and its finite subchains.
class ScalarUnitModel : public AlgebraModel {
 public:
  Value zero() const override { return kZero; }
  Value one() const override { return kOne; }
  Value oplus(const Value& a, const Value& b) const override { return tplus(a.scalar(), b.scalar()); }
  Value odot(const Value& a, const Value& b) const override { return tdot(a.scalar(), b.scalar()); }
  Value join(const Value& a, const Value& b) const override { return max(a.scalar(), b.scalar()); }
  Value meet(const Value& a, const Value& b) const override { return min(a.scalar(), b.scalar()); }
  bool totally_ordered() const override { return true; }
  std::optional<std::strong_ordering> compare_constant(const Value& x, const Rational& t) const override {
    return x.scalar() <=> t;
  }
  std::optional<Rational> distance_hint(const Value& x, const Value& y) const override {
    return abs(x.scalar() - y.scalar());
  }
};

class IntervalModel final : public ScalarUnitModel {
 public:
  std::string name() const override { return "interval"; }
  bool supports(Fragment) const override { return true; }
  Value half(const Value& a) const override { return a.scalar() * Rational(1, 2); }
  Value cohalf(const Value& a) const override { return (kOne + a.scalar()) * Rational(1, 2); }
  Value constant(const Rational& t) const override {
    if (!in_unit(t)) throw InputError("constant outside [0,1]: " + t.str());
    return t;
  }
  Value lambda(std::span<const Value> prefix, const Value& tail) const override {
    std::vector<Rational> p;
    p.reserve(prefix.size());
    for (const auto& v : prefix) p.push_back(v.scalar());
    return lambda_exact(p, tail.scalar());
  }
  bool contains(const Value& v) const override { return v.size() == 1 && in_unit(v[0]); }
  std::optional<std::vector<Value>> finite_carrier() const override { return std::nullopt; }
  std::vector<Value> grid(unsigned exponent) const override {
    if (exponent > 20) throw InputError("grid exponent above 20");
    std::vector<Value> out;
    const long den = 1L << exponent;
    for (long i = 0; i <= den; ++i) out.emplace_back(Rational(i, den));
    return out;
  }
  Value random_element(std::mt19937_64& rng, unsigned max_den) const override {
    return random_unit_rational(rng, max_den);
  }
};

class LukaChain final : public ScalarUnitModel {
 public:
  explicit LukaChain(unsigned k) : k_(k) {
    if (k > 16) throw InputError("luka chains are limited to k <= 16");
  }
  std::string name() const override { return "luka:" + std::to_string(k_); }
  bool supports(Fragment f) const override { return f == Fragment::mvm_core; }
  std::optional<Value> envelope_constant(const Rational& t) const override {
    if (!in_unit(t)) return std::nullopt;
    return Value(t);
  }
  bool contains(const Value& v) const override {
    if (v.size() != 1 || !in_unit(v[0])) return false;
    const auto e = v[0].dyadic_exponent();
    return e && *e <= k_;
  }
  std::optional<std::vector<Value>> finite_carrier() const override {
    std::vector<Value> out;
    const long den = 1L << k_;
    for (long i = 0; i <= den; ++i) out.emplace_back(Rational(i, den));
    return out;
  }

 private:
  unsigned k_;
};

class GammaModel final : public AlgebraModel {
 public:
  explicit GammaModel(LMonoidPtr m) : m_(std::move(m)) {}

  std::string name() const override { return "gamma:" + m_->name(); }
  bool supports(Fragment f) const override {
    switch (f) {
      case Fragment::mvm_core: return true;
      case Fragment::dyadic_constants: return m_->has_dyadic_constants();
      case Fragment::two_div: return m_->two_divisible();
      case Fragment::lambda: return false;
    }
    return false;
  }
  Value zero() const override { return m_->zero(); }
  Value one() const override { return m_->unit(); }
  Value oplus(const Value& a, const Value& b) const override { return m_->meet(m_->add(a, b), m_->unit()); }
  Value odot(const Value& a, const Value& b) const override {
    return m_->join(m_->add(m_->add(a, b), m_->neg_unit()), m_->zero());
  }
  Value join(const Value& a, const Value& b) const override { return m_->join(a, b); }
  Value meet(const Value& a, const Value& b) const override { return m_->meet(a, b); }
  Value half(const Value& a) const override {
    if (!m_->two_divisible()) return AlgebraModel::half(a);
    return m_->halve(a);
  }
  Value cohalf(const Value& a) const override {
    if (!m_->two_divisible()) return AlgebraModel::cohalf(a);
    return m_->halve(m_->add(a, m_->unit()));
  }
  Value constant(const Rational& t) const override {
    if (t.is_zero()) return zero();
    if (t == kOne) return one();
    if (!m_->has_dyadic_constants() || !t.is_dyadic() || !in_unit(t))
      throw UnsupportedSymbol(name() + " has no constant " + t.str());
    return m_->constant(t);
  }
  std::optional<Value> envelope_constant(const Rational& t) const override {
    if (!t.is_dyadic() || !in_unit(t)) return std::nullopt;
    return m_->constant(t);
  }
  bool contains(const Value& v) const override {
    return m_->contains(v) && m_->leq(m_->zero(), v) && m_->leq(v, m_->unit());
  }
  std::optional<std::vector<Value>> finite_carrier() const override { return m_->unit_interval(); }
  std::vector<Value> grid(unsigned exponent) const override { return m_->unit_interval_grid(exponent); }
  Value random_element(std::mt19937_64& rng, unsigned max_den) const override {
    if (!finite_carrier() && m_->two_divisible() && m_->zero().size() == 1) return random_dyadic_unit(rng, max_den);
    return AlgebraModel::random_element(rng, max_den);
  }
  bool totally_ordered() const override { return m_->totally_ordered(); }
  std::optional<std::strong_ordering> compare_constant(const Value& x, const Rational& t) const override {
    if (!m_->totally_ordered()) return std::nullopt;
    const auto c = envelope_constant(t);
    if (!c) return std::nullopt;
    if (x == *c) return std::strong_ordering::equal;
    return m_->leq(x, *c) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  std::optional<Rational> distance_hint(const Value& x, const Value& y) const override {
    if (x.size() == 1) return abs(x.scalar() - y.scalar());
    return std::nullopt;
  }

 private:
  LMonoidPtr m_;
};

class DualModel final : public AlgebraModel {
 public:
  explicit DualModel(ModelPtr base) : base_(std::move(base)) {}

  std::string name() const override { return "dual:" + base_->name(); }
  bool supports(Fragment f) const override { return f == Fragment::mvm_core && base_->supports(f); }
  Value zero() const override { return base_->one(); }
  Value one() const override { return base_->zero(); }
  Value oplus(const Value& a, const Value& b) const override { return base_->odot(a, b); }
  Value odot(const Value& a, const Value& b) const override { return base_->oplus(a, b); }
  Value join(const Value& a, const Value& b) const override { return base_->meet(a, b); }
  Value meet(const Value& a, const Value& b) const override { return base_->join(a, b); }
  bool contains(const Value& v) const override { return base_->contains(v); }
  std::optional<std::vector<Value>> finite_carrier() const override { return base_->finite_carrier(); }
  std::vector<Value> grid(unsigned exponent) const override { return base_->grid(exponent); }
  Value random_element(std::mt19937_64& rng, unsigned max_den) const override {
    return base_->random_element(rng, max_den);
  }
  bool totally_ordered() const override { return base_->totally_ordered(); }
  std::string format(const Value& v) const override { return base_->format(v); }
  Value parse(std::string_view text) const override { return base_->parse(text); }

 private:
  ModelPtr base_;
};

}  // namespace

ModelPtr make_interval_algebra() { return std::make_shared<IntervalModel>(); }

ModelPtr make_luka_chain(unsigned k) { return std::make_shared<LukaChain>(k); }

ModelPtr make_lattice_mvm(const FinPoset& lattice) { return make_table_model(lattice_mvm_tables(lattice)); }

ModelPtr gamma_of(LMonoidPtr m) { return std::make_shared<GammaModel>(std::move(m)); }

ModelPtr make_dual(ModelPtr base) { return std::make_shared<DualModel>(std::move(base)); }

// ---------------------------------------------------------------------------
// Function algebras

FunctionAlgebra::FunctionAlgebra(FinPoset base) : base_(std::move(base)) {}

std::string FunctionAlgebra::name() const { return "func(" + std::to_string(base_.size()) + " points)"; }

namespace {

template <typename F>
Value pointwise(const Value& a, const Value& b, F f) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a[i], b[i]));
  return Value(std::move(out));
}

template <typename F>
Value pointwise(const Value& a, F f) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a[i]));
  return Value(std::move(out));
}

}  // namespace

Value FunctionAlgebra::zero() const { return Value(std::vector<Rational>(base_.size(), kZero)); }
Value FunctionAlgebra::one() const { return Value(std::vector<Rational>(base_.size(), kOne)); }
Value FunctionAlgebra::oplus(const Value& a, const Value& b) const { return pointwise(a, b, tplus); }
Value FunctionAlgebra::odot(const Value& a, const Value& b) const { return pointwise(a, b, tdot); }
Value FunctionAlgebra::join(const Value& a, const Value& b) const {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return max(x, y); });
}
Value FunctionAlgebra::meet(const Value& a, const Value& b) const {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return min(x, y); });
}
Value FunctionAlgebra::half(const Value& a) const {
  return pointwise(a, [](const Rational& x) { return x * Rational(1, 2); });
}
Value FunctionAlgebra::cohalf(const Value& a) const {
  return pointwise(a, [](const Rational& x) { return (kOne + x) * Rational(1, 2); });
}
Value FunctionAlgebra::constant(const Rational& t) const {
  if (!in_unit(t)) throw InputError("constant outside [0,1]: " + t.str());
  return Value(std::vector<Rational>(base_.size(), t));
}

Value FunctionAlgebra::lambda(std::span<const Value> prefix, const Value& tail) const {
  std::vector<Rational> out;
  std::vector<Rational> column(prefix.size());
  for (std::size_t p = 0; p < base_.size(); ++p) {
    for (std::size_t i = 0; i < prefix.size(); ++i) column[i] = prefix[i][p];
    out.push_back(lambda_exact(column, tail[p]));
  }
  return Value(std::move(out));
}

bool FunctionAlgebra::contains(const Value& v) const {
  if (v.size() != base_.size()) return false;
  for (const auto& c : v.coords())
    if (!in_unit(c)) return false;
  return base_.monotone(v.coords());
}

std::vector<Value> FunctionAlgebra::grid(unsigned exponent) const {
  if (exponent > 20) throw InputError("grid exponent above 20");
  const long den = 1L << exponent;
  const std::size_t n = base_.size();
  std::vector<Value> out;
  std::vector<long> f(n, 0);
  // Points in index order; every earlier comparable point constrains the current one.
  std::function<void(std::size_t)> go = [&](std::size_t p) {
    if (out.size() > 1000000) throw InputError("function-algebra grid exceeds 10^6 elements");
    if (p == n) {
      std::vector<Rational> coords;
      for (long v : f) coords.emplace_back(v, den);
      out.emplace_back(std::move(coords));
      return;
    }
    long lo = 0, hi = den;
    for (std::size_t q = 0; q < p; ++q) {
      if (base_.le(q, p)) lo = std::max(lo, f[q]);
      if (base_.le(p, q)) hi = std::min(hi, f[q]);
    }
    for (long v = lo; v <= hi; ++v) {
      f[p] = v;
      go(p + 1);
    }
  };
  go(0);
  return out;
}

Value FunctionAlgebra::random_element(std::mt19937_64& rng, unsigned max_den) const {
  std::vector<Rational> raw;
  for (std::size_t p = 0; p < base_.size(); ++p) raw.push_back(random_unit_rational(rng, max_den));
  std::vector<Rational> f(base_.size());
  for (std::size_t p = 0; p < base_.size(); ++p) {
    f[p] = kZero;
    for (std::size_t q = 0; q < base_.size(); ++q)
      if (base_.le(q, p)) f[p] = max(f[p], raw[q]);
  }
  return Value(std::move(f));
}

std::optional<Rational> FunctionAlgebra::distance_hint(const Value& x, const Value& y) const {
  Rational d = kZero;
  for (std::size_t p = 0; p < x.size(); ++p) d = max(d, abs(x[p] - y[p]));
  return d;
}

std::shared_ptr<const FunctionAlgebra> make_function_algebra(FinPoset base) {
  return std::make_shared<FunctionAlgebra>(std::move(base));
}

// ---------------------------------------------------------------------------
// Generation

Generated subalgebra_generate(const AlgebraModel& alg, const std::vector<Value>& gens, std::size_t bound,
                              const std::vector<Rational>& constants, bool with_halving) {
  std::set<Value> seen;
  std::vector<Value> order;
  Generated out;
  auto add = [&](const Value& v) {
    if (seen.count(v)) return;
    if (seen.size() >= bound) {
      out.truncated = true;
      return;
    }
    seen.insert(v);
    order.push_back(v);
  };
  add(alg.zero());
  add(alg.one());
  for (const auto& t : constants) add(alg.constant(t));
  for (const auto& g : gens) {
    if (!alg.contains(g)) throw InputError("generator " + g.str() + " is not in " + alg.name());
    add(g);
  }
  const bool unary = with_halving && alg.supports(Fragment::two_div);
  // Each new element is combined with everything found before it, exactly once per pair.
  for (std::size_t i = 0; i < order.size() && !out.truncated; ++i) {
    const Value x = order[i];
    if (unary) {
      add(alg.half(x));
      add(alg.cohalf(x));
    }
    for (std::size_t j = 0; j <= i && !out.truncated; ++j) {
      const Value y = order[j];
      add(alg.oplus(x, y));
      add(alg.odot(x, y));
      add(alg.join(x, y));
      add(alg.meet(x, y));
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

// ---------------------------------------------------------------------------
// Loading

ModelPtr load_model(const std::string& spec) {
  auto after = [&](std::size_t n) { return spec.substr(n); };
  if (spec == "interval") return make_interval_algebra();
  if (spec.rfind("luka:", 0) == 0) {
    const auto k = after(5);
    if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("luka:K needs a natural number K, got '" + k + "'");
    return make_luka_chain(static_cast<unsigned>(std::stoul(k)));
  }
  if (spec.rfind("gamma:", 0) == 0) return gamma_of(lmonoid_builtin(after(6)));
  if (spec.rfind("lattice:", 0) == 0) return make_lattice_mvm(FinPoset::builtin(after(8)));
  if (spec.rfind("func:", 0) == 0) return make_function_algebra(FinPoset::builtin(after(5)));
  if (spec.rfind("dual:", 0) == 0) return make_dual(load_model(after(5)));
  if (spec.rfind("file:", 0) == 0) {
    const auto path = after(5);
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
    return make_table_model(FiniteAlgebra::from_json(doc, path));
  }
  for (const auto& n : lmonoid_builtin_names())
    if (spec == n) return gamma_of(lmonoid_builtin(n));
  throw InputError("unknown model '" + spec + "'");
}

}  // namespace mvm
