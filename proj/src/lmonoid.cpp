#include "mvm/lmonoid.hpp"

#include <stdexcept>

namespace mvm {

Value LMonoidModel::times(unsigned long n, const Value& u) const {
  Value acc = zero();
  for (unsigned long i = 0; i < n; ++i) acc = add(acc, u);
  return acc;
}

Value LMonoidModel::integer(long k) const { return k >= 0 ? times(static_cast<unsigned long>(k), unit()) : times(static_cast<unsigned long>(-k), neg_unit()); }

Value LMonoidModel::halve(const Value&) const { throw std::logic_error(name() + " is not 2-divisible"); }

namespace {

unsigned long to_count(const mpz_class& z) {
  if (!z.fits_ulong_p()) throw InputError("order unit witness does not fit in 64 bits");
  return z.get_ui();
}

bool in_component(Component c, const Rational& r) {
  switch (c) {
    case Component::integers: return r.is_integer();
    case Component::dyadics: return r.is_dyadic();
    case Component::flat: return r.is_zero() || r == Rational(1);
  }
  return false;
}

std::vector<Rational> component_samples(Component c, unsigned level) {
  std::vector<Rational> out;
  switch (c) {
    case Component::integers:
      for (long i = -static_cast<long>(level); i <= static_cast<long>(level); ++i) out.emplace_back(i);
      break;
    case Component::dyadics:
      for (long i = -4; i <= 4; ++i) out.emplace_back(i, 2);
      break;
    case Component::flat:
      out = {Rational(0), Rational(1)};
      break;
  }
  return out;
}

std::vector<Rational> dyadic_grid(unsigned level) {
  std::vector<Rational> out;
  const long den = 1L << level;
  for (long i = 0; i <= den; ++i) out.emplace_back(i, den);
  return out;
}

class ScalarLMonoid final : public LMonoidModel {
 public:
  explicit ScalarLMonoid(Component kind) : kind_(kind) {}

  std::string name() const override { return kind_ == Component::integers ? "z" : "dyadics"; }
  Value add(const Value& a, const Value& b) const override { return a.scalar() + b.scalar(); }
  Value join(const Value& a, const Value& b) const override { return max(a.scalar(), b.scalar()); }
  Value meet(const Value& a, const Value& b) const override { return min(a.scalar(), b.scalar()); }
  Value zero() const override { return Rational(0); }
  Value unit() const override { return Rational(1); }
  Value neg_unit() const override { return Rational(-1); }
  bool contains(const Value& v) const override { return v.size() == 1 && in_component(kind_, v[0]); }
  bool totally_ordered() const override { return true; }
  Value constant(const Rational& t) const override { return t; }
  bool has_dyadic_constants() const override { return kind_ == Component::dyadics; }
  bool two_divisible() const override { return kind_ == Component::dyadics; }
  Value halve(const Value& a) const override {
    if (!two_divisible()) return LMonoidModel::halve(a);
    return a.scalar() * Rational(1, 2);
  }

  std::vector<Value> samples(unsigned level) const override {
    std::vector<Value> out;
    if (kind_ == Component::integers) {
      for (const auto& r : component_samples(kind_, level)) out.emplace_back(r);
    } else {
      const long den = 1L << level;
      for (long i = -2 * den; i <= 2 * den; ++i) out.emplace_back(Rational(i, den));
    }
    return out;
  }

  std::optional<std::vector<Value>> unit_interval() const override {
    if (kind_ == Component::integers) return std::vector<Value>{Rational(0), Rational(1)};
    return std::nullopt;
  }

  std::vector<Value> unit_interval_grid(unsigned level) const override {
    if (auto u = unit_interval()) return *u;
    std::vector<Value> out;
    for (auto& r : dyadic_grid(level)) out.emplace_back(std::move(r));
    return out;
  }

  unsigned long order_unit(const Value& x) const override {
    const mpz_class up = x.scalar().ceil();
    const mpz_class down = (-x.scalar()).ceil();
    return std::max({1UL, up > 0 ? to_count(up) : 0UL, down > 0 ? to_count(down) : 0UL});
  }

 private:
  Component kind_;
};

class LexLMonoid final : public LMonoidModel {
 public:
  LexLMonoid(Component first, Component second) : first_(first), second_(second) {
    if (first == Component::flat) throw InputError("lexicographic first component must be integers or dyadics");
  }

  std::string name() const override {
    return std::string("lex-") + (first_ == Component::integers ? "z" : "d") + "-" +
           (second_ == Component::flat ? "flat" : (second_ == Component::integers ? "z" : "d"));
  }

  Value add(const Value& a, const Value& b) const override {
    return Value{a[0] + b[0], second_ == Component::flat ? max(a[1], b[1]) : a[1] + b[1]};
  }
  Value join(const Value& a, const Value& b) const override { return a < b ? b : a; }
  Value meet(const Value& a, const Value& b) const override { return a < b ? a : b; }
  Value zero() const override { return Value{Rational(0), Rational(0)}; }
  Value unit() const override { return Value{Rational(1), Rational(0)}; }
  Value neg_unit() const override { return Value{Rational(-1), Rational(0)}; }
  bool contains(const Value& v) const override {
    return v.size() == 2 && in_component(first_, v[0]) && in_component(second_, v[1]);
  }
  bool totally_ordered() const override { return true; }
  Value constant(const Rational& t) const override { return Value{t, Rational(0)}; }
  bool has_dyadic_constants() const override { return first_ == Component::dyadics; }

  std::vector<Value> samples(unsigned level) const override {
    std::vector<Value> out;
    for (const auto& a : component_samples(first_, level))
      for (const auto& b : component_samples(second_, level)) out.push_back(Value{a, b});
    return out;
  }

  std::optional<std::vector<Value>> unit_interval() const override {
    if (first_ == Component::integers && second_ == Component::flat)
      return std::vector<Value>{Value{Rational(0), Rational(0)}, Value{Rational(0), Rational(1)},
                                Value{Rational(1), Rational(0)}};
    return std::nullopt;
  }

  std::vector<Value> unit_interval_grid(unsigned level) const override {
    if (auto u = unit_interval()) return *u;
    std::vector<Value> out;
    const auto firsts = first_ == Component::integers ? std::vector<Rational>{Rational(0), Rational(1)} : dyadic_grid(level);
    const long span = second_ == Component::flat ? 1 : static_cast<long>(level);
    const long lo = second_ == Component::flat ? 0 : -span;
    for (const auto& a : firsts)
      for (long y = lo; y <= span; ++y) {
        Value v{a, Rational(y)};
        if (leq(zero(), v) && leq(v, unit())) out.push_back(std::move(v));
      }
    return out;
  }

  unsigned long order_unit(const Value& x) const override {
    const Rational& a = x[0];
    const Rational& b = x[1];
    const mpz_class up = (a.is_integer() && b.sign() <= 0) ? a.floor() : mpz_class(a.floor() + 1);
    const Rational na = -a;
    const mpz_class down = (na.is_integer() && b.sign() >= 0) ? na.floor() : mpz_class(na.floor() + 1);
    return std::max({1UL, up > 0 ? to_count(up) : 0UL, down > 0 ? to_count(down) : 0UL});
  }

 private:
  Component first_;
  Component second_;
};

}  // namespace

LMonoidPtr make_scalar_lmonoid(Component kind) {
  if (kind == Component::flat) throw InputError("the flat component is not a unital ℓ-monoid on its own");
  return std::make_shared<ScalarLMonoid>(kind);
}

LMonoidPtr make_lex_lmonoid(Component first, Component second) { return std::make_shared<LexLMonoid>(first, second); }

std::vector<std::string> lmonoid_builtin_names() { return {"z", "dyadics", "lex-z-flat", "lex-z-z", "lex-d-flat"}; }

LMonoidPtr lmonoid_builtin(const std::string& name) {
  if (name == "z") return make_scalar_lmonoid(Component::integers);
  if (name == "dyadics") return make_scalar_lmonoid(Component::dyadics);
  if (name == "lex-z-flat") return make_lex_lmonoid(Component::integers, Component::flat);
  if (name == "lex-z-z") return make_lex_lmonoid(Component::integers, Component::integers);
  if (name == "lex-d-flat") return make_lex_lmonoid(Component::dyadics, Component::flat);
  throw InputError("unknown l-monoid '" + name + "'");
}

}  // namespace mvm
