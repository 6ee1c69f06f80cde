#include "mvm/model.hpp"

#include <cctype>

namespace mvm {

std::string_view fragment_name(Fragment f) {
  switch (f) {
    case Fragment::mvm_core: return "mvm-core";
    case Fragment::dyadic_constants: return "dyadic-constants";
    case Fragment::two_div: return "two-div";
    case Fragment::lambda: return "lambda";
  }
  return "?";
}

Value AlgebraModel::half(const Value&) const { throw UnsupportedSymbol(name() + " does not interpret h"); }

Value AlgebraModel::cohalf(const Value&) const { throw UnsupportedSymbol(name() + " does not interpret j"); }

Value AlgebraModel::constant(const Rational& t) const {
  if (t.is_zero()) return zero();
  if (t == Rational(1)) return one();
  throw UnsupportedSymbol(name() + " has no constant " + t.str());
}

std::optional<Value> AlgebraModel::envelope_constant(const Rational& t) const {
  if (supports(Fragment::dyadic_constants) || t.is_zero() || t == Rational(1)) return constant(t);
  return std::nullopt;
}

Value AlgebraModel::lambda(std::span<const Value>, const Value&) const {
  throw UnsupportedSymbol(name() + " does not interpret lambda");
}

std::vector<Value> AlgebraModel::grid(unsigned) const {
  if (auto c = finite_carrier()) return *c;
  throw UnsupportedSymbol(name() + " provides no grid enumeration");
}

Value AlgebraModel::random_element(std::mt19937_64& rng, unsigned) const {
  const auto elems = grid(6);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  return elems[pick(rng)];
}

std::optional<std::strong_ordering> AlgebraModel::compare_constant(const Value&, const Rational&) const {
  return std::nullopt;
}

std::optional<Rational> AlgebraModel::distance_hint(const Value&, const Value&) const { return std::nullopt; }

Value AlgebraModel::parse(std::string_view text) const {
  Value v = parse_value_text(text);
  if (!contains(v)) throw InputError("'" + std::string(text) + "' is not an element of " + name());
  return v;
}

Value parse_value_text(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty value");
  if (s.front() != '(') return Value(Rational::parse(s));
  if (s.back() != ')') throw InputError("unterminated tuple: '" + std::string(text) + "'");
  std::vector<Rational> coords;
  std::size_t start = 1;
  while (start < s.size()) {
    auto end = s.find(',', start);
    if (end == std::string::npos) end = s.size() - 1;
    coords.push_back(Rational::parse(std::string_view(s).substr(start, end - start)));
    start = end + 1;
  }
  return Value(std::move(coords));
}

Rational random_unit_rational(std::mt19937_64& rng, unsigned max_den) {
  std::uniform_int_distribution<long> den_dist(1, std::max<long>(1, max_den));
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, den);
  return Rational(num_dist(rng), den);
}

}  // namespace mvm
