#include "mvm/good_seq.hpp"

#include <algorithm>
#include <set>

namespace mvm {

bool is_good_pair(const AlgebraModel& alg, const Value& x0, const Value& x1) {
  return alg.oplus(x0, x1) == x0 && alg.odot(x0, x1) == x1;
}

Value GoodZSeq::at(const AlgebraModel& alg, long k) const {
  if (k < offset) return alg.one();
  if (k >= end()) return alg.zero();
  return values[static_cast<std::size_t>(k - offset)];
}

std::string GoodZSeq::str(const AlgebraModel& alg) const {
  std::string out = "@" + std::to_string(offset) + " [";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + alg.format(values[i]);
  return out + "]";
}

namespace {

/// Index of the first bad adjacent pair, if any.
std::optional<long> first_bad_pair(const AlgebraModel& alg, long offset, const std::vector<Value>& values) {
  const GoodZSeq raw{offset, values};
  for (long k = offset - 1; k < raw.end(); ++k)
    if (!is_good_pair(alg, raw.at(alg, k), raw.at(alg, k + 1))) return k;
  return std::nullopt;
}

GoodZSeq trim(const AlgebraModel& alg, long offset, std::vector<Value> values) {
  const Value one = alg.one();
  const Value zero = alg.zero();
  std::size_t lead = 0;
  while (lead < values.size() && values[lead] == one) ++lead;
  while (values.size() > lead && values.back() == zero) values.pop_back();
  values.erase(values.begin(), values.begin() + static_cast<long>(lead));
  return {offset + static_cast<long>(lead), std::move(values)};
}

/// Canonical form of a sequence the module itself computed; a goodness
/// failure here means the model is not an MV-monoidal algebra.
GoodZSeq computed(const AlgebraModel& alg, long offset, std::vector<Value> values, const char* what) {
  if (auto k = first_bad_pair(alg, offset, values))
    throw std::logic_error(std::string(what) + " over " + alg.name() + " is not good at index " + std::to_string(*k));
  return trim(alg, offset, std::move(values));
}

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

GoodZSeq gz_canonicalize(const AlgebraModel& alg, long offset, std::vector<Value> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!alg.contains(values[i]))
      throw InputError("value " + values[i].str() + " at index " + std::to_string(offset + static_cast<long>(i)) +
                       " is not an element of " + alg.name());
  if (auto k = first_bad_pair(alg, offset, values)) {
    const GoodZSeq raw{offset, values};
    throw InputError("not a good sequence: (" + alg.format(raw.at(alg, *k)) + ", " + alg.format(raw.at(alg, *k + 1)) +
                     ") at index " + std::to_string(*k) + " is not a good pair");
  }
  return trim(alg, offset, std::move(values));
}

GoodZSeq gz_parse(const AlgebraModel& alg, std::string_view text) {
  const std::string t = strip(text);
  const auto open = t.find('[');
  if (t.empty() || t[0] != '@' || open == std::string::npos || t.back() != ']')
    throw InputError("expected '@offset [v1, v2, ...]', got '" + t + "'");
  long offset = 0;
  try {
    std::size_t used = 0;
    const std::string num = strip(t.substr(1, open - 1));
    offset = std::stol(num, &used);
    if (used != num.size()) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("bad offset in '" + t + "'");
  }
  std::vector<Value> values;
  const std::string body = strip(t.substr(open + 1, t.size() - open - 2));
  if (!body.empty())
    for (const auto& item : split_top_level(body)) values.push_back(alg.parse(strip(item)));
  return gz_canonicalize(alg, offset, std::move(values));
}

GoodZSeq gz_integer(long k) { return {k, {}}; }

GoodZSeq gz_add(const AlgebraModel& alg, const GoodZSeq& a, const GoodZSeq& b, bool cross_check) {
  const long lo = a.offset + b.offset;
  const long hi = a.end() + b.end();
  std::vector<Value> out;
  for (long n = lo; n < hi; ++n) {
    // a(k) ⊕ b(n−k) differs from 1 only for a.offset ≤ k ≤ n − b.offset.
    Value acc = alg.one();
    for (long k = a.offset; k <= n - b.offset; ++k) acc = alg.odot(acc, alg.oplus(a.at(alg, k), b.at(alg, n - k)));
    out.push_back(std::move(acc));
  }
  GoodZSeq sum = computed(alg, lo, std::move(out), "sum");
  if (cross_check) {
    const GoodZSeq other = gz_add_oplus_form(alg, a, b);
    if (other != sum)
      throw std::logic_error("sum formulas disagree over " + alg.name() + ": " + sum.str(alg) + " vs " + other.str(alg));
  }
  return sum;
}

GoodZSeq gz_add_oplus_form(const AlgebraModel& alg, const GoodZSeq& a, const GoodZSeq& b) {
  const long lo = a.offset + b.offset;
  const long hi = a.end() + b.end();
  std::vector<Value> out;
  for (long n = lo; n < hi; ++n) {
    // a(k) ⊙ b(n−k−1) differs from 0 only for n − b.end() ≤ k < a.end().
    Value acc = alg.zero();
    for (long k = n - b.end(); k < a.end(); ++k) acc = alg.oplus(acc, alg.odot(a.at(alg, k), b.at(alg, n - k - 1)));
    out.push_back(std::move(acc));
  }
  return computed(alg, lo, std::move(out), "sum");
}

GoodZSeq gz_lattice(const AlgebraModel& alg, BinOp op, const GoodZSeq& a, const GoodZSeq& b) {
  if (op != BinOp::join && op != BinOp::meet) throw std::logic_error("gz_lattice takes join or meet");
  const long lo = std::min(a.offset, b.offset);
  const long hi = std::max(a.end(), b.end());
  std::vector<Value> out;
  for (long n = lo; n < hi; ++n)
    out.push_back(op == BinOp::join ? alg.join(a.at(alg, n), b.at(alg, n)) : alg.meet(a.at(alg, n), b.at(alg, n)));
  return computed(alg, lo, std::move(out), binop_name(op));
}

bool gz_leq(const AlgebraModel& alg, const GoodZSeq& a, const GoodZSeq& b) {
  const long lo = std::min(a.offset, b.offset);
  const long hi = std::max(a.end(), b.end());
  for (long n = lo; n < hi; ++n)
    if (!alg.leq(a.at(alg, n), b.at(alg, n))) return false;
  return true;
}

GoodZSeq gz_constant(const AlgebraModel& alg, const Rational& t) {
  const mpz_class k = t.floor();
  if (!k.fits_slong_p()) throw InputError("constant " + t.str() + " is out of range");
  const Rational frac = t - Rational(mpq_class(k));
  if (!frac.is_zero() && !t.is_dyadic()) throw InputError("constant " + t.str() + " is not dyadic");
  if (frac.is_zero()) return gz_integer(k.get_si());
  return gz_canonicalize(alg, k.get_si(), {alg.constant(frac)});
}

GoodZSeq eta(const AlgebraModel& alg, const Value& x) { return gz_canonicalize(alg, 0, {x}); }

GoodZSeq random_good_sequence(const AlgebraModel& alg, std::mt19937_64& rng, std::size_t max_terms, unsigned max_den) {
  std::uniform_int_distribution<long> offset(-2, 2);
  std::uniform_int_distribution<std::size_t> terms(0, max_terms);
  GoodZSeq s = gz_integer(offset(rng));
  for (std::size_t k = terms(rng); k > 0; --k) s = gz_add(alg, s, eta(alg, alg.random_element(rng, max_den)));
  return s;
}

GoodZSeq zeta(const LMonoidModel& m, const Value& x) {
  const unsigned long bound = m.order_unit(x);
  const long n0 = -static_cast<long>(bound);
  std::vector<Value> out;
  for (long n = n0; n < static_cast<long>(bound); ++n) {
    const Value shifted = m.add(x, m.integer(-n));
    out.push_back(m.meet(m.join(shifted, m.zero()), m.unit()));
  }
  const Value one = m.unit();
  const Value zero = m.zero();
  std::size_t lead = 0;
  while (lead < out.size() && out[lead] == one) ++lead;
  while (out.size() > lead && out.back() == zero) out.pop_back();
  out.erase(out.begin(), out.begin() + static_cast<long>(lead));
  return {n0 + static_cast<long>(lead), std::move(out)};
}

Value theta(const LMonoidModel& m, const GoodZSeq& s) {
  Value acc = m.integer(s.offset);
  for (const auto& v : s.values) acc = m.add(acc, v);
  return acc;
}

std::optional<Value> mv_complement(const AlgebraModel& alg, const Value& x, unsigned exponent) {
  const auto carrier = alg.finite_carrier();
  const auto candidates = carrier ? *carrier : alg.grid(exponent);
  for (const auto& y : candidates)
    if (alg.oplus(x, y) == alg.one() && alg.odot(x, y) == alg.zero()) return y;
  return std::nullopt;
}

GoodZSeq XiAlgebra::times(unsigned long n, const GoodZSeq& u) const {
  GoodZSeq acc = zero();
  for (unsigned long i = 0; i < n; ++i) acc = add(acc, u);
  return acc;
}

unsigned long XiAlgebra::order_unit(const GoodZSeq& x) const {
  return static_cast<unsigned long>(std::max({1L, x.end(), -x.offset}));
}

GoodZSeq XiAlgebra::gamma_oplus(const GoodZSeq& x, const GoodZSeq& y) const { return meet(add(x, y), unit()); }

GoodZSeq XiAlgebra::gamma_odot(const GoodZSeq& x, const GoodZSeq& y) const {
  return join(add(add(x, y), neg_unit()), zero());
}

std::vector<GoodZSeq> XiAlgebra::enumerate(long lo, long hi, std::size_t width, unsigned exponent) const {
  const auto carrier = a_.finite_carrier();
  const auto domain = carrier ? *carrier : a_.grid(exponent);
  std::set<GoodZSeq> out;
  for (long offset = lo; offset <= hi; ++offset) {
    std::vector<std::size_t> idx;
    for (std::size_t len = 0; len <= width; ++len) {
      idx.assign(len, 0);
      for (;;) {
        std::vector<Value> values;
        for (auto i : idx) values.push_back(domain[i]);
        if (!first_bad_pair(a_, offset, values)) out.insert(trim(a_, offset, std::move(values)));
        std::size_t k = len;
        while (k > 0 && ++idx[k - 1] == domain.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  return {out.begin(), out.end()};
}

std::optional<GoodZSeq> gz_negate(const AlgebraModel& alg, const GoodZSeq& s) {
  std::vector<Value> values;
  for (auto it = s.values.rbegin(); it != s.values.rend(); ++it) {
    auto c = mv_complement(alg, *it);
    if (!c) return std::nullopt;
    values.push_back(std::move(*c));
  }
  return computed(alg, -s.end(), std::move(values), "negation");
}

namespace {

CheckResult verdict(std::string id, std::size_t tuples, std::optional<std::string> failure) {
  CheckResult r;
  r.id = std::move(id);
  r.tuples = tuples;
  if (failure) {
    r.status = Status::fail;
    r.reason = std::move(*failure);
  }
  return r;
}

}  // namespace

VerificationReport check_equiv_roundtrip(const LMonoidModel& m, const std::vector<Value>& samples,
                                         const std::vector<GoodZSeq>& sequences, const AlgebraModel& gamma) {
  VerificationReport rep;
  rep.suite = "equiv";
  rep.model = m.name();
  rep.strategy = "samples:" + std::to_string(samples.size());

  AxiomResult roundtrip{"theta-zeta", {}};
  std::optional<std::string> bad;
  for (const auto& x : samples)
    if (!bad && theta(m, zeta(m, x)) != x) bad = "theta(zeta(" + x.str() + ")) = " + theta(m, zeta(m, x)).str();
  roundtrip.checks.push_back(verdict("theta-after-zeta", samples.size(), bad));
  bad.reset();
  for (const auto& s : sequences)
    if (!bad && zeta(m, theta(m, s)) != s) bad = "zeta(theta(" + s.str(gamma) + ")) differs";
  roundtrip.checks.push_back(verdict("zeta-after-theta", sequences.size(), bad));
  rep.axioms.push_back(std::move(roundtrip));

  AxiomResult hom{"zeta-morphism", {}};
  auto pairwise = [&](std::string id, auto lhs, auto rhs) {
    std::optional<std::string> failure;
    std::size_t n = 0;
    for (const auto& x : samples)
      for (const auto& y : samples) {
        if (failure) break;
        ++n;
        if (lhs(x, y) != rhs(x, y)) failure = "fails at x=" + x.str() + ", y=" + y.str();
      }
    hom.checks.push_back(verdict(std::move(id), n, failure));
  };
  pairwise("add", [&](const Value& x, const Value& y) { return zeta(m, m.add(x, y)); },
           [&](const Value& x, const Value& y) { return gz_add(gamma, zeta(m, x), zeta(m, y)); });
  pairwise("join", [&](const Value& x, const Value& y) { return zeta(m, m.join(x, y)); },
           [&](const Value& x, const Value& y) { return gz_lattice(gamma, BinOp::join, zeta(m, x), zeta(m, y)); });
  pairwise("meet", [&](const Value& x, const Value& y) { return zeta(m, m.meet(x, y)); },
           [&](const Value& x, const Value& y) { return gz_lattice(gamma, BinOp::meet, zeta(m, x), zeta(m, y)); });
  auto constant = [&](std::string id, const Value& x, long k) {
    hom.checks.push_back(verdict(std::move(id), 1,
                                 zeta(m, x) == gz_integer(k) ? std::nullopt : std::optional<std::string>("differs")));
  };
  constant("zero", m.zero(), 0);
  constant("unit", m.unit(), 1);
  constant("neg-unit", m.neg_unit(), -1);
  rep.axioms.push_back(std::move(hom));
  return rep;
}

VerificationReport check_equiv_roundtrip(const AlgebraModel& alg, std::size_t width) {
  const auto carrier = alg.finite_carrier();
  if (!carrier) throw InputError("the eta round trip needs a finite carrier; " + alg.name() + " is infinite");
  const XiAlgebra xi(alg);
  VerificationReport rep;
  rep.suite = "equiv";
  rep.model = alg.name();
  rep.strategy = "exhaustive";

  AxiomResult unit_map{"eta", {}};
  std::set<GoodZSeq> images;
  for (const auto& x : *carrier) images.insert(eta(alg, x));
  unit_map.checks.push_back(verdict("injective", carrier->size(),
                                    images.size() == carrier->size() ? std::nullopt
                                                                     : std::optional<std::string>("two elements collide")));
  std::set<GoodZSeq> one_step{gz_integer(0), gz_integer(1)};
  for (const auto& x : *carrier)
    if (x != alg.zero() && x != alg.one()) one_step.insert(GoodZSeq{0, {x}});
  unit_map.checks.push_back(verdict("onto-one-step", one_step.size(),
                                    images == one_step ? std::nullopt
                                                       : std::optional<std::string>("image is not the one-step sequences")));
  std::optional<std::string> bad;
  std::size_t n = 0;
  for (const auto& x : *carrier)
    for (const auto& y : *carrier) {
      if (bad) break;
      ++n;
      const auto ex = eta(alg, x);
      const auto ey = eta(alg, y);
      if (xi.gamma_oplus(ex, ey) != eta(alg, alg.oplus(x, y))) bad = "oplus at " + x.str() + ", " + y.str();
      else if (xi.gamma_odot(ex, ey) != eta(alg, alg.odot(x, y))) bad = "odot at " + x.str() + ", " + y.str();
      else if (xi.join(ex, ey) != eta(alg, alg.join(x, y))) bad = "join at " + x.str() + ", " + y.str();
      else if (xi.meet(ex, ey) != eta(alg, alg.meet(x, y))) bad = "meet at " + x.str() + ", " + y.str();
    }
  unit_map.checks.push_back(verdict("morphism", n, bad));
  rep.axioms.push_back(std::move(unit_map));

  const auto seqs = xi.enumerate(-1, 1, width);
  AxiomResult sums{"sum", {}};
  bad.reset();
  n = 0;
  for (const auto& a : seqs)
    for (const auto& b : seqs) {
      if (bad) break;
      ++n;
      try {
        if (xi.add(a, b) != xi.add(b, a)) bad = "not commutative at " + a.str(alg) + ", " + b.str(alg);
      } catch (const std::logic_error& e) {
        bad = e.what();
      }
    }
  sums.checks.push_back(verdict("good-and-commutative", n, bad));
  rep.axioms.push_back(std::move(sums));

  AxiomResult inverses{"inverses", {}};
  const bool complemented = std::all_of(carrier->begin(), carrier->end(),
                                        [&](const Value& x) { return mv_complement(alg, x).has_value(); });
  CheckResult inv;
  inv.id = "group-like";
  if (!complemented) {
    inv.status = Status::skipped;
    inv.reason = "some element has no complement";
  } else {
    for (const auto& s : seqs) {
      ++inv.tuples;
      const auto neg = gz_negate(alg, s);
      if (!neg || xi.add(s, *neg) != xi.zero()) {
        inv.status = Status::fail;
        inv.reason = "no inverse for " + s.str(alg);
        break;
      }
    }
  }
  inverses.checks.push_back(std::move(inv));
  rep.axioms.push_back(std::move(inverses));
  return rep;
}

}  // namespace mvm
