#include "mvm/duality.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace mvm {

namespace {

const Rational kZero(0);
const Rational kOne(1);

Value envelope(const AlgebraModel& alg, const Rational& t) {
  auto c = alg.envelope_constant(t);
  if (!c) throw UnsupportedSymbol(alg.name() + " has no dyadic constant " + t.str());
  return std::move(*c);
}

Rational dyadic(const mpz_class& k, unsigned m) { return Rational(mpq_class(k, mpz_class(1) << m)); }

CheckResult pair_failure(std::string id, std::size_t tuples, const Value& x, const Value& y, std::string reason) {
  CheckResult r;
  r.id = std::move(id);
  r.status = Status::fail;
  r.tuples = tuples;
  r.counterexample = Env{x, y};
  r.reason = std::move(reason);
  return r;
}

}  // namespace

bool within_distance(const AlgebraModel& alg, const Value& x, const Value& y, const Rational& t) {
  const Value lower = alg.odot(y, envelope(alg, kOne - t));
  const Value upper = alg.oplus(y, envelope(alg, t));
  return alg.leq(lower, x) && alg.leq(x, upper);
}

void certify_distance(const AlgebraModel& alg, const Value& x, const Value& y, const Rational& d, unsigned exponent) {
  if (d < kZero || d > kOne) throw std::logic_error("distance outside [0,1]: " + d.str());
  for (unsigned m = 0; m <= exponent; ++m) {
    const mpz_class scale = mpz_class(1) << m;
    const mpq_class scaled = d.raw() * scale;
    const Rational scaled_d{mpq_class(scaled)};
    const mpz_class above = scaled_d.floor() + 1;
    if (above <= scale && !within_distance(alg, x, y, dyadic(above, m)))
      throw std::logic_error("distance " + d.str() + " not certified: condition fails at t = " +
                             dyadic(above, m).str());
    const mpz_class below = scaled_d.ceil() - 1;
    if (below >= 0 && within_distance(alg, x, y, dyadic(below, m)))
      throw std::logic_error("distance " + d.str() + " not certified: condition holds at t = " +
                             dyadic(below, m).str());
  }
}

CertifiedInterval dist_bisect(const AlgebraModel& alg, const Value& x, const Value& y, unsigned exponent) {
  if (!within_distance(alg, x, y, kOne)) throw std::logic_error("condition fails at t = 1");
  mpz_class lo = 0, hi = mpz_class(1) << exponent;  // hi satisfies; lo is the last candidate below
  if (within_distance(alg, x, y, kZero)) return CertifiedInterval{kZero, kZero};
  while (hi - lo > 1) {
    const mpz_class mid = (lo + hi) / 2;
    if (within_distance(alg, x, y, dyadic(mid, exponent)))
      hi = mid;
    else
      lo = mid;
  }
  return {dyadic(lo, exponent), dyadic(hi, exponent)};
}

Rational dist_int(const AlgebraModel& alg, const Value& x, const Value& y) {
  std::optional<Rational> d = alg.distance_hint(x, y);
  if (!d && alg.totally_ordered()) {
    const auto ex = ess_value(alg, x), ey = ess_value(alg, y);
    if (ex.exact && ey.exact) d = abs(ex.lo - ey.lo);
  }
  if (!d) {
    const auto iv = dist_bisect(alg, x, y);
    d = EssResult{iv.lo, iv.hi, false}.estimate();
  }
  certify_distance(alg, x, y, *d);
  return *d;
}

VerificationReport archimedean_check(const AlgebraModel& alg, const std::vector<Value>& elements) {
  VerificationReport rep;
  rep.suite = "archimedean";
  rep.model = alg.name();
  rep.strategy = "pairs:" + std::to_string(elements.size());
  AxiomResult ax{"distance-separates", {}};
  CheckResult ok;
  ok.id = "dist-nonzero";
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (elements[i] == elements[j]) continue;
      ++ok.tuples;
      if (dist_int(alg, elements[i], elements[j]).is_zero()) {
        auto fail = pair_failure("dist-nonzero", ok.tuples, elements[i], elements[j],
                                 "dist(" + alg.format(elements[i]) + ", " + alg.format(elements[j]) + ") = 0");
        fail.lhs = Value(kZero);
        ax.checks.push_back(std::move(fail));
        rep.axioms.push_back(std::move(ax));
        return rep;
      }
    }
  ax.checks.push_back(std::move(ok));
  rep.axioms.push_back(std::move(ax));
  return rep;
}

VerificationReport check_pseudometric(const AlgebraModel& alg, const std::vector<Value>& elements,
                                      std::size_t triples, std::uint64_t seed) {
  if (elements.empty()) throw InputError("no elements to sample");
  VerificationReport rep;
  rep.suite = "pseudometric";
  rep.model = alg.name();
  rep.strategy = "random:" + std::to_string(triples);
  std::map<std::pair<std::size_t, std::size_t>, Rational> cache;
  auto dist = [&](std::size_t a, std::size_t b) -> const Rational& {
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::pair{a, b}, dist_int(alg, elements[a], elements[b])).first;
    return it->second;
  };
  std::mt19937_64 rng(derive_seed(seed, "pseudometric"));
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  CheckResult zero, symmetric, triangle;
  zero.id = "self-zero";
  symmetric.id = "symmetric";
  triangle.id = "triangle";
  auto fail = [&](CheckResult& r, std::size_t t, Env env, std::string why) {
    if (r.status == Status::fail) return;
    r.status = Status::fail;
    r.tuples = t;
    r.counterexample = std::move(env);
    r.reason = std::move(why);
  };
  for (std::size_t t = 1; t <= triples; ++t) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    const auto &x = elements[a], &y = elements[b], &z = elements[c];
    if (!dist(a, a).is_zero()) fail(zero, t, {x}, "dist(x,x) = " + dist(a, a).str());
    if (dist(a, b) != dist(b, a)) fail(symmetric, t, {x, y}, dist(a, b).str() + " vs " + dist(b, a).str());
    if (dist(a, c) > dist(a, b) + dist(b, c))
      fail(triangle, t, {x, y, z}, "dist(x,z) = " + dist(a, c).str() + " exceeds " + (dist(a, b) + dist(b, c)).str());
  }
  for (auto* r : {&zero, &symmetric, &triangle})
    if (r->status == Status::pass) r->tuples = triples;
  rep.axioms.push_back({"pseudometric", {zero, symmetric, triangle}});
  return rep;
}

Rational EssResult::estimate() const {
  for (unsigned m = 0;; ++m) {
    const mpz_class k = Rational(mpq_class(lo.raw() * (mpz_class(1) << m))).ceil();
    const Rational t = dyadic(k, m);
    if (t <= hi) return t;
  }
}

EssResult ess_value(const AlgebraModel& alg, const Value& x, unsigned precision) {
  if (alg.is_trivial()) throw InputError("ess is undefined on a trivial algebra");
  auto compare = [&](const Rational& t) {
    const auto c = alg.compare_constant(x, t);
    if (!c) throw UnsupportedSymbol(alg.name() + " cannot compare elements with constants");
    return *c;
  };
  for (const Rational& end : {kZero, kOne})
    if (compare(end) == std::strong_ordering::equal) return {end, end, true};
  mpz_class lo = 0, hi = 1;
  for (unsigned m = 0; m < precision; ++m) {
    lo *= 2;
    hi *= 2;
    const mpz_class mid = lo + 1;
    const auto c = compare(dyadic(mid, m + 1));
    if (c == std::strong_ordering::equal) return {dyadic(mid, m + 1), dyadic(mid, m + 1), true};
    if (c == std::strong_ordering::greater)
      lo = mid;
    else
      hi = mid;
  }
  return {dyadic(lo, precision), dyadic(hi, precision), false};
}

}  // namespace mvm
