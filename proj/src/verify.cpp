#include "mvm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

namespace mvm {

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty())
    throw InputError("strategy " + std::string(what) + " needs a natural number, got '" + std::string(text) + "'");
  return v;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::size_t kExhaustiveCeiling = 100000000;

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t ceiling) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > ceiling / base) return ceiling + 1;
    out *= base;
  }
  return out;
}

bool holds(const AlgebraModel& alg, Comparison cmp, const Value& l, const Value& r) {
  return cmp == Comparison::eq ? l == r : alg.leq(l, r);
}

void require_fragments(const AlgebraModel& alg, const Identity& identity) {
  auto need = fragments_used(identity.lhs);
  need.merge(fragments_used(identity.rhs));
  for (Fragment f : need)
    if (!alg.supports(f))
      throw UnsupportedSymbol(alg.name() + " does not interpret the " + std::string(fragment_name(f)) +
                              " fragment used by " + identity.id);
}

}  // namespace

Strategy Strategy::parse(std::string_view text) {
  Strategy s;
  if (text == "exhaustive") {
    s.kind = Kind::exhaustive;
  } else if (text.rfind("grid:", 0) == 0) {
    s.kind = Kind::grid;
    const auto d = parse_count(text.substr(5), "grid");
    if (d > 20) throw InputError("grid exponent above 20");
    s.grid_exponent = static_cast<unsigned>(d);
  } else if (text.rfind("random:", 0) == 0) {
    s.kind = Kind::random;
    s.count = parse_count(text.substr(7), "random");
  } else {
    throw InputError("unknown strategy '" + std::string(text) + "' (expected exhaustive, grid:D or random:N)");
  }
  return s;
}

std::string Strategy::str() const {
  switch (kind) {
    case Kind::exhaustive: return "exhaustive";
    case Kind::grid: return "grid:" + std::to_string(grid_exponent);
    case Kind::random: return "random:" + std::to_string(count);
  }
  return {};
}

std::string Identity::str() const { return lhs.str() + (cmp == Comparison::eq ? " = " : " <= ") + rhs.str(); }

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Status AxiomResult::status() const {
  bool any_pass = false;
  for (const auto& c : checks) {
    if (c.status == Status::fail) return Status::fail;
    any_pass = any_pass || c.status == Status::pass;
  }
  return any_pass || checks.empty() ? Status::pass : Status::skipped;
}

std::size_t AxiomResult::tuples() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.tuples;
  return n;
}

bool AxiomResult::sampled() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.sampled; });
}

const CheckResult* AxiomResult::first_failure() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return &c;
  return nullptr;
}

bool VerificationReport::passed() const {
  return std::none_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.status() == Status::fail; });
}

const AxiomResult* VerificationReport::find(std::string_view id) const {
  for (const auto& a : axioms)
    if (a.id == id) return &a;
  return nullptr;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view salt) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : salt) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix(seed ^ h);
}

EnvSource env_source(const AlgebraModel& alg, std::size_t arity, const Strategy& strategy, std::string_view salt) {
  EnvSource src;
  src.arity = arity;
  src.seed = derive_seed(strategy.seed, salt);
  src.max_den = strategy.max_den;
  switch (strategy.kind) {
    case Strategy::Kind::exhaustive: {
      auto carrier = alg.finite_carrier();
      if (!carrier) throw InputError("exhaustive strategy needs a finite carrier; " + alg.name() + " is infinite");
      src.domain = std::move(*carrier);
      src.total = checked_power(src.domain.size(), arity, kExhaustiveCeiling);
      if (src.total > kExhaustiveCeiling)
        throw InputError("exhaustive enumeration over " + alg.name() + " exceeds " +
                         std::to_string(kExhaustiveCeiling) + " tuples");
      break;
    }
    case Strategy::Kind::grid: {
      src.domain = alg.grid(strategy.grid_exponent);
      src.total = checked_power(src.domain.size(), arity, strategy.max_tuples);
      if (src.total > strategy.max_tuples) {
        src.total = strategy.max_tuples;
        src.random = true;
        src.sampled = true;
      }
      break;
    }
    case Strategy::Kind::random:
      src.random = true;
      src.total = arity == 0 ? 1 : strategy.count;
      break;
  }
  return src;
}

void env_at(const AlgebraModel& alg, const EnvSource& src, std::size_t i, Env& env) {
  env.resize(src.arity);
  if (src.random) {
    std::mt19937_64 rng(splitmix(src.seed + i));
    for (auto& v : env) {
      if (src.domain.empty()) {
        v = alg.random_element(rng, src.max_den);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, src.domain.size() - 1);
        v = src.domain[pick(rng)];
      }
    }
    return;
  }
  const std::size_t n = src.domain.size();
  for (std::size_t k = src.arity; k-- > 0;) {
    env[k] = src.domain[i % n];
    i /= n;
  }
}

CheckResult check_identity(const AlgebraModel& alg, const Identity& identity, const Strategy& strategy) {
  require_fragments(alg, identity);
  const CompiledTerm lhs(identity.lhs, alg);
  const CompiledTerm rhs(identity.rhs, alg);
  const EnvSource src = env_source(alg, identity.arity(), strategy, identity.id);

  CheckResult out;
  out.id = identity.id;
  out.sampled = src.sampled;
  out.lhs_term = identity.lhs.str();
  out.rhs_term = identity.rhs.str();
  out.cmp = identity.cmp;

  std::atomic<std::size_t> first_fail{src.total};
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(strategy.jobs, src.total));
  constexpr std::size_t kChunk = 256;
  std::atomic<std::size_t> next_chunk{0};

  auto worker = [&] {
    try {
      Env env;
      for (;;) {
        const std::size_t begin = next_chunk.fetch_add(kChunk);
        if (begin >= src.total || begin >= first_fail.load()) return;
        const std::size_t end = std::min(src.total, begin + kChunk);
        for (std::size_t i = begin; i < end && i < first_fail.load(); ++i) {
          env_at(alg, src, i, env);
          if (!holds(alg, identity.cmp, lhs(env), rhs(env))) {
            std::size_t cur = first_fail.load();
            while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  const std::size_t fail = first_fail.load();
  if (fail < src.total) {
    Env env;
    env_at(alg, src, fail, env);
    out.status = Status::fail;
    out.tuples = fail + 1;
    out.lhs = lhs(env);
    out.rhs = rhs(env);
    if (alg.format(*out.lhs) != out.lhs->str()) {
      std::string where;
      for (std::size_t k = 0; k < env.size(); ++k)
        where += (k ? ", x" : "x") + std::to_string(k + 1) + "=" + alg.format(env[k]);
      out.reason = "in " + alg.name() + ": " + where + " gives " + alg.format(*out.lhs) + " and " + alg.format(*out.rhs);
    }
    out.counterexample = std::move(env);
  } else {
    out.tuples = src.total;
  }
  return out;
}

std::optional<Env> find_counterexample(const AlgebraModel& alg, const Identity& identity, const Strategy& strategy) {
  return check_identity(alg, identity, strategy).counterexample;
}

bool fails_at(const AlgebraModel& alg, const Identity& identity, const Env& env) {
  require_fragments(alg, identity);
  for (const auto& v : env)
    if (!alg.contains(v)) throw InputError(v.str() + " is not an element of " + alg.name());
  return !holds(alg, identity.cmp, eval(identity.lhs, alg, env), eval(identity.rhs, alg, env));
}

}  // namespace mvm
