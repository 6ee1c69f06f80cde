#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "battery.hpp"
#include "mvm/axioms.hpp"
#include "mvm/congruence.hpp"
#include "mvm/corel.hpp"
#include "mvm/duality.hpp"
#include "mvm/good_seq.hpp"
#include "mvm/limit.hpp"
#include "mvm/lmonoid.hpp"
#include "mvm/models.hpp"
#include "mvm/poset.hpp"
#include "mvm/report.hpp"

using namespace mvm;
using nlohmann::json;

namespace {

struct Options {
  std::string model;
  std::string poset;
  std::string suite = "mvm";
  std::string strategy;
  std::uint64_t seed = kDefaultSeed;
  unsigned schema_depth = 8;
  std::size_t max_size = 0;
  unsigned jobs = 1;
  std::string format = "text";
  std::string out;

  std::string lhs, rhs, cmp = "eq";
  std::string prefix, tail;
  unsigned interval = 0;
  std::string corel;
  std::string x, y;
  std::string in;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

/// A builtin name (chainN, antichainN, vee) or a poset JSON file.
FinPoset load_poset(const std::string& spec) {
  if (spec.empty()) throw InputError("--poset is required");
  if (std::filesystem::is_regular_file(spec)) return FinPoset::from_json(read_json_file(spec));
  return FinPoset::builtin(spec);
}

ModelPtr require_model(const Options& o) {
  if (o.model.empty()) throw InputError("--model is required");
  return load_model(o.model);
}

bool is_lmonoid_name(const std::string& name) {
  for (const auto& n : lmonoid_builtin_names())
    if (n == name) return true;
  return false;
}

Strategy resolve_strategy(const Options& o, const AlgebraModel* alg, const std::string& fallback = "") {
  std::string text = o.strategy;
  if (text.empty()) text = !fallback.empty() ? fallback : (alg && alg->finite_carrier() ? "exhaustive" : "grid:4");
  Strategy s = Strategy::parse(text);
  s.seed = o.seed;
  s.schema_depth = o.schema_depth;
  s.jobs = o.jobs;
  return s;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(Rational::parse(item));
  if (out.empty()) throw InputError("empty list");
  return out;
}

std::vector<Value> sample_elements(const AlgebraModel& alg, const Strategy& s) {
  if (auto c = alg.finite_carrier()) return *c;
  return alg.grid(s.kind == Strategy::Kind::grid ? s.grid_exponent : 3);
}

std::string subset_names(const FinPoset& p, std::uint64_t mask) {
  std::string out = "{";
  for (std::size_t i = 0, k = 0; i < p.size(); ++i)
    if ((mask >> i) & 1U) out += (k++ ? "," : "") + p.name(i);
  return out + "}";
}

json witness_json(const FinPoset& p, const Witness& w) {
  json out = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) out[p.name(i)] = w[i].str();
  return out;
}

json relation_json(const FinPoset& p, const Relation& r) {
  json out = json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (a != b && r.has(a, b)) out.push_back({p.name(a), p.name(b)});
  return out;
}

// ---------------------------------------------------------------------------

void run_axioms(const Options& o, RunReport& run) {
  const SuiteId suite = parse_suite(o.suite);
  if (suite == SuiteId::ulm) {
    if (!is_lmonoid_name(o.model)) throw InputError("the ulm suite runs on an l-monoid builtin, got '" + o.model + "'");
    run.reports.push_back(check_ulm(*lmonoid_builtin(o.model), o.max_size ? static_cast<unsigned>(o.max_size) : 3));
    return;
  }
  const auto alg = require_model(o);
  run.reports.push_back(check_suite(*alg, suite, resolve_strategy(o, alg.get())));
}

void run_identity(const Options& o, RunReport& run) {
  const auto alg = require_model(o);
  if (o.lhs.empty() || o.rhs.empty()) throw InputError("--lhs and --rhs are required");
  if (o.cmp != "eq" && o.cmp != "leq") throw InputError("--cmp must be eq or leq");
  const Identity id{"identity", parse_term(o.lhs), parse_term(o.rhs), o.cmp == "eq" ? Comparison::eq : Comparison::leq};
  const Strategy s = resolve_strategy(o, alg.get());
  VerificationReport rep;
  rep.suite = "identity";
  rep.model = alg->name();
  rep.strategy = s.str();
  rep.axioms.push_back({"identity", {check_identity(*alg, id, s)}});
  run.reports.push_back(std::move(rep));
}

void run_equiv(const Options& o, RunReport& run) {
  if (is_lmonoid_name(o.model)) {
    const auto m = lmonoid_builtin(o.model);
    const auto gamma = gamma_of(m);
    const unsigned level = o.max_size ? static_cast<unsigned>(o.max_size) : 3;
    const auto sequences = XiAlgebra(*gamma).enumerate(-1, 1, 2);
    run.reports.push_back(check_equiv_roundtrip(*m, m->samples(level), sequences, *gamma));
    run.reports.push_back(check_ulm(XiAlgebra(*gamma), XiAlgebra(*gamma).enumerate(-1, 0, 1), "xi:" + gamma->name(),
                                    std::function<std::string(const GoodZSeq&)>(
                                        [&](const GoodZSeq& s) { return s.str(*gamma); })));
    return;
  }
  const auto alg = require_model(o);
  run.reports.push_back(check_equiv_roundtrip(*alg, o.max_size ? o.max_size : 3));
}

void run_lambda(const Options& o, RunReport& run) {
  if (!o.prefix.empty()) {
    const auto prefix = parse_rational_list(o.prefix);
    for (const auto& r : prefix)
      if (r < Rational(0) || r > Rational(1)) throw InputError("prefix value outside [0,1]: " + r.str());
    json mus = json::array();
    for (const auto& m : mu_image(prefix)) mus.push_back(m.str());
    run.results["mu"] = mus;
    run.results["mu_fold"] = mu_fold(prefix).str();
    run.results["two_cauchy"] = is_2cauchy(prefix);
    if (!o.tail.empty()) {
      const Rational tail = Rational::parse(o.tail);
      run.results["lambda"] = lambda_exact(prefix, tail).str();
    }
    if (o.interval) {
      if (o.interval > prefix.size()) throw InputError("--interval exceeds the prefix length");
      const auto iv = lambda_interval(prefix, o.interval);
      run.results["interval"] = {iv.lo.str(), iv.hi.str()};
    }
    return;
  }
  const auto alg = o.model.empty() ? make_interval_algebra() : load_model(o.model);
  const Strategy s = resolve_strategy(o, alg.get(), "grid:3");
  run.reports.push_back(check_suite(*alg, SuiteId::limit_dyadic, s));
  run.reports.push_back(check_suite(*alg, SuiteId::limit_two_div, s));
}

std::size_t corel_bound(const Options& o) {
  if (o.max_size > kCorelDefaultBound)
    std::cerr << "warning: enumerating corelations beyond " << kCorelDefaultBound << " points may take very long\n";
  return o.max_size ? o.max_size : kCorelDefaultBound;
}

json flags_json(const CorelFlags& f) {
  return {{"reflexive", f.reflexive},
          {"symmetric", f.symmetric},
          {"transitive", flag_name(f.transitive)},
          {"equivalence", f.equivalence},
          {"effective", flag_name(f.effective)}};
}

void run_corel_classify(const Options& o, RunReport& run) {
  const FinPoset p = load_poset(o.poset);
  if (o.corel.empty()) throw InputError("--corel is required (a JSON file or inline JSON array)");
  const json doc = std::filesystem::is_regular_file(o.corel) ? read_json_file(o.corel) : json::parse(o.corel);
  run.results["flags"] = flags_json(corel_classify(p, CorelStructure::from_json(p, doc)));
}

void run_corel_enumerate(const Options& o, RunReport& run) {
  const FinPoset p = load_poset(o.poset);
  std::size_t reflexive = 0, symmetric = 0, equivalence = 0;
  const std::size_t total = corel_enumerate(
      p,
      [&](const CorelStructure& s) {
        const auto f = corel_classify(p, s);
        reflexive += f.reflexive;
        symmetric += f.symmetric;
        equivalence += f.equivalence;
      },
      corel_bound(o));
  run.results = {{"structures", total},
                 {"reflexive", reflexive},
                 {"symmetric", symmetric},
                 {"equivalence_structures", equivalence}};
}

void run_corel_effective(const Options& o, RunReport& run) {
  const FinPoset p = load_poset(o.poset);
  const auto rep = check_effectiveness(p, corel_bound(o));
  json subsets = json::array();
  for (auto y : rep.subsets) subsets.push_back(subset_names(p, y));
  run.results = {{"structures", rep.structures},
                 {"equivalence_structures", rep.equivalence_structures},
                 {"effective", rep.effective},
                 {"matches_subset", rep.matches_subset},
                 {"subsets", subsets}};
  run.failed = !rep.pass();
}

void run_duality_separate(const Options& o, RunReport& run) {
  const FinPoset p = load_poset(o.poset);
  json witnesses = json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.le(b, a)) continue;
      const auto w = point_separator(p, a, b);
      const bool ok = p.monotone(w) && w[a].is_zero() && w[b] == Rational(1);
      run.failed |= !ok;
      witnesses.push_back({{"x", p.name(a)}, {"y", p.name(b)}, {"f", witness_json(p, w)}, {"ok", ok}});
    }
  run.results["separators"] = witnesses;
}

void run_duality_reconstruct(const Options& o, RunReport& run) {
  const FinPoset p = load_poset(o.poset);
  std::vector<Witness> family;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (!p.le(b, a)) family.push_back(point_separator(p, a, b));
  const Relation r = reconstruct_order(p, family);
  run.results = {{"family_size", family.size()}, {"order", relation_json(p, r)}, {"equals_order", r == p.order()}};
  run.failed = r != p.order();
}

void run_duality_dist(const Options& o, RunReport& run) {
  const auto alg = require_model(o);
  if (o.x.empty() || o.y.empty()) throw InputError("--x and --y are required");
  const Value x = alg->parse(o.x), y = alg->parse(o.y);
  for (const auto* v : {&x, &y})
    if (!alg->contains(*v)) throw InputError(v->str() + " is not an element of " + alg->name());
  const auto iv = dist_bisect(*alg, x, y);
  run.results = {{"dist", dist_int(*alg, x, y).str()}, {"bisection", {iv.lo.str(), iv.hi.str()}}};
}

void run_dist(const Options& o, RunReport& run) {
  const auto alg = require_model(o);
  const auto elements = sample_elements(*alg, resolve_strategy(o, alg.get(), "grid:3"));
  run.reports.push_back(archimedean_check(*alg, elements));
  run.reports.push_back(check_pseudometric(*alg, elements, o.max_size ? o.max_size : 1000, o.seed));
}

void run_congruence(const Options& o, RunReport& run) {
  if (o.model == "family") {
    std::size_t members = 0, si = 0;
    for (const auto& alg : curated_family()) {
      auto rep = verify_si_theorems(alg);
      ++members;
      si += rep.find("si-chain") != nullptr;
      if (!rep.passed()) run.reports.push_back(std::move(rep));
    }
    run.results = {{"members", members}, {"subdirectly_irreducible", si}};
    return;
  }
  const auto model = require_model(o);
  if (!model->finite_carrier()) throw InputError(model->name() + " is infinite; congruences need a finite carrier");
  const FiniteAlgebra alg = FiniteAlgebra::tabulate(*model);
  if (o.max_size && alg.size() > o.max_size)
    throw InputError(alg.name + " has " + std::to_string(alg.size()) + " elements, above --max-size");
  const auto cons = enumerate_congruences(alg);
  json irreducibles = json::array();
  for (const auto& c : meet_irreducibles(cons)) irreducibles.push_back(c.str(alg.labels));
  run.results = {{"congruences", cons.all.size()},
                 {"subdirectly_irreducible", is_subdirectly_irreducible(cons)},
                 {"lattice", congruence_lattice_json(alg, cons)},
                 {"meet_irreducibles", irreducibles}};
  run.reports.push_back(verify_si_theorems(alg));
}

void run_all(const Options& o, RunReport& run) {
  run.reports.push_back(run_battery(o.jobs, o.seed, [&](const std::string& id, double seconds) {
    run.results["criteria"].push_back(id);
    std::cerr << id << " done in " << seconds << " s\n";
  }));
}

/// Re-evaluates every stored failure of a JSON run report.
void run_recheck(const Options& o, RunReport& run) {
  if (o.in.empty()) throw InputError("--in is required");
  const json doc = read_json_file(o.in);
  if (!doc.is_object() || !doc.contains("reports")) throw InputError(o.in + ": not a run report (missing /reports)");
  const std::string spec = doc.contains("command") ? doc["command"].value("model", "") : "";
  std::size_t checked = 0, confirmed = 0;
  json unsupported = json::array();
  for (const auto& rj : doc["reports"]) {
    const auto rep = report_from_json(rj);
    for (const auto& ax : rep.axioms)
      for (const auto& c : ax.checks) {
        if (c.status != Status::fail) continue;
        ++checked;
        const auto alg = load_model(spec.empty() ? rep.model : spec);
        bool ok = false;
        if (!c.lhs_term.empty() && c.counterexample) {
          const Identity id{c.id, parse_term(c.lhs_term), parse_term(c.rhs_term), c.cmp};
          ok = fails_at(*alg, id, *c.counterexample);
        } else if (c.id == "dist-nonzero" && c.counterexample && c.counterexample->size() == 2) {
          const auto& env = *c.counterexample;
          ok = env[0] != env[1] && dist_int(*alg, env[0], env[1]).is_zero();
        } else {
          unsupported.push_back(ax.id + "/" + c.id);
          continue;
        }
        confirmed += ok;
      }
  }
  run.results = {{"failures", checked}, {"confirmed", confirmed}, {"unsupported", unsupported}};
  run.failed = confirmed != checked;
}

json command_echo(const std::string& verb, const Options& o) {
  json c{{"verb", verb}, {"seed", o.seed}};
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) c[key] = v;
  };
  put("model", o.model);
  put("poset", o.poset);
  put("strategy", o.strategy);
  put("prefix", o.prefix);
  put("tail", o.tail);
  put("corel", o.corel);
  put("x", o.x);
  put("y", o.y);
  put("lhs", o.lhs);
  put("rhs", o.rhs);
  if (verb == "axioms") c["suite"] = o.suite;
  if (verb == "axioms" || verb == "lambda") c["schema_depth"] = o.schema_depth;
  if (o.max_size) c["max_size"] = o.max_size;
  if (o.interval) c["interval"] = o.interval;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Checks MV-monoidal algebras, their limit extensions and the finite dualities."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--model", o.model, "interval, luka:K, dyadics, z, lex-z-flat, gamma:NAME, lattice:P, func:P, dual:M, file:PATH");
  app.add_option("--poset", o.poset, "chainN, antichainN, vee or a poset JSON file");
  app.add_option("--suite", o.suite, "mvm, dyadic, two-div, limit-dyadic, limit-two-div, ulm");
  app.add_option("--strategy", o.strategy, "exhaustive | grid:D | random:N");
  app.add_option("--seed", o.seed, "seed for random strategies");
  app.add_option("--schema-depth", o.schema_depth, "instances of each indexed family");
  app.add_option("--max-size", o.max_size, "size bound; its meaning depends on the verb");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--format", o.format, "json or text");
  app.add_option("--out", o.out, "report path (default stdout)");

  std::string verb;
  std::function<void(const Options&, RunReport&)> action;
  auto bind = [&](CLI::App* cmd, std::string name, std::function<void(const Options&, RunReport&)> fn) {
    cmd->callback([&verb, &action, name = std::move(name), fn = std::move(fn)] {
      verb = name;
      action = fn;
    });
  };

  bind(app.add_subcommand("axioms", "run an axiom suite on a model"), "axioms", run_axioms);
  auto* identity = app.add_subcommand("identity", "check one identity on a model");
  identity->add_option("--lhs", o.lhs)->required();
  identity->add_option("--rhs", o.rhs)->required();
  identity->add_option("--cmp", o.cmp, "eq or leq");
  bind(identity, "identity", run_identity);
  bind(app.add_subcommand("equiv", "good-sequence round trips and Xi"), "equiv", run_equiv);
  auto* lambda = app.add_subcommand("lambda", "mu, lambda and the limit suites");
  lambda->add_option("--prefix", o.prefix, "comma-separated unit rationals");
  lambda->add_option("--tail", o.tail);
  lambda->add_option("--interval", o.interval, "certified interval after N terms");
  bind(lambda, "lambda", run_lambda);

  auto* corel = app.add_subcommand("corel", "corelational structures on a poset");
  corel->require_subcommand(1);
  corel->fallthrough();
  auto* classify = corel->add_subcommand("classify");
  classify->add_option("--corel", o.corel, "tagged pairs as JSON, inline or a file");
  classify->fallthrough();
  bind(classify, "corel classify", run_corel_classify);
  bind(corel->add_subcommand("enumerate")->fallthrough(), "corel enumerate", run_corel_enumerate);
  bind(corel->add_subcommand("effective")->fallthrough(), "corel effective", run_corel_effective);

  auto* duality = app.add_subcommand("duality", "separation, reconstruction and distance");
  duality->require_subcommand(1);
  duality->fallthrough();
  bind(duality->add_subcommand("separate")->fallthrough(), "duality separate", run_duality_separate);
  bind(duality->add_subcommand("reconstruct")->fallthrough(), "duality reconstruct", run_duality_reconstruct);
  auto* dist = duality->add_subcommand("dist")->fallthrough();
  dist->add_option("--x", o.x);
  dist->add_option("--y", o.y);
  bind(dist, "duality dist", run_duality_dist);

  bind(app.add_subcommand("congruence", "congruence lattice and subdirect checks"), "congruence", run_congruence);
  bind(app.add_subcommand("dist", "Archimedean and pseudometric checks"), "dist", run_dist);
  bind(app.add_subcommand("all", "the full acceptance battery"), "all", run_all);
  auto* recheck = app.add_subcommand("recheck", "re-evaluate the failures stored in a JSON report");
  recheck->add_option("--in", o.in)->required();
  bind(recheck, "recheck", run_recheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(o.format);
    RunReport run;
    run.seed = o.seed;
    run.command = command_echo(verb, o);
    const auto t0 = std::chrono::steady_clock::now();
    action(o, run);
    run.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_report(run, o.out, format);
    return run.passed() ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedSymbol& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  }
}
