#include "mvm/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mvm/lmonoid.hpp"
#include "mvm/models.hpp"

namespace mvm {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }
  Congruence result() {
    std::vector<std::size_t> ids(parent_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = find(i);
    return Congruence(ids);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<BinOp> ops_of(Signature sig) {
  if (sig == Signature::lattice) return {BinOp::join, BinOp::meet};
  return {kBinOps.begin(), kBinOps.end()};
}

}  // namespace

Congruence::Congruence(const std::vector<std::size_t>& blocks) : label_(blocks.size()) {
  std::map<std::size_t, std::uint32_t> seen;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto [it, fresh] = seen.emplace(blocks[i], static_cast<std::uint32_t>(seen.size()));
    label_[i] = it->second;
  }
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Congruence(ids);
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<std::size_t>(n, 0)); }

std::size_t Congruence::block_count() const {
  return label_.empty() ? 0 : *std::max_element(label_.begin(), label_.end()) + 1;
}

std::vector<std::vector<std::size_t>> Congruence::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count());
  for (std::size_t i = 0; i < label_.size(); ++i) out[label_[i]].push_back(i);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (same(a, b) && !other.same(a, b)) return false;
  return true;
}

Congruence Congruence::meet(const Congruence& other) const {
  std::vector<std::size_t> ids(size());
  for (std::size_t i = 0; i < size(); ++i) ids[i] = label_[i] * size() + other.label_[i];
  return Congruence(ids);
}

Congruence Congruence::join(const Congruence& other) const {
  UnionFind uf(size());
  std::vector<std::size_t> first_a(size(), size()), first_b(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto& fa = first_a[label_[i]];
    auto& fb = first_b[other.label_[i]];
    if (fa == size()) fa = i; else uf.unite(fa, i);
    if (fb == size()) fb = i; else uf.unite(fb, i);
  }
  return uf.result();
}

std::string Congruence::str(const std::vector<std::string>& labels) const {
  std::string out;
  for (const auto& block : blocks()) {
    out += "{";
    for (std::size_t k = 0; k < block.size(); ++k) out += (k ? "," : "") + labels[block[k]];
    out += "}";
  }
  return out;
}

bool is_compatible(const FiniteAlgebra& alg, const Congruence& c, Signature sig) {
  const std::size_t n = alg.size();
  for (BinOp op : ops_of(sig))
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!c.same(a, b)) continue;
        for (std::size_t x = 0; x < n; ++x)
          if (!c.same(alg.op(op, a, x), alg.op(op, b, x)) || !c.same(alg.op(op, x, a), alg.op(op, x, b))) return false;
      }
  return true;
}

Congruence generated_congruence(const FiniteAlgebra& alg, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                Signature sig) {
  const std::size_t n = alg.size();
  UnionFind uf(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InputError("element index out of range");
    uf.unite(a, b);
  }
  const auto ops = ops_of(sig);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (BinOp op : ops)
          for (std::size_t x = 0; x < n; ++x) {
            changed |= uf.unite(alg.op(op, a, x), alg.op(op, b, x));
            changed |= uf.unite(alg.op(op, x, a), alg.op(op, x, b));
          }
      }
  }
  return uf.result();
}

Congruence principal_congruence(const FiniteAlgebra& alg, std::size_t a, std::size_t b) {
  return generated_congruence(alg, {{a, b}});
}

std::vector<Congruence> congruences_by_partitions(const FiniteAlgebra& alg, Signature sig) {
  const std::size_t n = alg.size();
  std::vector<Congruence> out;
  std::vector<std::size_t> rgs(n, 0);
  // Restricted growth strings: rgs[i] ≤ 1 + max(rgs[0..i−1]).
  std::vector<std::size_t> top(n + 1, 0);
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      Congruence c(rgs);
      if (is_compatible(alg, c, sig)) out.push_back(std::move(c));
      return;
    }
    const std::size_t limit = i == 0 ? 0 : top[i] + 1;
    for (std::size_t v = 0; v <= limit; ++v) {
      rgs[i] = v;
      top[i + 1] = std::max(i == 0 ? 0 : top[i], v);
      self(self, i + 1);
    }
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Congruence> congruences_by_joins(const FiniteAlgebra& alg, std::size_t max_count) {
  const std::size_t n = alg.size();
  std::set<Congruence> found{Congruence::identity(n)};
  std::vector<Congruence> order{Congruence::identity(n)};
  auto add = [&](Congruence c) {
    if (found.insert(c).second) {
      order.push_back(std::move(c));
      if (order.size() > max_count)
        throw InputError(alg.name + " has more than " + std::to_string(max_count) + " congruences");
    }
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) add(principal_congruence(alg, a, b));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(order[i].join(order[j]));
  return {found.begin(), found.end()};
}

CongruenceSet enumerate_congruences(const FiniteAlgebra& alg, std::size_t partition_bound, std::size_t max_count) {
  CongruenceSet out;
  out.all = congruences_by_joins(alg, max_count);
  if (alg.size() <= partition_bound) {
    const auto filtered = congruences_by_partitions(alg);
    if (filtered != out.all)
      throw std::logic_error(alg.name + ": partition filtering found " + std::to_string(filtered.size()) +
                             " congruences, join closure " + std::to_string(out.all.size()));
  }
  const auto delta = Congruence::identity(alg.size());
  const auto nabla = Congruence::total(alg.size());
  out.identity = static_cast<std::size_t>(std::find(out.all.begin(), out.all.end(), delta) - out.all.begin());
  out.total = static_cast<std::size_t>(std::find(out.all.begin(), out.all.end(), nabla) - out.all.begin());
  if (out.identity == out.all.size() || out.total == out.all.size())
    throw std::logic_error(alg.name + ": congruence set misses identity or total relation");
  return out;
}

bool is_subdirectly_irreducible(const CongruenceSet& cons) {
  const auto& delta = cons.all[cons.identity];
  if (delta.size() < 2) return false;
  std::optional<Congruence> m;
  for (const auto& c : cons.all) {
    if (c.is_identity()) continue;
    m = m ? m->meet(c) : c;
  }
  return m && !m->is_identity();
}

bool is_subdirectly_irreducible(const FiniteAlgebra& alg) {
  return is_subdirectly_irreducible(enumerate_congruences(alg));
}

std::vector<Congruence> meet_irreducibles(const CongruenceSet& cons) {
  std::vector<Congruence> out;
  for (const auto& c : cons.all) {
    if (c.is_total()) continue;
    std::vector<const Congruence*> above;
    for (const auto& d : cons.all)
      if (d != c && c.refines(d)) above.push_back(&d);
    std::size_t covers = 0;
    for (const auto* d : above) {
      const bool minimal = std::none_of(above.begin(), above.end(),
                                        [&](const Congruence* e) { return e != d && e->refines(*d); });
      covers += minimal ? 1 : 0;
    }
    if (covers == 1) out.push_back(c);
  }
  return out;
}

Congruence theta_star(const FiniteAlgebra& alg, const Congruence& theta) {
  const std::size_t n = alg.size();
  if (theta.size() != n) throw InputError("relation size does not match the algebra");
  if (theta.block_count() != 2 || !is_compatible(alg, theta, Signature::lattice))
    throw InputError("theta must be a lattice congruence with exactly two blocks");
  UnionFind uf(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool related = true;
      for (std::size_t x = 0; x < n && related; ++x)
        related = theta.same(alg.op(BinOp::oplus, a, x), alg.op(BinOp::oplus, b, x)) &&
                  theta.same(alg.op(BinOp::odot, a, x), alg.op(BinOp::odot, b, x));
      if (related) uf.unite(a, b);
    }
  Congruence star = uf.result();
  if (!is_compatible(alg, star) || !star.refines(theta))
    throw std::logic_error(alg.name + ": theta* is not a congruence inside theta");
  if (n <= kPartitionBound)
    for (const auto& c : congruences_by_partitions(alg))
      if (c.refines(theta) && !c.refines(star))
        throw std::logic_error(alg.name + ": a congruence inside theta is not below theta*");
  return star;
}

Congruence sim_closure(const FiniteAlgebra& alg, std::size_t t, End end) {
  const std::size_t n = alg.size();
  if (t >= n) throw InputError("element index out of range");
  // Powers n·t (or tⁿ) stabilise after at most |A| steps.
  std::vector<std::size_t> powers{end == End::bottom ? alg.zero : alg.one};
  const BinOp step = end == End::bottom ? BinOp::oplus : BinOp::odot;
  while (powers.size() <= n) powers.push_back(alg.op(step, powers.back(), t));
  auto related = [&](std::size_t x, std::size_t y) {
    for (std::size_t p : powers) {
      const bool ok = end == End::bottom ? alg.leq(y, alg.op(step, x, p)) && alg.leq(x, alg.op(step, y, p))
                                         : alg.leq(alg.op(step, x, p), y) && alg.leq(alg.op(step, y, p), x);
      if (ok) return true;
    }
    return false;
  };
  UnionFind uf(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (related(a, b)) uf.unite(a, b);
  Congruence c = uf.result();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (c.same(a, b) && !related(a, b)) throw std::logic_error(alg.name + ": the relation is not transitive");
  if (c != principal_congruence(alg, t, end == End::bottom ? alg.zero : alg.one))
    throw std::logic_error(alg.name + ": closure differs from the principal congruence");
  return c;
}

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c) {
  if (c.size() != alg.size()) throw InputError("congruence size does not match the algebra");
  const auto blocks = c.blocks();
  std::vector<std::string> labels;
  for (const auto& b : blocks) {
    std::string l;
    for (std::size_t k = 0; k < b.size(); ++k) l += (k ? "|" : "") + alg.labels[b[k]];
    labels.push_back(l);
  }
  FiniteAlgebra q = FiniteAlgebra::blank(alg.name + "/" + c.str(alg.labels), std::move(labels));
  for (BinOp op : kBinOps)
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = 0; j < blocks.size(); ++j)
        q.set(op, i, j, c.block_of(alg.op(op, blocks[i][0], blocks[j][0])));
  q.zero = c.block_of(alg.zero);
  q.one = c.block_of(alg.one);
  return q;
}

namespace {

CheckResult outcome(std::string id, std::size_t tuples, std::string failure) {
  CheckResult r;
  r.id = std::move(id);
  r.tuples = tuples;
  if (!failure.empty()) {
    r.status = Status::fail;
    r.reason = std::move(failure);
  }
  return r;
}

CheckResult skipped(std::string id, std::string reason) {
  CheckResult r;
  r.id = std::move(id);
  r.status = Status::skipped;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

VerificationReport verify_si_theorems(const FiniteAlgebra& alg) {
  VerificationReport rep;
  rep.suite = "subdirect";
  rep.model = alg.name;
  rep.strategy = "exhaustive";
  const std::size_t n = alg.size();
  if (n < 2 || alg.zero == alg.one) {
    rep.axioms.push_back({"trivial", {skipped("si-theorems", "trivial algebra")}});
    return rep;
  }
  const auto cons = enumerate_congruences(alg);
  const bool si = is_subdirectly_irreducible(cons);
  const auto& L = alg.labels;
  if (si) {
    AxiomResult chain{"si-chain", {}};
    std::string fail;
    for (std::size_t a = 0; a < n && fail.empty(); ++a)
      for (std::size_t b = 0; b < n && fail.empty(); ++b)
        if (!alg.leq(a, b) && !alg.leq(b, a)) fail = L[a] + " and " + L[b] + " are incomparable";
    chain.checks.push_back(outcome("totally-ordered", n * n, fail));
    rep.axioms.push_back(std::move(chain));

    AxiomResult dich{"si-dichotomy", {}};
    fail.clear();
    for (std::size_t a = 0; a < n && fail.empty(); ++a)
      for (std::size_t b = 0; b < n && fail.empty(); ++b)
        if (alg.op(BinOp::oplus, a, b) != alg.one && alg.op(BinOp::odot, a, b) != alg.zero)
          fail = "x=" + L[a] + ", y=" + L[b];
    dich.checks.push_back(outcome("oplus-one-or-odot-zero", n * n, fail));
    fail.clear();
    for (std::size_t a = 0; a < n && fail.empty(); ++a)
      for (std::size_t b = 0; b < n && fail.empty(); ++b) {
        const bool good = alg.op(BinOp::oplus, a, b) == a && alg.op(BinOp::odot, a, b) == b;
        if (good && a != alg.one && b != alg.zero) fail = "good pair (" + L[a] + ", " + L[b] + ")";
      }
    dich.checks.push_back(outcome("good-pairs", n * n, fail));
    rep.axioms.push_back(std::move(dich));
    return rep;
  }

  AxiomResult dec{"decomposition", {}};
  const auto irreducibles = meet_irreducibles(cons);
  Congruence meet = Congruence::total(n);
  for (const auto& c : irreducibles) meet = meet.meet(c);
  dec.checks.push_back(outcome("trivial-intersection", irreducibles.size(),
                               meet.is_identity() ? "" : "meet-irreducibles intersect in " + meet.str(L)));
  std::string fail;
  for (const auto& c : irreducibles) {
    const auto factor = quotient(alg, c);
    if (!is_subdirectly_irreducible(factor)) {
      fail = "factor by " + c.str(L) + " is not subdirectly irreducible";
      break;
    }
  }
  dec.checks.push_back(outcome("factors-si", irreducibles.size(), fail));
  std::set<std::vector<std::size_t>> images;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> image;
    for (const auto& c : irreducibles) image.push_back(c.block_of(a));
    images.insert(std::move(image));
  }
  dec.checks.push_back(outcome("embedding-injective", n, images.size() == n ? "" : "two elements share an image"));
  rep.axioms.push_back(std::move(dec));
  return rep;
}

std::vector<FiniteAlgebra> distributive_lattice_models(std::size_t n) {
  std::vector<FiniteAlgebra> out;
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t index = 0;
    for (const auto& p : all_posets(m)) {
      try {
        FiniteAlgebra alg = lattice_mvm_tables(p);
        alg.name = "lattice" + std::to_string(m) + "." + std::to_string(index++);
        out.push_back(std::move(alg));
      } catch (const InputError&) {
      }
    }
  }
  return out;
}

std::vector<FiniteAlgebra> curated_family(std::size_t max_lattice, std::size_t max_product) {
  std::vector<FiniteAlgebra> base;
  for (unsigned k = 0; k <= 3; ++k) base.push_back(FiniteAlgebra::tabulate(*make_luka_chain(k)));
  for (auto& l : distributive_lattice_models(max_lattice)) base.push_back(std::move(l));
  base.push_back(FiniteAlgebra::tabulate(*gamma_of(lmonoid_builtin("lex-z-flat"))));

  std::vector<FiniteAlgebra> small;
  for (unsigned k = 0; k <= 2; ++k) small.push_back(FiniteAlgebra::tabulate(*make_luka_chain(k)));
  {
    FiniteAlgebra chain3 = lattice_mvm_tables(FinPoset::chain(3));
    chain3.name = "lattice:chain3";
    small.push_back(std::move(chain3));
  }
  small.push_back(FiniteAlgebra::tabulate(*gamma_of(lmonoid_builtin("lex-z-flat"))));
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j)
      if (small[i].size() * small[j].size() <= max_product) base.push_back(product(small[i], small[j]));

  std::vector<FiniteAlgebra> out = base;
  for (const auto& alg : base)
    for (const auto& c : enumerate_congruences(alg).all)
      if (!c.is_identity()) out.push_back(quotient(alg, c));
  return out;
}

nlohmann::json congruence_lattice_json(const FiniteAlgebra& alg, const CongruenceSet& cons) {
  nlohmann::json elements = nlohmann::json::array();
  nlohmann::json le = nlohmann::json::array();
  for (const auto& c : cons.all) elements.push_back(c.str(alg.labels));
  for (const auto& a : cons.all)
    for (const auto& b : cons.all)
      if (a != b && a.refines(b)) le.push_back({a.str(alg.labels), b.str(alg.labels)});
  return {{"elements", elements}, {"le", le}};
}

}  // namespace mvm
