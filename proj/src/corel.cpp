#include "mvm/corel.hpp"

#include <algorithm>
#include <bit>

namespace mvm {

Relation coproduct_order(const FinPoset& x) {
  const std::size_t n = x.size();
  Relation r(2 * n);
  for (int t = 0; t < 2; ++t)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (x.le(a, b)) r.add(t * n + a, t * n + b);
  return r;
}

CorelStructure::CorelStructure(const FinPoset& x, Relation rel) : n_(x.size()), rel_(std::move(rel)) {
  if (2 * n_ > FinPoset::kMaxPoints) throw InputError("corelational structures are limited to 32 base points");
  if (rel_.size() != 2 * n_) throw InputError("relation size does not match X+X");
  if (!rel_.is_preorder()) throw InputError("corelational structure must be a preorder");
  if (!rel_.contains(coproduct_order(x))) throw InputError("corelational structure must extend the coproduct order");
}

CorelStructure CorelStructure::generated(const FinPoset& x, const std::vector<std::pair<TaggedPoint, TaggedPoint>>& pairs) {
  Relation r = coproduct_order(x);
  const std::size_t n = x.size();
  for (const auto& [a, b] : pairs) {
    if (a.x >= n || b.x >= n || a.tag < 0 || a.tag > 1 || b.tag < 0 || b.tag > 1)
      throw InputError("tagged point out of range");
    r.add(a.tag * n + a.x, b.tag * n + b.x);
  }
  r.close_transitively();
  return CorelStructure(x, std::move(r));
}

CorelStructure CorelStructure::from_json(const FinPoset& x, const nlohmann::json& doc) {
  if (!doc.is_array()) throw InputError("/: corelation document must be an array of tagged pairs");
  std::vector<std::pair<TaggedPoint, TaggedPoint>> pairs;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "/" + std::to_string(i);
    const auto& p = doc[i];
    if (!p.is_array() || p.size() != 2) throw InputError(path + ": expected a pair of tagged points");
    TaggedPoint ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto& t = p[k];
      const std::string sub = path + "/" + std::to_string(k);
      if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_number_integer())
        throw InputError(sub + ": expected [name, tag]");
      const int tag = t[1].get<int>();
      if (tag != 0 && tag != 1) throw InputError(sub + "/1: tag must be 0 or 1");
      ends[k] = {x.index_of(t[0].get<std::string>()), tag};
    }
    pairs.emplace_back(ends[0], ends[1]);
  }
  return generated(x, pairs);
}

std::uint64_t CorelStructure::diagonal_set() const {
  std::uint64_t y = 0;
  for (std::size_t z = 0; z < n_; ++z)
    if (rel(z, 0, z, 1) && rel(z, 1, z, 0)) y |= std::uint64_t{1} << z;
  return y;
}

CorelStructure corel_from_subset(const FinPoset& x, std::uint64_t y) {
  const std::size_t n = x.size();
  Relation r = coproduct_order(x);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (x.up(a) & x.down(b) & y) {
        r.add(a, n + b);
        r.add(n + a, b);
      }
  return CorelStructure(x, std::move(r));
}

const char* flag_name(Flag f) {
  switch (f) {
    case Flag::yes: return "yes";
    case Flag::no: return "no";
    case Flag::not_applicable: return "not-applicable";
  }
  return "?";
}

CorelFlags corel_classify(const FinPoset& x, const CorelStructure& s) {
  const std::size_t n = x.size();
  CorelFlags f;
  f.reflexive = true;
  f.symmetric = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          if (!s.rel(a, i, b, j)) continue;
          if (!x.le(a, b)) f.reflexive = false;
          if (!s.rel(a, 1 - i, b, 1 - j)) f.symmetric = false;
        }
  if (f.reflexive) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (int i = 0; i < 2 && ok; ++i) {
          if (!s.rel(a, i, b, 1 - i)) continue;
          bool found = false;
          for (std::size_t z = 0; z < n && !found; ++z) found = s.rel(a, i, z, 1 - i) && s.rel(z, i, b, 1 - i);
          ok = found;
        }
    f.transitive = ok ? Flag::yes : Flag::no;
  }
  f.equivalence = f.reflexive && f.symmetric && f.transitive == Flag::yes;
  if (f.equivalence) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (int i = 0; i < 2 && ok; ++i) {
          if (!s.rel(a, i, b, 1 - i)) continue;
          bool found = false;
          for (std::size_t z = 0; z < n && !found; ++z)
            found = x.le(a, z) && x.le(z, b) && s.rel(z, i, z, 1 - i) && s.rel(z, 1 - i, z, i);
          ok = found;
        }
    f.effective = ok ? Flag::yes : Flag::no;
  }
  return f;
}

namespace {

struct Enumerator {
  const FinPoset& base;
  std::size_t points;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  const std::function<void(const CorelStructure&)>& visit;
  std::size_t count = 0;

  void run(Relation rel, Relation excluded, std::size_t next) {
    while (next < slots.size() && (rel.has(slots[next].first, slots[next].second) ||
                                   excluded.has(slots[next].first, slots[next].second)))
      ++next;
    if (next == slots.size()) {
      ++count;
      visit(CorelStructure(base, std::move(rel)));
      return;
    }
    const auto [a, b] = slots[next];
    {
      Relation without = excluded;
      without.add(a, b);
      run(rel, std::move(without), next + 1);
    }
    // Adding a → b to a transitive relation: everything reaching a now reaches all of b's row.
    Relation with = rel;
    const std::uint64_t target = rel.row(b);
    const std::uint64_t sources = rel.column(a);
    for (std::size_t i = 0; i < points; ++i)
      if ((sources >> i) & 1U) {
        for (std::uint64_t m = target & ~with.row(i); m; m &= m - 1) with.add(i, std::countr_zero(m));
        if (with.row(i) & excluded.row(i)) return;
      }
    run(std::move(with), std::move(excluded), next + 1);
  }
};

}  // namespace

std::size_t corel_enumerate(const FinPoset& x, const std::function<void(const CorelStructure&)>& visit, std::size_t bound) {
  if (x.size() > bound)
    throw InputError("corel enumeration bound is " + std::to_string(bound) + " points, poset has " +
                     std::to_string(x.size()));
  if (x.size() > 32) throw InputError("corelational structures are limited to 32 base points");
  Enumerator e{x, 2 * x.size(), {}, visit};
  for (std::size_t a = 0; a < e.points; ++a)
    for (std::size_t b = 0; b < e.points; ++b)
      if (a != b) e.slots.emplace_back(a, b);
  e.run(coproduct_order(x), Relation(e.points), 0);
  return e.count;
}

EffectivenessReport check_effectiveness(const FinPoset& x, std::size_t bound) {
  EffectivenessReport rep;
  rep.structures = corel_enumerate(
      x,
      [&](const CorelStructure& s) {
        const auto flags = corel_classify(x, s);
        if (!flags.equivalence) return;
        ++rep.equivalence_structures;
        if (flags.effective == Flag::yes) ++rep.effective;
        const auto y = s.diagonal_set();
        if (corel_from_subset(x, y) == s) ++rep.matches_subset;
        rep.subsets.push_back(y);
      },
      bound);
  std::sort(rep.subsets.begin(), rep.subsets.end());
  return rep;
}

}  // namespace mvm
