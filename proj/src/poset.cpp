#include "mvm/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace mvm {

// ---------------------------------------------------------------------------
// Relation

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.add(i, i);
  return r;
}

std::uint64_t Relation::column(std::size_t j) const {
  std::uint64_t col = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (has(i, j)) col |= std::uint64_t{1} << i;
  return col;
}

void Relation::close_transitively() {
  const std::size_t n = rows_.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (has(i, k)) rows_[i] |= rows_[k];
}

bool Relation::reflexive() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!has(i, i)) return false;
  return true;
}

bool Relation::transitive() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint64_t reach = 0;
    for (std::uint64_t m = rows_[i]; m; m &= m - 1) reach |= rows_[std::countr_zero(m)];
    if ((reach & ~rows_[i]) != 0) return false;
  }
  return true;
}

bool Relation::antisymmetric() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = i + 1; j < rows_.size(); ++j)
      if (has(i, j) && has(j, i)) return false;
  return true;
}

bool Relation::contains(const Relation& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if ((other.rows_[i] & ~rows_[i]) != 0) return false;
  return true;
}

std::size_t Relation::pair_count() const {
  std::size_t c = 0;
  for (auto r : rows_) c += static_cast<std::size_t>(std::popcount(r));
  return c;
}

// ---------------------------------------------------------------------------
// FinPoset

FinPoset FinPoset::from_pairs(std::vector<std::string> names, const std::vector<std::pair<std::size_t, std::size_t>>& le) {
  if (names.size() > kMaxPoints) throw InputError("posets are limited to " + std::to_string(kMaxPoints) + " points");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw InputError("duplicate element name '" + n + "'");
  FinPoset p;
  p.order_ = Relation::identity(names.size());
  for (auto [a, b] : le) {
    if (a >= names.size() || b >= names.size()) throw InputError("order pair refers to a missing element");
    p.order_.add(a, b);
  }
  p.order_.close_transitively();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (p.order_.has(i, j) && p.order_.has(j, i))
        throw InputError("order has a cycle through '" + names[i] + "' and '" + names[j] + "'");
  p.names_ = std::move(names);
  return p;
}

FinPoset FinPoset::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("/: poset document must be an object");
  if (!doc.contains("elements") || !doc["elements"].is_array()) throw InputError("/elements: required array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc["elements"].size(); ++i) {
    const auto& e = doc["elements"][i];
    if (!e.is_string()) throw InputError("/elements/" + std::to_string(i) + ": expected a string");
    names.push_back(e.get<std::string>());
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (doc.contains("le")) {
    const auto& le = doc["le"];
    if (!le.is_array()) throw InputError("/le: expected an array of pairs");
    for (std::size_t i = 0; i < le.size(); ++i) {
      const std::string path = "/le/" + std::to_string(i);
      if (!le[i].is_array() || le[i].size() != 2) throw InputError(path + ": expected a pair of element names");
      std::size_t ends[2];
      for (int k = 0; k < 2; ++k) {
        if (!le[i][k].is_string()) throw InputError(path + "/" + std::to_string(k) + ": expected a string");
        const auto it = index.find(le[i][k].get<std::string>());
        if (it == index.end())
          throw InputError(path + "/" + std::to_string(k) + ": unknown element '" + le[i][k].get<std::string>() + "'");
        ends[k] = it->second;
      }
      pairs.emplace_back(ends[0], ends[1]);
    }
  }
  for (const auto& [key, _] : doc.items())
    if (key != "elements" && key != "le") throw InputError("/" + key + ": unexpected field");
  return from_pairs(std::move(names), pairs);
}

nlohmann::json FinPoset::to_json() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && le(i, j)) pairs.push_back({names_[i], names_[j]});
  return {{"elements", names_}, {"le", pairs}};
}

FinPoset FinPoset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> le;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i) le.emplace_back(i - 1, i);
  }
  return from_pairs(std::move(names), le);
}

FinPoset FinPoset::antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return from_pairs(std::move(names), {});
}

FinPoset FinPoset::vee() { return from_pairs({"a", "b", "c"}, {{0, 2}, {1, 2}}); }

FinPoset FinPoset::builtin(const std::string& name) {
  auto suffix_number = [&](std::size_t prefix_len) -> std::size_t {
    const auto digits = name.substr(prefix_len);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("unknown poset '" + name + "'");
    const auto n = std::stoul(digits);
    if (n > kMaxPoints) throw InputError("poset '" + name + "' exceeds " + std::to_string(kMaxPoints) + " points");
    return n;
  };
  if (name == "vee") return vee();
  if (name.rfind("antichain", 0) == 0) return antichain(suffix_number(9));
  if (name.rfind("chain", 0) == 0) return chain(suffix_number(5));
  throw InputError("unknown poset '" + name + "'");
}

std::size_t FinPoset::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown element '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::uint64_t FinPoset::all_mask() const {
  return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

bool FinPoset::is_up_set(std::uint64_t mask) const {
  for (std::uint64_t m = mask; m; m &= m - 1)
    if ((up(std::countr_zero(m)) & ~mask) != 0) return false;
  return true;
}

bool FinPoset::is_down_set(std::uint64_t mask) const {
  for (std::uint64_t m = mask; m; m &= m - 1)
    if ((down(std::countr_zero(m)) & ~mask) != 0) return false;
  return true;
}

std::vector<std::uint64_t> FinPoset::up_sets() const {
  if (size() > 20) throw InputError("up-set enumeration is limited to 20 points");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m <= all_mask(); ++m)
    if (is_up_set(m)) out.push_back(m);
  return out;
}

bool FinPoset::monotone(const std::vector<Rational>& f) const {
  if (f.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (le(i, j) && f[i] > f[j]) return false;
  return true;
}

std::string FinPoset::canonical_key() const {
  const std::size_t n = size();
  if (n > 8) throw InputError("canonical keys are limited to 8 points");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key(n * n, '0');
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le(perm[i], perm[j])) key[i * n + j] = '1';
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FinPoset> all_posets(std::size_t n) {
  if (n > 6) throw InputError("poset enumeration is limited to 6 points");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::set<std::string> keys;
  std::vector<FinPoset> out;
  // Every poset has a linear extension, so upper-triangular relations cover all types.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) pairs.push_back(slots[s]);
    Relation r = Relation::identity(n);
    for (auto [a, b] : pairs) r.add(a, b);
    if (!r.transitive()) continue;
    FinPoset p = FinPoset::from_pairs(names, pairs);
    if (keys.insert(p.canonical_key()).second) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maps, quotients, separation

Relation preorder_of_map(const FinPoset& x, const FinPoset& y, const std::vector<std::size_t>& f) {
  if (f.size() != x.size()) throw InputError("map must assign an image to every point");
  for (auto v : f)
    if (v >= y.size()) throw InputError("map image outside the codomain");
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (x.le(a, b) && !y.le(f[a], f[b]))
        throw InputError("map is not monotone at " + x.name(a) + " <= " + x.name(b));
  Relation r(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (y.le(f[a], f[b])) r.add(a, b);
  return r;
}

Quotient quotient_poset(const FinPoset& x, const Relation& p) {
  if (p.size() != x.size() || !p.is_preorder()) throw InputError("quotient needs a preorder on the poset");
  if (!p.contains(x.order())) throw InputError("preorder does not extend the poset order");
  Quotient q;
  q.projection.assign(x.size(), 0);
  std::vector<std::size_t> reps;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < x.size(); ++a) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (p.has(a, reps[c]) && p.has(reps[c], a)) {
        q.projection[a] = c;
        names[c] += "," + x.name(a);
        placed = true;
        break;
      }
    }
    if (!placed) {
      q.projection[a] = reps.size();
      reps.push_back(a);
      names.push_back(x.name(a));
    }
  }
  for (auto& n : names) n = "{" + n + "}";
  std::vector<std::pair<std::size_t, std::size_t>> le;
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::size_t d = 0; d < reps.size(); ++d)
      if (c != d && p.has(reps[c], reps[d])) le.emplace_back(c, d);
  q.poset = FinPoset::from_pairs(std::move(names), le);
  return q;
}

namespace {

Witness indicator(const FinPoset& x, std::uint64_t mask) {
  Witness f(x.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    if ((mask >> i) & 1U) f[i] = Rational(1);
  return f;
}

}  // namespace

Witness urysohn_witness(const FinPoset& x, std::uint64_t f0, std::uint64_t f1) {
  if ((f0 | f1) & ~x.all_mask()) throw InputError("separation sets mention missing points");
  if (!x.is_down_set(f0)) throw InputError("F0 is not a down-set");
  if (!x.is_up_set(f1)) throw InputError("F1 is not an up-set");
  if (f0 & f1) throw InputError("F0 and F1 intersect");
  return indicator(x, f1);
}

Witness point_separator(const FinPoset& x, std::size_t a, std::size_t b) {
  if (a >= x.size() || b >= x.size()) throw InputError("separator points out of range");
  if (x.le(b, a)) throw InputError(x.name(a) + " >= " + x.name(b) + ": no separator exists");
  return indicator(x, x.up(b));
}

Relation reconstruct_order(const FinPoset& x, const std::vector<Witness>& family) {
  Relation r(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) {
      bool all = true;
      for (const auto& f : family)
        if (f.at(a) > f.at(b)) {
          all = false;
          break;
        }
      if (all) r.add(a, b);
    }
  return r;
}

}  // namespace mvm
