#include "mvm/finite_algebra.hpp"

#include <map>
#include <set>

namespace mvm {

const char* binop_name(BinOp op) {
  switch (op) {
    case BinOp::oplus: return "oplus";
    case BinOp::odot: return "odot";
    case BinOp::join: return "join";
    case BinOp::meet: return "meet";
  }
  return "?";
}

bool FiniteAlgebra::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

FiniteAlgebra FiniteAlgebra::blank(std::string name, std::vector<std::string> labels) {
  FiniteAlgebra alg;
  alg.name = std::move(name);
  alg.labels = std::move(labels);
  for (auto& t : alg.tables) t.assign(alg.size() * alg.size(), 0);
  return alg;
}

namespace {

std::vector<std::uint32_t> read_table(const nlohmann::json& t, std::size_t n, const std::string& path) {
  if (!t.is_array() || t.size() != n) throw InputError(path + ": expected " + std::to_string(n) + " rows");
  std::vector<std::uint32_t> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = t[i];
    const std::string rp = path + "/" + std::to_string(i);
    if (!row.is_array() || row.size() != n) throw InputError(rp + ": expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = row[j];
      if (!e.is_number_integer() || e.get<long long>() < 0 || static_cast<std::size_t>(e.get<long long>()) >= n)
        throw InputError(rp + "/" + std::to_string(j) + ": expected a carrier index below " + std::to_string(n));
      out.push_back(static_cast<std::uint32_t>(e.get<long long>()));
    }
  }
  return out;
}

std::size_t read_index(const nlohmann::json& ops, const char* key, std::size_t n) {
  const std::string path = std::string("/ops/") + key;
  if (!ops.contains(key)) throw InputError(path + ": required");
  const auto& e = ops[key];
  if (!e.is_number_integer() || e.get<long long>() < 0 || static_cast<std::size_t>(e.get<long long>()) >= n)
    throw InputError(path + ": expected a carrier index below " + std::to_string(n));
  return static_cast<std::size_t>(e.get<long long>());
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_json(const nlohmann::json& doc, std::string name) {
  if (!doc.is_object()) throw InputError("/: algebra document must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "carrier" && key != "ops" && key != "name") throw InputError("/" + key + ": unexpected field");
  if (!doc.contains("carrier") || !doc["carrier"].is_array() || doc["carrier"].empty())
    throw InputError("/carrier: required non-empty array");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc["carrier"].size(); ++i) {
    const auto& e = doc["carrier"][i];
    std::string label = e.is_string() ? e.get<std::string>() : e.dump();
    if (!seen.insert(label).second) throw InputError("/carrier/" + std::to_string(i) + ": duplicate element " + label);
    labels.push_back(std::move(label));
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("/name: expected a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("ops") || !doc["ops"].is_object()) throw InputError("/ops: required object");
  const auto& ops = doc["ops"];
  for (const auto& [key, _] : ops.items())
    if (key != "oplus" && key != "odot" && key != "join" && key != "meet" && key != "zero" && key != "one")
      throw InputError("/ops/" + key + ": unexpected field");
  FiniteAlgebra alg = blank(std::move(name), std::move(labels));
  const std::size_t n = alg.size();
  for (BinOp o : {BinOp::join, BinOp::meet}) {
    const char* key = binop_name(o);
    if (!ops.contains(key)) throw InputError(std::string("/ops/") + key + ": required");
    alg.tables[static_cast<int>(o)] = read_table(ops[key], n, std::string("/ops/") + key);
  }
  alg.zero = read_index(ops, "zero", n);
  alg.one = read_index(ops, "one", n);
  const bool has_oplus = ops.contains("oplus");
  const bool has_odot = ops.contains("odot");
  if (has_oplus != has_odot) throw InputError(std::string("/ops/") + (has_oplus ? "odot" : "oplus") + ": required alongside the other");
  if (has_oplus) {
    alg.tables[0] = read_table(ops["oplus"], n, "/ops/oplus");
    alg.tables[1] = read_table(ops["odot"], n, "/ops/odot");
  } else {
    validate_bounded_distributive(alg);
    alg.tables[0] = alg.tables[2];
    alg.tables[1] = alg.tables[3];
  }
  return alg;
}

nlohmann::json FiniteAlgebra::to_json() const {
  nlohmann::json ops;
  for (BinOp o : kBinOps) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t a = 0; a < size(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t b = 0; b < size(); ++b) row.push_back(op(o, a, b));
      rows.push_back(row);
    }
    ops[binop_name(o)] = rows;
  }
  ops["zero"] = zero;
  ops["one"] = one;
  return {{"name", name}, {"carrier", labels}, {"ops", ops}};
}

FiniteAlgebra FiniteAlgebra::tabulate(const AlgebraModel& model) {
  const auto carrier = model.finite_carrier();
  if (!carrier) throw InputError(model.name() + " has no finite carrier to tabulate");
  std::map<Value, std::size_t> index;
  std::vector<std::string> labels;
  for (const auto& v : *carrier) {
    index.emplace(v, labels.size());
    labels.push_back(model.format(v));
  }
  FiniteAlgebra alg = blank(model.name(), std::move(labels));
  auto lookup = [&](const Value& v) {
    const auto it = index.find(v);
    if (it == index.end()) throw std::logic_error(model.name() + ": operation left the carrier at " + v.str());
    return it->second;
  };
  for (std::size_t a = 0; a < carrier->size(); ++a)
    for (std::size_t b = 0; b < carrier->size(); ++b) {
      const auto& x = (*carrier)[a];
      const auto& y = (*carrier)[b];
      alg.set(BinOp::oplus, a, b, lookup(model.oplus(x, y)));
      alg.set(BinOp::odot, a, b, lookup(model.odot(x, y)));
      alg.set(BinOp::join, a, b, lookup(model.join(x, y)));
      alg.set(BinOp::meet, a, b, lookup(model.meet(x, y)));
    }
  alg.zero = lookup(model.zero());
  alg.one = lookup(model.one());
  return alg;
}

void validate_lattice(const FiniteAlgebra& alg) {
  const std::size_t n = alg.size();
  auto J = [&](std::size_t a, std::size_t b) { return alg.op(BinOp::join, a, b); };
  auto M = [&](std::size_t a, std::size_t b) { return alg.op(BinOp::meet, a, b); };
  auto fail = [&](const std::string& law, std::size_t a, std::size_t b) {
    throw InputError("not a lattice: " + law + " fails at (" + alg.labels[a] + ", " + alg.labels[b] + ")");
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (J(a, a) != a || M(a, a) != a) fail("idempotence", a, a);
    for (std::size_t b = 0; b < n; ++b) {
      if (J(a, b) != J(b, a) || M(a, b) != M(b, a)) fail("commutativity", a, b);
      if (J(a, M(a, b)) != a || M(a, J(a, b)) != a) fail("absorption", a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (J(a, J(b, c)) != J(J(a, b), c) || M(a, M(b, c)) != M(M(a, b), c)) fail("associativity", a, b);
    }
  }
}

void validate_bounded_distributive(const FiniteAlgebra& alg) {
  validate_lattice(alg);
  const std::size_t n = alg.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!alg.leq(alg.zero, a)) throw InputError("zero is not the least element (fails at " + alg.labels[a] + ")");
    if (!alg.leq(a, alg.one)) throw InputError("one is not the greatest element (fails at " + alg.labels[a] + ")");
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (alg.op(BinOp::meet, a, alg.op(BinOp::join, b, c)) !=
            alg.op(BinOp::join, alg.op(BinOp::meet, a, b), alg.op(BinOp::meet, a, c)))
          throw InputError("lattice is not distributive at (" + alg.labels[a] + ", " + alg.labels[b] + ", " +
                           alg.labels[c] + ")");
  }
}

FiniteAlgebra lattice_mvm_tables(const FinPoset& lattice) {
  const std::size_t n = lattice.size();
  if (n == 0) throw InputError("a lattice needs at least one element");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(lattice.name(i));
  FiniteAlgebra alg = FiniteAlgebra::blank("lattice", std::move(labels));
  auto extreme = [&](std::uint64_t bounds, bool least) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < n; ++c) {
      if (!((bounds >> c) & 1U)) continue;
      const std::uint64_t cone = least ? lattice.up(c) : lattice.down(c);
      if ((bounds & ~cone) == 0) return c;
    }
    return std::nullopt;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto j = extreme(lattice.up(a) & lattice.up(b), true);
      const auto m = extreme(lattice.down(a) & lattice.down(b), false);
      if (!j || !m) throw InputError("not a lattice: " + lattice.name(a) + " and " + lattice.name(b) + " lack a join or meet");
      alg.set(BinOp::join, a, b, *j);
      alg.set(BinOp::meet, a, b, *m);
    }
  const auto bottom = extreme(lattice.all_mask(), true);
  const auto top = extreme(lattice.all_mask(), false);
  if (!bottom || !top) throw InputError("lattice is not bounded");
  alg.zero = *bottom;
  alg.one = *top;
  validate_bounded_distributive(alg);
  alg.tables[0] = alg.tables[2];
  alg.tables[1] = alg.tables[3];
  return alg;
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
  FiniteAlgebra p = FiniteAlgebra::blank(a.name + "*" + b.name, std::move(labels));
  const std::size_t m = b.size();
  for (BinOp o : kBinOps)
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        p.set(o, x, y, a.op(o, x / m, y / m) * m + b.op(o, x % m, y % m));
  p.zero = a.zero * m + b.zero;
  p.one = a.one * m + b.one;
  return p;
}

namespace {

class TableModel final : public AlgebraModel {
 public:
  explicit TableModel(FiniteAlgebra alg) : alg_(std::move(alg)), chain_(alg_.is_chain()) {}

  std::string name() const override { return alg_.name; }
  bool supports(Fragment f) const override { return f == Fragment::mvm_core; }
  Value zero() const override { return idx(alg_.zero); }
  Value one() const override { return idx(alg_.one); }
  Value oplus(const Value& a, const Value& b) const override { return apply(BinOp::oplus, a, b); }
  Value odot(const Value& a, const Value& b) const override { return apply(BinOp::odot, a, b); }
  Value join(const Value& a, const Value& b) const override { return apply(BinOp::join, a, b); }
  Value meet(const Value& a, const Value& b) const override { return apply(BinOp::meet, a, b); }
  bool contains(const Value& v) const override {
    return v.size() == 1 && v[0].is_integer() && v[0].sign() >= 0 && v[0] < Rational(static_cast<long>(alg_.size()));
  }
  std::optional<std::vector<Value>> finite_carrier() const override {
    std::vector<Value> out;
    for (std::size_t i = 0; i < alg_.size(); ++i) out.push_back(idx(i));
    return out;
  }
  bool totally_ordered() const override { return chain_; }
  std::string format(const Value& v) const override { return alg_.labels.at(pos(v)); }
  Value parse(std::string_view text) const override {
    for (std::size_t i = 0; i < alg_.size(); ++i)
      if (alg_.labels[i] == text) return idx(i);
    throw InputError("'" + std::string(text) + "' is not an element of " + name());
  }

 private:
  static Value idx(std::size_t i) { return Value(Rational(static_cast<long>(i))); }
  std::size_t pos(const Value& v) const {
    if (!contains(v)) throw std::logic_error(name() + ": value " + v.str() + " outside the table");
    return v[0].num().get_ui();
  }
  Value apply(BinOp o, const Value& a, const Value& b) const { return idx(alg_.op(o, pos(a), pos(b))); }

  FiniteAlgebra alg_;
  bool chain_;
};

}  // namespace

ModelPtr make_table_model(FiniteAlgebra alg) { return std::make_shared<TableModel>(std::move(alg)); }

}  // namespace mvm
