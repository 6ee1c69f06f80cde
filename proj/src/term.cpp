#include "mvm/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace mvm {

Term Term::make(Op op, std::vector<Term> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  for (const auto& c : children) node->arity = std::max(node->arity, c.arity());
  node->children = std::move(children);
  return Term(std::move(node));
}

Term Term::var(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->op = Op::var;
  node->index = index;
  node->arity = index + 1;
  return Term(std::move(node));
}

Term Term::constant(Rational value) {
  if (value.sign() < 0 || value > Rational(1)) throw InputError("constant outside [0,1]: " + value.str());
  auto node = std::make_shared<Node>();
  node->op = Op::constant;
  node->value = std::move(value);
  return Term(std::move(node));
}

Term Term::oplus(Term a, Term b) { return make(Op::oplus, {std::move(a), std::move(b)}); }
Term Term::odot(Term a, Term b) { return make(Op::odot, {std::move(a), std::move(b)}); }
Term Term::join(Term a, Term b) { return make(Op::join, {std::move(a), std::move(b)}); }
Term Term::meet(Term a, Term b) { return make(Op::meet, {std::move(a), std::move(b)}); }
Term Term::half(Term a) { return make(Op::half, {std::move(a)}); }
Term Term::cohalf(Term a) { return make(Op::cohalf, {std::move(a)}); }

Term Term::lambda(std::vector<Term> prefix, Term tail) {
  prefix.push_back(std::move(tail));
  return make(Op::lambda, std::move(prefix));
}

std::span<const Term> Term::prefix() const {
  const auto& ch = node_->children;
  return std::span<const Term>(ch.data(), ch.size() - 1);
}

std::size_t Term::dag_size() const {
  std::unordered_set<const void*> seen;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (!seen.insert(t.id()).second) return;
    for (const auto& c : t.children()) walk(c);
  };
  walk(*this);
  return seen.size();
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.children().size() != b.children().size()) return false;
  if (a.op() == Op::var) return a.index() == b.index();
  if (a.op() == Op::constant) return a.value() == b.value();
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!(a.children()[i] == b.children()[i])) return false;
  return true;
}

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::oplus: return "oplus";
    case Op::odot: return "odot";
    case Op::join: return "join";
    case Op::meet: return "meet";
    case Op::half: return "h";
    case Op::cohalf: return "j";
    default: return "";
  }
}

}  // namespace

std::string Term::str() const {
  switch (op()) {
    case Op::var: return "x" + std::to_string(index() + 1);
    case Op::constant: {
      if (value().is_zero()) return "0";
      if (value() == Rational(1)) return "1";
      return "c(" + value().str() + ")";
    }
    case Op::lambda: {
      std::string out = "lambda([";
      const auto p = prefix();
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += p[i].str();
      }
      return out + "]; " + tail().str() + ")";
    }
    default: {
      std::string out = std::string(op_name(op())) + "(";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out += ", ";
        out += children()[i].str();
      }
      return out + ")";
    }
  }
}

// ---------------------------------------------------------------------------
// Derived terms

Term sigma(int i, const Term& x, const Term& y, const Term& z) {
  switch (i) {
    case 1: return Term::odot(Term::oplus(x, y), Term::oplus(Term::odot(x, y), z));
    case 2: return Term::oplus(Term::odot(x, y), Term::odot(Term::oplus(x, y), z));
    case 3: return Term::oplus(Term::odot(x, Term::oplus(y, z)), Term::odot(y, z));
    case 4: return Term::odot(Term::oplus(x, Term::odot(y, z)), Term::oplus(y, z));
    default: throw InputError("sigma index must be 1..4, got " + std::to_string(i));
  }
}

Term sigma(int i) { return sigma(i, Term::var(0), Term::var(1), Term::var(2)); }

Term unit_term(unsigned n, Pole pole, ConstStyle style) {
  if (style == ConstStyle::dyadic) return Term::constant(dyadic_unit(n, pole).value());
  Term t = Term::constant(pole == Pole::lower ? Rational(1) : Rational(0));
  for (unsigned k = 0; k < n; ++k) t = pole == Pole::lower ? Term::half(t) : Term::cohalf(t);
  return t;
}

Term tau(unsigned n, const Term& x, const Term& y, ConstStyle style) {
  return Term::join(Term::meet(x, Term::oplus(y, unit_term(n, Pole::lower, style))),
                    Term::odot(y, unit_term(n, Pole::upper, style)));
}

Term tau(unsigned n, ConstStyle style) { return tau(n, Term::var(0), Term::var(1), style); }

Term mu(std::span<const Term> args, ConstStyle style) {
  if (args.empty()) throw InputError("mu needs at least one argument");
  Term acc = args[0];
  for (std::size_t n = 2; n <= args.size(); ++n) acc = tau(static_cast<unsigned>(n - 1), args[n - 1], acc, style);
  return acc;
}

Term mu(unsigned n, ConstStyle style) {
  if (n == 0) throw InputError("mu index must be positive");
  std::vector<Term> vars;
  for (unsigned i = 0; i < n; ++i) vars.push_back(Term::var(i));
  return mu(vars, style);
}

// ---------------------------------------------------------------------------
// Fragments and evaluation

std::set<Fragment> fragments_used(const Term& t) {
  std::set<Fragment> out{Fragment::mvm_core};
  std::unordered_set<const void*> seen;
  std::function<void(const Term&)> walk = [&](const Term& s) {
    if (!seen.insert(s.id()).second) return;
    switch (s.op()) {
      case Op::constant:
        if (!s.value().is_zero() && s.value() != Rational(1)) out.insert(Fragment::dyadic_constants);
        break;
      case Op::half:
      case Op::cohalf: out.insert(Fragment::two_div); break;
      case Op::lambda: out.insert(Fragment::lambda); break;
      default: break;
    }
    for (const auto& c : s.children()) walk(c);
  };
  walk(t);
  return out;
}

CompiledTerm::CompiledTerm(const Term& t, const AlgebraModel& alg) : alg_(&alg), arity_(t.arity()) {
  std::unordered_map<const void*, std::size_t> slot;
  std::function<std::size_t(const Term&)> go = [&](const Term& s) -> std::size_t {
    if (auto it = slot.find(s.id()); it != slot.end()) return it->second;
    Step step{s.op(), s.index(), {}};
    if (s.op() != Op::var && s.arity() == 0) {
      step.op = Op::constant;
      step.index = constants_.size();
      constants_.push_back(eval(s, alg, {}));
    } else {
      for (const auto& c : s.children()) step.args.push_back(go(c));
    }
    steps_.push_back(std::move(step));
    slot.emplace(s.id(), steps_.size() - 1);
    return steps_.size() - 1;
  };
  go(t);
}

Value CompiledTerm::operator()(const Env& env) const {
  if (arity_ > env.size())
    throw InputError("term needs " + std::to_string(arity_) + " variables, environment has " +
                     std::to_string(env.size()));
  std::vector<Value> r(steps_.size());
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    const auto& a = s.args;
    switch (s.op) {
      case Op::var: r[i] = env[s.index]; break;
      case Op::constant: r[i] = constants_[s.index]; break;
      case Op::oplus: r[i] = alg_->oplus(r[a[0]], r[a[1]]); break;
      case Op::odot: r[i] = alg_->odot(r[a[0]], r[a[1]]); break;
      case Op::join: r[i] = alg_->join(r[a[0]], r[a[1]]); break;
      case Op::meet: r[i] = alg_->meet(r[a[0]], r[a[1]]); break;
      case Op::half: r[i] = alg_->half(r[a[0]]); break;
      case Op::cohalf: r[i] = alg_->cohalf(r[a[0]]); break;
      case Op::lambda: {
        std::vector<Value> prefix;
        prefix.reserve(a.size() - 1);
        for (std::size_t k = 0; k + 1 < a.size(); ++k) prefix.push_back(r[a[k]]);
        r[i] = alg_->lambda(prefix, r[a.back()]);
        break;
      }
    }
  }
  return r.back();
}

Value eval(const Term& t, const AlgebraModel& alg, const Env& env) {
  if (t.arity() > env.size())
    throw InputError("term needs " + std::to_string(t.arity()) + " variables, environment has " +
                     std::to_string(env.size()));
  std::unordered_map<const void*, Value> memo;
  std::function<Value(const Term&)> go = [&](const Term& s) -> Value {
    if (s.op() == Op::var) return env[s.index()];
    if (auto it = memo.find(s.id()); it != memo.end()) return it->second;
    Value v;
    const auto& ch = s.children();
    switch (s.op()) {
      case Op::constant: v = alg.constant(s.value()); break;
      case Op::oplus: v = alg.oplus(go(ch[0]), go(ch[1])); break;
      case Op::odot: v = alg.odot(go(ch[0]), go(ch[1])); break;
      case Op::join: v = alg.join(go(ch[0]), go(ch[1])); break;
      case Op::meet: v = alg.meet(go(ch[0]), go(ch[1])); break;
      case Op::half: v = alg.half(go(ch[0])); break;
      case Op::cohalf: v = alg.cohalf(go(ch[0])); break;
      case Op::lambda: {
        std::vector<Value> prefix;
        for (const auto& p : s.prefix()) prefix.push_back(go(p));
        v = alg.lambda(prefix, go(s.tail()));
        break;
      }
      case Op::var: break;
    }
    memo.emplace(s.id(), v);
    return v;
  };
  return go(t);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Term parse_all() {
    Term t = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("term parse error at offset " + std::to_string(pos_) + ": " + what + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string until_delim() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ')' && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != ';') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned natural() {
    const auto w = word();
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("expected a natural number");
    return static_cast<unsigned>(std::stoul(w));
  }

  std::vector<Term> rest_args() {
    std::vector<Term> out;
    while (accept(',')) out.push_back(expr());
    return out;
  }

  Term expr() {
    skip();
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      return Term::constant(Rational::parse(until_delim()));
    }
    const std::string w = word();
    if (w.empty()) fail("expected a term");
    if (w.size() > 1 && w[0] == 'x' && std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const auto n = std::stoul(w.substr(1));
      if (n == 0) fail("variables are numbered from x1");
      return Term::var(n - 1);
    }
    if (w == "oplus" || w == "odot" || w == "join" || w == "meet") {
      expect('(');
      Term a = expr();
      expect(',');
      Term b = expr();
      expect(')');
      if (w == "oplus") return Term::oplus(a, b);
      if (w == "odot") return Term::odot(a, b);
      if (w == "join") return Term::join(a, b);
      return Term::meet(a, b);
    }
    if (w == "h" || w == "j") {
      expect('(');
      Term a = expr();
      expect(')');
      return w == "h" ? Term::half(a) : Term::cohalf(a);
    }
    if (w == "c") {
      expect('(');
      const auto text = until_delim();
      expect(')');
      return Term::constant(Rational::parse(text));
    }
    if (w.rfind("sigma", 0) == 0 && w.size() == 6 && std::isdigit(static_cast<unsigned char>(w[5]))) {
      const int i = w[5] - '0';
      if (!accept('(')) return sigma(i);
      Term x = expr();
      expect(',');
      Term y = expr();
      expect(',');
      Term z = expr();
      expect(')');
      return sigma(i, x, y, z);
    }
    if (w == "tau" || w == "tau_h" || w == "mu" || w == "mu_h") {
      const auto style = w.back() == 'h' && w.size() > 3 ? ConstStyle::halving : ConstStyle::dyadic;
      expect('(');
      const unsigned n = natural();
      auto args = rest_args();
      expect(')');
      if (w[0] == 't') {
        if (args.empty()) return tau(n, style);
        if (args.size() != 2) fail("tau takes 0 or 2 term arguments");
        return tau(n, args[0], args[1], style);
      }
      if (args.empty()) return mu(n, style);
      if (args.size() != n) fail("mu(n, ...) takes exactly n term arguments");
      return mu(args, style);
    }
    if (w == "lambda") {
      expect('(');
      expect('[');
      std::vector<Term> prefix;
      if (!accept(']')) {
        prefix.push_back(expr());
        while (accept(',')) prefix.push_back(expr());
        expect(']');
      }
      expect(';');
      Term tail = expr();
      expect(')');
      return Term::lambda(std::move(prefix), tail);
    }
    fail("unknown symbol '" + w + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace mvm
