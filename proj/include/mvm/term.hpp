#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvm/model.hpp"

namespace mvm {

enum class Op { var, constant, oplus, odot, join, meet, half, cohalf, lambda };

/// Immutable term over the MVM, dyadic, 2-divisible and λ signatures.
///
/// Terms share subterms, so derived terms such as μₙ stay linear in size
/// even though their printed form is exponential. For a lambda node the
/// children are the prefix followed by the repeated tail.
class Term {
 public:
  static Term var(std::size_t index);
  static Term constant(Rational value);
  static Term oplus(Term a, Term b);
  static Term odot(Term a, Term b);
  static Term join(Term a, Term b);
  static Term meet(Term a, Term b);
  static Term half(Term a);
  static Term cohalf(Term a);
  static Term lambda(std::vector<Term> prefix, Term tail);

  Op op() const { return node_->op; }
  std::size_t index() const { return node_->index; }
  const Rational& value() const { return node_->value; }
  const std::vector<Term>& children() const { return node_->children; }
  /// For lambda nodes.
  std::span<const Term> prefix() const;
  const Term& tail() const { return node_->children.back(); }

  /// One more than the largest variable index (0 for closed terms).
  std::size_t arity() const { return node_->arity; }
  std::size_t dag_size() const;
  const void* id() const { return node_.get(); }

  /// Printed with 1-based variables: oplus(x1, c(1/2)).
  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Op op;
    std::size_t index = 0;
    Rational value;
    std::vector<Term> children;
    std::size_t arity = 0;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Op op, std::vector<Term> children);

  std::shared_ptr<const Node> node_;
};

/// How τₙ and μₙ spell the constants 1/2ⁿ and 1 − 1/2ⁿ: as dyadic
/// constants, or as hⁿ(1) and jⁿ(0) in the 2-divisible signature.
enum class ConstStyle { dyadic, halving };

// Derived terms.
Term sigma(int i);
Term sigma(int i, const Term& x, const Term& y, const Term& z);
Term tau(unsigned n, const Term& x, const Term& y, ConstStyle style = ConstStyle::dyadic);
Term tau(unsigned n, ConstStyle style = ConstStyle::dyadic);
/// μₙ(args[0..n-1]) via μ₁ = x₁, μₙ = τ_{n−1}(xₙ, μ_{n−1}).
Term mu(std::span<const Term> args, ConstStyle style = ConstStyle::dyadic);
Term mu(unsigned n, ConstStyle style = ConstStyle::dyadic);
/// 1/2ⁿ (lower) or 1 − 1/2ⁿ (upper) in the given style.
Term unit_term(unsigned n, Pole pole, ConstStyle style);

/// Signature fragments a term needs.
std::set<Fragment> fragments_used(const Term& t);

/// Evaluate with memoisation on shared subterms.
Value eval(const Term& t, const AlgebraModel& alg, const Env& env);

/// A term flattened into evaluation order for one model, with closed
/// subterms evaluated once. Cheap to run on many environments.
class CompiledTerm {
 public:
  CompiledTerm(const Term& t, const AlgebraModel& alg);

  std::size_t arity() const { return arity_; }
  Value operator()(const Env& env) const;

 private:
  struct Step {
    Op op;
    std::size_t index = 0;  // variable index or constant slot
    std::vector<std::size_t> args;
  };
  const AlgebraModel* alg_;
  std::vector<Step> steps_;
  std::vector<Value> constants_;
  std::size_t arity_ = 0;
};

/// Parses the CLI grammar: oplus(x1, odot(x2, c(1/2))), sigma1, tau(3),
/// mu(4), lambda([t1, t2]; tail), h(..), j(..), join, meet, 0, 1.
Term parse_term(std::string_view text);

}  // namespace mvm
