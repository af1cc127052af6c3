#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace finmodal {

enum class Kind : unsigned char { Var, Top, Bot, Not, And, Or, Imp, Dia, Box };

/// Immutable modal formula tree. Copies share nodes and are cheap.
/// <*> and [*] are construction-time sugar: dia_star(f) builds f | <>f,
/// box_star(f) builds f & []f, so evaluators only ever see nine kinds.
class Formula {
 public:
  /// Defaults to T.
  Formula();

  static Formula var(std::string name);
  static Formula top();
  static Formula bot();

  Kind kind() const { return node_->kind; }

  /// Variable name; only meaningful when kind() == Var.
  const std::string& var_name() const { return node_->name; }

  /// Operand of a unary node, left operand of a binary node. Cheap:
  /// shares the subtree.
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  bool is_leaf() const {
    return node_->kind == Kind::Var || node_->kind == Kind::Top ||
           node_->kind == Kind::Bot;
  }
  bool is_unary() const {
    return node_->kind == Kind::Not || node_->kind == Kind::Dia ||
           node_->kind == Kind::Box;
  }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula make(Kind kind, const Formula* lhs, const Formula* rhs);

  std::shared_ptr<const Node> node_;

  friend Formula neg(Formula f);
  friend Formula conj(Formula a, Formula b);
  friend Formula disj(Formula a, Formula b);
  friend Formula impl(Formula a, Formula b);
  friend Formula dia(Formula f);
  friend Formula box(Formula f);
};

Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula impl(Formula a, Formula b);
Formula dia(Formula f);
Formula box(Formula f);
Formula dia_star(Formula f);
Formula box_star(Formula f);

/// Syntax error with the byte offset where parsing failed.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position);
  std::size_t position;
};

/// Parses the ASCII grammar: variables [a-z][a-zA-Z0-9_]*, T, F, ~, <>,
/// [], <*>, [*], &, |, -> (right-assoc), parentheses. Unary binds
/// tightest, then &, then |, then ->.
Formula parse(std::string_view text);

/// Prints with parentheses only where the grammar requires them;
/// parse(print(f)) == f. With resugar set, subtrees of the shape
/// f | <>f and f & []f print as <*>f and [*]f.
std::string print(const Formula& f, bool resugar = false);

/// The set of variable names occurring in f.
std::set<std::string> vars(const Formula& f);

/// Number of nodes of the given kind in f.
int count_kind(const Formula& f, Kind k);

/// Variables p0..p{count-1}, the fresh instantiation used for schemes.
std::vector<Formula> fresh_vars(int count);

/// Nested-diamond path scheme: n >= 1 gives
/// <>(a1 & <>(a2 & ... & <>(an & <>a0))...), n = 0 gives <>a0.
Formula scheme_P(int n, const std::vector<Formula>& args);

/// Pairwise-disjointness scheme: the conjunction of ~(ai & aj) over
/// i < j <= n, ordered lexicographically and nested to the right;
/// n = 0 gives T.
Formula scheme_D(int n, const std::vector<Formula>& args);

/// The circumference-bounding scheme
/// [*]D_n(...) -> (<>a0 -> <>(a0 & ~P_n(...))).
Formula scheme_C(int n, const std::vector<Formula>& args);

/// Axioms by name: K, 4, T, D, E, Loeb, Grz, M, M_dia, M_star,
/// instantiated with variables p, q.
Formula named_axiom(std::string_view name);

/// Names accepted by named_axiom, in display order.
const std::vector<std::string>& axiom_names();

}  // namespace finmodal
