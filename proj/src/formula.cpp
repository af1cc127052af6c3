#include "finmodal/formula.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace finmodal {

Formula Formula::make(Kind kind, const Formula* lhs, const Formula* rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  if (lhs) node->lhs = lhs->node_;
  if (rhs) node->rhs = rhs->node_;
  return Formula(std::move(node));
}

Formula Formula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::top() { return make(Kind::Top, nullptr, nullptr); }
Formula Formula::bot() { return make(Kind::Bot, nullptr, nullptr); }

Formula::Formula() : node_(top().node_) {}

Formula neg(Formula f) { return Formula::make(Kind::Not, &f, nullptr); }
Formula conj(Formula a, Formula b) { return Formula::make(Kind::And, &a, &b); }
Formula disj(Formula a, Formula b) { return Formula::make(Kind::Or, &a, &b); }
Formula impl(Formula a, Formula b) { return Formula::make(Kind::Imp, &a, &b); }
Formula dia(Formula f) { return Formula::make(Kind::Dia, &f, nullptr); }
Formula box(Formula f) { return Formula::make(Kind::Box, &f, nullptr); }
Formula dia_star(Formula f) { return disj(f, dia(f)); }
Formula box_star(Formula f) { return conj(f, box(f)); }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Var:
      return node_->name == other.node_->name;
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::Not:
    case Kind::Dia:
    case Kind::Box:
      return lhs() == other.lhs();
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)),
      position(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty input", pos_);
    Formula f = parse_imp();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool consume(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    skip_ws();
    if (consume("->")) return impl(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    for (;;) {
      skip_ws();
      // '|' but not part of some longer token; grammar has none.
      if (at('|')) {
        ++pos_;
        f = disj(std::move(f), parse_and());
      } else {
        return f;
      }
    }
  }

  Formula parse_and() {
    Formula f = parse_unary();
    for (;;) {
      skip_ws();
      if (at('&')) {
        ++pos_;
        f = conj(std::move(f), parse_unary());
      } else {
        return f;
      }
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("formula expected", pos_);
    if (at('~')) {
      ++pos_;
      return neg(parse_unary());
    }
    if (at('<')) {
      std::size_t start = pos_;
      ++pos_;
      if (consume("*>")) return dia_star(parse_unary());
      if (consume(">")) return dia(parse_unary());
      throw ParseError("malformed '<>' or '<*>'", start);
    }
    if (at('[')) {
      std::size_t start = pos_;
      ++pos_;
      if (consume("*]")) return box_star(parse_unary());
      if (consume("]")) return box(parse_unary());
      throw ParseError("malformed '[]' or '[*]'", start);
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("formula expected", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_imp();
      skip_ws();
      if (!at(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (c == 'T') {
      ++pos_;
      return Formula::top();
    }
    if (c == 'F') {
      ++pos_;
      return Formula::bot();
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size()) {
        char k = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(k)) || k == '_')
          ++pos_;
        else
          break;
      }
      return Formula::var(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Precedence levels: -> is 0, | is 1, & is 2, unary 3, atoms 4.
constexpr int kImp = 0, kOr = 1, kAnd = 2, kUnary = 3, kAtom = 4;

int precedence(Kind k) {
  switch (k) {
    case Kind::Imp:
      return kImp;
    case Kind::Or:
      return kOr;
    case Kind::And:
      return kAnd;
    case Kind::Not:
    case Kind::Dia:
    case Kind::Box:
      return kUnary;
    default:
      return kAtom;
  }
}

void print_rec(const Formula& f, int min_prec, bool resugar,
               std::ostringstream& out) {
  if (resugar && f.kind() == Kind::Or && f.rhs().kind() == Kind::Dia &&
      f.lhs() == f.rhs().lhs()) {
    if (kUnary < min_prec) {
      out << '(';
      out << "<*>";
      print_rec(f.lhs(), kUnary, resugar, out);
      out << ')';
    } else {
      out << "<*>";
      print_rec(f.lhs(), kUnary, resugar, out);
    }
    return;
  }
  if (resugar && f.kind() == Kind::And && f.rhs().kind() == Kind::Box &&
      f.lhs() == f.rhs().lhs()) {
    if (kUnary < min_prec) {
      out << "([*]";
      print_rec(f.lhs(), kUnary, resugar, out);
      out << ')';
    } else {
      out << "[*]";
      print_rec(f.lhs(), kUnary, resugar, out);
    }
    return;
  }

  int prec = precedence(f.kind());
  bool parens = prec < min_prec;
  if (parens) out << '(';
  switch (f.kind()) {
    case Kind::Var:
      out << f.var_name();
      break;
    case Kind::Top:
      out << 'T';
      break;
    case Kind::Bot:
      out << 'F';
      break;
    case Kind::Not:
      out << '~';
      print_rec(f.lhs(), kUnary, resugar, out);
      break;
    case Kind::Dia:
      out << "<>";
      print_rec(f.lhs(), kUnary, resugar, out);
      break;
    case Kind::Box:
      out << "[]";
      print_rec(f.lhs(), kUnary, resugar, out);
      break;
    case Kind::And:
      // Left-associative: the right operand needs strictly higher level.
      print_rec(f.lhs(), kAnd, resugar, out);
      out << " & ";
      print_rec(f.rhs(), kAnd + 1, resugar, out);
      break;
    case Kind::Or:
      print_rec(f.lhs(), kOr, resugar, out);
      out << " | ";
      print_rec(f.rhs(), kOr + 1, resugar, out);
      break;
    case Kind::Imp:
      // Right-associative.
      print_rec(f.lhs(), kImp + 1, resugar, out);
      out << " -> ";
      print_rec(f.rhs(), kImp, resugar, out);
      break;
  }
  if (parens) out << ')';
}

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Var:
      out.insert(f.var_name());
      return;
    case Kind::Top:
    case Kind::Bot:
      return;
    case Kind::Not:
    case Kind::Dia:
    case Kind::Box:
      collect_vars(f.lhs(), out);
      return;
    default:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
      return;
  }
}

void require_arity(int n, const std::vector<Formula>& args,
                   const char* scheme) {
  if (n < 0) throw std::invalid_argument(std::string(scheme) + ": n must be >= 0");
  if (static_cast<int>(args.size()) != n + 1)
    throw std::invalid_argument(std::string(scheme) + ": expected " +
                                std::to_string(n + 1) + " arguments, got " +
                                std::to_string(args.size()));
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Formula& f, bool resugar) {
  std::ostringstream out;
  print_rec(f, kImp, resugar, out);
  return out.str();
}

std::set<std::string> vars(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

int count_kind(const Formula& f, Kind k) {
  int self = f.kind() == k ? 1 : 0;
  if (f.is_leaf()) return self;
  if (f.is_unary()) return self + count_kind(f.lhs(), k);
  return self + count_kind(f.lhs(), k) + count_kind(f.rhs(), k);
}

std::vector<Formula> fresh_vars(int count) {
  std::vector<Formula> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(Formula::var("p" + std::to_string(i)));
  return out;
}

Formula scheme_P(int n, const std::vector<Formula>& args) {
  require_arity(n, args, "scheme_P");
  if (n == 0) return dia(args[0]);
  Formula acc = dia(args[0]);
  for (int i = n; i >= 1; --i) acc = dia(conj(args[i], std::move(acc)));
  return acc;
}

Formula scheme_D(int n, const std::vector<Formula>& args) {
  require_arity(n, args, "scheme_D");
  if (n == 0) return Formula::top();
  std::vector<Formula> conjuncts;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      conjuncts.push_back(neg(conj(args[i], args[j])));
  Formula acc = conjuncts.back();
  for (int i = static_cast<int>(conjuncts.size()) - 2; i >= 0; --i)
    acc = conj(conjuncts[i], std::move(acc));
  return acc;
}

Formula scheme_C(int n, const std::vector<Formula>& args) {
  require_arity(n, args, "scheme_C");
  Formula d = scheme_D(n, args);
  Formula p = scheme_P(n, args);
  return impl(box_star(std::move(d)),
              impl(dia(args[0]), dia(conj(args[0], neg(std::move(p))))));
}

Formula named_axiom(std::string_view name) {
  Formula p = Formula::var("p");
  Formula q = Formula::var("q");
  if (name == "K") return impl(box(impl(p, q)), impl(box(p), box(q)));
  if (name == "4") return impl(dia(dia(p)), dia(p));
  if (name == "T") return impl(box(p), p);
  if (name == "D") return dia(Formula::top());
  if (name == "E") return disj(box(Formula::bot()), dia(box(Formula::bot())));
  if (name == "Loeb") return impl(box(impl(box(p), p)), box(p));
  if (name == "Grz") return impl(box(impl(box(impl(p, box(p))), p)), box(p));
  if (name == "M") return impl(box(dia(p)), dia(box(p)));
  if (name == "M_dia") return dia(disj(box(p), box(neg(p))));
  if (name == "M_star") return dia_star(disj(box_star(p), box_star(neg(p))));
  throw std::invalid_argument("unknown axiom name: " + std::string(name));
}

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {
      "K", "4", "T", "D", "E", "Loeb", "Grz", "M", "M_dia", "M_star"};
  return names;
}

}  // namespace finmodal
