#include "finmodal/eval.hpp"

#include <algorithm>
#include <map>

namespace finmodal::eval_detail {

namespace {

void emit(const Formula& f, const std::map<std::string, int>& slots,
          Program& prog, int depth, int& max_stack) {
  max_stack = std::max(max_stack, depth + 1);
  switch (f.kind()) {
    case Kind::Var:
      prog.code.push_back({Kind::Var, slots.at(f.var_name())});
      return;
    case Kind::Top:
    case Kind::Bot:
      prog.code.push_back({f.kind()});
      return;
    case Kind::Not:
    case Kind::Dia:
    case Kind::Box:
      emit(f.lhs(), slots, prog, depth, max_stack);
      prog.code.push_back({f.kind()});
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      emit(f.lhs(), slots, prog, depth, max_stack);
      emit(f.rhs(), slots, prog, depth + 1, max_stack);
      prog.code.push_back({f.kind()});
      return;
  }
}

}  // namespace

Program compile(const Formula& f) {
  Program prog;
  for (const auto& v : vars(f)) prog.vars.push_back(v);
  std::map<std::string, int> slots;
  for (int i = 0; i < static_cast<int>(prog.vars.size()); ++i)
    slots[prog.vars[i]] = i;
  int max_stack = 1;
  emit(f, slots, prog, 0, max_stack);
  prog.max_stack = max_stack;
  return prog;
}

}  // namespace finmodal::eval_detail
