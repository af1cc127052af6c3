#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finmodal/formula.hpp"
#include "finmodal/sets.hpp"

namespace finmodal::eval_detail {

/// Postorder stack program for evaluating one formula over bitmask
/// truth sets. Box runs as the dual of the semantics' diamond, so a
/// single diamond callback fixes the semantics (relational preimage,
/// derived set, or closure).
struct Program {
  struct Instr {
    Kind kind;
    int var = -1;  // slot into the valuation vector, for Kind::Var
  };
  std::vector<Instr> code;
  std::vector<std::string> vars;  // sorted variable order
  int max_stack = 0;
};

Program compile(const Formula& f);

template <typename DiaFn>
PointSet run(const Program& prog, const std::vector<PointSet>& var_masks,
             PointSet full, DiaFn&& dia, std::vector<PointSet>& stack) {
  stack.resize(prog.max_stack);
  int sp = 0;
  for (const auto& in : prog.code) {
    switch (in.kind) {
      case Kind::Var:
        stack[sp++] = var_masks[in.var];
        break;
      case Kind::Top:
        stack[sp++] = full;
        break;
      case Kind::Bot:
        stack[sp++] = 0;
        break;
      case Kind::Not:
        stack[sp - 1] = full & ~stack[sp - 1];
        break;
      case Kind::Dia:
        stack[sp - 1] = dia(stack[sp - 1]);
        break;
      case Kind::Box:
        stack[sp - 1] = full & ~dia(full & ~stack[sp - 1]);
        break;
      case Kind::And:
        --sp;
        stack[sp - 1] &= stack[sp];
        break;
      case Kind::Or:
        --sp;
        stack[sp - 1] |= stack[sp];
        break;
      case Kind::Imp:
        --sp;
        stack[sp - 1] = (full & ~stack[sp - 1]) | stack[sp];
        break;
    }
  }
  return stack[0];
}

/// Decodes valuation counter bits: variable i holds bits
/// [i*n, (i+1)*n) of the counter.
inline void decode_valuation(std::uint64_t counter, int n, int var_count,
                             std::vector<PointSet>& masks) {
  masks.resize(var_count);
  PointSet full = full_set(n);
  for (int i = 0; i < var_count; ++i)
    masks[i] = (counter >> (i * n)) & full;
}

}  // namespace finmodal::eval_detail
