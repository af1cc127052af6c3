#include "finmodal/dsem.hpp"

#include "finmodal/eval.hpp"

namespace finmodal {

namespace {

template <typename DiaFn>
PointSet eval_rec(const TopSpace& space, const Valuation& val, const Formula& f,
                  const DiaFn& dia_op) {
  PointSet full = space.universe();
  switch (f.kind()) {
    case Kind::Var: {
      auto it = val.find(f.var_name());
      if (it == val.end())
        throw std::invalid_argument("unbound variable: " + f.var_name());
      return it->second & full;
    }
    case Kind::Top:
      return full;
    case Kind::Bot:
      return 0;
    case Kind::Not:
      return full & ~eval_rec(space, val, f.lhs(), dia_op);
    case Kind::And:
      return eval_rec(space, val, f.lhs(), dia_op) &
             eval_rec(space, val, f.rhs(), dia_op);
    case Kind::Or:
      return eval_rec(space, val, f.lhs(), dia_op) |
             eval_rec(space, val, f.rhs(), dia_op);
    case Kind::Imp:
      return (full & ~eval_rec(space, val, f.lhs(), dia_op)) |
             eval_rec(space, val, f.rhs(), dia_op);
    case Kind::Dia:
      return dia_op(eval_rec(space, val, f.lhs(), dia_op));
    case Kind::Box:
      return full & ~dia_op(full & ~eval_rec(space, val, f.lhs(), dia_op));
  }
  return 0;
}

template <typename DiaFn>
ValidityResult valid_scan(const TopSpace& space, const Formula& f,
                          int bit_budget, const DiaFn& dia_op) {
  auto prog = eval_detail::compile(f);
  int v = static_cast<int>(prog.vars.size());
  int n = space.points();
  if (v * n > bit_budget)
    throw CapExceeded("valuation budget exceeded: " + std::to_string(v) +
                      " vars * " + std::to_string(n) + " points > " +
                      std::to_string(bit_budget) + " bits");
  PointSet full = space.universe();
  std::uint64_t total = std::uint64_t{1} << (v * n);
  std::vector<PointSet> masks, stack;
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    eval_detail::decode_valuation(counter, n, v, masks);
    PointSet truth = eval_detail::run(prog, masks, full, dia_op, stack);
    if (truth != full) {
      Countermodel cm;
      for (int i = 0; i < v; ++i) cm.valuation[prog.vars[i]] = masks[i];
      cm.point = first_point(full & ~truth);
      return {false, std::move(cm)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace

PointSet eval_d(const TopSpace& space, const Valuation& val, const Formula& f) {
  return eval_rec(space, val, f,
                  [&space](PointSet s) { return space.derived(s); });
}

PointSet eval_c(const TopSpace& space, const Valuation& val, const Formula& f) {
  return eval_rec(space, val, f,
                  [&space](PointSet s) { return space.closure(s); });
}

ValidityResult d_valid(const TopSpace& space, const Formula& f,
                       int bit_budget) {
  return valid_scan(space, f, bit_budget,
                    [&space](PointSet s) { return space.derived(s); });
}

ValidityResult c_valid(const TopSpace& space, const Formula& f,
                       int bit_budget) {
  return valid_scan(space, f, bit_budget,
                    [&space](PointSet s) { return space.closure(s); });
}

std::string DMorphismCheck::describe() const {
  switch (failed) {
    case Condition::none:
      return "ok";
    case Condition::continuity:
      return "continuity fails: preimage of the basic open at frame point " +
             std::to_string(witness) + " is not open";
    case Condition::openness:
      return "openness fails: image of the minimal neighbourhood of space "
             "point " +
             std::to_string(witness) + " is not an up-set";
    case Condition::reflexive_fiber:
      return "fiber of reflexive point " + std::to_string(witness) +
             " is not crowded";
    case Condition::irreflexive_fiber:
      return "fiber of irreflexive point " + std::to_string(witness) +
             " is not discrete";
  }
  return "ok";
}

DMorphismCheck d_morphism_check(const DMorphism& dm) {
  const TopSpace& X = dm.space;
  const Frame& fr = dm.frame;
  if (!is_transitive(fr))
    throw std::invalid_argument("d-morphism target must be transitive");
  if (static_cast<int>(dm.map.size()) != X.points())
    throw std::invalid_argument("map size does not match space");
  for (int x = 0; x < X.points(); ++x)
    if (dm.map[x] < 0 || dm.map[x] >= fr.n)
      throw std::invalid_argument("map value out of frame range");

  std::vector<PointSet> fiber(fr.n, 0);
  for (int x = 0; x < X.points(); ++x) fiber[dm.map[x]] |= point_bit(x);

  DMorphismCheck res;
  // Continuity on the basic opens R*(w).
  for (int w = 0; w < fr.n; ++w) {
    PointSet basic = fr.succ[w] | point_bit(w);
    PointSet preimage = 0;
    PointSet rest = basic;
    while (rest) {
      int v = first_point(rest);
      rest &= rest - 1;
      preimage |= fiber[v];
    }
    if (!X.is_open(preimage)) {
      res.ok = false;
      res.failed = DMorphismCheck::Condition::continuity;
      res.witness = w;
      return res;
    }
  }
  // Openness on the minimal-neighbourhood basis; images of unions are
  // unions of images.
  for (int x = 0; x < X.points(); ++x) {
    PointSet img = 0;
    PointSet rest = X.min_nbhd(x);
    while (rest) {
      int y = first_point(rest);
      rest &= rest - 1;
      img |= point_bit(dm.map[y]);
    }
    PointSet frontier = img;
    bool up_set = true;
    while (frontier) {
      int w = first_point(frontier);
      frontier &= frontier - 1;
      if (fr.succ[w] & ~img) {
        up_set = false;
        break;
      }
    }
    if (!up_set) {
      res.ok = false;
      res.failed = DMorphismCheck::Condition::openness;
      res.witness = x;
      return res;
    }
  }
  for (int w = 0; w < fr.n; ++w) {
    if (fr.has_edge(w, w)) {
      if (fiber[w] & ~X.derived(fiber[w])) {
        res.ok = false;
        res.failed = DMorphismCheck::Condition::reflexive_fiber;
        res.witness = w;
        return res;
      }
    } else {
      if (fiber[w] & X.derived(fiber[w])) {
        res.ok = false;
        res.failed = DMorphismCheck::Condition::irreflexive_fiber;
        res.witness = w;
        return res;
      }
    }
  }
  return res;
}

bool is_surjective(const DMorphism& dm) {
  PointSet hit = 0;
  for (int v : dm.map) hit |= point_bit(v);
  return hit == full_set(dm.frame.n);
}

TransferCheck validity_transfer_check(const DMorphism& dm, const Formula& f,
                                      int bit_budget) {
  DMorphismCheck check = d_morphism_check(dm);
  if (!check.ok)
    throw std::invalid_argument("not a d-morphism: " + check.describe());
  if (!is_surjective(dm))
    throw std::invalid_argument("validity transfer requires a surjective map");
  TransferCheck out;
  out.frame_side = valid_in_frame(dm.frame, f, bit_budget);
  out.space_side = d_valid(dm.space, f, bit_budget);
  out.consistent = !out.space_side.valid || out.frame_side.valid;
  return out;
}

}  // namespace finmodal
