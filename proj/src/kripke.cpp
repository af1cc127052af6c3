#include "finmodal/kripke.hpp"

#include <algorithm>
#include <numeric>

#include "finmodal/eval.hpp"

namespace finmodal {

Frame Frame::empty(int n) {
  if (n < 0 || n > kMaxPoints)
    throw std::invalid_argument("frame size out of range 0..64");
  Frame f;
  f.n = n;
  f.succ.assign(n, 0);
  return f;
}

Frame Frame::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Frame f = empty(n);
  for (auto [x, y] : edges) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("edge (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") out of range");
    if (f.has_edge(x, y))
      throw std::invalid_argument("duplicate edge (" + std::to_string(x) +
                                  "," + std::to_string(y) + ")");
    f.succ[x] |= point_bit(y);
  }
  return f;
}

namespace {

PointSet frame_dia(const Frame& fr, PointSet s) {
  PointSet out = 0;
  for (int x = 0; x < fr.n; ++x)
    if (fr.succ[x] & s) out |= point_bit(x);
  return out;
}

}  // namespace

PointSet eval_frame(const Frame& frame, const Valuation& val,
                    const Formula& f) {
  PointSet full = full_set(frame.n);
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
      return full & ~eval_frame(frame, val, f.lhs());
    case Kind::And:
      return eval_frame(frame, val, f.lhs()) & eval_frame(frame, val, f.rhs());
    case Kind::Or:
      return eval_frame(frame, val, f.lhs()) | eval_frame(frame, val, f.rhs());
    case Kind::Imp:
      return (full & ~eval_frame(frame, val, f.lhs())) |
             eval_frame(frame, val, f.rhs());
    case Kind::Dia:
      return frame_dia(frame, eval_frame(frame, val, f.lhs()));
    case Kind::Box: {
      PointSet s = eval_frame(frame, val, f.lhs());
      PointSet out = 0;
      for (int x = 0; x < frame.n; ++x)
        if ((frame.succ[x] & ~s) == 0) out |= point_bit(x);
      return out;
    }
  }
  return 0;
}

ValidityResult valid_in_frame(const Frame& frame, const Formula& f,
                              int bit_budget) {
  auto prog = eval_detail::compile(f);
  int v = static_cast<int>(prog.vars.size());
  if (v * frame.n > bit_budget)
    throw CapExceeded("valuation budget exceeded: " + std::to_string(v) +
                      " vars * " + std::to_string(frame.n) + " points > " +
                      std::to_string(bit_budget) + " bits");
  PointSet full = full_set(frame.n);
  std::uint64_t total = std::uint64_t{1} << (v * frame.n);
  std::vector<PointSet> masks, stack;
  auto dia = [&frame](PointSet s) { return frame_dia(frame, s); };
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    eval_detail::decode_valuation(counter, frame.n, v, masks);
    PointSet truth = eval_detail::run(prog, masks, full, dia, stack);
    if (truth != full) {
      Countermodel cm;
      for (int i = 0; i < v; ++i) cm.valuation[prog.vars[i]] = masks[i];
      cm.point = first_point(full & ~truth);
      return {false, std::move(cm)};
    }
  }
  return {true, std::nullopt};
}

bool is_transitive(const Frame& frame) {
  for (int x = 0; x < frame.n; ++x) {
    PointSet rest = frame.succ[x];
    while (rest) {
      int y = first_point(rest);
      rest &= rest - 1;
      if (frame.succ[y] & ~frame.succ[x]) return false;
    }
  }
  return true;
}

bool is_reflexive(const Frame& frame) {
  for (int x = 0; x < frame.n; ++x)
    if (!frame.has_edge(x, x)) return false;
  return true;
}

Frame transitive_closure(const Frame& frame) {
  Frame out = frame;
  for (int k = 0; k < out.n; ++k)
    for (int x = 0; x < out.n; ++x)
      if (out.has_edge(x, k)) out.succ[x] |= out.succ[k];
  return out;
}

Frame reflexive_closure(const Frame& frame) {
  Frame out = frame;
  for (int x = 0; x < out.n; ++x) out.succ[x] |= point_bit(x);
  return out;
}

ClusterDecomposition clusters(const Frame& frame) {
  if (!is_transitive(frame))
    throw std::invalid_argument("cluster decomposition requires a transitive frame");
  ClusterDecomposition d;
  d.cluster_of.assign(frame.n, -1);
  for (int x = 0; x < frame.n; ++x) {
    if (d.cluster_of[x] != -1) continue;
    // Mutual reachability in a transitive frame: y with xRyRx, plus x.
    PointSet c = point_bit(x);
    for (int y = 0; y < frame.n; ++y)
      if (y != x && frame.has_edge(x, y) && frame.has_edge(y, x))
        c |= point_bit(y);
    int idx = d.count();
    PointSet rest = c;
    while (rest) {
      int y = first_point(rest);
      rest &= rest - 1;
      d.cluster_of[y] = idx;
    }
    d.clusters.push_back(c);
    if (set_size(c) > 1)
      d.kinds.push_back(ClusterKind::nondegenerate_proper);
    else if (frame.has_edge(x, x))
      d.kinds.push_back(ClusterKind::simple);
    else
      d.kinds.push_back(ClusterKind::degenerate);
  }
  int m = d.count();
  d.strict_order.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    int ri = first_point(d.clusters[i]);
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      int rj = first_point(d.clusters[j]);
      if (frame.has_edge(ri, rj)) d.strict_order[i] |= std::uint64_t{1} << j;
    }
  }
  d.is_final.resize(m);
  for (int i = 0; i < m; ++i) d.is_final[i] = d.strict_order[i] == 0;
  return d;
}

int circumference(const Frame& frame) {
  ClusterDecomposition d = clusters(frame);
  int best = 0;
  for (int i = 0; i < d.count(); ++i)
    if (d.kinds[i] != ClusterKind::degenerate)
      best = std::max(best, set_size(d.clusters[i]));
  return best;
}

std::string BoundedMorphismCheck::describe() const {
  if (ok) return "ok";
  if (failed == Condition::forth)
    return "forth fails: " + std::to_string(x) + "R" + std::to_string(y) +
           " but images are unrelated";
  return "back fails: f(" + std::to_string(x) + ")R'" + std::to_string(y) +
         " but no successor of " + std::to_string(x) + " maps to " +
         std::to_string(y);
}

BoundedMorphismCheck bounded_morphism_check(std::span<const int> f,
                                            const Frame& source,
                                            const Frame& target) {
  if (static_cast<int>(f.size()) != source.n)
    throw std::invalid_argument("map size does not match source frame");
  for (int x = 0; x < source.n; ++x)
    if (f[x] < 0 || f[x] >= target.n)
      throw std::invalid_argument("map value out of target range");

  BoundedMorphismCheck res;
  for (int x = 0; x < source.n; ++x) {
    PointSet rest = source.succ[x];
    while (rest) {
      int y = first_point(rest);
      rest &= rest - 1;
      if (!target.has_edge(f[x], f[y])) {
        res.ok = false;
        res.failed = BoundedMorphismCheck::Condition::forth;
        res.x = x;
        res.y = y;
        return res;
      }
    }
  }
  for (int x = 0; x < source.n; ++x) {
    PointSet image_of_succ = 0;
    PointSet rest = source.succ[x];
    while (rest) {
      int y = first_point(rest);
      rest &= rest - 1;
      image_of_succ |= point_bit(f[y]);
    }
    PointSet missing = target.succ[f[x]] & ~image_of_succ;
    if (missing) {
      res.ok = false;
      res.failed = BoundedMorphismCheck::Condition::back;
      res.x = x;
      res.y = first_point(missing);
      return res;
    }
  }
  return res;
}

namespace {

// Row-major adjacency bits, entry (0,0) most significant, so that
// integer order is lexicographic order on the matrix.
std::uint64_t flatten(const Frame& frame) {
  int n = frame.n;
  std::uint64_t flat = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (frame.has_edge(x, y))
        flat |= std::uint64_t{1} << (n * n - 1 - (x * n + y));
  return flat;
}

struct Enumerator {
  int n;
  const FrameConstraints& cons;
  const std::function<bool(const Frame&)>& visit;
  Frame frame;
  bool cluster_constraints;

  bool row_prefix_transitive(int k) const {
    // All pairs x,y <= k are decided; succ rows of both are complete
    // up to row k, so check x R y implies succ[y] subset of succ[x]
    // restricted to the filled rows.
    for (int x = 0; x <= k; ++x) {
      PointSet rest = frame.succ[x] & full_set(k + 1);
      while (rest) {
        int y = first_point(rest);
        rest &= rest - 1;
        if (frame.succ[y] & ~frame.succ[x]) return false;
      }
    }
    return true;
  }

  bool accept_leaf() const {
    if (cluster_constraints || cons.circumference_at_most) {
      ClusterDecomposition d = clusters(frame);
      if (cons.circumference_at_most) {
        int circ = 0;
        for (int i = 0; i < d.count(); ++i)
          if (d.kinds[i] != ClusterKind::degenerate)
            circ = std::max(circ, set_size(d.clusters[i]));
        if (circ > *cons.circumference_at_most) return false;
      }
      for (int i = 0; i < d.count(); ++i) {
        if (!d.is_final[i]) continue;
        switch (cons.final_clusters) {
          case FinalClusterConstraint::any:
            break;
          case FinalClusterConstraint::all_degenerate:
            if (d.kinds[i] != ClusterKind::degenerate) return false;
            break;
          case FinalClusterConstraint::all_nondegenerate:
            if (d.kinds[i] == ClusterKind::degenerate) return false;
            break;
          case FinalClusterConstraint::all_simple:
            if (d.kinds[i] != ClusterKind::simple) return false;
            break;
        }
      }
    }
    if (cons.iso_dedup && canonical_form(frame) != flatten(frame)) return false;
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool rec(int row) {
    if (row == n) return !accept_leaf() || visit(frame);
    std::uint64_t row_count = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < row_count; ++bits) {
      if (cons.reflexive && !((bits >> row) & 1)) continue;
      frame.succ[row] = bits;
      if (cons.transitive && !row_prefix_transitive(row)) continue;
      if (!rec(row + 1)) return false;
    }
    return true;
  }
};

}  // namespace

bool enumerate_frames_of_size(int n, const FrameConstraints& constraints,
                              const std::function<bool(const Frame&)>& visit) {
  if (n < 1 || n > 6)
    throw CapExceeded("frame enumeration supports sizes 1..6, got " +
                      std::to_string(n));
  FrameConstraints cons = constraints;
  bool cluster_constraints =
      cons.circumference_at_most.has_value() ||
      cons.final_clusters != FinalClusterConstraint::any;
  // Cluster-shaped constraints only make sense on transitive frames.
  if (cluster_constraints) cons.transitive = true;
  if (!cons.transitive && n > 5)
    throw CapExceeded("unconstrained enumeration is capped at 5 points");
  Enumerator e{n, cons, visit, Frame::empty(n), cluster_constraints};
  return e.rec(0);
}

bool enumerate_frames(int max_n, const FrameConstraints& constraints,
                      const std::function<bool(const Frame&)>& visit) {
  if (max_n < 1 || max_n > 6)
    throw CapExceeded("frame enumeration supports sizes 1..6, got " +
                      std::to_string(max_n));
  bool plain = !constraints.transitive &&
               !constraints.circumference_at_most &&
               constraints.final_clusters == FinalClusterConstraint::any;
  if (plain && max_n > 5)
    throw CapExceeded("unconstrained enumeration is capped at 5 points");
  for (int n = 1; n <= max_n; ++n)
    if (!enumerate_frames_of_size(n, constraints, visit)) return false;
  return true;
}

std::uint64_t canonical_form(const Frame& frame) {
  int n = frame.n;
  if (n > 8) throw CapExceeded("canonical form supports up to 8 points");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  Frame relabeled = Frame::empty(n);
  do {
    for (int x = 0; x < n; ++x) {
      PointSet row = 0;
      PointSet rest = frame.succ[x];
      while (rest) {
        int y = first_point(rest);
        rest &= rest - 1;
        row |= point_bit(perm[y]);
      }
      relabeled.succ[perm[x]] = row;
    }
    best = std::min(best, flatten(relabeled));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace finmodal
