#include "finmodal/topo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace finmodal {

namespace {

constexpr int kSpaceCap = 16;

void require_space_size(int n) {
  if (n < 0 || n > kSpaceCap)
    throw CapExceeded("space size out of range 0.." +
                      std::to_string(kSpaceCap));
}

std::vector<PointSet> compute_min_nbhds(int n,
                                        const std::vector<PointSet>& opens) {
  std::vector<PointSet> mins(n, full_set(n));
  for (PointSet o : opens) {
    PointSet rest = o;
    while (rest) {
      int x = first_point(rest);
      rest &= rest - 1;
      mins[x] &= o;
    }
  }
  return mins;
}

}  // namespace

TopSpace unchecked_space(int n, std::vector<PointSet> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  TopSpace s;
  s.n_ = n;
  s.min_nbhd_ = compute_min_nbhds(n, opens);
  s.opens_ = std::move(opens);
  return s;
}

TopSpace make_space(int n, const std::vector<PointSet>& family, bool complete) {
  require_space_size(n);
  PointSet full = full_set(n);
  for (PointSet s : family)
    if (s & ~full)
      throw std::invalid_argument("generating set contains out-of-range points");

  std::set<PointSet> opens(family.begin(), family.end());
  if (complete) {
    opens.insert(0);
    opens.insert(full);
    // Close under pairwise union and intersection to a fixpoint.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<PointSet> cur(opens.begin(), opens.end());
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          if (opens.insert(cur[i] | cur[j]).second) grew = true;
          if (opens.insert(cur[i] & cur[j]).second) grew = true;
        }
    }
  } else {
    if (!opens.count(0) || !opens.count(full))
      throw std::invalid_argument(
          "family is not a topology: empty or full set missing");
    std::vector<PointSet> cur(opens.begin(), opens.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (!opens.count(cur[i] | cur[j]))
          throw std::invalid_argument(
              "family is not a topology: union missing");
        if (!opens.count(cur[i] & cur[j]))
          throw std::invalid_argument(
              "family is not a topology: intersection missing");
      }
  }
  return unchecked_space(n, std::vector<PointSet>(opens.begin(), opens.end()));
}

TopSpace make_space(int n, const std::vector<std::vector<int>>& family,
                    bool complete) {
  std::vector<PointSet> masks;
  masks.reserve(family.size());
  for (const auto& s : family) {
    PointSet m = 0;
    for (int x : s) {
      if (x < 0 || x >= n)
        throw std::invalid_argument("point " + std::to_string(x) +
                                    " out of range");
      m |= point_bit(x);
    }
    masks.push_back(m);
  }
  return make_space(n, masks, complete);
}

bool TopSpace::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

PointSet TopSpace::closure(PointSet s) const {
  PointSet out = 0;
  for (int x = 0; x < n_; ++x)
    if (min_nbhd_[x] & s) out |= point_bit(x);
  return out;
}

PointSet TopSpace::interior(PointSet s) const {
  PointSet out = 0;
  for (int x = 0; x < n_; ++x)
    if ((min_nbhd_[x] & ~s) == 0) out |= point_bit(x);
  return out;
}

PointSet TopSpace::derived(PointSet s) const {
  PointSet out = 0;
  for (int x = 0; x < n_; ++x)
    if (punctured_nbhd(x) & s) out |= point_bit(x);
  return out;
}

TopSpace subspace(const TopSpace& space, PointSet s,
                  std::vector<int>* point_map) {
  if (s == 0) throw std::invalid_argument("subspace on the empty set");
  int m = set_size(s);
  std::vector<int> old_of_new;
  old_of_new.reserve(m);
  std::vector<int> new_of_old(space.points(), -1);
  PointSet rest = s;
  while (rest) {
    int x = first_point(rest);
    rest &= rest - 1;
    new_of_old[x] = static_cast<int>(old_of_new.size());
    old_of_new.push_back(x);
  }
  auto compress = [&](PointSet o) {
    PointSet out = 0;
    PointSet r = o & s;
    while (r) {
      int x = first_point(r);
      r &= r - 1;
      out |= point_bit(new_of_old[x]);
    }
    return out;
  };
  std::vector<PointSet> opens;
  opens.reserve(space.opens().size());
  for (PointSet o : space.opens()) opens.push_back(compress(o));
  if (point_map) *point_map = old_of_new;
  return unchecked_space(m, std::move(opens));
}

SpacePredicates classify(const TopSpace& space) {
  int n = space.points();
  PointSet full = space.universe();
  SpacePredicates p;

  for (int x = 0; x < n; ++x)
    if (space.min_nbhd(x) == point_bit(x)) p.isolated_points |= point_bit(x);
  p.is_crowded = space.derived(full) == full;

  bool td_via_idempotence = true;
  bool td_via_closure_point = true;
  p.is_T1 = true;
  for (int x = 0; x < n; ++x) {
    PointSet de_x = space.derived(point_bit(x));
    if (de_x != 0) p.is_T1 = false;
    if (space.derived(de_x) & ~de_x) td_via_idempotence = false;
    if (space.closure(de_x) & point_bit(x)) td_via_closure_point = false;
  }
  if (td_via_idempotence != td_via_closure_point)
    throw std::logic_error("T_D characterizations disagree");
  p.is_TD = td_via_idempotence;

  // Scattered, straight from the definition: every nonempty subset has
  // a point isolated in it.
  p.is_scattered = true;
  for (PointSet s = 1; s <= full; ++s) {
    bool has_isolated = false;
    PointSet rest = s;
    while (rest) {
      int x = first_point(rest);
      rest &= rest - 1;
      if ((space.min_nbhd(x) & s) == point_bit(x)) {
        has_isolated = true;
        break;
      }
    }
    if (!has_isolated) {
      p.is_scattered = false;
      break;
    }
  }

  p.is_densely_discrete = space.closure(p.isolated_points) == full;

  p.is_door = true;
  for (PointSet s = 0; s <= full; ++s)
    if (!space.is_open(s) && !space.is_closed(s)) {
      p.is_door = false;
      break;
    }
  return p;
}

namespace {

// Backtracking search for k disjoint dense cells inside `within`.
// label 0 = unused; labels 1..k are cells. Cells are symmetric, so a
// point may open label L only if labels 1..L-1 are already in use.
struct ResolvableSearch {
  const TopSpace& space;
  PointSet within;
  int k;
  std::vector<int> pts;                  // points of within, ascending
  std::vector<std::vector<int>> due;     // pts index -> nbhds finishing there
  std::vector<PointSet> nbhd;            // restricted min nbhds to check
  std::vector<PointSet> cells;

  explicit ResolvableSearch(const TopSpace& sp, PointSet w, int kk)
      : space(sp), within(w), k(kk) {
    PointSet rest = w;
    while (rest) {
      int x = first_point(rest);
      rest &= rest - 1;
      pts.push_back(x);
    }
    std::vector<int> index_of(space.points(), -1);
    for (std::size_t i = 0; i < pts.size(); ++i) index_of[pts[i]] = i;
    due.resize(pts.size());
    for (int x : pts) {
      PointSet u = space.min_nbhd(x) & w;
      int last = 63 - std::countl_zero(u);
      due[index_of[last]].push_back(static_cast<int>(nbhd.size()));
      nbhd.push_back(u);
    }
    cells.assign(k, 0);
  }

  bool covered(PointSet u) const {
    for (int c = 0; c < k; ++c)
      if (!(cells[c] & u)) return false;
    return true;
  }

  // Cells are interchangeable, so point i may only open the next fresh
  // label; a minimal neighbourhood is checked once its last point is
  // labeled, which is exact and safe to prune on.
  bool rec(std::size_t i, int max_label) {
    if (i == pts.size()) return true;  // all nbhd checks already passed
    int cap = std::min(k, max_label + 1);
    for (int lab = 0; lab <= cap; ++lab) {
      if (lab > 0) cells[lab - 1] |= point_bit(pts[i]);
      bool ok = true;
      for (int nb : due[i])
        if (!covered(nbhd[nb])) {
          ok = false;
          break;
        }
      if (ok && rec(i + 1, std::max(max_label, lab))) return true;
      if (lab > 0) cells[lab - 1] &= ~point_bit(pts[i]);
    }
    return false;
  }
};

}  // namespace

KResolvable k_resolvable_within(const TopSpace& space, PointSet within,
                                int k) {
  if (k < 2) throw std::invalid_argument("k-resolvability requires k >= 2");
  if (within == 0)
    throw std::invalid_argument("resolvability of the empty subspace");
  if (set_size(within) < k) return {false, {}};
  ResolvableSearch search(space, within, k);
  if (search.rec(0, 0)) return {true, search.cells};
  return {false, {}};
}

KResolvable k_resolvable(const TopSpace& space, int k) {
  if (space.points() == 0)
    throw std::invalid_argument("resolvability of the empty space");
  return k_resolvable_within(space, space.universe(), k);
}

HIResult hereditarily_k_irresolvable(const TopSpace& space, int k) {
  PointSet full = space.universe();
  for (PointSet s = 1; s <= full && s != 0; ++s) {
    KResolvable r = k_resolvable_within(space, s, k);
    if (r.resolvable) return {false, s, r.cells};
  }
  return {true, 0, {}};
}

HIResult openly_irresolvable(const TopSpace& space) {
  for (PointSet o : space.opens()) {
    if (o == 0) continue;
    KResolvable r = k_resolvable_within(space, o, 2);
    if (r.resolvable) return {false, o, r.cells};
  }
  return {true, 0, {}};
}

TopSpace alexandrov_from_frame(const Frame& frame) {
  require_space_size(frame.n);
  PointSet full = full_set(frame.n);
  std::vector<PointSet> opens;
  for (PointSet s = 0;; ++s) {
    bool up_set = true;
    PointSet rest = s;
    while (rest) {
      int x = first_point(rest);
      rest &= rest - 1;
      if (frame.succ[x] & ~s) {
        up_set = false;
        break;
      }
    }
    if (up_set) opens.push_back(s);
    if (s == full) break;
  }
  return unchecked_space(frame.n, std::move(opens));
}

Frame specialization_frame(const TopSpace& space) {
  Frame f = Frame::empty(space.points());
  for (int x = 0; x < f.n; ++x) f.succ[x] = space.min_nbhd(x);
  return f;
}

TopSpace relabel_space(const TopSpace& space, std::span<const int> perm) {
  int n = space.points();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  auto apply = [&](PointSet s) {
    PointSet out = 0;
    PointSet rest = s;
    while (rest) {
      int x = first_point(rest);
      rest &= rest - 1;
      out |= point_bit(perm[x]);
    }
    return out;
  };
  std::vector<PointSet> opens;
  opens.reserve(space.opens().size());
  for (PointSet o : space.opens()) opens.push_back(apply(o));
  return unchecked_space(n, std::move(opens));
}

bool homeomorphic(const TopSpace& a, const TopSpace& b) {
  if (a.points() != b.points()) return false;
  if (a.opens().size() != b.opens().size()) return false;
  int n = a.points();
  if (n > 8) throw CapExceeded("homeomorphism test supports up to 8 points");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel_space(a, perm).opens() == b.opens()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool int_cl_eq_int_de(const TopSpace& space) {
  PointSet full = space.universe();
  for (PointSet s = 0;; ++s) {
    if (space.interior(space.closure(s)) != space.interior(space.derived(s)))
      return false;
    if (s == full) break;
  }
  return true;
}

bool enumerate_topologies_of_size(
    int n, const std::function<bool(const TopSpace&)>& visit) {
  if (n < 1 || n > 5)
    throw CapExceeded("topology enumeration supports sizes 1..5, got " +
                      std::to_string(n));
  FrameConstraints cons;
  cons.transitive = true;
  cons.reflexive = true;
  return enumerate_frames_of_size(n, cons, [&](const Frame& f) {
    return visit(alexandrov_from_frame(f));
  });
}

bool enumerate_topologies(int max_n,
                          const std::function<bool(const TopSpace&)>& visit) {
  for (int n = 1; n <= max_n; ++n)
    if (!enumerate_topologies_of_size(n, visit)) return false;
  return true;
}

}  // namespace finmodal
