#pragma once

#include <functional>
#include <span>
#include <vector>

#include "finmodal/kripke.hpp"
#include "finmodal/sets.hpp"

namespace finmodal {

/// Finite topological space, stored as the full open-set family plus
/// the cached minimal open neighbourhood U_x of each point. Finite
/// spaces are Alexandrov, so every operator here is computed from the
/// U_x table.
class TopSpace {
 public:
  /// The empty space; reassign before use.
  TopSpace() : opens_{0} {}

  int points() const { return n_; }
  const std::vector<PointSet>& opens() const { return opens_; }
  PointSet min_nbhd(int x) const { return min_nbhd_[x]; }
  PointSet punctured_nbhd(int x) const { return min_nbhd_[x] & ~point_bit(x); }
  PointSet universe() const { return full_set(n_); }

  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(universe() & ~s); }

  /// Smallest closed superset: {x : U_x meets s}.
  PointSet closure(PointSet s) const;
  /// Largest open subset: {x : U_x included in s}.
  PointSet interior(PointSet s) const;
  /// Limit points: {x : U_x - {x} meets s}.
  PointSet derived(PointSet s) const;

  bool is_dense(PointSet s) const { return closure(s) == universe(); }
  /// s is crowded (dense in itself) as a subspace.
  bool is_crowded_in(PointSet s) const { return (s & ~derived(s)) == 0; }

  bool operator==(const TopSpace& other) const = default;

 private:
  friend TopSpace make_space(int, const std::vector<PointSet>&, bool);
  friend TopSpace unchecked_space(int, std::vector<PointSet>);

  int n_ = 0;
  std::vector<PointSet> opens_;     // sorted, includes empty and full set
  std::vector<PointSet> min_nbhd_;  // per point
};

/// Builds a space from a generating family. With complete=true the
/// family is closed under union/intersection and the empty/full sets
/// are added; with complete=false the family must already be a
/// topology (std::invalid_argument otherwise). Point cap: 16.
TopSpace make_space(int n, const std::vector<PointSet>& family, bool complete);
TopSpace make_space(int n, const std::vector<std::vector<int>>& family,
                    bool complete);

/// Subspace on s (nonempty) with points renumbered 0..|s|-1 in
/// increasing order; point_map, if given, receives the original point
/// of each new index so classifications can be pulled back.
TopSpace subspace(const TopSpace& space, PointSet s,
                  std::vector<int>* point_map = nullptr);

struct SpacePredicates {
  bool is_TD = false;
  bool is_T1 = false;
  bool is_scattered = false;
  bool is_crowded = false;
  bool is_densely_discrete = false;
  bool is_door = false;
  PointSet isolated_points = 0;
};

/// Each flag from its definition; the T_D flag is computed both via
/// de de{x} included in de{x} and via x not in cl de{x}, and the two
/// must agree (std::logic_error otherwise).
SpacePredicates classify(const TopSpace& space);

struct KResolvable {
  bool resolvable = false;
  std::vector<PointSet> cells;  // k pairwise disjoint dense sets, on success
};

/// Searches for k (>= 2) pairwise disjoint nonempty dense subsets by
/// backtracking over point labels, pruning on minimal neighbourhoods
/// that can no longer meet every cell.
KResolvable k_resolvable(const TopSpace& space, int k);

/// Same search restricted to the subspace on within (labels only
/// points of within; density means meeting every U_x cap within).
KResolvable k_resolvable_within(const TopSpace& space, PointSet within, int k);

struct HIResult {
  bool holds = false;
  PointSet witness_subspace = 0;       // resolvable subspace when !holds
  std::vector<PointSet> witness_cells; // its dense cells, original labels
};

/// No nonempty subspace is k-resolvable.
HIResult hereditarily_k_irresolvable(const TopSpace& space, int k);

/// No nonempty open subspace is 2-resolvable.
HIResult openly_irresolvable(const TopSpace& space);

/// Opens are the R-up-sets. U_w equals R(w) plus w itself; for a
/// transitive R this is the basic open R*(w).
TopSpace alexandrov_from_frame(const Frame& frame);

/// Specialization preorder x <= y iff x lies in cl{y}; its successor
/// sets are exactly the minimal neighbourhoods.
Frame specialization_frame(const TopSpace& space);

/// Copy of the space with point x renamed perm[x].
TopSpace relabel_space(const TopSpace& space, std::span<const int> perm);

/// Brute-force homeomorphism test (point cap 8).
bool homeomorphic(const TopSpace& a, const TopSpace& b);

/// For every subset s: interior(closure(s)) == interior(derived(s)).
/// Holds on crowded T_D spaces; exposed as a per-space predicate.
bool int_cl_eq_int_de(const TopSpace& space);

/// Visits every labeled topology of each size 1..max_n, via the
/// bijection with reflexive transitive frames. Size cap: 5.
bool enumerate_topologies(int max_n,
                          const std::function<bool(const TopSpace&)>& visit);
bool enumerate_topologies_of_size(
    int n, const std::function<bool(const TopSpace&)>& visit);

}  // namespace finmodal
