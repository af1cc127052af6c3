#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finmodal/formula.hpp"
#include "finmodal/sets.hpp"

namespace finmodal {

/// Finite directed frame on points 0..n-1; succ[x] is the set of
/// R-successors of x.
struct Frame {
  int n = 0;
  std::vector<PointSet> succ;

  static Frame empty(int n);
  static Frame from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool has_edge(int x, int y) const { return (succ[x] >> y) & 1; }
  bool operator==(const Frame& other) const = default;
};

/// Truth set of f in the model (frame, val).
PointSet eval_frame(const Frame& frame, const Valuation& val, const Formula& f);

struct Countermodel {
  Valuation valuation;
  int point = -1;
};

struct ValidityResult {
  bool valid = false;
  std::optional<Countermodel> countermodel;
};

/// Exhaustive validity over all valuations of vars(f). Requires
/// |vars(f)| * n <= bit_budget; on failure reports the first falsifying
/// valuation together with the lowest point where f is false.
ValidityResult valid_in_frame(const Frame& frame, const Formula& f,
                              int bit_budget = 24);

enum class ClusterKind { degenerate, simple, nondegenerate_proper };

struct ClusterDecomposition {
  std::vector<PointSet> clusters;       // disjoint, cover the frame
  std::vector<ClusterKind> kinds;
  std::vector<std::uint64_t> strict_order;  // successor cluster indices, as bitmask
  std::vector<bool> is_final;
  std::vector<int> cluster_of;          // point -> cluster index

  int count() const { return static_cast<int>(clusters.size()); }
};

/// Cluster decomposition of a transitive frame; throws
/// std::invalid_argument on non-transitive input.
ClusterDecomposition clusters(const Frame& frame);

/// Size of the largest non-degenerate cluster, 0 if all clusters are
/// degenerate. Defined for transitive frames only.
int circumference(const Frame& frame);

bool is_transitive(const Frame& frame);
bool is_reflexive(const Frame& frame);
Frame transitive_closure(const Frame& frame);
Frame reflexive_closure(const Frame& frame);

struct BoundedMorphismCheck {
  enum class Condition { none, forth, back };
  bool ok = true;
  Condition failed = Condition::none;
  int x = -1;  // source point at fault
  int y = -1;  // forth: source successor; back: unreachable target point
  std::string describe() const;
};

/// Checks the forth (xRy implies f(x)R'f(y)) and back (f(x)R'v implies
/// some successor of x maps to v) conditions for f: source -> target.
BoundedMorphismCheck bounded_morphism_check(std::span<const int> f,
                                            const Frame& source,
                                            const Frame& target);

enum class FinalClusterConstraint {
  any,
  all_degenerate,
  all_nondegenerate,
  all_simple
};

struct FrameConstraints {
  bool transitive = false;
  bool reflexive = false;
  std::optional<int> circumference_at_most;
  FinalClusterConstraint final_clusters = FinalClusterConstraint::any;
  bool iso_dedup = false;
};

/// Visits every frame of size 1..max_n meeting the constraints, in
/// lexicographic adjacency order, smaller sizes first. The visitor
/// returns false to stop; the function returns false if stopped early.
/// Cluster-based constraints restrict the stream to transitive frames.
/// With iso_dedup one representative per isomorphism class is emitted
/// (the lexicographically minimal adjacency matrix). max_n cap: 6.
bool enumerate_frames(int max_n, const FrameConstraints& constraints,
                      const std::function<bool(const Frame&)>& visit);

/// Same, for exactly one size.
bool enumerate_frames_of_size(int n, const FrameConstraints& constraints,
                              const std::function<bool(const Frame&)>& visit);

/// Flattened adjacency matrix minimized over all point permutations.
std::uint64_t canonical_form(const Frame& frame);

}  // namespace finmodal
