#pragma once

#include <map>
#include <vector>

#include "finmodal/dsem.hpp"
#include "finmodal/kripke.hpp"
#include "finmodal/topo.hpp"

namespace finmodal {

/// Replacement data for one cluster: a space plus one cell per cluster
/// member (local point sets). For a non-degenerate cluster every cell
/// must be dense and crowded in the space; a degenerate cluster gets a
/// one-point space.
struct ClusterSpaceAssignment {
  TopSpace space;
  std::map<int, PointSet> cells;  // frame point -> cell in the space
};

/// Indexed like clusters(frame).clusters.
struct ClusterAssignment {
  std::vector<ClusterSpaceAssignment> clusters;
};

struct GluedPoint {
  int cluster = -1;  // cluster index in clusters(frame)
  int member = -1;   // frame point whose cell contains this point
  int local = -1;    // point index inside the cluster space
};

struct GluedSpace {
  TopSpace space;
  std::vector<int> to_frame;  // the canonical map f
  std::vector<GluedPoint> provenance;

  DMorphism morphism(const Frame& frame) const {
    return DMorphism{space, frame, to_frame};
  }
};

/// One-point spaces on degenerate clusters; a non-degenerate cluster of
/// size k gets the indiscrete space on k*cell_size points split into k
/// cells of cell_size points each (dense and crowded there).
ClusterAssignment default_assignment(const Frame& frame, int cell_size);

/// Builds the glued space: a set is open iff its trace on every cluster
/// space is open there and, when the trace is nonempty, the set
/// contains every strict-successor cluster space in full. Opens are
/// generated from the basis B union (strict-successor spaces), B
/// ranging over cluster-local opens. Throws std::invalid_argument on a
/// non-transitive frame or an assignment violating its invariants.
GluedSpace glue(const Frame& frame, const ClusterAssignment& assignment);

}  // namespace finmodal
