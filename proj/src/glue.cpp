#include "finmodal/glue.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace finmodal {

ClusterAssignment default_assignment(const Frame& frame, int cell_size) {
  if (cell_size < 2) throw std::invalid_argument("cell_size must be >= 2");
  ClusterDecomposition dec = clusters(frame);
  ClusterAssignment out;
  out.clusters.resize(dec.count());
  for (int i = 0; i < dec.count(); ++i) {
    ClusterSpaceAssignment& cs = out.clusters[i];
    if (dec.kinds[i] == ClusterKind::degenerate) {
      cs.space = make_space(1, std::vector<PointSet>{}, true);
      cs.cells[first_point(dec.clusters[i])] = point_bit(0);
    } else {
      int k = set_size(dec.clusters[i]);
      cs.space = make_space(k * cell_size, std::vector<PointSet>{}, true);
      PointSet rest = dec.clusters[i];
      int cell = 0;
      while (rest) {
        int w = first_point(rest);
        rest &= rest - 1;
        cs.cells[w] = full_set(cell_size) << (cell * cell_size);
        ++cell;
      }
    }
  }
  return out;
}

namespace {

void validate_assignment(const ClusterDecomposition& dec,
                         const ClusterAssignment& assignment) {
  std::ostringstream problems;
  auto complain = [&](int cluster, const std::string& what) {
    problems << "cluster " << cluster << ": " << what << "; ";
  };
  if (static_cast<int>(assignment.clusters.size()) != dec.count())
    throw std::invalid_argument(
        "assignment has " + std::to_string(assignment.clusters.size()) +
        " cluster entries, frame has " + std::to_string(dec.count()) +
        " clusters");
  for (int i = 0; i < dec.count(); ++i) {
    const ClusterSpaceAssignment& cs = assignment.clusters[i];
    const TopSpace& X = cs.space;
    PointSet members = dec.clusters[i];
    PointSet keyed = 0;
    for (const auto& [w, cell] : cs.cells) {
      if (w < 0 || !(members & point_bit(w))) {
        complain(i, "cell keyed by non-member point " + std::to_string(w));
        continue;
      }
      keyed |= point_bit(w);
    }
    if (keyed != members) {
      complain(i, "cells do not cover every cluster member");
      continue;
    }
    PointSet used = 0;
    bool disjoint = true;
    for (const auto& [w, cell] : cs.cells) {
      if (cell == 0) complain(i, "cell of point " + std::to_string(w) + " is empty");
      if (cell & ~X.universe())
        complain(i, "cell of point " + std::to_string(w) + " has out-of-range points");
      if (cell & used) disjoint = false;
      used |= cell;
    }
    if (!disjoint) complain(i, "cells are not pairwise disjoint");
    if (used != X.universe()) complain(i, "cells do not cover the space");
    if (dec.kinds[i] == ClusterKind::degenerate) {
      if (X.points() != 1)
        complain(i, "degenerate cluster requires a one-point space");
    } else {
      for (const auto& [w, cell] : cs.cells) {
        if (!X.is_dense(cell))
          complain(i, "cell of point " + std::to_string(w) + " is not dense");
        if (!X.is_crowded_in(cell))
          complain(i, "cell of point " + std::to_string(w) + " is not crowded");
      }
    }
  }
  std::string msg = problems.str();
  if (!msg.empty()) throw std::invalid_argument("invalid assignment: " + msg);
}

}  // namespace

GluedSpace glue(const Frame& frame, const ClusterAssignment& assignment) {
  ClusterDecomposition dec = clusters(frame);  // checks transitivity
  validate_assignment(dec, assignment);

  int m = dec.count();
  std::vector<int> offset(m, 0);
  int total = 0;
  for (int i = 0; i < m; ++i) {
    offset[i] = total;
    total += assignment.clusters[i].space.points();
  }
  if (total > kMaxPoints)
    throw CapExceeded("glued space would exceed 64 points");

  GluedSpace out;
  out.to_frame.assign(total, -1);
  out.provenance.assign(total, {});
  std::vector<PointSet> body(m, 0);  // glued-point mask of each cluster space
  for (int i = 0; i < m; ++i) {
    const ClusterSpaceAssignment& cs = assignment.clusters[i];
    body[i] = full_set(cs.space.points()) << offset[i];
    for (const auto& [w, cell] : cs.cells) {
      PointSet rest = cell;
      while (rest) {
        int local = first_point(rest);
        rest &= rest - 1;
        int p = offset[i] + local;
        out.to_frame[p] = w;
        out.provenance[p] = GluedPoint{i, w, local};
      }
    }
  }

  // Everything above each cluster in the strict order.
  std::vector<PointSet> upward(m, 0);
  for (int i = 0; i < m; ++i) {
    std::uint64_t rest = dec.strict_order[i];
    while (rest) {
      int j = first_point(rest);
      rest &= rest - 1;
      upward[i] |= body[j];
    }
  }

  std::set<PointSet> opens;
  for (int i = 0; i < m; ++i)
    for (PointSet b : assignment.clusters[i].space.opens())
      opens.insert((b << offset[i]) | (b ? upward[i] : 0));
  opens.insert(0);
  // Close under unions; the basis already makes intersections opens.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointSet> cur(opens.begin(), opens.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (opens.insert(cur[i] | cur[j]).second) grew = true;
  }
  out.space = make_space(total, std::vector<PointSet>(opens.begin(), opens.end()),
                         false);
  return out;
}

}  // namespace finmodal
