#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "finmodal/glue.hpp"

using namespace finmodal;

namespace {

TopSpace indiscrete(int n) { return make_space(n, std::vector<PointSet>{}, true); }

// Opens of the glued space straight from the definition: the trace on
// every cluster space is open there, and a nonempty trace pulls in all
// strict-successor cluster spaces in full.
std::set<PointSet> glued_opens_oracle(const Frame& frame,
                                      const ClusterAssignment& assignment) {
  ClusterDecomposition dec = clusters(frame);
  int m = dec.count();
  std::vector<int> offset(m);
  int total = 0;
  for (int i = 0; i < m; ++i) {
    offset[i] = total;
    total += assignment.clusters[i].space.points();
  }
  std::vector<PointSet> body(m);
  for (int i = 0; i < m; ++i)
    body[i] = full_set(assignment.clusters[i].space.points()) << offset[i];

  std::set<PointSet> out;
  for (PointSet s = 0;; ++s) {
    bool open = true;
    for (int i = 0; i < m && open; ++i) {
      PointSet trace = (s & body[i]) >> offset[i];
      if (!assignment.clusters[i].space.is_open(trace)) open = false;
      if (open && trace != 0) {
        std::uint64_t rest = dec.strict_order[i];
        while (rest) {
          int j = first_point(rest);
          rest &= rest - 1;
          if (body[j] & ~s) {
            open = false;
            break;
          }
        }
      }
    }
    if (open) out.insert(s);
    if (s == full_set(total)) break;
  }
  return out;
}

}  // namespace

TEST_CASE("default assignment shapes") {
  Frame simple = Frame::from_edges(1, {{0, 0}});
  ClusterAssignment a = default_assignment(simple, 2);
  REQUIRE(a.clusters.size() == 1);
  CHECK(a.clusters[0].space.points() == 2);
  CHECK(a.clusters[0].space.opens() == indiscrete(2).opens());
  CHECK(a.clusters[0].cells.at(0) == 0b11);

  Frame cluster3 = Frame::empty(3);
  for (int x = 0; x < 3; ++x) cluster3.succ[x] = 0b111;
  ClusterAssignment b = default_assignment(cluster3, 2);
  REQUIRE(b.clusters.size() == 1);
  CHECK(b.clusters[0].space.points() == 6);
  CHECK(b.clusters[0].cells.size() == 3);
  CHECK(b.clusters[0].cells.at(0) == 0b000011);
  CHECK(b.clusters[0].cells.at(1) == 0b001100);
  CHECK(b.clusters[0].cells.at(2) == 0b110000);

  Frame chain = Frame::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  ClusterAssignment c = default_assignment(chain, 2);
  for (const auto& cs : c.clusters) CHECK(cs.space.points() == 1);

  CHECK_THROWS_AS(default_assignment(simple, 1), std::invalid_argument);
}

TEST_CASE("glue on the spec's small shapes") {
  // One degenerate cluster: a single point, constant map.
  Frame lone = Frame::empty(1);
  GluedSpace g1 = glue(lone, default_assignment(lone, 2));
  CHECK(g1.space.points() == 1);
  CHECK(g1.to_frame == std::vector<int>{0});

  // One 2-element universal cluster with the indiscrete 4-point space:
  // the glued space is that space itself.
  Frame cluster2 = Frame::from_edges(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  GluedSpace g2 = glue(cluster2, default_assignment(cluster2, 2));
  CHECK(g2.space.points() == 4);
  CHECK(g2.space.opens() == indiscrete(4).opens());

  // Irreflexive 2-chain: Sierpinski with the top cluster open.
  Frame chain = Frame::from_edges(2, {{0, 1}});
  GluedSpace g3 = glue(chain, default_assignment(chain, 2));
  CHECK(g3.space.points() == 2);
  CHECK(g3.space.opens() == std::vector<PointSet>{0, 0b10, 0b11});
  CHECK(g3.to_frame == std::vector<int>{0, 1});

  CHECK_THROWS_AS(glue(Frame::from_edges(3, {{0, 1}, {1, 2}}),
                       ClusterAssignment{}),
                  std::invalid_argument);
}

TEST_CASE("glued opens equal the definitional opens") {
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(3, transitive, [&](const Frame& f) {
    ClusterAssignment a = default_assignment(f, 2);
    GluedSpace g = glue(f, a);
    std::set<PointSet> oracle = glued_opens_oracle(f, a);
    std::set<PointSet> got(g.space.opens().begin(), g.space.opens().end());
    REQUIRE(got == oracle);
    return true;
  });
}

TEST_CASE("fibers and subspaces of the glued space") {
  Frame f = Frame::from_edges(3, {{0, 1}, {0, 2}, {1, 2}, {2, 2}});
  ClusterAssignment a = default_assignment(f, 3);
  GluedSpace g = glue(f, a);
  ClusterDecomposition dec = clusters(f);

  // f^{-1}{w} is the relabeled cell of w.
  for (int w = 0; w < f.n; ++w) {
    PointSet fiber = 0;
    for (int p = 0; p < g.space.points(); ++p)
      if (g.to_frame[p] == w) fiber |= point_bit(p);
    int c = dec.cluster_of[w];
    int offset = 0;
    for (int i = 0; i < c; ++i) offset += a.clusters[i].space.points();
    CHECK(fiber == (a.clusters[c].cells.at(w) << offset));
  }

  // Each cluster space is a subspace of the glued space with its
  // original topology.
  int offset = 0;
  for (int c = 0; c < dec.count(); ++c) {
    int pts = a.clusters[c].space.points();
    PointSet body = full_set(pts) << offset;
    TopSpace sub = subspace(g.space, body);
    CHECK(sub.opens() == a.clusters[c].space.opens());
    offset += pts;
  }
}

TEST_CASE("assignment validation names the failing condition") {
  Frame cluster2 = Frame::from_edges(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  // Cells not covering the space.
  ClusterAssignment gap;
  gap.clusters.resize(1);
  gap.clusters[0].space = indiscrete(4);
  gap.clusters[0].cells[0] = 0b0011;
  gap.clusters[0].cells[1] = 0b0100;
  CHECK_THROWS_WITH_AS(glue(cluster2, gap),
                       doctest::Contains("do not cover the space"),
                       std::invalid_argument);

  // Overlapping cells.
  ClusterAssignment overlap;
  overlap.clusters.resize(1);
  overlap.clusters[0].space = indiscrete(4);
  overlap.clusters[0].cells[0] = 0b0111;
  overlap.clusters[0].cells[1] = 0b1100;
  CHECK_THROWS_WITH_AS(glue(cluster2, overlap),
                       doctest::Contains("not pairwise disjoint"),
                       std::invalid_argument);

  // Singleton cells in an indiscrete 2-point space are dense but not
  // crowded.
  ClusterAssignment thin;
  thin.clusters.resize(1);
  thin.clusters[0].space = indiscrete(2);
  thin.clusters[0].cells[0] = 0b01;
  thin.clusters[0].cells[1] = 0b10;
  CHECK_THROWS_WITH_AS(glue(cluster2, thin), doctest::Contains("not crowded"),
                       std::invalid_argument);

  // Non-dense cells: two disjoint open blobs.
  ClusterAssignment blobs;
  blobs.clusters.resize(1);
  blobs.clusters[0].space =
      make_space(4, std::vector<PointSet>{0b0011, 0b1100}, true);
  blobs.clusters[0].cells[0] = 0b0011;
  blobs.clusters[0].cells[1] = 0b1100;
  CHECK_THROWS_WITH_AS(glue(cluster2, blobs), doctest::Contains("not dense"),
                       std::invalid_argument);

  // Degenerate cluster must get a one-point space.
  Frame lone = Frame::empty(1);
  ClusterAssignment fat;
  fat.clusters.resize(1);
  fat.clusters[0].space = indiscrete(2);
  fat.clusters[0].cells[0] = 0b11;
  CHECK_THROWS_WITH_AS(glue(lone, fat),
                       doctest::Contains("one-point space"),
                       std::invalid_argument);
}

TEST_CASE("glued map is a d-morphism on small frames") {
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(3, transitive, [&](const Frame& f) {
    GluedSpace g = glue(f, default_assignment(f, 2));
    REQUIRE(d_morphism_check(g.morphism(f)).ok);
    REQUIRE(is_surjective(g.morphism(f)));
    return true;
  });
}

TEST_CASE("strict cluster edges leave upper singletons non-closed") {
  Frame chain = Frame::from_edges(2, {{0, 1}});
  GluedSpace g = glue(chain, default_assignment(chain, 2));
  // Point 1 sits in the top cluster; {1} is open but not closed.
  CHECK(g.space.closure(point_bit(1)) != point_bit(1));
}
