#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "finmodal/sampling.hpp"
#include "finmodal/topo.hpp"

using namespace finmodal;

namespace {

TopSpace indiscrete(int n) { return make_space(n, std::vector<PointSet>{}, true); }

TopSpace discrete(int n) {
  std::vector<PointSet> singletons;
  for (int i = 0; i < n; ++i) singletons.push_back(point_bit(i));
  return make_space(n, singletons, true);
}

// {emptyset, {1}, X} on two points.
TopSpace sierpinski() {
  return make_space(2, std::vector<PointSet>{point_bit(1)}, true);
}

// Derived set straight from the definition: every open neighbourhood,
// punctured, meets s.
PointSet derived_oracle(const TopSpace& x, PointSet s) {
  PointSet out = 0;
  for (int p = 0; p < x.points(); ++p) {
    bool limit = true;
    for (PointSet o : x.opens()) {
      if (!(o & point_bit(p))) continue;
      if (((o & ~point_bit(p)) & s) == 0) {
        limit = false;
        break;
      }
    }
    if (limit) out |= point_bit(p);
  }
  return out;
}

// Density from the definition: meets every nonempty open set.
bool dense_oracle(const TopSpace& x, PointSet s) {
  for (PointSet o : x.opens())
    if (o != 0 && (o & s) == 0) return false;
  return true;
}

// All labeled topologies on n points by filtering every family of
// proper nonempty subsets for closure under union and intersection.
std::set<std::vector<PointSet>> topologies_by_filter(int n) {
  std::set<std::vector<PointSet>> out;
  std::vector<PointSet> proper;
  for (PointSet s = 1; s < full_set(n); ++s) proper.push_back(s);
  std::uint64_t families = std::uint64_t{1} << proper.size();
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    std::vector<PointSet> fam = {0, full_set(n)};
    for (std::size_t i = 0; i < proper.size(); ++i)
      if (pick & (std::uint64_t{1} << i)) fam.push_back(proper[i]);
    std::set<PointSet> members(fam.begin(), fam.end());
    bool closed = true;
    for (PointSet a : fam) {
      for (PointSet b : fam)
        if (!members.count(a | b) || !members.count(a & b)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed)
      out.insert(std::vector<PointSet>(members.begin(), members.end()));
  }
  return out;
}

// Unpruned brute force: every labeling of points by {unused, 1..k}.
bool k_resolvable_oracle(const TopSpace& x, int k) {
  int n = x.points();
  std::vector<int> label(n, 0);
  for (;;) {
    std::vector<PointSet> cells(k, 0);
    for (int i = 0; i < n; ++i)
      if (label[i] > 0) cells[label[i] - 1] |= point_bit(i);
    bool good = true;
    for (PointSet c : cells)
      if (c == 0 || !dense_oracle(x, c)) {
        good = false;
        break;
      }
    if (good) return true;
    int i = 0;
    while (i < n && label[i] == k) label[i++] = 0;
    if (i == n) return false;
    ++label[i];
  }
}

}  // namespace

TEST_CASE("make_space builds the classic small spaces") {
  CHECK(indiscrete(2).opens() == std::vector<PointSet>{0, 0b11});
  CHECK(sierpinski().opens() == std::vector<PointSet>{0, 0b10, 0b11});
  CHECK(discrete(2).opens() == std::vector<PointSet>{0, 0b01, 0b10, 0b11});
  CHECK(make_space(2, std::vector<std::vector<int>>{{0}, {1}}, true).opens() ==
        discrete(2).opens());

  CHECK_THROWS_AS(make_space(2, std::vector<PointSet>{0b100}, true),
                  std::invalid_argument);
  // {emptyset, {1}} alone misses the full set.
  CHECK_THROWS_AS(make_space(2, std::vector<PointSet>{0, 0b10}, false),
                  std::invalid_argument);
  // Missing the union {0,1} of {0} and {1}... here missing {0,1}'s parts.
  CHECK_THROWS_AS(make_space(3, std::vector<PointSet>{0, 0b001, 0b010, 0b111},
                             false),
                  std::invalid_argument);
  CHECK_NOTHROW(make_space(2, std::vector<PointSet>{0, 0b10, 0b11}, false));
}

TEST_CASE("closure and interior") {
  TopSpace ind = indiscrete(2);
  CHECK(ind.closure(point_bit(0)) == 0b11);
  CHECK(ind.closure(0) == 0);
  CHECK(ind.interior(0) == 0);

  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    TopSpace x = random_space(rng, 1 + static_cast<int>(rng() % 5), 3);
    PointSet s = random_subset(rng, x.points());
    CHECK(x.interior(s) == (x.universe() & ~x.closure(x.universe() & ~s)));
    CHECK(x.closure(s) == (s | x.derived(s)));
    CHECK(x.is_open(x.interior(s)));
    CHECK(x.is_closed(x.closure(s)));
  }
}

TEST_CASE("derived sets match the punctured-neighbourhood definition") {
  TopSpace ind = indiscrete(2);
  CHECK(ind.derived(point_bit(0)) == point_bit(1));
  CHECK(ind.derived(point_bit(1)) == point_bit(0));

  TopSpace sp = sierpinski();
  CHECK(sp.derived(point_bit(1)) == point_bit(0));
  CHECK(sp.derived(point_bit(0)) == 0);

  enumerate_topologies(3, [&](const TopSpace& x) {
    for (PointSet s = 0;; ++s) {
      REQUIRE(x.derived(s) == derived_oracle(x, s));
      if (s == x.universe()) break;
    }
    return true;
  });
}

TEST_CASE("subspace topology with relabeling") {
  TopSpace sp = sierpinski();
  std::vector<int> pts;
  CHECK(subspace(sp, 0b11).opens() == sp.opens());

  TopSpace sub = subspace(sp, point_bit(0), &pts);
  CHECK(sub.points() == 1);
  CHECK(pts == std::vector<int>{0});

  CHECK_THROWS_AS(subspace(sp, 0), std::invalid_argument);

  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    TopSpace x = random_space(rng, 2 + static_cast<int>(rng() % 4), 3);
    PointSet s = random_subset(rng, x.points());
    if (s == 0) continue;
    std::vector<int> map;
    TopSpace sub2 = subspace(x, s, &map);
    PointSet y = random_subset(rng, x.points()) & s;
    PointSet y_local = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (y & point_bit(map[i])) y_local |= point_bit(static_cast<int>(i));
    PointSet want = s & x.closure(y);
    PointSet want_local = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (want & point_bit(map[i])) want_local |= point_bit(static_cast<int>(i));
    CHECK(sub2.closure(y_local) == want_local);
  }
}

TEST_CASE("classification flags") {
  SpacePredicates ind = classify(indiscrete(2));
  CHECK(ind.is_crowded);
  CHECK_FALSE(ind.is_TD);
  CHECK_FALSE(ind.is_T1);
  CHECK_FALSE(ind.is_scattered);
  CHECK_FALSE(ind.is_densely_discrete);
  // {0} is neither open nor closed here.
  CHECK_FALSE(ind.is_door);
  CHECK(ind.isolated_points == 0);
  CHECK(classify(sierpinski()).is_door);
  CHECK(classify(discrete(2)).is_door);

  for (int n = 1; n <= 4; ++n) {
    SpacePredicates d = classify(discrete(n));
    CHECK(d.is_TD);
    CHECK(d.is_T1);
    CHECK(d.is_scattered);
    CHECK(d.is_densely_discrete);
    CHECK_FALSE(d.is_crowded);
    CHECK(d.isolated_points == full_set(n));
  }

  SpacePredicates sp = classify(sierpinski());
  CHECK(sp.is_TD);
  CHECK_FALSE(sp.is_T1);
  CHECK(sp.is_scattered);
}

TEST_CASE("k-resolvability search with witnesses") {
  KResolvable r = k_resolvable(indiscrete(2), 2);
  REQUIRE(r.resolvable);
  REQUIRE(r.cells.size() == 2);
  CHECK((r.cells[0] | r.cells[1]) == 0b11);
  CHECK((r.cells[0] & r.cells[1]) == 0);

  CHECK(k_resolvable(indiscrete(3), 3).resolvable);
  CHECK_FALSE(k_resolvable(sierpinski(), 2).resolvable);
  CHECK_THROWS_AS(k_resolvable(indiscrete(2), 1), std::invalid_argument);

  // Witness cells are genuinely dense, and the search agrees with the
  // unpruned labeling oracle on every small space.
  enumerate_topologies(3, [&](const TopSpace& x) {
    for (int k = 2; k <= 4; ++k) {
      KResolvable got = k_resolvable(x, k);
      REQUIRE(got.resolvable == k_resolvable_oracle(x, k));
      if (got.resolvable)
        for (PointSet c : got.cells) REQUIRE(dense_oracle(x, c));
    }
    return true;
  });
}

TEST_CASE("hereditary and open irresolvability") {
  CHECK(hereditarily_k_irresolvable(indiscrete(2), 3).holds);
  CHECK_FALSE(hereditarily_k_irresolvable(indiscrete(2), 2).holds);
  for (int k = 2; k <= 4; ++k)
    CHECK(hereditarily_k_irresolvable(discrete(3), k).holds);
  CHECK_FALSE(openly_irresolvable(indiscrete(2)).holds);
  CHECK(openly_irresolvable(discrete(3)).holds);

  HIResult bad = hereditarily_k_irresolvable(indiscrete(2), 2);
  CHECK(bad.witness_subspace == 0b11);
  CHECK(bad.witness_cells.size() == 2);
}

TEST_CASE("Alexandrov topology of a frame") {
  TopSpace chain = alexandrov_from_frame(Frame::from_edges(2, {{0, 1}}));
  CHECK(chain.opens() == sierpinski().opens());

  Frame cluster2 = Frame::from_edges(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(alexandrov_from_frame(cluster2).opens() == indiscrete(2).opens());

  FrameConstraints preorder;
  preorder.transitive = true;
  preorder.reflexive = true;
  enumerate_frames(3, preorder, [&](const Frame& f) {
    REQUIRE(specialization_frame(alexandrov_from_frame(f)) == f);
    return true;
  });
}

TEST_CASE("topology enumeration agrees with the family filter oracle") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<PointSet>> oracle = topologies_by_filter(n);
    std::set<std::vector<PointSet>> produced;
    enumerate_topologies_of_size(n, [&](const TopSpace& x) {
      produced.insert(x.opens());
      return true;
    });
    REQUIRE(produced == oracle);
  }
  long long count5 = 0;
  enumerate_topologies_of_size(5, [&](const TopSpace&) {
    ++count5;
    return true;
  });
  CHECK(count5 == 6942);
}

TEST_CASE("homeomorphism classes among two-point topologies") {
  std::vector<TopSpace> spaces;
  enumerate_topologies_of_size(2, [&](const TopSpace& x) {
    spaces.push_back(x);
    return true;
  });
  REQUIRE(spaces.size() == 4);
  int classes = 0;
  std::vector<bool> used(spaces.size(), false);
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (used[i]) continue;
    ++classes;
    for (std::size_t j = i; j < spaces.size(); ++j)
      if (homeomorphic(spaces[i], spaces[j])) used[j] = true;
  }
  CHECK(classes == 3);
}

TEST_CASE("relabeling is a homeomorphism") {
  TopSpace sp = sierpinski();
  std::vector<int> swap = {1, 0};
  TopSpace moved = relabel_space(sp, swap);
  CHECK(moved.opens() == std::vector<PointSet>{0, 0b01, 0b11});
  CHECK(homeomorphic(sp, moved));
}
