#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finmodal/dsem.hpp"
#include "finmodal/sampling.hpp"

using namespace finmodal;

namespace {

Formula v(const char* name) { return Formula::var(name); }

TopSpace indiscrete(int n) { return make_space(n, std::vector<PointSet>{}, true); }

TopSpace discrete(int n) {
  std::vector<PointSet> singletons;
  for (int i = 0; i < n; ++i) singletons.push_back(point_bit(i));
  return make_space(n, singletons, true);
}

TopSpace sierpinski() {
  return make_space(2, std::vector<PointSet>{point_bit(1)}, true);
}

}  // namespace

TEST_CASE("d-semantics truth sets") {
  TopSpace ind = indiscrete(2);
  Valuation val = {{"p", point_bit(0)}};
  CHECK(eval_d(ind, val, dia(v("p"))) == point_bit(1));
  CHECK(eval_d(ind, val, conj(dia(v("p")), dia(neg(v("p"))))) == 0);

  // <>T defines the derived set of the whole space.
  enumerate_topologies(3, [&](const TopSpace& x) {
    CHECK(eval_d(x, {}, dia(Formula::top())) == x.derived(x.universe()));
    bool all = eval_d(x, {}, dia(Formula::top())) == x.universe();
    CHECK(all == classify(x).is_crowded);
    return true;
  });

  CHECK_THROWS_AS(eval_d(ind, {}, v("q")), std::invalid_argument);
}

TEST_CASE("starred operators evaluate to closure and interior") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    TopSpace x = random_space(rng, 1 + static_cast<int>(rng() % 5), 3);
    Valuation val = {{"p", random_subset(rng, x.points())}};
    CHECK(eval_d(x, val, dia_star(v("p"))) == x.closure(val["p"]));
    CHECK(eval_d(x, val, box_star(v("p"))) == x.interior(val["p"]));
  }
}

TEST_CASE("C-semantics truth sets") {
  TopSpace ind = indiscrete(2);
  Valuation val = {{"p", point_bit(0)}};
  CHECK(eval_c(ind, val, dia(v("p"))) == 0b11);

  TopSpace disc = discrete(3);
  Valuation val3 = {{"p", 0b101}};
  CHECK(eval_c(disc, val3, dia(v("p"))) == 0b101);

  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    TopSpace x = random_space(rng, 1 + static_cast<int>(rng() % 5), 3);
    Valuation rv = {{"p", random_subset(rng, x.points())}};
    PointSet plain = eval_c(x, rv, v("p"));
    CHECK((plain & ~eval_c(x, rv, dia(v("p")))) == 0);
    // C-semantics cannot tell <> from <>*.
    CHECK(eval_c(x, rv, dia(v("p"))) == eval_c(x, rv, dia_star(v("p"))));
  }
}

TEST_CASE("d-validity with countermodels") {
  Formula four = named_axiom("4");
  CHECK(d_valid(sierpinski(), four).valid);

  ValidityResult r = d_valid(indiscrete(2), four);
  REQUIRE_FALSE(r.valid);
  CHECK(r.countermodel->valuation.at("p") == point_bit(0));

  CHECK(d_valid(indiscrete(2), named_axiom("M")).valid);
  CHECK_FALSE(d_valid(discrete(1), named_axiom("M")).valid);

  CHECK_THROWS_AS(d_valid(indiscrete(13), conj(v("p"), v("q"))), CapExceeded);
}

TEST_CASE("d-morphism conditions") {
  // Identity onto the frame through its own Alexandrov space. A
  // reflexive point makes its own singleton fiber non-crowded there
  // (the punctured minimal neighbourhood misses it), so the identity
  // is a d-morphism exactly on the irreflexive frames.
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(4, transitive, [&](const Frame& f) {
    std::vector<int> id(f.n);
    for (int i = 0; i < f.n; ++i) id[i] = i;
    DMorphism dm{alexandrov_from_frame(f), f, id};
    DMorphismCheck check = d_morphism_check(dm);
    bool irreflexive = circumference(f) == 0;
    REQUIRE(check.ok == irreflexive);
    if (!check.ok)
      REQUIRE(check.failed == DMorphismCheck::Condition::reflexive_fiber);
    return true;
  });

  Frame refl = Frame::from_edges(1, {{0, 0}});
  DMorphism collapse_discrete{discrete(2), refl, {0, 0}};
  DMorphismCheck r = d_morphism_check(collapse_discrete);
  REQUIRE_FALSE(r.ok);
  CHECK(r.failed == DMorphismCheck::Condition::reflexive_fiber);

  DMorphism collapse_indiscrete{indiscrete(2), refl, {0, 0}};
  CHECK(d_morphism_check(collapse_indiscrete).ok);

  Frame nontrans = Frame::from_edges(3, {{0, 1}, {1, 2}});
  DMorphism bad{discrete(3), nontrans, {0, 1, 2}};
  CHECK_THROWS_AS(d_morphism_check(bad), std::invalid_argument);
}

TEST_CASE("validity transfer through a surjective d-morphism") {
  Frame refl = Frame::from_edges(1, {{0, 0}});
  DMorphism dm{indiscrete(2), refl, {0, 0}};

  TransferCheck top_check = validity_transfer_check(dm, Formula::top());
  CHECK(top_check.consistent);
  CHECK(top_check.space_side.valid);
  CHECK(top_check.frame_side.valid);

  // Loeb fails on both sides here; the implication is vacuous.
  TransferCheck loeb_check = validity_transfer_check(dm, named_axiom("Loeb"));
  CHECK(loeb_check.consistent);
  CHECK_FALSE(loeb_check.space_side.valid);

  // Non-surjective maps are rejected for transfer.
  Frame two_refl = Frame::from_edges(2, {{0, 0}, {1, 1}});
  DMorphism partial{indiscrete(2), two_refl, {0, 0}};
  CHECK_THROWS_AS(validity_transfer_check(partial, Formula::top()),
                  std::invalid_argument);
}

TEST_CASE("relational semantics agrees with d-semantics on irreflexive frames") {
  // On an irreflexive transitive frame the relational diamond is the
  // derived-set operator of the Alexandrov space.
  FrameConstraints cons;
  cons.transitive = true;
  cons.circumference_at_most = 0;
  Rng rng(9);
  std::vector<std::string> pool = {"p", "q"};
  enumerate_frames(3, cons, [&](const Frame& f) {
    TopSpace x = alexandrov_from_frame(f);
    for (int t = 0; t < 10; ++t) {
      Formula probe = random_formula(rng, 3, pool);
      Valuation val = {{"p", random_subset(rng, f.n)},
                       {"q", random_subset(rng, f.n)}};
      REQUIRE(eval_frame(f, val, probe) == eval_d(x, val, probe));
    }
    return true;
  });

  // Identity transfer is consistent with equal sides on random input.
  enumerate_frames(3, cons, [&](const Frame& f) {
    std::vector<int> id(f.n);
    for (int i = 0; i < f.n; ++i) id[i] = i;
    DMorphism dm{alexandrov_from_frame(f), f, id};
    Formula probe = random_formula(rng, 3, pool);
    TransferCheck tc = validity_transfer_check(dm, probe);
    REQUIRE(tc.consistent);
    REQUIRE(tc.space_side.valid == tc.frame_side.valid);
    return true;
  });
}
