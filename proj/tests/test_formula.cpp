#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finmodal/formula.hpp"
#include "finmodal/sampling.hpp"

using namespace finmodal;

namespace {
Formula v(const char* name) { return Formula::var(name); }
}  // namespace

TEST_CASE("parse follows the declared precedence") {
  CHECK(parse("<>p -> []q") == impl(dia(v("p")), box(v("q"))));
  CHECK(parse("~p & q | r") == disj(conj(neg(v("p")), v("q")), v("r")));
  CHECK(parse("<*>p") == disj(v("p"), dia(v("p"))));
  CHECK(parse("[*]p") == conj(v("p"), box(v("p"))));
  CHECK(parse("p -> q -> r") == impl(v("p"), impl(v("q"), v("r"))));
  CHECK(parse("p & q & r") == conj(conj(v("p"), v("q")), v("r")));
  CHECK(parse("T") == Formula::top());
  CHECK(parse("F") == Formula::bot());
  CHECK(parse(" ( p ) ") == v("p"));
  CHECK(parse("~~p") == neg(neg(v("p"))));
  CHECK(parse("var_1x") == v("var_1x"));
}

TEST_CASE("parse rejects malformed input with a position") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p &"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("<p"), ParseError);
  CHECK_THROWS_AS(parse("p -> -> q"), ParseError);
  try {
    parse("p & & q");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("print uses parentheses only where needed") {
  CHECK(print(impl(dia(v("p")), box(v("q")))) == "<>p -> []q");
  CHECK(print(conj(v("p"), disj(v("q"), v("r")))) == "p & (q | r)");
  CHECK(print(Formula::bot()) == "F");
  CHECK(print(disj(conj(neg(v("p")), v("q")), v("r"))) == "~p & q | r");
  CHECK(print(impl(impl(v("p"), v("q")), v("r"))) == "(p -> q) -> r");
  CHECK(print(conj(v("p"), conj(v("q"), v("r")))) == "p & (q & r)");
  CHECK(print(neg(conj(v("p"), v("q")))) == "~(p & q)");
}

TEST_CASE("stars expand at construction and optionally resugar") {
  Formula f = dia_star(v("p"));
  CHECK(f == disj(v("p"), dia(v("p"))));
  CHECK(print(f) == "p | <>p");
  CHECK(print(f, true) == "<*>p");
  CHECK(print(box_star(v("p")), true) == "[*]p");
  CHECK(parse(print(f, true)) == f);
}

TEST_CASE("vars collects exactly the occurring variables") {
  CHECK(vars(conj(dia(v("p")), dia(neg(v("p"))))) == std::set<std::string>{"p"});
  CHECK(vars(Formula::top()).empty());
  Formula d2 = scheme_D(2, fresh_vars(3));
  CHECK(vars(d2) == std::set<std::string>{"p0", "p1", "p2"});
}

TEST_CASE("scheme_P builds the nested diamond path") {
  CHECK(scheme_P(0, {v("p")}) == dia(v("p")));
  CHECK(scheme_P(1, {v("p0"), v("p1")}) == dia(conj(v("p1"), dia(v("p0")))));
  CHECK(scheme_P(2, {v("p0"), v("p1"), v("p2")}) ==
        dia(conj(v("p1"), dia(conj(v("p2"), dia(v("p0")))))));
  for (int n = 0; n <= 5; ++n)
    CHECK(count_kind(scheme_P(n, fresh_vars(n + 1)), Kind::Dia) == n + 1);
}

TEST_CASE("scheme_D is the right-nested pairwise disjointness conjunction") {
  CHECK(scheme_D(0, {v("p")}) == Formula::top());
  CHECK(scheme_D(1, {v("p"), v("q")}) == neg(conj(v("p"), v("q"))));
  CHECK(scheme_D(2, {v("p"), v("q"), v("r")}) ==
        conj(neg(conj(v("p"), v("q"))),
             conj(neg(conj(v("p"), v("r"))), neg(conj(v("q"), v("r"))))));
}

TEST_CASE("scheme_C expands through the star sugar") {
  // n=0: ([*]T) -> (<>p -> <>(p & ~<>p)), with [*]T = T & []T.
  Formula expect0 =
      impl(conj(Formula::top(), box(Formula::top())),
           impl(dia(v("p")), dia(conj(v("p"), neg(dia(v("p")))))));
  CHECK(scheme_C(0, {v("p")}) == expect0);

  Formula d1 = neg(conj(v("p"), v("q")));
  Formula expect1 =
      impl(conj(d1, box(d1)),
           impl(dia(v("p")),
                dia(conj(v("p"), neg(dia(conj(v("q"), dia(v("p")))))))));
  CHECK(scheme_C(1, {v("p"), v("q")}) == expect1);

  CHECK_THROWS_AS(scheme_C(1, {v("p")}), std::invalid_argument);
  for (int n = 0; n <= 4; ++n)
    CHECK(vars(scheme_C(n, fresh_vars(n + 1))).size() ==
          static_cast<std::size_t>(n + 1));
}

TEST_CASE("named axioms match their displayed forms") {
  CHECK(print(named_axiom("D")) == "<>T");
  CHECK(named_axiom("E") ==
        disj(box(Formula::bot()), dia(box(Formula::bot()))));
  CHECK(print(named_axiom("M")) == "[]<>p -> <>[]p");
  CHECK(print(named_axiom("K")) == "[](p -> q) -> []p -> []q");
  CHECK(parse("[](p -> q) -> ([]p -> []q)") == named_axiom("K"));
  CHECK(print(named_axiom("4")) == "<><>p -> <>p");
  CHECK(print(named_axiom("T")) == "[]p -> p");
  CHECK(print(named_axiom("Loeb")) == "[]([]p -> p) -> []p");
  CHECK(print(named_axiom("Grz")) == "[]([](p -> []p) -> p) -> []p");
  CHECK(print(named_axiom("M_dia")) == "<>([]p | []~p)");
  CHECK(named_axiom("M_star") ==
        dia_star(disj(box_star(v("p")), box_star(neg(v("p"))))));
  CHECK_THROWS_AS(named_axiom("B"), std::invalid_argument);
}

TEST_CASE("parse/print round trip on random formulas up to depth 6") {
  Rng rng(42);
  std::vector<std::string> pool = {"p", "q", "r"};
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(rng, 6, pool);
    CAPTURE(print(f));
    REQUIRE(parse(print(f)) == f);
    REQUIRE(parse(print(f, true)) == f);
  }
}
