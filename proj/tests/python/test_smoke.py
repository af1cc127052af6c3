import pytest

import finmodal as fm


def test_parse_print_roundtrip():
    f = fm.parse("<>p -> []q")
    assert str(f) == "<>p -> []q"
    assert fm.parse(str(f)) == f
    assert fm.pretty(fm.parse("<*>p"), resugar=True) == "<*>p"
    assert fm.parse("<*>p") == fm.parse("p | <>p")


def test_schemes_and_axioms():
    c1 = fm.scheme_C(1, fm.fresh_vars(2))
    assert c1.vars() == {"p0", "p1"}
    assert str(fm.named_axiom("D")) == "<>T"
    assert "Loeb" in fm.axiom_names()
    with pytest.raises(ValueError):
        fm.named_axiom("unknown")


def test_frame_validity_and_clusters():
    chain = fm.Frame(2, [(0, 1)])
    assert fm.is_transitive(chain)
    assert fm.circumference(chain) == 0
    assert fm.valid_in_frame(chain, fm.named_axiom("Loeb"))["valid"]

    refl = fm.Frame(1, [(0, 0)])
    loeb = fm.valid_in_frame(refl, fm.named_axiom("Loeb"))
    assert not loeb["valid"]
    assert loeb["valuation"] == {"p": []}

    kinds = {c["kind"] for c in fm.clusters(chain)}
    assert kinds == {"degenerate"}


def test_space_classification_and_resolvability():
    ind = fm.TopSpace(2, [], complete=True)
    flags = fm.classify(ind)
    assert flags["crowded"] and not flags["TD"]
    assert fm.k_resolvable(ind, 2)["resolvable"]
    assert fm.hereditarily_k_irresolvable(ind, 3)
    assert not fm.openly_irresolvable(ind)
    assert fm.d_valid(ind, fm.named_axiom("M"))["valid"]


def test_alexandrov_and_glue():
    chain = fm.Frame(2, [(0, 1)])
    space = fm.alexandrov_from_frame(chain)
    assert space.opens == [[], [1], [0, 1]]
    assert fm.specialization_frame(space) == fm.reflexive_closure(chain)

    glued, onto = fm.glue(chain, cell_size=2)
    assert glued.points == 2
    assert onto == [0, 1]
    assert fm.d_morphism_check(glued, chain, onto)["ok"]


def test_countermodel_search_and_suite():
    hit = fm.countermodel_search(fm.named_axiom("Loeb"), max_size=2)
    assert hit["found"] and hit["size"] == 1

    miss = fm.countermodel_search(
        fm.scheme_C(1, fm.fresh_vars(2)),
        max_size=3,
        circumference_at_most=1,
    )
    assert not miss["found"]
    assert miss["exhausted_size"] == 3

    report = fm.run_suite("indiscrete-2pt")
    assert report["verdict"] == "PASS"


def test_caps_are_reported():
    with pytest.raises(fm.CapExceeded):
        fm.enumerate_frames(7)
