import json

import cupcube


TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_parse_counts():
    d = cupcube.parse_pd(TREFOIL)
    assert (d.crossings, d.edges, d.arcs, d.faces) == (3, 6, 3, 5)
    assert d.writhe == -3
    assert d.components == 1
    info = json.loads(d.info_json())
    assert info["unbounded_face"] == 0
    assert len(info["wirtinger"]) == 3


def test_parse_errors():
    try:
        cupcube.parse_pd("X(1,2,3)")
    except cupcube.InputError:
        pass
    else:
        raise AssertionError("expected InputError")


def test_mirror_writhe():
    d = cupcube.parse_pd(TREFOIL)
    assert d.mirrored().writhe == 3
    assert not cupcube.pd_isomorphic(d, d.mirrored())


def test_branched_forms():
    assert cupcube.branched_form("3_1", 2)["form"] == "a*b*c"
    assert cupcube.branched_form("4_1", 4)["form"] == "2*a*b*c"
    r = cupcube.branched_form("5_1", 3)
    assert r["zero"] and r["form"] == "0"
    # works with an inline PD too
    assert cupcube.branched_form(TREFOIL, 2)["form"] == "a*b*c"


def test_coloring_counts():
    assert cupcube.coloring_counts("3_1", 2) == ("16", "4")


def test_oracles():
    assert cupcube.oracle_check("trefoil", n=2, samples=500)["pass"]
    assert cupcube.oracle_check("fig8", n=4, samples=300)["pass"]
    assert cupcube.oracle_check("torus", n=2, torus_m=2, samples=300)["pass"]


def test_table_rows():
    rows = cupcube.table_check()
    assert len(rows) == 28
    failing = [r for r in rows if not r["pass"]]
    # the single documented irreproducible row
    assert [(r["knot"], r["n"]) for r in failing] == [("5_2", 5)]
