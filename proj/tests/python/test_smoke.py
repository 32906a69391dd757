"""Smoke tests for the Python bindings: one probe per exposed surface."""

import cevalat as cv


def test_ratio_sets():
    u = cv.RatioSet("{[0,1/2)}")
    assert str(u) == "{[0,1/2)}"
    assert u.contains("1/3") and not u.contains("1/2")
    assert u.is_admissible()
    assert u.subset_of(cv.RatioSet.initial("2"))
    assert u.unite(u.complement()) == cv.RatioSet("{[0,inf]}")


def test_ceva():
    v = cv.ceva_check("{[0,1/2)}", "{[0,3)}", "{[0,3/2)}")
    assert v["all_hypotheses"] and v["conclusion"] == ("1/2", "3")
    bad = cv.ceva_check("{[0,1/2)}", "{[0,3)}", "{[0,2)}")
    assert not bad["all_hypotheses"]
    assert cv.ceva_converse("2/5", "7")
    rep = cv.ceva_search(["1/2", "2"], 0)
    assert rep["inconsistencies"] == 0 and not rep["partial"]


def test_lemma43():
    v = cv.lemma43_check(
        ["pos(a - b)", "pos(b - a)", "pos(b - c)",
         "pos(c - b)", "pos(a' - c)", "pos(c - a')"]
    )
    assert not (v["pass_ii"] and v["pass_iii"] and v["pass_iv"])
    assert v["failed"]


def test_lattices():
    sq = cv.Lattice(2)
    assert len(sq) == 4 and sq.completely_normal()
    table = sq.cevian_solve()
    assert table is not None and table[3][0] == 3
    spz = cv.Lattice.square_plus_zero()
    assert not spz.completely_normal() and spz.cevian_solve() is None
    assert spz.min_diff(1, 0) == 1
    counts = cv.enumerate_lattices(3)
    assert counts["by_ji_count"] == {0: 1, 1: 1, 2: 2, 3: 5}


def test_diagrams():
    assert cv.diagram_d_commutative()
    assert cv.idc_collapse()
    assert cv.eta_naturality_failures(1) == 0


def test_condensate():
    d = cv.condensate(["12", "3", "123"])
    assert d["factor_sizes"] == [5, 2, 19] and d["size"] == 190


def test_cones():
    holds, witness = cv.cone_subset(
        "kind: cone\ndim: 2\na:\n- x1 > 0 ; x2 > 0\nb:\n- x2 > 0\n"
    )
    assert holds and witness is None
    holds, witness = cv.cone_subset(
        "kind: cone\ndim: 2\na:\n- x2 > 0\nb:\n- x1 > 0 ; x2 > 0\n"
    )
    assert not holds and witness is not None


def test_plot():
    svg = cv.ceva_svg("1/2", "3")
    assert svg.startswith("<svg") and "⟨1,1/2,3/2⟩" in svg


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except AssertionError as e:
                failures += 1
                print(f"FAIL {name}: {e}")
    raise SystemExit(1 if failures else 0)
