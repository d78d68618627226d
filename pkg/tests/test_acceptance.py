"""Acceptance gate: the eight exact-equality criteria, end to end.

Each test runs the corresponding verification battery at its stated
scale and asserts verdict "pass" cell for cell, plus the stated runtime
budgets where given.  Dimension values are frozen from independent
hand counts and closed forms.
"""

import time
from math import comb

from adichh import verify


def test_criterion_1_hkr_exterior_powers():
    # completed HH^i of k[x_1..x_n] = binomial(n, i) copies of the
    # truncated power-series ring; n = 1, 2, 3, all 0 <= i <= n,
    # precision 5 (4 for n = 3); budget: 120 s
    t0 = time.time()
    rep = verify.verify_hkr()
    elapsed = time.time() - t0
    assert rep.verdict == "pass"
    assert not rep.flags
    for n in (1, 2, 3):
        for i in range(n + 1):
            assert rep.extra["ranks"][f"n={n},i={i}"] == comb(n, i)
    # spot-frozen cells: n=1 tables are all ones; n=2, i=1 doubles the
    # coefficient count of k[x1,x2]
    by_name = {t.name: t.cells for t in rep.tables}
    assert list(by_name["n=1,i=0,N=5"].values()) == [1, 1, 1, 1, 1]
    assert list(by_name["n=1,i=1,N=5"].values()) == [1, 1, 1, 1, 1]
    assert by_name["n=2,i=1,N=5"] == {"d=-1": 2, "d=0": 4, "d=1": 6,
                                      "d=2": 8, "d=3": 10}
    assert elapsed < 120


def test_criterion_2_main_theorem_corpus():
    # completion of HH^i vs HH^i of the completion: exact cell-for-cell
    # equality, guard-stable, over QQ and F_5; budget: 600 s
    t0 = time.time()
    rep = verify.verify_main_theorem()
    elapsed = time.time() - t0
    assert rep.verdict == "pass"
    assert not rep.flags
    # 8 one-variable cases (4 modules x i in {0,1}) and 6 two-variable
    # cases (2 modules x i in {0,1,2}), per field
    assert len(rep.tables) == 2 * (8 + 6)
    # every left cell equals its right cell, and none are unstable
    for t in rep.tables:
        for key, v in t.cells.items():
            assert v is not None
            if key.startswith("left "):
                assert t.cells["right " + key[5:]] == v
    assert elapsed < 600


def test_criterion_3_gm_duality_pairs():
    # six module pairs over k[x] and k[x,y], i <= 3, |d| <= 10,
    # including (k, A) with Ext^1 = k on both sides
    rep = verify.verify_gm_duality()
    assert rep.verdict == "pass"
    assert not rep.flags
    assert len(rep.tables) >= 5
    assert rep.extra["ext1_k_A"] == [1, 1]
    by_name = {t.name: t.cells for t in rep.tables}
    # frozen nonzero cells
    assert by_name["k[x]: (k, A)"]["i=1,d=-1,left"] == 1
    assert by_name["k[x]: (k, A)"]["i=1,d=-1,right"] == 1
    assert by_name["k[x]: (A, k)"]["i=0,d=0,left"] == 1
    assert by_name["k[x,y]: (A, k)"]["i=0,d=0,right"] == 1


def test_criterion_4_wpr_example():
    # (x) in k[x,y]/(xy): witness offset exactly 1 for all j <= 8, i >= 1;
    # regular sequences certify trivially
    rep = verify.verify_wpr_example(8)
    assert rep.verdict == "pass"
    assert not rep.flags
    quotient_cells = rep.tables[0].cells
    assert quotient_cells == {f"i=1,j={j}": 1 for j in range(1, 9)}
    control_cells = rep.tables[1].cells
    assert all(off == 1 for off in control_cells.values())


def test_criterion_5_cofinality():
    rep = verify.verify_cofinality(4)
    assert rep.verdict == "pass"
    for t in rep.tables:
        for n in range(1, 5):
            assert t.cells[f"n={n},lower"] == 1
            assert t.cells[f"n={n},upper"] == 1


def test_criterion_6_padic():
    t0 = time.time()
    rep = verify.verify_padic((2, 3, 5), 6)
    elapsed = time.time() - t0
    assert rep.verdict == "pass"
    by_name = {t.name: t.cells for t in rep.tables}
    for p in (2, 3, 5):
        cells = by_name[f"p={p},N=6"]
        assert cells["HH^0"] == p ** 6
        assert cells["HH^1"] == 1 and cells["HH^2"] == 1
    assert elapsed < 1


def test_criterion_7_local_cohomology_closed_forms():
    rep = verify.verify_localcoh(12)
    assert rep.verdict == "pass"
    assert not rep.flags
    line = rep.tables[0].cells
    plane = rep.tables[1].cells
    for d in range(-10, 1):
        expected_line = 1 if d <= -1 else 0
        assert line[f"i=1,d={d}"] == expected_line
        assert line[f"i=0,d={d}"] == 0
        expected_plane = (-d - 1) if d <= -2 else 0
        assert plane[f"i=2,d={d}"] == expected_plane
        assert plane[f"i=1,d={d}"] == 0
        assert plane[f"i=0,d={d}"] == 0


def test_criterion_8_property_suites_configuration():
    # the seeded suites live in test_properties.py and run in this same
    # session; here we assert each one is configured at >= 200 examples
    # with the recorded seed
    import test_properties as props
    suites = [name for name in dir(props) if name.startswith("test_")]
    assert len(suites) >= 7
    assert props.SEED == 20260826
    for name in suites:
        fn = getattr(props, name)
        assert fn._hypothesis_internal_use_settings.max_examples >= 200
