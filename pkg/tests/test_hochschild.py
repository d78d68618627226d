import pytest

from adichh.hochschild import (HochschildError, completed_hochschild,
                               diagonal_bimodule, enveloping, enveloping_free,
                               hh01_direct, hkr_check, hochschild_cohomology,
                               main_theorem_check)
from adichh.modules import FPModule
from adichh.rings import GF


def _dims(M, degrees):
    return [M.graded_dim(d) for d in degrees]


def test_enveloping_regularity_and_mu():
    E = enveloping(2)
    assert E.ring.nvars == 4
    for s in E.diagonal:
        assert E.mu(s).is_zero()


def test_hh_of_free_bimodule():
    # Ext over A^e of A with values in A^e: 0 in degree 0, A in degree 1
    E = enveloping(1)
    M = enveloping_free(E)
    assert hochschild_cohomology(E, M, 0).is_zero_module()
    H1 = hochschild_cohomology(E, M, 1)
    assert H1.ambient.twists == (-1,)
    assert not H1.relation_columns()


def test_hh_of_diagonal():
    E = enveloping(1)
    D = diagonal_bimodule(E)
    H0 = hochschild_cohomology(E, D, 0)
    H1 = hochschild_cohomology(E, D, 1)
    assert _dims(H0, range(0, 3)) == [1, 1, 1]
    assert _dims(H1, range(-1, 2)) == [1, 1, 1]


def test_hh_of_square_zero_fibre():
    E = enveloping(1)
    x, y = E.ring.gens()
    M = FPModule.quotient_by_ideal(E.ring, [(x - y) * (x - y)])
    H0 = hochschild_cohomology(E, M, 0)
    H1 = hochschild_cohomology(E, M, 1)
    # centre generated by x - y in degree 1; derivations free of rank one
    assert H0.ambient.twists == (1,) and not H0.relation_columns()
    assert H1.ambient.twists == (-1,) and not H1.relation_columns()


def test_direct_low_degree_oracle_agrees():
    E = enveloping(1)
    x, y = E.ring.gens()
    mods = [enveloping_free(E), diagonal_bimodule(E),
            FPModule.quotient_by_ideal(E.ring, [(x - y) * (x - y)])]
    for M in mods:
        g0, g1 = hh01_direct(E, M)
        h0 = hochschild_cohomology(E, M, 0)
        h1 = hochschild_cohomology(E, M, 1)
        for d in range(-2, 5):
            assert g0.graded_dim(d) == h0.graded_dim(d)
            assert g1.graded_dim(d) == h1.graded_dim(d)


def test_direct_oracle_two_variables():
    E = enveloping(2)
    D = diagonal_bimodule(E)
    g0, g1 = hh01_direct(E, D)
    h0 = hochschild_cohomology(E, D, 0)
    h1 = hochschild_cohomology(E, D, 1)
    for d in range(-2, 4):
        assert g0.graded_dim(d) == h0.graded_dim(d)
        assert g1.graded_dim(d) == h1.graded_dim(d)


def test_completed_free_bimodule():
    # completed Ext^1 at precision 4 matches the x-power truncation
    E = enveloping(1)
    a = [E.base.var(0)]
    t = completed_hochschild(E, a, enveloping_free(E), 1, 4)
    assert t.verdict == "pass"
    assert [t.dims[d] for d in t.window] == [1, 1, 1, 1]


def test_completed_rejects_deep_truncation():
    E = enveloping(1)
    with pytest.raises(HochschildError):
        completed_hochschild(E, [E.base.var(0)], enveloping_free(E), 1, 15)


def test_main_theorem_single_case():
    E = enveloping(1)
    a = [E.base.var(0)]
    x, y = E.ring.gens()
    M = FPModule.quotient_by_ideal(E.ring, [(x - y) * (x - y)])
    for i in (0, 1):
        r = main_theorem_check(E, a, M, i, 5)
        assert r.verdict == "pass"
        assert not r.mismatches


def test_main_theorem_finite_field():
    E = enveloping(1, GF(5))
    a = [E.base.var(0)]
    r = main_theorem_check(E, a, diagonal_bimodule(E), 1, 4)
    assert r.verdict == "pass"


def test_hkr_small():
    r = hkr_check(1, 1, 5)
    assert r.verdict == "pass"
    assert list(r.table.dims.values()) == [1, 1, 1, 1, 1]
    r2 = hkr_check(2, 1, 4)
    assert r2.verdict == "pass"
    assert [r2.table.dims[d] for d in r2.table.window] == [2, 4, 6, 8]
    # above the embedding dimension everything vanishes
    r3 = hkr_check(2, 3, 4)
    assert r3.verdict == "pass"
    assert all(v == 0 for v in r3.table.dims.values())
