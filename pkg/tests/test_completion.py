import pytest

from adichh import completion
from adichh.completion import (CompletionError, cofinality_check, complete,
                               gm_duality_check, local_cohomology,
                               padic_check, torsion_submodule)
from adichh.modules import FPModule
from adichh.rings import QQ, Ring


def _ring1():
    return Ring(QQ, ["x"])


def _ring2():
    return Ring(QQ, ["x", "y"])


# -- torsion ----------------------------------------------------------------

def test_torsion_of_free_is_zero():
    R = _ring1()
    res = torsion_submodule(FPModule.free(R, (0,)), R.gens())
    assert res.module.is_zero_module()
    assert res.exponent == 1  # stabilizes at the first probed power


def test_torsion_of_nilpotent_quotient():
    R = _ring1()
    (x,) = R.gens()
    M = FPModule.quotient_by_ideal(R, [x * x])
    res = torsion_submodule(M, [x])
    assert res.exponent == 2
    assert [res.module.graded_dim(d) for d in range(4)] == [1, 1, 0, 0]


def test_torsion_mixed_module():
    # Gamma_(x) of k[x,y]/(xy) is the class of y: one dim in each degree >= 1
    R = _ring2()
    x, y = R.gens()
    M = FPModule.quotient_by_ideal(R, [x * y])
    res = torsion_submodule(M, [x])
    assert res.exponent == 1
    assert [res.module.graded_dim(d) for d in range(4)] == [0, 1, 1, 1]


# -- completion -------------------------------------------------------------

def test_complete_truncates():
    R = _ring1()
    M = FPModule.free(R, (0,))
    C = complete(M, R.gens(), 3)
    assert [C.graded_dim(d) for d in range(5)] == [1, 1, 1, 0, 0]


def test_complete_rejects_bad_precision():
    R = _ring1()
    with pytest.raises(CompletionError):
        complete(FPModule.free(R, (0,)), R.gens(), 0)


def test_complete_two_variables():
    R = _ring2()
    C = complete(FPModule.free(R, (0,)), R.gens(), 2)
    assert [C.graded_dim(d) for d in range(4)] == [1, 2, 0, 0]


# -- local cohomology -------------------------------------------------------

def test_local_cohomology_line():
    R = _ring1()
    res = local_cohomology(FPModule.free(R, (0,)), R.gens(), 8,
                           list(range(-6, 1)))
    assert res.all_stable()
    for d in range(-6, 0):
        assert res.dim(1, d) == 1
        assert res.dim(0, d) == 0
    assert res.dim(1, 0) == 0


def test_local_cohomology_plane_top():
    R = _ring2()
    res = local_cohomology(FPModule.free(R, (0,)), R.gens(), 8,
                           list(range(-6, 1)), i_values=(0, 1, 2))
    assert res.all_stable()
    for d in range(-6, 1):
        expected = -d - 1 if d <= -2 else 0
        assert res.dim(2, d) == expected
        assert res.dim(1, d) == 0
        assert res.dim(0, d) == 0


def test_local_cohomology_torsion_module():
    # Gamma-acyclic input: H^0 of a torsion module is itself, H^1 vanishes
    R = _ring1()
    (x,) = R.gens()
    M = FPModule.quotient_by_ideal(R, [x * x])
    res = local_cohomology(M, [x], 8, list(range(-2, 3)))
    assert res.all_stable()
    assert res.dim(0, 0) == 1 and res.dim(0, 1) == 1
    assert all(res.dim(1, d) == 0 for d in range(-2, 3))


# -- duality / cofinality / p-adic -----------------------------------------

def test_gm_duality_k_A_pair():
    R = _ring1()
    (x,) = R.gens()
    k = FPModule.quotient_by_ideal(R, [x])
    A = FPModule.free(R, (0,))
    rep = gm_duality_check(k, A, [x], (0, 1, 2), list(range(-4, 5)), J=8)
    assert rep.verdict == "pass"
    assert rep.left[(1, -1)].value == 1
    assert rep.right[(1, -1)].value == 1


def test_cofinality_line():
    R = _ring1()
    res = cofinality_check(R, R.gens(), 3)
    assert res["ok"]


def test_cofinality_rejects_quotients():
    base = _ring2()
    x, y = base.gens()
    Q = Ring(QQ, ["x", "y"], quotient_gens=[x * y])
    with pytest.raises(CompletionError):
        cofinality_check(Q, [Q.var(0)], 2)


def test_padic():
    for p in (2, 3, 5):
        res = padic_check(p, 4)
        assert res["ok"]
        assert res["hh_orders"][0] == p ** 4
        assert all(res["hh_orders"][i] == 1 for i in (1, 2, 3))
