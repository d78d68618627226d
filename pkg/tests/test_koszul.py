from adichh.koszul import (base_change_check, koszul, telescope_stage,
                           telescope_stage_map, tower)
from adichh.modules import FPModule, hom_complex
from adichh.rings import QQ, Ring


def _ring2():
    return Ring(QQ, ["x", "y"])


def test_koszul_squares_to_zero():
    R = _ring2()
    x, y = R.gens()
    C = koszul(R, [x * x, x + y]).complex
    for i in sorted(C.diffs):
        if (i - 1) in C.diffs:
            comp = C.diffs[i - 1].compose(C.diffs[i])
            assert all(p.is_zero() for row in comp.matrix for p in row)


def test_telescope_matches_dual_koszul():
    # H^0 Hom(Tel_j(x), A) = A/(x^j), graded, generator in degree 0
    R = Ring(QQ, ["x"])
    (x,) = R.gens()
    A = FPModule.free(R, (0,))
    for j in (1, 2, 3):
        T = telescope_stage(R, [x], j).complex
        P = hom_complex(T, A)
        H = P.homology(0)
        assert [H.graded_dim(d) for d in range(j + 2)] == \
            [1] * j + [0, 0]


def test_telescope_stage_map_is_chain_map():
    R = _ring2()
    x, y = R.gens()
    inc = telescope_stage_map(telescope_stage(R, [x, y], 2),
                              telescope_stage(R, [x, y], 3))
    assert inc.commutes()


def test_tower_transitions_are_chain_maps_and_functorial():
    R = _ring2()
    x, y = R.gens()
    tw = tower(R, [x, y], 4)
    t21 = tw.transition(2, 1)
    t32 = tw.transition(3, 2)
    t31 = tw.transition(3, 1)
    assert t21.commutes() and t32.commutes()
    assert t21.compose(t32).equal(t31)


def test_tower_stage_homology():
    # K(x^j, y^j) resolves k[x,y]/(x^j, y^j)
    R = _ring2()
    x, y = R.gens()
    tw = tower(R, [x, y], 3)
    C = tw.stage(2).complex
    assert C.homology(1).is_zero_module()
    H0 = C.homology(0)
    assert sum(H0.graded_dim(d) for d in range(6)) == 4


def test_base_change_polynomial_to_quotient():
    base = Ring(QQ, ["x", "y"])
    x, y = base.gens()
    Q = Ring(QQ, ["x", "y"], quotient_gens=[x * y])
    assert base_change_check(base, [x], Q, list(Q.gens()))


def test_base_change_variable_substitution():
    R1 = Ring(QQ, ["x"])
    R2 = _ring2()
    x2, y2 = R2.gens()
    (x1,) = R1.gens()
    assert base_change_check(R1, [x1], R2, [x2 + y2])


def test_dual_koszul_computes_local_cohomology_cell():
    # H^1 of Hom(K(x^j), k[x]) in degree -1 is 1 for every j >= 1
    R = Ring(QQ, ["x"])
    (x,) = R.gens()
    A = FPModule.free(R, (0,))
    for j in (1, 2, 3):
        P = hom_complex(koszul(R, [x ** j]).complex, A)
        H = P.homology(-1)
        assert H.graded_dim(-1) == 1
