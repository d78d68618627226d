import pytest

from adichh.rings import QQ, Ring
from adichh.wpr import WprError, wpr_certify


def test_regular_sequence_certifies_trivially():
    R = Ring(QQ, ["x", "y"])
    rep = wpr_certify(R, R.gens(), 3)
    assert rep.verdict == "pass"
    # every tower is already zero, so the first candidate witness works
    assert all(off == 1 for off in rep.witness_offsets().values())


def test_nonregular_element_in_quotient_ring():
    base = Ring(QQ, ["x", "y"])
    x, y = base.gens()
    Q = Ring(QQ, ["x", "y"], quotient_gens=[x * y])
    rep = wpr_certify(Q, [Q.var(0)], 4)
    assert rep.verdict == "pass"
    offsets = rep.witness_offsets()
    assert set(offsets) == {(1, j) for j in range(1, 5)}
    assert all(off == 1 for off in offsets.values())


def test_empty_sequence_rejected():
    R = Ring(QQ, ["x"])
    with pytest.raises(WprError):
        wpr_certify(R, [], 2)


def test_certificates_record_generators_checked():
    base = Ring(QQ, ["x", "y"])
    x, y = base.gens()
    Q = Ring(QQ, ["x", "y"], quotient_gens=[x * y])
    rep = wpr_certify(Q, [Q.var(0)], 2)
    assert all(c.generators_checked >= 1 for c in rep.certificates
               if c.verified)
