"""Weak proregularity certificates for Koszul towers.

A sequence is weakly proregular when, for every i > 0, the inverse system
H_i(K(a^j)) is pro-zero: each stage is killed by the transition from some
deeper stage.  The certificate records, per (i, j), the least witness
depth whose transition maps every homology generator to a boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import groebner
from .koszul import KoszulError, tower
from .rings import Polynomial, Ring


class WprError(Exception):
    pass


@dataclass
class ProZeroCertificate:
    i: int                      # homological index (> 0)
    j: int                      # stage being killed
    witness: Optional[int]      # least deeper stage whose transition is zero
    generators_checked: int     # homology generators mapped and reduced

    @property
    def verified(self) -> bool:
        return self.witness is not None

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "witness": self.witness,
                "offset": None if self.witness is None else self.witness - self.j,
                "generators_checked": self.generators_checked}


@dataclass
class WprReport:
    sequence: list
    J: int
    search_depth: int
    certificates: List[ProZeroCertificate]

    @property
    def certified(self) -> bool:
        return all(c.verified for c in self.certificates)

    @property
    def verdict(self) -> str:
        # failure to find a witness within the window proves nothing
        return "pass" if self.certified else "inconclusive"

    def witness_offsets(self) -> Dict[Tuple[int, int], Optional[int]]:
        return {(c.i, c.j): (None if c.witness is None else c.witness - c.j)
                for c in self.certificates}


def _homology_generators(complex_, i: int, ring: Ring) -> list:
    """Ambient vectors generating H_i = ker d_i / im d_{i+1} (gens of ker)."""
    term = complex_.term(i)
    if term.rank == 0:
        return []
    d_in = complex_.diffs.get(i)
    if d_in is None or d_in.is_zero():
        return [groebner.unit_vec(ring, term.rank, s) for s in range(term.rank)]
    cols = d_in.columns()
    syz = groebner.syzygies_of(cols, ring)
    return [s for s in syz if not groebner.vec_is_zero(s)]


def wpr_certify(ring: Ring, a_gens: Sequence[Polynomial], J: int,
                extra: int = 4) -> WprReport:
    """Search pro-zero witnesses for H_i(K(a^j)), i > 0, j <= J.

    For each stage j the candidate witnesses j' run through j+1 .. J+extra;
    a witness is accepted only after every homology generator at depth j'
    is pushed through the transition chain map and reduced to zero against
    the boundary span at stage j.
    """
    seq = list(a_gens)
    if not seq:
        raise WprError("empty sequence")
    depth = J + extra
    tw = tower(ring, seq, depth)
    c = len(seq)

    # boundary spans at the shallow stages
    boundary_gb: Dict[Tuple[int, int], groebner.GroebnerBasis] = {}

    def boundaries(j: int, i: int) -> groebner.GroebnerBasis:
        key = (j, i)
        if key not in boundary_gb:
            cx = tw.stage(j).complex
            d_next = cx.diffs.get(i + 1)
            cols = [col for col in (d_next.columns() if d_next else [])
                    if not groebner.vec_is_zero(col)]
            if not cols:
                cols = [groebner.zero_vec(ring, cx.term(i).rank)]
            boundary_gb[key] = groebner.buchberger(cols, ring)
        return boundary_gb[key]

    certs: List[ProZeroCertificate] = []
    for i in range(1, c + 1):
        gens_at: Dict[int, list] = {}
        for j in range(1, J + 1):
            found = None
            checked = 0
            tgt_gb = boundaries(j, i)
            for jp in range(j + 1, depth + 1):
                if jp not in gens_at:
                    gens_at[jp] = _homology_generators(tw.stage(jp).complex,
                                                       i, ring)
                gens = gens_at[jp]
                T = tw.transition(jp, j)
                Ti = T.matrices.get(i)
                ok = True
                for v in gens:
                    w = tuple(
                        sum((Ti[r][s] * v[s] for s in range(len(v))),
                            ring.zero())
                        for r in range(len(Ti)))
                    checked += 1
                    if not tgt_gb.contains(w):
                        ok = False
                        break
                if ok:
                    found = jp
                    break
            certs.append(ProZeroCertificate(i, j, found, checked))
    return WprReport(seq, J, depth, certs)
