"""Koszul complexes, telescope stages, and towers with transition maps.

A small labeled-complex layer keeps track of tensor-factor bases, so stage
inclusions and tower transitions can be written down by label instead of
by index bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .modules import ChainComplex, FreeModule, ModuleMap, zero_matrix
from .rings import Polynomial, Ring, RingError, apply_ring_map


class KoszulError(Exception):
    pass


# ---------------------------------------------------------------------------
# labeled complexes
# ---------------------------------------------------------------------------

class LabeledComplex:
    """Complex of free modules with named basis elements (homological)."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.terms: Dict[int, list] = {}       # n -> ordered labels
        self.twists: Dict[Tuple, int] = {}     # (n, label) -> twist
        self.diff: Dict[Tuple, list] = {}      # (n, label) -> [(label2, poly)]

    def add(self, n: int, label, twist: int):
        self.terms.setdefault(n, []).append(label)
        self.twists[(n, label)] = twist

    def set_diff(self, n: int, label, image: list):
        self.diff[(n, label)] = image

    def tensor(self, other: "LabeledComplex") -> "LabeledComplex":
        out = LabeledComplex(self.ring)
        for n1 in sorted(self.terms):
            for n2 in sorted(other.terms):
                for l1 in self.terms[n1]:
                    for l2 in other.terms[n2]:
                        out.add(n1 + n2, (l1, l2),
                                self.twists[(n1, l1)] + other.twists[(n2, l2)])
        for n1 in sorted(self.terms):
            for n2 in sorted(other.terms):
                for l1 in self.terms[n1]:
                    for l2 in other.terms[n2]:
                        img = []
                        for lab2, c in self.diff.get((n1, l1), []):
                            img.append(((lab2, l2), c))
                        sign = -1 if n1 % 2 else 1
                        for lab2, c in other.diff.get((n2, l2), []):
                            img.append(((l1, lab2), c if sign == 1 else -c))
                        if img:
                            out.set_diff(n1 + n2, (l1, l2), img)
        return out

    def to_chain(self, check: bool = True) -> "ChainComplex":
        ring = self.ring
        frees = {}
        index = {}
        for n, labels in self.terms.items():
            for i, lab in enumerate(labels):
                index[(n, lab)] = i
            frees[n] = FreeModule(ring, tuple(self.twists[(n, lab)]
                                              for lab in labels))
        diffs = {}
        for n in sorted(self.terms):
            if (n - 1) not in self.terms:
                continue
            m = zero_matrix(ring, frees[n - 1].rank, frees[n].rank)
            any_entry = False
            for j, lab in enumerate(self.terms[n]):
                for lab2, c in self.diff.get((n, lab), []):
                    i = index[(n - 1, lab2)]
                    m[i][j] = m[i][j] + c
                    any_entry = True
            diffs[n] = ModuleMap(frees[n], frees[n - 1], m)
        return ChainComplex(ring, frees, diffs, check=check)

    def index_of(self, n: int, label) -> int:
        return self.terms[n].index(label)


@dataclass
class ChainMap:
    """Chain map given per homological level by a matrix."""

    source: ChainComplex
    target: ChainComplex
    matrices: Dict[int, list]  # n -> rows x cols polynomial matrix

    def commutes(self) -> bool:
        for n in self.source.diffs:
            ds = self.source.diffs[n]
            dt = self.target.diffs.get(n)
            Tn = self._as_map(n)
            Tm = self._as_map(n - 1)
            if Tn is None or Tm is None:
                if not ds.is_zero() and (Tn is not None or Tm is not None):
                    return False
                continue
            left = Tm.compose(ds) if dt is None else None
            if dt is None:
                if left is not None and not left.is_zero():
                    return False
                continue
            lhs = Tm.compose(ds)
            rhs = dt.compose(Tn)
            diffm = [[a - b for a, b in zip(r1, r2)]
                     for r1, r2 in zip(lhs.matrix, rhs.matrix)]
            if any(not e.is_zero() for row in diffm for e in row):
                return False
        return True

    def _as_map(self, n: int):
        if n not in self.matrices:
            return None
        src = self.source.term(n)
        tgt = self.target.term(n)
        return ModuleMap(src, tgt, self.matrices[n])

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self o other."""
        mats = {}
        for n, m in other.matrices.items():
            if n in self.matrices:
                a = self._as_map(n)
                b = other._as_map(n)
                mats[n] = a.compose(b).matrix
        return ChainMap(other.source, self.target, mats)

    def equal(self, other: "ChainMap") -> bool:
        for n in set(self.matrices) | set(other.matrices):
            a = self.matrices.get(n)
            b = other.matrices.get(n)
            if a is None or b is None:
                ranks = self.source.term(n).rank * self.target.term(n).rank
                if ranks and (a or b):
                    m = a or b
                    if any(not e.is_zero() for row in m for e in row):
                        return False
                continue
            for r1, r2 in zip(a, b):
                for e1, e2 in zip(r1, r2):
                    if not (e1 - e2).is_zero():
                        return False
        return True


# ---------------------------------------------------------------------------
# Koszul complexes
# ---------------------------------------------------------------------------

@dataclass
class KoszulComplex:
    ring: Ring
    sequence: list
    labeled: LabeledComplex
    complex: ChainComplex


def _koszul_factor(ring: Ring, a: Polynomial) -> LabeledComplex:
    L = LabeledComplex(ring)
    L.add(0, "e", 0)
    L.add(1, "f", a.degree() if not a.is_zero() else 0)
    L.set_diff(1, "f", [("e", a)])
    return L


def koszul(ring: Ring, seq: Sequence[Polynomial]) -> KoszulComplex:
    """Exterior-algebra complex on a finite sequence (length <= 6)."""
    seq = list(seq)
    if not seq:
        raise KoszulError("empty sequence")
    if len(seq) > 6:
        raise KoszulError("sequence too long (max 6)")
    L = _koszul_factor(ring, seq[0])
    for a in seq[1:]:
        L = L.tensor(_koszul_factor(ring, a))
    return KoszulComplex(ring, seq, L, L.to_chain())


# ---------------------------------------------------------------------------
# telescope stages
# ---------------------------------------------------------------------------

@dataclass
class TelescopeStage:
    ring: Ring
    sequence: list
    stage: int
    labeled: LabeledComplex
    complex: ChainComplex


def _telescope_factor(ring: Ring, a: Polynomial, j: int) -> LabeledComplex:
    """Finite telescope on one element: spans indices 0..j-1.

    Terms sit in homological degrees 0 (e-block) and -1 (f-block);
    d(e_i) = a*f_i - f_{i-1}.
    """
    w = a.degree() if not a.is_zero() else 0
    L = LabeledComplex(ring)
    for i in range(j):
        L.add(-1, ("f", i), -(i + 1) * w)
    for i in range(j):
        L.add(0, ("e", i), -i * w)
    for i in range(j):
        img = [(("f", i), a)]
        if i > 0:
            img.append((("f", i - 1), -ring.one()))
        L.set_diff(0, ("e", i), img)
    return L


def telescope_stage(ring: Ring, seq: Sequence[Polynomial], j: int) -> TelescopeStage:
    """Rank-j truncation of the telescope complex on `seq`."""
    if j < 1:
        raise KoszulError("stage must be >= 1")
    seq = list(seq)
    if not seq:
        raise KoszulError("empty sequence")
    L = _telescope_factor(ring, seq[0], j)
    for a in seq[1:]:
        L = L.tensor(_telescope_factor(ring, a, j))
    return TelescopeStage(ring, seq, j, L, L.to_chain())


def telescope_stage_map(s1: TelescopeStage, s2: TelescopeStage) -> ChainMap:
    """Inclusion of stage s1 into the deeper stage s2 (label identity)."""
    if s1.sequence != s2.sequence or s1.ring != s2.ring or s2.stage < s1.stage:
        raise KoszulError("incompatible telescope stages")
    R = s1.ring
    mats = {}
    for n, labels in s1.labeled.terms.items():
        tgt_labels = s2.labeled.terms.get(n, [])
        m = zero_matrix(R, len(tgt_labels), len(labels))
        for jcol, lab in enumerate(labels):
            irow = tgt_labels.index(lab)
            m[irow][jcol] = R.one()
        mats[n] = m
    return ChainMap(s1.complex, s2.complex, mats)


# ---------------------------------------------------------------------------
# Koszul towers
# ---------------------------------------------------------------------------

def _label_fcount(label) -> list:
    """Flatten a nested tensor label into the list of factor markers."""
    if isinstance(label, tuple) and len(label) == 2 \
            and (label[0] in ("e", "f") or isinstance(label[0], tuple)):
        left = _label_fcount(label[0]) if isinstance(label[0], tuple) else [label[0]]
        right = [label[1]] if label[1] in ("e", "f") else _label_fcount(label[1])
        return left + right
    return [label]


@dataclass
class KoszulTower:
    """Stages K(a^j), j = 1..J, with transitions K(a^{j'}) -> K(a^j)."""

    ring: Ring
    sequence: list
    J: int
    stages: list  # stages[j-1] = KoszulComplex on (a_1^j, ..., a_c^j)

    def stage(self, j: int) -> KoszulComplex:
        return self.stages[j - 1]

    def transition(self, j_from: int, j_to: int) -> ChainMap:
        """Chain map K(a^{j_from}) -> K(a^{j_to}), j_from >= j_to.

        On a basis label the map multiplies by a_k^{j_from - j_to} for each
        tensor factor k contributing an exterior generator.
        """
        if j_from < j_to:
            raise KoszulError("transition goes from deeper to shallower")
        src = self.stage(j_from)
        tgt = self.stage(j_to)
        R = self.ring
        delta = j_from - j_to
        mats = {}
        for n, labels in src.labeled.terms.items():
            tgt_labels = tgt.labeled.terms[n]
            m = zero_matrix(R, len(tgt_labels), len(labels))
            for col, lab in enumerate(labels):
                markers = _label_fcount(lab)
                factor = R.one()
                for k, mk in enumerate(markers):
                    if mk == "f":
                        factor = factor * self.sequence[k] ** delta
                row = tgt_labels.index(lab)
                m[row][col] = factor
            mats[n] = m
        return ChainMap(src.complex, tgt.complex, mats)


def tower(ring: Ring, seq: Sequence[Polynomial], J: int) -> KoszulTower:
    if J > 12:
        raise KoszulError("tower height capped at 12")
    seq = list(seq)
    stages = [koszul(ring, [a ** j for a in seq]) for j in range(1, J + 1)]
    return KoszulTower(ring, seq, J, stages)


# ---------------------------------------------------------------------------
# base change
# ---------------------------------------------------------------------------

def base_change_check(ringA: Ring, seq: Sequence[Polynomial], ringB: Ring,
                      images: Sequence[Polynomial], stage: int = 3) -> bool:
    """Koszul and telescope-stage matrices commute with base change.

    `images` gives the image in ringB of each variable of ringA.  The
    pushforward of each differential matrix must equal, entry by entry,
    the matrix built natively over ringB from the image sequence.
    """
    if len(images) != ringA.nvars:
        raise KoszulError("ring map needs one image per variable")
    seqB = [apply_ring_map(a, ringB, images) for a in seq]

    def push(mat):
        return [[apply_ring_map(e, ringB, images) for e in row] for row in mat]

    KA = koszul(ringA, seq)
    KB = koszul(ringB, seqB)
    for n, d in KA.complex.diffs.items():
        dB = KB.complex.diffs[n]
        for r1, r2 in zip(push(d.matrix), dB.matrix):
            for e1, e2 in zip(r1, r2):
                if not (e1 - e2).is_zero():
                    return False
    TA = telescope_stage(ringA, seq, stage)
    TB = telescope_stage(ringB, seqB, stage)
    for n, d in TA.complex.diffs.items():
        dB = TB.complex.diffs[n]
        for r1, r2 in zip(push(d.matrix), dB.matrix):
            for e1, e2 in zip(r1, r2):
                if not (e1 - e2).is_zero():
                    return False
    return True
