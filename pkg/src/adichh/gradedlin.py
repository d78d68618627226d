"""Per-degree linear algebra on graded pieces of presented modules.

This is the verification lane that avoids module-level Groebner bases:
graded pieces are finite dimensional vector spaces, relation spans are
handled by row reduction, and cohomology is rank-nullity.  It backs the
dense homology oracle, local cohomology towers, and the truncated-ring
computations.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .modules import (ChainComplex, FPModule, FreeModule, ModuleMap,
                      PresentedComplex, vector_degree)
from .rings import Polynomial, Ring, mon_divides, mon_mul, monomials_of_degree


def ring_monomial_basis(ring: Ring, d: int) -> list:
    """k-basis monomials of the ring in degree d (standard monomials in a
    quotient ring)."""
    if d < 0:
        return []
    mons = monomials_of_degree(ring.nvars, d)
    if not ring.quotient_gb:
        return mons
    lts = [g.leading_monomial() for g in ring.quotient_gb]
    return [m for m in mons if not any(mon_divides(lt, m) for lt in lts)]


def free_term_basis(free: FreeModule, ring: Ring, d: int) -> list:
    """Basis (monomial, position) of the degree-d piece of a free module."""
    out = []
    for pos, tw in enumerate(free.twists):
        for m in ring_monomial_basis(ring, d - tw):
            out.append((m, pos))
    return out


class GradedPiece:
    """Degree-d piece of an FPModule as an explicit quotient space."""

    def __init__(self, M: FPModule, d: int):
        self.ring = M.ring
        self.d = d
        self.amb_basis = free_term_basis(M.ambient, M.ring, d)
        self.index = {bm: i for i, bm in enumerate(self.amb_basis)}
        F = self.ring.field
        rel_rows = []
        for rc in M.relation_columns():
            w = vector_degree(rc, M.ambient)
            for m in ring_monomial_basis(self.ring, d - w):
                vec = [F.zero()] * len(self.amb_basis)
                ok = True
                for pos, p in enumerate(rc):
                    if p.is_zero():
                        continue
                    q = p.mul_term(m, F.one())
                    for mm, c in q.terms.items():
                        key = (mm, pos)
                        if key not in self.index:
                            ok = False
                            break
                        vec[self.index[key]] = F.add(vec[self.index[key]], c)
                    if not ok:
                        break
                if ok:
                    rel_rows.append(vec)
        self._rref, self._pivots = linalg.rref(rel_rows, F) if rel_rows else ([], [])
        self.basis_idx = [i for i in range(len(self.amb_basis))
                          if i not in self._pivots]
        self.dim = len(self.basis_idx)

    def project(self, amb_vec: Sequence) -> list:
        """Coordinates in the quotient basis of an ambient coordinate vector."""
        F = self.ring.field
        v = list(amb_vec)
        for row, pc in zip(self._rref, self._pivots):
            c = v[pc]
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return [v[i] for i in self.basis_idx]

    def ambient_coords(self, vec_of_polys: Sequence[Polynomial]) -> list:
        F = self.ring.field
        v = [F.zero()] * len(self.amb_basis)
        for pos, p in enumerate(vec_of_polys):
            for m, c in p.terms.items():
                v[self.index[(m, pos)]] = F.add(v[self.index[(m, pos)]], c)
        return v

    def lift_basis_element(self, k: int) -> Tuple:
        """Ambient (monomial, position) representing quotient basis vector k."""
        return self.amb_basis[self.basis_idx[k]]


def induced_matrix(phi: ModuleMap, src_piece: GradedPiece,
                   tgt_piece: GradedPiece) -> list:
    """Matrix of the induced map on degree-d pieces (quotient coords).

    phi acts on ambient free modules and preserves internal degree.
    """
    F = src_piece.ring.field
    cols = []
    for k in range(src_piece.dim):
        m, pos = src_piece.lift_basis_element(k)
        amb = [F.zero()] * len(tgt_piece.amb_basis)
        for i in range(phi.target.rank):
            e = phi.matrix[i][pos]
            if e.is_zero():
                continue
            q = e.mul_term(m, F.one())
            for mm, c in q.terms.items():
                idx = tgt_piece.index[(mm, i)]
                amb[idx] = F.add(amb[idx], c)
        cols.append(tgt_piece.project(amb))
    rows = tgt_piece.dim
    return [[cols[j][i] for j in range(len(cols))] for i in range(rows)]


def diff_matrix_in_degree(phi: ModuleMap, ring: Ring, d: int) -> list:
    """Degree-d matrix of a map of free modules (rows: target basis)."""
    F = ring.field
    src = free_term_basis(phi.source, ring, d)
    tgt = free_term_basis(phi.target, ring, d)
    tidx = {bm: i for i, bm in enumerate(tgt)}
    out = [[F.zero()] * len(src) for _ in range(len(tgt))]
    for j, (m, pos) in enumerate(src):
        for i in range(phi.target.rank):
            e = phi.matrix[i][pos]
            if e.is_zero():
                continue
            q = e.mul_term(m, F.one())
            for mm, c in q.terms.items():
                out[tidx[(mm, i)]][j] = F.add(out[tidx[(mm, i)]][j], c)
    return out


class ComplexDegreeData:
    """Cohomology data of a PresentedComplex in one (index, degree) cell."""

    def __init__(self, P: PresentedComplex, i: int, d: int,
                 cache: Optional[dict] = None):
        self.P = P
        self.i = i
        self.d = d
        cache = cache if cache is not None else {}

        def piece(j):
            key = (j, d)
            if key not in cache:
                M = P.terms.get(j)
                cache[key] = GradedPiece(M, d) if M is not None else None
            return cache[key]

        F = P.ring.field

        def diff_data(j):
            """Matrix and rank of d_j on the degree-d pieces (cached)."""
            key = ("mat", j, d)
            if key not in cache:
                dj = P.diffs.get(j)
                src, tgt = piece(j), piece(j - 1)
                if dj is None or src is None or tgt is None:
                    cache[key] = ([], 0)
                else:
                    m = induced_matrix(dj, src, tgt)
                    cache[key] = (m, linalg.rank(m, F) if m else 0)
            return cache[key]

        self.piece_i = piece(i)
        if self.piece_i is None:
            self.dim = 0
            self.h_dim = 0
            self.m_out = []
            self.m_in = []
            return
        self.dim = self.piece_i.dim
        self.m_out, r_out = diff_data(i)
        self.m_in, r_in = diff_data(i + 1)
        self.h_dim = self.dim - r_out - r_in

    def kernel_basis(self) -> list:
        """Cocycle representatives in quotient coordinates."""
        F = self.P.ring.field
        if not self.m_out:
            return [[F.one() if i == j else F.zero() for j in range(self.dim)]
                    for i in range(self.dim)]
        return linalg.nullspace(self.m_out, F, self.dim)

    def image_rows(self) -> list:
        """Coboundaries as row vectors."""
        if not self.m_in or not self.m_in[0]:
            return []
        return [list(col) for col in zip(*self.m_in)]


def cohomology_map_rank(src: ComplexDegreeData, tgt: ComplexDegreeData,
                        matrix: list) -> int:
    """Rank of the map induced on cohomology by a degree-d chain-map
    matrix from src's term piece to tgt's term piece."""
    F = src.P.ring.field
    imgs = []
    for v in src.kernel_basis():
        imgs.append(linalg.mat_mul_vec(matrix, v, F))
    return linalg.rank_extension(tgt.image_rows(), imgs, F)
