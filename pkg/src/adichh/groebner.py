"""Buchberger engine for ideals and submodules of free modules.

Vectors are tuples of polynomials.  All module-level computations run over
the ambient polynomial ring; quotient rings are handled by appending the
quotient generators times each basis vector, so membership, syzygies and
graded dimensions are all relative to the quotient automatically.

The default module order is term-over-position with ties broken by lower
position first.  Syzygies and lifts use a block order in which a leading
group of positions dominates the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .rings import (GREVLEX, Monomial, MonomialOrder, Polynomial, Ring, RingError,
                    mon_deg, mon_div, mon_divides, mon_lcm, mon_mul,
                    monomials_of_degree)

Vec = tuple  # tuple[Polynomial, ...]


# ---------------------------------------------------------------------------
# module orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModuleOrder:
    """Order on module monomials (monomial, position).

    split == 0: term-over-position, lower position wins ties.
    split > 0: positions below `split` dominate all others (elimination
    block), term-over-position inside each block.
    """

    order: MonomialOrder
    split: int = 0

    def key(self, m: Monomial, pos: int):
        if self.split:
            return (1 if pos < self.split else 0, self.order.key(m), -pos)
        return (self.order.key(m), -pos)


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def zero_vec(ring: Ring, rank: int) -> Vec:
    return tuple(ring.zero() for _ in range(rank))

def unit_vec(ring: Ring, rank: int, i: int) -> Vec:
    return tuple(ring.one() if j == i else ring.zero() for j in range(rank))

def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))

def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))

def vec_neg(a: Vec) -> Vec:
    return tuple(-x for x in a)

def vec_scale(a: Vec, c) -> Vec:
    return tuple(x.scale(c) for x in a)

def vec_mul_term(a: Vec, mon: Monomial, c) -> Vec:
    return tuple(x.mul_term(mon, c) for x in a)

def vec_mul_poly(a: Vec, p: Polynomial) -> Vec:
    return tuple(x * p for x in a)

def vec_is_zero(a: Vec) -> bool:
    return all(x.is_zero() for x in a)

def vec_lead(v: Vec, morder: ModuleOrder):
    """(monomial, position, coefficient) of the leading term, or None."""
    best = None
    for pos, p in enumerate(v):
        for m in p.terms:
            k = morder.key(m, pos)
            if best is None or k > best[0]:
                best = (k, m, pos)
    if best is None:
        return None
    _, m, pos = best
    return m, pos, v[pos].terms[m]


def _to_ring(v: Vec, ring: Ring) -> Vec:
    return tuple(Polynomial(ring, dict(p.terms), reduce=False) for p in v)


def _reduce_vec(v: Vec, ring: Ring) -> Vec:
    """Re-home a vector into `ring`, reducing modulo its quotient ideal."""
    return tuple(Polynomial(ring, dict(p.terms)) for p in v)


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def divide(v: Vec, basis: Sequence[Vec], morder: ModuleOrder, ring: Ring,
           track: bool = False):
    """Full division of v by `basis` over a plain polynomial ring.

    Returns (remainder, coeffs) where coeffs[i] is the polynomial multiple
    of basis[i] used (only when track=True).  The remainder contains no
    term divisible by a leading term of the basis.
    """
    F = ring.field
    leads = [vec_lead(g, morder) for g in basis]
    rank = len(v)
    rem_terms = [dict() for _ in range(rank)]
    coeffs = [ring.zero() for _ in basis] if track else None
    h = v
    while True:
        lead = vec_lead(h, morder)
        if lead is None:
            break
        m, pos, c = lead
        hit = None
        for i, ld in enumerate(leads):
            if ld is None or ld[1] != pos:
                continue
            q = mon_div(m, ld[0])
            if q is not None:
                hit = (i, q, F.div(c, ld[2]))
                break
        if hit is not None:
            i, q, cc = hit
            h = vec_sub(h, vec_mul_term(basis[i], q, cc))
            if track:
                coeffs[i] = coeffs[i] + Polynomial(ring, {q: cc}, reduce=False)
        else:
            rem_terms[pos][m] = c
            # move the term out of h
            newp = dict(h[pos].terms)
            del newp[m]
            h = tuple(Polynomial(ring, newp, reduce=False) if j == pos else h[j]
                      for j in range(rank))
    rem = tuple(Polynomial(ring, t, reduce=False) for t in rem_terms)
    return rem, coeffs


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def _buchberger_raw(gens: Sequence[Vec], ring: Ring, morder: ModuleOrder) -> list:
    """Reduced Groebner basis of the span of gens over a polynomial ring."""
    import heapq

    G = []
    leads = []
    for g in gens:
        if not vec_is_zero(g):
            r, _ = divide(g, G, morder, ring)
            if not vec_is_zero(r):
                lead = vec_lead(r, morder)
                G.append(vec_scale(r, ring.field.inv(lead[2])))
                leads.append(vec_lead(G[-1], morder))
    rank1 = len(gens[0]) == 1 if gens else True

    heap = []

    def push_pair(j, i):
        li, lj = leads[i], leads[j]
        lcm = mon_lcm(li[0], lj[0])
        heapq.heappush(heap,
                       ((mon_deg(lcm), morder.key(lcm, li[1]), j, i), j, i))

    done = set()
    for i in range(len(G)):
        for j in range(i):
            if leads[i][1] == leads[j][1]:
                push_pair(j, i)
    while heap:
        _, j, i = heapq.heappop(heap)
        done.add((j, i))
        li, lj = leads[i], leads[j]
        lcm = mon_lcm(li[0], lj[0])
        # product criterion: valid only in ambient rank 1
        if rank1 and mon_mul(li[0], lj[0]) == lcm:
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            lk = leads[k]
            if lk[1] != li[1] or not mon_divides(lk[0], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in done and pjk in done:
                skip = True
                break
        if skip:
            continue
        qi = mon_div(lcm, li[0])
        qj = mon_div(lcm, lj[0])
        s = vec_sub(vec_mul_term(G[i], qi, ring.field.one()),
                    vec_mul_term(G[j], qj, ring.field.one()))
        r, _ = divide(s, G, morder, ring)
        if not vec_is_zero(r):
            lead = vec_lead(r, morder)
            r = vec_scale(r, ring.field.inv(lead[2]))
            new = len(G)
            G.append(r)
            leads.append(vec_lead(r, morder))
            for k in range(new):
                if leads[k][1] == leads[new][1]:
                    push_pair(k, new)
    # interreduce: drop redundant leading terms, then tail-reduce
    leads = [vec_lead(g, morder) for g in G]
    keep = []
    for i, g in enumerate(G):
        mi, pi, _ = leads[i]
        redundant = False
        for j in keep:
            mj, pj, _ = leads[j]
            if pj == pi and mon_divides(mj, mi):
                redundant = True
                break
        if not redundant:
            keep = [j for j in keep
                    if not (leads[j][1] == pi and mon_divides(mi, leads[j][0])
                            and j != i)]
            keep.append(i)
    basis = [G[i] for i in sorted(keep)]
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r, _ = divide(g, others, morder, ring)
        lead = vec_lead(r, morder)
        reduced.append(vec_scale(r, ring.field.inv(lead[2])))
    def sort_key(g):
        m, pos, _ = vec_lead(g, morder)
        return (pos, morder.key(m, pos))

    reduced.sort(key=sort_key)
    return reduced


def poly_groebner_basis(polys: Sequence[Polynomial], ring: Ring) -> list:
    """Reduced GB of an ideal in the ambient polynomial ring."""
    base = ring.polynomial_ring
    gens = [(_to_ring((p,), base))[0] for p in polys]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    morder = ModuleOrder(base.order)
    gb = _buchberger_raw([(g,) for g in gens], base, morder)
    return [g[0] for g in gb]


def poly_normal_form(f: Polynomial, gb: Sequence[Polynomial]) -> Polynomial:
    """Remainder of f on division by gb (computed in the ambient ring)."""
    if not gb:
        return f
    base = gb[0].ring
    v = _to_ring((f,), base)
    r, _ = divide(v, [(g,) for g in gb], ModuleOrder(base.order), base)
    return Polynomial(f.ring, dict(r[0].terms), reduce=False)


# ---------------------------------------------------------------------------
# public module-level interface
# ---------------------------------------------------------------------------

@dataclass
class GroebnerBasis:
    ring: Ring                 # the ring the caller works over (may be a quotient)
    ambient_rank: int
    elements: list             # vectors over `ring`, reduced, monic
    _base: Ring = None         # ambient polynomial ring
    _internal: list = None     # GB over _base, including quotient rows
    _morder: ModuleOrder = None

    def normal_form(self, v: Vec) -> Vec:
        if len(v) != self.ambient_rank:
            raise RingError("ambient rank mismatch")
        w = _to_ring(v, self._base)
        r, _ = divide(w, self._internal, self._morder, self._base)
        return _to_ring(r, self.ring)

    def contains(self, v: Vec) -> bool:
        return vec_is_zero(self.normal_form(v))

    def leading_terms(self) -> list:
        """(monomial, position) pairs, including quotient rows."""
        return [vec_lead(g, self._morder)[:2] for g in self._internal]


def _quotient_rows(ring: Ring, rank: int) -> list:
    base = ring.polynomial_ring
    rows = []
    for q in ring.quotient_gb:
        qb = _to_ring((q,), base)[0]
        for i in range(rank):
            rows.append(tuple(qb if j == i else base.zero() for j in range(rank)))
    return rows


def buchberger(generators: Sequence[Vec], ring: Ring,
               order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by `generators`.

    Deterministic: fixed normal selection strategy (degree, then order,
    then insertion index).
    """
    if not generators:
        raise RingError("no generators (rank unknown); use an explicit zero module")
    rank = len(generators[0])
    base = ring.polynomial_ring
    morder = ModuleOrder(order or ring.order)
    gens = [_to_ring(g, base) for g in generators] + _quotient_rows(ring, rank)
    gens = [g for g in gens if not vec_is_zero(g)]
    if not gens:
        return GroebnerBasis(ring, rank, [], base, [], morder)
    gb = _buchberger_raw(gens, base, morder)
    # elements visible to the caller: internal GB minus pure quotient noise
    visible = []
    for g in gb:
        gq = _reduce_vec(g, ring)
        if not vec_is_zero(gq):
            visible.append(gq)
    return GroebnerBasis(ring, rank, visible, base, gb, morder)


def normal_form(v: Vec, G: GroebnerBasis) -> Vec:
    return G.normal_form(v)


def _tracking_basis(vectors: Sequence[Vec], ring: Ring, rank: int):
    """GB of {v_i + e_i} in F^rank + F^len(vectors) under a block order."""
    base = ring.polynomial_ring
    s = len(vectors)
    gens = []
    for i, v in enumerate(vectors):
        vv = _to_ring(v, base)
        tail = tuple(base.one() if j == i else base.zero() for j in range(s))
        gens.append(vv + tail)
    for row in _quotient_rows(ring, rank):
        gens.append(row + tuple(base.zero() for _ in range(s)))
    morder = ModuleOrder(base.order, split=rank)
    gb = _buchberger_raw(gens, base, morder)
    return gb, morder, base


def syzygies_of(vectors: Sequence[Vec], ring: Ring) -> list:
    """Generators of the syzygy module of `vectors` over `ring`.

    Each result s satisfies sum_i s[i]*vectors[i] == 0 in F^rank over the
    (possibly quotient) ring.
    """
    if not vectors:
        return []
    rank = len(vectors[0])
    s = len(vectors)
    gb, morder, base = _tracking_basis(vectors, ring, rank)
    out = []
    for g in gb:
        upper, lower = g[:rank], g[rank:]
        if vec_is_zero(upper):
            syz = _reduce_vec(lower, ring)
            if not vec_is_zero(syz):
                out.append(syz)
    return out


def lift_through(v: Vec, vectors: Sequence[Vec], ring: Ring) -> Optional[Vec]:
    """Coefficients c with v == sum_i c[i]*vectors[i] over `ring`, else None."""
    if not vectors:
        return None
    rank = len(vectors[0])
    s = len(vectors)
    gb, morder, base = _tracking_basis(vectors, ring, rank)
    w = _to_ring(v, base) + tuple(base.zero() for _ in range(s))
    r, _ = divide(w, gb, morder, base)
    if not vec_is_zero(r[:rank]):
        return None
    return _reduce_vec(vec_neg(r[rank:]), ring)


# ---------------------------------------------------------------------------
# graded dimensions
# ---------------------------------------------------------------------------

def standard_monomial_basis(leading_terms: Sequence, twists: Sequence[int],
                            nvars: int, d: int) -> list:
    """Monomials (m, pos) of internal degree d outside the leading-term span."""
    out = []
    for pos, tw in enumerate(twists):
        dd = d - tw
        if dd < 0:
            continue
        for m in monomials_of_degree(nvars, dd):
            if not any(p == pos and mon_divides(lm, m)
                       for lm, p in leading_terms):
                out.append((m, pos))
    return out


def graded_dim_of_cokernel(G: GroebnerBasis, twists: Sequence[int], d: int) -> int:
    """dim_k of degree-d piece of F/span, F free with the given twists."""
    lts = G.leading_terms()
    return len(standard_monomial_basis(lts, twists, G.ring.nvars, d))
