"""Exact scalar and sparse multivariate polynomial arithmetic.

Everything is exact: coefficients are arbitrary-precision rationals or
elements of a prime field F_p with p < 2^31.  Polynomials are stored in
canonical form (no zero coefficients, one entry per monomial), so
structural equality coincides with mathematical equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union


class RingError(Exception):
    """Raised on ring/order mismatches and malformed ring data."""


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (p == 0) or a prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0:
            if self.p >= 2 ** 31:
                raise RingError("prime must be < 2^31")
            if not _is_prime(self.p):
                raise RingError(f"p must be prime, got {self.p}")

    @property
    def is_rationals(self) -> bool:
        return self.p == 0

    def coerce(self, x) -> Union[Fraction, int]:
        if self.p == 0:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
            raise RingError(f"cannot coerce {x!r} into QQ")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise RingError("denominator divisible by p")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise RingError(f"cannot coerce {x!r} into F_{self.p}")

    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p == 0 else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# monomials and orders
# ---------------------------------------------------------------------------

Monomial = tuple  # tuple of nonnegative ints, one exponent per variable


def mon_deg(m: Monomial) -> int:
    return sum(m)


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_divides(b: Monomial, a: Monomial) -> bool:
    return all(x >= y for x, y in zip(a, b))


def monomials_of_degree(nvars: int, d: int) -> list:
    """All exponent vectors with total degree exactly d."""
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - e):
            out.append((e,) + rest)
    return out


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex (default) or lex; both are global orders."""

    kind: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise RingError(f"unknown order {self.kind!r}")

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        return (mon_deg(m), tuple(-e for e in reversed(m)))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Sparse exact polynomial, canonical form, immutable by convention.

    In quotient rings arithmetic reduces eagerly modulo the precomputed
    reduced Groebner basis of the quotient ideal, so canonical form holds
    there too.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "Ring", terms: dict, reduce: bool = True):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if not ring.field.is_zero(c)}
        if reduce and ring.quotient_gens and self.terms:
            red = ring.reduce(self)
            self.terms = red.terms

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise RingError("zero polynomial has no leading term")
        return max(self.terms, key=self.ring.order.key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mon_deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {mon_deg(m) for m in self.terms}
        return len(degs) <= 1

    def constant_value(self):
        """Coefficient of the constant term."""
        z = (0,) * self.ring.nvars
        return self.terms.get(z, self.ring.field.zero())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = F.add(terms.get(m, F.zero()), c)
        return Polynomial(self.ring, terms, reduce=False)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()},
                          reduce=False)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.ring.field
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mon_mul(m1, m2)
                terms[m] = F.add(terms.get(m, F.zero()), F.mul(c1, c2))
        return Polynomial(self.ring, terms)

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F.coerce(c)
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self.terms.items()},
                          reduce=False)

    def mul_term(self, mon: Monomial, c) -> "Polynomial":
        F = self.ring.field
        return Polynomial(self.ring,
                          {mon_mul(m, mon): F.mul(v, c) for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise RingError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inv(self.leading_coeff()))

    # -- equality / hashing / printing --------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms \
            and self.ring == other.ring

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]),
                      reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.variables, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            neg = False
            if self.ring.field.is_rationals and c < 0:
                neg, c = True, -c
            cs = str(c)
            if factors and cs == "1":
                body = "*".join(factors)
            elif factors:
                body = cs + "*" + "*".join(factors)
            else:
                body = cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# rings and ideals
# ---------------------------------------------------------------------------

class Ring:
    """A = k[x_1..x_m] / J with the standard grading (all weights 1).

    When `quotient_gens` is nonempty a reduced Groebner basis of J is
    computed once at construction and every arithmetic result is reduced
    against it eagerly.
    """

    def __init__(self, field: Field, variables: Sequence[str],
                 order: MonomialOrder = GREVLEX,
                 quotient_gens: Sequence["Polynomial"] = ()):
        self.field = field
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise RingError("duplicate variable names")
        self.order = order
        self.nvars = len(self.variables)
        self.quotient_gens: tuple = ()
        self.quotient_gb: list = []
        if quotient_gens:
            gens = [self._adopt(g) for g in quotient_gens]
            self.quotient_gens = tuple(gens)
            from . import groebner  # cycle broken at call time
            self.quotient_gb = groebner.poly_groebner_basis(gens, self)

    def _adopt(self, g: "Polynomial") -> "Polynomial":
        # re-home a polynomial built over the bare polynomial ring
        return Polynomial(self, dict(g.terms), reduce=False)

    @property
    def polynomial_ring(self) -> "Ring":
        """The ambient polynomial ring (self when there is no quotient)."""
        if not self.quotient_gens:
            return self
        return Ring(self.field, self.variables, self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.field == other.field \
            and self.variables == other.variables and self.order == other.order \
            and tuple(sorted(map(str, self.quotient_gens))) \
            == tuple(sorted(map(str, other.quotient_gens)))

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __str__(self):
        base = f"{self.field}[{','.join(self.variables)}]"
        if self.quotient_gens:
            base += "/(" + ", ".join(str(g) for g in self.quotient_gens) + ")"
        return base

    # -- element constructors ----------------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial(self, {}, reduce=False)

    def one(self) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: self.field.one()}, reduce=False)

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: self.field.coerce(c)})

    def var(self, i: int) -> Polynomial:
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): self.field.one()})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, m: Monomial) -> Polynomial:
        return Polynomial(self, {tuple(m): self.field.one()})

    # -- reduction modulo the quotient ideal --------------------------------

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.quotient_gb:
            return f
        from . import groebner
        return groebner.poly_normal_form(f, self.quotient_gb)

    # -- parsing ------------------------------------------------------------

    _token = re.compile(r"\s*([+-]|\^|\*|\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*)")

    def parse(self, text: str) -> Polynomial:
        """Parse the strict ASCII grammar: `c*x^e*...` terms joined by +/-."""
        pos = 0
        tokens = []
        while pos < len(text):
            m = self._token.match(text, pos)
            if not m:
                if text[pos:].strip() == "":
                    break
                raise RingError(f"bad token at {text[pos:]!r}")
            tokens.append(m.group(1))
            pos = m.end()
        result = self.zero()
        i = 0
        n = len(tokens)
        while i < n:
            sign = self.field.one()
            while i < n and tokens[i] in "+-":
                if tokens[i] == "-":
                    sign = self.field.neg(sign)
                i += 1
            if i >= n:
                raise RingError("dangling sign")
            coeff = sign
            mon = [0] * self.nvars
            expect_factor = True
            while i < n:
                t = tokens[i]
                if t in "+-":
                    break
                if t == "*":
                    i += 1
                    expect_factor = True
                    continue
                if not expect_factor:
                    raise RingError(f"missing operator before {t!r}")
                if re.fullmatch(r"\d+/\d+|\d+", t):
                    coeff = self.field.mul(coeff, self.field.coerce(Fraction(t)))
                    i += 1
                elif t in self.variables:
                    idx = self.variables.index(t)
                    e = 1
                    i += 1
                    if i < n and tokens[i] == "^":
                        i += 1
                        if i >= n or not re.fullmatch(r"\d+", tokens[i]):
                            raise RingError("expected exponent after ^")
                        e = int(tokens[i])
                        i += 1
                    mon[idx] += e
                else:
                    raise RingError(f"unknown variable {t!r}")
                expect_factor = False
            result = result + Polynomial(self, {tuple(mon): coeff})
        return result


@dataclass
class Ideal:
    """Finitely generated ideal, given by generators."""

    ring: Ring
    generators: list

    def __post_init__(self):
        self.generators = [g for g in self.generators if not g.is_zero()]
        for g in self.generators:
            if g.ring != self.ring:
                raise RingError("generator from wrong ring")

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def power(self, n: int) -> "Ideal":
        """a^n, generators deduplicated after normal form."""
        if n < 1:
            raise RingError("power must be >= 1")
        def dedup(lst):
            seen = {}
            for g in lst:
                g = self.ring.reduce(g)
                if not g.is_zero():
                    seen.setdefault(frozenset(g.monic().terms.items()),
                                    g.monic())
            return sorted(seen.values(),
                          key=lambda f: self.ring.order.key(f.leading_monomial()))

        gens = dedup(self.generators)
        for _ in range(n - 1):
            gens = dedup(g * h for g in gens for h in self.generators)
        return Ideal(self.ring, gens)

    def groebner_basis(self) -> list:
        from . import groebner
        return groebner.poly_groebner_basis(list(self.generators), self.ring)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def apply_ring_map(f: Polynomial, target: Ring, images: Sequence[Polynomial]) -> Polynomial:
    """Push f through the ring map sending variable i to images[i]."""
    if len(images) != f.ring.nvars:
        raise RingError("ring map needs one image per variable")
    out = target.zero()
    for m, c in f.terms.items():
        t = target.constant(c if target.field == f.ring.field else c)
        for img, e in zip(images, m):
            if e:
                t = t * img ** e
        out = out + t
    return out


def truncate(f: Polynomial, a: Ideal, N: int) -> Polynomial:
    """Normal form of f modulo a^N: the precision-N representative."""
    if N < 1:
        raise RingError("precision must be >= 1")
    from . import groebner
    gb = a.power(N).groebner_basis()
    return groebner.poly_normal_form(f, gb)
