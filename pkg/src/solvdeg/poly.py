"""Multivariate monomials, polynomials and systems under degrevlex.

Exponent vectors are dense tuples (workloads here stay below ~30
variables).  Polynomial terms are kept sorted in strictly descending
degrevlex order so leading-term queries are O(1); addition merges sorted
term lists.  The homogenization variable, when introduced, is always
appended as the degrevlex-least variable, which is what makes saturation
by it readable off a Groebner basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .field import FieldElement, PrimeField


class LengthMismatch(ValueError):
    """Monomials from rings with different variable counts."""


class ZeroPolynomial(ValueError):
    """Operation undefined for the zero polynomial."""


class UnsupportedExtensionField(ValueError):
    """Field equations requested for q different from the base prime."""


@dataclass(frozen=True)
class Monomial:
    """A power product, stored as its exponent vector."""

    exps: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def nvars(self) -> int:
        return len(self.exps)

    def sort_key(self):
        """Key that orders monomials ascending in degrevlex.

        Larger key == larger monomial, so sorted(..., reverse=True) yields
        the descending column order used everywhere in this package.
        """
        return (self.degree, tuple(-e for e in reversed(self.exps)))

    def mul(self, other: "Monomial") -> "Monomial":
        if len(self.exps) != len(other.exps):
            raise LengthMismatch("cannot multiply monomials of different arity")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def div(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    def __repr__(self) -> str:
        return "*".join(
            f"x{i}^{e}" if e > 1 else f"x{i}"
            for i, e in enumerate(self.exps) if e
        ) or "1"


def degrevlex_cmp(a: Monomial, b: Monomial) -> int:
    """Three-way degrevlex comparison: +1 if a > b, -1 if a < b, 0 if equal.

    a > b iff deg a > deg b, or the degrees agree and the last nonzero
    entry of a - b is negative.
    """
    if a.nvars != b.nvars:
        raise LengthMismatch(f"arity {a.nvars} vs {b.nvars}")
    da, db = a.degree, b.degree
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(reversed(a.exps), reversed(b.exps)):
        if x != y:
            return 1 if x < y else -1
    return 0


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All degree-d monomials in n variables, descending degrevlex."""
    out = []
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 2 - prev)
        out.append(Monomial(tuple(exps)))
    out.sort(key=Monomial.sort_key, reverse=True)
    return out


@lru_cache(maxsize=128)
def monomials_up_to(n: int, d: int) -> tuple[Monomial, ...]:
    """All monomials of degree <= d in n variables, descending degrevlex."""
    out: list[Monomial] = []
    for deg in range(d, -1, -1):
        out.extend(monomials_of_degree(n, deg))
    return tuple(out)


class Polynomial:
    """Terms sorted strictly descending in degrevlex, no zero coefficients.

    A polynomial knows its arity and coefficient field even when zero, so
    the zero polynomial of every ring is representable.
    """

    __slots__ = ("terms", "nvars", "field", "_hash")

    def __init__(
        self,
        terms: Iterable[tuple[Monomial, FieldElement]],
        nvars: int,
        field: PrimeField,
    ):
        merged: dict[tuple[int, ...], int] = {}
        for mono, coeff in terms:
            if mono.nvars != nvars:
                raise LengthMismatch("term arity does not match polynomial arity")
            c = int(coeff) % field.p
            if c == 0 and mono.exps not in merged:
                continue
            merged[mono.exps] = (merged.get(mono.exps, 0) + c) % field.p
        cleaned = [
            (Monomial(e), FieldElement(c, field))
            for e, c in merged.items() if c != 0
        ]
        cleaned.sort(key=lambda t: t[0].sort_key(), reverse=True)
        self.terms: tuple[tuple[Monomial, FieldElement], ...] = tuple(cleaned)
        self.nvars = nvars
        self.field = field
        self._hash = None

    # --構造 queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return self.terms[0][0].degree

    @property
    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> FieldElement:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = self.terms[0][0].degree
        return all(m.degree == d for m, _ in self.terms)

    def coefficient(self, mono: Monomial) -> FieldElement:
        for m, c in self.terms:
            if m.exps == mono.exps:
                return c
        return self.field.zero()

    # -- arithmetic --------------------------------------------------------

    def _like(self, terms) -> "Polynomial":
        return Polynomial(terms, self.nvars, self.field)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self._like(list(self.terms) + list(other.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self._like(
            list(self.terms) + [(m, -c) for m, c in other.terms]
        )

    def __neg__(self) -> "Polynomial":
        return self._like([(m, -c) for m, c in self.terms])

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            acc: dict[tuple[int, ...], int] = {}
            p = self.field.p
            for m1, c1 in self.terms:
                v1 = c1.value
                for m2, c2 in other.terms:
                    key = tuple(a + b for a, b in zip(m1.exps, m2.exps))
                    acc[key] = (acc.get(key, 0) + v1 * c2.value) % p
            return self._like(
                (Monomial(e), FieldElement(c, self.field)) for e, c in acc.items()
            )
        if isinstance(other, Monomial):
            return self._like([(m.mul(other), c) for m, c in self.terms])
        if isinstance(other, (FieldElement, int)):
            s = other if isinstance(other, FieldElement) else self.field(other)
            return self._like([(m, c * s) for m, c in self.terms])
        return NotImplemented

    __rmul__ = __mul__

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.leading_coefficient.inverse()
        return self * inv

    def _check(self, other: "Polynomial") -> None:
        if other.nvars != self.nvars:
            raise LengthMismatch("polynomials from different rings")
        if other.field.p != self.field.p:
            raise ValueError("polynomials over different fields")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.field.p == other.field.p
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.field.p, self.terms))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{m}" for m, c in self.terms)


@dataclass(frozen=True)
class PolynomialRing:
    """GF(p)[x_1, ..., x_n] with x_1 > ... > x_n in degrevlex."""

    names: tuple[str, ...]
    modulus: PrimeField

    def __post_init__(self) -> None:
        if len(self.names) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names}")

    @property
    def n(self) -> int:
        return len(self.names)

    def zero(self) -> Polynomial:
        return Polynomial([], self.n, self.modulus)

    def constant(self, c: int) -> Polynomial:
        one = Monomial((0,) * self.n)
        return Polynomial([(one, self.modulus(c))], self.n, self.modulus)

    def variable(self, i: int) -> Polynomial:
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial(
            [(Monomial(tuple(exps)), self.modulus(1))], self.n, self.modulus
        )

    def poly(self, coeffs: dict[tuple[int, ...], int]) -> Polynomial:
        """Build a polynomial from {exponent tuple: integer coefficient}."""
        return Polynomial(
            ((Monomial(e), self.modulus(c)) for e, c in coeffs.items()),
            self.n,
            self.modulus,
        )

    def extend(self, name: str | None = None) -> "PolynomialRing":
        """Append one degrevlex-least variable (used for homogenization)."""
        if name is None:
            name = "t"
            k = 0
            while name in self.names:
                name = f"t{k}"
                k += 1
        elif name in self.names:
            raise ValueError(f"variable {name!r} already in ring")
        return PolynomialRing(self.names + (name,), self.modulus)


@dataclass(frozen=True)
class PolySystem:
    """A polynomial system: ring descriptor plus the equations."""

    ring: PolynomialRing
    polys: tuple[Polynomial, ...]
    asserted_generic_coordinates: bool = False

    def __post_init__(self) -> None:
        for f in self.polys:
            if f.nvars != self.ring.n:
                raise LengthMismatch("system polynomial arity != ring arity")
            if f.field.p != self.ring.modulus.p:
                raise ValueError("system polynomial over a different field")

    @property
    def is_homogeneous(self) -> bool:
        return all(f.is_homogeneous() for f in self.polys)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.polys if not f.is_zero())

    def nonzero(self) -> tuple[Polynomial, ...]:
        return tuple(f for f in self.polys if not f.is_zero())

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)


# -- homogenization and top parts -------------------------------------------


def homogenize(f: Polynomial) -> Polynomial:
    """f^h in one more variable, appended degrevlex-last.

    Every term is padded with a power of the new variable so all terms
    reach deg(f); substituting 1 for the new variable recovers f.
    """
    d = f.degree
    if d < 0:
        return Polynomial([], f.nvars + 1, f.field)
    return Polynomial(
        [(Monomial(m.exps + (d - m.degree,)), c) for m, c in f.terms],
        f.nvars + 1,
        f.field,
    )


def dehomogenize_last(f: Polynomial, value: int = 1) -> Polynomial:
    """Substitute a constant for the last variable (inverse of homogenize)."""
    fld = f.field
    out = []
    for m, c in f.terms:
        scale = pow(value % fld.p, m.exps[-1], fld.p)
        out.append((Monomial(m.exps[:-1]), c * scale))
    return Polynomial(out, f.nvars - 1, fld)


def top_part(f: Polynomial) -> Polynomial:
    """The homogeneous part of highest degree, as a polynomial in the same ring."""
    if f.is_zero():
        raise ZeroPolynomial("top part of the zero polynomial is undefined")
    d = f.degree
    return Polynomial(
        [(m, c) for m, c in f.terms if m.degree == d], f.nvars, f.field
    )


def homogenize_system(F: PolySystem, name: str | None = None) -> PolySystem:
    ring = F.ring.extend(name)
    return PolySystem(
        ring,
        tuple(homogenize(f) for f in F.polys),
        F.asserted_generic_coordinates,
    )


def top_system(F: PolySystem) -> PolySystem:
    return PolySystem(
        F.ring,
        tuple(top_part(f) for f in F.polys if not f.is_zero()),
        F.asserted_generic_coordinates,
    )


def field_equations(ring: PolynomialRing, q: int | None = None) -> list[Polynomial]:
    """The equations x_i^q - x_i for the ring's own prime q = p."""
    p = ring.modulus.p
    if q is not None and q != p:
        raise UnsupportedExtensionField(
            f"field equations for q={q} over GF({p}) are not supported"
        )
    out = []
    for i in range(ring.n):
        hi = [0] * ring.n
        hi[i] = p
        lo = [0] * ring.n
        lo[i] = 1
        out.append(ring.poly({tuple(hi): 1, tuple(lo): -1}))
    return out


# -- normalization -----------------------------------------------------------


def normalize_system(F: PolySystem) -> PolySystem:
    """Equivalent system whose top parts are linearly independent.

    Gaussian elimination runs on the top-part coefficient rows; the full
    combination is subtracted from the full polynomial, and a remainder
    whose degree dropped is re-processed at its new degree.  A nonzero
    constant remainder proves inconsistency and collapses the system to
    the marker {1}.  Degree <= 1 polynomials are kept, never used for
    variable elimination.
    """
    ring = F.ring
    # Echelon rows per degree: lead exponent tuple -> installed polynomial.
    echelon: dict[int, dict[tuple[int, ...], Polynomial]] = {}
    installed: list[Polynomial] = []

    work = list(F.polys)
    work.reverse()  # treat as a stack, preserving input order
    while work:
        f = work.pop()
        while not f.is_zero():
            d = f.degree
            if d == 0:
                # Nonzero constant: the ideal is the whole ring.
                return PolySystem(ring, (ring.constant(1),))
            rows = echelon.setdefault(d, {})
            top_terms = [(m, c) for m, c in f.terms if m.degree == d]
            reduced = False
            for m, c in top_terms:
                g = rows.get(m.exps)
                if g is not None and g.leading_monomial.exps == m.exps:
                    f = f - g * (c / g.leading_coefficient)
                    reduced = True
                    break
            if reduced:
                continue
            # Top part has a lead not yet in the echelon: install.
            rows[f.leading_monomial.exps] = f
            installed.append(f)
            break

    return PolySystem(ring, tuple(installed), F.asserted_generic_coordinates)
