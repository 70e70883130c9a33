"""Polynomial division, S-polynomials, and a Buchberger reference engine.

The Buchberger implementation here is the validation oracle for the
Macaulay-matrix solver: a different algorithm over the same polynomial
arithmetic.  It is a plain textbook loop with the coprime-lead and chain
criteria, selection by smallest lcm, and a final inter-reduction pass.

Division works on a dict of exponent tuples with a lazy max-heap over the
term order, so reducing the large dense polynomials the solver produces
does not re-sort term lists at every step.
"""

from __future__ import annotations

import heapq

from .field import FieldElement
from .poly import Monomial, PolySystem, Polynomial


def _heap_key(exps: tuple[int, ...]) -> tuple:
    """Min-heap key that pops the degrevlex-largest monomial first."""
    return (-sum(exps),) + tuple(reversed(exps))


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def normal_form(f: Polynomial, basis: list[Polynomial]) -> Polynomial:
    """Remainder of f under multivariate division by `basis`.

    The largest reducible term is always attacked first, so no term of
    the result is divisible by any leading monomial of the basis.
    """
    if f.is_zero():
        return f
    p = f.field.p
    divisors = [
        (g.leading_monomial.exps, g.leading_coefficient.value, g.terms)
        for g in basis if not g.is_zero()
    ]
    coeff: dict[tuple[int, ...], int] = {}
    heap: list[tuple] = []
    for m, c in f.terms:
        coeff[m.exps] = c.value
        heapq.heappush(heap, (_heap_key(m.exps), m.exps))
    rem: dict[tuple[int, ...], int] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = coeff.get(e, 0)
        if c == 0:
            continue
        hit = None
        for lm, lc, terms in divisors:
            if _divides(lm, e):
                hit = (lm, lc, terms)
                break
        if hit is None:
            rem[e] = c
            del coeff[e]
            continue
        lm, lc, terms = hit
        factor = c * pow(lc, -1, p) % p
        shift = tuple(a - b for a, b in zip(e, lm))
        for m, mc in terms:
            key = tuple(a + b for a, b in zip(m.exps, shift))
            old = coeff.get(key, 0)
            new = (old - factor * mc.value) % p
            if new:
                coeff[key] = new
                if old == 0:
                    heapq.heappush(heap, (_heap_key(key), key))
            else:
                coeff.pop(key, None)
    fld = f.field
    return Polynomial(
        ((Monomial(e), FieldElement(c, fld)) for e, c in rem.items()),
        f.nvars, fld,
    )


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial, g.leading_monomial
    lcm = lf.lcm(lg)
    uf = lcm.div(lf)
    ug = lcm.div(lg)
    return (f * uf) * g.leading_coefficient - (g * ug) * f.leading_coefficient


def buchberger(polys: list[Polynomial]) -> list[Polynomial]:
    """A Groebner basis (not reduced) of the given generators."""
    basis = [f.monic() for f in polys if not f.is_zero()]
    if not basis:
        return []
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}

    def lcm_of(i: int, j: int) -> Monomial:
        return basis[i].leading_monomial.lcm(basis[j].leading_monomial)

    while pairs:
        i, j = min(pairs, key=lambda ij: (lcm_of(*ij).sort_key(), ij))
        pairs.discard((i, j))
        li = basis[i].leading_monomial
        lj = basis[j].leading_monomial
        lcm = li.lcm(lj)
        # Coprime leads: the S-polynomial reduces to zero automatically.
        if lcm.degree == li.degree + lj.degree:
            continue
        # Chain criterion: some third element divides the lcm and both
        # side pairs have already been treated.
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if basis[k].leading_monomial.divides(lcm):
                ik = (max(i, k), min(i, k))
                jk = (max(j, k), min(j, k))
                if ik not in pairs and jk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if r.is_zero():
            continue
        new = len(basis)
        basis.append(r.monic())
        pairs.update((new, t) for t in range(new))
    return basis


def reduce_basis(basis: list[Polynomial]) -> list[Polynomial]:
    """The reduced basis: minimal leads, reduced tails, monic, sorted.

    Output is ordered by ascending degrevlex leading monomial, which makes
    reduced bases directly comparable.
    """
    polys = [g.monic() for g in basis if not g.is_zero()]
    polys.sort(key=lambda g: g.leading_monomial.sort_key())
    minimal: list[Polynomial] = []
    for g in polys:
        if not any(h.leading_monomial.divides(g.leading_monomial) for h in minimal):
            minimal.append(g)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1 :]
            r = normal_form(g, others).monic()
            if r != g:
                minimal[i] = r
                changed = True
    minimal.sort(key=lambda g: g.leading_monomial.sort_key())
    return minimal


def buchberger_oracle(F: PolySystem) -> list[Polynomial]:
    """Reduced degrevlex Groebner basis by Buchberger's algorithm."""
    return reduce_basis(buchberger([f for f in F.polys if not f.is_zero()]))


def is_groebner_basis(basis: list[Polynomial],
                      generators: list[Polynomial] | None = None) -> bool:
    """Verify the Buchberger criterion by explicit division.

    Pairs are pruned with the coprime-lead and chain criteria (the same
    treated-pair bookkeeping as the construction loop, which keeps the
    pruning sound).  With `generators` given, also checks that every
    generator reduces to zero against the basis.
    """
    gs = [g for g in basis if not g.is_zero()]
    if not gs:
        return generators is None or all(f.is_zero() for f in generators)
    if generators is not None:
        for f in generators:
            if not normal_form(f, gs).is_zero():
                return False
    n = len(gs)
    lms = [g.leading_monomial for g in gs]
    pairs = {(i, j) for i in range(n) for j in range(i)}
    order = sorted(pairs, key=lambda ij: (lms[ij[0]].lcm(lms[ij[1]]).sort_key(), ij))
    for i, j in order:
        pairs.discard((i, j))
        lcm = lms[i].lcm(lms[j])
        if lcm.degree == lms[i].degree + lms[j].degree:
            continue
        skip = False
        for k in range(n):
            if k in (i, j):
                continue
            if lms[k].divides(lcm):
                ik = (max(i, k), min(i, k))
                jk = (max(j, k), min(j, k))
                if ik not in pairs and jk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        if not normal_form(s_polynomial(gs[i], gs[j]), gs).is_zero():
            return False
    return True
