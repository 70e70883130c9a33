"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: ranks
are computed by a pure-Python eliminator with row swaps, Hilbert function
values by brute-force monomial containment, and series by naive
convolution over Python ints.
"""

from __future__ import annotations

import random

import pytest

from solvdeg import PolySystem, PolynomialRing, PrimeField
from solvdeg.randsys import random_system


# -- independent oracles -------------------------------------------------------


def oracle_rank(rows: list[list[int]], p: int) -> int:
    """Gaussian elimination with row swaps over GF(p), pure Python."""
    M = [[x % p for x in row] for row in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        r += 1
        if r == nrows:
            break
    return r


def oracle_rref_rows(rows: list[list[int]], p: int) -> set[tuple[int, ...]]:
    """The set of nonzero RREF rows (canonical, order-free)."""
    M = [[x % p for x in row] for row in rows]
    if not M:
        return set()
    nrows, ncols = len(M), len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        r += 1
        if r == nrows:
            break
    return {tuple(row) for row in M[:r]}


def oracle_series(n: int, degrees: list[int], cap: int) -> list[int]:
    """Naive exact coefficients of prod(1 - z^d) / (1 - z)^n up to cap."""
    # numerator
    num = [1]
    for d in degrees:
        out = [0] * min(len(num) + d, cap + 1 + d)
        for i, c in enumerate(num):
            if i < len(out):
                out[i] += c
            if i + d < len(out):
                out[i + d] -= c
        num = out[: cap + 1]
    # divide by (1 - z)^n: n rounds of prefix sums
    coeffs = num + [0] * (cap + 1 - len(num))
    for _ in range(n):
        acc = 0
        for k in range(cap + 1):
            acc += coeffs[k]
            coeffs[k] = acc
    return coeffs


def oracle_standard_monomials(leads: list[tuple[int, ...]], n: int,
                              d: int) -> int:
    """Count degree-d monomials not divisible by any lead (brute force)."""
    import itertools

    count = 0
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 2 - prev)
        if not any(all(l <= e for l, e in zip(lead, exps)) for lead in leads):
            count += 1
    return count


# -- shared corpora --------------------------------------------------------------


def small_random_corpus(count: int = 30, seed: int = 77) -> list[PolySystem]:
    """Small inhomogeneous random systems over {2, 7, 101}."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        p = (2, 7, 101)[i % 3]
        n = (1, 2, 3)[(i // 3) % 3]
        m = n + (i % 3)
        degrees = [rng.choice((2, 3)) for _ in range(max(m, 1))]
        out.append(random_system(p, n, degrees, seed=9000 + i))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[PolySystem]:
    return small_random_corpus()


@pytest.fixture()
def ring_xy() -> PolynomialRing:
    return PolynomialRing(("x", "y"), PrimeField(7))


@pytest.fixture()
def ring_xyz() -> PolynomialRing:
    return PolynomialRing(("x", "y", "z"), PrimeField(7))
