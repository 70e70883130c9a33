"""Monomial order, polynomial structure, homogenization, normalization."""

import random

import pytest

from solvdeg import (
    LengthMismatch,
    Monomial,
    PolySystem,
    Polynomial,
    PolynomialRing,
    PrimeField,
    UnsupportedExtensionField,
    ZeroPolynomial,
    degrevlex_cmp,
    dehomogenize_last,
    field_equations,
    homogenize,
    monomials_of_degree,
    monomials_up_to,
    normalize_system,
    top_part,
)
from solvdeg.randsys import random_polynomial

from conftest import oracle_rank


def brute_cmp(a, b):
    """Direct transcription of the order definition."""
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    diff = [x - y for x, y in zip(a, b)]
    last = next((d for d in reversed(diff) if d != 0), 0)
    if last == 0:
        return 0
    return 1 if last < 0 else -1


def test_degree_one_order():
    x, y, z = Monomial((1, 0, 0)), Monomial((0, 1, 0)), Monomial((0, 0, 1))
    assert degrevlex_cmp(x, y) == 1
    assert degrevlex_cmp(y, z) == 1
    assert degrevlex_cmp(z, x) == -1


def test_degree_two_order_n3():
    expected = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    got = [m.exps for m in monomials_of_degree(3, 2)]
    assert got == expected
    for i, a in enumerate(expected):
        for j, b in enumerate(expected):
            want = 0 if i == j else (1 if i < j else -1)
            assert degrevlex_cmp(Monomial(a), Monomial(b)) == want


def test_mixed_exponent_comparison():
    assert degrevlex_cmp(Monomial((1, 2, 0)), Monomial((2, 0, 1))) == 1


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        degrevlex_cmp(Monomial((1, 2)), Monomial((1, 2, 0)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_order_matches_definition_exhaustively(n):
    monos = [m.exps for d in range(7) for m in monomials_of_degree(n, d)]
    for a in monos:
        for b in monos:
            assert degrevlex_cmp(Monomial(a), Monomial(b)) == brute_cmp(a, b)


def test_order_refines_degree():
    for n in (2, 3, 4):
        for a in monomials_up_to(n, 6):
            for b in monomials_up_to(n, 6):
                if a.degree > b.degree:
                    assert degrevlex_cmp(a, b) == 1


def test_monomials_up_to_counts():
    from math import comb

    for n in (1, 2, 3, 5):
        for d in (0, 1, 2, 4):
            ms = monomials_up_to(n, d)
            assert len(ms) == comb(n + d, n)
            # strictly descending
            for a, b in zip(ms, ms[1:]):
                assert degrevlex_cmp(a, b) == 1


def test_monomial_algebra():
    a, b = Monomial((2, 0, 1)), Monomial((1, 1, 0))
    assert a.mul(b).exps == (3, 1, 1)
    assert b.divides(a.mul(b)) and not b.divides(a)
    assert a.lcm(b).exps == (2, 1, 1)
    assert a.mul(b).div(b) == a


def test_polynomial_normalization(ring_xy):
    f = ring_xy.poly({(1, 0): 3, (0, 1): 0, (0, 0): 9})
    assert [(m.exps, c.value) for m, c in f.terms] == [((1, 0), 3), ((0, 0), 2)]
    # duplicate monomials merge
    F = ring_xy.modulus
    g = Polynomial(
        [(Monomial((1, 0)), F(3)), (Monomial((1, 0)), F(4))], 2, F
    )
    assert g.is_zero()


def test_polynomial_terms_sorted_descending(ring_xy):
    f = ring_xy.poly({(0, 0): 1, (2, 0): 1, (1, 1): 1, (0, 1): 1})
    exps = [m.exps for m, _ in f.terms]
    assert exps == [(2, 0), (1, 1), (0, 1), (0, 0)]
    assert f.degree == 2
    assert f.leading_monomial.exps == (2, 0)


def test_polynomial_arithmetic_roundtrip(ring_xy):
    rng = random.Random(5)
    for _ in range(25):
        f = random_polynomial(ring_xy, 3, rng)
        g = random_polynomial(ring_xy, 2, rng)
        assert (f + g) - g == f
        assert f * g == g * f
        assert (f * g).degree == f.degree + g.degree


def test_homogenize_example(ring_xy):
    f = ring_xy.poly({(2, 0): 1, (0, 1): 1, (0, 0): 1})  # x^2 + y + 1
    h = homogenize(f)
    assert h.nvars == 3
    assert {(m.exps, c.value) for m, c in h.terms} == {
        ((2, 0, 0), 1), ((0, 1, 1), 1), ((0, 0, 2), 1)
    }
    assert h.is_homogeneous()


def test_homogenize_fixed_point(ring_xy):
    f = ring_xy.poly({(2, 0): 1, (1, 1): 1})  # already homogeneous
    h = homogenize(f)
    assert all(m.exps[-1] == 0 for m, _ in h.terms)


def test_homogenize_gap_system(ring_xy):
    polys = [
        ring_xy.poly({(4, 0): 1, (0, 0): -1}),
        ring_xy.poly({(2, 1): 1, (2, 0): -1}),
        ring_xy.poly({(0, 2): 1, (0, 0): -1}),
    ]
    hs = [homogenize(f) for f in polys]
    expect = [
        {((4, 0, 0), 1), ((0, 0, 4), 6)},
        {((2, 1, 0), 1), ((2, 0, 1), 6)},
        {((0, 2, 0), 1), ((0, 0, 2), 6)},
    ]
    for h, e in zip(hs, expect):
        assert {(m.exps, c.value) for m, c in h.terms} == e


def test_homogenize_preserves_terms_and_t1_recovers(ring_xyz):
    rng = random.Random(11)
    for _ in range(30):
        f = random_polynomial(ring_xyz, rng.randrange(1, 5), rng)
        h = homogenize(f)
        assert len(h.terms) == len(f.terms)
        assert sorted(c.value for _, c in h.terms) == sorted(
            c.value for _, c in f.terms
        )
        assert dehomogenize_last(h, 1) == f


def test_top_part_examples(ring_xy):
    f = ring_xy.poly({(2, 0): 1, (0, 1): 1, (0, 0): 1})
    assert top_part(f) == ring_xy.poly({(2, 0): 1})
    assert top_part(ring_xy.poly({(4, 0): 1, (0, 0): -1})) == ring_xy.poly({(4, 0): 1})
    assert top_part(ring_xy.poly({(2, 1): 1, (2, 0): -1})) == ring_xy.poly({(2, 1): 1})
    assert top_part(ring_xy.poly({(0, 2): 1, (0, 0): -1})) == ring_xy.poly({(0, 2): 1})
    homo = ring_xy.poly({(2, 0): 3, (1, 1): 4})
    assert top_part(homo) == homo
    with pytest.raises(ZeroPolynomial):
        top_part(ring_xy.zero())


def test_top_part_is_dehomogenize_at_zero(ring_xyz):
    rng = random.Random(13)
    for _ in range(30):
        f = random_polynomial(ring_xyz, rng.randrange(1, 5), rng)
        assert top_part(f) == dehomogenize_last(homogenize(f), 0)


def test_field_equations():
    R7 = PolynomialRing(("x", "y", "z"), PrimeField(7))
    eqs = field_equations(R7)
    assert [
        {(m.exps, c.value) for m, c in f.terms} for f in eqs
    ] == [
        {((7, 0, 0), 1), ((1, 0, 0), 6)},
        {((0, 7, 0), 1), ((0, 1, 0), 6)},
        {((0, 0, 7), 1), ((0, 0, 1), 6)},
    ]
    R2 = PolynomialRing(("x",), PrimeField(2))
    (f,) = field_equations(R2)
    assert {(m.exps, c.value) for m, c in f.terms} == {((2,), 1), ((1,), 1)}
    R3 = PolynomialRing(("x", "y"), PrimeField(3))
    assert len(field_equations(R3)) == 2
    with pytest.raises(UnsupportedExtensionField):
        field_equations(R7, q=49)


def test_normalize_drops_dependent_top(ring_xy):
    F = PolySystem(ring_xy, (
        ring_xy.poly({(2, 0): 1}),
        ring_xy.poly({(2, 0): 1, (0, 2): 1}),
    ))
    out = normalize_system(F)
    assert [set((m.exps, c.value) for m, c in f.terms) for f in out.polys] == [
        {((2, 0), 1)}, {((0, 2), 1)}
    ]


def test_normalize_detects_inconsistency(ring_xy):
    F = PolySystem(ring_xy, (
        ring_xy.poly({(2, 0): 1, (0, 0): 1}),
        ring_xy.poly({(2, 0): 1, (0, 0): 2}),
    ))
    out = normalize_system(F)
    assert len(out.polys) == 1
    assert out.polys[0] == ring_xy.constant(1)


def test_normalize_reprocesses_remainder_at_lower_degree(ring_xy):
    F = PolySystem(ring_xy, (
        ring_xy.poly({(2, 0): 1}),
        ring_xy.poly({(2, 0): 1, (0, 1): 1}),
    ))
    out = normalize_system(F)
    assert [set((m.exps, c.value) for m, c in f.terms) for f in out.polys] == [
        {((2, 0), 1)}, {((0, 1), 1)}
    ]


def test_normalize_output_tops_full_rank(ring_xyz):
    rng = random.Random(19)
    for trial in range(20):
        polys = tuple(
            random_polynomial(ring_xyz, rng.randrange(1, 4), rng)
            for _ in range(rng.randrange(2, 7))
        )
        out = normalize_system(PolySystem(ring_xyz, polys))
        if not out.polys:
            continue
        # independent rank check on the top-part coefficient rows
        monos = list(monomials_up_to(3, max(f.degree for f in out.polys)))
        col = {m.exps: i for i, m in enumerate(monos)}
        rows = []
        for f in out.polys:
            row = [0] * len(monos)
            for m, c in top_part(f).terms:
                row[col[m.exps]] = c.value
            rows.append(row)
        assert oracle_rank(rows, 7) == len(out.polys)


def test_system_flags(ring_xy):
    hom = PolySystem(ring_xy, (ring_xy.poly({(2, 0): 1, (1, 1): 2}),))
    assert hom.is_homogeneous
    inhom = PolySystem(ring_xy, (ring_xy.poly({(2, 0): 1, (0, 0): 2}),))
    assert not inhom.is_homogeneous
    assert inhom.asserted_generic_coordinates is False


def test_ring_validation():
    with pytest.raises(ValueError):
        PolynomialRing(("x", "x"), PrimeField(7))
    with pytest.raises(ValueError):
        PolynomialRing((), PrimeField(7))
