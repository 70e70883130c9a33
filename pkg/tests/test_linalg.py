"""The GF(p) elimination engine against pure-Python oracles."""

import numpy as np
import pytest

from solvdeg.linalg import RowReducer, matmul_mod, mod_p, rank_mod_p

from conftest import oracle_rank, oracle_rref_rows

PRIMES = [2, 3, 5, 7, 101, 7919, 65537, 2**31 - 1]


def random_low_rank(rng, p, rows, cols):
    k = int(rng.integers(1, min(rows, cols) + 1))
    A = rng.integers(0, p, (rows, k)).astype(object)
    B = rng.integers(0, p, (k, cols)).astype(object)
    return np.array(((A @ B) % p).tolist(), dtype=np.int64)


@pytest.mark.parametrize("p", PRIMES)
def test_rank_matches_oracle(p):
    rng = np.random.default_rng(p)
    for _ in range(12):
        rows = int(rng.integers(1, 50))
        cols = int(rng.integers(1, 40))
        M = random_low_rank(rng, p, rows, cols)
        expected = oracle_rank(M.tolist(), p)
        assert rank_mod_p(M, p) == expected
        eng = RowReducer(p, cols, always_rref=True, batch=16)
        eng.add_rows(M)
        assert eng.rank == expected


@pytest.mark.parametrize("p", [2, 7, 101, 7919])
def test_rref_content_is_canonical(p):
    rng = np.random.default_rng(100 + p)
    for _ in range(10):
        rows = int(rng.integers(1, 40))
        cols = int(rng.integers(1, 30))
        M = random_low_rank(rng, p, rows, cols)
        eng = RowReducer(p, cols, always_rref=True, batch=8)
        eng.add_rows(M)
        got = {tuple(int(v) for v in eng.pivot_row(s)) for s in range(eng.rank)}
        assert got == oracle_rref_rows(M.tolist(), p)


def test_rref_structure_and_membership():
    p = 7
    rng = np.random.default_rng(42)
    M = rng.integers(0, p, (45, 25))
    eng = RowReducer(p, 25, always_rref=True, batch=7)
    slots = eng.add_rows(M)
    P = eng.pivot_rows()
    pc = eng.pivot_cols
    # pivot columns form an identity across pivot rows
    assert np.allclose(P[:, pc], np.eye(len(pc)))
    # each pivot row leads at its pivot column
    for s, c in enumerate(pc):
        assert np.nonzero(P[s])[0][0] == c
    # every input row lies in the row space
    for row in M:
        assert not np.any(eng.reduce_vector(row))
    # slots map: non-None slots count the rank
    assert sum(1 for s in slots if s is not None) == eng.rank


def test_incremental_feeding_matches_bulk():
    p = 101
    rng = np.random.default_rng(9)
    M = random_low_rank(rng, p, 60, 35)
    bulk = RowReducer(p, 35)
    bulk.add_rows(M)
    inc = RowReducer(p, 35, batch=5)
    for i in range(0, 60, 7):
        inc.add_rows(M[i : i + 7])
    assert inc.rank == bulk.rank
    assert sorted(inc.pivot_cols) == sorted(bulk.pivot_cols)
    got_b = {tuple(int(v) for v in bulk.pivot_row(s)) for s in range(bulk.rank)}
    got_i = {tuple(int(v) for v in inc.pivot_row(s)) for s in range(inc.rank)}
    assert got_b == got_i


def test_zero_and_duplicate_rows():
    p = 7
    eng = RowReducer(p, 5)
    rows = np.array([[0, 0, 0, 0, 0], [1, 2, 3, 4, 5], [2, 4, 6, 1, 4],
                     [1, 2, 3, 4, 5]])
    slots = eng.add_rows(rows)
    assert slots[0] is None
    assert slots[1] is not None
    assert slots[2] is not None
    assert slots[3] is None  # duplicate reduces to zero
    assert eng.rank == 2


def test_determinism():
    p = 7919
    rng = np.random.default_rng(1)
    M = rng.integers(0, p, (80, 50))
    a = RowReducer(p, 50)
    a.add_rows(M)
    b = RowReducer(p, 50)
    b.add_rows(M)
    assert a.pivot_cols == b.pivot_cols
    assert np.array_equal(a.pivot_rows(), b.pivot_rows())


def test_mod_p_edge_values():
    p = 7919
    vals = np.array([
        0.0, 1.0, p - 1.0, float(p), float(p) * 12345,
        -1.0, -float(p), float((p - 1) ** 2 * 500),
        float(2**53 - p - 1), -float(2**53 - p - 1),
    ])
    got = mod_p(vals.copy(), p)
    expect = np.array([v % p for v in vals.astype(object).tolist()], dtype=float)
    assert np.array_equal(got, expect)
    # p = 2: the reciprocal is exact
    vals2 = np.array([float(2**52 + 1), float(2**52), -3.0, 5.0])
    assert np.array_equal(mod_p(vals2.copy(), 2), np.array([1.0, 0.0, 1.0, 1.0]))


def test_matmul_mod_large_prime_int_path():
    p = 2**31 - 1
    rng = np.random.default_rng(4)
    A = rng.integers(0, p, (8, 6)).astype(np.int64)
    B = rng.integers(0, p, (6, 5)).astype(np.int64)
    got = matmul_mod(A, B, p)
    exact = (A.astype(object) @ B.astype(object)) % p
    assert np.array_equal(got.astype(object), exact)


def test_mod_p_randomized_against_python_int():
    rng = np.random.default_rng(77)
    for p in (2, 3, 7, 101, 7919, 40009):
        bound = 2**53 - p - 1
        vals = rng.integers(-bound, bound, 4000).astype(np.float64)
        got = mod_p(vals.copy(), p)
        expect = np.array([int(v) % p for v in vals], dtype=np.float64)
        assert np.array_equal(got, expect), p
