"""Exact dense linear algebra over GF(p) on top of numpy.

The central object is ``RowReducer``, an incremental eliminator that never
permutes rows: every incoming row is replaced by itself plus a combination
of other rows, so a row's tag (multiplier, source polynomial) stays
meaningful for the Macaulay solver.  In ``always_rref`` mode the stored
pivot rows are kept in reduced row echelon form at all times and can be
read back; in cascade mode (rank-only workloads) the pivot rows are kept
as a chain of internally reduced blocks, which roughly halves the work.

All arithmetic is exact.  For small p the working matrices are float64 and
the block updates run through BLAS, valid because every intermediate value
is an integer strictly below 2**53 (see the _float_ok gates).  For large p
the code falls back to int64 with chunked inner products.  Modular
reduction of float arrays avoids hardware fmod, which is pathologically
slow for large quotients, in favour of an exact floor-multiply.
"""

from __future__ import annotations

import numpy as np

_FLOAT_EXACT = 2**53
_INT_SAFE = 2**62
_LEAF = 32


def _float_ok(p: int, inner: int) -> bool:
    """True if float64 sums of `inner` products of residues mod p are exact."""
    return (p - 1) ** 2 * (inner + 2) < _FLOAT_EXACT


def mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Exact in-place reduction mod p of an array of integral values.

    Exactness: |a| < 2**53 - p is guaranteed by the callers' gates, the
    rounded reciprocal perturbs the true quotient by less than 1 (by
    exactly 0 for p = 2), and one correction pass repairs the off-by-one.
    """
    if a.dtype == np.float64:
        q = a * (1.0 / p)
        np.floor(q, out=q)
        q *= p
        a -= q
        a -= p * (a >= p)
        a += p * (a < 0)
        return a
    np.mod(a, p, out=a)
    return a


def _fix_negative(a: np.ndarray, p: int) -> np.ndarray:
    """Map values in (-p, p) to [0, p), in place."""
    if a.dtype == np.float64:
        a += p * (a < 0)
    else:
        np.mod(a, p, out=a)
    return a


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Exact (A @ B) mod p for matrices of residues in [0, p)."""
    inner = A.shape[1]
    if inner == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=A.dtype)
    if A.dtype == np.float64 and _float_ok(p, inner):
        res = A @ B
        return mod_p(res, p)
    A64 = A.astype(np.int64, copy=False)
    B64 = B.astype(np.int64, copy=False)
    chunk = max(1, _INT_SAFE // ((p - 1) ** 2 + 1))
    if chunk >= inner:
        res = (A64 @ B64) % p
    else:
        res = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for lo in range(0, inner, chunk):
            hi = min(lo + chunk, inner)
            res = (res + A64[:, lo:hi] @ B64[lo:hi, :]) % p
    return res.astype(A.dtype, copy=False)


def _sub_matmul_mod(X: np.ndarray, A: np.ndarray, B: np.ndarray, p: int) -> None:
    """In place: X := (X - A @ B) mod p, with one fused reduction."""
    if A.shape[1] == 0:
        return
    if X.dtype == np.float64 and _float_ok(p, A.shape[1] + 1):
        X -= A @ B
        mod_p(X, p)
    else:
        X -= matmul_mod(A, B, p)
        _fix_negative(X, p)


class RowReducer:
    """Incremental no-swap row reduction over GF(p)."""

    def __init__(self, p: int, ncols: int, always_rref: bool = True,
                 batch: int = 512):
        self.p = p
        self.ncols = ncols
        self.batch = batch
        self.always_rref = always_rref
        self.dtype = np.float64 if _float_ok(p, ncols) else np.int64
        # Deferral of mod inside a leaf accumulates up to _LEAF products.
        self._defer = self.dtype == np.float64 and _float_ok(p, _LEAF + 2)
        # Rank never exceeds ncols; allocating the full pivot store up
        # front keeps views stable.  Only truly huge matrices grow lazily.
        self._cap = ncols if ncols <= 8192 else 1024
        self._P = np.zeros((self._cap, ncols), dtype=self.dtype)
        self.pivot_cols: list[int] = []
        self._pc_arr = np.zeros(0, dtype=np.intp)
        self._blocks: list[tuple[int, int]] = []
        self.rows_seen = 0

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    def _grow(self, need: int) -> None:
        if need <= self._cap:
            return
        cap = self._cap
        while cap < need:
            cap *= 2
        cap = max(min(cap, self.ncols), need)
        P = np.zeros((cap, self.ncols), dtype=self.dtype)
        P[: self.rank] = self._P[: self.rank]
        self._P = P
        self._cap = cap

    # -- reading back --------------------------------------------------------

    def pivot_row(self, slot: int) -> np.ndarray:
        """Content of a pivot slot (fully reduced in always_rref mode)."""
        return self._P[slot].copy()

    def pivot_rows(self) -> np.ndarray:
        return self._P[: self.rank]

    def reduce_vector(self, v: np.ndarray) -> np.ndarray:
        """Normal form of one row against the current pivot rows."""
        w = np.array(v, dtype=self.dtype).reshape(1, -1)
        mod_p(w, self.p)
        self._cascade(w)
        return w[0]

    # -- feeding -------------------------------------------------------------

    def add_rows(self, rows: np.ndarray) -> list[int | None]:
        """Feed rows; returns one pivot slot id (or None) per input row."""
        out: list[int | None] = []
        for lo in range(0, rows.shape[0], self.batch):
            out.extend(self._add_batch(rows[lo : lo + self.batch]))
        return out

    def _cascade(self, B: np.ndarray) -> None:
        """Clear every existing pivot column from the rows of B, in place."""
        for s, e in self._blocks:
            cols = self._pc_arr[s:e]
            coeffs = B[:, cols]
            if np.any(coeffs):
                _sub_matmul_mod(B, coeffs, self._P[s:e], self.p)

    def _add_batch(self, rows: np.ndarray) -> list[int | None]:
        B = np.array(rows, dtype=self.dtype)
        mod_p(B, self.p)
        self.rows_seen += B.shape[0]
        before = self.rank
        self._cascade(B)
        slots = self._process_new(B)
        after = self.rank
        if after == before:
            return slots
        self._pc_arr = np.asarray(self.pivot_cols, dtype=np.intp)
        new_cols = self._pc_arr[before:after]
        if self.always_rref:
            if before:
                old = self._P[:before]
                coeffs = old[:, new_cols]
                if np.any(coeffs):
                    _sub_matmul_mod(old, coeffs, self._P[before:after], self.p)
            self._blocks = [(0, after)]
        else:
            self._blocks.append((before, after))
        return slots

    def _process_new(self, B: np.ndarray) -> list[int | None]:
        """Recursively extract pivots from B (already clear of old pivots).

        On return the pivots created by this call are mutually reduced:
        each one's pivot column is zero in all the others.
        """
        n = B.shape[0]
        p = self.p
        if n <= _LEAF:
            slots: list[int | None] = []
            for i in range(n):
                row = B[i]
                mod_p(row, p)
                nz = np.nonzero(row)[0]
                if nz.size == 0:
                    slots.append(None)
                    continue
                c = int(nz[0])
                inv = pow(int(row[c]), -1, p)
                if inv != 1:
                    row *= inv
                    mod_p(row, p)
                rest = B[i + 1 :]
                if rest.shape[0]:
                    f = rest[:, c] % p
                    if np.any(f):
                        rest -= np.outer(f, row)
                        if not self._defer:
                            mod_p(rest, p)
                slot = self.rank
                self._grow(slot + 1)
                self._P[slot] = row
                self.pivot_cols.append(c)
                slots.append(slot)
            # Mutual reduction: row i may still contain pivot columns of
            # later rows (unit upper triangular pattern in creation order).
            created = [s for s in slots if s is not None]
            if len(created) > 1:
                N = self._P[created[0] : created[-1] + 1]
                cols = np.asarray(self.pivot_cols[created[0] :], dtype=np.intp)
                T = N[:, cols].copy()
                self._solve_unit_upper(T, N)
            return slots

        h = n // 2
        lo_before = self.rank
        slots = self._process_new(B[:h])
        lo_after = self.rank
        if lo_after > lo_before:
            # Views into _P are taken after any call that may grow it.
            cols = np.asarray(self.pivot_cols[lo_before:lo_after], dtype=np.intp)
            N1 = self._P[lo_before:lo_after]
            rest = B[h:]
            coeffs = rest[:, cols] % p
            if np.any(coeffs):
                _sub_matmul_mod(rest, coeffs, N1, p)
        slots.extend(self._process_new(B[h:]))
        hi_after = self.rank
        if lo_after > lo_before and hi_after > lo_after:
            # Clear the second half's pivot columns from the first half.
            cols2 = np.asarray(self.pivot_cols[lo_after:hi_after], dtype=np.intp)
            N1 = self._P[lo_before:lo_after]
            N2 = self._P[lo_after:hi_after]
            coeffs = N1[:, cols2]
            if np.any(coeffs):
                _sub_matmul_mod(N1, coeffs, N2, p)
        return slots

    def _solve_unit_upper(self, T: np.ndarray, N: np.ndarray) -> None:
        """In place: N := T^{-1} N for unit upper triangular T (mod p)."""
        p = self.p
        b = T.shape[0]
        if b <= _LEAF:
            for i in range(b - 2, -1, -1):
                coeffs = T[i, i + 1 :].reshape(1, -1)
                if np.any(coeffs):
                    _sub_matmul_mod(N[i].reshape(1, -1), coeffs, N[i + 1 :], p)
            return
        h = b // 2
        self._solve_unit_upper(T[h:, h:], N[h:])
        C = np.ascontiguousarray(T[:h, h:])
        if np.any(C):
            _sub_matmul_mod(N[:h], C, N[h:], p)
        self._solve_unit_upper(T[:h, :h], N[:h])


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Rank of an integer matrix mod p (exact)."""
    M = np.asarray(M)
    if M.size == 0:
        return 0
    eng = RowReducer(p, M.shape[1], always_rref=False)
    eng.add_rows(M)
    return eng.rank
