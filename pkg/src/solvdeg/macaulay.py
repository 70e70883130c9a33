"""The Macaulay-matrix solving algorithm, instrumented.

The solver builds the degree-d matrix of a system (columns all monomials
of degree <= d in descending degrevlex, rows the multiples of the input
polynomials), row-reduces without permuting rows, appends multiples of
every polynomial whose leading term fell, repeats to a fixpoint, and only
then decides whether the pivot rows reveal a Groebner basis.  The least
degree at which they do is the measured solving degree.

The stopping test is done outside the matrix, by polynomial division of
the S-polynomials against the candidate basis plus membership of the
inputs; that keeps the reported solving degree equal to the degree of the
matrices actually eliminated.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .bounds import Underdetermined, macaulay_bound
from .field import FieldElement, PrimeField
from .groebner import buchberger_oracle, is_groebner_basis, reduce_basis
from .linalg import RowReducer
from .poly import Monomial, PolySystem, Polynomial, monomials_up_to

__all__ = [
    "MacaulayMatrix",
    "DegreeTrace",
    "SolveReport",
    "DegreeCapExceeded",
    "SolveTimeout",
    "build_matrix",
    "rref_no_swap",
    "solve",
    "buchberger_oracle",
]


class DegreeCapExceeded(RuntimeError):
    """The degree cap was reached without finding a Groebner basis."""

    def __init__(self, message: str, trace: tuple):
        super().__init__(message)
        self.trace = trace


class SolveTimeout(RuntimeError):
    """The cooperative deadline expired; carries the partial trace."""

    def __init__(self, message: str, trace: tuple):
        super().__init__(message)
        self.trace = trace


@dataclass(frozen=True)
class DegreeTrace:
    """What happened at one degree: matrix size, rank, fall count."""

    degree: int
    rows: int
    cols: int
    rank: int
    degree_falls: int


@dataclass(frozen=True)
class SolveReport:
    basis: tuple[Polynomial, ...]
    solving_degree: int
    max_gb_degree: int
    trace: tuple[DegreeTrace, ...]
    stop_reason: str


@dataclass(frozen=True)
class MacaulayMatrix:
    """Degree-d Macaulay matrix with row tags (multiplier, source index)."""

    degree: int
    modulus: int
    columns: tuple[Monomial, ...]
    multipliers: tuple[Monomial, ...]
    sources: tuple[int, ...]
    data: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape


class _DegreeGrid:
    """Column bookkeeping for one ambient degree.

    Monomials are packed into integer keys (base d+1 positional code) so a
    product u*m is just a key sum, and column lookup of a whole term array
    is one vectorized binary search.
    """

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.cols: tuple[Monomial, ...] = monomials_up_to(n, d)
        self.ncols = len(self.cols)
        base = d + 1
        self.packable = base ** n < 2**62
        if self.packable:
            self._weights = np.array(
                [base**i for i in range(n)], dtype=np.int64
            )
            keys = (
                np.array([m.exps for m in self.cols], dtype=np.int64)
                @ self._weights
            )
            self._order = np.argsort(keys)
            self._sorted = keys[self._order]
        else:
            self._index = {m.exps: i for i, m in enumerate(self.cols)}

    def key(self, exps: tuple[int, ...]) -> int:
        return int(np.dot(np.array(exps, dtype=np.int64), self._weights))

    def lookup_keys(self, keys: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self._sorted, keys)
        return self._order[pos]

    def col_of(self, exps: tuple[int, ...]) -> int:
        if self.packable:
            return int(self.lookup_keys(np.array([self.key(exps)]))[0])
        return self._index[exps]


class _Source:
    """A polynomial prepared for fast row building at one degree."""

    def __init__(self, f: Polynomial, grid: _DegreeGrid):
        self.degree = f.degree
        if grid.packable:
            mat = np.array([m.exps for m, _ in f.terms], dtype=np.int64)
            self.keys = mat @ grid._weights
        else:
            self.exps = [m.exps for m, _ in f.terms]
        self.coeffs = np.array([c.value for _, c in f.terms], dtype=np.float64)


def _multipliers(n: int, dmax: int, include_one: bool) -> list[Monomial]:
    """Monomials of degree <= dmax in ascending degrevlex."""
    ms = list(monomials_up_to(n, dmax))
    ms.reverse()
    if not include_one:
        ms = [m for m in ms if not m.is_one()]
    return ms


class _Elimination:
    """One degree of the algorithm: feed rows, chase degree falls."""

    def __init__(self, polys: list[Polynomial], d: int, p: int,
                 deadline: float | None):
        self.d = d
        self.p = p
        self.deadline = deadline
        n = polys[0].nvars
        self.grid = _DegreeGrid(n, d)
        self.engine = RowReducer(p, self.grid.ncols, always_rref=True)
        self.tag_of_slot: dict[int, int] = {}
        self.rows_fed = 0
        self.fall_events = 0
        self._buffer: list[tuple[np.ndarray, np.ndarray, int]] = []
        self._seen_falls: set[bytes] = set()
        for f in polys:
            src = _Source(f, self.grid)
            for u in _multipliers(n, d - src.degree, include_one=True):
                self._queue_product(src, u)
        self._flush()
        self._chase_falls()

    def _check_deadline(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SolveTimeout("solve deadline expired", ())

    # row building -----------------------------------------------------------

    def _queue_product(self, src: _Source, u: Monomial) -> None:
        grid = self.grid
        if grid.packable:
            ukey = grid.key(u.exps)
            cols = grid.lookup_keys(src.keys + ukey)
            tag = int(cols[0])
        else:
            cols = np.array(
                [grid._index[tuple(a + b for a, b in zip(e, u.exps))]
                 for e in src.exps],
                dtype=np.intp,
            )
            tag = int(cols[0])
        self._buffer.append((cols, src.coeffs, tag))
        if len(self._buffer) >= 512:
            self._flush()

    def _flush(self) -> None:
        if not self._buffer:
            return
        self._check_deadline()
        block = np.zeros((len(self._buffer), self.grid.ncols), dtype=np.float64)
        tags = []
        for i, (cols, coeffs, tag) in enumerate(self._buffer):
            block[i, cols] = coeffs
            tags.append(tag)
        self._buffer.clear()
        slots = self.engine.add_rows(block)
        self.rows_fed += len(tags)
        for slot, tag in zip(slots, tags):
            if slot is not None:
                self.tag_of_slot[slot] = tag

    # degree falls -----------------------------------------------------------

    def _chase_falls(self) -> None:
        grid, engine, d = self.grid, self.engine, self.d
        n = grid.n
        while True:
            self._check_deadline()
            before_rows = self.rows_fed
            for slot in range(engine.rank):
                c = engine.pivot_cols[slot]
                if c <= self.tag_of_slot[slot]:
                    continue  # leading term did not strictly drop
                mono = grid.cols[c]
                if mono.degree >= d:
                    continue
                content = engine.pivot_row(slot)
                fp = content.tobytes()
                if fp in self._seen_falls:
                    continue
                self._seen_falls.add(fp)
                self.fall_events += 1
                fallen = _vector_source(content, grid)
                for u in _multipliers(n, d - mono.degree, include_one=False):
                    self._queue_product(fallen, u)
            self._flush()
            if self.rows_fed == before_rows:
                return


def _vector_source(content: np.ndarray, grid: _DegreeGrid) -> _Source:
    """Wrap a reduced matrix row as a buildable source polynomial."""
    src = _Source.__new__(_Source)
    nz = np.nonzero(content)[0]
    src.degree = grid.cols[int(nz[0])].degree
    if grid.packable:
        mat = np.array([grid.cols[int(i)].exps for i in nz], dtype=np.int64)
        src.keys = mat @ grid._weights
    else:
        src.exps = [grid.cols[int(i)].exps for i in nz]
    src.coeffs = content[nz].astype(np.float64)
    return src


def _vector_to_poly(content: np.ndarray, grid: _DegreeGrid,
                    fld: PrimeField) -> Polynomial:
    nz = np.nonzero(content)[0]
    terms = [(grid.cols[int(i)], FieldElement(int(content[int(i)]), fld))
             for i in nz]
    return Polynomial(terms, grid.n, fld)


def _extract_reduced_basis(elim: _Elimination, fld: PrimeField) -> list[Polynomial]:
    """Pivot rows with minimal leading terms, inter-reduced."""
    engine, grid = elim.engine, elim.grid
    leads = sorted(
        ((grid.cols[c], slot) for slot, c in enumerate(engine.pivot_cols)),
        key=lambda t: t[0].sort_key(),
    )
    kept: list[tuple[Monomial, int]] = []
    for mono, slot in leads:
        if not any(km.divides(mono) for km, _ in kept):
            kept.append((mono, slot))
    polys = [_vector_to_poly(engine.pivot_row(slot), grid, fld)
             for _, slot in kept]
    return reduce_basis(polys)


# -- public operations ---------------------------------------------------------


def build_matrix(F: PolySystem, d: int) -> MacaulayMatrix:
    """The degree-d Macaulay matrix of F, rows tagged (multiplier, source)."""
    polys = list(F.polys)
    degs = [f.degree for f in polys if not f.is_zero()]
    if degs and d < max(degs):
        raise ValueError(f"degree {d} below the largest input degree {max(degs)}")
    n = F.ring.n
    grid = _DegreeGrid(n, d)
    mults: list[Monomial] = []
    sources: list[int] = []
    rows: list[np.ndarray] = []
    for j, f in enumerate(polys):
        if f.is_zero():
            continue
        for u in _multipliers(n, d - f.degree, include_one=True):
            row = np.zeros(grid.ncols, dtype=np.int64)
            for m, c in f.terms:
                row[grid.col_of(m.mul(u).exps)] = c.value
            mults.append(u)
            sources.append(j)
            rows.append(row)
    data = (np.vstack(rows) if rows
            else np.zeros((0, grid.ncols), dtype=np.int64))
    return MacaulayMatrix(d, F.ring.modulus.p, grid.cols,
                          tuple(mults), tuple(sources), data)


def rref_no_swap(M: MacaulayMatrix) -> MacaulayMatrix:
    """Reduced row echelon form without row permutation.

    Every elementary step adds a multiple of another row or rescales, so
    tags stay attached to their rows: row k comes out zero exactly when
    m_i f_j depends on the rows before it, and otherwise keeps the pivot
    at the leading column of m_i f_j reduced against those rows.
    """
    engine = RowReducer(M.modulus, len(M.columns), always_rref=True)
    slots = engine.add_rows(M.data)
    out = np.zeros_like(M.data)
    for k, slot in enumerate(slots):
        if slot is not None:
            out[k] = engine.pivot_row(slot).astype(M.data.dtype)
    return MacaulayMatrix(M.degree, M.modulus, M.columns,
                          M.multipliers, M.sources, out)


def solve(F: PolySystem, *, max_degree: int | None = None,
          stop: str = "spair_check", apriori_bound: int | None = None,
          timeout: float | None = None) -> SolveReport:
    """Run the degree-by-degree elimination until a basis is certified.

    stop="spair_check" (default): at each degree, extract the candidate
    basis and certify it by S-polynomial division plus membership of the
    inputs.  stop="apriori": run the elimination up to `apriori_bound`
    and return that degree's basis without certification.
    """
    polys = [f for f in F.polys if not f.is_zero()]
    if not polys:
        raise ValueError("cannot solve a system with no nonzero polynomials")
    if stop not in ("spair_check", "apriori"):
        raise ValueError(f"unknown stopping criterion {stop!r}")
    p = F.ring.modulus.p
    fld = F.ring.modulus
    d0 = max(f.degree for f in polys)
    deadline = None if timeout is None else time.monotonic() + timeout

    if stop == "apriori":
        if apriori_bound is None:
            raise ValueError("apriori mode needs apriori_bound")
        if apriori_bound < d0:
            raise ValueError("apriori bound below the largest input degree")
        end = apriori_bound
    else:
        if max_degree is None:
            degrees = [f.degree for f in polys]
            try:
                max_degree = macaulay_bound(F.ring.n + 1, degrees)
            except Underdetermined:
                max_degree = 30
            max_degree = max(max_degree, d0)
        end = max_degree

    trace: list[DegreeTrace] = []
    for d in range(d0, end + 1):
        try:
            elim = _Elimination(polys, d, p, deadline)
        except SolveTimeout:
            raise SolveTimeout(
                f"solve timed out at degree {d}", tuple(trace)
            ) from None
        trace.append(DegreeTrace(
            degree=d, rows=elim.rows_fed, cols=elim.grid.ncols,
            rank=elim.engine.rank, degree_falls=elim.fall_events,
        ))
        if stop == "apriori":
            if d == end:
                basis = _extract_reduced_basis(elim, fld)
                return SolveReport(
                    basis=tuple(basis),
                    solving_degree=d,
                    max_gb_degree=max(g.degree for g in basis),
                    trace=tuple(trace),
                    stop_reason="apriori_bound",
                )
            continue
        basis = _extract_reduced_basis(elim, fld)
        if is_groebner_basis(basis, polys):
            return SolveReport(
                basis=tuple(basis),
                solving_degree=d,
                max_gb_degree=max(g.degree for g in basis),
                trace=tuple(trace),
                stop_reason="spair_check",
            )
    raise DegreeCapExceeded(
        f"no Groebner basis found through degree {end}", tuple(trace)
    )
