"""The built-in regression suite behind `solvdeg verify-paper`.

Each item recomputes a published or hand-derived value and compares
exactly; the two long solving-degree measurements can be skipped with
fast=True.  Items print one line each with timing, and the suite returns
overall success.
"""

from __future__ import annotations

import time
from typing import Callable, TextIO

from .analyze import (
    degree_of_regularity,
    max_groebner_degree,
    regularity_from_hilbert,
    semiregular_test,
    t_nonzerodivisor,
)
from .bounds import (
    aci_bound,
    egh_bound,
    inhomogeneous_bound,
    macaulay_bound,
    macaulay_expansion,
    macaulay_shift,
    many_equations_bound,
    quadratic_regularity,
    regularity_from_series,
)
from .macaulay import solve
from .poly import top_system
from .presets import (
    gap_quartic_system,
    pair_product_system,
    triple_product_system,
)
from .tabledata import reference_entries


def _oracle_equivalence_sample() -> tuple[object, object]:
    import random as _random

    from .groebner import buchberger_oracle
    from .randsys import random_system

    rng = _random.Random(424242)
    bad = []
    for i in range(24):
        p = (2, 7, 101)[i % 3]
        n = (2, 3)[i % 2]
        degrees = [rng.choice((2, 3)) for _ in range(n + i % 2)]
        F = random_system(p, n, degrees, seed=8800 + i)
        if list(solve(F).basis) != buchberger_oracle(F):
            bad.append(i)
    return bad, []


def _semiregular_sample() -> tuple[object, object]:
    from .randsys import random_system

    bad = []
    for n in (6, 8):
        expect = reference_entries()[(2, n)]
        for s in range(3):
            F = random_system(7919, n, [2] * (n + 2), seed=12000 + 10 * n + s,
                              homogeneous=True)
            if not (semiregular_test(F, "crypto")
                    and regularity_from_hilbert(F) == expect):
                bad.append((n, s))
    return bad, []


def _items(fast: bool) -> list[tuple[str, Callable[[], tuple[object, object]]]]:
    """(name, thunk) pairs; each thunk returns (got, expected)."""
    gap = gap_quartic_system()

    items: list[tuple[str, Callable[[], tuple[object, object]]]] = [
        ("series regularity r(12,10)",
         lambda: (regularity_from_series(10, [2] * 12), 6)),
        ("series regularity r(14,11)",
         lambda: (regularity_from_series(11, [2] * 14), 5)),
        ("closed form r(n+2,10)",
         lambda: (quadratic_regularity(12, 10), 6)),
        ("closed form r(n+3,11)",
         lambda: (quadratic_regularity(14, 11), 5)),
        ("closed form r(n+4,26)",
         lambda: (quadratic_regularity(30, 26), 11)),
        ("n+1 quadrics bound, n=9",
         lambda: (aci_bound(9, [2] * 10), 6)),
        ("n+1 cubics bound, n=5",
         lambda: (aci_bound(5, [3] * 6), 7)),
        ("large-m cubic bound, n=7",
         lambda: (many_equations_bound(7, 3), 9)),
        ("large-m quadric bound, n=20",
         lambda: (many_equations_bound(20, 2), 8)),
        ("large-m quadric bound, n=2",
         lambda: (many_equations_bound(2, 2), 2)),
        ("inhomogeneous quadrics m=n+1, n=6",
         lambda: (inhomogeneous_bound(7, 6, [2] * 7), 8)),
        ("inhomogeneous cubics m=n+1, n=4",
         lambda: (inhomogeneous_bound(5, 4, [3] * 5), 11)),
        ("inhomogeneous quadrics m=n+3, n=11",
         lambda: (inhomogeneous_bound(14, 11, [2] * 14), 6)),
        ("Macaulay bound, 3 quadrics in 3 vars",
         lambda: (macaulay_bound(3, [2, 2, 2]), 4)),
        ("Macaulay expansion 8 wrt 3",
         lambda: (macaulay_expansion(8, 3).terms, ((4, 3), (3, 2), (1, 1)))),
        ("Macaulay expansion 10 wrt 3",
         lambda: (macaulay_expansion(10, 3).terms, ((5, 3), (1, 2), (0, 1)))),
        ("Macaulay shift 8^(3)",
         lambda: (macaulay_shift(8, 3), 2)),
        ("Macaulay shift 10^(3)",
         lambda: (macaulay_shift(10, 3), 5)),
        ("EGH m=n recovers Macaulay bound (n=10)",
         lambda: (egh_bound(10, 10), 11)),
        ("EGH edge sweeps, n <= 100",
         lambda: (
             [n for n in range(2, 101)
              if egh_bound(n, n) != n + 1
              or egh_bound(n * (n + 1) // 2, n) != 2],
             [],
         )),
        ("closed form == series, m-n in 2..5, n <= 200",
         lambda: (
             [(r, n) for r in (2, 3, 4, 5) for n in range(2, 201)
              if quadratic_regularity(n + r, n)
              != regularity_from_series(n, [2] * (n + r))],
             [],
         )),
        ("n+1 quadrics match floor((n+1)/2)+1, n <= 200",
         lambda: (
             [n for n in range(2, 201)
              if regularity_from_series(n, [2] * (n + 1)) != (n + 1) // 2 + 1],
             [],
         )),
        ("reference grid, every printed entry",
         lambda: (
             sum(1 for (k, n), v in reference_entries().items()
                 if regularity_from_series(n, [2] * (n + k)) != v),
             0,
         )),
        ("solver == Buchberger on 24 seeded systems",
         _oracle_equivalence_sample),
        ("gap system: degree of regularity",
         lambda: (degree_of_regularity(gap), 4)),
        ("gap system: top parts crypto semi-regular",
         lambda: (semiregular_test(top_system(gap), "crypto"), True)),
        ("gap system: regularity of top ideal",
         lambda: (regularity_from_hilbert(top_system(gap)), 4)),
        ("gap system: homogenization variable divides zero",
         lambda: (t_nonzerodivisor(gap), False)),
        ("gap system: solving degree",
         lambda: (solve(gap).solving_degree, 5)),
        ("gap system: reduced basis",
         lambda: (
             tuple(str(g) for g in solve(gap).basis),
             ("1*x1 + 6*1", "1*x0^4 + 6*1"),
         )),
        ("gap system: max basis degree",
         lambda: (max_groebner_degree(gap), 4)),
        ("triple-product system: degree of regularity",
         lambda: (degree_of_regularity(triple_product_system()), 15)),
        ("pair-product system: degree of regularity",
         lambda: (degree_of_regularity(pair_product_system()), 13)),
    ]
    if not fast:
        def triple_sd():
            rep = solve(triple_product_system())
            return (rep.solving_degree > 15, True,
                    f"measured sd = {rep.solving_degree}, d_reg = 15")

        def pair_sd():
            rep = solve(pair_product_system())
            return (rep.solving_degree > 13, True,
                    f"measured sd = {rep.solving_degree}, d_reg = 13")

        items.append(("triple-product system: solving degree exceeds d_reg",
                      triple_sd))
        items.append(("pair-product system: solving degree exceeds d_reg",
                      pair_sd))
        items.append(("random quadric systems match tabulated regularity",
                      _semiregular_sample))
    return items


def run_verification(fast: bool = False, out: TextIO | None = None) -> bool:
    import sys

    out = out or sys.stdout
    ok = True
    items = _items(fast)
    for name, thunk in items:
        t0 = time.time()
        note = ""
        try:
            result = thunk()
            if len(result) == 3:
                got, expected, note = result
            else:
                got, expected = result
            passed = got == expected
        except Exception as exc:  # pragma: no cover - defensive reporting
            got, expected, passed = f"error: {exc}", "no error", False
        dt = time.time() - t0
        status = "PASS" if passed else "FAIL"
        detail = f"  [{note}]" if note else ""
        if not passed:
            detail += f"  (got {got!r}, expected {expected!r})"
        out.write(f"[{status}] {name} ({dt:.2f}s){detail}\n")
        ok = ok and passed
    out.write(("all checks passed" if ok else "FAILURES present") + "\n")
    return ok
