"""A tour of the closed-form and series bounds.

Run:  python demos/bounds_tour.py
"""

from solvdeg import (
    aci_bound,
    egh_bound,
    egh_bound_weil,
    inhomogeneous_bound,
    macaulay_bound,
    macaulay_expansion,
    macaulay_shift,
    many_equations_bound,
    quadratic_regularity,
    regularity_from_series,
    semiregular_series,
)

print("=== Quotient series of semi-regular sequences ===")
print()
print("The Hilbert series of a semi-regular quotient is the truncation of")
print("prod(1 - z^d_i) / (1 - z)^n after its initial positive run.")
for n, degrees in [(2, [2, 2]), (2, [2, 2, 2]), (3, [2, 2, 2, 2])]:
    s = semiregular_series(n, degrees)
    print(f"  n={n}, degrees={degrees}:  coefficients {list(s.coeffs)}")
print()

print("=== Regularity = first non-positive coefficient ===")
print()
print("For overdetermined systems the raw series eventually goes")
print("non-positive; that degree bounds the whole computation.")
for n, m in [(10, 12), (11, 14), (20, 23)]:
    r = regularity_from_series(n, [2] * m)
    print(f"  {m} quadrics in {n} variables: regularity {r}")
print()

print("=== Exact closed forms for m = n + 2 .. n + 5 quadrics ===")
print()
print("The ceiling-of-radical formulas are evaluated by integer sign")
print("search, never floating point, so boundary cases cannot round wrong.")
for n in (10, 26, 100, 500):
    row = [quadratic_regularity(n + r, n) for r in (2, 3, 4, 5)]
    print(f"  n={n:>3}: r(n+2..n+5, n) = {row}")
print()

print("=== Degree-bound family summary ===")
print()
n = 9
print(f"  Macaulay bound, {n} quadrics in {n} vars: "
      f"{macaulay_bound(n, [2] * n)}")
print(f"  n+1 quadrics ({n} vars): {aci_bound(n, [2] * (n + 1))}")
print(f"  n+1 cubics   ({n} vars): {aci_bound(n, [3] * (n + 1))}")
print(f"  many quadrics, any m >= n+5: {many_equations_bound(n, 2)}")
print(f"  many cubics, any m >= n+1:   {many_equations_bound(n, 3)}")
print(f"  inhomogeneous, m=n+1 quadrics: "
      f"{inhomogeneous_bound(n + 1, n, [2] * (n + 1))}")
print()

print("=== Macaulay expansions and the EGH growth bound ===")
print()
for ell, d in [(8, 3), (10, 3), (25, 4)]:
    e = macaulay_expansion(ell, d)
    pretty = " + ".join(f"C({a},{j})" for a, j in e.terms)
    print(f"  {ell} = {pretty};   {ell}^({d}) = {macaulay_shift(ell, d)}")
print()
print("The EGH window turns a quadric count straight into a degree bound:")
for n, m in [(10, 10), (10, 20), (10, 55)]:
    print(f"  m={m:>2} quadrics in n={n}: bound {egh_bound(m, n)}")
print(f"  scalar restriction, n=2, d=3, 15 quadrics: "
      f"{egh_bound_weil(2, 3, 15)}")
