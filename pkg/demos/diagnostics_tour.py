"""Degree of regularity vs solving degree, and why the gap appears.

Run:  python demos/diagnostics_tour.py        (about half a minute)
"""

from solvdeg import (
    analyze_system,
    degree_of_regularity,
    hilbert_function_profile,
    semiregular_test,
    solve,
    t_nonzerodivisor,
    top_system,
)
from solvdeg.presets import (
    gap_quartic_system,
    pair_product_system,
    triple_product_system,
)

print("=== The small gap system ===")
F = gap_quartic_system()
rep = analyze_system(F)
print(f"degree of regularity:    {rep.d_reg}")
print(f"Hilbert function of top parts: {rep.hilbert_function}")
print(f"top parts semi-regular:  {semiregular_test(top_system(F), 'crypto')}")
print(f"homogenization variable a nonzerodivisor? {rep.t_nonzerodivisor}")
print(f"measured solving degree: {solve(F).solving_degree}")
print()
print("The top parts are as nice as can be (cryptographic semi-regular,")
print("regularity 4), yet the solving degree is 5.  The obstruction is the")
print("homogenized ideal: the homogenization variable divides zero there,")
print("so the regularity of the top parts does not control the")
print("computation on the affine system.")
print()

print("=== The two product systems (field equations included) ===")
for name, make, dreg in [
    ("triple products, 23 polynomials", triple_product_system, 15),
    ("pairwise products, 18 polynomials", pair_product_system, 13),
]:
    F = make()
    d = degree_of_regularity(F)
    rep = solve(F)
    print(f"{name}:")
    print(f"  degree of regularity {d} (expected {dreg}), "
          f"measured solving degree {rep.solving_degree}, "
          f"largest basis degree {rep.max_gb_degree}")
print()
print("Both gaps are strict: a degree-of-regularity estimate would")
print("undersell the actual elimination work by several degrees.")
print()

print("=== Hilbert functions by rank ===")
T = top_system(gap_quartic_system())
print("top ideal of the gap system, HF by per-degree rank:",
      hilbert_function_profile(T, 5))
