"""
Alexander polynomials and staircases
====================================

An L-space knot is determined, as far as knot Floer homology goes, by its
Alexander polynomial.  The coefficients alternate +1, -1, ..., +1 and the
exponents give the corners of a staircase.
"""

from cfkinf import cable_alexander, staircase, staircase_exponents, torus_alexander, validate

# %%
# Torus knots.  The symmetrized polynomial of T(4,5):
delta = torus_alexander(4, 5)
print("Delta T(4,5) =", delta)
print("Delta(1) =", delta(1))

# %%
# Cables of L-space knots stay in the family when the cabling slope is large
# enough.  The (2,5)-cable of the trefoil:
cable = cable_alexander(2, 5, torus_alexander(2, 3))
print("Delta C(2,5;T(2,3)) =", cable)

# %%
# The exponents, read from the top, are the staircase corners.
exps = staircase_exponents(cable)
print("exponents:", exps)

# %%
# Build the staircase.  Odd generators have a horizontal arrow to the previous
# generator and a vertical arrow to the next one.
C = staircase(exps)
for g in C.generators:
    print(f"  {g.name}: M = {g.maslov:3d}, A = {g.alexander:3d}")
for a in sorted(C.arrows):
    print(f"  d {a.source} contains U^{a.upower} {a.target}")
print("valid:", validate(C).ok)

# %%
# A polynomial without the alternating shape is refused.
try:
    staircase_exponents(torus_alexander(2, 3) ** 2)
except ValueError as err:
    print("refused:", err)
