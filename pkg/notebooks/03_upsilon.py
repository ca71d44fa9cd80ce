"""
Upsilon, exactly
================

For each t in [0, 2] the lattice is filtered by (1 - t/2) i + (t/2) j.
Upsilon(t) is -2 times the lowest level at which a cycle generating the
homology appears.  The answer is piecewise linear with rational breakpoints.
"""

from fractions import Fraction

from cfkinf import build, max_slope, upsilon, upsilon_brute_oracle, upsilon_knot

# %%
f = upsilon(build("T(2,5)"))
print("Upsilon T(2,5):", f)
print("slopes:", [str(s) for s in f.slopes()])

# %%
g = upsilon(build("T(4,5)"))
print("Upsilon T(4,5):", g)
print("value at 1/3:", g(Fraction(1, 3)))

# %%
# The brute-force oracle enumerates every generating cycle at a single t.
for t in [Fraction(0), Fraction(1, 3), Fraction(5, 4), Fraction(2)]:
    print(t, g(t), upsilon_brute_oracle(build("T(4,5)"), t))

# %%
# Upsilon is additive, so large sums go summand by summand.
K = "T(2,5) # -T(4,5) # C(2,5;T(2,3))"
h = upsilon_knot(K)
print("Upsilon K:", h, " zero:", h.is_zero())
print("Upsilon 3K zero:", upsilon_knot(f"3*({K})").is_zero())
print("max slope:", max_slope(h))

# %%
# Sampled values for plotting.
for t, v in upsilon_knot("T(3,4) # -T(2,3)").sample(8):
    print(f"{str(t):>4s}  {v}")
