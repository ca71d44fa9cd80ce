"""
Epsilon and a knot that Upsilon cannot see
==========================================

K = T(2,5) # -T(4,5) # C(2,5;T(2,3)) has Upsilon identically zero, so the
genus bound from Upsilon is useless.  Epsilon still detects that K is not
slice, directly on the 175-generator complex.
"""

import time

from cfkinf import a1, build, epsilon, epsilon_from_a1, tau, tensor

K = "T(2,5) # -T(4,5) # C(2,5;T(2,3))"

# %%
C = build(K)
print(len(C), "generators")
start = time.perf_counter()
print("tau =", tau(C), " epsilon =", epsilon(C), f"({time.perf_counter() - start:.2f}s)")

# %%
# The same answer from a1 values: a1(T(2,5)) = 1 and the summand of
# T(4,5) # -C(2,5;T(2,3)) has a1 = 2.
aK = a1(build("T(2,5)"))
aJ = a1(build("T(4,5) # -C(2,5;T(2,3))"))
print("a1 values:", aK, aJ, "->", epsilon_from_a1(aK, aJ))

# %%
# Epsilon is constant on multiples.  The double has 175^2 generators.
D = tensor(C, C)
start = time.perf_counter()
print(len(D), "generators, epsilon =", epsilon(D), f"({time.perf_counter() - start:.2f}s)")
