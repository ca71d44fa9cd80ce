"""
Connected sums, mirrors and standard forms
==========================================

Connected sum is the tensor product of complexes and the mirror is the dual.
After a filtered change of basis, the summand carrying the homology is often
a single symmetric chain, recorded by the lengths of its first half.
"""

from cfkinf import build, homology_summand, split_components, simplify, standard_form

# %%
# Staircases are already in standard form.
for expr in ["T(2,3)", "T(2,5)", "T(4,5)", "C(2,5;T(2,3))"]:
    print(f"{expr:16s} {standard_form(build(expr))}")

# %%
# T(4,5) minus the (2,5)-cable of the trefoil has 35 generators.
C = build("T(4,5) # -C(2,5;T(2,3))")
print(len(C), "generators")

# %%
# Simplify and split into components.  One component carries the homology
# and the rest are acyclic.
basis = simplify(C)
sizes = sorted(len(K) for K in split_components(basis.complex))
print("component sizes:", sizes)

# %%
# The homology-carrying component is a three-generator chain.
comp, x0 = homology_summand(C)
for g in comp.generators:
    mark = "  <- x0" if g.name == x0 else ""
    print(f"  {g.name:10s} (M, A) = ({g.maslov}, {g.alexander}){mark}")
print("standard form:", standard_form(comp))

# %%
# Tensor products of staircases can keep diagonal arrows in every basis the
# simplifier finds.  Those are reported rather than forced.
print("T(2,3) # T(4,5):", standard_form(build("T(2,3) # T(4,5)")))
