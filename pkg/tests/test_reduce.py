import pytest
from hypothesis import given, settings, strategies as st

from cfkinf import (
    Arrow,
    BifilteredComplex,
    Generator,
    build,
    cancel_zero_arrows,
    check_global_homology,
    direct_sum,
    dual,
    homology_summand,
    is_isomorphic,
    simplify,
    split_components,
    staircase,
    standard_form,
    tensor,
    validate,
    vertically_simplify,
)
from cfkinf.invariants import epsilon, tau, upsilon
from cfkinf.reduce import VerticalHomologyError, Workspace

from test_cfk import staircase_exps


def box(prefix="b"):
    """An acyclic square: d a = U b + c, d b = d', d c = U d'."""
    g = [Generator(f"{prefix}a", 0, 0), Generator(f"{prefix}b", 1, 0),
         Generator(f"{prefix}c", -1, -1), Generator(f"{prefix}d", 0, -1)]
    a = {Arrow(f"{prefix}a", f"{prefix}b", 1), Arrow(f"{prefix}a", f"{prefix}c", 0),
         Arrow(f"{prefix}b", f"{prefix}d", 0), Arrow(f"{prefix}c", f"{prefix}d", 1)}
    return BifilteredComplex(tuple(g), frozenset(a))


def test_box_is_acyclic_and_valid():
    B = box()
    assert validate(B).ok
    assert check_global_homology(B).status == "acyclic"
    assert str(check_global_homology(staircase((1, 0, -1)))) == \
        "free of rank 1 with generator in grading 0"


def test_cancel_zero_arrows_by_hand():
    # x -> y is a zero arrow.  Cancelling it toggles w -> z (present, so it
    # disappears) and drops k -> x.
    g = (Generator("x", 0, 0), Generator("y", -1, 0), Generator("w", 0, 1),
         Generator("z", -1, -1), Generator("k", 1, 2))
    arrows = {Arrow("x", "y", 0), Arrow("w", "y", 0), Arrow("x", "z", 0), Arrow("w", "z", 0),
              Arrow("k", "x", 0), Arrow("k", "w", 0)}
    C = BifilteredComplex(g, frozenset(arrows))
    assert validate(C).ok
    R = cancel_zero_arrows(C)
    assert [n.name for n in R.generators] == ["w", "z", "k"]
    assert R.arrows == {Arrow("k", "w", 0)}
    assert check_global_homology(R) == check_global_homology(C)
    assert R.is_reduced() and not C.is_reduced()


def test_split_components_reassembles():
    C = direct_sum(staircase((1, 0, -1)), box())
    parts = split_components(C)
    assert [len(p) for p in parts] == [3, 4]
    assert is_isomorphic(direct_sum(*parts), C)


def test_non_knot_complexes_rejected():
    with pytest.raises(VerticalHomologyError):
        vertically_simplify(box())
    with pytest.raises(VerticalHomologyError):
        tau(direct_sum(staircase((1, 0, -1), "a"), staircase((1, 0, -1), "b")))


def test_add_refuses_unfiltered_change():
    ws = Workspace(staircase((1, 0, -1)))
    with pytest.raises(ValueError, match="not filtered"):
        ws.add("x2", "x0")


@pytest.mark.parametrize("expr,form", [
    ("U", "[]"), ("T(2,3)", "[1]"), ("T(2,5)", "[1, 1]"), ("T(4,5)", "[1, 3, 2]"),
    ("C(2,5;T(2,3))", "[1, 3]"), ("-T(2,5)", "[-1, -1]"),
    ("T(4,5) # -T(4,5)", "[]"), ("T(2,3) # -T(2,5)", "[-1]"),
])
def test_standard_forms(expr, form):
    assert str(standard_form(build(expr))) == form


def test_summand_chain():
    comp, x0 = homology_summand(build("T(4,5) # -C(2,5;T(2,3))"))
    g = {n.name: n for n in comp.generators}
    assert (g[x0].maslov, g[x0].alexander) == (0, 2)
    assert sorted((n.maslov, n.alexander) for n in comp.generators) == [(-4, -2), (-3, 0), (0, 2)]
    (y,) = [n for n in comp.generators if n.maslov == -3]
    assert {(a.source, a.target, a.upower) for a in comp.arrows} == {
        (y.name, x0, 2), (y.name, next(n for n in g if g[n].maslov == -4), 0)}


def test_not_standard_is_reported():
    form = standard_form(build("T(2,3) # T(4,5)"))
    assert not form and "diagonal" in str(form)


@given(staircase_exps())
def test_staircase_standard_form_is_exponent_differences(exps):
    m = len(exps) // 2
    form = standard_form(staircase(exps))
    assert form.lengths == tuple(exps[k] - exps[k + 1] for k in range(m))


@settings(max_examples=25, deadline=None)
@given(staircase_exps(), staircase_exps(), st.booleans())
def test_simplification_preserves_invariants(e1, e2, mirror):
    B = staircase(e2, "y")
    C = tensor(staircase(e1), dual(B) if mirror else B)
    S = simplify(C)
    assert validate(S.complex).ok
    assert check_global_homology(S.complex) == check_global_homology(C)
    assert check_global_homology(cancel_zero_arrows(C)) == check_global_homology(C)
    assert tau(S.complex) == tau(C) == S.complex.generator(S.distinguished).alexander
    assert epsilon(S.complex) == epsilon(C)
    if len(C.lattice(0)) <= 24:
        assert upsilon(S.complex) == upsilon(C)
    # The homology summand carries all of it.
    comp, x0 = homology_summand(C)
    assert tau(comp) == tau(C) and epsilon(comp) == epsilon(C)
    rest = [K for K in split_components(S.complex) if x0 not in K.by_name]
    assert all(check_global_homology(K).status == "acyclic" for K in rest)


def test_pair_corpus_simplifies_validly(pairs):
    for label, _, _, _, C in pairs:
        S = simplify(C)
        assert validate(S.complex).ok, label
        assert check_global_homology(S.complex).is_knot_like, label
