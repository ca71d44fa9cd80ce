import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cfkinf import (
    CapExceededError,
    NotStandardError,
    PLFunction,
    a1,
    build,
    dual,
    epsilon,
    epsilon_from_a1,
    max_slope,
    report,
    staircase,
    standard_form,
    tau,
    tau_by_cycles,
    unknot_complex,
    upsilon,
    upsilon_brute_oracle,
    upsilon_knot,
)
from cfkinf.checks import random_points

from test_cfk import staircase_exps

SPIKE = PLFunction([(0, 0), (1, -2), (2, 0)])


def brute_tau(C):
    """min over vertical cycles outside the vertical boundaries of their top Alexander grading."""
    gens = C.by_name
    zero = [g for g in C.generators if g.maslov == 0]
    one = [g for g in C.generators if g.maslov == 1]
    vert = {g.name: {a.target for a in C.arrows if a.source == g.name and a.upower == 0}
            for g in C.generators}

    def d(names):
        out = set()
        for n in names:
            out ^= vert[n]
        return frozenset(out)

    def subsets(items):
        for r in range(len(items) + 1):
            yield from itertools.combinations([g.name for g in items], r)

    boundaries = {d(s) for s in subsets(one)}
    return min(max(gens[n].alexander for n in s) for s in subsets(zero)
               if s and not d(s) and frozenset(s) not in boundaries)


@pytest.mark.parametrize("expr,value", [
    ("U", 0), ("T(2,5)", 2), ("T(4,5)", 6), ("-T(2,3)", -1), ("C(2,5;T(2,3))", 4),
    ("T(4,5) # -C(2,5;T(2,3))", 2), ("T(2,3) # T(2,3)", 2),
])
def test_tau_examples(expr, value):
    C = build(expr)
    assert tau(C) == tau_by_cycles(C) == value
    if len(C) <= 40:
        assert brute_tau(C) == value


def test_tau_on_pairs_matches_brute_force(pairs):
    for label, _, _, _, C in pairs:
        if sum(g.maslov == 0 for g in C.generators) <= 14:
            assert tau(C) == brute_tau(C), label


@pytest.mark.parametrize("expr,value", [
    ("U", 0), ("T(2,3)", 1), ("-T(2,3)", -1), ("T(2,3) # -T(2,3)", 0),
    ("T(4,5) # -C(2,5;T(2,3))", 1), ("T(2,3) # -T(2,5)", -1),
])
def test_epsilon_examples(expr, value):
    assert epsilon(build(expr)) == value


def test_epsilon_matches_standard_form_sign(pairs):
    seen = 0
    for label, _, _, _, C in pairs:
        form = standard_form(C)
        if form:
            seen += 1
            expected = 0 if not form.lengths else (1 if form.lengths[0] > 0 else -1)
            assert epsilon(C) == expected, label
    assert seen >= 50


def test_upsilon_examples():
    assert upsilon(build("T(2,5)")) == SPIKE
    assert upsilon(unknot_complex()).is_zero()
    assert upsilon(build("T(2,3)")) == PLFunction([(0, 0), (1, -1), (2, 0)])
    assert upsilon(build("T(4,5)")) == PLFunction(
        [(0, 0), (F(1, 2), -3), (1, -4), (F(3, 2), -3), (2, 0)])


def test_oracle_examples():
    C = build("T(4,5)")
    assert upsilon_brute_oracle(C, 1) == upsilon(C)(1) == -4
    assert upsilon_brute_oracle(unknot_complex(), F(3, 7)) == 0
    with pytest.raises(ValueError):
        upsilon_brute_oracle(C, F(5, 2))


def test_oracle_agrees_on_corpus(atoms, pairs):
    complexes = list(atoms.values()) + [dual(C) for C in atoms.values()]
    complexes += [C for *_, C in pairs if len(C.lattice(0)) <= 24]
    for C in complexes:
        f = upsilon(C)
        for t in random_points():
            assert f(t) == upsilon_brute_oracle(C, t)


def test_cap():
    C = build("T(5,7) # T(6,7)")
    with pytest.raises(CapExceededError, match="upsilon_knot"):
        upsilon(C)
    with pytest.raises(CapExceededError):
        upsilon_brute_oracle(C, 1)
    assert upsilon(C, cap=None) == upsilon_knot("T(5,7) # T(6,7)")


def test_upsilon_knot_additivity():
    assert upsilon_knot("T(2,5) # -T(4,5) # C(2,5;T(2,3))").is_zero()
    assert upsilon_knot("3*(T(2,5) # -T(4,5) # C(2,5;T(2,3)))").is_zero()
    assert upsilon_knot("T(4,5) # -T(4,5)").is_zero()
    assert upsilon_knot("-2*T(2,5)") == SPIKE * -2
    assert upsilon_knot("U") == PLFunction.zero()


def test_a1():
    assert a1(build("T(4,5) # -C(2,5;T(2,3))")) == 2
    assert a1(build("T(2,5)")) == 1
    assert a1(unknot_complex()) == 0
    assert a1(build("-T(2,5)")) == 0
    with pytest.raises(NotStandardError, match="epsilon"):
        a1(build("T(2,3) # T(4,5)"))


def test_epsilon_from_a1():
    assert epsilon_from_a1(1, 2) == 1
    assert epsilon_from_a1(2, 2) == "inconclusive"
    assert epsilon_from_a1(0, 1) == 1


def test_max_slope_examples():
    assert max_slope(SPIKE) == 2
    assert max_slope(PLFunction.zero()) == 0
    assert max_slope(upsilon(build("T(2,5)"))) == 2


def test_report():
    r = report("U")
    assert (r.tau, r.epsilon, r.a1, r.upsilon.is_zero(), r.max_slope) == (0, 0, 0, True, 0)
    doc = report("T(2,5)").to_document()
    assert doc == {"tau": 2, "epsilon": 1, "a1": 1,
                   "upsilon": {"breakpoints": [["0", "0"], ["1", "-2"], ["2", "0"]]},
                   "max_slope": "2"}


@settings(max_examples=25, deadline=None)
@given(staircase_exps(), st.sampled_from([F(1, 3), F(1), F(7, 5), F(2)]))
def test_staircase_upsilon_properties(exps, t):
    C = staircase(exps)
    f = upsilon(C)
    assert f(0) == 0
    assert f == f.reflect()
    assert f.slopes()[0] == -tau(C) == -exps[0]
    assert upsilon(dual(C)) == -f
    assert f(t) == upsilon_brute_oracle(C, t)
