import json

import pytest
from hypothesis import given, settings, strategies as st

from cfkinf import (
    Arrow,
    BifilteredComplex,
    ComplexFormatError,
    Generator,
    LatticeElement,
    direct_sum,
    dual,
    dumps,
    from_document,
    is_isomorphic,
    loads,
    staircase,
    tensor,
    to_document,
    unknot_complex,
    validate,
)
from cfkinf.cfk import arrow_kind


@st.composite
def staircase_exps(draw):
    """Symmetric strictly decreasing exponent lists of odd length."""
    gaps = draw(st.lists(st.integers(1, 3), min_size=0, max_size=3))
    top = []
    level = 0
    for g in reversed(gaps):
        level += g
        top.append(level)
    top.reverse()
    return tuple(top) + (0,) + tuple(-e for e in reversed(top))


def test_trefoil_staircase_by_hand():
    C = staircase((1, 0, -1))
    assert [(g.name, g.maslov, g.alexander) for g in C.generators] == [
        ("x0", 0, 1), ("x1", -1, 0), ("x2", -2, -1)]
    assert C.arrows == {Arrow("x1", "x0", 1), Arrow("x1", "x2", 0)}
    assert arrow_kind(C, Arrow("x1", "x0", 1)) == "horizontal"
    assert arrow_kind(C, Arrow("x1", "x2", 0)) == "vertical"
    assert validate(C).ok


def test_lattice_positions():
    g = Generator("x", -3, 1)
    el = LatticeElement.in_grading(g, 1)
    assert el.translate == -2 and el.position == (2, 3) and el.grading == 1
    assert LatticeElement.in_grading(g, 0) is None


@pytest.mark.parametrize("arrow,message", [
    (Arrow("a", "b", 1), "grading law"),
    (Arrow("b", "a", -1), "negative"),
])
def test_validate_reports(arrow, message):
    C = BifilteredComplex((Generator("a", 0, 0), Generator("b", -1, 0)), frozenset({arrow}))
    report = validate(C)
    assert not report and message in str(report)


def test_validate_filtration_and_d_squared():
    up = BifilteredComplex((Generator("a", 0, 0), Generator("b", -1, 1)),
                           frozenset({Arrow("a", "b", 0)}))
    assert "raises the Alexander" in str(validate(up))
    chain = BifilteredComplex(
        (Generator("a", 0, 0), Generator("b", -1, -1), Generator("c", -2, -2)),
        frozenset({Arrow("a", "b", 0), Arrow("b", "c", 0)}))
    assert "d^2" in str(validate(chain))


def test_constructor_rejects_bad_names():
    with pytest.raises(ValueError):
        BifilteredComplex((Generator("a", 0, 0), Generator("a", 0, 0)))
    with pytest.raises(ValueError):
        BifilteredComplex((Generator("a", 0, 0),), frozenset({Arrow("a", "z", 0)}))


def test_tensor_and_dual_sizes():
    A, B = staircase((1, 0, -1)), staircase((2, 1, 0, -1, -2))
    T = tensor(A, B)
    assert len(T) == 15 and validate(T).ok
    D = dual(A)
    assert [(g.maslov, g.alexander) for g in D.generators] == [(0, -1), (1, 0), (2, 1)]
    assert Arrow("x0*", "x1*", 1) in D.arrows


def test_unknot_is_tensor_unit():
    A = staircase((2, 1, 0, -1, -2))
    assert is_isomorphic(tensor(A, unknot_complex()), A)
    assert not is_isomorphic(A, dual(A))


def test_document_roundtrip():
    C = tensor(staircase((1, 0, -1)), dual(staircase((1, 0, -1))))
    assert loads(dumps(C)) == C
    assert from_document(json.loads(json.dumps(to_document(C)))) == C


@pytest.mark.parametrize("doc,location", [
    ({"generators": [], "arrows": []}, "$.generators"),
    ({"generators": [{"name": "a", "maslov": 0.5, "alexander": 0}], "arrows": []},
     "$.generators[0].maslov"),
    ({"generators": [{"name": "a", "maslov": True, "alexander": 0}], "arrows": []},
     "$.generators[0].maslov"),
    ({"generators": [{"name": "a", "maslov": 0, "alexander": 0}],
      "arrows": [{"from": "a", "to": "q", "upower": 0}]}, "$.arrows[0].to"),
    ({"generators": [{"name": "a", "maslov": 0, "alexander": 0},
                     {"name": "a", "maslov": 0, "alexander": 0}], "arrows": []},
     "$.generators[1].name"),
    ({"generators": [{"name": "a", "maslov": 0, "alexander": 0},
                     {"name": "b", "maslov": -1, "alexander": -1}],
      "arrows": [{"from": "a", "to": "b", "upower": 0}, {"from": "a", "to": "b", "upower": 0}]},
     "$.arrows[1]"),
])
def test_document_errors(doc, location):
    with pytest.raises(ComplexFormatError) as info:
        from_document(doc)
    assert info.value.location == location


def test_document_invalid_complex_and_bad_json():
    doc = {"generators": [{"name": "a", "maslov": 0, "alexander": 0},
                          {"name": "b", "maslov": 0, "alexander": 0}],
           "arrows": [{"from": "a", "to": "b", "upower": 0}]}
    with pytest.raises(ComplexFormatError, match="invalid complex"):
        from_document(doc)
    with pytest.raises(ComplexFormatError) as info:
        loads('{"generators": [')
    assert info.value.location.startswith("line 1")


def test_direct_sum_and_subcomplex():
    A = staircase((1, 0, -1), "a")
    B = staircase((1, 0, -1), "b")
    S = direct_sum(A, B)
    assert len(S) == 6 and S.subcomplex(["a0", "a1", "a2"]) == A


@given(staircase_exps())
def test_staircases_are_valid(exps):
    C = staircase(exps)
    assert validate(C).ok
    assert len(C) == len(exps)
    assert [g.alexander for g in C.generators] == list(exps)


@settings(max_examples=30, deadline=None)
@given(staircase_exps(), staircase_exps(), st.booleans())
def test_tensor_squares_to_zero(e1, e2, mirror):
    B = staircase(e2, "y")
    C = tensor(staircase(e1), dual(B) if mirror else B)
    assert validate(C).ok
    assert len(C) == len(e1) * len(e2)


@given(staircase_exps())
def test_dual_is_involution(exps):
    C = staircase(exps)
    assert is_isomorphic(dual(dual(C)), C)
    assert validate(dual(C)).ok
