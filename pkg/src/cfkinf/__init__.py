"""Exact knot Floer concordance invariants for sums of torus knots and their cables.

Complexes are built from staircases (one per L-space atom), tensored for
connected sums and dualized for mirrors.  From them the package computes
tau, epsilon, a1 and an exact piecewise-linear Upsilon.

>>> from cfkinf import build, upsilon
>>> upsilon(build("T(2,5)"))
PLFunction([(0, 0), (1, -2), (2, 0)])
"""
from .cfk import (
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
from .invariants import (
    DEFAULT_CAP,
    CapExceededError,
    InvariantReport,
    NotStandardError,
    a1,
    epsilon,
    epsilon_from_a1,
    report,
    tau,
    tau_by_cycles,
    upsilon,
    upsilon_brute_oracle,
    upsilon_knot,
)
from .knots import KnotExpr, KnotSyntaxError, alexander, build, parse
from .laurent import LaurentPoly, StaircaseError, cable_alexander, staircase_exponents, torus_alexander
from .pl import PLFunction, max_slope
from .reduce import (
    NotStandard,
    StandardForm,
    VerticalHomologyError,
    cancel_zero_arrows,
    check_global_homology,
    homology_summand,
    simplify,
    split_components,
    standard_form,
    vertically_simplify,
)

__version__ = "0.1.0"
