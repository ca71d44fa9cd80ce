"""Pinned reference values, shared by the ``verify-paper`` command and the test suite.

Each :class:`Check` computes a value and compares it with an expected value
stored as plain data.  Checks are grouped by the criterion they belong to.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Callable

from .cfk import dual, tensor
from .invariants import a1, epsilon, epsilon_from_a1, tau, upsilon, upsilon_brute_oracle, upsilon_knot
from .knots import build, parse
from .laurent import cable_alexander, torus_alexander
from .pl import max_slope
from .reduce import homology_summand, standard_form

TARGET_KNOT = "T(2,5) # -T(4,5) # C(2,5;T(2,3))"
SUMMAND_KNOT = "T(4,5) # -C(2,5;T(2,3))"
ORACLE_SEED = 20240229
ORACLE_POINTS = 25


@dataclass(frozen=True)
class Check:
    group: str
    name: str
    expected: Any
    compute: Callable[[], Any]

    def run(self) -> tuple[bool, Any]:
        actual = self.compute()
        return actual == self.expected, actual


def corpus_torus() -> list[tuple[int, int]]:
    return [(p, q) for p in range(2, 8) for q in range(p + 1, 8) if gcd(p, q) == 1]


def random_points(n: int = ORACLE_POINTS, seed: int = ORACLE_SEED) -> list[Fraction]:
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        den = rng.randint(1, 97)
        out.append(Fraction(rng.randint(0, 2 * den), den))
    return out


def summand():
    """The homology-carrying component of T(4,5) # -C(2,5;T(2,3)) and its x0."""
    return homology_summand(build(SUMMAND_KNOT))


def _chain_data(C, x0):
    gens = sorted(((g.maslov, g.alexander) for g in C.generators), reverse=True)
    pos = {g.name: (g.maslov, g.alexander) for g in C.generators}
    arrows = sorted((pos[a.source], pos[a.target], a.upower) for a in C.arrows)
    return {"gradings": gens, "arrows": arrows, "x0": pos[x0]}


def _staircase_data(C):
    gens = [(g.maslov, g.alexander) for g in C.generators]
    arrows = sorted((a.source, a.target, a.upower) for a in C.arrows)
    return {"gradings": gens, "arrows": arrows}


def _oracle_agrees(C) -> bool:
    f = upsilon(C)
    return all(f(t) == upsilon_brute_oracle(C, t) for t in random_points())


def _breakpoints(f):
    return [(str(t), str(v)) for t, v in f.breakpoints]


SPIKE = [("0", "0"), ("1", "-2"), ("2", "0")]
ZERO = [("0", "0"), ("2", "0")]


def manifest() -> list[Check]:
    K = parse(TARGET_KNOT)
    return [
        Check("alexander polynomials", "Delta of T(4,5)",
              "t^6 - t^5 + t^2 - 1 + t^-2 - t^-5 + t^-6",
              lambda: str(torus_alexander(4, 5))),
        Check("alexander polynomials", "Delta of the (2,5)-cable of T(2,3)",
              "t^4 - t^3 + 1 - t^-3 + t^-4",
              lambda: str(cable_alexander(2, 5, torus_alexander(2, 3)))),
        Check("staircase gradings", "staircase of C(2,5;T(2,3))",
              {"gradings": [(0, 4), (-1, 3), (-2, 0), (-7, -3), (-8, -4)],
               "arrows": [("x1", "x0", 1), ("x1", "x2", 0), ("x3", "x2", 3), ("x3", "x4", 0)]},
              lambda: _staircase_data(build("C(2,5;T(2,3))"))),
        Check("standard forms", "C(2,5;T(2,3))", "[1, 3]",
              lambda: str(standard_form(build("C(2,5;T(2,3))")))),
        Check("standard forms", "T(4,5)", "[1, 3, 2]",
              lambda: str(standard_form(build("T(4,5)")))),
        Check("standard forms", SUMMAND_KNOT + " summand", "[2]",
              lambda: str(standard_form(summand()[0]))),
        Check("standard forms", SUMMAND_KNOT + " summand chain",
              {"gradings": [(0, 2), (-3, 0), (-4, -2)],
               "arrows": [((-3, 0), (-4, -2), 0), ((-3, 0), (0, 2), 2)],
               "x0": (0, 2)},
              lambda: _chain_data(*summand())),
        Check("upsilon", "summand breakpoints", SPIKE,
              lambda: _breakpoints(upsilon(summand()[0]))),
        Check("upsilon", "T(2,5) breakpoints", SPIKE,
              lambda: _breakpoints(upsilon(build("T(2,5)")))),
        Check("upsilon", "summand oracle at t = 1/2", Fraction(-1),
              lambda: upsilon_brute_oracle(summand()[0], Fraction(1, 2))),
        Check("upsilon", "oracle agreement, summand", True,
              lambda: _oracle_agrees(summand()[0])),
        Check("upsilon", "oracle agreement, T(2,5)", True,
              lambda: _oracle_agrees(build("T(2,5)"))),
        Check("upsilon", "oracle agreement, T(4,5)", True,
              lambda: _oracle_agrees(build("T(4,5)"))),
        Check("target knot, upsilon", "Upsilon of K", ZERO,
              lambda: _breakpoints(upsilon_knot(K))),
        Check("target knot, upsilon", "Upsilon of 2K", ZERO,
              lambda: _breakpoints(upsilon_knot(f"2*({TARGET_KNOT})"))),
        Check("target knot, upsilon", "Upsilon of 3K", ZERO,
              lambda: _breakpoints(upsilon_knot(f"3*({TARGET_KNOT})"))),
        Check("target knot, epsilon", "a1 of " + SUMMAND_KNOT, 2,
              lambda: a1(build(SUMMAND_KNOT))),
        Check("target knot, epsilon", "a1 of T(2,5)", 1,
              lambda: a1(build("T(2,5)"))),
        Check("target knot, epsilon", "epsilon from a1 values (1, 2)", 1,
              lambda: epsilon_from_a1(a1(build("T(2,5)")), a1(build(SUMMAND_KNOT)))),
        Check("target knot, epsilon", "generators of K", 175,
              lambda: len(build(K))),
        Check("target knot, epsilon", "epsilon of K (full complex)", 1,
              lambda: epsilon(build(K))),
        Check("target knot, epsilon", "epsilon of K # K (full complex)", 1,
              lambda: epsilon(tensor(build(K), build(K)))),
        Check("genus bound", "max slope of Upsilon of K", Fraction(0),
              lambda: max_slope(upsilon_knot(K))),
        Check("genus bound", "epsilon of K is nonzero", True,
              lambda: epsilon(build(K)) != 0),
        Check("tau", "tau of corpus torus knots",
              {f"T({p},{q})": (p - 1) * (q - 1) // 2 for p, q in corpus_torus()},
              lambda: {f"T({p},{q})": tau(build(f"T({p},{q})")) for p, q in corpus_torus()}),
        Check("tau", "tau of mirrored corpus torus knots",
              {f"-T({p},{q})": -(p - 1) * (q - 1) // 2 for p, q in corpus_torus()},
              lambda: {f"-T({p},{q})": tau(dual(build(f"T({p},{q})"))) for p, q in corpus_torus()}),
    ]


def run_all(checks: list[Check] | None = None) -> list[tuple[Check, bool, Any]]:
    results = []
    for check in checks if checks is not None else manifest():
        try:
            ok, actual = check.run()
        except Exception as err:  # reported as a failing check
            ok, actual = False, f"{type(err).__name__}: {err}"
        results.append((check, ok, actual))
    return results
