"""Concordance invariants of knot-like complexes: tau, epsilon, a1 and Upsilon.

Everything here is computed over F2 with vectors packed into integers and
with exact rationals for the t-dependent quantities.  Lattice elements of a
fixed Maslov grading are in bijection with (a parity class of) generators, so
vectors in a single grading are indexed by generator.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, TYPE_CHECKING

from .cfk import BifilteredComplex
from .linalg import EchelonBasis, bits, kernel
from .pl import PLFunction, as_fraction, format_rational, max_slope
from .reduce import (
    NotStandard,
    VerticalHomologyError,
    _require_knot_like,
    standard_form,
    vertically_simplify,
)

if TYPE_CHECKING:
    from .knots import KnotExpr

__all__ = [
    "DEFAULT_CAP",
    "CapExceededError",
    "NotStandardError",
    "InvariantReport",
    "tau",
    "tau_by_cycles",
    "epsilon",
    "a1",
    "epsilon_from_a1",
    "upsilon",
    "upsilon_brute_oracle",
    "upsilon_knot",
    "max_slope",
    "report",
]


DEFAULT_CAP = 24

Position = tuple[int, int]


class CapExceededError(ValueError):
    """Too many grading-0 lattice generators for the direct Upsilon engine."""


class NotStandardError(ValueError):
    """The complex has no readable standard form through x0."""


class _Grading:
    """Lattice elements of one Maslov grading, restricted to a region of the plane."""

    def __init__(self, C: BifilteredComplex, grading: int,
                 region: Callable[[Position], bool] | None = None):
        self.grading = grading
        self.names: list[str] = []
        self.translate: dict[str, int] = {}
        self.position: list[Position] = []
        for g in C.generators:
            if (g.maslov - grading) % 2:
                continue
            n = (g.maslov - grading) // 2
            pos = (-n, g.alexander - n)
            if region is not None and not region(pos):
                continue
            self.translate[g.name] = n
            self.names.append(g.name)
            self.position.append(pos)
        self.index = {name: k for k, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)


def _boundary_columns(C: BifilteredComplex, src: _Grading, dst: _Grading) -> list[int]:
    """Columns of the differential src -> dst; terms outside dst are dropped."""
    out = C.outgoing()
    cols = []
    for name in src.names:
        n = src.translate[name]
        v = 0
        for a in out[name]:
            k = dst.index.get(a.target)
            if k is not None and dst.translate[a.target] == n + a.upower:
                v ^= 1 << k
        cols.append(v)
    return cols


def _permute(v: int, perm: list[int]) -> int:
    out = 0
    for k in bits(v):
        out |= 1 << perm[k]
    return out


def _lowest_class(size: int, cycles: list[int], boundaries: list[int],
                  level: Callable[[int], object]) -> tuple[int, int]:
    """A non-boundary cycle whose top element has minimal level.

    Assumes homology of rank one, so all non-boundary cycles form one coset
    z + B.  Greedy top-bit reduction of z by an echelon basis of B, in the
    order given by ``level``, minimises the top element of the coset.
    Returns (index of the top element, the cycle).
    """
    order = sorted(range(size), key=lambda k: (level(k), k))
    perm = [0] * size
    for rank, k in enumerate(order):
        perm[k] = rank
    B = EchelonBasis(_permute(b, perm) for b in boundaries)
    if len(cycles) - len(B) != 1:
        raise VerticalHomologyError(
            f"homology in this grading has rank {len(cycles) - len(B)}, expected 1"
        )
    for z in cycles:
        pz = _permute(z, perm)
        if not B.contains(pz):
            residue, _ = B.reduce(pz)
            return order[residue.bit_length() - 1], _permute(residue, order)
    raise AssertionError("unreachable: rank count and membership disagree")


def _vertical(C: BifilteredComplex):
    """Grading 1, 0, -1 parts of the i = 0 column and its boundary/cycle data."""
    col = (lambda pos: pos[0] == 0)
    g1, g0, gm = (_Grading(C, m, col) for m in (1, 0, -1))
    boundaries = _boundary_columns(C, g1, g0)
    cycles = kernel(_boundary_columns(C, g0, gm))
    return g0, cycles, boundaries


def _x0_cycle(C: BifilteredComplex) -> tuple[_Grading, int, list[int]]:
    """A vertical cycle of minimal Alexander level generating vertical homology."""
    g0, cycles, boundaries = _vertical(C)
    _, x0 = _lowest_class(len(g0), cycles, boundaries, lambda k: g0.position[k][1])
    return g0, x0, boundaries


def tau_by_cycles(C: BifilteredComplex) -> int:
    """Minimum over generating vertical cycles of their top Alexander grading."""
    _require_knot_like(C)
    g0, x0, _ = _x0_cycle(C)
    return max(g0.position[k][1] for k in bits(x0))


def tau(C: BifilteredComplex) -> int:
    """Alexander grading of the vertical homology generator.

    Computed by vertical simplification and independently by minimising over
    vertical cycles; the two must agree.
    """
    basis = vertically_simplify(C)
    value = basis.complex.generator(basis.distinguished).alexander
    check = tau_by_cycles(C)
    if value != check:
        raise AssertionError(f"tau routes disagree: simplification {value}, cycles {check}")
    return value


def epsilon(C: BifilteredComplex) -> int:
    """The {-1, 0, 1}-valued invariant, via the maps through the tau-shifted regions.

    With x0 generating the homology of the i = 0 column and tau its level:
    epsilon = +1 if x0 dies in the region min(i, j - tau) = 0, epsilon = -1 if
    no cycle of the region max(i, j - tau) = 0 projects onto x0, and 0 otherwise.
    In a simplified basis these say that x0 is the target, respectively the
    source, of a horizontal arrow.
    """
    _require_knot_like(C)
    g0, x0, vboundaries = _x0_cycle(C)
    t = max(g0.position[k][1] for k in bits(x0))

    in_f = lambda pos: min(pos[0], pos[1] - t) == 0
    f0, f1 = _Grading(C, 0, in_f), _Grading(C, 1, in_f)
    image = 0
    for k in bits(x0):
        k2 = f0.index.get(g0.names[k])
        if k2 is not None and f0.translate[g0.names[k]] == 0:
            image |= 1 << k2
    f_trivial = EchelonBasis(_boundary_columns(C, f1, f0)).contains(image)

    in_g = lambda pos: max(pos[0], pos[1] - t) == 0
    h0, hm = _Grading(C, 0, in_g), _Grading(C, -1, in_g)
    B = EchelonBasis(vboundaries)
    g_trivial = True
    for z in kernel(_boundary_columns(C, h0, hm)):
        projected = 0
        for k in bits(z):
            name = h0.names[k]
            if h0.translate[name] == 0:
                projected |= 1 << g0.index[name]
        if not B.contains(projected):
            g_trivial = False
            break

    if f_trivial and g_trivial:
        raise AssertionError("both comparison maps vanish; the complex is not knot-like")
    if f_trivial:
        return 1
    if g_trivial:
        return -1
    return 0


def a1(C: BifilteredComplex) -> int:
    """Length of the horizontal arrow into x0 in the standard form, or 0 if none."""
    form = standard_form(C)
    if isinstance(form, NotStandard):
        raise NotStandardError(f"{form.reason}; use epsilon() for the general computation")
    if form.lengths and form.lengths[0] > 0:
        return form.lengths[0]
    return 0


def epsilon_from_a1(aK: int, aJ: int) -> int | str:
    """epsilon(K # -J) from a1 values: +1 when a1(J) > a1(K), else "inconclusive"."""
    return 1 if aJ > aK else "inconclusive"


# -- Upsilon -----------------------------------------------------------------

@dataclass(frozen=True)
class _UpsilonData:
    positions: tuple[Position, ...]
    cycles: tuple[int, ...]
    boundaries: tuple[int, ...]


def _upsilon_data(C: BifilteredComplex, cap: int | None) -> _UpsilonData:
    _require_knot_like(C)
    g1, g0, gm = (_Grading(C, m) for m in (1, 0, -1))
    if cap is not None and len(g0) > cap:
        raise CapExceededError(
            f"{len(g0)} grading-0 lattice generators exceed the cap of {cap}; "
            "use upsilon_knot to add up connected summands"
        )
    return _UpsilonData(tuple(g0.position), tuple(kernel(_boundary_columns(C, g0, gm))),
                        tuple(_boundary_columns(C, g1, g0)))


def _level(pos: Position, t: Fraction) -> Fraction:
    i, j = pos
    return i + t * (j - i) / 2


def _nu(data: _UpsilonData, t: Fraction) -> Fraction:
    k, _ = _lowest_class(len(data.positions), list(data.cycles), list(data.boundaries),
                         lambda k: _level(data.positions[k], t))
    return _level(data.positions[k], t)


def upsilon(C: BifilteredComplex, cap: int | None = DEFAULT_CAP) -> PLFunction:
    """Exact Upsilon of a knot-like complex.

    Each lattice position gives a line t -> i + t (j - i) / 2.  Between two
    consecutive intersection abscissae the order of all lines is fixed, so the
    minimising coset representative is fixed and the envelope is linear there.
    """
    data = _upsilon_data(C, cap)
    lines = sorted({(i, Fraction(j - i, 2)) for i, j in data.positions})
    ts = {Fraction(0), Fraction(2)}
    for (c1, s1), (c2, s2) in combinations(lines, 2):
        if s1 != s2:
            t = Fraction(c2 - c1) / (s1 - s2)
            if 0 < t < 2:
                ts.add(t)
    return PLFunction([(t, -2 * _nu(data, t)) for t in sorted(ts)])


@lru_cache(maxsize=64)
def _cycle_supports(C: BifilteredComplex, cap: int | None) -> tuple[tuple[Position, ...], ...]:
    """Position sets of every generating cycle, by subset enumeration.

    H_0 has rank one, so the generating cycles (Z_0 minus B_0) are exactly the
    coset z + B_0 for any non-boundary cycle z; every subset of a basis of
    B_0 is added to z.
    """
    data = _upsilon_data(C, cap)
    B = EchelonBasis(data.boundaries)
    basis = B.vectors()
    if len(data.cycles) - len(basis) != 1:
        raise VerticalHomologyError("grading-0 homology does not have rank one")
    v = next(z for z in data.cycles if not B.contains(z))
    supports = {v}
    # Gray code walk: one basis vector changes per step.
    for step in range(1, 1 << len(basis)):
        v ^= basis[(step & -step).bit_length() - 1]
        supports.add(v)
    sets = {tuple(sorted({data.positions[k] for k in bits(z)})) for z in supports}
    return tuple(sorted(sets))


def upsilon_brute_oracle(C: BifilteredComplex, t, cap: int | None = DEFAULT_CAP) -> Fraction:
    """-2 min over all generating cycles of their max t-level, by enumeration."""
    t = as_fraction(t)
    if not 0 <= t <= 2:
        raise ValueError(f"t = {t} lies outside [0, 2]")
    # 2q * level(i, j) = 2q i + p (j - i) for t = p/q is an exact integer key.
    p, q = t.numerator, t.denominator
    best = min(max(2 * q * i + p * (j - i) for i, j in support)
               for support in _cycle_supports(C, cap))
    return -2 * Fraction(best, 2 * q)


def upsilon_knot(expr: KnotExpr | str, cap: int | None = DEFAULT_CAP) -> PLFunction:
    """Upsilon of a knot expression, summed over connected summands."""
    from . import knots

    if isinstance(expr, str):
        expr = knots.parse(expr)
    if isinstance(expr, knots.Unknot):
        return PLFunction.zero()
    if isinstance(expr, (knots.Torus, knots.Cable)):
        return upsilon(knots.build(expr), cap)
    if isinstance(expr, knots.Mirror):
        return -upsilon_knot(expr.knot, cap)
    if isinstance(expr, knots.Multiple):
        return upsilon_knot(expr.knot, cap) * expr.n
    if isinstance(expr, knots.Sum):
        total = PLFunction.zero()
        for term in expr.terms:
            total = total + upsilon_knot(term, cap)
        return total
    raise TypeError(f"unsupported knot expression {expr!r}")


# -- Reports -----------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    tau: int
    epsilon: int
    a1: int | None
    upsilon: PLFunction

    @property
    def max_slope(self) -> Fraction:
        return max_slope(self.upsilon)

    def to_document(self) -> dict:
        return {
            "tau": self.tau,
            "epsilon": self.epsilon,
            "a1": self.a1,
            "upsilon": self.upsilon.to_document(),
            "max_slope": format_rational(self.max_slope),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=2)


def report(obj: BifilteredComplex | KnotExpr | str, cap: int | None = DEFAULT_CAP) -> InvariantReport:
    """All invariants of a complex or knot expression.

    For expressions, Upsilon goes through additivity and the other invariants
    through the locally reduced model.  ``a1`` is None when no standard form
    through x0 is found.
    """
    from . import knots

    if isinstance(obj, BifilteredComplex):
        C, ups = obj, upsilon(obj, cap)
    else:
        expr = knots.parse(obj) if isinstance(obj, str) else obj
        C, ups = knots.build(expr, reduced=True), upsilon_knot(expr, cap)
    try:
        a = a1(C)
    except NotStandardError:
        a = None
    return InvariantReport(tau(C), epsilon(C), a, ups)
