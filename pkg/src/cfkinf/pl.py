"""Exact continuous piecewise-linear functions on [0, 2]."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction

DOMAIN = (Fraction(0), Fraction(2))


def as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction or int")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class PLFunction:
    """Continuous PL interpolation of breakpoints ``(t, value)`` with t from 0 to 2.

    Collinear interior breakpoints are dropped, so two functions are equal
    exactly when their breakpoint tuples are equal.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[tuple[Number, Number]]):
        pts = [(as_fraction(t), as_fraction(v)) for t, v in points]
        if len(pts) < 2:
            raise ValueError("a PL function needs at least two breakpoints")
        if pts[0][0] != DOMAIN[0] or pts[-1][0] != DOMAIN[1]:
            raise ValueError("breakpoints must start at t = 0 and end at t = 2")
        if any(a[0] >= b[0] for a, b in zip(pts, pts[1:])):
            raise ValueError("breakpoint abscissae must be strictly increasing")
        self._points = tuple(_drop_collinear(pts))

    @classmethod
    def zero(cls) -> PLFunction:
        return cls([(0, 0), (2, 0)])

    @classmethod
    def linear(cls, slope: Number, intercept: Number = 0) -> PLFunction:
        return cls([(0, intercept), (2, as_fraction(intercept) + 2 * as_fraction(slope))])

    @property
    def breakpoints(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return self._points

    def __call__(self, t: Number) -> Fraction:
        t = as_fraction(t)
        if not DOMAIN[0] <= t <= DOMAIN[1]:
            raise ValueError(f"t = {t} lies outside [0, 2]")
        pts = self._points
        for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
            if t0 <= t <= t1:
                return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
        raise AssertionError("unreachable")

    def slopes(self) -> list[Fraction]:
        pts = self._points
        return [(v1 - v0) / (t1 - t0) for (t0, v0), (t1, v1) in zip(pts, pts[1:])]

    def is_zero(self) -> bool:
        return all(v == 0 for _, v in self._points)

    def _combine(self, other: PLFunction, op) -> PLFunction:
        ts = sorted({t for t, _ in self._points} | {t for t, _ in other._points})
        return PLFunction([(t, op(self(t), other(t))) for t in ts])

    def __add__(self, other: PLFunction) -> PLFunction:
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: PLFunction) -> PLFunction:
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> PLFunction:
        return PLFunction([(t, -v) for t, v in self._points])

    def __mul__(self, n: Number) -> PLFunction:
        if isinstance(n, float):
            raise TypeError("floats are not accepted")
        return PLFunction([(t, v * n) for t, v in self._points])

    __rmul__ = __mul__

    def reflect(self) -> PLFunction:
        """The function t -> f(2 - t)."""
        return PLFunction([(2 - t, v) for t, v in reversed(self._points)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        inner = ", ".join(f"({format_rational(t)}, {format_rational(v)})" for t, v in self._points)
        return f"PLFunction([{inner}])"

    def sample(self, n: int) -> list[tuple[Fraction, Fraction]]:
        """Values at t = 2k/n for k = 0..n."""
        if n < 1:
            raise ValueError("need at least one sampling interval")
        return [(Fraction(2 * k, n), self(Fraction(2 * k, n))) for k in range(n + 1)]

    def to_document(self) -> dict:
        return {"breakpoints": [[format_rational(t), format_rational(v)] for t, v in self._points]}

    @classmethod
    def from_document(cls, doc: dict) -> PLFunction:
        return cls([(parse_rational(t), parse_rational(v)) for t, v in doc["breakpoints"]])


def _drop_collinear(pts: Sequence[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    out = [pts[0]]
    for k in range(1, len(pts) - 1):
        (t0, v0), (t1, v1), (t2, v2) = out[-1], pts[k], pts[k + 1]
        if (v1 - v0) * (t2 - t1) != (v2 - v1) * (t1 - t0):
            out.append(pts[k])
    out.append(pts[-1])
    return out


def max_slope(f: PLFunction) -> Fraction:
    return max(f.slopes())
