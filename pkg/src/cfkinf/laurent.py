"""Integer Laurent polynomials and Alexander polynomials of torus knots and cables.

Polynomials are stored sparsely as ``{exponent: coefficient}`` with no zero
coefficients.  Everything is exact integer arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "StaircaseError",
    "torus_alexander",
    "cable_alexander",
    "staircase_exponents",
]

MAX_PQ = 10_000


class StaircaseError(ValueError):
    """Raised when a polynomial does not have the alternating L-space form."""


class LaurentPoly:
    """A finitely supported Laurent polynomial with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for k, c in items:
            k, c = int(k), int(c)
            acc[k] = acc.get(k, 0) + c
        self._coeffs = {k: c for k, c in sorted(acc.items()) if c != 0}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coeff(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Top exponent.  The zero polynomial has no degree."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    @property
    def valuation(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self._coeffs)

    def terms(self, descending: bool = True) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items(), reverse=descending)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        return LaurentPoly(list(self._coeffs.items()) + list(other._coeffs.items()))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        out: dict[int, int] = {}
        for a, ca in self._coeffs.items():
            for b, cb in other._coeffs.items():
                out[a + b] = out.get(a + b, 0) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def substitute_power(self, s: int) -> LaurentPoly:
        """Return ``f(t**s)``."""
        return LaurentPoly({s * e: c for e, c in self._coeffs.items()})

    def __call__(self, t):
        """Evaluate at ``t``; integer arguments are evaluated exactly as Fractions."""
        if isinstance(t, int):
            t = Fraction(t)
        return sum(c * t**k for k, c in self._coeffs.items())

    def exact_divide(self, divisor: LaurentPoly) -> LaurentPoly:
        """Divide exactly; raise ``ArithmeticError`` on a nonzero remainder.

        The leading coefficient of ``divisor`` must be +1 or -1 so that the
        quotient stays integral.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_exp = divisor.degree
        lead = divisor.coeff(lead_exp)
        if lead not in (1, -1):
            raise ArithmeticError("divisor must have unit leading coefficient")
        rem = dict(self._coeffs)
        quot: dict[int, int] = {}
        floor = self.valuation - divisor.valuation if rem else 0
        while rem:
            top = max(rem)
            qe = top - lead_exp
            if qe < floor:
                break
            q = rem[top] * lead
            quot[qe] = q
            for e, c in divisor._coeffs.items():
                k = e + qe
                v = rem.get(k, 0) - q * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if rem:
            raise ArithmeticError("polynomial division left a nonzero remainder")
        return LaurentPoly(quot)

    def is_symmetric(self) -> bool:
        return all(self.coeff(-k) == c for k, c in self._coeffs.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self._coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in self.terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def _check_coprime(p: int, q: int, what: str) -> None:
    if gcd(p, q) != 1:
        raise ValueError(f"{what} parameters must be coprime, got ({p}, {q})")


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """Symmetrized Alexander polynomial of the torus knot T(p, q).

    Computed as t^{-(p-1)(q-1)/2} (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)).

    >>> str(torus_alexander(2, 3))
    't - 1 + t^-1'
    """
    if not (isinstance(p, int) and isinstance(q, int)):
        raise TypeError("torus knot parameters must be integers")
    if p < 2 or q < 2:
        raise ValueError(f"torus knot parameters must be >= 2, got ({p}, {q})")
    _check_coprime(p, q, "torus knot")
    if p * q > MAX_PQ:
        raise ValueError(f"p*q = {p * q} exceeds the supported bound {MAX_PQ}")
    t = LaurentPoly.monomial(1)
    num = (t**(p * q) - 1) * (t - 1)
    den = (t**p - 1) * (t**q - 1)
    return num.exact_divide(den).shift(-((p - 1) * (q - 1)) // 2)


def cable_alexander(s: int, t: int, delta: LaurentPoly) -> LaurentPoly:
    """Alexander polynomial of the (s, t)-cable of a knot with polynomial ``delta``.

    ``s`` is the longitudinal winding; the result is delta(x^s) * Delta_{T(s,t)}(x).
    """
    if s < 2:
        raise ValueError(f"cable winding must be >= 2, got {s}")
    if abs(t) < 2:
        raise ValueError(f"cable parameter t must satisfy |t| >= 2, got {t}")
    _check_coprime(s, t, "cable")
    if not delta.is_symmetric():
        raise ValueError("companion Alexander polynomial must be symmetric")
    # T(s, -t) is the mirror of T(s, t); the Alexander polynomial is unchanged.
    return delta.substitute_power(s) * torus_alexander(s, abs(t))


def staircase_exponents(delta: LaurentPoly) -> tuple[int, ...]:
    """Exponents alpha_0 > ... > alpha_2m of an alternating +1/-1 polynomial.

    Raises ``StaircaseError`` unless the coefficients read from the top
    exponent down are exactly +1, -1, ..., +1 and the exponents are symmetric.
    """
    terms = delta.terms()
    if not terms or len(terms) % 2 == 0:
        raise StaircaseError("not an admissible L-space staircase polynomial: even term count")
    for idx, (_, c) in enumerate(terms):
        if c != (1 if idx % 2 == 0 else -1):
            raise StaircaseError(
                "not an admissible L-space staircase polynomial: coefficients must alternate +1, -1, ..., +1"
            )
    exps = tuple(k for k, _ in terms)
    if any(a != -b for a, b in zip(exps, reversed(exps))):
        raise StaircaseError("not an admissible L-space staircase polynomial: exponents are not symmetric")
    return exps
