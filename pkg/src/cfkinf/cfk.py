"""Bifiltered chain complexes over F2[U, U^-1].

A complex is a finite list of generators, each carrying a Maslov grading ``M``
and an Alexander grading ``A``, together with a set of arrows.  An arrow
``x -> y`` with U-power ``n`` records the term ``U^n y`` in the differential of
``x`` (coefficients live in F2, so presence means coefficient one).

Lattice convention: ``x`` sits at ``(0, A(x))`` and ``U^n x`` at
``(-n, A(x) - n)`` with Maslov grading ``M(x) - 2n``.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "Generator",
    "Arrow",
    "LatticeElement",
    "BifilteredComplex",
    "ValidationReport",
    "ComplexFormatError",
    "arrow_kind",
    "validate",
    "staircase",
    "unknot_complex",
    "tensor",
    "dual",
    "direct_sum",
    "is_isomorphic",
    "to_document",
    "from_document",
    "dumps",
    "loads",
]


@dataclass(frozen=True, order=True)
class Generator:
    name: str
    maslov: int
    alexander: int


@dataclass(frozen=True, order=True)
class Arrow:
    source: str
    target: str
    upower: int


@dataclass(frozen=True)
class LatticeElement:
    """The U-translate ``U^translate * generator``."""

    generator: Generator
    translate: int

    @property
    def position(self) -> tuple[int, int]:
        return (-self.translate, self.generator.alexander - self.translate)

    @property
    def grading(self) -> int:
        return self.generator.maslov - 2 * self.translate

    @classmethod
    def in_grading(cls, gen: Generator, grading: int) -> LatticeElement | None:
        """The unique translate of ``gen`` with Maslov grading ``grading``, if any."""
        if (gen.maslov - grading) % 2:
            return None
        return cls(gen, (gen.maslov - grading) // 2)


@dataclass(frozen=True)
class BifilteredComplex:
    generators: tuple[Generator, ...]
    arrows: frozenset[Arrow] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "arrows", frozenset(self.arrows))
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        known = set(names)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise ValueError(f"arrow {a.source} -> {a.target} references an unknown generator")

    def __len__(self) -> int:
        return len(self.generators)

    @cached_property
    def by_name(self) -> dict[str, Generator]:
        return {g.name: g for g in self.generators}

    def generator(self, name: str) -> Generator:
        return self.by_name[name]

    @cached_property
    def _sorted_arrows(self) -> tuple[Arrow, ...]:
        return tuple(sorted(self.arrows))

    def outgoing(self) -> dict[str, list[Arrow]]:
        out: dict[str, list[Arrow]] = {g.name: [] for g in self.generators}
        for a in self._sorted_arrows:
            out[a.source].append(a)
        return out

    def incoming(self) -> dict[str, list[Arrow]]:
        inc: dict[str, list[Arrow]] = {g.name: [] for g in self.generators}
        for a in self._sorted_arrows:
            inc[a.target].append(a)
        return inc

    def kind(self, arrow: Arrow) -> str:
        return arrow_kind(self, arrow)

    def lattice(self, grading: int) -> list[LatticeElement]:
        """All lattice elements in a given Maslov grading (one per generator of matching parity)."""
        out = []
        for g in self.generators:
            el = LatticeElement.in_grading(g, grading)
            if el is not None:
                out.append(el)
        return out

    def is_reduced(self) -> bool:
        return all(self.kind(a) != "zero" for a in self.arrows)

    def relabel(self, mapping: dict[str, str]) -> BifilteredComplex:
        gens = [Generator(mapping.get(g.name, g.name), g.maslov, g.alexander) for g in self.generators]
        arrows = [Arrow(mapping.get(a.source, a.source), mapping.get(a.target, a.target), a.upower)
                  for a in self.arrows]
        return BifilteredComplex(tuple(gens), frozenset(arrows))

    def subcomplex(self, names: Iterable[str]) -> BifilteredComplex:
        keep = set(names)
        gens = tuple(g for g in self.generators if g.name in keep)
        arrows = frozenset(a for a in self.arrows if a.source in keep and a.target in keep)
        return BifilteredComplex(gens, arrows)


def arrow_kind(C: BifilteredComplex, arrow: Arrow) -> str:
    """Classify an arrow as 'vertical', 'horizontal', 'zero' or 'diagonal'."""
    gens = C.by_name
    a_src = gens[arrow.source].alexander
    a_tgt = gens[arrow.target].alexander
    n = arrow.upower
    if n == 0:
        return "vertical" if a_tgt < a_src else "zero"
    if a_tgt - n == a_src:
        return "horizontal"
    return "diagonal"


def arrow_length(C: BifilteredComplex, arrow: Arrow) -> int:
    """Filtration drop along the arrow's own direction (0 for a zero arrow)."""
    gens = C.by_name
    if arrow.upower == 0:
        return gens[arrow.source].alexander - gens[arrow.target].alexander
    return arrow.upower


@dataclass
class ValidationReport:
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "valid" if self.ok else "; ".join(self.problems)


def validate(C: BifilteredComplex) -> ValidationReport:
    """Check the grading law, the filtration law and d^2 = 0."""
    problems: list[str] = []
    gens = C.by_name
    for a in sorted(C.arrows):
        src, tgt = gens[a.source], gens[a.target]
        if a.upower < 0:
            problems.append(f"filtration law: {a.source} -> {a.target} has negative U-power {a.upower}")
        if tgt.maslov - 2 * a.upower != src.maslov - 1:
            problems.append(
                f"grading law: {a.source} -> {a.target} (U^{a.upower}) goes from Maslov "
                f"{src.maslov} to {tgt.maslov - 2 * a.upower}"
            )
        if tgt.alexander - a.upower > src.alexander:
            problems.append(f"filtration law: {a.source} -> {a.target} raises the Alexander filtration")
    out = C.outgoing()
    for x in C.generators:
        counts: dict[tuple[str, int], int] = defaultdict(int)
        for a1 in out[x.name]:
            for a2 in out[a1.target]:
                counts[(a2.target, a1.upower + a2.upower)] += 1
        for (z, n), c in sorted(counts.items()):
            if c % 2:
                problems.append(f"d^2 != 0: U^{n} {z} appears in d^2({x.name})")
    return ValidationReport(problems)


def unknot_complex(name: str = "x0") -> BifilteredComplex:
    return BifilteredComplex((Generator(name, 0, 0),), frozenset())


def staircase(exps: Sequence[int], prefix: str = "x") -> BifilteredComplex:
    """Staircase complex for exponents alpha_0 > alpha_1 > ... > alpha_2m.

    For odd k: d x_k = U^(alpha_{k-1} - alpha_k) x_{k-1} + x_{k+1}, and Maslov
    gradings follow from M(x_0) = 0 and the grading law.
    """
    exps = [int(e) for e in exps]
    if not exps or len(exps) % 2 == 0:
        raise ValueError("staircase needs an odd number of exponents")
    if any(a <= b for a, b in zip(exps, exps[1:])):
        raise ValueError("staircase exponents must be strictly decreasing")
    gens: list[Generator] = []
    arrows: list[Arrow] = []
    m = 0
    for k, alpha in enumerate(exps):
        if k > 0:
            if k % 2:
                m = m - 2 * (exps[k - 1] - alpha) + 1
            else:
                m = m - 1
        gens.append(Generator(f"{prefix}{k}", m, alpha))
    for k in range(1, len(exps), 2):
        arrows.append(Arrow(f"{prefix}{k}", f"{prefix}{k - 1}", exps[k - 1] - exps[k]))
        arrows.append(Arrow(f"{prefix}{k}", f"{prefix}{k + 1}", 0))
    return BifilteredComplex(tuple(gens), frozenset(arrows))


def tensor(C1: BifilteredComplex, C2: BifilteredComplex) -> BifilteredComplex:
    """Tensor product over F2[U, U^-1]; generator ``x|y`` for ``x`` in C1, ``y`` in C2."""
    gens = tuple(
        Generator(f"{x.name}|{y.name}", x.maslov + y.maslov, x.alexander + y.alexander)
        for x, y in product(C1.generators, C2.generators)
    )
    arrows: set[Arrow] = set()
    for a in C1.arrows:
        for y in C2.generators:
            arrows ^= {Arrow(f"{a.source}|{y.name}", f"{a.target}|{y.name}", a.upower)}
    for b in C2.arrows:
        for x in C1.generators:
            arrows ^= {Arrow(f"{x.name}|{b.source}", f"{x.name}|{b.target}", b.upower)}
    return BifilteredComplex(gens, frozenset(arrows))


def dual(C: BifilteredComplex) -> BifilteredComplex:
    """Dual complex modelling the mirror: gradings negate, arrows reverse with the same U-power."""
    gens = tuple(Generator(g.name + "*", -g.maslov, -g.alexander) for g in C.generators)
    arrows = frozenset(Arrow(a.target + "*", a.source + "*", a.upower) for a in C.arrows)
    return BifilteredComplex(gens, arrows)


def direct_sum(*complexes: BifilteredComplex) -> BifilteredComplex:
    gens: list[Generator] = []
    arrows: set[Arrow] = set()
    for C in complexes:
        gens.extend(C.generators)
        arrows |= C.arrows
    return BifilteredComplex(tuple(gens), frozenset(arrows))


def is_isomorphic(C1: BifilteredComplex, C2: BifilteredComplex) -> bool:
    """True if some bijection of generators preserves gradings and arrows."""
    if len(C1) != len(C2) or len(C1.arrows) != len(C2.arrows):
        return False

    def signature(C: BifilteredComplex) -> dict[str, tuple]:
        out, inc = C.outgoing(), C.incoming()
        return {
            g.name: (
                g.maslov, g.alexander,
                tuple(sorted(a.upower for a in out[g.name])),
                tuple(sorted(a.upower for a in inc[g.name])),
            )
            for g in C.generators
        }

    s1, s2 = signature(C1), signature(C2)
    if sorted(s1.values()) != sorted(s2.values()):
        return False
    arrows2 = {(a.source, a.target): a.upower for a in C2.arrows}
    out1 = C1.outgoing()
    inc1 = C1.incoming()
    order = [g.name for g in C1.generators]
    candidates = {x: [y for y in s2 if s2[y] == s1[x]] for x in order}
    order.sort(key=lambda x: len(candidates[x]))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(x: str, y: str) -> bool:
        for a in out1[x]:
            if a.target in mapping and arrows2.get((y, mapping[a.target])) != a.upower:
                return False
        for a in inc1[x]:
            if a.source in mapping and arrows2.get((mapping[a.source], y)) != a.upower:
                return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in candidates[x]:
            if y in used or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if search(k + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return search(0)


class ComplexFormatError(ValueError):
    """A complex document could not be parsed; ``location`` names the offending spot."""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


def to_document(C: BifilteredComplex) -> dict:
    return {
        "generators": [
            {"name": g.name, "maslov": g.maslov, "alexander": g.alexander} for g in C.generators
        ],
        "arrows": [
            {"from": a.source, "to": a.target, "upower": a.upower} for a in sorted(C.arrows)
        ],
    }


def _exact_int(value, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ComplexFormatError(f"expected an integer, got {value!r}", location)
    return value


def from_document(doc) -> BifilteredComplex:
    """Build a complex from a parsed document, validating it on the way in."""
    if not isinstance(doc, dict):
        raise ComplexFormatError("document must be an object")
    for key in ("generators", "arrows"):
        if key not in doc:
            raise ComplexFormatError(f"missing key {key!r}")
        if not isinstance(doc[key], list):
            raise ComplexFormatError("expected a list", f"$.{key}")
    if not doc["generators"]:
        raise ComplexFormatError("complex must be nonempty", "$.generators")
    gens: list[Generator] = []
    seen: set[str] = set()
    for k, entry in enumerate(doc["generators"]):
        loc = f"$.generators[{k}]"
        if not isinstance(entry, dict):
            raise ComplexFormatError("expected an object", loc)
        for key in ("name", "maslov", "alexander"):
            if key not in entry:
                raise ComplexFormatError(f"missing key {key!r}", loc)
        name = entry["name"]
        if not isinstance(name, str) or not name:
            raise ComplexFormatError("generator name must be a nonempty string", f"{loc}.name")
        if name in seen:
            raise ComplexFormatError(f"duplicate generator name {name!r}", f"{loc}.name")
        seen.add(name)
        gens.append(Generator(name, _exact_int(entry["maslov"], f"{loc}.maslov"),
                              _exact_int(entry["alexander"], f"{loc}.alexander")))
    arrows: set[Arrow] = set()
    for k, entry in enumerate(doc["arrows"]):
        loc = f"$.arrows[{k}]"
        if not isinstance(entry, dict):
            raise ComplexFormatError("expected an object", loc)
        for key in ("from", "to", "upower"):
            if key not in entry:
                raise ComplexFormatError(f"missing key {key!r}", loc)
        for key in ("from", "to"):
            if entry[key] not in seen:
                raise ComplexFormatError(f"unknown generator {entry[key]!r}", f"{loc}.{key}")
        arrow = Arrow(entry["from"], entry["to"], _exact_int(entry["upower"], f"{loc}.upower"))
        if arrow in arrows:
            raise ComplexFormatError("duplicate arrow", loc)
        arrows.add(arrow)
    C = BifilteredComplex(tuple(gens), frozenset(arrows))
    report = validate(C)
    if not report.ok:
        raise ComplexFormatError(f"invalid complex: {report}")
    return C


def dumps(C: BifilteredComplex) -> str:
    return json.dumps(to_document(C), indent=2) + "\n"


def loads(text: str) -> BifilteredComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc
    return from_document(doc)
