"""Filtered simplification of bifiltered complexes.

The workhorse is :class:`Workspace`, a mutable copy of a complex on which
filtered changes of basis ``x -> x + U^k y`` are performed.  Because the
U-power of an arrow is forced by the Maslov gradings of its ends, the
differential is stored as a plain F2 adjacency structure.

Change-of-basis types used here, and what they leave untouched:

* same column (``k = 0``, ``A(y) <= A(x)``): vertical simplification;
* same row (``A(y) - k = A(x)``, ``k > 0``): preserves every vertical arrow;
* strictly diagonal (``k > 0``, ``A(y) - k < A(x)``): preserves every
  vertical and every horizontal arrow.
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field

from .cfk import Arrow, BifilteredComplex, Generator, arrow_kind
from .linalg import f2_rank

log = logging.getLogger(__name__)

__all__ = [
    "Workspace",
    "SimplifiedBasis",
    "StandardForm",
    "NotStandard",
    "GlobalHomology",
    "VerticalHomologyError",
    "cancel_zero_arrows",
    "split_components",
    "check_global_homology",
    "vertically_simplify",
    "simplify",
    "standard_form",
    "homology_summand",
]

VERTICAL, HORIZONTAL, DIAGONAL, ZERO = "vertical", "horizontal", "diagonal", "zero"


class VerticalHomologyError(ValueError):
    """The complex does not have rank-one vertical homology in grading 0."""


class Workspace:
    """Mutable bifiltered complex supporting filtered changes of basis."""

    def __init__(self, C: BifilteredComplex):
        self.names = [g.name for g in C.generators]
        self.maslov = {g.name: g.maslov for g in C.generators}
        self.alex = {g.name: g.alexander for g in C.generators}
        self.out: dict[str, set[str]] = {n: set() for n in self.names}
        self.inc: dict[str, set[str]] = {n: set() for n in self.names}
        for a in C.arrows:
            self.out[a.source].add(a.target)
            self.inc[a.target].add(a.source)
        self.ops = 0
        self._created: list[tuple[str, str]] | None = None

    def upower(self, s: str, t: str) -> int:
        return (self.maslov[t] - self.maslov[s] + 1) // 2

    def kind(self, s: str, t: str) -> str:
        n = self.upower(s, t)
        if n == 0:
            return VERTICAL if self.alex[t] < self.alex[s] else ZERO
        if self.alex[t] - n == self.alex[s]:
            return HORIZONTAL
        return DIAGONAL

    def length(self, s: str, t: str) -> int:
        n = self.upower(s, t)
        return self.alex[s] - self.alex[t] if n == 0 else n

    def arrows(self, kind: str | None = None) -> list[tuple[str, str]]:
        return [
            (s, t) for s in self.names for t in sorted(self.out[s])
            if kind is None or self.kind(s, t) == kind
        ]

    def shift(self, x: str, y: str) -> int | None:
        """The k with M(U^k y) = M(x), or None if parities differ."""
        dm = self.maslov[y] - self.maslov[x]
        return None if dm % 2 else dm // 2

    def is_filtered(self, x: str, y: str) -> bool:
        k = self.shift(x, y)
        return x != y and k is not None and k >= 0 and self.alex[y] - k <= self.alex[x]

    def _toggle(self, s: str, t: str) -> None:
        if t in self.out[s]:
            self.out[s].discard(t)
            self.inc[t].discard(s)
        else:
            self.out[s].add(t)
            self.inc[t].add(s)
            if self._created is not None:
                self._created.append((s, t))

    def add(self, x: str, y: str) -> None:
        """Replace basis element ``x`` by ``x + U^k y``; the name ``x`` is kept."""
        if not self.is_filtered(x, y):
            raise ValueError(f"change of basis {x} -> {x} + {y} is not filtered")
        self.ops += 1
        for t in list(self.out[y]):
            self._toggle(x, t)
        for z in list(self.inc[x]):
            self._toggle(z, y)

    def degree(self, kind: str) -> dict[str, int]:
        deg = {n: 0 for n in self.names}
        for s, t in self.arrows(kind):
            deg[s] += 1
            deg[t] += 1
        return deg

    def to_complex(self) -> BifilteredComplex:
        gens = tuple(Generator(n, self.maslov[n], self.alex[n]) for n in self.names)
        arrows = frozenset(
            Arrow(s, t, self.upower(s, t)) for s in self.names for t in self.out[s]
        )
        return BifilteredComplex(gens, arrows)

    # -- simplification passes -------------------------------------------

    def _shortest_first(self, kind: str, key, step) -> bool:
        """Pair arrows of ``kind`` in increasing ``key`` order.

        ``step(s, t)`` clears the other arrows at the chosen pair and returns
        False to abort.  Arrows created along the way join the queue, so the
        choice at each step is the minimum over all current unpaired arrows.
        """
        heap = [(key(s, t), s, t) for s, t in self.arrows(kind)]
        heapq.heapify(heap)
        paired: set[str] = set()
        self._created = []
        try:
            while heap:
                _, s, t = heapq.heappop(heap)
                if s in paired or t in paired or t not in self.out[s]:
                    continue
                if not step(s, t):
                    return False
                paired |= {s, t}
                for s2, t2 in self._created:
                    if s2 not in paired and t2 not in paired and self.kind(s2, t2) == kind:
                        heapq.heappush(heap, (key(s2, t2), s2, t2))
                self._created.clear()
            return True
        finally:
            self._created = None

    def simplify_vertical(self) -> list[tuple[str, str, int]]:
        """Pair up vertical arrows shortest first; return (source, target, length)."""
        pairs = []

        def step(s: str, t: str) -> bool:
            for t2 in sorted(self.out[s]):
                if t2 != t and self.kind(s, t2) == VERTICAL:
                    self.add(t, t2)
            for s2 in sorted(self.inc[t]):
                if s2 != s and self.kind(s2, t) == VERTICAL:
                    self.add(s2, s)
            pairs.append((s, t, self.length(s, t)))
            return True

        self._shortest_first(VERTICAL, self.length, step)
        return pairs

    def _vertical_roles(self) -> dict[str, tuple]:
        roles = {}
        for s, t in self.arrows(VERTICAL):
            length = self.length(s, t)
            roles[s] = ("S", length, t, s)
            roles[t] = ("T", length, s, s)
        return roles

    @staticmethod
    def _role_key(roles: dict[str, tuple], x: str) -> tuple:
        # Same-position changes x += y keep a vertical pairing intact (after
        # compensation) exactly when key(y) <= key(x).
        r = roles.get(x)
        if r is None:
            return (1, 0, "")
        if r[0] == "T":
            return (0, r[1], r[3])
        return (2, -r[1], r[3])

    def _compensated_add(self, roles: dict[str, tuple], x: str, y: str) -> None:
        k = self.shift(x, y)
        self.add(x, y)
        if k == 0 and self.alex[x] == self.alex[y]:
            rx, ry = roles.get(x), roles.get(y)
            if rx and ry and rx[0] == ry[0]:
                self.add(rx[2], ry[2])

    def _horizontal_pass(self) -> bool:
        roles = self._vertical_roles()
        order = sorted(self.names, key=lambda x: (-self.alex[x], self._role_key(roles, x), x))
        rank = {x: i for i, x in enumerate(order)}

        def step(s: str, t: str) -> bool:
            for t2 in sorted(self.out[s]):
                if t2 != t and self.kind(s, t2) == HORIZONTAL:
                    if rank[t2] > rank[t]:
                        return False
                    self._compensated_add(roles, t, t2)
            for s2 in sorted(self.inc[t]):
                if s2 != s and self.kind(s2, t) == HORIZONTAL:
                    if rank[s] > rank[s2]:
                        return False
                    self._compensated_add(roles, s2, s)
            return True

        return self._shortest_first(HORIZONTAL, lambda s, t: rank[s] - rank[t], step)

    def simplify_horizontal(self, max_passes: int = 50) -> bool:
        for _ in range(max_passes):
            self._horizontal_pass()
            if self.is_simplified(HORIZONTAL) and self.is_simplified(VERTICAL):
                return True
        return False

    def _strictly_diagonal(self, x: str, y: str) -> bool:
        k = self.shift(x, y)
        return k is not None and k > 0 and self.alex[y] - k < self.alex[x]

    def clear_diagonals(self, max_steps: int = 100_000) -> bool:
        """Greedily remove diagonal arrows using strictly diagonal base changes."""
        for _ in range(max_steps):
            diags = self.arrows(DIAGONAL)
            if not diags:
                return True
            base = len(diags)
            diags.sort(key=lambda st: (self._drop(*st), st))
            for s, t in diags:
                moves = [(u, t) for u in sorted(self.out[s]) if u != t and self._strictly_diagonal(u, t)]
                moves += [(v, s) for v in sorted(self.inc[t]) if v != s and self._strictly_diagonal(v, s)]
                best = None
                for x, y in moves:
                    count = base + self._diagonal_delta(x, y)
                    if count < base and (best is None or count < best[0]):
                        best = (count, x, y)
                if best is not None:
                    self.add(best[1], best[2])
                    break
            else:
                return False
        return False

    def _diagonal_delta(self, x: str, y: str) -> int:
        """Change in the number of diagonal arrows caused by ``add(x, y)``.

        The toggled pairs (x, t) and (z, y) never coincide, since an arrow
        never joins a generator to itself.
        """
        delta = 0
        for t in self.out[y]:
            if self.kind(x, t) == DIAGONAL:
                delta += -1 if t in self.out[x] else 1
        for z in self.inc[x]:
            if self.kind(z, y) == DIAGONAL:
                delta += -1 if y in self.out[z] else 1
        return delta

    def _drop(self, s: str, t: str) -> int:
        n = self.upower(s, t)
        return n + self.alex[s] - self.alex[t] + n

    def is_simplified(self, kind: str) -> bool:
        return all(v <= 1 for v in self.degree(kind).values())


@dataclass
class SimplifiedBasis:
    """A complex after filtered change of basis, with its vertical-homology generator."""

    complex: BifilteredComplex
    distinguished: str
    pairing: list[tuple[str, str, str, int]] = field(default_factory=list)
    horizontally_simplified: bool = False
    diagonal_free: bool = False


@dataclass(frozen=True)
class StandardForm:
    lengths: tuple[int, ...]

    def __str__(self) -> str:
        return "[" + ", ".join(str(b) for b in self.lengths) + "]"


@dataclass(frozen=True)
class NotStandard:
    reason: str

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"not standard ({self.reason})"


@dataclass(frozen=True)
class GlobalHomology:
    """Homology over F2[U, U^-1]: ranks of the even and odd parts."""

    even_rank: int
    odd_rank: int

    @property
    def status(self) -> str:
        if self.even_rank == 0 and self.odd_rank == 0:
            return "acyclic"
        if self.even_rank + self.odd_rank == 1:
            return "rank 1"
        return "other"

    @property
    def grading(self) -> int | None:
        """Grading (mod 2) of the generator when the homology has rank one."""
        if self.status != "rank 1":
            return None
        return 0 if self.even_rank else 1

    @property
    def is_knot_like(self) -> bool:
        return self.even_rank == 1 and self.odd_rank == 0

    def __str__(self) -> str:
        if self.status == "rank 1":
            return f"free of rank 1 with generator in grading {self.grading}"
        if self.status == "acyclic":
            return "acyclic"
        return f"other (ranks {self.even_rank} even, {self.odd_rank} odd)"


def cancel_zero_arrows(C: BifilteredComplex) -> BifilteredComplex:
    """Cancel arrows that preserve both filtrations (filtered Gaussian elimination)."""
    out = {g.name: set() for g in C.generators}
    inc = {g.name: set() for g in C.generators}
    for a in C.arrows:
        out[a.source].add(a.target)
        inc[a.target].add(a.source)
    gens = {g.name: g for g in C.generators}
    alive = [g.name for g in C.generators]

    def is_zero(s: str, t: str) -> bool:
        return gens[s].maslov - 1 == gens[t].maslov and gens[s].alexander == gens[t].alexander

    while True:
        pick = next(((s, t) for s in alive for t in sorted(out[s]) if is_zero(s, t)), None)
        if pick is None:
            break
        s, t = pick
        sources = [z for z in inc[t] if z != s]
        targets = [w for w in out[s] if w != t]
        for z in sources:
            for w in targets:
                if w in out[z]:
                    out[z].discard(w)
                    inc[w].discard(z)
                else:
                    out[z].add(w)
                    inc[w].add(z)
        for x in (s, t):
            for w in out[x]:
                inc[w].discard(x)
            for z in inc[x]:
                out[z].discard(x)
            out[x].clear()
            inc[x].clear()
        alive = [n for n in alive if n not in (s, t)]
    keep = [gens[n] for n in alive]
    arrows = frozenset(
        Arrow(s, t, (gens[t].maslov - gens[s].maslov + 1) // 2) for s in alive for t in out[s]
    )
    return BifilteredComplex(tuple(keep), arrows)


def split_components(C: BifilteredComplex) -> list[BifilteredComplex]:
    """Connected components of the undirected arrow graph, in generator order."""
    parent = {g.name: g.name for g in C.generators}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in C.arrows:
        ra, rb = find(a.source), find(a.target)
        if ra != rb:
            parent[rb] = ra
    groups: dict[str, list[str]] = {}
    for g in C.generators:
        groups.setdefault(find(g.name), []).append(g.name)
    return [C.subcomplex(names) for names in groups.values()]


def _slice_matrix(C: BifilteredComplex, src_parity: int) -> list[int]:
    """Rows of the differential from the parity-``src_parity`` slice, as bitmasks."""
    tgt = [g.name for g in C.generators if (g.maslov - src_parity + 1) % 2 == 0]
    index = {n: i for i, n in enumerate(tgt)}
    out = C.outgoing()
    rows = []
    for g in C.generators:
        if (g.maslov - src_parity) % 2 == 0:
            mask = 0
            for a in out[g.name]:
                mask ^= 1 << index[a.target]
            rows.append(mask)
    return rows


def check_global_homology(C: BifilteredComplex) -> GlobalHomology:
    """Homology of C as a module over F2[U, U^-1] (always free)."""
    n_even = sum(1 for g in C.generators if g.maslov % 2 == 0)
    n_odd = len(C) - n_even
    r_from_odd = f2_rank(_slice_matrix(C, 1))
    r_from_even = f2_rank(_slice_matrix(C, 0))
    return GlobalHomology(n_even - r_from_even - r_from_odd, n_odd - r_from_odd - r_from_even)


def _require_knot_like(C: BifilteredComplex) -> None:
    if not C.is_reduced():
        raise ValueError("complex is not reduced; run cancel_zero_arrows first")
    h = check_global_homology(C)
    if not h.is_knot_like:
        raise VerticalHomologyError(f"global homology is {h}, expected rank 1 in grading 0")


def _distinguished(ws: Workspace) -> str:
    deg = ws.degree(VERTICAL)
    free = [n for n in ws.names if deg[n] == 0]
    if len(free) != 1 or ws.maslov[free[0]] != 0:
        raise VerticalHomologyError(
            f"vertical homology not rank 1 in grading 0 (unpaired: {free})"
        )
    return free[0]


def vertically_simplify(C: BifilteredComplex) -> SimplifiedBasis:
    """Filtered change of basis in the i = 0 column pairing all but one generator."""
    _require_knot_like(C)
    ws = Workspace(C)
    pairs = ws.simplify_vertical()
    x0 = _distinguished(ws)
    return SimplifiedBasis(
        ws.to_complex(), x0, [(s, t, VERTICAL, length) for s, t, length in pairs],
        horizontally_simplified=ws.is_simplified(HORIZONTAL),
        diagonal_free=not ws.arrows(DIAGONAL),
    )


def simplify(C: BifilteredComplex) -> SimplifiedBasis:
    """Vertically simplify, then horizontally simplify, then clear diagonal arrows.

    The horizontal and diagonal passes only use changes of basis that keep the
    vertical pairing, so the distinguished generator is unchanged.  Success of
    the later passes is recorded on the result rather than raised.
    """
    _require_knot_like(C)
    ws = Workspace(C)
    ws.simplify_vertical()
    x0 = _distinguished(ws)
    h_ok = ws.simplify_horizontal()
    d_ok = ws.clear_diagonals() if h_ok else False
    log.debug("simplify: %d generators, %d basis changes, horizontal=%s diagonal-free=%s",
              len(ws.names), ws.ops, h_ok, d_ok)
    # Diagonal clearing never touches vertical arrows; the pairing is re-read.
    pairing = [(s, t, VERTICAL, ws.length(s, t)) for s, t in ws.arrows(VERTICAL)]
    pairing += [(s, t, HORIZONTAL, ws.length(s, t)) for s, t in ws.arrows(HORIZONTAL)]
    if _distinguished(ws) != x0:
        raise AssertionError("horizontal simplification moved the vertical homology generator")
    return SimplifiedBasis(ws.to_complex(), x0, pairing,
                           horizontally_simplified=h_ok and ws.is_simplified(HORIZONTAL),
                           diagonal_free=not ws.arrows(DIAGONAL))


def _read_chain(basis: SimplifiedBasis) -> tuple[list[int], list[str]] | NotStandard:
    """Follow alternating horizontal and vertical arrows out from x0.

    Horizontal entries are positive for an arrow pointing into the even-indexed
    end; vertical entries are positive for an arrow pointing away from the
    odd-indexed end (the staircase orientation).
    """
    C = basis.complex
    comp = next(K for K in split_components(C) if any(g.name == basis.distinguished for g in K.generators))
    out, inc = comp.outgoing(), comp.incoming()
    kinds = {a: arrow_kind(comp, a) for a in comp.arrows}
    if any(k not in (VERTICAL, HORIZONTAL) for k in kinds.values()):
        return NotStandard("component of the distinguished generator has diagonal arrows")

    def incident(x: str, kind: str) -> list[tuple[Arrow, int]]:
        res = [(a, +1) for a in inc[x] if kinds[a] == kind]
        res += [(a, -1) for a in out[x] if kinds[a] == kind]
        return res

    chain = [basis.distinguished]
    lengths: list[int] = []
    used: set[Arrow] = set()
    while True:
        x = chain[-1]
        kind = HORIZONTAL if len(chain) % 2 else VERTICAL
        options = [(a, sign) for a, sign in incident(x, kind) if a not in used]
        if not options:
            break
        if len(options) > 1:
            return NotStandard(f"generator {x} has {len(options)} {kind} arrows")
        a, sign = options[0]
        used.add(a)
        if kind == VERTICAL:
            sign = -sign  # leaving x_odd counts as positive
        nxt = a.source if a.target == x else a.target
        length = a.upower if kind == HORIZONTAL else (
            comp.generator(a.source).alexander - comp.generator(a.target).alexander)
        lengths.append(sign * length)
        chain.append(nxt)
        if nxt in chain[:-1]:
            return NotStandard("arrows through the distinguished generator form a loop")
    if len(chain) != len(comp) or len(used) != len(comp.arrows):
        return NotStandard("component of the distinguished generator is not a single chain")
    return lengths, chain


def standard_form(C: BifilteredComplex) -> StandardForm | NotStandard:
    """Standard-form lengths [b1, ..., bn] read from x0 up to the point of symmetry."""
    basis = C if isinstance(C, SimplifiedBasis) else simplify(C)
    read = _read_chain(basis)
    if isinstance(read, NotStandard):
        return read
    lengths, _ = read
    if len(lengths) % 2:
        return NotStandard("chain through the distinguished generator has odd length")
    half = len(lengths) // 2
    mirrored = [-b for b in reversed(lengths[half:])]
    if lengths[:half] != [-b for b in mirrored] and lengths[:half] != mirrored:
        return NotStandard("chain through the distinguished generator is not symmetric")
    return StandardForm(tuple(lengths[:half]))


def homology_summand(C: BifilteredComplex) -> tuple[BifilteredComplex, str]:
    """The direct summand carrying the homology, after full simplification.

    Returns the component of the simplified complex that contains the
    vertical-homology generator, together with that generator's name.
    """
    basis = simplify(C)
    comp = next(K for K in split_components(basis.complex)
                if any(g.name == basis.distinguished for g in K.generators))
    return comp, basis.distinguished
