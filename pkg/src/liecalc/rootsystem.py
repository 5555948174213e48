"""Cartan data for semisimple root systems.

Coordinates are fixed once for the whole package:

* a weight is a tuple of integers ``(n_1, ..., n_l)`` meaning
  ``sum n_i * fund_weight_i``;
* a coroot vector is a tuple of ``Fraction`` meaning ``sum c_j * simple_coroot_j``;
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` holds the
  fundamental coordinates of ``alpha_j``.

With these conventions the pairing of a weight with a coroot vector is a dot
product, and a dominant weight is one with nonnegative coordinates.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Sequence

from .exactlin import solve_rational

Weight = tuple[int, ...]
CorootVector = tuple[Fraction, ...]

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class RootSystemError(ValueError):
    """Invalid Cartan type or a weight that does not fit the system."""


def _simple_component(family: str, n: int) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Squared root lengths and nonzero off-diagonal inner products (Bourbaki labels, 0-based)."""
    edges: dict[tuple[int, int], int] = {}
    if family in "ABCD":
        lengths = [2] * n
        for i in range(n - 1):
            edges[i, i + 1] = -1
        if family == "B":
            lengths[-1] = 1
        elif family == "C":
            lengths[-1] = 4
            edges[n - 2, n - 1] = -2
        elif family == "D":
            del edges[n - 2, n - 1]
            edges[n - 3, n - 1] = -1
    elif family == "E":
        lengths = [2] * n
        edges[0, 2] = -1
        edges[1, 3] = -1
        for i in range(2, n - 1):
            edges[i, i + 1] = -1
    elif family == "F":
        lengths = [4, 4, 2, 2]
        edges = {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    else:  # G
        lengths = [2, 6]
        edges = {(0, 1): -3}
    return lengths, edges


def parse_type(text: str) -> list[tuple[str, int]]:
    """Parse ``"A2"``, ``"b3"``, ``"A1xA1"`` into ``[(family, rank), ...]``."""
    parts = [p for p in re.split(r"[xX]", text.strip())]
    out = []
    for p in parts:
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", p)
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        out.append((m.group(1).upper(), int(m.group(2))))
    return out


@dataclass(frozen=True)
class Root:
    simple: tuple[int, ...]  # coefficients on the simple roots
    fundamental: Weight  # the same root in fundamental-weight coordinates
    coroot: tuple[int, ...]  # the coroot, on the simple coroots

    @property
    def height(self) -> int:
        return sum(self.simple)


@dataclass(frozen=True)
class RootSystem:
    components: tuple[tuple[str, int], ...]
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...] = field(repr=False)  # squared lengths of simple roots
    positive_roots: tuple[Root, ...] = field(repr=False)
    offsets: tuple[int, ...] = field(repr=False)  # first simple index of each component

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def name(self) -> str:
        return "x".join(f"{f}{n}" for f, n in self.components)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def positive_coroots(self) -> tuple[CorootVector, ...]:
        return tuple(tuple(Fraction(c) for c in r.coroot) for r in self.positive_roots)

    @cached_property
    def rho_check(self) -> CorootVector:
        total = [sum(r.coroot[j] for r in self.positive_roots) for j in range(self.rank)]
        return tuple(Fraction(t, 2) for t in total)

    @cached_property
    def two_rho_check(self) -> tuple[int, ...]:
        return tuple(sum(r.coroot[j] for r in self.positive_roots) for j in range(self.rank))

    def component_roots(self, c: int) -> list[Root]:
        lo = self.offsets[c]
        hi = lo + self.components[c][1]
        return [r for r in self.positive_roots if any(r.simple[lo:hi])]

    @cached_property
    def highest_roots(self) -> tuple[Weight, ...]:
        return tuple(
            max(self.component_roots(c), key=lambda r: r.height).fundamental
            for c in range(len(self.components))
        )

    @cached_property
    def coxeter_numbers(self) -> tuple[int, ...]:
        return tuple(
            max(r.height for r in self.component_roots(c)) + 1
            for c in range(len(self.components))
        )

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        return exponents_from_heights(self)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m + 1 for m in self.exponents)

    @property
    def weyl_order(self) -> int:
        return prod(self.degrees)

    # -- weights ---------------------------------------------------------

    def check(self, lam: Sequence[int]) -> Weight:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.rank:
            raise RootSystemError(f"weight {lam} has length {len(lam)}, rank is {self.rank}")
        return lam

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(x >= 0 for x in lam)

    def pairing(self, lam: Sequence, coroot: Sequence) -> Fraction:
        """``<lam, coroot>`` for a weight and a vector in simple-coroot coordinates."""
        if len(lam) != self.rank or len(coroot) != self.rank:
            raise RootSystemError("rank mismatch in pairing")
        return sum((Fraction(a) * Fraction(b) for a, b in zip(lam, coroot)), Fraction(0))

    def simple_root(self, i: int) -> Weight:
        return tuple(row[i] for row in self.cartan)

    def to_simple_coords(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``lam`` on the simple roots (rational in general)."""
        x = solve_rational(self.cartan, list(lam))
        assert x is not None  # the Cartan matrix is invertible
        return x

    def act(self, matrix: Sequence[Sequence[int]], lam: Sequence[int]) -> Weight:
        return tuple(sum(a * b for a, b in zip(row, lam)) for row in matrix)

    @cached_property
    def longest_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of the longest Weyl group element on fundamental coordinates.

        It is the element carrying ``-rho`` to ``rho``; its columns are the
        images of the fundamental weights.
        """
        cols = []
        for i in range(self.rank):
            e = [int(i == j) for j in range(self.rank)]
            cols.append(self._w0_apply(e))
        return tuple(tuple(cols[j][i] for j in range(self.rank)) for i in range(self.rank))

    def _w0_apply(self, lam: list[int]) -> list[int]:
        # straighten -rho to rho, replaying the same reflections on lam
        xi = [-1] * self.rank
        lam = list(lam)
        while True:
            i = next((k for k, v in enumerate(xi) if v < 0), None)
            if i is None:
                return lam
            for vec in (xi, lam):
                c = vec[i]
                for r in range(self.rank):
                    vec[r] -= c * self.cartan[r][i]

    def star(self, lam: Sequence[int]) -> Weight:
        """``-w0(lam)``."""
        return tuple(-x for x in self.act(self.longest_matrix, self.check(lam)))

    def weyl_dimension(self, lam: Sequence[int]) -> int:
        lam = self.check(lam)
        if not self.is_dominant(lam):
            raise RootSystemError(f"weight {lam} is not dominant")
        num = 1
        den = 1
        for r in self.positive_roots:
            num *= sum((a + 1) * c for a, c in zip(lam, r.coroot))
            den *= sum(r.coroot)
        q, rem = divmod(num, den)
        assert rem == 0
        return q


def build(spec: Sequence[tuple[str, int]] | str) -> RootSystem:
    """Build the root system of the given Cartan type, e.g. ``build("A2")``."""
    if isinstance(spec, str):
        spec = parse_type(spec)
    comps = []
    for family, n in spec:
        family = str(family).upper()
        n = int(n)
        if family not in VALID_RANKS or not VALID_RANKS[family](n):
            raise RootSystemError(f"invalid Cartan type {family}{n}")
        comps.append((family, n))
    if not comps:
        raise RootSystemError("empty Cartan type")

    lengths: list[int] = []
    inner: dict[tuple[int, int], int] = {}
    offsets = []
    for family, n in comps:
        off = len(lengths)
        offsets.append(off)
        ls, edges = _simple_component(family, n)
        lengths.extend(ls)
        for (i, j), v in edges.items():
            inner[off + i, off + j] = inner[off + j, off + i] = v
    rank = len(lengths)

    def ip(i: int, j: int) -> int:
        return lengths[i] if i == j else inner.get((i, j), 0)

    # cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)
    cartan = tuple(
        tuple(2 * ip(i, j) // lengths[i] for j in range(rank)) for i in range(rank)
    )

    roots = _positive_roots(cartan, rank)
    records = []
    for beta in roots:
        norm = sum(beta[i] * beta[j] * ip(i, j) for i in range(rank) for j in range(rank))
        coroot = []
        for j in range(rank):
            c, rem = divmod(beta[j] * lengths[j], norm)
            assert rem == 0
            coroot.append(c)
        fund = tuple(sum(cartan[i][j] * beta[j] for j in range(rank)) for i in range(rank))
        records.append(Root(beta, fund, tuple(coroot)))
    records.sort(key=lambda r: (r.height, r.simple))
    return RootSystem(
        components=tuple(comps),
        cartan=cartan,
        lengths=tuple(lengths),
        positive_roots=tuple(records),
        offsets=tuple(offsets),
    )


def _positive_roots(cartan, rank: int) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by root-string closure."""
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                # p: how far the alpha_i-string extends below beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - sum(cartan[i][j] * beta[j] for j in range(rank))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda b: (sum(b), b))


def exponents_from_heights(rs: RootSystem) -> tuple[int, ...]:
    """Exponents as the dual partition of the root height distribution."""
    counts = Counter(r.height for r in rs.positive_roots)
    top = max(counts)
    out = []
    for k in range(1, top + 1):
        out.extend([k] * (counts[k] - counts.get(k + 1, 0)))
    return tuple(sorted(out))
