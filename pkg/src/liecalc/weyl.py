"""Weyl group elements acting on weights in fundamental coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .rootsystem import RootSystem, Weight

DEFAULT_CAP = 1_000_000

Matrix = tuple[tuple[int, ...], ...]


class WeylCapExceeded(RuntimeError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"|W| = {order} exceeds the enumeration cap {cap}")
        self.order = order
        self.cap = cap


def _mul(A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in cols) for row in A)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Matrix of ``s_i``: ``lam -> lam - lam_i * alpha_i``."""
    n = rs.rank
    alpha = rs.simple_root(i)
    return tuple(
        tuple(int(r == c) - (alpha[r] if c == i else 0) for c in range(n)) for r in range(n)
    )


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of W: a reduced word (0-based simple indices) and its matrix.

    ``word = (i1, ..., ik)`` stands for ``s_i1 s_i2 ... s_ik``. Equality and
    hashing go through the matrix since words are not unique.
    """

    word: tuple[int, ...]
    matrix: Matrix = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __len__(self):
        return len(self.word)

    def __call__(self, lam: Sequence[int]) -> Weight:
        return tuple(sum(a * b for a, b in zip(row, lam)) for row in self.matrix)

    def word_str(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i + 1}" for i in self.word)


def element(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """The element ``s_{word[0]} ... s_{word[-1]}``; the word is reduced first."""
    M = _identity(rs.rank)
    for i in word:
        if not 0 <= i < rs.rank:
            raise IndexError(f"simple index {i + 1} out of range 1..{rs.rank}")
        M = _mul(M, reflection_matrix(rs, i))
    w = WeylElement(tuple(word), M)
    if inversion_count(rs, w) != len(word):
        w = reduced(rs, w)
    return w


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement((), _identity(rs.rank))


def multiply(rs: RootSystem, v: WeylElement, w: WeylElement) -> WeylElement:
    return element(rs, v.word + w.word)


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return element(rs, tuple(reversed(w.word)))


def reflect(rs: RootSystem, i: int, lam: Sequence[int]) -> Weight:
    if not 0 <= i < rs.rank:
        raise IndexError(f"simple index {i + 1} out of range 1..{rs.rank}")
    lam = rs.check(lam)
    c = lam[i]
    return tuple(x - c * a for x, a in zip(lam, rs.simple_root(i)))


def height(rs: RootSystem, lam: Sequence[int]) -> Fraction:
    """``<lam, rho^vee>``; for a root this is its height."""
    return rs.pairing(lam, rs.rho_check)


def inversion_count(rs: RootSystem, w: WeylElement) -> int:
    """``#{alpha > 0 : w(alpha) < 0}``."""
    return sum(1 for r in rs.positive_roots if height(rs, w(r.fundamental)) < 0)


def length(rs: RootSystem, w: WeylElement) -> int:
    return inversion_count(rs, w)


def reduced(rs: RootSystem, w: WeylElement) -> WeylElement:
    """Same element with a reduced word read off by straightening ``w(rho)``."""
    res = straighten(rs, w(rs.rho))
    assert res is not None
    # u(w rho) = rho with u = s_ik ... s_i1, hence w = u^-1 = s_i1 ... s_ik
    return WeylElement(tuple(reversed(res.w.word)), w.matrix)


def longest_element(rs: RootSystem) -> WeylElement:
    res = straighten(rs, tuple(-x for x in rs.rho))
    assert res is not None and res.dominant == rs.rho
    return res.w


def dot(rs: RootSystem, w: WeylElement, xi: Sequence[int]) -> Weight:
    """The rho-shifted action ``w(xi + rho) - rho``."""
    xi = rs.check(xi)
    moved = w(tuple(x + 1 for x in xi))
    return tuple(x - 1 for x in moved)


@dataclass(frozen=True)
class Straightened:
    dominant: Weight
    w: WeylElement
    steps: int


def is_singular(rs: RootSystem, xi: Sequence[int]) -> bool:
    return any(sum(a * c for a, c in zip(xi, r.coroot)) == 0 for r in rs.positive_roots)


def straighten(rs: RootSystem, xi: Sequence[int]) -> Optional[Straightened]:
    """Conjugate a regular ``xi`` into the dominant chamber.

    Returns None when ``xi`` is singular. Otherwise ``w(xi)`` is dominant and
    ``steps == length(w)``. At each step the smallest index with a negative
    coordinate is reflected.
    """
    xi = rs.check(xi)
    if is_singular(rs, xi):
        return None
    cur = list(xi)
    applied: list[int] = []
    M = _identity(rs.rank)
    while True:
        i = next((k for k, v in enumerate(cur) if v < 0), None)
        if i is None:
            break
        c = cur[i]
        alpha = rs.simple_root(i)
        cur = [x - c * a for x, a in zip(cur, alpha)]
        applied.append(i)
        M = _mul(reflection_matrix(rs, i), M)
    # w = s_ik ... s_i1
    w = WeylElement(tuple(reversed(applied)), M)
    return Straightened(tuple(cur), w, len(applied))


def poincare_coefficients(rs: RootSystem) -> list[int]:
    """Coefficients of ``prod_i (1 + q + ... + q^(d_i - 1))``; entry i is ``|W(i)|``."""
    coeffs = [1]
    for d in rs.degrees:
        nxt = [0] * (len(coeffs) + d - 1)
        for k, c in enumerate(coeffs):
            for j in range(d):
                nxt[k + j] += c
        coeffs = nxt
    return coeffs


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """All of W, ordered by (length, lexicographic reduced word).

    Each element carries its lexicographically smallest reduced word.
    """
    order = rs.weyl_order
    if order > cap:
        raise WeylCapExceeded(order, cap)
    refl = [reflection_matrix(rs, i) for i in range(rs.rank)]
    simple = [rs.simple_root(i) for i in range(rs.rank)]
    level = [identity(rs)]
    out = list(level)
    while level:
        seen: set[Matrix] = set()
        nxt = []
        for w in level:
            for i in range(rs.rank):
                # length goes up iff w(alpha_i) > 0
                if height(rs, w(simple[i])) < 0:
                    continue
                M = _mul(w.matrix, refl[i])
                if M not in seen:
                    seen.add(M)
                    nxt.append(WeylElement(w.word + (i,), M))
        level = nxt
        out.extend(level)
    assert len(out) == order
    return out


def elements_of_length(rs: RootSystem, i: int, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    return [w for w in enumerate_group(rs, cap) if len(w.word) == i]


def coroot_action(rs: RootSystem, w: WeylElement, h: Sequence) -> tuple[Fraction, ...]:
    """Contragredient action on simple-coroot coordinates: ``<lam, w h> = <w^-1 lam, h>``."""
    winv = inverse(rs, w).matrix
    # w h = (M^-1)^T h
    return tuple(
        sum((Fraction(winv[r][c]) * Fraction(h[r]) for r in range(rs.rank)), Fraction(0))
        for c in range(rs.rank)
    )
