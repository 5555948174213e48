"""Lattice data of a monoid of dominant weights.

For generators ``gamma_1 .. gamma_s`` this computes the lattice they span,
the quotient ``Lambda / Z Gamma`` (the character group of the torus subgroup
``Q_Gamma``), decides whether ``Gamma = Z Gamma ∩ Lambda^+`` and produces the
dual basis used to push operators down to the S-variety.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm
from typing import Optional, Sequence

from . import exactlin
from .rootsystem import CorootVector, RootSystem, RootSystemError, Weight

DEFAULT_HILBERT_CAP = 1_000_000


@dataclass(frozen=True)
class GammaMonoid:
    rs: RootSystem = field(repr=False)
    generators: tuple[Weight, ...]
    lattice_basis: tuple[tuple[int, ...], ...]
    invariant_factors: tuple[int, ...]
    basis_indices: tuple[int, ...]  # generators spanning Z Gamma ⊗ Q

    @property
    def rank(self) -> int:
        return len(self.lattice_basis)

    @property
    def torus_rank(self) -> int:
        return self.rs.rank - self.rank

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    @property
    def dual_generators(self) -> tuple[Weight, ...]:
        return tuple(self.rs.star(g) for g in self.generators)

    def quotient_description(self) -> str:
        """``Lambda / Z Gamma`` as an abelian group, e.g. ``Z/2`` or ``Z``."""
        parts = [f"Z/{d}" for d in self.torsion]
        if self.torus_rank:
            parts.append("Z" if self.torus_rank == 1 else f"Z^{self.torus_rank}")
        return " + ".join(parts) or "0"

    def q_description(self) -> str:
        """The diagonalizable group with character group ``Lambda / Z Gamma``."""
        parts = []
        if self.torus_rank:
            parts.append(f"torus of rank {self.torus_rank}")
        parts.extend(f"cyclic group of order {d}" for d in self.torsion)
        return " x ".join(parts) or "trivial"

    def to_json(self) -> dict:
        return {
            "generators": [list(g) for g in self.generators],
            "rank": self.rank,
            "lattice_basis": [list(b) for b in self.lattice_basis],
            "invariant_factors": list(self.invariant_factors),
            "quotient": self.quotient_description(),
            "Q_Gamma": self.q_description(),
            "basis_order": [i + 1 for i in self.basis_indices],
        }


def _validate(rs: RootSystem, gens: Sequence[Sequence[int]]) -> tuple[Weight, ...]:
    out = tuple(rs.check(g) for g in gens)
    if not out:
        raise RootSystemError("at least one generator is required")
    for g in out:
        if not rs.is_dominant(g):
            raise RootSystemError(f"generator {g} is not dominant")
        if not any(g):
            raise RootSystemError("zero generator")
    if len(set(out)) != len(out):
        raise RootSystemError("generators must be distinct")
    return out


def gamma_lattice(rs: RootSystem, gens: Sequence[Sequence[int]]) -> GammaMonoid:
    gens = _validate(rs, gens)
    basis = exactlin.hnf_basis(gens)
    # columns of the transposed generator matrix are relations in Lambda = Z^l
    factors, r = exactlin.smith_normal_form(exactlin.transpose(gens))
    assert r == len(basis)
    chosen: list[int] = []
    for j in range(len(gens)):
        if exactlin.rank([gens[k] for k in chosen + [j]]) > len(chosen):
            chosen.append(j)
    assert len(chosen) == r
    return GammaMonoid(rs, gens, basis, tuple(factors), tuple(chosen))


@dataclass(frozen=True)
class Membership:
    member: bool
    coefficients: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.member


def monoid_membership(rs: RootSystem, gens: Sequence[Sequence[int]], mu: Sequence[int]) -> Membership:
    """Decide ``mu in N gamma_1 + ... + N gamma_s``.

    Depth-first search. What remains after choosing some coefficients must be
    a sum of dominant weights, so it stays dominant and its ``rho^vee``
    pairing is an exact budget that shrinks at every step.
    """
    gens = tuple(rs.check(g) for g in gens)
    mu = rs.check(mu)
    weights = [rs.pairing(g, rs.two_rho_check) for g in gens]
    if any(w <= 0 for w in weights):
        raise RootSystemError("generators must be dominant and nonzero")

    @lru_cache(maxsize=None)
    def search(j: int, rem: Weight) -> Optional[tuple[int, ...]]:
        if not any(rem):
            return (0,) * (len(gens) - j)
        if j == len(gens):
            return None
        g = gens[j]
        budget = rs.pairing(rem, rs.two_rho_check)
        top = int(budget // weights[j])
        for a in range(top, -1, -1):
            nxt = tuple(x - a * y for x, y in zip(rem, g))
            if any(x < 0 for x in nxt):
                continue
            tail = search(j + 1, nxt)
            if tail is not None:
                return (a,) + tail
        return None

    if not rs.is_dominant(mu):
        return Membership(False)
    coeffs = search(0, mu)
    if coeffs is None:
        return Membership(False)
    return Membership(True, coeffs)


def grading_lattice_membership(rs: RootSystem, gens: Sequence[Sequence[int]], mu: Sequence[int]) -> bool:
    """Is ``mu`` in the lattice spanned by the ``gamma_j^*``?"""
    duals = [rs.star(rs.check(g)) for g in gens]
    basis = exactlin.hnf_basis(duals)
    if not basis:
        return not any(mu)
    return exactlin.lattice_contains(basis, rs.check(mu)) is not None


def dual_basis(monoid: GammaMonoid) -> list[CorootVector]:
    """Vectors ``x_1 .. x_r`` in simple-coroot coordinates with ``<gamma_i^*, x_j> = delta_ij``.

    ``i`` and ``j`` run over ``monoid.basis_indices``.
    """
    rs = monoid.rs
    rows = [monoid.dual_generators[i] for i in monoid.basis_indices]
    out = []
    for j in range(len(rows)):
        rhs = [int(i == j) for i in range(len(rows))]
        x = exactlin.solve_rational(rows, rhs)
        if x is None:
            raise AssertionError("basis generators are not independent")
        for i, row in enumerate(rows):
            assert rs.pairing(row, x) == rhs[i]
        out.append(x)
    return out


@dataclass(frozen=True)
class Eq11Verdict:
    """Outcome of testing ``Gamma = Z Gamma ∩ Lambda^+``.

    ``holds`` is None when the search hit its cap. Under the standing
    equivalence this also decides normality of the S-variety together with
    codimension at least 2 for its boundary.
    """

    holds: Optional[bool]
    witness: Optional[Weight]
    hilbert_basis: tuple[Weight, ...]
    extreme_rays: tuple[Weight, ...] = ()
    examined: int = 0

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "inconclusive": self.holds is None,
            "witness": list(self.witness) if self.witness is not None else None,
            "hilbert_basis": [list(h) for h in self.hilbert_basis],
            "extreme_rays": [list(v) for v in self.extreme_rays],
        }


def _primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    den = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _cone_rays(basis: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Extreme rays of ``span(basis) ∩ {x >= 0}`` as primitive integer vectors.

    A ray is extreme exactly when fixing its zero coordinates cuts the span
    down to a line; supports are enumerated directly.
    """
    r = len(basis)
    rays = set()
    for size in range(1, n + 1):
        for support in combinations(range(n), size):
            zeros = [c for c in range(n) if c not in support]
            # x = y . basis with x_c = 0 for c in zeros
            eqs = [[basis[k][c] for k in range(r)] for c in zeros]
            ns = exactlin.nullspace(eqs, r) if eqs else exactlin.nullspace([[0] * r], r)
            if len(ns) != 1:
                continue
            y = ns[0]
            x = [sum(y[k] * basis[k][c] for k in range(r)) for c in range(n)]
            if any(x[c] == 0 for c in support):
                continue
            if all(x[c] < 0 for c in support):
                x = [-t for t in x]
            elif not all(x[c] > 0 for c in support):
                continue
            rays.add(_primitive(x))
    return sorted(rays)


def _levels(coeffs: Sequence[int], level: int):
    """Nonnegative integer vectors ``v`` with ``sum coeffs_i v_i == level``."""
    n = len(coeffs)

    def rec(i: int, rem: int, acc: list[int]):
        if i == n - 1:
            q, r = divmod(rem, coeffs[i])
            if r == 0:
                yield tuple(acc + [q])
            return
        for a in range(rem // coeffs[i] + 1):
            yield from rec(i + 1, rem - a * coeffs[i], acc + [a])

    yield from rec(0, level, [])


def check_eq11(rs: RootSystem, gens: Sequence[Sequence[int]], cap: int = DEFAULT_HILBERT_CAP) -> Eq11Verdict:
    """Test ``Gamma = Z Gamma ∩ Lambda^+`` via the Hilbert basis of the right side.

    The monoid ``M = Z Gamma ∩ Lambda^+`` spans the cone
    ``span(Gamma) ∩ {dominant}``. If some extreme ray of that cone carries no
    generator, its primitive lattice point lies in ``M`` but not in
    ``Gamma``. Otherwise every Hilbert basis element of ``M`` is a ray
    generator or lies in a half-open parallelepiped spanned by ray generators,
    so its level ``<., 2 rho^vee>`` is below the sum of the ray levels and a
    level-by-level sweep up to that bound is complete.
    """
    monoid = gamma_lattice(rs, gens)
    gens = monoid.generators
    basis = monoid.lattice_basis
    k = rs.two_rho_check

    def level(v) -> int:
        return int(rs.pairing(v, k))

    def in_lattice(v) -> bool:
        return exactlin.lattice_contains(basis, v) is not None

    rays = []
    for v in _cone_rays(basis, rs.rank):
        c = 1
        while not in_lattice(tuple(c * x for x in v)):
            c += 1
        rays.append(tuple(c * x for x in v))

    for v in rays:
        if not any(exactlin.rank([v, g]) == 1 for g in gens):
            if monoid_membership(rs, gens, v):
                raise AssertionError(f"ray vector {v} outside cone(Gamma) found in Gamma")
            return Eq11Verdict(False, v, (), tuple(rays))

    bound = sum(level(v) for v in rays)
    hb: list[Weight] = []
    examined = 0
    for L in range(1, bound + 1):
        for p in _levels(k, L):
            examined += 1
            if examined > cap:
                return Eq11Verdict(None, None, tuple(hb), tuple(rays), examined)
            if not in_lattice(p):
                continue
            if any(all(a >= b for a, b in zip(p, h)) for h in hb):
                continue
            hb.append(p)
    for h in hb:
        if not monoid_membership(rs, gens, h):
            return Eq11Verdict(False, h, tuple(hb), tuple(rays), examined)
    return Eq11Verdict(True, None, tuple(hb), tuple(rays), examined)
