"""Polynomial calculus in U(h-hat) and order bookkeeping for twisted operators.

Elements of U(h-hat) are polynomials in ``h1 .. hl``, where ``hj`` stands for
the simple coroot ``alpha_j^vee``. A vector ``h = sum c_j alpha_j^vee`` is the
linear polynomial ``sum c_j hj``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from . import rootsystem as rootsys
from . import weyl
from .bwb import ConsistencyError
from .exactlin import solve_rational
from .polynomial import Polynomial
from .rootsystem import RootSystem, RootSystemError, Weight
from .svariety import GammaMonoid, monoid_membership
from .weyl import WeylElement

MAX_SURJECTIVE_ORDER = 4  # order bound for the known degree -1 operators on classical minimal orbits
DEFAULT_NULLSTELLENSATZ_CAP = 10_000_000


class CapExceeded(RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} factor combinations exceed the cap {cap}")
        self.count = count
        self.cap = cap


def k_value(rs: RootSystem, lam: Sequence[int]) -> int:
    """``<lam, 2 rho^vee>``; equals twice the sum of the simple-root coefficients."""
    lam = rs.check(lam)
    k = rs.pairing(lam, rs.two_rho_check)
    if rs.is_dominant(lam):
        other = 2 * sum(rs.to_simple_coords(lam))
        if other != k:
            raise ConsistencyError(f"k({lam}): {k} != {other}")
    assert k.denominator == 1
    return int(k)


def _require_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = rs.check(lam)
    if not rs.is_dominant(lam):
        raise RootSystemError(f"weight {lam} is not dominant")
    return lam


def coroot_poly(rs: RootSystem, h: Sequence) -> Polynomial:
    return Polynomial.linear(list(h), 0, "h")


def p_eta_factors(rs: RootSystem, eta: Sequence[int]) -> list[Polynomial]:
    """Affine-linear factors ``alpha^vee + <alpha^vee, rho> - i`` of ``P_eta``."""
    eta = _require_dominant(rs, eta)
    out = []
    for r in rs.positive_roots:
        n = sum(a * c for a, c in zip(eta, r.coroot))
        shift = sum(r.coroot)
        for i in range(1, n + 1):
            out.append(Polynomial.linear(list(r.coroot), shift - i, "h"))
    return out


def p_eta(rs: RootSystem, eta: Sequence[int]) -> Polynomial:
    """The invariant operator ``P_eta`` with leading constant 1."""
    p = Polynomial.constant(rs.rank, 1, "h")
    for f in p_eta_factors(rs, eta):
        p = p * f
    if p.degree != k_value(rs, eta):
        raise ConsistencyError("degree of P_eta differs from k(eta)")
    return p


def fw_on_h(rs: RootSystem, w: WeylElement, h: Sequence) -> Polynomial:
    """``F_w(h) = w(h) + <w(h) - h, rho>``, an affine-linear polynomial."""
    wh = weyl.coroot_action(rs, w, h)
    shift = sum(wh) - sum(Fraction(x) for x in h)
    return Polynomial.linear(list(wh), shift, "h")


def fw_images(rs: RootSystem, w: WeylElement) -> list[Polynomial]:
    n = rs.rank
    return [fw_on_h(rs, w, [int(i == j) for j in range(n)]) for i in range(n)]


def fw_on_poly(rs: RootSystem, w: WeylElement, p: Polynomial) -> Polynomial:
    """Extend ``F_w`` multiplicatively: substitute ``hj -> F_w(alpha_j^vee)``."""
    if p.nvars != rs.rank:
        raise RootSystemError("polynomial rank differs from the root system rank")
    return p.substitute(fw_images(rs, w))


def fw0_p_constant(rs: RootSystem, gamma: Sequence[int]) -> Fraction:
    """``F_w0(P_gamma)`` applied to the constant function 1.

    Computed as the constant term of the twisted polynomial and again from
    the closed product over positive coroots; the two must agree.
    """
    gamma = _require_dominant(rs, gamma)
    w0 = weyl.longest_element(rs)
    direct = fw_on_poly(rs, w0, p_eta(rs, gamma)).constant_term()
    closed = Fraction(1)
    for r in rs.positive_roots:
        n = sum(a * c for a, c in zip(gamma, r.coroot))
        shift = sum(r.coroot)
        closed *= (-1) ** n * prod(shift + i for i in range(1, n + 1))
    if direct != closed:
        raise ConsistencyError(f"F_w0(P_{gamma})(1): {direct} != {closed}")
    if direct == 0:
        raise ConsistencyError(f"F_w0(P_{gamma})(1) vanishes")
    return direct


def order_twist(rs: RootSystem, mu: Sequence[int], order: int, w: WeylElement) -> int:
    """Order of ``F_w(d)`` for ``d`` of degree ``mu``: ``order + <mu - w(mu), rho^vee>``."""
    mu = rs.check(mu)
    diff = tuple(a - b for a, b in zip(mu, w(mu)))
    shift = rs.pairing(diff, rs.rho_check)
    assert shift.denominator == 1
    return order + int(shift)


def psi_images(monoid: GammaMonoid) -> list[Polynomial]:
    """Images of ``h1 .. hl`` under ``h -> sum_j <gamma_j^*, h> y_j``."""
    rs = monoid.rs
    duals = [monoid.dual_generators[i] for i in monoid.basis_indices]
    return [Polynomial.linear([g[j] for g in duals], 0, "y") for j in range(rs.rank)]


def psi_gamma(p: Polynomial, monoid: GammaMonoid) -> Polynomial:
    """Push ``p`` to ``C[y1 .. yr]``: ``x_j -> y_j`` and the common kernel ``t -> 0``."""
    if p.nvars != monoid.rs.rank:
        raise RootSystemError("polynomial rank differs from the root system rank")
    return p.substitute(psi_images(monoid))


@dataclass(frozen=True)
class ExoticOrderReport:
    gamma: Weight
    k: int
    degree: int
    module_dim: int

    def to_json(self) -> dict:
        return {"gamma": list(self.gamma), "k": self.k, "degree": self.degree, "module_dim": self.module_dim}


def exotic_order_report(monoid: GammaMonoid, gamma: Sequence[int]) -> ExoticOrderReport:
    """Order and size of the degree -1 operators ``psi(F_w0(O^gamma))``."""
    rs = monoid.rs
    gamma = _require_dominant(rs, gamma)
    if not monoid_membership(rs, monoid.generators, gamma):
        raise RootSystemError(f"{gamma} is not in the monoid")
    return ExoticOrderReport(gamma, k_value(rs, gamma), -1, rs.weyl_dimension(gamma))


SURJECTIVE = "Surjective"
NOT_SURJECTIVE = "NotSurjective"
NOT_APPLICABLE = "CriterionNotApplicable"


@dataclass(frozen=True)
class MinOrbitReport:
    family: str
    rank: int
    highest_root: Weight
    k: int
    coxeter_h: int
    two_h_minus_2: int
    surjectivity: str

    def to_json(self) -> dict:
        return {
            "type": f"{self.family}{self.rank}",
            "highest_root": list(self.highest_root),
            "k": self.k,
            "coxeter_h": self.coxeter_h,
            "two_h_minus_2": self.two_h_minus_2,
            "surjectivity": self.surjectivity,
        }


def min_orbit_report(family: str, rank: int) -> MinOrbitReport:
    rs = rootsys.build([(family, rank)])
    if len(rs.components) != 1:
        raise RootSystemError("minimal orbit report needs a simple type")
    family, rank = rs.components[0]
    top = rs.highest_roots[0]
    k = k_value(rs, top)
    h = rs.coxeter_numbers[0]
    if k != 2 * (h - 1):
        raise ConsistencyError(f"k(highest root) = {k} but 2(h-1) = {2 * (h - 1)}")
    if family in "ABCD":
        verdict = SURJECTIVE if k <= MAX_SURJECTIVE_ORDER else NOT_SURJECTIVE
    else:
        verdict = NOT_APPLICABLE
    return MinOrbitReport(family, rank, top, k, h, 2 * (h - 1), verdict)


def _count_combinations(rs: RootSystem, eta) -> int:
    return len(p_eta_factors(rs, eta)) ** rs.weyl_order


def nullstellensatz_check(
    rs: RootSystem,
    eta: Sequence[int],
    cap: int = DEFAULT_NULLSTELLENSATZ_CAP,
    weyl_cap: int = weyl.DEFAULT_CAP,
) -> bool:
    """True iff the twists ``F_w(P_eta)``, ``w`` in W, have no common zero.

    Each twist is a product of affine-linear factors, so a common zero is a
    choice of one factor per ``w`` whose linear equations are consistent.
    The search backtracks as soon as a partial choice is inconsistent.
    """
    eta = _require_dominant(rs, eta)
    if not any(eta):
        raise RootSystemError("eta must be nonzero")
    count = _count_combinations(rs, eta)
    if count > cap:
        raise CapExceeded(count, cap)
    base = p_eta_factors(rs, eta)
    groups = []
    for w in weyl.enumerate_group(rs, weyl_cap):
        images = fw_images(rs, w)
        seen = []
        for f in base:
            g = f.substitute(images)
            key = (g.linear_part(), g.constant_term())
            if key not in seen:
                seen.append(key)
        groups.append(seen)
    # fewest choices first keeps the backtracking shallow
    groups.sort(key=len)

    def consistent(rows) -> bool:
        A = [list(a) for a, _ in rows]
        b = [-c for _, c in rows]
        return solve_rational(A, b) is not None

    def search(i: int, rows: list) -> bool:
        if i == len(groups):
            return True
        for eq in groups[i]:
            rows.append(eq)
            if consistent(rows) and search(i + 1, rows):
                rows.pop()
                return True
            rows.pop()
        return False

    return not search(0, [])
