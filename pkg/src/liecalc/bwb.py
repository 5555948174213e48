"""Line bundle cohomology on the flag variety and cohomology of G/U.

``H^i(B, L_lam)`` is reported by its combinatorial data: the degree ``i``
where it is nonzero, the dominant weight ``mu`` with ``H^i = V(mu)^*`` and the
Weyl group element witnessing ``lam = w . mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import weyl
from .rootsystem import RootSystem, RootSystemError, Weight
from .weyl import DEFAULT_CAP, WeylElement


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class BWBResult:
    vanishes: bool
    degree: Optional[int] = None
    mu: Optional[Weight] = None
    w: Optional[WeylElement] = None

    def to_json(self, rs: RootSystem) -> dict:
        if self.vanishes:
            return {"vanishes": True}
        return {
            "vanishes": False,
            "degree": self.degree,
            "mu": list(self.mu),
            "dim": rs.weyl_dimension(self.mu),
            "word": [i + 1 for i in self.w.word],
        }


def line_bundle_cohomology(rs: RootSystem, lam: Sequence[int]) -> BWBResult:
    lam = rs.check(lam)
    res = weyl.straighten(rs, tuple(x + 1 for x in lam))
    if res is None:
        return BWBResult(vanishes=True)
    mu = tuple(x - 1 for x in res.dominant)
    # res.w carries lam + rho to mu + rho, so lam = w^-1 . mu
    w = weyl.inverse(rs, res.w)
    return BWBResult(vanishes=False, degree=res.steps, mu=mu, w=w)


def ew_weight(rs: RootSystem, w: WeylElement) -> Weight:
    """H-weight of the class e_w: ``w0 w w0 (rho) - rho``, checked against ``(w . 0)^*``."""
    w0 = rs.longest_matrix
    conj = weyl._mul(weyl._mul(w0, w.matrix), w0)
    first = tuple(x - 1 for x in rs.act(conj, rs.rho))
    second = rs.star(weyl.dot(rs, w, (0,) * rs.rank))
    if first != second:
        raise ConsistencyError(f"e_w weight mismatch for {w.word_str()}: {first} != {second}")
    return first


@dataclass(frozen=True)
class XCohomologyReport:
    degree: int
    classes: tuple[tuple[WeylElement, Weight], ...]

    @property
    def multiplicity(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "multiplicity": self.multiplicity,
            "classes": [
                {"word": [i + 1 for i in w.word], "e_weight": list(e)} for w, e in self.classes
            ],
        }


def _check_degree(rs: RootSystem, i: int) -> None:
    top = len(rs.positive_roots)
    if not 0 <= i <= top:
        raise RootSystemError(f"degree {i} outside 0..{top}")


def x_cohomology(rs: RootSystem, i: int, cap: int = DEFAULT_CAP) -> XCohomologyReport:
    """The summands of ``H^i(G/U, O)``: one per ``w`` of length ``i``."""
    _check_degree(rs, i)
    classes = tuple((w, ew_weight(rs, w)) for w in weyl.elements_of_length(rs, i, cap))
    weights = [e for _, e in classes]
    if len(set(weights)) != len(weights):
        raise ConsistencyError("e_w weights are not pairwise distinct")
    if len(classes) != weyl.poincare_coefficients(rs)[i]:
        raise ConsistencyError("class count differs from the Poincare coefficient")
    return XCohomologyReport(i, classes)


def x_multiplicity(rs: RootSystem, i: int, lam: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    """``[H^i(G/U, O) : V(lam)]`` counted from the line bundles.

    ``H^i(G/U, O)`` is the sum of ``H^i(B, L_nu)`` over all ``nu``; the ones
    contributing ``V(lam) = V(lam^*)^*`` are ``nu = w . lam^*`` with
    ``length(w) = i``. Each is recomputed through ``line_bundle_cohomology``.
    """
    lam = rs.check(lam)
    if not rs.is_dominant(lam):
        raise RootSystemError(f"weight {lam} is not dominant")
    _check_degree(rs, i)
    mu = rs.star(lam)
    seen = set()
    for w in weyl.elements_of_length(rs, i, cap):
        nu = weyl.dot(rs, w, mu)
        if nu in seen:
            raise ConsistencyError(f"dot orbit repeats {nu}")
        res = line_bundle_cohomology(rs, nu)
        if res.vanishes or res.degree != i or res.mu != mu:
            raise ConsistencyError(f"{nu} does not round-trip to degree {i}, mu {mu}")
        seen.add(nu)
    return len(seen)
