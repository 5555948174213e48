"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


class Polynomial:
    """Immutable polynomial in ``nvars`` variables named ``{prefix}1 .. {prefix}n``.

    Terms map exponent tuples to nonzero ``Fraction`` coefficients.
    """

    __slots__ = ("nvars", "prefix", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None, prefix: str = "h"):
        self.nvars = nvars
        self.prefix = prefix
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c: Scalar, prefix: str = "h") -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c}, prefix)

    @classmethod
    def variable(cls, nvars: int, j: int, prefix: str = "h") -> "Polynomial":
        e = [0] * nvars
        e[j] = 1
        return cls(nvars, {tuple(e): 1}, prefix)

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar], const: Scalar = 0, prefix: str = "h") -> "Polynomial":
        n = len(coeffs)
        terms: dict[Exponent, Scalar] = {(0,) * n: const}
        for j, c in enumerate(coeffs):
            e = [0] * n
            e[j] = 1
            terms[tuple(e)] = c
        return cls(n, terms, prefix)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> float | int:
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self._terms:
            return float("-inf")
        return max(sum(e) for e in self._terms)

    def coefficient(self, e: Exponent) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def linear_part(self) -> tuple[Fraction, ...]:
        out = []
        for j in range(self.nvars):
            e = [0] * self.nvars
            e[j] = 1
            out.append(self.coefficient(tuple(e)))
        return tuple(out)

    def __call__(self, *point: Scalar) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("wrong number of arguments")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other, self.prefix)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.nvars, terms, self.prefix)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()}, self.prefix)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, terms, self.prefix)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1, self.prefix)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other, self.prefix)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring homomorphism sending variable ``j`` to ``images[j]``.

        All images must live in one common polynomial ring, which becomes the
        ring of the result.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            return Polynomial(0, {(): self.constant_term()}, self.prefix)
        target = images[0]
        nv, pre = target.nvars, target.prefix
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(nv, 1, pre)} for _ in images]

        def power(j: int, k: int) -> Polynomial:
            cache = powers[j]
            if k not in cache:
                cache[k] = power(j, k - 1) * images[j]
            return cache[k]

        out = Polynomial(nv, {}, pre)
        for e, c in self._terms.items():
            term = Polynomial.constant(nv, c, pre)
            for j, k in enumerate(e):
                if k:
                    term = term * power(j, k)
            out = out + term
        return out

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms by total degree descending, then exponent vector descending."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                f"{self.prefix}{j + 1}" + (f"^{k}" if k > 1 else "")
                for j, k in enumerate(e)
                if k
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt(mag)}*{mono}"
            else:
                body = _fmt(mag)
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self) -> list[dict]:
        return [{"exponent": list(e), "coefficient": _fmt(c)} for e, c in self.sorted_terms()]


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def product(factors: Iterable[Polynomial], nvars: int, prefix: str = "h") -> Polynomial:
    out = Polynomial.constant(nvars, 1, prefix)
    for f in factors:
        out = out * f
    return out
