"""Exact integer and rational linear algebra.

Matrices are plain sequences of rows. Results are returned as tuples of
tuples so they can be hashed and compared. Nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

IntMatrix = tuple[tuple[int, ...], ...]
Row = Sequence[int]


def _as_int_rows(M: Sequence[Row]) -> list[list[int]]:
    rows = [list(map(int, r)) for r in M]
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged matrix")
    return rows


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def transpose(A: Sequence[Sequence]) -> tuple:
    return tuple(tuple(col) for col in zip(*A))


def determinant(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in M]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def hermite_normal_form(M: Sequence[Row]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ M`` and ``U`` unimodular. Nonzero rows
    of ``H`` come first, pivots are positive and the entries above each pivot
    lie in ``[0, pivot)``.
    """
    H = _as_int_rows(M)
    m, n = len(H), len(H[0])
    U = [list(r) for r in identity(m)]

    def combine(i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        # rows (i, j) <- [[a, b], [c, d]] @ rows (i, j); determinant must be +-1
        for X in (H, U):
            ri, rj = X[i], X[j]
            X[i] = [a * x + b * y for x, y in zip(ri, rj)]
            X[j] = [c * x + d * y for x, y in zip(ri, rj)]

    row = 0
    for col in range(n):
        if row == m:
            break
        for r in range(row + 1, m):
            if H[r][col] == 0:
                continue
            x, y = H[row][col], H[r][col]
            g, s, t = _xgcd(x, y)
            combine(row, r, s, t, -y // g, x // g)
        if H[row][col] == 0:
            continue
        if H[row][col] < 0:
            H[row] = [-v for v in H[row]]
            U[row] = [-v for v in U[row]]
        p = H[row][col]
        for r in range(row):
            q = H[r][col] // p
            if q:
                H[r] = [a - q * b for a, b in zip(H[r], H[row])]
                U[r] = [a - q * b for a, b in zip(U[r], U[row])]
        row += 1
    return tuple(map(tuple, H)), tuple(map(tuple, U))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hnf_basis(M: Sequence[Row]) -> IntMatrix:
    """The nonzero rows of the Hermite normal form: a canonical lattice basis."""
    H, _ = hermite_normal_form(M)
    return tuple(r for r in H if any(r))


def lattice_contains(basis: Sequence[Row], v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Integer coefficients expressing ``v`` in an HNF ``basis``, or None."""
    rem = [int(x) for x in v]
    coeffs = []
    for b in basis:
        col = next(j for j, x in enumerate(b) if x)
        q, r = divmod(rem[col], b[col])
        if r:
            return None
        coeffs.append(q)
        if q:
            rem = [x - q * y for x, y in zip(rem, b)]
    if any(rem):
        return None
    return tuple(coeffs)


def smith_normal_form(M: Sequence[Row]) -> tuple[list[int], int]:
    """Invariant factors ``d1 | d2 | ... | dk`` and rank ``k`` of ``M``.

    Reading the columns of ``M`` as relations in ``Z^rows``, the cokernel is
    ``Z/d1 + ... + Z/dk + Z^(rows - k)``.
    """
    A = _as_int_rows(M)
    m, n = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                break
            # a smaller remainder survived: move it to the pivot and repeat
            _, i, j = min(
                [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                + [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            )
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    # enforce the divisibility chain: (a, b) -> (gcd, lcm)
    from math import gcd

    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, a * b // g
    return diag, len(diag)


def _rref(a: list[list[Fraction]]) -> list[int]:
    """Row-reduce ``a`` in place; return the pivot columns."""
    pivots = []
    r = 0
    rows = len(a)
    cols = len(a[0]) if a else 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Some exact solution of ``A x = b`` (free variables set to 0), or None."""
    if len(A) != len(b):
        raise ValueError("row count of A and length of b differ")
    if not A:
        return ()
    n = len(A[0])
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    pivots = _rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = aug[r][n]
    return tuple(x)


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    return len(_rref([[Fraction(x) for x in row] for row in A]))


def nullspace(A: Sequence[Sequence], ncols: Optional[int] = None) -> list[tuple[Fraction, ...]]:
    """A basis of ``{x : A x = 0}`` over the rationals."""
    n = ncols if ncols is not None else len(A[0])
    a = [[Fraction(x) for x in row] for row in A]
    pivots = _rref(a) if a else []
    basis = []
    for f in range(n):
        if f in pivots:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -a[r][f]
        basis.append(tuple(v))
    return basis
