"""Exact rational vectors, matrices and the linear-algebra kernels built on them.

Scalars are :class:`fractions.Fraction` (always kept in lowest terms with a
positive denominator).  Vectors are tuples of fractions and matrices are
tuples of such row tuples, so every value is immutable and hashable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
RatVec = tuple[Fraction, ...]
RatMat = tuple[RatVec, ...]

_MINUS_SIGNS = ("−", "–")


def to_rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused; they would silently smuggle rounding into the
    exact pipeline.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        for sign in _MINUS_SIGNS:
            text = text.replace(sign, "-")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values: Iterable) -> RatVec:
    return tuple(to_rat(v) for v in values)


def mat(rows: Iterable[Iterable]) -> RatMat:
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("matrix rows have unequal length")
    return out


def zeros(n: int) -> RatVec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> RatVec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def identity(n: int) -> RatMat:
    return tuple(unit(n, i) for i in range(n))


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Sequence, b: Sequence) -> RatVec:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> RatVec:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Sequence) -> RatVec:
    return tuple(c * x for x in a)


def neg(a: Sequence) -> RatVec:
    return tuple(-x for x in a)


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def matvec(m: Sequence[Sequence], x: Sequence) -> RatVec:
    return tuple(dot(row, x) for row in m)


def transpose(m: Sequence[Sequence], ncols: int | None = None) -> RatMat:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(col) for col in zip(*m))


def lin_comb(coeffs: Sequence, vectors: Sequence[Sequence], dim: int) -> RatVec:
    out = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return tuple(out)


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[RatMat, list[int]]:
    """Reduced row-echelon form and pivot columns of ``m``."""
    rows = [list(map(to_rat, r)) for r in m]
    width = len(rows[0]) if rows else (ncols or 0)
    pivots: list[int] = []
    r = 0
    for c in range(width):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in rows), pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: Sequence[Sequence], ncols: int | None = None) -> list[RatVec]:
    """Basis of ``{x : m x = 0}``, one vector per free column.

    ``ncols`` is required when ``m`` has no rows.
    """
    if not m:
        if ncols is None:
            raise ValueError("ncols required for a matrix without rows")
        return list(identity(ncols))
    n = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][f]
        basis.append(tuple(v))
    return basis


def solve_linear(m: Sequence[Sequence], b: Sequence, ncols: int | None = None) -> RatVec | None:
    """One exact solution of ``m x = b`` (free variables set to zero), or None."""
    if len(b) != len(m):
        raise ValueError(f"rhs has length {len(b)}, matrix has {len(m)} rows")
    if not m:
        if ncols is None:
            raise ValueError("ncols required for a matrix without rows")
        return zeros(ncols)
    n = len(m[0])
    aug = [tuple(row) + (to_rat(bi),) for row, bi in zip(m, b)]
    red, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        x[pc] = red[i][n]
    return tuple(x)


def complement_basis(sub_basis: Sequence[Sequence], n: int) -> list[RatVec]:
    """Coordinate vectors spanning a complement of ``span(sub_basis)``.

    The chosen ``e_i`` are those whose index is not a pivot column of the
    row-reduced ``sub_basis``.
    """
    if not sub_basis:
        return list(identity(n))
    if any(len(v) != n for v in sub_basis):
        raise ValueError("basis vectors must have the ambient dimension")
    _, pivots = rref(sub_basis)
    if len(pivots) < len(sub_basis):
        raise ValueError("sub_basis is linearly dependent")
    taken = set(pivots)
    return [unit(n, i) for i in range(n) if i not in taken]


def primitive(v: Sequence) -> tuple[int, ...]:
    """Positive multiple of ``v`` with coprime integer entries."""
    den = 1
    for x in v:
        den = math.lcm(den, Fraction(x).denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def normalize_direction(v: Sequence) -> RatVec:
    return tuple(Fraction(x) for x in primitive(v))


def canonical_subspace_basis(vectors: Sequence[Sequence], n: int) -> list[RatVec]:
    """Canonical basis of a span: rref rows scaled to primitive integers.

    The leading entry of every returned vector is positive.
    """
    if not vectors:
        return []
    red, pivots = rref(vectors)
    return [normalize_direction(red[i]) for i in range(len(pivots))]


def reduce_modulo(v: Sequence, subspace: Sequence[Sequence]) -> RatVec:
    """Subtract the ``subspace`` component so pivot coordinates become zero.

    ``subspace`` must be in the form produced by
    :func:`canonical_subspace_basis` (echelon with identifiable pivots).
    """
    out = list(v)
    for b in subspace:
        p = next(i for i, x in enumerate(b) if x != 0)
        if out[p] != 0:
            f = out[p] / b[p]
            out = [x - f * y for x, y in zip(out, b)]
    return tuple(out)


# -- exact simplex -----------------------------------------------------------

class _Tableau:
    """Dense standard-form tableau for ``min c.z  s.t.  A z = b, z >= 0``."""

    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        piv = row[c]
        if piv != 1:
            row = [x / piv for x in row]
            self.rows[r] = row
            self.rhs[r] /= piv
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[c]
                if f:
                    self.rows[i] = [x - f * y for x, y in zip(other, row)]
                    self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost):
        ncols = len(cost)
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(ncols):
                    if row[j]:
                        red[j] -= cb * row[j]
        return red

    def run(self, cost, allowed):
        """Bland's-rule iterations.  Returns False when unbounded."""
        while True:
            red = self.reduced_costs(cost)
            enter = next((j for j in range(len(cost)) if allowed[j] and red[j] < 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], enter)


def simplex_minimize(cost: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence):
    """Exact two-phase simplex for ``min cost.z`` over ``{z >= 0 : a_eq z = b_eq}``.

    Returns ``("optimal", value, z)``, ``("unbounded", None, None)`` or
    ``("infeasible", None, None)``.
    """
    n = len(cost)
    m = len(a_eq)
    rows = []
    rhs = []
    for row, bi in zip(a_eq, b_eq):
        row = [to_rat(x) for x in row]
        bi = to_rat(bi)
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        rows.append(row + [Fraction(int(i == len(rows))) for i in range(m)])
        rhs.append(bi)
    tab = _Tableau(rows, rhs, [n + i for i in range(m)])
    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    tab.run(phase1, [True] * (n + m))
    if sum(tab.rhs[i] for i, b in enumerate(tab.basis) if b >= n) != 0:
        return "infeasible", None, None
    # drive zero-level artificials out of the basis where possible
    for i, b in enumerate(tab.basis):
        if b >= n:
            c = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if c is not None:
                tab.pivot(i, c)
    keep = [i for i, b in enumerate(tab.basis) if b < n]
    tab.rows = [tab.rows[i][:n] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]
    phase2 = [to_rat(c) for c in cost]
    if not tab.run(phase2, [True] * n):
        return "unbounded", None, None
    z = [Fraction(0)] * n
    for i, b in enumerate(tab.basis):
        z[b] = tab.rhs[i]
    return "optimal", dot(phase2, z), tuple(z)


def nonneg_solve(a_eq: Sequence[Sequence], b_eq: Sequence, ncols: int) -> RatVec | None:
    """Some ``z >= 0`` with ``a_eq z = b_eq``, or None when none exists."""
    status, _, z = simplex_minimize([0] * ncols, a_eq, b_eq)
    return z if status == "optimal" else None
