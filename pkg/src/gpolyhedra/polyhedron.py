"""Halfspace and generator forms of generalized polyhedra, and conversion.

A generalized polyhedron in ``Q^n`` is ``{x : A x = y, C x <= alpha}``
(:class:`HForm`) or, equivalently, ``conv(points) + cone(rays) +
span(lineality)`` (:class:`GeneratorForm`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .double_description import cone_generators
from .errors import EmptySetError, InputError
from .rational_linalg import (
    RatMat,
    RatVec,
    canonical_subspace_basis,
    complement_basis,
    dot,
    is_zero,
    lin_comb,
    mat,
    matvec,
    neg,
    nonneg_solve,
    normalize_direction,
    nullspace_basis,
    rank,
    vec,
    zeros,
)


def _check_dim(x, n, what="point"):
    if len(x) != n:
        raise InputError(f"{what} has dimension {len(x)}, expected {n}")


@dataclass(frozen=True)
class HForm:
    """``{x in Q^dim : A x = y, C x <= alpha}``."""

    dim: int
    A: RatMat = ()
    y: RatVec = ()
    C: RatMat = ()
    alpha: RatVec = ()

    def __post_init__(self):
        for name in ("A", "C"):
            m = mat(getattr(self, name))
            for row in m:
                _check_dim(row, self.dim, f"row of {name}")
            object.__setattr__(self, name, m)
        for name in ("y", "alpha"):
            object.__setattr__(self, name, vec(getattr(self, name)))
        if len(self.y) != len(self.A):
            raise InputError(f"y has {len(self.y)} entries, A has {len(self.A)} rows")
        if len(self.alpha) != len(self.C):
            raise InputError(f"alpha has {len(self.alpha)} entries, C has {len(self.C)} rows")

    @property
    def is_homogeneous(self) -> bool:
        return is_zero(self.y) and is_zero(self.alpha)


@dataclass(frozen=True)
class GeneratorForm:
    """``conv(points) + cone(rays) + span(lineality)``; empty iff no points."""

    dim: int
    points: tuple[RatVec, ...] = ()
    rays: tuple[RatVec, ...] = ()
    lineality: tuple[RatVec, ...] = ()

    def __post_init__(self):
        for name in ("points", "rays", "lineality"):
            vs = tuple(vec(v) for v in getattr(self, name))
            for v in vs:
                _check_dim(v, self.dim, name[:-1] if name != "lineality" else "lineality vector")
            object.__setattr__(self, name, vs)
        if any(is_zero(r) for r in self.rays):
            raise InputError("rays must be nonzero")
        if self.lineality and rank(self.lineality) < len(self.lineality):
            raise InputError("lineality vectors are linearly dependent")

    @property
    def is_empty(self) -> bool:
        return not self.points


@dataclass(frozen=True)
class MembershipCertificate:
    coefficients: RatVec
    ray_coefficients: RatVec
    lineality_coefficients: RatVec

    def reconstruct(self, g: GeneratorForm) -> RatVec:
        return lin_comb(
            self.coefficients + self.ray_coefficients + self.lineality_coefficients,
            g.points + g.rays + g.lineality,
            g.dim,
        )


def contains_h(h: HForm, x: Sequence) -> bool:
    x = vec(x)
    _check_dim(x, h.dim)
    return matvec(h.A, x) == h.y and all(v <= a for v, a in zip(matvec(h.C, x), h.alpha))


def lineality_space(h: HForm) -> list[RatVec]:
    """Canonical basis of ``ker [A; C]``."""
    return canonical_subspace_basis(nullspace_basis(h.A + h.C, h.dim), h.dim)


@dataclass
class _Restricted:
    lineality: list[RatVec]
    coords: list[int]
    points: list[RatVec] = field(default_factory=list)
    rays: list[RatVec] = field(default_factory=list)

    def lift(self, z: Sequence, n: int) -> RatVec:
        x = [Fraction(0)] * n
        for c, v in zip(self.coords, z):
            x[c] = v
        return tuple(x)


def _restricted_generators(h: HForm) -> _Restricted:
    """Generators of ``h`` intersected with the coordinate complement of its
    lineality space, in complement coordinates."""
    lin = lineality_space(h)
    comp = complement_basis(lin, h.dim)
    coords = [next(i for i, x in enumerate(e) if x) for e in comp]
    m = len(coords)
    # homogenize: w = (z, t), t >= 0
    eq = [tuple(row[c] for c in coords) + (-yi,) for row, yi in zip(h.A, h.y)]
    ineq = [tuple(row[c] for c in coords) + (-ai,) for row, ai in zip(h.C, h.alpha)]
    ineq.append(zeros(m) + (Fraction(-1),))
    rays, extra_lin = cone_generators(m + 1, ineq, eq)
    assert not extra_lin, "homogenized cone must be pointed"
    out = _Restricted(lin, coords)
    for w in rays:
        t = w[-1]
        if t > 0:
            out.points.append(tuple(x / t for x in w[:-1]))
        else:
            out.rays.append(w[:-1])
    if not out.points:
        out.rays = []
    return out


def h_to_v(h: HForm) -> GeneratorForm:
    """Generator form with the same members; no points iff ``h`` is infeasible."""
    r = _restricted_generators(h)
    if not r.points:
        return GeneratorForm(h.dim)
    return GeneratorForm(
        h.dim,
        tuple(sorted(r.lift(p, h.dim) for p in r.points)),
        tuple(sorted(r.lift(v, h.dim) for v in r.rays)),
        tuple(r.lineality),
    )


def v_to_h(g: GeneratorForm) -> HForm:
    """Halfspace form of a nonempty generator form.

    Works on the cone of valid inequalities ``(a, b)`` with ``a.x <= b`` on
    every member; its lineality gives equalities and its rays inequalities.
    """
    if g.is_empty:
        raise EmptySetError("cannot build a halfspace form of the empty set")
    n = g.dim
    ineq = [tuple(u) + (Fraction(-1),) for u in g.points]
    ineq += [tuple(r) + (Fraction(0),) for r in g.rays]
    eq = [tuple(l) + (Fraction(0),) for l in g.lineality]
    rays, lin = cone_generators(n + 1, ineq, eq)
    A, y, C, alpha = [], [], [], []
    for w in lin:
        if not is_zero(w[:n]):
            A.append(w[:n])
            y.append(w[n])
    for w in rays:
        if not is_zero(w[:n]):
            C.append(w[:n])
            alpha.append(w[n])
    return HForm(n, tuple(A), tuple(y), tuple(C), tuple(alpha))


def contains_v(g: GeneratorForm, x: Sequence) -> MembershipCertificate | None:
    """Certificate that ``x`` is in ``g``, found by exact LP feasibility."""
    x = vec(x)
    _check_dim(x, g.dim)
    if g.is_empty:
        return None
    k, l, s = len(g.points), len(g.rays), len(g.lineality)
    columns = list(g.points) + list(g.rays) + list(g.lineality) + [neg(w) for w in g.lineality]
    ncols = len(columns)
    rows = [tuple(col[i] for col in columns) for i in range(g.dim)]
    rows.append(tuple(Fraction(int(j < k)) for j in range(ncols)))
    z = nonneg_solve(rows, x + (Fraction(1),), ncols)
    if z is None:
        return None
    return MembershipCertificate(
        z[:k],
        z[k:k + l],
        tuple(a - b for a, b in zip(z[k + l:k + l + s], z[k + l + s:])),
    )


def recession_cone(g: GeneratorForm) -> GeneratorForm:
    if g.is_empty:
        raise EmptySetError("recession cone of the empty set is undefined here")
    rays = sorted({normalize_direction(r) for r in g.rays})
    return GeneratorForm(g.dim, (zeros(g.dim),), tuple(rays), g.lineality)


def dedupe(g: GeneratorForm) -> GeneratorForm:
    """Drop repeated points and positively parallel rays, sorted."""
    return GeneratorForm(
        g.dim,
        tuple(sorted(set(g.points))),
        tuple(sorted({normalize_direction(r) for r in g.rays})),
        tuple(canonical_subspace_basis(g.lineality, g.dim)),
    )


def homogeneous_satisfies(h: HForm, d: Sequence) -> bool:
    """``d`` lies in the recession cone of a nonempty ``h``."""
    return all(v == 0 for v in matvec(h.A, d)) and all(v <= 0 for v in matvec(h.C, d))


