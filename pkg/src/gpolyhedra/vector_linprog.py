"""Linear vector optimization ``min_K {M x : x in D}``.

Weak efficiency is reduced to scalar LPs with objectives ``M^T y*`` for
``y*`` in the dual cone ``K*`` minus the origin.  Each scalarizer search is
a small exact LP over convex weights ``lam`` on the generators of ``K*``:
``y* = sum(lam_g * g)``, ``sum(lam) = 1``, ``lam >= 0``.  Strict
inequalities are modelled by a common gap ``t`` that is maximised and must
come out positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import EmptyInteriorError, EmptySetError, InputError, NotAConeError, NotInSetError
from .generalized import ConeForm, cone_representation, dual_cone
from .linprog import IndexPattern, LPProblem, index_pattern, max_gap, solution_set, strict_feasibility
from .polyhedron import GeneratorForm, HForm, contains_v, h_to_v, v_to_h
from .rational_linalg import RatMat, RatVec, dot, is_zero, lin_comb, mat, matvec, neg, sub, transpose, vec


@dataclass(frozen=True)
class VLPProblem:
    """Vector LP data.  ``D`` and ``K`` may be given in either form."""

    M: RatMat
    D: GeneratorForm
    K: ConeForm

    def __post_init__(self):
        M = mat(self.M)
        object.__setattr__(self, "M", M)
        D, K = self.D, self.K
        if isinstance(D, HForm):
            D = h_to_v(D)
        if D.is_empty:
            raise EmptySetError("feasible set D is empty")
        if isinstance(K, HForm):
            object.__setattr__(self, "K_h", K)
            K = cone_representation(K)
        if not M or len(M[0]) != D.dim:
            raise InputError(f"M must have {D.dim} columns")
        if K.dim != len(M):
            raise InputError(f"K lives in dimension {K.dim}, M has {len(M)} rows")
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "K", K)

    @property
    def image_dim(self) -> int:
        return len(self.M)

    @cached_property
    def K_h(self) -> HForm:
        return v_to_h(self.K.as_generator_form())

    @cached_property
    def D_h(self) -> HForm:
        return v_to_h(self.D)

    @cached_property
    def dual_generators(self) -> list[RatVec]:
        return dual_cone(self.K).generators()

    @cached_property
    def dual_is_pointed(self) -> bool:
        return dual_cone(self.K).is_pointed


@dataclass(frozen=True)
class WeakEffPiece:
    pattern: IndexPattern
    piece: GeneratorForm
    x_star: RatVec
    y_star: RatVec


@dataclass(frozen=True)
class WeakEffSet:
    pieces: tuple[WeakEffPiece, ...]
    covers_all_of_D: bool
    D: GeneratorForm

    @property
    def is_empty(self) -> bool:
        return not self.pieces and not self.covers_all_of_D

    def contains(self, x: Sequence) -> bool:
        if self.covers_all_of_D and contains_v(self.D, x) is not None:
            return True
        return any(contains_v(p.piece, x) is not None for p in self.pieces)


def adjoint(M: Sequence[Sequence], y_star: Sequence) -> RatVec:
    y_star = vec(y_star)
    if len(y_star) != len(M):
        raise InputError(f"y* has dimension {len(y_star)}, M has {len(M)} rows")
    return matvec(transpose(M), y_star)


def scalarize(p: VLPProblem, y_star: Sequence) -> LPProblem:
    y_star = vec(y_star)
    if len(y_star) != p.image_dim:
        raise InputError(f"y* has dimension {len(y_star)}, expected {p.image_dim}")
    if dual_cone(p.K).contains(y_star) is None:
        raise InputError("y* is not in the dual cone K*")
    return LPProblem(adjoint(p.M, y_star), p.D)


# -- scalarizer search -------------------------------------------------------

def _x_row(p: VLPProblem, d: Sequence) -> RatVec:
    """Coefficients over the K* generators of ``<M^T y*, d>``."""
    md = matvec(p.M, d)
    return tuple(dot(g, md) for g in p.dual_generators)


def _search(p: VLPProblem, eq_rows, ge_rows, gap_rows) -> tuple[Fraction, RatVec] | None:
    """Maximise ``t <= 1`` over convex weights subject to
    ``row.lam = 0`` (eq), ``row.lam >= 0`` (ge) and ``row.lam >= t`` (gap)."""
    gens = p.dual_generators
    k = len(gens)
    if k == 0:
        return None
    A = [tuple(r) for r in eq_rows] + [(Fraction(1),) * k]
    y = [Fraction(0)] * len(eq_rows) + [Fraction(1)]
    C = [neg(r) for r in gap_rows] + [neg(r) for r in ge_rows]
    C += [tuple(Fraction(-int(i == j)) for j in range(k)) for i in range(k)]
    h = HForm(k, tuple(A), tuple(y), tuple(C), (Fraction(0),) * len(C))
    res = max_gap(h, range(len(gap_rows)))
    if res is None or res[0] <= 0:
        return None
    return res


def _witness(p: VLPProblem, lam: Sequence) -> tuple[RatVec, RatVec]:
    y_star = lin_comb(lam, p.dual_generators, p.image_dim)
    return y_star, adjoint(p.M, y_star)


def _nonzero_disjunction(p, eq_rows, ge_rows, gap_rows, on_x: bool):
    """Try each signed coordinate of y* (or x*) as the extra gap row."""
    gens = p.dual_generators
    if on_x:
        images = [adjoint(p.M, g) for g in gens]
        dim = p.D.dim
    else:
        images = gens
        dim = p.image_dim
    for s in range(dim):
        coord = tuple(v[s] for v in images)
        for row in (coord, neg(coord)):
            if is_zero(row):
                continue
            res = _search(p, eq_rows, ge_rows, list(gap_rows) + [row])
            if res is not None:
                return res
    return None


def _recession_rows(p: VLPProblem):
    eq = [_x_row(p, w) for w in p.D.lineality]
    ge = [_x_row(p, v) for v in p.D.rays]
    return eq, ge


def vlp_has_solution(p: VLPProblem) -> tuple[RatVec, RatVec] | None:
    """Witness ``(y*, x*)`` with ``y*`` in ``K*`` minus 0 and ``x* = M^T y*``
    in the dual of the recession cone of ``D``, or None."""
    eq, ge = _recession_rows(p)
    if p.dual_is_pointed:
        res = _search(p, eq, ge, [])
    else:
        res = _nonzero_disjunction(p, eq, ge, [], on_x=False)
    return None if res is None else _witness(p, res[1])


def criterion_sufficient(p: VLPProblem) -> bool:
    """Some ``y*`` in ``K*`` has ``M^T y*`` nonzero and in the recession dual."""
    eq, ge = _recession_rows(p)
    return _nonzero_disjunction(p, eq, ge, [], on_x=True) is not None


def interior_point(p: VLPProblem) -> RatVec:
    """A point of int K; raises :class:`EmptyInteriorError` when there is none."""
    K_h = p.K_h
    if not K_h.is_homogeneous:
        raise NotAConeError("K must be given by a homogeneous system")
    if any(not is_zero(row) for row in K_h.A):
        raise EmptyInteriorError()
    pt = strict_feasibility(K_h, range(len(K_h.C)))
    if pt is None:
        raise EmptyInteriorError()
    return pt


def _pattern_rows(p: VLPProblem, I: Sequence[int], J: Sequence[int]):
    D = p.D
    eq, _ = _recession_rows(p)
    gap = []
    for j, v in enumerate(D.rays):
        (eq if j in J else gap).append(_x_row(p, v))
    i0 = I[0]
    for i, u in enumerate(D.points):
        if i == i0:
            continue
        (eq if i in I else gap).append(_x_row(p, sub(u, D.points[i0])))
    return eq, gap


def weakly_efficient_set(p: VLPProblem) -> WeakEffSet:
    """All weakly efficient points as a finite union of solution faces.

    Every index pattern ``(I, J)`` is tested for a scalarizer realising it
    exactly; accepted patterns are emitted in lexicographic order.
    """
    interior_point(p)
    k, l = len(p.D.points), len(p.D.rays)
    # int K nonempty makes K* pointed, so convex weights never give y* = 0
    assert p.dual_is_pointed
    covers_all = _search(p, [_x_row(p, e) for e in _unit_rows(p.D.dim)], [], []) is not None

    candidates = [
        (I, J)
        for a in range(1, k + 1)
        for I in combinations(range(k), a)
        for b in range(l + 1)
        for J in combinations(range(l), b)
    ]
    candidates.sort()
    pieces = []
    for I, J in candidates:
        eq, gap = _pattern_rows(p, I, J)
        res = _search(p, eq, [], gap)
        if res is None:
            continue
        y_star, x_star = _witness(p, res[1])
        pattern = index_pattern(p.D, x_star)
        assert pattern == IndexPattern(frozenset(I), frozenset(J))
        pieces.append(WeakEffPiece(pattern, solution_set(p.D, x_star), x_star, y_star))
    return WeakEffSet(tuple(pieces), covers_all, p.D)


def _unit_rows(n: int):
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


def is_weakly_efficient_oracle(p: VLPProblem, u: Sequence) -> bool:
    """Direct check: no ``x`` in D has ``M u - M x`` in int K.

    The interior of K is taken as the locus where every inequality of its
    halfspace form is strict.
    """
    u = vec(u)
    interior_point(p)
    if contains_v(p.D, u) is None:
        raise NotInSetError("u is not in D")
    D_h = p.D_h
    QM = [matvec(transpose(p.M), q) for q in p.K_h.C]
    extra_C = tuple(neg(row) for row in QM)
    extra_alpha = tuple(-dot(row, u) for row in QM)
    h = HForm(D_h.dim, D_h.A, D_h.y, D_h.C + extra_C, D_h.alpha + extra_alpha)
    strict = range(len(D_h.C), len(h.C))
    return strict_feasibility(h, strict) is None
