"""Linear programs ``min <x*, x>`` over a generalized polyhedron.

Solvability and the optimum are read off the generator form: the problem is
solvable exactly when the objective is nonnegative on every ray and vanishes
on the lineality space, and then the minimum is attained at a point
generator.  :func:`frank_wolfe_infimum` computes the same quantity along an
independent route (simplex on the halfspace form).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptySetError, InputError, UnsolvableObjectiveError
from .generalized import ConeForm, dual_cone
from .polyhedron import GeneratorForm, HForm, h_to_v, v_to_h
from .rational_linalg import RatVec, dot, neg, simplex_minimize, vec

NEG_INF = float("-inf")


@dataclass(frozen=True)
class LPProblem:
    objective: RatVec
    feasible_set: GeneratorForm

    def __post_init__(self):
        object.__setattr__(self, "objective", vec(self.objective))
        if len(self.objective) != self.feasible_set.dim:
            raise InputError(
                f"objective has dimension {len(self.objective)}, feasible set has {self.feasible_set.dim}"
            )
        if self.feasible_set.is_empty:
            raise EmptySetError("LP feasible set is empty")


@dataclass(frozen=True)
class LPReport:
    solvable: bool
    optimal_value: Fraction | None = None
    witness: RatVec | None = None
    unbounded_direction: RatVec | None = None


@dataclass(frozen=True)
class IndexPattern:
    """Argmin point indices ``I`` and zero-pairing ray indices ``J`` (0-based)."""

    I: frozenset[int]
    J: frozenset[int]

    def sort_key(self):
        return (tuple(sorted(self.I)), tuple(sorted(self.J)))


def _violation(p: LPProblem) -> RatVec | None:
    x_star = p.objective
    for v in p.feasible_set.rays:
        if dot(x_star, v) < 0:
            return v
    for w in p.feasible_set.lineality:
        s = dot(x_star, w)
        if s != 0:
            return w if s < 0 else neg(w)
    return None


def eaves_check(p: LPProblem) -> bool:
    """True iff ``<x*, v> >= 0`` on the whole recession cone."""
    return _violation(p) is None


def solve(p: LPProblem) -> LPReport:
    bad = _violation(p)
    if bad is not None:
        return LPReport(False, unbounded_direction=bad)
    values = [dot(p.objective, u) for u in p.feasible_set.points]
    best = min(values)
    return LPReport(True, best, p.feasible_set.points[values.index(best)])


def frank_wolfe_infimum(p: LPProblem) -> Fraction | float:
    """Infimum of the objective over the halfspace form, or ``NEG_INF``.

    Free variables are split as ``x = x+ - x-`` and inequalities get slacks;
    the exact simplex then either finds the (attained) minimum or reports
    unboundedness.
    """
    h = v_to_h(p.feasible_set)
    n = h.dim
    m_ineq = len(h.C)
    ncols = 2 * n + m_ineq
    rows, rhs = [], []
    for row, yi in zip(h.A, h.y):
        rows.append(tuple(row) + neg(row) + (Fraction(0),) * m_ineq)
        rhs.append(yi)
    for i, (row, ai) in enumerate(zip(h.C, h.alpha)):
        rows.append(tuple(row) + neg(row) + tuple(Fraction(int(j == i)) for j in range(m_ineq)))
        rhs.append(ai)
    cost = tuple(p.objective) + neg(p.objective) + (Fraction(0),) * m_ineq
    status, value, _ = simplex_minimize(cost, rows, rhs)
    if status == "infeasible":
        raise EmptySetError("LP feasible set is empty")
    if status == "unbounded":
        return NEG_INF
    return value


def solvable_cone(d: GeneratorForm) -> ConeForm:
    """Objectives for which the LP over ``d`` has a solution."""
    if d.is_empty:
        raise EmptySetError("solvable cone of the empty set is undefined")
    return dual_cone(ConeForm(d.dim, d.rays, d.lineality))


def index_pattern(d: GeneratorForm, x_star: Sequence) -> IndexPattern:
    p = LPProblem(x_star, d)
    if not eaves_check(p):
        raise UnsolvableObjectiveError("objective is not in the solvable cone")
    values = [dot(p.objective, u) for u in d.points]
    best = min(values)
    return IndexPattern(
        frozenset(i for i, v in enumerate(values) if v == best),
        frozenset(j for j, r in enumerate(d.rays) if dot(p.objective, r) == 0),
    )


def solution_set(d: GeneratorForm, x_star: Sequence) -> GeneratorForm:
    pat = index_pattern(d, x_star)
    return GeneratorForm(
        d.dim,
        tuple(u for i, u in enumerate(d.points) if i in pat.I),
        tuple(v for j, v in enumerate(d.rays) if j in pat.J),
        d.lineality,
    )


def max_gap(h: HForm, gap_rows: Sequence[int]) -> tuple[Fraction, RatVec] | None:
    """Maximise ``t <= 1`` subject to ``h`` with ``C_r x + t <= alpha_r`` on ``gap_rows``.

    Solved by converting the auxiliary system in ``(x, t)`` to generator
    form and scanning its points.  Returns ``(t, x)`` or None if ``h`` is
    infeasible.
    """
    gap = set(gap_rows)
    n = h.dim
    A = tuple(tuple(row) + (Fraction(0),) for row in h.A)
    C = [tuple(row) + (Fraction(int(i in gap)),) for i, row in enumerate(h.C)]
    alpha = list(h.alpha)
    C.append((Fraction(0),) * n + (Fraction(1),))
    alpha.append(Fraction(1))
    g = h_to_v(HForm(n + 1, A, h.y, tuple(C), tuple(alpha)))
    if g.is_empty:
        return None
    best = max(g.points, key=lambda w: w[-1])
    return best[-1], best[:-1]


def strict_feasibility(h: HForm, strict_rows: Sequence[int]) -> RatVec | None:
    """A point of ``h`` satisfying the listed inequality rows strictly."""
    strict_rows = list(strict_rows)
    if any(not 0 <= r < len(h.C) for r in strict_rows):
        raise InputError("strict row index out of range")
    res = max_gap(h, strict_rows)
    if res is None or res[0] <= 0:
        return None
    return res[1]
