"""A polyhedron in C[a, b] cut by two integral functionals.

With weights ``w1, w2`` the functionals are ``<x*_i, x> = int_a^b w_i x dt``
and the set is ``D = {x : <x*_1, x> <= alpha1, <x*_2, x> <= alpha2}``.  For
independent weights it equals ``{u + mu1 v1 + mu2 v2 : mu >= 0} + X0`` where
``X0`` is the common kernel of the two functionals.  Weights and points are
rational polynomials, so every pairing is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from .errors import DependentWeightsError, InputError
from .polyhedron import GeneratorForm
from .rational_linalg import nullspace_basis, to_rat


@dataclass(frozen=True)
class RatPoly:
    """Polynomial with rational coefficients in ascending degree."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [to_rat(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def of(cls, *coefficients) -> "RatPoly":
        return cls(tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "RatPoly") -> "RatPoly":
        z = Fraction(0)
        return RatPoly(tuple(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=z)))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RatPoly(tuple(out))

    def scale(self, c) -> "RatPoly":
        c = to_rat(c)
        return RatPoly(tuple(c * a for a in self.coefficients))

    def __call__(self, t) -> Fraction:
        t = to_rat(t)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            body = str(mag) if k == 0 or mag != 1 else ""
            if k:
                body += ("*" if body else "") + ("t" if k == 1 else f"t^{k}")
            terms.append(("-" if c < 0 else "+", body))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def antiderivative(self) -> "RatPoly":
        return RatPoly((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coefficients)))


def linear_combination(terms: Iterable[tuple[Fraction, RatPoly]]) -> RatPoly:
    out = RatPoly()
    for c, p in terms:
        out = out + p.scale(c)
    return out


def integrate_product(p: RatPoly, q: RatPoly, a, b) -> Fraction:
    """Exact ``int_a^b p(t) q(t) dt``."""
    a, b = to_rat(a), to_rat(b)
    if a >= b:
        raise InputError("integration bounds need a < b")
    F = (p * q).antiderivative()
    return F(b) - F(a)


@dataclass(frozen=True)
class DemoReport:
    omega1: RatPoly
    omega2: RatPoly
    a: Fraction
    b: Fraction
    gram: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    delta: Fraction
    eta: tuple[Fraction, Fraction]
    u: RatPoly
    v1: RatPoly
    v2: RatPoly
    identities_ok: bool

    def pair(self, i: int, x: RatPoly) -> Fraction:
        """``<x*_i, x>`` for ``i`` in (1, 2)."""
        w = self.omega1 if i == 1 else self.omega2
        return integrate_product(w, x, self.a, self.b)


def run_demo(omega1: RatPoly, omega2: RatPoly, a, b, alpha1, alpha2) -> DemoReport:
    a, b = to_rat(a), to_rat(b)
    alpha1, alpha2 = to_rat(alpha1), to_rat(alpha2)
    if omega1.is_zero() or omega2.is_zero():
        raise InputError("weights must be nonzero")
    g11 = integrate_product(omega1, omega1, a, b)
    g12 = integrate_product(omega1, omega2, a, b)
    g22 = integrate_product(omega2, omega2, a, b)
    delta = g11 * g22 - g12 * g12
    if delta == 0:
        raise DependentWeightsError("weights are linearly dependent (delta = 0)")
    # Cramer's rule on [[g11, g12], [g12, g22]] eta = alpha
    eta1 = (alpha1 * g22 - g12 * alpha2) / delta
    eta2 = (g11 * alpha2 - g12 * alpha1) / delta
    u = linear_combination([(eta1, omega1), (eta2, omega2)])
    v1 = linear_combination([(g12, omega1), (-g11, omega2)])
    v2 = linear_combination([(-g22, omega1), (g12, omega2)])

    def pair(w, x):
        return integrate_product(w, x, a, b)

    ok = (
        pair(omega1, u) == alpha1
        and pair(omega2, u) == alpha2
        and pair(omega1, v1) == 0
        and pair(omega1, v2) == -delta
        and pair(omega2, v1) == -delta
        and pair(omega2, v2) == 0
    )
    return DemoReport(omega1, omega2, a, b, ((g11, g12), (g12, g22)), delta, (eta1, eta2), u, v1, v2, ok)


def demo_membership(report: DemoReport, x: RatPoly, alpha1, alpha2) -> tuple[Fraction, Fraction] | None:
    """Ray coefficients ``(mu1, mu2)`` of ``x`` when ``x`` is in D, else None."""
    alpha1, alpha2 = to_rat(alpha1), to_rat(alpha2)
    mu1 = (alpha2 - report.pair(2, x)) / report.delta
    mu2 = (alpha1 - report.pair(1, x)) / report.delta
    if mu1 < 0 or mu2 < 0:
        return None
    return mu1, mu2


def residual(report: DemoReport, x: RatPoly, mu: Sequence[Fraction]) -> RatPoly:
    """``x - (u + mu1 v1 + mu2 v2)``, the component in the common kernel."""
    return x - linear_combination([(1, report.u), (mu[0], report.v1), (mu[1], report.v2)])


def coefficient_vector(p: RatPoly, degree: int) -> tuple[Fraction, ...]:
    if p.degree > degree:
        raise InputError(f"polynomial of degree {p.degree} exceeds {degree}")
    return p.coefficients + (Fraction(0),) * (degree + 1 - len(p.coefficients))


def pairing_rows(report: DemoReport, degree: int) -> tuple[tuple[Fraction, ...], ...]:
    """Both functionals as coefficient-space row vectors on polynomials of
    degree at most ``degree``."""
    monomials = [RatPoly(tuple([0] * k + [1])) for k in range(degree + 1)]
    return tuple(tuple(report.pair(i, m) for m in monomials) for i in (1, 2))


def coefficient_generator_form(report: DemoReport, degree: int) -> GeneratorForm:
    """D restricted to polynomials of bounded degree, in coefficient space.

    The truncated kernel is spanned by the null vectors of the two pairing
    rows.
    """
    rows = pairing_rows(report, degree)
    return GeneratorForm(
        degree + 1,
        (coefficient_vector(report.u, degree),),
        (coefficient_vector(report.v1, degree), coefficient_vector(report.v2, degree)),
        tuple(nullspace_basis(rows)),
    )
