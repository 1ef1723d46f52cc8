"""Structure of generalized polyhedra: lineality decomposition and cones."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptySetError, InputError, NotAConeError
from .polyhedron import (
    GeneratorForm,
    HForm,
    MembershipCertificate,
    _restricted_generators,
    contains_h,
    contains_v,
)
from .rational_linalg import (
    RatVec,
    complement_basis,
    is_zero,
    neg,
    normalize_direction,
    rank,
    vec,
    zeros,
)


@dataclass(frozen=True)
class Decomposition:
    """``D = lift(d1) + span(x0_basis)`` with ``d1`` in ``x1_basis`` coordinates."""

    x0_basis: tuple[RatVec, ...]
    x1_basis: tuple[RatVec, ...]
    d1: GeneratorForm

    @property
    def dim(self) -> int:
        return len(self.x0_basis) + len(self.x1_basis)

    def lift(self, z: Sequence) -> RatVec:
        out = [Fraction(0)] * self.dim
        for c, e in zip(z, self.x1_basis):
            for i, x in enumerate(e):
                if x:
                    out[i] += c * x
        return tuple(out)

    def reassemble(self) -> GeneratorForm:
        return GeneratorForm(
            self.dim,
            tuple(self.lift(p) for p in self.d1.points),
            tuple(self.lift(r) for r in self.d1.rays),
            self.x0_basis,
        )


@dataclass(frozen=True)
class ConeForm:
    """``cone(rays) + span(lineality)``."""

    dim: int
    rays: tuple[RatVec, ...] = ()
    lineality: tuple[RatVec, ...] = ()

    def __post_init__(self):
        g = self.as_generator_form()
        object.__setattr__(self, "rays", g.rays)
        object.__setattr__(self, "lineality", g.lineality)

    def as_generator_form(self) -> GeneratorForm:
        return GeneratorForm(self.dim, (zeros(self.dim),), self.rays, self.lineality)

    def contains(self, x: Sequence) -> MembershipCertificate | None:
        return contains_v(self.as_generator_form(), x)

    def generators(self) -> list[RatVec]:
        """Rays plus both orientations of each lineality vector."""
        return list(self.rays) + [w for l in self.lineality for w in (l, neg(l))]

    @property
    def is_pointed(self) -> bool:
        return not self.lineality


def decompose(h: HForm) -> Decomposition:
    r = _restricted_generators(h)
    if not r.points:
        raise EmptySetError("cannot decompose an infeasible system")
    x1 = complement_basis(r.lineality, h.dim)
    d1 = GeneratorForm(len(x1), tuple(sorted(r.points)), tuple(sorted(r.rays)))
    return Decomposition(tuple(r.lineality), tuple(x1), d1)


def cone_representation(h: HForm) -> ConeForm:
    """Rays and lineality of a cone given by a homogeneous system.

    Points of the generator form are folded into the ray list; the zero
    vector is dropped.
    """
    if not h.is_homogeneous or not contains_h(h, zeros(h.dim)):
        raise NotAConeError("halfspace form is not a cone: right-hand sides must be zero")
    r = _restricted_generators(h)
    lift = lambda z: r.lift(z, h.dim)  # noqa: E731
    rays = {normalize_direction(lift(v)) for v in r.rays}
    rays |= {normalize_direction(lift(u)) for u in r.points if not is_zero(u)}
    return ConeForm(h.dim, tuple(sorted(rays)), tuple(r.lineality))


def cone_from_generators(dim: int, rays: Sequence[Sequence], lineality: Sequence[Sequence] = ()) -> ConeForm:
    """Validated :class:`ConeForm` built from possibly redundant generators."""
    rays = tuple(vec(r) for r in rays if not is_zero(vec(r)))
    lineality = tuple(vec(l) for l in lineality)
    if lineality and rank(lineality) < len(lineality):
        raise InputError("lineality vectors are linearly dependent")
    return ConeForm(dim, rays, lineality)


def dual_cone(c: ConeForm) -> ConeForm:
    """``{x* : <x*, v> >= 0 for all v in c}`` under the dot-product pairing."""
    h = HForm(c.dim, A=c.lineality, y=zeros(len(c.lineality)), C=tuple(neg(r) for r in c.rays), alpha=zeros(len(c.rays)))
    return cone_representation(h)
