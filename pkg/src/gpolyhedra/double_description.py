"""Incremental double description for cones ``{w : E w = 0, B w <= 0}``.

All internal work is on primitive integer vectors; each constraint row is
rescaled by a positive factor first, which leaves the cone unchanged.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .rational_linalg import canonical_subspace_basis, normalize_direction, reduce_modulo


def _prim(v):
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _int_row(row) -> tuple[int, ...]:
    den = 1
    for x in row:
        den = math.lcm(den, Fraction(x).denominator)
    return _prim([int(Fraction(x) * den) for x in row])


def _idot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _combine(ca, a, cb, b):
    return _prim([ca * x + cb * y for x, y in zip(a, b)])


def cone_generators(
    dim: int,
    ineq: Sequence[Sequence] = (),
    eq: Sequence[Sequence] = (),
) -> tuple[list[tuple[Fraction, ...]], list[tuple[Fraction, ...]]]:
    """Extreme rays and a lineality basis of ``{w : eq w = 0, ineq w <= 0}``.

    Rays are reduced modulo the lineality space, scaled to primitive
    integer vectors and returned sorted.  The lineality basis is canonical
    (see :func:`canonical_subspace_basis`).
    """
    rows = [(_int_row(r), True) for r in eq] + [(_int_row(r), False) for r in ineq]
    lineality = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    # each ray is (vector, bitmask of processed rows it is tight on)
    rays: list[tuple[tuple[int, ...], int]] = []
    done_mask = 0

    for k, (b, is_eq) in enumerate(rows):
        bit = 1 << k
        piv = next((i for i, l in enumerate(lineality) if _idot(b, l) != 0), None)
        if piv is not None:
            l = lineality[piv]
            s = _idot(b, l)
            if s > 0:
                l, s = tuple(-x for x in l), -s
            new_lin = []
            for i, other in enumerate(lineality):
                if i == piv:
                    continue
                t = _idot(b, other)
                new_lin.append(other if t == 0 else _combine(-s, other, t, l))
            new_rays = []
            for r, z in rays:
                t = _idot(b, r)
                new_rays.append((r if t == 0 else _combine(-s, r, t, l), z | bit))
            if not is_eq:
                new_rays.append((_prim(l), done_mask))
            lineality = new_lin
            rays = new_rays
            done_mask |= bit
            continue

        pos, zero, neg = [], [], []
        for r, z in rays:
            t = _idot(b, r)
            if t > 0:
                pos.append((r, z, t))
            elif t < 0:
                neg.append((r, z, t))
            else:
                zero.append((r, z | bit))
        new_rays = list(zero)
        if not is_eq:
            new_rays.extend((r, z) for r, z, _ in neg)
        if pos and neg:
            masks = [z for _, z in rays]
            for rp, zp, tp in pos:
                for rn, zn, tn in neg:
                    common = zp & zn
                    adjacent = True
                    for zo in masks:
                        if zo & common == common and zo != zp and zo != zn:
                            adjacent = False
                            break
                    if adjacent:
                        new_rays.append((_combine(tp, rn, -tn, rp), common | bit))
        seen = set()
        rays = []
        for r, z in new_rays:
            if r not in seen:
                seen.add(r)
                rays.append((r, z))
        done_mask |= bit

    lin = canonical_subspace_basis([tuple(Fraction(x) for x in l) for l in lineality], dim)
    out = set()
    for r, _ in rays:
        red = reduce_modulo([Fraction(x) for x in r], lin) if lin else tuple(Fraction(x) for x in r)
        if any(red):
            out.add(normalize_direction(red))
    return sorted(out), lin
