import random
from fractions import Fraction

import pytest

from generators import rand_int_vec, random_vlp
from gpolyhedra.errors import EmptyInteriorError, InputError, NotInSetError
from gpolyhedra.generalized import ConeForm
from gpolyhedra.linprog import index_pattern
from gpolyhedra.polyhedron import GeneratorForm, HForm, contains_v
from gpolyhedra.rational_linalg import dot, identity, matvec, scale, unit, vec, zeros
from gpolyhedra.vector_linprog import (
    VLPProblem,
    adjoint,
    criterion_sufficient,
    is_weakly_efficient_oracle,
    scalarize,
    vlp_has_solution,
    weakly_efficient_set,
)

F = Fraction

SQUARE = GeneratorForm(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
ORTHANT_D = GeneratorForm(2, [(0, 0)], [(1, 0), (0, 1)])
ORTH2 = ConeForm(2, (unit(2, 0), unit(2, 1)))


def test_adjoint_examples():
    assert adjoint(identity(2), (3, 4)) == vec([3, 4])
    assert adjoint([[1, 2], [3, 4]], (1, 0)) == vec([1, 2])
    assert adjoint([[1, 2], [3, 4]], (0, 0)) == vec([0, 0])
    with pytest.raises(InputError):
        adjoint([[1, 2]], (1, 0))


def test_adjoint_pairing_identity():
    rng = random.Random(41)
    M = [rand_int_vec(rng, 3) for _ in range(2)]
    for _ in range(20):
        y, x = rand_int_vec(rng, 2), rand_int_vec(rng, 3)
        assert dot(y, matvec(M, x)) == dot(adjoint(M, y), x)


def test_scalarize_examples():
    p = VLPProblem(identity(2), SQUARE, ORTH2)
    assert scalarize(p, (1, 0)).objective == vec([1, 0])
    assert scalarize(p, (0, 0)).objective == vec([0, 0])
    q = VLPProblem([[1, 1]], SQUARE, ConeForm(1, ((1,),)))
    assert scalarize(q, (1,)).objective == vec([1, 1])
    with pytest.raises(InputError):
        scalarize(p, (-1, 0))


def test_has_solution_examples():
    w = vlp_has_solution(VLPProblem(identity(2), SQUARE, ORTH2))
    assert w is not None and any(w[0])
    y_star, x_star = vlp_has_solution(VLPProblem(identity(2), ORTHANT_D, ORTH2))
    assert any(y_star) and x_star == adjoint(identity(2), y_star)
    full = GeneratorForm(2, [(0, 0)], lineality=[(1, 0), (0, 1)])
    assert vlp_has_solution(VLPProblem(identity(2), full, ORTH2)) is None


def test_criterion_sufficient_examples():
    assert criterion_sufficient(VLPProblem(identity(2), ORTHANT_D, ORTH2))
    assert not criterion_sufficient(VLPProblem([[0, 0], [0, 0]], SQUARE, ORTH2))
    full = GeneratorForm(2, [(0, 0)], lineality=[(1, 0), (0, 1)])
    assert not criterion_sufficient(VLPProblem(identity(2), full, ORTH2))


def test_has_solution_with_non_pointed_dual():
    # K is a ray, so K* is a halfplane with lineality: the nonzero test matters
    K = ConeForm(2, ((1, 0),))
    D = GeneratorForm(2, [(0, 0)], lineality=[(0, 1)])
    y_star, x_star = vlp_has_solution(VLPProblem(identity(2), D, K))
    assert any(y_star) and x_star[1] == 0 and y_star[0] >= 0


def test_weak_set_square():
    w = weakly_efficient_set(VLPProblem(identity(2), SQUARE, ORTH2))
    assert not w.covers_all_of_D
    faces = {frozenset(p.piece.points) for p in w.pieces}
    left = frozenset({vec([0, 0]), vec([0, 1])})
    bottom = frozenset({vec([0, 0]), vec([1, 0])})
    assert left in faces and bottom in faces
    # brute-force oracle over the four vertices and edge midpoints
    p = VLPProblem(identity(2), SQUARE, ORTH2)
    for x in [(0, 0), (1, 0), (0, 1), (1, 1), (F(1, 2), 0), (0, F(1, 2)), (1, F(1, 2)), (F(1, 2), 1)]:
        assert w.contains(x) == is_weakly_efficient_oracle(p, x)


def test_weak_set_single_point_and_zero_map():
    pt = GeneratorForm(2, [(1, 2)])
    w = weakly_efficient_set(VLPProblem(identity(2), pt, ORTH2))
    assert len(w.pieces) == 1 and w.pieces[0].piece.points == (vec([1, 2]),)
    w = weakly_efficient_set(VLPProblem([[0, 0], [0, 0]], SQUARE, ORTH2))
    assert w.covers_all_of_D
    assert all(w.contains(u) for u in SQUARE.points)


def test_weak_set_requires_interior():
    flat = ConeForm(2, (unit(2, 0),))
    with pytest.raises(EmptyInteriorError, match="int K empty"):
        weakly_efficient_set(VLPProblem(identity(2), SQUARE, flat))


def test_oracle_examples():
    p = VLPProblem(identity(2), SQUARE, ORTH2)
    assert is_weakly_efficient_oracle(p, (0, F(1, 2)))
    assert not is_weakly_efficient_oracle(p, (F(1, 2), F(1, 2)))
    assert is_weakly_efficient_oracle(VLPProblem(identity(2), GeneratorForm(2, [(5, 5)]), ORTH2), (5, 5))
    with pytest.raises(NotInSetError):
        is_weakly_efficient_oracle(p, (2, 2))


def test_k_in_halfspace_form():
    K_h = HForm(2, C=[[-1, 0], [0, -1]], alpha=[0, 0])
    p = VLPProblem(identity(2), SQUARE, K_h)
    assert p.K_h is K_h
    assert len(weakly_efficient_set(p).pieces) == 3


def test_piece_witnesses_random():
    rng = random.Random(42)
    for _ in range(25):
        p = random_vlp(rng)
        w = weakly_efficient_set(p)
        k, l = len(p.D.points), len(p.D.rays)
        assert len(w.pieces) <= 2 ** k * 2 ** l
        keys = [pc.pattern.sort_key() for pc in w.pieces]
        assert keys == sorted(keys)
        for pc in w.pieces:
            assert any(pc.y_star)
            assert all(dot(pc.y_star, r) >= 0 for r in p.K.rays)
            assert adjoint(p.M, pc.y_star) == pc.x_star
            assert index_pattern(p.D, pc.x_star) == pc.pattern
            c = F(rng.randint(1, 7), rng.randint(1, 7))
            assert index_pattern(p.D, scale(c, pc.x_star)) == pc.pattern
        exists = vlp_has_solution(p) is not None
        assert exists == (not w.is_empty)
        if criterion_sufficient(p):
            assert exists
