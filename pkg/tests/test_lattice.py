"""Dual projection lattices, determinant identities, point counting, Pick."""

import random
from fractions import Fraction

import pytest

from isozono.errors import NonPrimitiveGeneratorError, ZeroVectorError
from isozono.geometry import convex_hull
from isozono.intmat import dot, gram_det
from isozono.lattice import (
    boundary_lattice_points,
    count_lattice_points,
    dual_projection_lattice_basis,
    pick_area,
    projection_lattice_det_squared,
)

OCTAGON = [(3, 1), (1, 3), (-1, 3), (-3, 1), (-3, -1), (-1, -3), (1, -3), (3, -1)]


def test_dual_basis_simple_direction():
    b = dual_projection_lattice_basis((1, 1))
    assert b.rank == 1
    (v,) = b.vectors
    assert dot(v, (1, 1)) == 0
    assert b.gram_determinant == 2  # v = ±(1,-1)


def test_dual_basis_orthogonality_fuzz():
    rng = random.Random(37)
    for _ in range(150):
        n = rng.randint(2, 5)
        a = [rng.randint(-6, 6) for _ in range(n)]
        if all(x == 0 for x in a):
            continue
        from isozono.intmat import primitive_part
        a = primitive_part(a)
        basis = dual_projection_lattice_basis(a)
        assert basis.rank == n - 1
        for v in basis.vectors:
            assert dot(v, a) == 0
        assert basis.gram_determinant == gram_det(basis.vectors)


def test_det_squared_closed_form():
    # det(projection lattice)^2 = 1 / (a . a), cross-checked internally.
    assert projection_lattice_det_squared((1, 0)) == 1
    assert projection_lattice_det_squared((1, 1)) == Fraction(1, 2)
    assert projection_lattice_det_squared((1, 2, 2)) == Fraction(1, 9)
    rng = random.Random(41)
    for _ in range(100):
        n = rng.randint(2, 5)
        a = [rng.randint(-5, 5) for _ in range(n)]
        if all(x == 0 for x in a):
            continue
        from isozono.intmat import primitive_part
        a = primitive_part(a)
        assert projection_lattice_det_squared(a) == Fraction(1, dot(a, a))


def test_dual_basis_rejects_bad_input():
    with pytest.raises(NonPrimitiveGeneratorError):
        dual_projection_lattice_basis((2, 4))
    with pytest.raises(ZeroVectorError):
        dual_projection_lattice_basis((0, 0, 0))


def test_octagon_point_counts():
    P = convex_hull(OCTAGON)
    assert P.volume() == 28
    assert count_lattice_points(P) == 37
    assert boundary_lattice_points(P) == 16
    interior = count_lattice_points(P) - boundary_lattice_points(P)
    assert interior == 21
    assert pick_area(P) == 28  # 21 + 16/2 - 1


def test_pick_matches_volume_fuzz():
    rng = random.Random(43)
    checked = 0
    while checked < 80:
        pts = {(rng.randint(-7, 7), rng.randint(-7, 7))
               for _ in range(rng.randint(3, 10))}
        P = convex_hull(pts)
        if P.affine_dim < 2:
            continue
        assert pick_area(P) == P.volume()
        checked += 1


def test_count_points_unit_cube_3d():
    cube = convex_hull([(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)])
    assert count_lattice_points(cube) == 27
