"""Sublattice bases, lattice determinants, and lattice point counting.

The key identity: for a primitive integer vector a, the lattice of integer
points orthogonal to a has squared determinant equal to a.a, so the projection
of Z^n along a onto a-perp has squared determinant 1/(a.a).  Both routes
(Gram determinant of a computed kernel basis, and the closed form) are
evaluated and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor, gcd

from .errors import (
    DimensionDeficiencyError,
    InternalConsistencyError,
    NonPrimitiveGeneratorError,
    ZeroVectorError,
)
from .geometry import Polytope
from .intmat import content, dot, gram_det, is_zero, kernel_basis, vsub


@dataclass(frozen=True)
class LatticeBasis:
    """An explicit basis of a sublattice of Z^n with its Gram determinant."""

    vectors: tuple
    gram_determinant: int

    @property
    def rank(self) -> int:
        return len(self.vectors)


def dual_projection_lattice_basis(a) -> LatticeBasis:
    """Basis of {x in Z^n : <x, a> = 0} for a primitive vector a, n >= 2."""
    a = tuple(int(x) for x in a)
    if len(a) < 2:
        raise DimensionDeficiencyError("need ambient dimension >= 2")
    if is_zero(a):
        raise ZeroVectorError("direction must be nonzero")
    if content(a) != 1:
        raise NonPrimitiveGeneratorError(f"direction {a} is not primitive")
    basis = tuple(kernel_basis([a], len(a)))
    return LatticeBasis(basis, int(gram_det(basis)))


def projection_lattice_det_squared(a) -> Fraction:
    """Squared determinant of the projection of Z^n along primitive a.

    Computed two independent ways (closed form 1/(a.a) and 1/Gram of the
    orthogonal-lattice basis); disagreement raises, by design.
    """
    a = tuple(int(x) for x in a)
    closed = Fraction(1, dot(a, a))
    basis = dual_projection_lattice_basis(a)
    computed = Fraction(1, basis.gram_determinant)
    if closed != computed:
        raise InternalConsistencyError(
            f"projection lattice determinant mismatch for {a}: "
            f"closed form {closed} vs basis Gram {computed}")
    return closed


def count_lattice_points(P: Polytope) -> int:
    """Number of integer points in a polytope, by bounding-box enumeration."""
    if P.chart is not None:
        raise DimensionDeficiencyError("lattice point counting requires a full-dimensional polytope")
    lows, highs = P.bounding_box()
    ranges = [range(ceil(lo), floor(hi) + 1) for lo, hi in zip(lows, highs)]
    facets = P.facets
    count = 0
    for p in product(*ranges):
        if all(dot(n, p) <= c for n, c in facets):
            count += 1
    return count


def boundary_lattice_points(P: Polytope) -> int:
    """Number of integer points on the boundary of a lattice polygon."""
    if P.dim != 2 or P.chart is not None:
        raise DimensionDeficiencyError("boundary point counting is for full-dimensional polygons")
    cycle = P.cycle()
    total = 0
    for i in range(len(cycle)):
        d = vsub(cycle[(i + 1) % len(cycle)], cycle[i])
        if any(not isinstance(a, int) and Fraction(a).denominator != 1 for a in d):
            raise ValueError("boundary point counting requires integer vertices")
        total += gcd(int(d[0]), int(d[1]))
    return total


def pick_area(P: Polytope) -> Fraction:
    """Area of a lattice polygon from its point counts: I + B/2 - 1.

    Deliberately computed only from counting, as an independent cross-check
    of the shoelace volume.
    """
    for v in P.vertices:
        if any(Fraction(a).denominator != 1 for a in v):
            raise ValueError(f"vertex {v} is not a lattice point")
    B = boundary_lattice_points(P)
    I = count_lattice_points(P) - B
    return Fraction(I) + Fraction(B, 2) - 1
