"""Centered zonotopes of primitive integer generators, with exact face data.

A zonotope here is Z = sum_i [-v_i, v_i] for canonical generators v_i (same
validation as the lattice graphs).  The pipeline is H-rep first: every facet
normal is orthogonal to an (n-1)-subset of generators of rank n-1, and for a
zonotope every such normal line genuinely supports a pair of facets, with
offset equal to the support value h(u) = sum_i |<u, v_i>|.

Vertices are enumerated recursively: the facet of Z with outward normal u is
t_u + Z(T_u) where T_u are the generators orthogonal to u and
t_u = sum sign(<u,v_i>) v_i over the rest; sub-zonotopes are taken in an
integer basis of the facet hyperplane's lattice, which keeps every
intermediate coordinate an integer.  Recursion bottoms out at exact zonogon
cycles.  Every vertex lies on a facet, so the union over facets is complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from itertools import combinations, product

import numpy as np

from .errors import DimensionMismatchError, EmptySectionError, RankDeficientError
from .geometry import Polytope, convex_hull, hrep_vertices
from .intmat import (
    ChartSolver,
    canonical_sign,
    cross_nd,
    dot,
    is_zero,
    kernel_basis,
    primitive_part,
    rank,
    vadd,
    vneg,
    vsub,
)
from .plgraph import PLGraph, canonicalize_generators


def _det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _det4(a, b, c, d):
    total = 0
    cols = (1, 2, 3)
    rows = (b, c, d)
    for j in range(4):
        sub_cols = [i for i in range(4) if i != j]
        m = _det3(*[tuple(r[i] for i in sub_cols) for r in rows])
        total += (-1) ** j * a[j] * m
    return total


def _det_small(rows):
    k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return _det2(*rows)
    if k == 3:
        return _det3(*rows)
    return _det4(*rows)


@dataclass(frozen=True)
class Zonotope:
    """Centered zonotope sum_i [-v_i, v_i] with canonical generators."""

    dim: int
    generators: tuple

    def support(self, u) -> int:
        """Support value h(u) = sum |<u, v_i>| (the facet offset in direction u)."""
        return sum(abs(dot(u, g)) for g in self.generators)

    def volume(self) -> int:
        """Exact volume: 2^n times the sum of |det| over n-subsets of generators."""
        n = self.dim
        total = 0
        for sub in combinations(self.generators, n):
            total += abs(_det_small(sub))
        return (2 ** n) * total

    @cached_property
    def _facet_normals(self):
        """Canonical primitive facet normal representatives (one per +- pair)."""
        n = self.dim
        if n == 1:
            return ((1,),)
        found = set()
        for sub in combinations(self.generators, n - 1):
            u = cross_nd(sub, n)
            if is_zero(u):
                continue
            found.add(canonical_sign(primitive_part(u)))
        return tuple(sorted(found))

    @cached_property
    def _vertex_set(self):
        return frozenset(_zonotope_vertices(self.generators, self.dim))

    def polytope(self) -> Polytope:
        return self._polytope

    @cached_property
    def _polytope(self) -> Polytope:
        facets = []
        for u in self._facet_normals:
            h = self.support(u)
            facets.append((u, h))
            facets.append((vneg(u), h))
        return Polytope(self.dim, sorted(self._vertex_set), facets)


def build_zonotope(dim: int, generators) -> Zonotope:
    """Zonotope from symmetric generators (validated and canonicalized)."""
    return Zonotope(dim, canonicalize_generators(dim, generators))


def zonotope_of_graph(graph: PLGraph) -> Zonotope:
    """The limiting shape of a lattice graph: one symmetric segment per generator."""
    return Zonotope(graph.dim, graph.generators)


def build_zonotope_from_segments(dim: int, segment_vectors) -> Zonotope:
    """Zonotope from one-sided segments [0, w].

    The vectors must pair up exactly as {w, -w}: each pair [0,w] + [0,-w] is
    the symmetric segment [-w, w], so the sum is centered with no translation
    remainder.  Unpaired vectors are rejected.
    """
    pool = [tuple(int(a) for a in w) for w in segment_vectors]
    gens = []
    while pool:
        w = pool.pop()
        neg = vneg(w)
        if neg not in pool:
            raise ValueError(
                f"one-sided segment {w} has no matching {neg}; "
                "the segment list must be centrally symmetric")
        pool.remove(neg)
        gens.append(canonical_sign(w))
    return build_zonotope(dim, gens)


# -- vertex enumeration ------------------------------------------------------


def _zonogon_cycle(gens):
    """Counterclockwise vertex cycle of a 2D zonotope (exact angular sort)."""
    ups = [g if (g[0] > 0 or (g[0] == 0 and g[1] > 0)) else vneg(g) for g in gens]

    def cmp(u, v):
        cr = u[0] * v[1] - u[1] * v[0]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    ups.sort(key=cmp_to_key(cmp))
    x = -sum(u[0] for u in ups)
    y = -sum(u[1] for u in ups)
    cycle = [(x, y)]
    for u in ups:
        x, y = x + 2 * u[0], y + 2 * u[1]
        cycle.append((x, y))
    for u in ups[:-1]:
        x, y = x - 2 * u[0], y - 2 * u[1]
        cycle.append((x, y))
    return cycle


def _zonotope_vertices(gens, d):
    if d == 1:
        g = gens[0]
        return [g, vneg(g)]
    if d == 2:
        return _zonogon_cycle(gens)
    seen = set()
    verts = set()
    for sub in combinations(gens, d - 1):
        u = cross_nd(sub, d)
        if is_zero(u):
            continue
        u = canonical_sign(primitive_part(u))
        if u in seen:
            continue
        seen.add(u)
        shift = [0] * d
        tight = []
        for g in gens:
            s = dot(u, g)
            if s == 0:
                tight.append(g)
            elif s > 0:
                shift = [a + b for a, b in zip(shift, g)]
            else:
                shift = [a - b for a, b in zip(shift, g)]
        basis = kernel_basis([u], d)
        solver = ChartSolver(basis)
        chart_gens = tuple(tuple(int(a) for a in solver.coords(g)) for g in tight)
        for s in _zonotope_vertices(chart_gens, d - 1):
            w = tuple(int(a) + int(b) for a, b in zip(shift, solver.embed(s)))
            verts.add(w)
            verts.add(vneg(w))
    return verts


# -- face counting -----------------------------------------------------------


@dataclass(frozen=True)
class FVector:
    """Face counts (f_0, ..., f_{n-1}) of an n-polytope."""

    counts: tuple

    @property
    def euler_ok(self) -> bool:
        n = len(self.counts)
        alt = sum((-1) ** i * f for i, f in enumerate(self.counts))
        return alt == 1 - (-1) ** n

    def __iter__(self):
        return iter(self.counts)


def _bit_indices(x):
    while x:
        lsb = x & -x
        yield lsb.bit_length() - 1
        x ^= lsb


def f_vector(Z: Zonotope) -> FVector:
    """Face counts in every dimension, from vertex-facet incidence.

    Faces are generated top-down: the (d-1)-faces of each d-face are the
    maximal proper intersections with facets, restricted to facets that share
    a vertex with the face.  f_0 is the vertex count, so the walk stops at
    dimension 1.
    """
    P = Z.polytope()
    n = Z.dim
    nv, nf = len(P.vertices), len(P.facets)
    if n == 1:
        return FVector((2,))
    if n == 2:
        return FVector((nv, nf))
    V = np.array(P.vertices, dtype=np.int64)
    N = np.array([f[0] for f in P.facets], dtype=np.int64)
    C = np.array([int(f[1]) for f in P.facets], dtype=np.int64)
    inc = (V @ N.T) == C[None, :]
    facet_mask = []
    for j in range(nf):
        col = np.flatnonzero(inc[:, j])
        m = 0
        for i in col.tolist():
            m |= 1 << i
        facet_mask.append(m)
    vertex_mask = []
    for i in range(nv):
        row = np.flatnonzero(inc[i, :])
        m = 0
        for j in row.tolist():
            m |= 1 << j
        vertex_mask.append(m)

    counts = {n - 1: nf}
    current = set(facet_mask)
    for level in range(n - 2, 0, -1):
        nxt = set()
        for face in current:
            cand = 0
            for vi in _bit_indices(face):
                cand |= vertex_mask[vi]
            children = set()
            for fj in _bit_indices(cand):
                inter = face & facet_mask[fj]
                if inter and inter != face:
                    children.add(inter)
            ordered = sorted(children, key=lambda m: -m.bit_count())
            kept = []
            for c in ordered:
                if not any(c & k == c for k in kept):
                    kept.append(c)
            nxt.update(kept)
        counts[level] = len(nxt)
        current = nxt
    return FVector(tuple([nv] + [counts[l] for l in range(1, n - 1)] + [nf]))


# -- slices ------------------------------------------------------------------


@dataclass(frozen=True)
class FacetSlice:
    """A coordinate-direction face of a zonotope in its dropped-axis chart."""

    face: Polytope
    translation: tuple
    is_facet: bool


def facet_polytope(Z: Zonotope, axis: int) -> FacetSlice:
    """The face of Z maximizing coordinate `axis` (0-based).

    Returned in the chart that drops that coordinate, together with the
    ambient translation vector t = sum sign(v_i[axis]) * v_i; the face itself
    is the sub-zonotope of generators with vanishing `axis` coordinate.  When
    those generators do not span the hyperplane the face is lower-dimensional
    and `is_facet` is False.
    """
    n = Z.dim
    if not 0 <= axis < n:
        raise IndexError(f"axis {axis} out of range for dimension {n}")
    tight = [g for g in Z.generators if g[axis] == 0]
    shift = [0] * n
    for g in Z.generators:
        if g[axis] > 0:
            shift = [a + b for a, b in zip(shift, g)]
        elif g[axis] < 0:
            shift = [a - b for a, b in zip(shift, g)]
    chart_gens = [tuple(a for i, a in enumerate(g) if i != axis) for g in tight]
    full_rank = bool(chart_gens) and rank(chart_gens, n - 1) == n - 1
    if full_rank:
        face = Zonotope(n - 1, canonicalize_generators(n - 1, chart_gens)).polytope()
    else:
        pts = []
        for signs in product((-1, 1), repeat=len(chart_gens)):
            p = tuple(sum(s * g[i] for s, g in zip(signs, chart_gens))
                      for i in range(n - 1))
            pts.append(p)
        face = convex_hull(pts if pts else [tuple([0] * (n - 1))])
    return FacetSlice(face, tuple(shift), full_rank)


def hyperplane_section(Z: Zonotope, axis: int, level) -> Polytope:
    """Slice {x in Z : x[axis] = level} in the dropped-axis chart."""
    n = Z.dim
    if not 0 <= axis < n:
        raise IndexError(f"axis {axis} out of range for dimension {n}")
    level = Fraction(level)
    h = Z.support(tuple(1 if i == axis else 0 for i in range(n)))
    if abs(level) > h:
        raise EmptySectionError(
            f"|level| = {abs(level)} exceeds the support value {h} along axis {axis}")
    P = Z.polytope()
    ineqs = []
    for normal, offset in P.facets:
        reduced = tuple(a for i, a in enumerate(normal) if i != axis)
        ineqs.append((reduced, Fraction(offset) - normal[axis] * level))
    verts = hrep_vertices(ineqs, n - 1)
    if not verts:
        raise EmptySectionError(f"section at level {level} along axis {axis} is empty")
    return convex_hull(verts)


def homothety_check(P: Polytope, Q: Polytope):
    """(scale, translation) with Q = scale * P + translation, or None.

    Both polytopes must be full-dimensional in a common dimension; the scale
    is required to be positive.
    """
    if P.dim != Q.dim:
        raise DimensionMismatchError("homothety requires equal dimensions")
    if not (P.is_full_dimensional() and Q.is_full_dimensional()):
        raise RankDeficientError("homothety check requires full-dimensional polytopes")
    if len(P.vertices) != len(Q.vertices):
        return None
    scale = None
    for i in range(P.dim):
        ep = max(v[i] for v in P.vertices) - min(v[i] for v in P.vertices)
        eq = max(v[i] for v in Q.vertices) - min(v[i] for v in Q.vertices)
        s = Fraction(eq) / Fraction(ep)
        if scale is None:
            scale = s
        elif scale != s:
            return None
    if scale is None or scale <= 0:
        return None
    m = len(P.vertices)
    cp = tuple(Fraction(sum(Fraction(v[i]) for v in P.vertices), m) for i in range(P.dim))
    cq = tuple(Fraction(sum(Fraction(v[i]) for v in Q.vertices), m) for i in range(Q.dim))
    t = tuple(b - scale * a for a, b in zip(cp, cq))
    image = {tuple(scale * Fraction(a) + b for a, b in zip(v, t)) for v in P.vertices}
    target = {tuple(map(Fraction, v)) for v in Q.vertices}
    if image != target:
        return None
    t = tuple(a if a.denominator != 1 else int(a) for a in t)
    if scale.denominator == 1:
        scale = int(scale)
    return scale, t


def zonotope_volume(Z: Zonotope) -> int:
    return Z.volume()


def zonotope_hrep(Z: Zonotope):
    return Z.polytope().facets


def zonotope_vertices(Z: Zonotope):
    return Z.polytope().vertices
