"""Exact rational convex geometry in ambient dimension 1-4.

Everything is computed over Python ints and Fractions; floats never enter a
predicate.  Irrational magnitudes (lengths, facet areas) are never stored:
facet sizes are kept as *lattice volumes* — the (n-1)-volume of the facet
measured in an integer lattice basis of its hyperplane's direction space.
For a primitive integer normal a, the true (n-1)-volume equals the lattice
volume times sqrt(a.a), so sweep volumes and cone volumes come out rational
while the irrational factor cancels.

The hull routine is a support-plane enumeration (every facet hyperplane of a
polytope is spanned by n affinely independent input points); it is intended
for the modest point counts this library actually produces.  Zonotopes use
their own dedicated enumeration elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import gcd

from . import intmat
from .errors import (
    DimensionDeficiencyError,
    DimensionMismatchError,
    FormatError,
    ZeroVectorError,
)
from .intmat import (
    ChartSolver,
    canonical_sign,
    cross_nd,
    dot,
    gram_det,
    integerize,
    is_zero,
    kernel_basis,
    primitive_part,
    vadd,
    vneg,
    vsub,
)


def _norm_num(a):
    if isinstance(a, Fraction) and a.denominator == 1:
        return int(a)
    return a


def _norm_point(p):
    return tuple(_norm_num(Fraction(a)) if not isinstance(a, int) else a for a in p)


@dataclass(frozen=True)
class Chart:
    """Affine chart of a flat polytope: base point + integer direction basis.

    `body` is the same polytope expressed (full-dimensionally) in chart
    coordinates; ambient point = base + sum_j y_j * basis_j.
    """

    base: tuple
    basis: tuple
    body: "Polytope"

    def solver(self) -> ChartSolver:
        return ChartSolver(self.basis)


class Polytope:
    """A bounded convex polytope with exact rational data.

    Full-dimensional polytopes carry both a vertex list and an irredundant
    facet list (primitive integer outward normals, rational offsets).
    Flat polytopes carry their ambient vertices plus a `chart`.
    """

    def __init__(self, dim, vertices, facets=None, chart=None):
        self.dim = dim
        self.vertices = tuple(sorted(_norm_point(v) for v in vertices))
        self.facets = None if facets is None else tuple(
            sorted((tuple(n), _norm_num(Fraction(c))) for n, c in facets)
        )
        self.chart = chart
        self._volume = None
        self._cells = None
        self._cycle = None

    # -- basic queries ---------------------------------------------------

    @property
    def affine_dim(self):
        if self.chart is not None:
            return len(self.chart.basis)
        return self.dim

    def is_full_dimensional(self):
        return self.chart is None and self.dim >= 1

    def contains(self, point):
        point = tuple(point)
        if len(point) != self.dim:
            raise DimensionMismatchError(
                f"point of dim {len(point)} vs polytope of dim {self.dim}")
        if self.chart is None:
            return all(dot(n, point) <= c for n, c in self.facets)
        base = self.chart.base
        if len(self.chart.basis) == 0:
            return all(Fraction(a) == Fraction(b) for a, b in zip(point, base))
        solver = self.chart.solver()
        y = solver.coords(vsub(point, base))
        if any(Fraction(a) != Fraction(b) for a, b in zip(vadd(base, solver.embed(y)), point)):
            return False
        return self.chart.body.contains(y)

    def bounding_box(self):
        lows = [min(v[i] for v in self.vertices) for i in range(self.dim)]
        highs = [max(v[i] for v in self.vertices) for i in range(self.dim)]
        return tuple(lows), tuple(highs)

    def support(self, direction):
        return max(dot(direction, v) for v in self.vertices)

    # -- volume ----------------------------------------------------------

    def volume(self):
        """Full-dimensional Lebesgue volume (exact Fraction)."""
        if not self.is_full_dimensional():
            raise DimensionDeficiencyError(
                f"volume requires a full-dimensional polytope "
                f"(affine dim {self.affine_dim} in ambient dim {self.dim})")
        if self._volume is None:
            self._volume = self._compute_volume()
        return self._volume

    def volume_squared(self):
        """Squared volume in the ambient metric; rational even for flat bodies."""
        if self.chart is None:
            v = self.volume()
            return _norm_num(Fraction(v) ** 2)
        if len(self.chart.basis) == 0:
            return 1
        body_vol = Fraction(self.chart.body.volume())
        return _norm_num(body_vol ** 2 * gram_det(self.chart.basis))

    def chart_volume(self):
        """Volume of a flat polytope measured in its own chart coordinates."""
        if self.chart is None:
            return self.volume()
        if len(self.chart.basis) == 0:
            return 1
        return self.chart.body.volume()

    def _compute_volume(self):
        n = self.dim
        if n == 1:
            xs = [v[0] for v in self.vertices]
            return _norm_num(Fraction(max(xs) - min(xs)))
        if n == 2:
            return _shoelace(self.cycle())
        apex = self.vertices[0]
        total = Fraction(0)
        for normal, offset, cell in self.facet_cells():
            height = Fraction(offset) - dot(normal, apex)
            if height:
                total += height * cell
        return _norm_num(total / n)

    def facet_cells(self):
        """(normal, offset, lattice volume) per facet.

        The lattice volume is the facet's (n-1)-volume in an integer basis of
        normal-perp; true (n-1)-volume = lattice volume * sqrt(normal.normal).
        """
        if self.facets is None:
            raise DimensionDeficiencyError("facet data requires a full-dimensional polytope")
        if self._cells is None:
            cells = []
            for normal, offset in self.facets:
                tight = [v for v in self.vertices if dot(normal, v) == offset]
                cells.append((normal, offset, _facet_lattice_volume(self.dim, normal, tight)))
            self._cells = tuple(cells)
        return self._cells

    def cycle(self):
        """Vertices of a 2-polytope in counterclockwise cyclic order."""
        if self.dim != 2 or self.chart is not None:
            raise DimensionDeficiencyError("cycle() is for full-dimensional polygons")
        if self._cycle is None:
            self._cycle = _ccw_cycle(self.vertices)
        return self._cycle

    # -- transforms --------------------------------------------------------

    def translate(self, t):
        t = tuple(t)
        verts = [vadd(v, t) for v in self.vertices]
        facets = None
        if self.facets is not None:
            facets = [(n, Fraction(c) + dot(n, t)) for n, c in self.facets]
        chart = None
        if self.chart is not None:
            chart = Chart(_norm_point(vadd(self.chart.base, t)), self.chart.basis, self.chart.body)
        return Polytope(self.dim, verts, facets, chart)

    def scale(self, factor):
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        verts = [tuple(factor * a for a in v) for v in self.vertices]
        facets = None
        if self.facets is not None:
            facets = [(n, factor * Fraction(c)) for n, c in self.facets]
        chart = None
        if self.chart is not None:
            chart = Chart(
                _norm_point(tuple(factor * a for a in self.chart.base)),
                self.chart.basis,
                self.chart.body.scale(factor),
            )
        return Polytope(self.dim, verts, facets, chart)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Polytope) and self.dim == other.dim
                and self.vertices == other.vertices)

    def __repr__(self):
        kind = "flat " if self.chart is not None else ""
        return f"<{kind}Polytope dim={self.dim} vertices={len(self.vertices)}>"


# -- hull ------------------------------------------------------------------


def convex_hull(points) -> Polytope:
    """Exact convex hull; flat inputs get an affine chart with integer basis."""
    pts = [_norm_point(tuple(p)) for p in points]
    if not pts:
        raise ValueError("convex_hull of an empty point set")
    dim = len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise DimensionMismatchError("dimension mismatch among input points")
    pts = sorted(set(pts))
    base = pts[0]
    diffs = [vsub(p, base) for p in pts[1:]]
    int_diffs = [integerize(d) for d in diffs if not is_zero(d)]
    perp = kernel_basis(int_diffs, dim)
    arank = dim - len(perp)
    if arank == dim:
        return _hull_full(pts, dim)
    # flat: saturated integer basis of the direction space, then hull in chart
    basis = tuple(kernel_basis(perp, dim))
    if arank == 0:
        body = Polytope(0, [()], facets=(), chart=None)
        return Polytope(dim, [base], None, Chart(base, (), body))
    solver = ChartSolver(basis)
    ys = [solver.coords(vsub(p, base)) for p in pts]
    body = _hull_full(sorted(set(map(_norm_point, ys))), arank)
    verts = [_norm_point(vadd(base, solver.embed(y))) for y in body.vertices]
    return Polytope(dim, verts, None, Chart(base, basis, body))


def _hull_full(pts, dim):
    if dim == 1:
        xs = [p[0] for p in pts]
        lo, hi = min(xs), max(xs)
        return Polytope(1, [(lo,), (hi,)], [((1,), hi), ((-1,), -lo)])
    if dim == 2:
        cycle = _monotone_chain(pts)
        facets = []
        m = len(cycle)
        for i in range(m):
            p, q = cycle[i], cycle[(i + 1) % m]
            d = vsub(q, p)
            normal = integerize((d[1], -d[0]))
            facets.append((normal, dot(normal, p)))
        poly = Polytope(2, cycle, facets)
        poly._cycle = tuple(cycle)
        return poly
    return _hull_brute(pts, dim)


def _monotone_chain(pts):
    """Andrew's monotone chain; returns the hull cycle counterclockwise."""
    pts = sorted(pts)
    if len(pts) == 1:
        return list(pts)

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _hull_brute(pts, dim):
    """Support-plane enumeration over (dim)-subsets; exact, for small inputs."""
    m = len(pts)
    planes = {}
    for idx in combinations(range(m), dim):
        basep = pts[idx[0]]
        rows = [vsub(pts[i], basep) for i in idx[1:]]
        normal = cross_nd(rows, dim)
        if is_zero(normal):
            continue
        normal = integerize(normal)
        c = dot(normal, basep)
        if (normal, c) in planes or (vneg(normal), -c) in planes:
            continue
        below = above = False
        for p in pts:
            s = dot(normal, p)
            if s > c:
                above = True
            elif s < c:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            normal, c = vneg(normal), -c
        planes[(normal, _norm_num(Fraction(c)))] = True
    facets = list(planes)
    verts = []
    for p in pts:
        tight = [n for n, c in facets if dot(n, p) == c]
        if len(tight) >= dim and intmat.rank(tight, dim) == dim:
            verts.append(p)
    return Polytope(dim, verts, facets)


def _ccw_cycle(vertices):
    m = len(vertices)
    if m <= 2:
        return tuple(vertices)
    cx = Fraction(sum(Fraction(v[0]) for v in vertices), m)
    cy = Fraction(sum(Fraction(v[1]) for v in vertices), m)

    def half(p):
        dxy = (p[1] - cy, p[0] - cx)
        return 0 if (dxy[0] > 0 or (dxy[0] == 0 and dxy[1] > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        cr = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        if cr == 0:
            return 0
        return -1 if cr > 0 else 1

    return tuple(sorted(vertices, key=cmp_to_key(cmp)))


def _shoelace(cycle):
    total = Fraction(0)
    m = len(cycle)
    for i in range(m):
        x0, y0 = cycle[i]
        x1, y1 = cycle[(i + 1) % m]
        total += Fraction(x0) * y1 - Fraction(x1) * y0
    return _norm_num(abs(total) / 2)


def _facet_lattice_volume(dim, normal, tight_vertices):
    """(dim-1)-volume of a facet in an integer basis of its hyperplane."""
    if dim == 1:
        return 1
    if dim == 2:
        p, q = tight_vertices[0], tight_vertices[-1]
        if len(tight_vertices) != 2:
            tight_vertices = sorted(tight_vertices)
            p, q = tight_vertices[0], tight_vertices[-1]
        d = vsub(q, p)
        prim = integerize(d)
        j = next(i for i, a in enumerate(prim) if a != 0)
        return _norm_num(abs(Fraction(d[j]) / prim[j]))
    basis = kernel_basis([normal], dim)
    solver = ChartSolver(basis)
    base = tight_vertices[0]
    ys = [solver.coords(vsub(v, base)) for v in tight_vertices]
    body = convex_hull(ys)
    return body.volume()


# -- named operations --------------------------------------------------------


def polytope_volume(P: Polytope):
    """Exact Lebesgue volume of a full-dimensional polytope."""
    return P.volume()


def project_polytope(P: Polytope, v) -> Polytope:
    """Orthogonal shadow of P on the hyperplane v-perp.

    The result is flat in the ambient space and carries a chart whose basis is
    an integer lattice basis of v-perp, so `volume_squared()` reports the
    exact squared (n-1)-volume of the shadow.
    """
    v = tuple(v)
    if len(v) != P.dim:
        raise DimensionMismatchError("direction dimension does not match polytope")
    if is_zero(v):
        raise ZeroVectorError("cannot project along the zero vector")
    vv = dot(v, v)
    shadow = []
    for x in P.vertices:
        t = Fraction(dot(x, v), vv)
        shadow.append(vsub(x, tuple(t * a for a in v)))
    return convex_hull(shadow)


def minkowski_sum_segment(P: Polytope, a, b) -> Polytope:
    """Minkowski sum of P with the segment from a to b."""
    a, b = tuple(a), tuple(b)
    if len(a) != P.dim or len(b) != P.dim:
        raise DimensionMismatchError("segment endpoints must match the polytope dimension")
    pts = [vadd(x, a) for x in P.vertices] + [vadd(x, b) for x in P.vertices]
    return convex_hull(pts)


def hrep_vertices(inequalities, dim):
    """All vertices of {x : <a,x> <= c for each (a, c)}; the region must be bounded.

    Square subsystems are solved exactly; feasible solutions tight on dim
    independent rows are exactly the vertices.
    """
    ineqs = []
    for n, c in inequalities:
        n = tuple(n)
        c = Fraction(c)
        if is_zero(n):
            if c < 0:
                return []
            continue
        if (n, c) not in ineqs:
            ineqs.append((n, c))
    verts = set()
    for rows in combinations(ineqs, dim):
        x = intmat.solve([r[0] for r in rows], [r[1] for r in rows])
        if x is None:
            continue
        if all(dot(n, x) <= c for n, c in ineqs):
            verts.add(_norm_point(x))
    return sorted(verts)


# -- serialization ------------------------------------------------------------


def polytope_to_text(P: Polytope) -> str:
    lines = [f"dim {P.dim}", "V"]
    for v in P.vertices:
        lines.append(" ".join(str(Fraction(a)) for a in v))
    if P.facets is not None:
        lines.append("H")
        for n, c in P.facets:
            lines.append(" ".join(str(a) for a in n) + " <= " + str(Fraction(c)))
    return "\n".join(lines) + "\n"


def polytope_from_text(text: str, source: str = "<string>") -> Polytope:
    dim = None
    verts, ineqs = [], []
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("dim"):
            try:
                dim = int(line.split()[1])
            except (IndexError, ValueError):
                raise FormatError(f"{source}:{lineno}: malformed dim line {raw!r}")
            continue
        if line == "V":
            section = "V"
            continue
        if line == "H":
            section = "H"
            continue
        if section == "V":
            try:
                verts.append(tuple(Fraction(tok) for tok in line.split()))
            except ValueError:
                raise FormatError(f"{source}:{lineno}: bad vertex row {raw!r}")
            if dim is not None and len(verts[-1]) != dim:
                raise FormatError(f"{source}:{lineno}: vertex has {len(verts[-1])} coordinates, expected {dim}")
        elif section == "H":
            norm = line.replace("≤", "<=")
            if "<=" not in norm:
                raise FormatError(f"{source}:{lineno}: facet row missing '<=' {raw!r}")
            left, _, right = norm.partition("<=")
            try:
                normal = tuple(int(tok) for tok in left.split())
                offset = Fraction(right.strip())
            except ValueError:
                raise FormatError(f"{source}:{lineno}: bad facet row {raw!r}")
            if dim is not None and len(normal) != dim:
                raise FormatError(f"{source}:{lineno}: facet normal has {len(normal)} coordinates, expected {dim}")
            ineqs.append((normal, offset))
        else:
            raise FormatError(f"{source}:{lineno}: content outside V/H sections {raw!r}")
    if dim is None or not verts:
        raise FormatError(f"{source}: missing dim line or V section")
    if ineqs:
        return Polytope(dim, verts, ineqs)
    return convex_hull(verts)


def points_to_text(points) -> str:
    rows = sorted(tuple(int(a) for a in p) for p in points)
    return "\n".join(" ".join(str(a) for a in p) for p in rows) + "\n"


def points_from_text(text: str, source: str = "<string>"):
    pts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            pts.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise FormatError(f"{source}:{lineno}: bad lattice point row {raw!r}")
    if pts and any(len(p) != len(pts[0]) for p in pts):
        raise FormatError(f"{source}: inconsistent point dimensions")
    return frozenset(pts)
