"""Discrete minimum-boundary search and convergence experiments.

Finite sets are compared up to translation: the canonical form of a set
translates its lexicographically smallest point to the origin.  Exhaustive
search enumerates canonical forms directly (origin plus points that are
lexicographically positive), which quotients translation exactly.  All
counting is exact; enumeration sizes are guarded by a budget (the
ISOZONO_BUDGET environment variable, default 10 million) and oversized
instances raise BudgetExceededError rather than truncating silently.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import BudgetExceededError
from .geometry import convex_hull
from .intmat import dot, vadd, vneg
from .plgraph import PLGraph, edge_boundary_direct
from .zonotope import Zonotope, zonotope_of_graph

DEFAULT_BUDGET = 10_000_000


def default_budget() -> int:
    """Enumeration cap from ISOZONO_BUDGET (default 10^7)."""
    raw = os.environ.get("ISOZONO_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"ISOZONO_BUDGET must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"ISOZONO_BUDGET must be positive, got {value}")
    return value


def canonical_set(points):
    """Translate so the lexicographically smallest point is the origin; sort."""
    pts = sorted(tuple(int(c) for c in p) for p in points)
    base = pts[0]
    return tuple(tuple(a - b for a, b in zip(p, base)) for p in pts)


@dataclass(frozen=True)
class SearchResult:
    """Minimum edge boundary over m-point sets, with canonical witnesses."""

    cardinality: int
    min_boundary: int
    witnesses: tuple
    exhaustive: bool
    witnesses_truncated: bool = False
    evaluated: int = 0


def _signed_permutation_closure(hints, dim, cap=4096):
    """Close a list of signed permutations under composition.

    Each element is a tuple of (source_index, sign) pairs: the image point has
    y[i] = sign * x[source_index].
    """
    identity = tuple((i, 1) for i in range(dim))
    group = {identity}
    frontier = [identity]
    gens = [tuple((int(j), int(s)) for j, s in h) for h in hints]
    for g in gens:
        if len(g) != dim or sorted(j for j, _ in g) != list(range(dim)):
            raise ValueError(f"symmetry hint {g} is not a permutation of 0..{dim-1}")
        if any(s not in (-1, 1) for _, s in g):
            raise ValueError(f"symmetry hint {g} has signs outside {{-1, 1}}")
    while frontier:
        g = frontier.pop()
        for h in gens:
            comp = tuple((g[j][0], g[j][1] * s) for j, s in h)
            if comp not in group:
                if len(group) >= cap:
                    raise ValueError("symmetry group closure exceeds cap")
                group.add(comp)
                frontier.append(comp)
    return group


def _apply_signed_permutation(g, p):
    return tuple(s * p[j] for j, s in g)


def _orbit_canonical(points, group):
    best = None
    for g in group:
        cand = canonical_set(_apply_signed_permutation(g, p) for p in points)
        if best is None or cand < best:
            best = cand
    return best


def _candidate_masks(graph: PLGraph, box_radius: int):
    """Canonical-form candidate points and their in-box adjacency bitmasks."""
    n = graph.dim
    r = box_radius
    pool = []
    for p in product(range(-r, r + 1), repeat=n):
        for c in p:
            if c > 0:
                pool.append(p)
                break
            if c < 0:
                break
    pool.sort()
    candidates = [tuple([0] * n)] + pool
    index = {p: i for i, p in enumerate(candidates)}
    masks = []
    for p in candidates:
        m = 0
        for v in graph.generators:
            for q in (vadd(p, v), vadd(p, vneg(v))):
                j = index.get(q)
                if j is not None:
                    m |= 1 << j
        masks.append(m)
    return candidates, masks


def _connected(mask, masks):
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        grow = 0
        m = frontier
        while m:
            lsb = m & -m
            grow |= masks[lsb.bit_length() - 1]
            m ^= lsb
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen == mask


def exhaustive_min_boundary(graph: PLGraph, m: int, box_radius: int, *,
                            witness_cap: int = 100, budget: int | None = None,
                            connected_only: bool = False,
                            symmetry_hints=None) -> SearchResult:
    """Provably minimal edge boundary over canonical m-sets in a box.

    Enumerates every m-point set, up to translation, whose canonical form
    lies in [-box_radius, box_radius]^n.  Minimality is relative to that box.
    `connected_only` restricts the search space to connected sets (the
    unrestricted default is the safe one: optimal sets are not known to be
    connected in every graph).  `symmetry_hints` (signed permutations fixing
    the graph) deduplicate witnesses modulo the hinted group.
    """
    if m < 1:
        raise ValueError(f"cardinality must be >= 1, got {m}")
    if box_radius < 0:
        raise ValueError(f"box radius must be >= 0, got {box_radius}")
    budget = default_budget() if budget is None else budget
    candidates, masks = _candidate_masks(graph, box_radius)
    npool = len(candidates) - 1
    if m - 1 > npool:
        raise ValueError(
            f"no canonical {m}-set fits in a radius-{box_radius} box "
            f"({npool} candidate points)")
    count = math.comb(npool, m - 1)
    if count > budget:
        raise BudgetExceededError(
            f"exhaustive search needs {count} subsets, budget is {budget} "
            "(raise ISOZONO_BUDGET or shrink the instance)")
    degree = 2 * len(graph.generators)
    const = degree * m
    best = None
    witnesses = []
    truncated = False
    mask0 = masks[0]
    for combo in combinations(range(1, npool + 1), m - 1):
        sel = 1
        for i in combo:
            sel |= 1 << i
        if connected_only and not _connected(sel, masks):
            continue
        inner = (mask0 & sel).bit_count()
        for i in combo:
            inner += (masks[i] & sel).bit_count()
        b = const - inner
        if best is None or b < best:
            best = b
            witnesses = [combo]
            truncated = False
        elif b == best:
            if len(witnesses) < witness_cap:
                witnesses.append(combo)
            else:
                truncated = True
    if best is None:
        raise ValueError("search space is empty (connected_only pruned everything)")
    sets = []
    for combo in witnesses:
        pts = [candidates[0]] + [candidates[i] for i in combo]
        sets.append(canonical_set(pts))
    if symmetry_hints:
        group = _signed_permutation_closure(symmetry_hints, graph.dim)
        seen = set()
        deduped = []
        for s in sets:
            key = _orbit_canonical(s, group)
            if key not in seen:
                seen.add(key)
                deduped.append(s)
        sets = deduped
    sets.sort()
    return SearchResult(m, best, tuple(sets), True,
                        witnesses_truncated=truncated, evaluated=count)


def _gauge(normals, p, center=None):
    """Minkowski gauge of p in the zonotope with the given (normal, offset) pairs."""
    q = p if center is None else tuple(Fraction(a) - c for a, c in zip(p, center))
    return max(Fraction(abs(dot(u, q)), h) for u, h in normals)


def _normal_lines(Z: Zonotope):
    seen = {}
    for u, h in Z.polytope().facets:
        key = max(u, vneg(u))
        seen[key] = h
    return sorted(seen.items())


def _gauge_ball_start(graph: PLGraph, m: int):
    """Deterministic start: the m lattice points of smallest zonotope gauge."""
    Z = zonotope_of_graph(graph)
    normals = _normal_lines(Z)
    n = graph.dim
    r = 1
    while (2 * r + 1) ** n < 4 * m:
        r += 1
    pts = sorted(product(range(-r, r + 1), repeat=n),
                 key=lambda p: (_gauge(normals, p), p))
    return pts[:m]


def local_search_min_boundary(graph: PLGraph, m: int, iterations: int = 20000,
                              seed: int = 0) -> SearchResult:
    """Best-found edge boundary via swap moves with annealing acceptance.

    One move removes a random point and adds a random neighbor of the
    remaining set.  Acceptance is simulated-annealing style with a geometric
    temperature schedule; the reported value is the best state ever visited,
    so the result never degrades with more iterations.  Deterministic for a
    fixed seed.
    """
    if m < 1:
        raise ValueError(f"cardinality must be >= 1, got {m}")
    rng = random.Random(seed)
    current = set(map(tuple, _gauge_ball_start(graph, m)))
    gens = graph.generators
    degree = 2 * len(gens)

    def boundary(S):
        inner = 0
        for p in S:
            for v in gens:
                if vadd(p, v) in S:
                    inner += 1
                if vadd(p, vneg(v)) in S:
                    inner += 1
        return degree * len(S) - inner

    cur_b = boundary(current)
    best_b = cur_b
    best_set = frozenset(current)
    temperature = float(degree)
    cooling = 0.999
    if m > 1:
        for _ in range(iterations):
            out = rng.choice(sorted(current))
            anchor = rng.choice(sorted(current - {out}))
            v = rng.choice(gens)
            cand = vadd(anchor, v) if rng.random() < 0.5 else vadd(anchor, vneg(v))
            if cand in current and cand != out:
                temperature *= cooling
                continue
            trial = set(current)
            trial.discard(out)
            trial.add(cand)
            if len(trial) != m:
                temperature *= cooling
                continue
            tb = boundary(trial)
            delta = tb - cur_b
            if delta <= 0 or rng.random() < math.exp(-delta / max(temperature, 1e-9)):
                current, cur_b = trial, tb
                if cur_b < best_b:
                    best_b = cur_b
                    best_set = frozenset(current)
            temperature *= cooling
    witness = canonical_set(best_set)
    return SearchResult(m, best_b, (witness,), False, evaluated=iterations)


@dataclass(frozen=True)
class ZonotopePointSet:
    """Lattice points of a scaled (optionally shifted) zonotope."""

    points: tuple
    cardinality: int
    edge_boundary: int
    alpha: Fraction
    center: tuple


def _collect_points(Z: Zonotope, normals, alpha: Fraction, center):
    n = Z.dim
    ranges = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        h = alpha * Z.support(e)
        c = Fraction(center[i])
        ranges.append(range(math.ceil(c - h), math.floor(c + h) + 1))
    pts = []
    for p in product(*ranges):
        q = tuple(Fraction(a) - Fraction(c) for a, c in zip(p, center))
        if all(abs(dot(u, q)) <= alpha * h for u, h in normals):
            pts.append(p)
    return tuple(sorted(pts))


def zonotope_point_set(graph: PLGraph, alpha, center=None) -> ZonotopePointSet:
    """Z^n intersected with alpha * Z(G) + center, with its edge boundary."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    n = graph.dim
    center = tuple([Fraction(0)] * n) if center is None else tuple(map(Fraction, center))
    Z = zonotope_of_graph(graph)
    normals = _normal_lines(Z)
    pts = _collect_points(Z, normals, alpha, center)
    return ZonotopePointSet(pts, len(pts), edge_boundary_direct(graph, pts),
                            alpha, center)


@dataclass(frozen=True)
class ConvergenceRow:
    """One scale of the volume/point-count and boundary-ratio limits."""

    alpha: Fraction
    points: int
    volume: object
    discrete_boundary: int
    continuous_boundary: object
    vol_ratio: Fraction
    boundary_ratio: Fraction


def convergence_experiment(graph: PLGraph, alphas, *, budget: int | None = None):
    """Exact convergence table for X = Z(G) at increasing scales alpha."""
    alphas = [Fraction(a) for a in alphas]
    if not alphas:
        raise ValueError("at least one alpha is required")
    if any(a <= 0 for a in alphas):
        raise ValueError("alphas must be positive")
    if any(b <= a for a, b in zip(alphas, alphas[1:])):
        raise ValueError("alphas must be strictly increasing")
    budget = default_budget() if budget is None else budget
    Z = zonotope_of_graph(graph)
    n = graph.dim
    vol_z = Z.volume()
    b_z = n * vol_z
    rows = []
    for a in alphas:
        grid = 1
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            grid *= 2 * math.floor(a * Z.support(e)) + 1
        if grid > budget:
            raise BudgetExceededError(
                f"alpha = {a} scans {grid} grid points, budget is {budget}")
        ps = zonotope_point_set(graph, a)
        volume = a ** n * vol_z
        cont = a ** (n - 1) * b_z
        if volume.denominator == 1:
            volume = int(volume)
        if cont.denominator == 1:
            cont = int(cont)
        rows.append(ConvergenceRow(
            alpha=a,
            points=ps.cardinality,
            volume=volume,
            discrete_boundary=ps.edge_boundary,
            continuous_boundary=cont,
            vol_ratio=Fraction(volume, ps.cardinality),
            boundary_ratio=Fraction(cont, ps.edge_boundary),
        ))
    return tuple(rows)


def hull_direction_count(points) -> int:
    """Number of supporting facet directions of the convex hull.

    Counted within the hull's affine span: 0 for a single point, 2 for a
    segment, the edge count for a polygon, and so on.
    """
    hull = convex_hull(list(points))
    if hull.is_full_dimensional():
        return len(hull.facets)
    if hull.chart is None or not hull.chart.basis:
        return 0
    return hull_direction_count(hull.chart.body.vertices)


@dataclass(frozen=True)
class FamilySet:
    """A member of the shifted-zonotope lattice family Z^n cap (alpha Z + c)."""

    alpha: Fraction
    center: tuple
    cardinality: int
    points: tuple  # canonical form
    edge_boundary: int


@dataclass(frozen=True)
class LimitingShapeRow:
    """Per-cardinality comparison of exhaustive optima with the zonotope family."""

    cardinality: int
    exhaustive: bool
    min_boundary: int | None
    witness_count: int
    witness_hull_directions: tuple
    family_sets: tuple  # FamilySet entries with this cardinality
    family_match: bool | None  # None when either side is unavailable
    nearest_cardinalities: tuple  # (below, above) FamilySet summaries when no match


def _family_catalog(graph: PLGraph, m_max: int):
    """All realizable family cardinalities <= m_max, by half-integer center."""
    Z = zonotope_of_graph(graph)
    normals = _normal_lines(Z)
    n = graph.dim
    sets = {}
    for center in product((Fraction(0), Fraction(1, 2)), repeat=n):
        r = 2
        while True:
            pts = list(product(range(-r, r + 1), repeat=n))
            gauges = sorted((_gauge(normals, p, center), p) for p in pts)
            safe = min((r - Fraction(1, 2)) / Z.support(
                tuple(1 if j == i else 0 for j in range(n))) for i in range(n))
            groups = []
            cum = 0
            i = 0
            while i < len(gauges):
                g = gauges[i][0]
                j = i
                while j < len(gauges) and gauges[j][0] == g:
                    j += 1
                if g > safe:
                    break
                cum = j
                groups.append((g, cum))
                i = j
            if groups and groups[-1][1] > m_max:
                prefix = [q for _, q in gauges]
                for g, cum in groups:
                    if cum > m_max:
                        break
                    key = cum
                    member = tuple(sorted(prefix[:cum]))
                    sets.setdefault(key, []).append((g, center, member))
                break
            r *= 2
    catalog = {}
    for m, entries in sets.items():
        uniq = {}
        for g, center, member in sorted(entries):
            canon = canonical_set(member)
            if canon not in uniq:
                uniq[canon] = FamilySet(g, center, m, canon,
                                        edge_boundary_direct(graph, member))
        catalog[m] = tuple(uniq.values())
    return catalog


def limiting_shape_report(graph: PLGraph, m_max: int, *, box_radius: int | None = None,
                          budget: int | None = None, witness_cap: int = 100):
    """Compare exhaustive optima with the shifted-zonotope lattice family.

    For each m <= m_max: run exhaustive search (when it fits the budget) and
    collect the family sets Z^n cap (alpha Z + c) of cardinality m over
    half-integer centers c in {0, 1/2}^n, reporting whether some optimal
    witness equals a family set up to translation, and each witness's number
    of supporting hull directions.  When no family set has cardinality m, the
    nearest realizable cardinalities are reported instead.

    The search window is at least `box_radius` but grows per row to contain
    that row's family sets, so an `exhaustive` row's minimum is always <= the
    family boundaries listed beside it.  Rows whose (possibly enlarged) window
    exceeds the budget report family data only, with `exhaustive=False`.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    budget = default_budget() if budget is None else budget
    n = graph.dim
    if box_radius is None:
        box_radius = math.ceil(m_max ** (1.0 / n)) + 1
    catalog = _family_catalog(graph, m_max)
    all_cards = sorted(catalog)
    rows = []
    for m in range(1, m_max + 1):
        family = catalog.get(m, ())
        # Enlarge the window to contain every same-cardinality family set:
        # otherwise a small window could report a "minimum" that one of the
        # family sets printed next to it visibly beats.
        radius = box_radius
        for f in family:
            needed = max((abs(c) for p in f.points for c in p), default=0)
            radius = max(radius, needed)
        result = None
        npool = ((2 * radius + 1) ** n - 1) // 2
        if m - 1 <= npool and math.comb(npool, m - 1) <= budget:
            result = exhaustive_min_boundary(graph, m, radius,
                                             witness_cap=witness_cap, budget=budget)
        if result is not None:
            directions = tuple(hull_direction_count(w) for w in result.witnesses)
            match = None
            if family:
                fam_canons = {f.points for f in family}
                match = any(w in fam_canons for w in result.witnesses)
        else:
            directions = ()
            match = None
        nearest = ()
        if not family:
            below = max((c for c in all_cards if c < m), default=None)
            above = min((c for c in all_cards if c > m), default=None)
            nearest = tuple(catalog[c][0] for c in (below, above) if c is not None)
        rows.append(LimitingShapeRow(
            cardinality=m,
            exhaustive=result is not None,
            min_boundary=None if result is None else result.min_boundary,
            witness_count=0 if result is None else len(result.witnesses),
            witness_hull_directions=directions,
            family_sets=family,
            family_match=match,
            nearest_cardinalities=nearest,
        ))
    return tuple(rows)
