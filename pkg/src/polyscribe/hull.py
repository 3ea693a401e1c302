"""Brute-force exact facet enumeration and face lattices.

Facets are found by exhausting affinely independent d-subsets: the
spanned hyperplane is a facet hyperplane iff all points lie in one closed
halfspace.  Lower faces are derived by intersecting facets.  Deliberately
not an incremental hull: desk scale, exact arithmetic, simplest correct
method.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import BudgetExceeded, DegenerateSpan
from .linalg import affine_rank, dot, nullspace, vsub
from .points import PointConfiguration

DEFAULT_MAX_POINTS = 12
DEFAULT_MAX_DIM = 7


@dataclass(frozen=True)
class FaceLattice:
    """Faces of ranks 0..d-1 as vertex-index sets, with cover incidences."""

    dimension: int
    faces_by_rank: tuple[tuple[frozenset[int], ...], ...]
    incidences: tuple[tuple[tuple[int, int], ...], ...]  # rank k: (k-face idx, (k+1)-face idx)

    @property
    def facets(self) -> tuple[frozenset[int], ...]:
        return self.faces_by_rank[-1]

    def faces_of_rank(self, k: int) -> tuple[frozenset[int], ...]:
        return self.faces_by_rank[k]

    def ridges_in_two_facets(self) -> bool:
        if self.dimension < 2:
            return True
        counts = {i: 0 for i in range(len(self.faces_by_rank[self.dimension - 2]))}
        for ri, _ in self.incidences[self.dimension - 2]:
            counts[ri] += 1
        return all(c == 2 for c in counts.values())


def facet_hyperplane(points, subset):
    """Normal/offset of the hyperplane through an affinely independent subset.

    Returns (a, b) with <a, x> = b on the hyperplane, or None if the
    subset spans less than a hyperplane.
    """
    pts = [points[i] for i in subset]
    p0 = pts[0]
    rows = [list(vsub(p, p0)) for p in pts[1:]]
    ns = nullspace(rows)
    if len(ns) != 1:
        return None
    a = tuple(ns[0])
    return a, dot(a, p0)


def enumerate_facets(pc: PointConfiguration,
                     max_points: int = DEFAULT_MAX_POINTS,
                     max_dim: int = DEFAULT_MAX_DIM) -> list[frozenset[int]]:
    """All facets of conv(points) as vertex-index sets."""
    n, d = pc.n_points, pc.dimension
    if n > max_points or d > max_dim:
        raise BudgetExceeded("facet enumeration", f"n={n}, d={d}",
                             f"n<={max_points}, d<={max_dim}")
    if affine_rank(pc.points) != d:
        raise DegenerateSpan(f"points span affine dimension {affine_rank(pc.points)}, not {d}")
    if comb(n, d) > 200_000:
        raise BudgetExceeded("facet enumeration", comb(n, d), 200_000)

    facets: set[frozenset[int]] = set()
    for subset in combinations(range(n), d):
        hp = facet_hyperplane(pc.points, subset)
        if hp is None:
            continue
        a, b = hp
        pos = neg = False
        on = []
        for i, p in enumerate(pc.points):
            s = dot(a, p) - b
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            else:
                on.append(i)
            if pos and neg:
                break
        if pos and neg:
            continue
        facets.add(frozenset(on))
    return sorted(facets, key=sorted)


def build_face_lattice(pc: PointConfiguration,
                       max_points: int = DEFAULT_MAX_POINTS,
                       max_dim: int = DEFAULT_MAX_DIM) -> FaceLattice:
    """Full face lattice (ranks 0..d-1) from the facet list by intersection."""
    d = pc.dimension
    facets = enumerate_facets(pc, max_points, max_dim)
    # Closure of the facet sets under intersection; rank = affine dimension.
    proper: set[frozenset[int]] = set(facets)
    frontier = set(facets)
    while frontier:
        new = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h and h not in proper and h not in new:
                    new.add(h)
        proper |= new
        frontier = new
    by_rank: list[list[frozenset[int]]] = [[] for _ in range(d)]
    for f in proper:
        r = affine_rank([pc.points[i] for i in f])
        if r < d:
            by_rank[r].append(f)
    # Faces are exactly the intersections that are maximal for their vertex
    # set; the closure above can only produce genuine faces (an intersection
    # of faces is a face), so no filtering is needed.
    for r in range(d):
        by_rank[r].sort(key=sorted)
    incidences = []
    for r in range(d - 1):
        pairs = []
        for i, f in enumerate(by_rank[r]):
            for j, g in enumerate(by_rank[r + 1]):
                if f < g:
                    pairs.append((i, j))
        incidences.append(tuple(pairs))
    incidences.append(tuple())
    return FaceLattice(d, tuple(tuple(r) for r in by_rank), tuple(incidences))
