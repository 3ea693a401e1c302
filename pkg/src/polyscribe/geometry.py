"""Exact geometric checks on realizations: sphere incidence, cut/avoid/tangent
tests, (i,j)- and k-scribedness, inscribed cyclic constructions, k-sets.

All minimum-norm and supporting-hyperplane subproblems are solved by
exhaustive active-set enumeration with exact rational linear solves; face
vertex counts are small, correctness is paramount.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import BudgetExceeded, InfeasibleSupport, ParseError
from .hull import FaceLattice, build_face_lattice, enumerate_facets
from .linalg import dot, norm_sq, solve_linear, vsub
from .points import PointConfiguration, SphereRef
from .rationals import format_rational
from .simplex import GE, LE, EQ, LinearProgram, solve_lp

DEFAULT_ACTIVE_SET_BUDGET = 12
DEFAULT_KSET_MAX_POINTS = 12

RELATIVE_INTERIOR = "relative interior"
RELATIVE_BOUNDARY = "relative boundary"


def on_sphere_check(pc: PointConfiguration, s: SphereRef) -> list[bool]:
    """Exact per-vertex test of ||v - center||^2 == radius_squared."""
    return [norm_sq(vsub(p, s.center)) == s.radius_squared for p in pc.points]


# ------------------------------------------------------------- min-norm over face

def _min_norm_candidate(verts, center, support):
    """Stationary point of ||sum l_i v_i - center||^2 over the affine hull of
    the supported vertices; returns (lambda over support, point, value) or None."""
    vs = [verts[i] for i in support]
    k = len(vs)
    # Unknowns: l_1..l_k, mu.  Stationarity: v_i . (V l) - mu = v_i . c,
    # plus sum l = 1.
    rows = []
    rhs = []
    for vi in vs:
        rows.append([dot(vi, vj) for vj in vs] + [Fraction(-1)])
        rhs.append(dot(vi, center))
    rows.append([Fraction(1)] * k + [Fraction(0)])
    rhs.append(Fraction(1))
    sol = solve_linear(rows, rhs)
    if sol is None:
        return None
    lam = sol[:k]
    x = tuple(sum((l * v[j] for l, v in zip(lam, vs)), Fraction(0))
              for j in range(len(center)))
    return lam, x, norm_sq(vsub(x, center))


def min_norm_sq_over_face(pc: PointConfiguration, face, s: SphereRef,
                          budget: int = DEFAULT_ACTIVE_SET_BUDGET):
    """Exact minimum of ||x - center||^2 over conv(face vertices), plus
    whether some minimizer lies in the relative interior of the face."""
    face = sorted(face)
    if len(face) > budget:
        raise BudgetExceeded("active-set enumeration", len(face), budget)
    verts = [pc.points[i] for i in face]
    k = len(verts)
    best = None
    for r in range(1, k + 1):
        for support in combinations(range(k), r):
            cand = _min_norm_candidate(verts, s.center, support)
            if cand is None:
                continue
            lam, x, val = cand
            if any(l < 0 for l in lam):
                continue
            if best is None or val < best[1]:
                best = (x, val)
    assert best is not None
    x_star, value = best
    location = RELATIVE_INTERIOR if _in_relative_interior(verts, x_star) \
        else RELATIVE_BOUNDARY
    return value, location


def _in_relative_interior(verts, x) -> bool:
    """Is x a strictly positive convex combination of the given vertices?
    Decided by an exact margin LP."""
    k = len(verts)
    d = len(x)
    lp = LinearProgram(k + 1, [Fraction(0)] * k + [Fraction(1)])  # max t
    for j in range(d):
        lp.add_row([v[j] for v in verts] + [Fraction(0)], EQ, x[j])
    lp.add_row([Fraction(1)] * k + [Fraction(0)], EQ, Fraction(1))
    for i in range(k):
        row = [Fraction(0)] * (k + 1)
        row[i] = Fraction(1)
        row[k] = Fraction(-1)
        lp.add_row(row, GE, Fraction(0))
    res = solve_lp(lp)
    return res.status == "optimal" and res.objective > 0


def face_cuts(pc: PointConfiguration, face, s: SphereRef,
              budget: int = DEFAULT_ACTIVE_SET_BUDGET) -> bool:
    """Does the face have a point of the closed ball in its relative interior?

    True iff the minimum norm is below the radius, or equal with a
    relative-interior minimizer: the points of the face strictly inside the
    ball form a relatively open set, so when nonempty they meet the relative
    interior.
    """
    value, location = min_norm_sq_over_face(pc, face, s, budget)
    if value < s.radius_squared:
        return True
    return value == s.radius_squared and location == RELATIVE_INTERIOR


def face_avoids(pc: PointConfiguration, face, s: SphereRef,
                budget: int = DEFAULT_ACTIVE_SET_BUDGET) -> bool:
    """Is there a hyperplane supporting the face with the whole polytope and
    the ball in one closed halfspace?

    After recentering to the sphere center, hyperplanes are normalized to
    <a, x> = 1 (hyperplanes through the center can never leave the ball on
    one side, so the normalization loses nothing).  The face rows force
    a != 0.  Avoidance holds iff min ||a||^2 over the constraint system is
    at most 1/radius_squared.
    """
    face = sorted(face)
    others = [i for i in range(pc.n_points) if i not in face]
    if len(others) > 2 * DEFAULT_KSET_MAX_POINTS:
        raise BudgetExceeded("active-set enumeration", len(others), 2 * DEFAULT_KSET_MAX_POINTS)
    eq = [vsub(pc.points[i], s.center) for i in face]
    ineq = [vsub(pc.points[i], s.center) for i in others]
    d = pc.dimension
    best = None
    for r in range(len(ineq) + 1):
        for active in combinations(range(len(ineq)), r):
            rows = eq + [ineq[i] for i in active]
            # KKT: 2a = B^T mu, B a = 1.  Unknowns a (d) and mu (len(rows)).
            m = len(rows)
            sys_rows = []
            rhs = []
            for j in range(d):
                sys_rows.append(
                    [Fraction(2) if jj == j else Fraction(0) for jj in range(d)]
                    + [-rows[i][j] for i in range(m)])
                rhs.append(Fraction(0))
            for row in rows:
                sys_rows.append(list(row) + [Fraction(0)] * m)
                rhs.append(Fraction(1))
            sol = solve_linear(sys_rows, rhs)
            if sol is None:
                continue
            a = sol[:d]
            if any(dot(a, u) > 1 for u in ineq):
                continue
            val = norm_sq(a)
            if best is None or val < best:
                best = val
    if best is None:
        raise InfeasibleSupport(f"face {face} admits no supporting hyperplane "
                                "containing the polytope in a halfspace")
    return best * s.radius_squared <= 1


def face_tangent(pc: PointConfiguration, face, s: SphereRef,
                 budget: int = DEFAULT_ACTIVE_SET_BUDGET) -> bool:
    if not face_avoids(pc, face, s, budget):
        return False
    value, _ = min_norm_sq_over_face(pc, face, s, budget)
    return value == s.radius_squared


# ------------------------------------------------------------------ scribedness

@dataclass
class ScribeReport:
    query: str
    holds: bool
    per_face: list[dict] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps({"query": self.query, "holds": self.holds,
                           "faces": self.per_face}, indent=1) + "\n"


def _face_status(pc, face, s, budget):
    value, location = min_norm_sq_over_face(pc, face, s, budget)
    avoids = face_avoids(pc, face, s, budget)
    cuts = value < s.radius_squared or (value == s.radius_squared
                                        and location == RELATIVE_INTERIOR)
    tangent = avoids and value == s.radius_squared
    return {"face": sorted(face), "cuts": cuts, "avoids": avoids, "tangent": tangent,
            "min_norm_sq": format_rational(value), "minimizer": location}


def check_ij_scribed(pc: PointConfiguration, lattice: FaceLattice, s: SphereRef,
                     i: int, j: int,
                     budget: int = DEFAULT_ACTIVE_SET_BUDGET) -> ScribeReport:
    """All i-faces avoid the ball and all j-faces cut it.  Proper faces only."""
    if not 0 <= i <= j <= lattice.dimension - 1:
        raise ParseError(f"need 0 <= i <= j <= d-1, got i={i}, j={j}")
    report = ScribeReport(f"({i},{j})-scribed", True)
    for f in lattice.faces_of_rank(i):
        st = _face_status(pc, f, s, budget)
        st["rank"] = i
        report.per_face.append(st)
        if not st["avoids"]:
            report.holds = False
    for f in lattice.faces_of_rank(j):
        st = _face_status(pc, f, s, budget)
        st["rank"] = j
        report.per_face.append(st)
        if not st["cuts"]:
            report.holds = False
    return report


def check_k_scribed(pc: PointConfiguration, lattice: FaceLattice, s: SphereRef,
                    k: int, budget: int = DEFAULT_ACTIVE_SET_BUDGET) -> ScribeReport:
    """All k-faces tangent to the sphere (0 = inscribed, d-1 = circumscribed)."""
    if not 0 <= k <= lattice.dimension - 1:
        raise ParseError(f"need 0 <= k <= d-1, got k={k}")
    report = ScribeReport(f"{k}-scribed", True)
    for f in lattice.faces_of_rank(k):
        st = _face_status(pc, f, s, budget)
        st["rank"] = k
        report.per_face.append(st)
        if not st["tangent"]:
            report.holds = False
    return report


def verify_face_lattice(pc: PointConfiguration, claimed_facets,
                        max_points: int = 12, max_dim: int = 7):
    """True iff the claimed facets are exactly the computed ones; on failure
    returns (False, first offending facet)."""
    computed = {frozenset(f) for f in enumerate_facets(pc, max_points, max_dim)}
    claimed = {frozenset(f) for f in claimed_facets}
    if computed == claimed:
        return True, None
    diff = sorted((claimed - computed) | (computed - claimed), key=sorted)
    return False, sorted(diff[0])


# ------------------------------------------------------- cyclic polytope inputs

def generate_cyclic_trig(n: int, d: int, params=None) -> PointConfiguration:
    """Inscribed cyclic polytope points on the trigonometric curve
    (sin t, cos t, sin 2t, cos 2t, ...), via the rational tangent-half-angle
    substitution; every point lands exactly on the sphere of radius^2 = d/2.
    Parameters are sorted, which matches the curve order of the angles they
    represent."""
    if d % 2 != 0 or d < 4:
        raise ParseError("trigonometric construction needs even dimension >= 4")
    if n <= d:
        raise ParseError(f"need n > d, got n={n}, d={d}")
    if params is None:
        params = [Fraction(2 * i - (n - 1), 2) for i in range(n)]
    params = sorted(Fraction(u) for u in params)
    if len(set(params)) != len(params):
        raise ParseError("parameters must be distinct")
    pts = []
    for u in params:
        den = 1 + u * u
        c1 = (1 - u * u) / den
        s1 = 2 * u / den
        coords = []
        ck, sk = c1, s1
        for _ in range(d // 2):
            coords.extend([sk, ck])
            sk, ck = sk * c1 + ck * s1, ck * c1 - sk * s1
        pts.append(tuple(coords))
    r2 = Fraction(d, 2)
    sphere = SphereRef((Fraction(0),) * d, r2)
    return PointConfiguration(d, tuple(pts), sphere)


def generate_cyclic_moment(n: int, d: int, params=None) -> PointConfiguration:
    """Cyclic polytope points on the monomial moment curve (t, t^2, ..., t^d);
    not inscribed, used for combinatorial oracles."""
    if d < 2:
        raise ParseError("moment curve needs d >= 2")
    if params is None:
        params = list(range(n))
    params = sorted(Fraction(t) for t in params)
    if len(set(params)) != len(params):
        raise ParseError("parameters must be distinct")
    if len(params) != n:
        raise ParseError(f"need {n} parameters, got {len(params)}")
    pts = tuple(tuple(t ** k for k in range(1, d + 1)) for t in params)
    return PointConfiguration(d, pts)


# -------------------------------------------------------------------- k-sets

def _separation_margin(pc: PointConfiguration, subset) -> Fraction:
    """Optimal margin of strict separation of the subset from the rest, with
    the normal box-normalized; positive iff strictly separable."""
    d = pc.dimension
    inside = sorted(subset)
    outside = [i for i in range(pc.n_points) if i not in subset]
    bound = 1 + max(sum(abs(c) for c in p) for p in pc.points)
    # Vars: a+ (d), a- (d), b+, b-, t; all >= 0; maximize t.
    nv = 2 * d + 3
    obj = [Fraction(0)] * nv
    obj[-1] = Fraction(1)
    lp = LinearProgram(nv, obj)
    for i in inside:
        p = pc.points[i]
        row = list(p) + [-c for c in p] + [Fraction(-1), Fraction(1), Fraction(-1)]
        lp.add_row(row, GE, Fraction(0))
    for i in outside:
        p = pc.points[i]
        row = [-c for c in p] + list(p) + [Fraction(1), Fraction(-1), Fraction(-1)]
        lp.add_row(row, GE, Fraction(0))
    for k in range(2 * d):
        row = [Fraction(0)] * nv
        row[k] = Fraction(1)
        lp.add_row(row, LE, Fraction(1))
    for k in (2 * d, 2 * d + 1):
        row = [Fraction(0)] * nv
        row[k] = Fraction(1)
        lp.add_row(row, LE, Fraction(bound))
    res = solve_lp(lp)
    assert res.status == "optimal"
    return res.objective


def k_sets(pc: PointConfiguration, k: int,
           max_points: int = DEFAULT_KSET_MAX_POINTS) -> list[frozenset[int]]:
    """All k-subsets strictly separable from the rest by a hyperplane.
    By convention k = n returns the full set (vacuous separation)."""
    n = pc.n_points
    if n > max_points:
        raise BudgetExceeded("k-set enumeration", n, max_points)
    if k == n:
        return [frozenset(range(n))]
    out = []
    for subset in combinations(range(n), k):
        if _separation_margin(pc, subset) > 0:
            out.append(frozenset(subset))
    return out


def is_face(pc: PointConfiguration, subset) -> bool:
    """Supporting-hyperplane test: the subset is (contained in) a proper face
    iff some hyperplane touches exactly on one side with positive margin."""
    d = pc.dimension
    inside = sorted(subset)
    outside = [i for i in range(pc.n_points) if i not in subset]
    bound = 1 + max(sum(abs(c) for c in p) for p in pc.points)
    nv = 2 * d + 3
    obj = [Fraction(0)] * nv
    obj[-1] = Fraction(1)
    lp = LinearProgram(nv, obj)
    for i in inside:
        p = pc.points[i]
        row = list(p) + [-c for c in p] + [Fraction(-1), Fraction(1), Fraction(0)]
        lp.add_row(row, EQ, Fraction(0))
    for i in outside:
        p = pc.points[i]
        row = [-c for c in p] + list(p) + [Fraction(1), Fraction(-1), Fraction(-1)]
        lp.add_row(row, GE, Fraction(0))
    for k_ in range(2 * d):
        row = [Fraction(0)] * nv
        row[k_] = Fraction(1)
        lp.add_row(row, LE, Fraction(1))
    for k_ in (2 * d, 2 * d + 1):
        row = [Fraction(0)] * nv
        row[k_] = Fraction(1)
        lp.add_row(row, LE, Fraction(bound))
    res = solve_lp(lp)
    return res.status == "optimal" and res.objective > 0


def build_lattice(pc: PointConfiguration, max_points: int = 12,
                  max_dim: int = 7) -> FaceLattice:
    return build_face_lattice(pc, max_points, max_dim)
