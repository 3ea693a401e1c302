"""Spherical cap systems: visibility caps, intersection graphs, ply depth,
and the random-hyperplane separator experiment.

Caps come in two exact representations sharing one membership semantics
{x on the unit sphere : <axis, x> >= cos_radius * ||axis||}:

- "plain": a rational axis plus a rational cosine of the angular radius;
- "halfspace": a rational axis w and rational offset b, the cap
  {x : <w, x> >= b}, whose cosine b/||w|| need not be rational.

Every decision below only needs the cosine's sign and square, both rational
in either mode, so all comparisons reduce to exact sign tests on
expressions of the form r + s*sqrt(rho).
"""

from __future__ import annotations

import json
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd

import networkx as nx
import numpy as np

from .errors import (DegenerateConfiguration, MonteCarloOnly, ParseError,
                     PointInsideBall)
from .linalg import dot, norm_sq, solve_linear
from .points import PointConfiguration
from .rationals import format_rational, format_vector, parse_rational, parse_vector


# ----------------------------------------------------------- exact sqrt signs

def _plus_sqrt_nonneg(r: Fraction, s: Fraction, rho: Fraction) -> bool:
    """Exact test of r + s*sqrt(rho) >= 0 for rationals with rho >= 0."""
    assert rho >= 0
    if s == 0 or rho == 0:
        return r >= 0
    if r >= 0 and s > 0:
        return True
    if r < 0 and s < 0:
        return False
    if s < 0:  # r >= 0: compare r >= |s| sqrt(rho)
        return r * r >= s * s * rho
    return s * s * rho >= r * r  # s > 0 > r


def _plus_sqrt_sign(r: Fraction, s: Fraction, rho: Fraction) -> int:
    ge = _plus_sqrt_nonneg(r, s, rho)
    le = _plus_sqrt_nonneg(-r, -s, rho)
    if ge and le:
        return 0
    return 1 if ge else -1


# ------------------------------------------------------------------- cap type

@dataclass(frozen=True)
class SphericalCap:
    """axis + cos_radius (plain) or axis + offset (halfspace); see module doc."""

    axis: tuple[Fraction, ...]
    cos_radius: Fraction | None = None
    offset: Fraction | None = None

    def __post_init__(self):
        if (self.cos_radius is None) == (self.offset is None):
            raise ParseError("cap needs exactly one of cos_radius, offset")
        n2 = self.norm_sq
        if n2 == 0:
            raise ParseError("cap axis must be nonzero")
        # Proper cap: cosine in (-1, 1].
        if self.cos_radius is not None:
            if not -1 < self.cos_radius <= 1:
                raise ParseError("cos_radius must lie in (-1, 1]")
        else:
            b = self.offset
            if b > 0 and b * b > n2:
                raise ParseError("cap is empty: offset exceeds axis norm")
            if b < 0 and b * b >= n2:
                raise ParseError("cap is the whole sphere")

    @property
    def norm_sq(self) -> Fraction:
        return norm_sq(self.axis)

    @property
    def cos_sign(self) -> int:
        c = self.cos_radius if self.cos_radius is not None else self.offset
        return (c > 0) - (c < 0)

    @property
    def cos_sq(self) -> Fraction:
        if self.cos_radius is not None:
            return self.cos_radius * self.cos_radius
        return self.offset * self.offset / self.norm_sq

    def boundary_plane(self):
        """(w, b) with the boundary circle on <w, x> = b, both rational, or
        None when the plane offset is irrational in this representation."""
        if self.offset is not None:
            return self.axis, self.offset
        if self.cos_radius == 0:
            return self.axis, Fraction(0)
        n2 = self.norm_sq
        root = _rational_sqrt(n2)
        if root is None:
            return None
        return self.axis, self.cos_radius * root

    def contains(self, x) -> bool:
        """Closed membership for a rational point x (any positive norm)."""
        lhs = dot(self.axis, x)
        if self.offset is not None:
            return _plus_sqrt_nonneg(lhs, -self.offset, norm_sq(x))
        return _plus_sqrt_nonneg(lhs, -self.cos_radius, self.norm_sq * norm_sq(x))


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


@dataclass(frozen=True)
class CapSystem:
    dimension: int
    caps: tuple[SphericalCap, ...]
    provenance: dict | None = None
    normalized: str | None = None

    def __post_init__(self):
        for c in self.caps:
            if len(c.axis) != self.dimension:
                raise ParseError("cap axis dimension mismatch")

    @property
    def n_caps(self) -> int:
        return len(self.caps)


def visibility_cap(v) -> SphericalCap:
    """Cap of unit-sphere points visible from the exterior point v:
    {x : <v, x> >= 1}; cosine of the angular radius is 1/||v||."""
    v = tuple(Fraction(c) for c in v)
    if norm_sq(v) <= 1:
        raise PointInsideBall(f"point with squared norm {norm_sq(v)} is not "
                              "strictly outside the unit ball")
    return SphericalCap(axis=v, offset=Fraction(1))


def visibility_system(pc: PointConfiguration) -> CapSystem:
    caps = tuple(visibility_cap(p) for p in pc.points)
    return CapSystem(pc.dimension, caps,
                     provenance={"source": "visibility",
                                 "vertices": list(range(pc.n_points))})


# -------------------------------------------------------- intersection graph

def _caps_overlap(ci: SphericalCap, cj: SphericalCap) -> bool:
    """Angular distance between axes <= sum of angular radii, exactly.

    With cosines c_i (sign s_i, square q_i) and p = <a_i, a_j>: if
    c_i + c_j <= 0 the radii sum to at least pi and the caps always meet;
    otherwise the condition cos(dist) >= c_i c_j - s_i s_j becomes, after
    scaling by ||a_i|| ||a_j||,

        p + sqrt((1-q_i)(1-q_j) N_i N_j) - sign sqrt(q_i q_j N_i N_j) >= 0.
    """
    ni, nj = ci.norm_sq, cj.norm_sq
    si, sj = ci.cos_sign, cj.cos_sign
    qi, qj = ci.cos_sq, cj.cos_sq
    # c_i + c_j <= 0, i.e. -(s_i sqrt(q_i) + s_j sqrt(q_j)) >= 0.
    if si <= 0 and sj <= 0:
        return True
    if not (si >= 0 and sj >= 0):
        # mixed signs: the nonpositive term wins iff its square is >=
        neg_q, pos_q = (qi, qj) if si < 0 else (qj, qi)
        if neg_q >= pos_q:
            return True
    p = dot(ci.axis, cj.axis)
    alpha = (1 - qi) * (1 - qj) * ni * nj
    beta = qi * qj * ni * nj
    sign = si * sj
    if sign <= 0:
        if p >= 0:
            return True
        gap = p * p - alpha - sign * sign * beta
        if gap <= 0:
            return True
        return 4 * sign * sign * alpha * beta >= gap * gap
    if p >= 0:
        return _plus_sqrt_nonneg(p * p + alpha - beta, 2 * p, alpha)
    return _plus_sqrt_nonneg(alpha - beta - p * p, 2 * p, beta)


def cap_intersection_graph(cs: CapSystem) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(cs.n_caps))
    for i in range(cs.n_caps):
        for j in range(i + 1, cs.n_caps):
            if _caps_overlap(cs.caps[i], cs.caps[j]):
                g.add_edge(i, j)
    return g


# ------------------------------------------------------------------ ply depth

def _canonical_ray(v):
    """Primitive integer direction of a rational vector, preserving sign."""
    denom = math.lcm(*(c.denominator for c in v))
    ints = [int(c * denom) for c in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def _identity_key(cap: SphericalCap):
    return _canonical_ray(cap.axis), cap.cos_sign, cap.cos_sq


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _boundary_planes(cs: CapSystem):
    planes = []
    for cap in cs.caps:
        hp = cap.boundary_plane()
        if hp is None:
            raise DegenerateConfiguration(
                "exact ply needs rational boundary planes; cap cosine times "
                "axis norm is irrational")
        planes.append(hp)
    return planes


def ply_depth(cs: CapSystem):
    """Exact maximum number of open caps sharing a point (d = 3).

    Candidates: cap axes and pairwise boundary-circle intersections; in
    general position the closed count at some candidate attains the open
    maximum.  Tangent, coincident, or concurrent boundary circles raise
    DegenerateConfiguration; dimensions other than 3 raise MonteCarloOnly.
    Returns (depth, witness) with an exact witness point description.
    """
    if cs.dimension != 3:
        raise MonteCarloOnly(f"exact ply depth needs dimension 3, got {cs.dimension}")
    if cs.n_caps == 0:
        return 0, None
    planes = _boundary_planes(cs)
    # Collapse identical caps; they contribute multiplicity, not geometry.
    groups: dict = {}
    for i, cap in enumerate(cs.caps):
        groups.setdefault(_identity_key(cap), []).append(i)
    reps = [members[0] for members in groups.values()]
    mult = {members[0]: len(members) for members in groups.values()}

    best = None
    # sign of <w_k, x> - b_k at x = r + s*sqrt(rho)*n, all rational data
    def depth_at(terms):  # terms[k] = (r_k, s_k, rho)
        total = 0
        on_boundary = 0
        for k, (r, s, rho) in terms.items():
            sg = _plus_sqrt_sign(r, s, rho)
            if sg >= 0:
                total += mult[k]
            if sg == 0:
                on_boundary += 1
        return total, on_boundary

    # Axis candidates: x = a/||a||; <w_k, x> >= b_k scales to
    # <w_k, a> - b_k sqrt(||a||^2) >= 0.
    for i in reps:
        a = cs.caps[i].axis
        na = norm_sq(a)
        terms = {k: (dot(planes[k][0], a), -planes[k][1], na) for k in reps}
        total, nb = depth_at(terms)
        if nb > 0:
            raise DegenerateConfiguration("a boundary circle passes through a cap axis")
        if best is None or total > best[0]:
            best = (total, {"kind": "axis", "cap": i,
                            "axis": format_vector(a),
                            "approx": [float(c) / math.sqrt(float(na)) for c in a]})

    # Pairwise boundary intersections: x = x0 +/- sqrt(rho) * n.
    for ii in range(len(reps)):
        for jj in range(ii + 1, len(reps)):
            i, j = reps[ii], reps[jj]
            wi, bi = planes[i]
            wj, bj = planes[j]
            ni, nj, p = norm_sq(wi), norm_sq(wj), dot(wi, wj)
            det = ni * nj - p * p
            if det == 0:  # parallel boundary planes
                lam = p / ni
                if bj == lam * bi:
                    raise DegenerateConfiguration(
                        "distinct caps share a boundary circle")
                continue
            sol = solve_linear([[ni, p], [p, nj]], [bi, bj])
            alpha, beta = sol
            x0 = tuple(alpha * a + beta * b for a, b in zip(wi, wj))
            n = _cross(wi, wj)
            rho = (1 - norm_sq(x0)) / norm_sq(n)
            if rho < 0:
                continue
            if rho == 0:
                raise DegenerateConfiguration("tangent boundary circles")
            for sgn in (1, -1):
                terms = {k: (dot(planes[k][0], x0) - planes[k][1],
                             sgn * dot(planes[k][0], n), rho) for k in reps}
                total, nb = depth_at(terms)
                if nb > 2:
                    raise DegenerateConfiguration(
                        "three boundary circles meet at a point")
                if best is None or total > best[0]:
                    rr = math.sqrt(float(rho))
                    best = (total, {
                        "kind": "circle-intersection", "caps": [i, j],
                        "base": format_vector(x0),
                        "direction": format_vector(n),
                        "scale_sq": format_rational(rho), "sign": sgn,
                        "approx": [float(r) + sgn * rr * float(d)
                                   for r, d in zip(x0, n)]})
    return best


def ply_depth_sampling(cs: CapSystem, samples: int = 20000, seed: int = 0):
    """Monte Carlo lower bound on the ply depth, any dimension; clearly a
    lower bound, never an exact answer.  Membership per sample is exact."""
    rng = np.random.Generator(np.random.Philox(key=(seed << 64) | 0xCA95))
    best = (0, None)
    for _ in range(samples):
        z = rng.standard_normal(cs.dimension)
        x = tuple(Fraction(float(c)) for c in z)
        if norm_sq(x) == 0:
            continue
        depth = sum(1 for cap in cs.caps if cap.contains(x))
        if depth > best[0]:
            best = (depth, {"kind": "sample", "mode": "monte-carlo lower bound",
                            "direction": format_vector(x)})
    return best


# ------------------------------------------------------- separator experiment

@dataclass
class SeparatorReport:
    trials: int
    seed: int
    hit_counts: list[int]
    best_trial: int
    best_hits: list[int]
    best_components: list[int]
    min_hits: int
    median_hits: Fraction
    mean_hits: Fraction

    def to_json(self) -> str:
        return json.dumps({
            "trials": self.trials, "seed": self.seed,
            "hit_counts": self.hit_counts,
            "best_trial": self.best_trial, "best_hits": self.best_hits,
            "best_components": self.best_components,
            "min_hits": self.min_hits,
            "median_hits": format_rational(self.median_hits),
            "mean_hits": format_rational(self.mean_hits),
        }, indent=1) + "\n"


def _trial_normal(seed: int, trial: int, d: int):
    rng = np.random.Generator(np.random.Philox(key=(seed << 64) | trial))
    while True:
        z = rng.standard_normal(d)
        u = tuple(Fraction(float(c)) for c in z)
        if norm_sq(u) != 0:
            return u


def hyperplane_hits(cs: CapSystem, u) -> list[int]:
    """Caps whose closure meets the hyperplane with normal u:
    |<u, axis>| <= sin(radius) ||u|| ||axis||, in squared form."""
    un = norm_sq(u)
    out = []
    for i, cap in enumerate(cs.caps):
        t = dot(u, cap.axis)
        if t * t <= (1 - cap.cos_sq) * un * cap.norm_sq:
            out.append(i)
    return out


def random_hyperplane_separator(cs: CapSystem, trials: int, seed: int,
                                parallel: bool = False) -> SeparatorReport:
    """Sample random hyperplanes through the origin; hit decisions are exact
    for each sampled (dyadic-rationalized) normal.  Each trial's generator is
    keyed by (seed, trial), so parallel and serial runs agree."""
    assert trials >= 1
    g = cap_intersection_graph(cs)

    def run(trial: int):
        u = _trial_normal(seed, trial, cs.dimension)
        return hyperplane_hits(cs, u)

    if parallel:
        with ThreadPoolExecutor() as pool:
            all_hits = list(pool.map(run, range(trials)))
    else:
        all_hits = [run(t) for t in range(trials)]
    counts = [len(h) for h in all_hits]
    best = min(range(trials), key=lambda t: (counts[t], t))
    h = g.copy()
    h.remove_nodes_from(all_hits[best])
    comps = sorted((len(c) for c in nx.connected_components(h)), reverse=True)
    return SeparatorReport(
        trials=trials, seed=seed, hit_counts=counts,
        best_trial=best, best_hits=all_hits[best], best_components=comps,
        min_hits=min(counts),
        median_hits=Fraction(statistics.median(counts)),
        mean_hits=Fraction(sum(counts), trials))


# ------------------------------------------------------------------ generators

def near_uniform_system(n: int, seed: int = 0) -> CapSystem:
    """n jittered Fibonacci-lattice caps on S^2 with cos_radius about
    sqrt(1 - 1/n): angular radii about 1/sqrt(n), so the caps are pairwise
    disjoint (a 1-ply system) and a random great circle hits Theta(sqrt(n))
    of them."""
    rng = np.random.Generator(np.random.Philox(key=(seed << 64) | 0xF1B0))
    golden = (1 + math.sqrt(5)) / 2
    cos_r = Fraction(float(math.sqrt(1 - 1 / n)))
    caps = []
    for i in range(n):
        z = 1 - (2 * i + 1) / n
        r = math.sqrt(max(0.0, 1 - z * z))
        phi = 2 * math.pi * i / golden
        v = np.array([r * math.cos(phi), r * math.sin(phi), z])
        v = v + 0.05 / math.sqrt(n) * rng.standard_normal(3)
        v = v / np.linalg.norm(v)
        # modest denominators keep downstream exact arithmetic cheap
        axis = tuple(Fraction(float(c)).limit_denominator(10 ** 6) for c in v)
        caps.append(SphericalCap(axis=axis, cos_radius=cos_r))
    return CapSystem(3, tuple(caps), provenance={"source": "near-uniform", "seed": seed})


def random_visibility_system(n: int, seed: int = 0, d: int = 3) -> CapSystem:
    """n visibility caps of random rational exterior points at distance
    roughly 1.2..1.9 from the center; all exact data, so ply_depth works."""
    rng = np.random.Generator(np.random.Philox(key=(seed << 64) | 0x5EED))
    caps = []
    while len(caps) < n:
        z = rng.standard_normal(d)
        nz = np.linalg.norm(z)
        if nz == 0:
            continue
        scale = rng.uniform(1.2, 1.9)
        v = tuple(Fraction(float(c * scale / nz)).limit_denominator(1000)
                  for c in z)
        if norm_sq(v) <= 1:
            continue
        caps.append(visibility_cap(v))
    return CapSystem(d, tuple(caps),
                     provenance={"source": "random-visibility", "seed": seed})


# -------------------------------------------------------- centerpoint heuristic

def centerpoint_normalize(cs: CapSystem, iterations: int = 10,
                          threshold: float = 0.05) -> CapSystem:
    """HEURISTIC rebalancing of cap axes: repeatedly applies the
    sphere-preserving dilation toward minus the mean axis direction until the
    mean unit axis is shorter than the threshold.  Radii are kept, which a
    true Möbius transform would not do; the output is flagged accordingly."""
    axes = [np.array([float(c) for c in cap.axis]) for cap in cs.caps]
    axes = [a / np.linalg.norm(a) for a in axes]
    changed = False
    for _ in range(iterations):
        m = np.mean(axes, axis=0)
        if np.linalg.norm(m) < threshold:
            break
        a = -0.5 * m
        na2 = float(np.dot(a, a))
        new_axes = []
        for x in axes:
            xa = x + a
            y = (1 - na2) / float(np.dot(xa, xa)) * xa + a
            new_axes.append(y / np.linalg.norm(y))
        axes = new_axes
        changed = True
    if not changed:
        return replace(cs, normalized=cs.normalized or "heuristic: unchanged")
    caps = []
    for cap, ax in zip(cs.caps, axes):
        axis = tuple(Fraction(float(c)) for c in ax)
        if cap.cos_radius is not None:
            caps.append(SphericalCap(axis=axis, cos_radius=cap.cos_radius))
        else:
            c = cap.offset / math.sqrt(float(cap.norm_sq))
            caps.append(SphericalCap(axis=axis, cos_radius=Fraction(float(c))))
    return CapSystem(cs.dimension, tuple(caps), provenance=cs.provenance,
                     normalized="heuristic")


# --------------------------------------------------------------------- JSON IO

def parse_caps_json(text: str) -> CapSystem:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(raw, dict) or "dimension" not in raw or "caps" not in raw:
        raise ParseError("cap file must contain 'dimension' and 'caps'")
    caps = []
    for entry in raw["caps"]:
        axis = parse_vector(entry["axis"])
        if "cos_radius" in entry:
            caps.append(SphericalCap(axis=axis,
                                     cos_radius=parse_rational(entry["cos_radius"])))
        elif "offset" in entry:
            caps.append(SphericalCap(axis=axis,
                                     offset=parse_rational(entry["offset"])))
        else:
            raise ParseError("cap entry needs 'cos_radius' or 'offset'")
    return CapSystem(raw["dimension"], tuple(caps))


def serialize_caps_json(cs: CapSystem) -> str:
    entries = []
    for cap in cs.caps:
        e = {"axis": format_vector(cap.axis)}
        if cap.cos_radius is not None:
            e["cos_radius"] = format_rational(cap.cos_radius)
        else:
            e["offset"] = format_rational(cap.offset)
        entries.append(e)
    return json.dumps({"dimension": cs.dimension, "caps": entries}, indent=1) + "\n"
