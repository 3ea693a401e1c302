"""Exact circumscribability/inscribability of 3-polytopes via edge-angle systems.

Works in units of pi so the whole system is rational: edge weights must
lie strictly in (0, 1), sum to exactly 2 around every face, and exceed 2
on every simple non-facial circuit.  Strictness is reduced to a single
margin variable t maximized by exact LP; the open system is feasible iff
t* > 0.  Circuit rows are added by cutting planes, either against the
fully enumerated circuit set or (above budget) a shortest-path
separation oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .errors import BudgetExceeded
from .graphs import DEFAULT_HAMILTON_BUDGET, hamiltonian_cycle, hamiltonian_certificate
from .maps import CombinatorialMap, dual_map
from .rationals import format_rational, parse_rational
from .simplex import GE, LE, EQ, LinearProgram, solve_lp, verify_dual_bound, verify_farkas
from .verdicts import Answer, Certificate, CertKind, Verdict

DEFAULT_CYCLE_BUDGET = 1_000_000


def edge_key(e) -> tuple[int, int]:
    u, v = sorted(e)
    return (u, v)


def _face_edges(face) -> frozenset[tuple[int, int]]:
    return frozenset(edge_key((face[i], face[(i + 1) % len(face)])) for i in range(len(face)))


@dataclass(frozen=True)
class Circuit:
    edges: frozenset[tuple[int, int]]
    facial: bool

    def __len__(self):
        return len(self.edges)


def enumerate_simple_circuits(m: CombinatorialMap,
                              budget: int = DEFAULT_CYCLE_BUDGET) -> list[Circuit]:
    """Every vertex-simple cycle of the graph, flagged facial/non-facial.

    A cycle equals a face boundary iff their edge sets coincide (cyclic
    sequences up to rotation and reflection are determined by their edges).
    """
    face_sets = {_face_edges(f) for f in m.faces}
    out = []
    for i, cyc in enumerate(nx.simple_cycles(m.graph())):
        if i >= budget:
            raise BudgetExceeded("simple circuit enumeration", f"> {budget}", budget)
        es = frozenset(edge_key((cyc[j], cyc[(j + 1) % len(cyc)])) for j in range(len(cyc)))
        out.append(Circuit(es, es in face_sets))
    out.sort(key=lambda c: (len(c.edges), sorted(c.edges)))
    return out


# --------------------------------------------------------------------- LP core

@dataclass
class MarginSystem:
    """The max-margin LP data: substitute w_e = v_e + t with v_e >= 0 so all
    structural variables are nonnegative (t split into t+ - t-)."""

    edges: list[tuple[int, int]]
    face_edge_lists: list[list[tuple[int, int]]]
    face_rhs: list[Fraction]

    @classmethod
    def from_map(cls, m: CombinatorialMap):
        edges = sorted(edge_key(e) for e in m.edges)
        fe = [sorted(_face_edges(f)) for f in m.faces]
        return cls(edges, fe, [Fraction(2)] * len(fe))

    def build_lp(self, circuits: list[Circuit]) -> LinearProgram:
        ne = len(self.edges)
        idx = {e: i for i, e in enumerate(self.edges)}
        ncols = ne + 2  # v_e ..., t+, t-
        obj = [Fraction(0)] * ncols
        obj[ne] = Fraction(1)
        obj[ne + 1] = Fraction(-1)
        lp = LinearProgram(ncols, obj)
        for fe, rhs in zip(self.face_edge_lists, self.face_rhs):
            row = [Fraction(0)] * ncols
            for e in fe:
                row[idx[e]] = Fraction(1)
            row[ne] = Fraction(len(fe))
            row[ne + 1] = Fraction(-len(fe))
            lp.add_row(row, EQ, Fraction(rhs))
        for e in self.edges:
            row = [Fraction(0)] * ncols
            row[idx[e]] = Fraction(1)
            row[ne] = Fraction(2)
            row[ne + 1] = Fraction(-2)
            lp.add_row(row, LE, Fraction(1))
        for c in circuits:
            row = [Fraction(0)] * ncols
            for e in c.edges:
                row[idx[e]] = Fraction(1)
            row[ne] = Fraction(len(c.edges) - 1)
            row[ne + 1] = Fraction(-(len(c.edges) - 1))
            lp.add_row(row, GE, Fraction(2))
        return lp


@dataclass
class MarginOutcome:
    status: str                       # "optimal" | "infeasible"
    t_star: Fraction | None           # None is the -infinity sentinel
    weights: dict | None              # edge -> Fraction, w_e = v_e + t
    active_circuits: list[Circuit]
    lp: LinearProgram | None
    duals: list[Fraction] | None
    farkas: list[Fraction] | None = None


def solve_max_margin(system: MarginSystem, circuits: list[Circuit]) -> MarginOutcome:
    """Exact optimum of the margin LP against the full given circuit set,
    solved by cutting planes: start with faces and box rows, repeatedly add
    the most violated non-facial circuit row until none is violated."""
    nonfacial = [c for c in circuits if not c.facial]
    active: list[Circuit] = []
    while True:
        lp = system.build_lp(active)
        res = solve_lp(lp)
        if res.status == "infeasible":
            return MarginOutcome("infeasible", None, None, active, lp, None, res.farkas)
        assert res.status == "optimal"
        ne = len(system.edges)
        t = res.x[ne] - res.x[ne + 1]
        w = {e: res.x[i] + t for i, e in enumerate(system.edges)}
        worst, worst_gap = None, Fraction(0)
        for c in nonfacial:
            if c in active:
                continue
            gap = sum((w[e] for e in c.edges), Fraction(0)) - (2 + t)
            if gap < worst_gap:
                worst, worst_gap = c, gap
        if worst is None:
            return MarginOutcome("optimal", t, w, active, lp, res.duals)
        active.append(worst)


# ----------------------------------------------------------- separation oracle

def _min_violated_circuit(m: CombinatorialMap, w: dict, t: Fraction) -> Circuit | None:
    """Minimum-weight violated non-facial circuit, by per-edge shortest paths.

    Only sound for strictly positive weights (Dijkstra).  A non-facial
    circuit through edge e misses at least one other edge of each of the two
    faces of e, so min over those deletions is exhaustive.
    """
    assert all(x > 0 for x in w.values())
    g = nx.Graph()
    for (u, v), x in w.items():
        g.add_edge(u, v, weight=x)
    faces_of_edge: dict = {}
    for f in m.faces:
        fe = _face_edges(f)
        for e in fe:
            faces_of_edge.setdefault(e, []).append(fe)
    best = None
    best_w = None
    for e, (f1, f2) in sorted(faces_of_edge.items()):
        u, v = e
        for e1 in sorted(f1 - {e}):
            for e2 in sorted(f2 - {e}):
                h = g.copy()
                h.remove_edge(*e)
                if h.has_edge(*e1):
                    h.remove_edge(*e1)
                if h.has_edge(*e2):
                    h.remove_edge(*e2)
                try:
                    length, path = nx.single_source_dijkstra(h, u, v)
                except nx.NetworkXNoPath:
                    continue
                total = length + w[e]
                if best_w is None or total < best_w:
                    es = frozenset(edge_key((path[i], path[i + 1]))
                                   for i in range(len(path) - 1)) | {e}
                    best, best_w = Circuit(es, False), total
    if best is not None and best_w < 2 + t:
        return best
    return None


# ----------------------------------------------------------------- certificates

def angle_assignment_certificate(weights: dict, margin: Fraction) -> Certificate:
    return Certificate(
        CertKind.ANGLE_ASSIGNMENT,
        {"unit": "pi",
         "weights": {f"{u}-{v}": format_rational(x) for (u, v), x in sorted(weights.items())},
         "margin": format_rational(margin)},
        "edge angle assignment: circumscribable",
    )


def parse_angle_assignment(cert: Certificate) -> dict:
    out = {}
    for k, v in cert.data["weights"].items():
        u, _, w_ = k.partition("-")
        out[(int(u), int(w_))] = parse_rational(v)
    return out


def verify_angle_assignment(m: CombinatorialMap, weights: dict,
                            circuits: list[Circuit] | None = None,
                            budget: int = DEFAULT_CYCLE_BUDGET) -> bool:
    """Re-check a YES certificate: weights strictly in (0,1), facial sums
    exactly 2, every non-facial simple circuit strictly above 2."""
    if set(weights) != {edge_key(e) for e in m.edges}:
        return False
    if any(not 0 < x < 1 for x in weights.values()):
        return False
    for f in m.faces:
        if sum((weights[e] for e in _face_edges(f)), Fraction(0)) != 2:
            return False
    if circuits is None:
        circuits = enumerate_simple_circuits(m, budget)
    for c in circuits:
        if not c.facial:
            if sum((weights[e] for e in c.edges), Fraction(0)) <= 2:
                return False
    return True


def dual_witness_certificate(outcome: MarginOutcome) -> Certificate:
    if outcome.status == "infeasible":
        return Certificate(
            CertKind.LP_DUAL_WITNESS,
            {"t_star": None,
             "farkas": [format_rational(y) for y in outcome.farkas],
             "binding_circuits": [sorted(map(list, c.edges)) for c in outcome.active_circuits]},
            "angle system infeasible (Farkas witness): not circumscribable",
        )
    return Certificate(
        CertKind.LP_DUAL_WITNESS,
        {"t_star": format_rational(outcome.t_star),
         "duals": [format_rational(y) for y in outcome.duals],
         "binding_circuits": [sorted(map(list, c.edges)) for c in outcome.active_circuits]},
        f"margin optimum t* = {format_rational(outcome.t_star)} <= 0: not circumscribable",
    )


def verify_dual_witness(m: CombinatorialMap, cert: Certificate) -> bool:
    """Rebuild the relaxed LP from the certificate's binding circuits and check
    the multipliers: either a dual bound proving t <= t* <= 0, or a Farkas
    witness of outright infeasibility."""
    system = MarginSystem.from_map(m)
    circuits = [Circuit(frozenset(edge_key(e) for e in ce), False)
                for ce in cert.data["binding_circuits"]]
    lp = system.build_lp(circuits)
    if cert.data["t_star"] is None:
        return verify_farkas(lp, [parse_rational(y) for y in cert.data["farkas"]])
    t_star = parse_rational(cert.data["t_star"])
    if t_star > 0:
        return False
    duals = [parse_rational(y) for y in cert.data["duals"]]
    return verify_dual_bound(lp, duals, t_star)


# ------------------------------------------------------------------- decisions

def decide_circumscribable(m: CombinatorialMap,
                           cycle_budget: int = DEFAULT_CYCLE_BUDGET) -> Verdict:
    system = MarginSystem.from_map(m)
    try:
        circuits = enumerate_simple_circuits(m, cycle_budget)
    except BudgetExceeded:
        return _decide_lazy(m, system)
    outcome = solve_max_margin(system, circuits)
    if outcome.status == "infeasible":
        # Even the closed system (face equalities within the weight box) has
        # no solution; t* = -infinity sentinel.
        return Verdict(Answer.NO, (dual_witness_certificate(outcome),),
                       "angle system infeasible: not circumscribable")
    if outcome.t_star > 0:
        cert = angle_assignment_certificate(outcome.weights, outcome.t_star)
        assert verify_angle_assignment(m, outcome.weights, circuits)
        return Verdict(Answer.YES, (cert,), "margin t* > 0: circumscribable")
    return Verdict(Answer.NO, (dual_witness_certificate(outcome),),
                   "margin t* <= 0 against the full circuit set: not circumscribable")


def _decide_lazy(m: CombinatorialMap, system: MarginSystem) -> Verdict:
    """Cutting-plane mode without full enumeration: rows come from the
    shortest-path separation oracle.  Sound because dropping circuit rows can
    only increase t*: a nonpositive relaxed optimum already proves NO."""
    active: list[Circuit] = []
    while True:
        lp = system.build_lp(active)
        res = solve_lp(lp)
        if res.status == "infeasible":
            outcome = MarginOutcome("infeasible", None, None, active, lp, None, res.farkas)
            return Verdict(Answer.NO, (dual_witness_certificate(outcome),),
                           "angle system infeasible: not circumscribable")
        ne = len(system.edges)
        t = res.x[ne] - res.x[ne + 1]
        w = {e: res.x[i] + t for i, e in enumerate(system.edges)}
        if t <= 0:
            outcome = MarginOutcome("optimal", t, w, active, lp, res.duals)
            return Verdict(Answer.NO, (dual_witness_certificate(outcome),),
                           "relaxed margin t* <= 0: not circumscribable")
        violated = _min_violated_circuit(m, w, t)
        if violated is None:
            cert = angle_assignment_certificate(w, t)
            return Verdict(Answer.YES, (cert,),
                           "margin t* > 0 and separation oracle finds no violated circuit")
        active.append(violated)


def _dual_edge_to_primal(m: CombinatorialMap) -> dict:
    """Dual edge {face_i, face_j} -> the primal edge their faces share."""
    faces_of_edge: dict = {}
    for fi, f in enumerate(m.faces):
        for e in _face_edges(f):
            faces_of_edge.setdefault(e, []).append(fi)
    return {edge_key(fs): e for e, fs in faces_of_edge.items()}


def decide_inscribable(m: CombinatorialMap,
                       cycle_budget: int = DEFAULT_CYCLE_BUDGET) -> Verdict:
    """Inscribable iff the polar dual is circumscribable; angle certificates
    are relabeled from dual edges to the primal edges they cross."""
    dm = dual_map(m)
    verdict = decide_circumscribable(dm, cycle_budget)
    relabel = _dual_edge_to_primal(m)
    certs = []
    for cert in verdict.certificates:
        if cert.kind is CertKind.ANGLE_ASSIGNMENT:
            weights = parse_angle_assignment(cert)
            primal = {relabel[e]: x for e, x in weights.items()}
            data = dict(cert.data)
            data["weights"] = {f"{u}-{v}": format_rational(x)
                               for (u, v), x in sorted(primal.items())}
            data["on_dual"] = True
            certs.append(Certificate(cert.kind, data,
                                     cert.conclusion + " (dual angles keyed by primal edges)"))
        else:
            data = dict(cert.data)
            data["on_dual"] = True
            certs.append(Certificate(cert.kind, data, cert.conclusion + " (on the dual map)"))
    return Verdict(verdict.answer, tuple(certs), f"via dual: {verdict.note}")


def decide_quadric_inscribable(m: CombinatorialMap, quadric: str = "hyperboloid",
                               cycle_budget: int = DEFAULT_CYCLE_BUDGET,
                               hamilton_budget: int = DEFAULT_HAMILTON_BUDGET) -> Verdict:
    """Inscribable in the hyperboloid/cylinder iff sphere-inscribable and
    Hamiltonian."""
    if quadric not in ("hyperboloid", "cylinder"):
        raise ValueError(f"unknown quadric {quadric!r}")
    sphere = decide_inscribable(m, cycle_budget)
    if sphere.is_no:
        return Verdict(Answer.NO, sphere.certificates, "not sphere-inscribable")
    try:
        cyc = hamiltonian_cycle(m.graph(), hamilton_budget)
    except BudgetExceeded:
        cyc = "unknown"
    if cyc == "unknown" or sphere.answer is Answer.UNKNOWN:
        return Verdict(Answer.UNKNOWN, (), "a subdecision exceeded its budget")
    if cyc is None:
        return Verdict(Answer.NO, sphere.certificates,
                       "sphere-inscribable but graph not Hamiltonian (exhaustive search)")
    return Verdict(Answer.YES, sphere.certificates + (hamiltonian_certificate(cyc),),
                   "sphere-inscribable with a Hamiltonian cycle")
