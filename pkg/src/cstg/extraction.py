"""Pattern extraction: stage construction driving the class games.

Each stage takes the least remaining candidate w, colors its pairs with phi,
and either (a) finds a phi component at the twisted threshold and returns
the recovered monotone 3-path as a twisted certificate, or (b) files w into
the largest phi-class, plays one online-game round there (naive builder,
halving painter), and checks every class for a monochromatic monotone
2-path long enough to certify a convex pattern.

The candidate set loses at least a 1/(m2^2 * 2^edges) fraction per stage;
that one-step recurrence, the painter's color restriction, and the final
certificates are all asserted, never trusted.  Running out of candidates is
a legitimate desk-scale outcome reported with statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .chromatics import ChiCache, PhiTable
from .drawing import (
    CONVEX,
    TWISTED,
    AnchoredDrawing,
    Certificate,
    verify_certificate,
)
from .errors import InternalInvariantBroken, InvalidSelection, NotATree, SizeLimit
from .ramsey import GameState, HalvingContext, halving_painter


@dataclass
class ExtractionStats:
    stages: int = 0
    edge_counts: List[int] = field(default_factory=list)
    zero_edge_stages: int = 0
    class_histogram: Dict[Tuple[int, int], int] = field(default_factory=dict)
    candidates_remaining: int = 0
    outcome: str = "exhausted"
    # final state snapshots (anchored positions), for audits and reports
    class_members: Dict[Tuple[int, int], List[int]] = field(default_factory=dict)
    class_edges: Dict[Tuple[int, int], List[Tuple[int, int, str]]] = field(
        default_factory=dict
    )
    final_candidates: List[int] = field(default_factory=list)

    @property
    def total_edges(self) -> int:
        return sum(self.edge_counts)


@dataclass
class ExtractionOutcome:
    certificate: Optional[Certificate]
    exhausted: bool
    stats: ExtractionStats
    witness_positions: Optional[List[int]] = None

    def report_lines(self) -> List[str]:
        s = self.stats
        lines = [
            f"outcome: {s.outcome}",
            f"stages: {s.stages}",
            f"edges built: {s.total_edges}",
            f"zero-edge stages: {s.zero_edge_stages}",
            f"candidates remaining: {s.candidates_remaining}",
            "class histogram: "
            + (
                " ".join(
                    f"({a},{b})={size}"
                    for (a, b), size in sorted(s.class_histogram.items())
                )
                or "(empty)"
            ),
        ]
        if self.certificate is not None:
            lines.append(
                f"certificate: {self.certificate.kind} "
                f"size={len(self.certificate.vertices)}"
            )
        return lines


class _ClassState:
    __slots__ = ("members", "game")

    def __init__(self):
        self.members: List[int] = []
        self.game = GameState()


def extract_pattern(
    ad: AnchoredDrawing,
    m1: int,
    m2: int,
    chi_cache: Optional[ChiCache] = None,
) -> ExtractionOutcome:
    """Extract a convex pattern of m1 vertices or a twisted pattern of m2.

    Returns an outcome carrying a verified certificate, or an exhausted
    report when the candidate pool empties first (expected at desk scale).
    """
    if m1 < 2 or m2 < 2:
        raise InvalidSelection("pattern targets must be at least 2")
    chi = chi_cache if chi_cache is not None else ChiCache(ad)
    phi = PhiTable(ad, chi)
    n = ad.n
    stats = ExtractionStats()
    classes: Dict[Tuple[int, int], _ClassState] = {}
    candidates = list(range(1, n))

    while candidates:
        stats.stages += 1
        w = candidates[0]
        rest = candidates[1:]

        groups: Dict[Tuple[int, int], List[int]] = {}
        for u in rest:
            val = phi.value(w, u)
            if val.a >= m2:
                return _twisted_success(ad, phi, stats, classes, w, u, "a", m2, rest)
            if val.b >= m2:
                return _twisted_success(ad, phi, stats, classes, w, u, "b", m2, rest)
            groups.setdefault((val.a, val.b), []).append(u)

        if groups:
            chosen_key, kept = max(
                groups.items(), key=lambda kv: (len(kv[1]), (-kv[0][0], -kv[0][1]))
            )
            if len(kept) * m2 * m2 < len(candidates) - 1:
                raise InternalInvariantBroken(
                    "pigeonhole class smaller than (|S|-1)/m2^2"
                )
        else:
            # last candidate: any class absorbs it (vacuously consistent)
            chosen_key, kept = (2, 2), []

        cls = classes.setdefault(chosen_key, _ClassState())
        context = HalvingContext(chi=chi.get, candidates=kept)
        paint = halving_painter(context)
        game = cls.game
        game.add_vertex(w)
        edges_built = 0
        for u in cls.members:  # naive builder: all prior members, ascending
            color = paint(game, (u, w))
            game.add_edge(u, w, color)
            edges_built += 1
        cls.members.append(w)
        stats.edge_counts.append(edges_built)
        if edges_built == 0:
            stats.zero_edge_stages += 1
            if m2 > 2 and stats.zero_edge_stages > (m2 - 2) ** 2:
                raise InternalInvariantBroken(
                    "more zero-edge stages than phi classes"
                )

        survivors = context.candidates
        if (
            len(survivors) * (m2 * m2) * (1 << edges_built)
            < len(candidates) - 1
        ):
            raise InternalInvariantBroken(
                "stage recurrence |S'| >= (|S|-1)/(m2^2 2^e) violated"
            )

        hit = _convex_ready(classes, m1)
        if hit is not None:
            return _convex_success(ad, chi, stats, classes, hit, m1, survivors)

        candidates = survivors

    stats.outcome = "exhausted"
    _snapshot(stats, classes, [])
    return ExtractionOutcome(certificate=None, exhausted=True, stats=stats)


def _snapshot(stats, classes, candidates):
    stats.candidates_remaining = len(candidates)
    stats.final_candidates = list(candidates)
    stats.class_histogram = {k: len(c.members) for k, c in classes.items()}
    stats.class_members = {k: list(c.members) for k, c in classes.items()}
    stats.class_edges = {k: list(c.game.edges) for k, c in classes.items()}


def _convex_ready(classes, m1):
    for key in sorted(classes):
        game = classes[key].game
        length, end, color = game.best()
        if color is not None and length >= m1:
            return key, end, color
    return None


def _convex_success(ad, chi, stats, classes, hit, m1, survivors):
    key, end, color = hit
    game = classes[key].game
    wstar = game.path_witness(end, color)[-m1:]
    seen = set()
    for a in range(len(wstar) - 2):
        for b in range(a + 1, len(wstar) - 1):
            for c in range(b + 1, len(wstar)):
                seen.add(chi.get(wstar[a], wstar[b], wstar[c]))
    if not seen <= {"000", "010"}:
        raise InternalInvariantBroken(
            f"convex witness triples outside {{000,010}}: {sorted(seen)}"
        )
    if len(seen) > 1:
        raise InternalInvariantBroken(
            f"convex witness triples not constant: {sorted(seen)}"
        )
    cert = Certificate(CONVEX, tuple(ad.vertex_at(p) for p in wstar))
    report = verify_certificate(ad.base, cert)
    if not report.ok:
        raise InternalInvariantBroken(f"convex certificate failed: {report.failure}")
    stats.outcome = "convex"
    _snapshot(stats, classes, survivors)
    return ExtractionOutcome(
        certificate=cert, exhausted=False, stats=stats, witness_positions=wstar
    )


def _twisted_success(ad, phi, stats, classes, w, u, component, m2, rest):
    witness = phi.witness(w, u, component)[-m2:]
    vertices = tuple(ad.vertex_at(p) for p in witness)
    cert = Certificate(TWISTED, vertices)
    report = verify_certificate(ad.base, cert)
    if not report.ok:
        cert = Certificate(TWISTED, tuple(reversed(vertices)))
        report = verify_certificate(ad.base, cert)
    if not report.ok:
        raise InternalInvariantBroken(
            f"twisted certificate failed both orientations: {report.failure}"
        )
    stats.outcome = "twisted"
    _snapshot(stats, classes, rest)
    return ExtractionOutcome(
        certificate=cert, exhausted=False, stats=stats, witness_positions=witness
    )


# -- threshold arithmetic ----------------------------------------------------


def paper_r_bound(m: int) -> float:
    """Asymptotic builder cost bound 2 m^2 log2 m used by the proof chain."""
    return 2.0 * m * m * math.log2(m) if m > 1 else 1.0


def naive_r_bound(m: int) -> float:
    """All-edges builder: C((m-1)^2 + 1, 2) edges suffice."""
    vertices = (m - 1) ** 2 + 1
    return vertices * (vertices - 1) / 2.0


@dataclass(frozen=True)
class ThresholdReport:
    """Sufficient log2(n) thresholds for finding C_{m1} or T_{m2}.

    ``chain_exponent`` follows the stage bookkeeping with the supplied
    builder bound: E = m2^2 r(m1) edges, t = m2^2 + E stages, and a margin
    of 2 t log2(m2) + E + t on the candidate recurrence.
    ``formula_exponent`` is the closed form 9 (m1 m2)^2 log2(m1) log2(m2);
    with the default builder bound the chain never exceeds it.
    """

    m1: int
    m2: int
    chain_exponent: float
    formula_exponent: float


def required_n(
    m1: int, m2: int, r_bound: Callable[[int], float] = paper_r_bound
) -> ThresholdReport:
    """Exponent L such that n > 2^L suffices, plus the closed-form bound."""
    if m1 < 2 or m2 < 2:
        raise InvalidSelection("pattern targets must be at least 2")
    edge_budget = m2 * m2 * r_bound(m1)
    stage_budget = m2 * m2 + edge_budget
    chain = 2.0 * stage_budget * math.log2(m2) + edge_budget + stage_budget
    formula = 9.0 * (m1 * m2) ** 2 * math.log2(m1) * math.log2(m2)
    return ThresholdReport(
        m1=m1, m2=m2, chain_exponent=chain, formula_exponent=formula
    )


def guaranteed_m(n: int) -> int:
    """Largest m with 9 m^4 (log2 m)^2 < log2 n (both targets set to m)."""
    if n < 3:
        raise InvalidSelection("needs n >= 3")
    log_n = math.log2(n)
    m = 1
    while 9.0 * (m + 1) ** 4 * math.log2(m + 1) ** 2 < log_n:
        m += 1
    return m


# -- tree embedding ----------------------------------------------------------


@dataclass(frozen=True)
class TreeEmbedding:
    kind: str
    pattern_size: int
    assignment: Dict[int, int]  # tree vertex -> pattern vertex
    edges: Tuple[Tuple[int, int], ...]  # mapped tree edges, pattern vertices


def embed_tree(kind: str, m: int, adjacency: Sequence[Sequence[int]]) -> TreeEmbedding:
    """Plane embedding of a tree into the convex or twisted pattern on m vertices.

    Convex: order the tree by depth-first preorder; any two tree edges are
    then nested or disjoint as index intervals, never interleaved, so no
    pair crosses.  Twisted: order by breadth-first layers with children
    grouped under parents in parent order; intervals are then never strictly
    nested, which is the only crossing pattern the twisted rule has.
    """
    if kind not in (CONVEX, TWISTED):
        raise InvalidSelection(f"kind must be {CONVEX!r} or {TWISTED!r}")
    k = len(adjacency)
    if k == 0:
        raise NotATree("empty adjacency")
    if k > m:
        raise SizeLimit(f"tree has {k} vertices, pattern only {m}")
    nbrs = [sorted(set(row)) for row in adjacency]
    edge_count = sum(len(row) for row in nbrs)
    if edge_count != 2 * (k - 1):
        raise NotATree(f"{edge_count / 2} edges, a tree on {k} vertices has {k - 1}")
    for v, row in enumerate(nbrs):
        for u in row:
            if not (0 <= u < k) or u == v:
                raise NotATree(f"bad neighbor {u} at vertex {v}")
            if v not in nbrs[u]:
                raise NotATree(f"adjacency not symmetric at ({v},{u})")

    parent = {0: None}
    order: List[int] = []
    if kind == CONVEX:
        stack = [0]
        while stack:
            v = stack.pop()
            order.append(v)
            children = [u for u in nbrs[v] if u != parent[v]]
            for u in children:
                if u in parent:
                    raise NotATree("cycle detected")
                parent[u] = v
            stack.extend(reversed(children))  # preorder, children ascending
    else:
        queue = [0]
        while queue:
            nxt: List[int] = []
            for v in queue:
                order.append(v)
                for u in nbrs[v]:
                    if u == parent[v]:
                        continue
                    if u in parent:
                        raise NotATree("cycle detected")
                    parent[u] = v
                    nxt.append(u)
            queue = nxt
    if len(order) != k:
        raise NotATree("adjacency is not connected")

    assignment = {v: idx for idx, v in enumerate(order)}
    edges = tuple(
        (min(assignment[v], assignment[parent[v]]), max(assignment[v], assignment[parent[v]]))
        for v in order
        if parent[v] is not None
    )
    return TreeEmbedding(kind=kind, pattern_size=m, assignment=assignment, edges=edges)
