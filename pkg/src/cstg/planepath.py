"""Plane path extraction via successor sequences around each vertex.

theta(i) lists the successors of anchored position i in the counterclockwise
order their edges leave the vertex, starting just after the edge back to the
anchor.  A long increasing subsequence in some theta gives a plane bipartite
star (two centers, the subsequence as leaves); otherwise repeated decreasing
subsequences drive an inductive path construction whose step keeps at least
a 1/(2m)^2 fraction of the candidates.

All structural facts the construction relies on are asserted afterwards on
the finished path: the inside/outside class of every consecutive wedge is
uniform over the later path vertices, anchor edges to earlier path vertices
never cross later path edges, and the final edge set is verified pairwise
non-crossing.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .chromatics import ChiCache
from .drawing import (
    PLANE_BIPARTITE,
    PLANE_PATH,
    AnchoredDrawing,
    Certificate,
    crossing_function,
    verify_certificate,
)
from .errors import (
    BudgetExhausted,
    InternalInvariantBroken,
    InvalidSelection,
    InvalidTriple,
)


def theta(ad: AnchoredDrawing, i: int) -> List[int]:
    """Successors of position i in ccw edge order after the anchor edge."""
    if not (1 <= i <= ad.n - 1):
        raise InvalidSelection(f"position {i} out of range")
    from .generators import rotation_at

    v = ad.vertex_at(i)
    rot = list(rotation_at(ad.base, v))
    cut = rot.index(ad.v0)
    rot = rot[cut + 1 :] + rot[:cut]
    pos = {u: p for p, u in enumerate(ad.order, start=1)}
    return [pos[u] for u in rot if pos[u] > i]


@dataclass(frozen=True)
class LisLds:
    lis_length: int
    lis_witness: Tuple[int, ...]
    lds_length: int
    lds_witness: Tuple[int, ...]


def _lis(seq: List[int]) -> Tuple[int, List[int]]:
    """Patience longest strictly increasing subsequence with witness.

    Ties in pile choice go to the earliest element, making the recovered
    witness deterministic.
    """
    if not seq:
        return 0, []
    tails: List[int] = []  # tails[d] = smallest tail value of an inc. run of length d+1
    tail_idx: List[int] = []
    parent = [-1] * len(seq)
    first_at_depth: List[int] = []
    for idx, value in enumerate(seq):
        d = bisect_left(tails, value)
        if d == len(tails):
            tails.append(value)
            tail_idx.append(idx)
            first_at_depth.append(idx)
        else:
            tails[d] = value
            tail_idx[d] = idx
        parent[idx] = tail_idx[d - 1] if d > 0 else -1
    end = first_at_depth[-1]
    out = []
    while end != -1:
        out.append(seq[end])
        end = parent[end]
    out.reverse()
    return len(tails), out


def lis_lds(seq) -> LisLds:
    """Longest strictly increasing and decreasing subsequences, with witnesses."""
    seq = list(seq)
    inc_len, inc_wit = _lis(seq)
    dec_len, dec_wit = _lis([-x for x in seq])
    return LisLds(
        lis_length=inc_len,
        lis_witness=tuple(inc_wit),
        lds_length=dec_len,
        lds_witness=tuple(-x for x in dec_wit),
    )


def find_plane_k2m2(ad: AnchoredDrawing, m: int) -> Optional[Certificate]:
    """Plane star with centers (anchor, v_i) and m^2 leaves, if some theta
    has an increasing run that long; smallest qualifying i wins."""
    need = m * m
    for i in range(1, ad.n):
        th = theta(ad, i)
        if len(th) < need:
            continue
        length, witness = _lis(th)
        if length >= need:
            leaves = witness[:need]
            cert = Certificate(
                PLANE_BIPARTITE,
                (ad.v0, ad.vertex_at(i)) + tuple(ad.vertex_at(p) for p in leaves),
            )
            report = verify_certificate(ad.base, cert)
            if not report.ok:
                raise InternalInvariantBroken(
                    f"bipartite star certificate failed: {report.failure}"
                )
            return cert
    return None


def inside_delta(
    ad: AnchoredDrawing, a: int, b: int, v: int, chi_cache: Optional[ChiCache] = None
) -> bool:
    """Is v inside the region bounded by the arcs anchor-a, a-b, b-anchor?

    Decided combinatorially: v is inside exactly when the anchor edge to v
    must cross a-b, i.e. when the triple colors 001.
    """
    if not (1 <= a < b < v <= ad.n - 1):
        raise InvalidTriple(f"need a < b < v in anchored positions, got ({a},{b},{v})")
    chi = chi_cache if chi_cache is not None else ChiCache(ad)
    return chi.get(a, b, v) == "001"


@dataclass
class PlanePathStats:
    branch: str = ""
    m: int = 0
    candidate_sizes: List[int] = field(default_factory=list)
    lds_lengths: List[int] = field(default_factory=list)
    steps: int = 0


@dataclass
class PlanePathOutcome:
    path: Certificate
    bipartite: Optional[Certificate]
    stats: PlanePathStats

    @property
    def vertex_count(self) -> int:
        return len(self.path.vertices)

    @property
    def edge_count(self) -> int:
        return max(0, len(self.path.vertices) - 1)

    def report_lines(self) -> List[str]:
        lines = [
            f"branch: {self.stats.branch}",
            f"m: {self.stats.m}",
            f"path vertices: {self.vertex_count} (edges: {self.edge_count})",
        ]
        if self.bipartite is not None:
            lines.append(
                f"bipartite star: centers {self.bipartite.vertices[:2]}, "
                f"{len(self.bipartite.vertices) - 2} leaves"
            )
        if self.stats.candidate_sizes:
            lines.append(
                "candidate sizes: "
                + " ".join(str(s) for s in self.stats.candidate_sizes)
            )
            lines.append(
                "lds lengths: " + " ".join(str(s) for s in self.stats.lds_lengths)
            )
        return lines


def default_m(n: int) -> int:
    """floor(log n / (2 log log n)), floored at 1; yields 1 for n <= 2^12."""
    if n < 3:
        return 1
    log_n = math.log2(n)
    return max(1, int(log_n / (2.0 * math.log2(log_n))))


def extract_plane_path(
    ad: AnchoredDrawing,
    m_override: Optional[int] = None,
    path_target: Optional[int] = None,
    budget=None,
    chi_cache: Optional[ChiCache] = None,
) -> PlanePathOutcome:
    """Plane path construction; see the module docstring.

    With the increasing branch, the returned path comes from a bounded exact
    search among the star leaves (target length configurable, default
    max(2, ceil(m/2))); the star certificate is returned alongside.
    """
    n = ad.n
    if n < 3:
        raise InvalidSelection("plane path extraction needs n >= 3")
    m = m_override if m_override is not None else default_m(n)
    stats = PlanePathStats(m=m)
    chi = chi_cache if chi_cache is not None else ChiCache(ad)

    if m <= 1:
        stats.branch = "trivial"
        cert = Certificate(PLANE_PATH, (ad.vertex_at(1), ad.vertex_at(2)))
        _check_path(ad.base, cert)
        return PlanePathOutcome(path=cert, bipartite=None, stats=stats)

    star = find_plane_k2m2(ad, m)
    if star is not None:
        stats.branch = "increasing"
        from .oracles import OracleBudget, longest_plane_path_exact

        leaves = list(star.vertices[2:])
        target = path_target if path_target is not None else max(2, math.ceil(m / 2))
        if budget is None:
            budget = OracleBudget(seconds=10.0, nodes=500_000)
        try:
            result = longest_plane_path_exact(
                ad.base, budget=budget, vertices=leaves, target=target
            )
            witness = result.witness
        except BudgetExhausted as exc:
            witness = exc.payload.witness if exc.payload is not None else leaves[:2]
        cert = Certificate(PLANE_PATH, tuple(witness))
        _check_path(ad.base, cert)
        return PlanePathOutcome(path=cert, bipartite=star, stats=stats)

    stats.branch = "decreasing"
    path = [1]
    candidates = list(range(2, n))
    m_sq = m * m
    while candidates:
        stats.steps += 1
        stats.candidate_sizes.append(len(candidates))
        live = set(candidates)
        th = [p for p in theta(ad, path[-1]) if p in live]
        if len(th) != len(candidates):
            raise InternalInvariantBroken("theta missed candidates above the tip")
        _, dec = _lis([-p for p in th])
        dec = [-p for p in dec]
        stats.lds_lengths.append(len(dec))
        if len(dec) * m_sq < len(candidates):
            raise InternalInvariantBroken(
                "decreasing run shorter than |S|/m^2 despite no long increasing run"
            )
        u_next = dec[-1]  # least element: the run decreases along theta order
        rest = [p for p in dec if p != u_next]
        inner = [p for p in rest if chi.get(path[-1], u_next, p) == "001"]
        outer = [p for p in rest if chi.get(path[-1], u_next, p) != "001"]
        kept = inner if len(inner) >= len(outer) else outer
        if 2 * len(kept) < len(rest):
            raise InternalInvariantBroken("kept class smaller than half")
        if len(candidates) > m_sq and 4 * m_sq * len(kept) < len(candidates):
            raise InternalInvariantBroken(
                "step recurrence |S'| >= |S|/(2m)^2 violated"
            )
        path.append(u_next)
        candidates = sorted(kept)

    _assert_wedge_uniformity(ad, chi, path)
    _assert_anchor_edges_clear(ad, path)
    cert = Certificate(PLANE_PATH, tuple(ad.vertex_at(p) for p in path))
    _check_path(ad.base, cert)
    return PlanePathOutcome(path=cert, bipartite=None, stats=stats)


def _check_path(d, cert: Certificate) -> None:
    report = verify_certificate(d, cert)
    if not report.ok:
        raise InternalInvariantBroken(f"plane path verification failed: {report.failure}")


def _assert_wedge_uniformity(ad, chi, path) -> None:
    # every later path vertex sits on the same side of each consecutive wedge
    for t in range(len(path) - 2):
        a, b = path[t], path[t + 1]
        sides = {chi.get(a, b, v) == "001" for v in path[t + 2 :]}
        if len(sides) > 1:
            raise InternalInvariantBroken(
                f"wedge ({a},{b}) separates later path vertices"
            )


def _assert_anchor_edges_clear(ad, path) -> None:
    # anchor edge to an earlier path vertex never crosses a later path pair
    f = crossing_function(ad.base)
    v0 = ad.v0
    ids = [ad.vertex_at(p) for p in path]
    for x in range(len(path) - 2):
        a = ids[x]
        e1 = (v0, a) if v0 < a else (a, v0)
        for y in range(x + 1, len(path) - 1):
            for z in range(y + 1, len(path)):
                b, c = ids[y], ids[z]
                e2 = (b, c) if b < c else (c, b)
                if f(e2[0], e2[1], e1[0], e1[1]):
                    raise InternalInvariantBroken(
                        f"anchor edge to {a} crosses path pair ({b},{c})"
                    )
