"""Brute-force ground truth at desk scale.

Nothing here is clever on purpose: ordered branch-and-bound for maximum
convex/twisted sub-patterns (weak isomorphism permits relabeling, so the
search runs over orderings, not just subsets), depth-first search for the
longest plane path, and a numeric germ-sampling oracle that recomputes
rotation systems from raw geometry.  Budgets are mandatory in spirit:
searches carry node and time caps and flag whether they completed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .drawing import CONVEX, TWISTED, Drawing, crossing_function, edge_index
from .errors import (
    BudgetExhausted,
    DegenerateInput,
    GeometryMissing,
    InvalidSelection,
)


@dataclass(frozen=True)
class OracleBudget:
    seconds: Optional[float] = None
    nodes: Optional[int] = None

    def __post_init__(self):
        if self.seconds is not None and self.seconds <= 0:
            raise InvalidSelection("time budget must be positive")
        if self.nodes is not None and self.nodes <= 0:
            raise InvalidSelection("node budget must be positive")


@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: Tuple[int, ...]
    nodes: int
    exact: bool

    def report_lines(self) -> List[str]:
        return [
            f"size: {self.size}",
            f"witness: {' '.join(str(v) for v in self.witness)}",
            f"nodes expanded: {self.nodes}",
            f"exact: {'yes' if self.exact else 'no (lower bound)'}",
        ]


class _Clock:
    def __init__(self, budget: Optional[OracleBudget]):
        self.deadline = None
        self.node_cap = None
        if budget is not None:
            if budget.seconds is not None:
                self.deadline = time.monotonic() + budget.seconds
            self.node_cap = budget.nodes
        self.nodes = 0

    def tick(self) -> bool:
        """Counts a node; True while within budget."""
        self.nodes += 1
        if self.node_cap is not None and self.nodes > self.node_cap:
            return False
        if self.deadline is not None and self.nodes % 1024 == 0:
            return time.monotonic() <= self.deadline
        return True


def _s2(a, b):
    return (a, b) if a < b else (b, a)


def max_pattern_exact(
    d: Drawing, kind: str, budget: Optional[OracleBudget] = None
) -> OracleResult:
    """Maximum k and ordered witness whose certificate of the kind verifies.

    Extends ordered sequences one vertex at a time, pruning on the first
    inconsistent 4-tuple.  For the convex kind any witness can be cycled so
    its smallest vertex comes first (interleaving is invariant under
    rotation of the order), so extensions stay above the first element.
    """
    if kind not in (CONVEX, TWISTED):
        raise InvalidSelection(f"kind must be {CONVEX!r} or {TWISTED!r}")
    f = crossing_function(d)
    n = d.n
    want_mid = kind == CONVEX
    clock = _Clock(budget)
    best: List[int] = []

    def consistent(seq: List[int], v: int) -> bool:
        L = len(seq)
        for a in range(L - 2):
            sa = seq[a]
            ea_v = _s2(sa, v)
            for b in range(a + 1, L - 1):
                sb = seq[b]
                for c in range(b + 1, L):
                    sc = seq[c]
                    mid = f(*_s2(sa, sc), *_s2(sb, v))
                    if mid != want_mid:
                        return False
                    if f(*_s2(sa, sb), *_s2(sc, v)):
                        return False
                    if f(*ea_v, *_s2(sb, sc)) == want_mid:
                        return False
        return True

    def dfs(seq: List[int], used: set) -> bool:
        nonlocal best
        if len(seq) > len(best):
            best = list(seq)
        floor = seq[0] if (want_mid and seq) else -1
        candidates = [v for v in range(n) if v not in used and v > floor]
        if len(seq) + len(candidates) <= len(best):
            return True
        for v in candidates:
            if not clock.tick():
                return False
            if len(seq) >= 3 and not consistent(seq, v):
                continue
            seq.append(v)
            used.add(v)
            ok = dfs(seq, used)
            seq.pop()
            used.remove(v)
            if not ok:
                return False
        return True

    completed = dfs([], set())
    result = OracleResult(
        size=len(best), witness=tuple(best), nodes=clock.nodes, exact=completed
    )
    if not completed:
        raise BudgetExhausted(
            f"pattern search budget exhausted after {clock.nodes} nodes",
            payload=result,
        )
    return result


def longest_plane_path_exact(
    d: Drawing,
    budget: Optional[OracleBudget] = None,
    vertices: Optional[Sequence[int]] = None,
    target: Optional[int] = None,
) -> OracleResult:
    """Longest simple path with pairwise non-crossing drawn edges.

    Optionally restricted to a vertex subset; stops early once ``target``
    vertices are reached (the result is then flagged as a lower bound).
    """
    verts = sorted(vertices) if vertices is not None else list(range(d.n))
    if any(not (0 <= v < d.n) for v in verts) or len(set(verts)) != len(verts):
        raise InvalidSelection("bad vertex restriction")
    f = crossing_function(d)
    n = d.n

    conflicts = {}

    def conflicts_of(r: int) -> frozenset:
        cached = conflicts.get(r)
        if cached is None:
            a, b = _edge_of[r]
            bad = set()
            for p in range(len(verts)):
                vp = verts[p]
                if vp in (a, b):
                    continue
                for q in range(p + 1, len(verts)):
                    vq = verts[q]
                    if vq in (a, b):
                        continue
                    if f(*_s2(vp, vq), a, b):
                        bad.add(edge_index(*_s2(vp, vq), n))
            cached = frozenset(bad)
            conflicts[r] = cached
        return cached

    _edge_of = {}
    for x in range(len(verts)):
        for y in range(x + 1, len(verts)):
            a, b = _s2(verts[x], verts[y])
            _edge_of[edge_index(a, b, n)] = (a, b)

    clock = _Clock(budget)
    best: List[int] = []
    hit_target = False

    def dfs(path: List[int], used: set, used_edges: set) -> bool:
        nonlocal best, hit_target
        if len(path) > len(best):
            best = list(path)
            if target is not None and len(best) >= target:
                hit_target = True
                return False
        if len(path) + (len(verts) - len(used)) <= len(best):
            return True
        last = path[-1]
        for w in verts:
            if w in used:
                continue
            if not clock.tick():
                return False
            r = edge_index(*_s2(last, w), n)
            if not conflicts_of(r).isdisjoint(used_edges):
                continue
            path.append(w)
            used.add(w)
            used_edges.add(r)
            ok = dfs(path, used, used_edges)
            path.pop()
            used.remove(w)
            used_edges.remove(r)
            if not ok:
                return False
        return True

    completed = True
    for start in verts:
        if not clock.tick():
            completed = False
            break
        if not dfs([start], {start}, set()):
            completed = False
            break
    if not best and verts:
        best = [verts[0]]
    result = OracleResult(
        size=len(best), witness=tuple(best), nodes=clock.nodes, exact=completed
    )
    if not completed and not hit_target:
        raise BudgetExhausted(
            f"path search budget exhausted after {clock.nodes} nodes",
            payload=result,
        )
    return result


# -- numeric rotation oracle --------------------------------------------------


def _vertex_positions(d: Drawing) -> List[Tuple[float, float]]:
    if d.model == "convex":
        return [
            (math.cos(2 * math.pi * v / d.n), math.sin(2 * math.pi * v / d.n))
            for v in range(d.n)
        ]
    if d.model == "points":
        return [(float(x), float(y)) for x, y in d.points]
    if d.model == "halfcircle":
        return [(v + 1.0, 0.0) for v in range(d.n)]
    if d.model == "twisted":
        return [(float(r), 0.0) for r in d.radii]
    raise GeometryMissing(f"model {d.model!r} carries no geometry")


def _germ_point(d, pos, v: int, u: int, eps: float) -> Tuple[float, float]:
    """A point on the drawn arc v-u at distance about eps from v."""
    if d.model in ("convex", "points"):
        px, py = pos[v]
        qx, qy = pos[u]
        norm = math.hypot(qx - px, qy - py)
        return (px + eps * (qx - px) / norm, py + eps * (qy - py) / norm)
    if d.model == "halfcircle":
        xv, xu = pos[v][0], pos[u][0]
        r = abs(xu - xv) / 2.0
        c = (xu + xv) / 2.0
        delta = 2.0 * math.asin(min(1.0, eps / (2.0 * r)))
        th = (0.0 + delta) if xv > xu else (math.pi - delta)
        y = r * math.sin(th)
        sign = d.signs[d.rank(v, u)]
        return (c + r * math.cos(th), y if sign == "U" else -y)
    # twisted spiral: radius linear in sweep angle, arc runs from the
    # smaller-index vertex at angle 0 to the larger at 2*pi
    i, j = (v, u) if v < u else (u, v)
    ri, rj = float(d.radii[i]), float(d.radii[j])
    span = abs(rj - ri) + 2 * math.pi * max(ri, rj)
    s = eps / span if v == i else 1.0 - eps / span
    rho = ri + (rj - ri) * s
    th = 2.0 * math.pi * s
    return (rho * math.cos(th), rho * math.sin(th))


def numeric_rotation_oracle(
    d: Drawing, eps: Optional[float] = None, retries: int = 40
) -> Tuple[Tuple[int, ...], ...]:
    """Rotation system recovered by sampling each arc near its endpoints.

    Germs are sorted by angle at a small fixed sampling distance; when two
    germs are numerically indistinguishable the distance is halved, up to a
    retry cap, then the input is reported as degenerate.
    """
    pos = _vertex_positions(d)
    if len(set(pos)) != len(pos):
        raise DegenerateInput("duplicate vertex positions")
    if eps is None:
        min_gap = min(
            math.hypot(ax - bx, ay - by)
            for idx, (ax, ay) in enumerate(pos)
            for bx, by in pos[idx + 1 :]
        )
        eps = 0.25 * min_gap
    rotations = []
    for v in range(d.n):
        scale = eps
        for attempt in range(retries):
            germs = []
            for u in range(d.n):
                if u == v:
                    continue
                gx, gy = _germ_point(d, pos, v, u, scale)
                ang = math.atan2(gy - pos[v][1], gx - pos[v][0]) % (2 * math.pi)
                germs.append((ang, u))
            germs.sort()
            angles = [a for a, _ in germs]
            distinct = all(
                (angles[(idx + 1) % len(angles)] - angles[idx]) % (2 * math.pi) > 1e-9
                for idx in range(len(angles))
            )
            if distinct or len(germs) <= 1:
                rotations.append(tuple(u for _, u in germs))
                break
            scale /= 2.0
        else:
            raise DegenerateInput(
                f"germs at vertex {v} remain indistinguishable after {retries} retries"
            )
    return tuple(rotations)
