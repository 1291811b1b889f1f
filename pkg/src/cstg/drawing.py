"""Data model for complete simple topological graphs at the weak-isomorphism level.

A drawing is fully described by its crossing relation on independent edge
pairs.  The relation is either stored explicitly (set of crossing edge-rank
pairs) or given implicitly by a family rule (convex / twisted / half-circle /
straight-line points).  Optional payloads: a rotation system (counterclockwise
cyclic order of neighbors around each vertex) and an anchor (a vertex
certified on the unbounded cell together with the clockwise order of the
remaining vertices around it).

Vertices are 0-based everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (
    InvalidCertificate,
    InvalidEdge,
    InvalidSelection,
    NotIndependent,
    SizeLimit,
)

# Explicit crossing tables are quartic in n; past this they do not fit in
# memory and only implicit families are allowed.
EXPLICIT_N_CAP = 256

MODELS = ("explicit", "convex", "twisted", "halfcircle", "points")

CONVEX = "convex"
TWISTED = "twisted"
PLANE_PATH = "plane_path"
PLANE_BIPARTITE = "plane_bipartite"
CERTIFICATE_KINDS = (CONVEX, TWISTED, PLANE_PATH, PLANE_BIPARTITE)


def edge_index(i: int, j: int, n: int) -> int:
    """Lexicographic rank of the pair (i, j), 0 <= i < j < n."""
    if not (0 <= i < j < n):
        raise InvalidEdge(f"edge ({i},{j}) invalid for n={n}")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def edge_at(rank: int, n: int) -> Tuple[int, int]:
    """Inverse of edge_index."""
    if rank < 0 or rank >= n * (n - 1) // 2:
        raise InvalidEdge(f"rank {rank} out of range for n={n}")
    i = 0
    # row i holds n-1-i pairs; walk rows (n is small everywhere we decode)
    offset = rank
    while offset >= n - 1 - i:
        offset -= n - 1 - i
        i += 1
    return i, i + 1 + offset


def _norm_edge(e, n: int) -> Tuple[int, int]:
    try:
        a, b = e
    except (TypeError, ValueError):
        raise InvalidEdge(f"edge {e!r} is not a vertex pair")
    a = int(a)
    b = int(b)
    if a == b or not (0 <= a < n) or not (0 <= b < n):
        raise InvalidEdge(f"edge ({a},{b}) invalid for n={n}")
    return (a, b) if a < b else (b, a)


def _interleave(i: int, j: int, k: int, l: int) -> bool:
    # both pairs sorted; strict interleaving of index intervals
    return (i < k < j < l) or (k < i < l < j)


def _nested(i: int, j: int, k: int, l: int) -> bool:
    # both pairs sorted; one open interval strictly inside the other
    return (i < k < l < j) or (k < i < j < l)


def orient(p, q, r) -> int:
    """Sign of the cross product (q-p) x (r-p); exact on integer input."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def segments_cross(p1, p2, q1, q2) -> bool:
    """Proper crossing of segments with no shared endpoints (general position)."""
    return (
        orient(p1, p2, q1) * orient(p1, p2, q2) < 0
        and orient(q1, q2, p1) * orient(q1, q2, p2) < 0
    )


@dataclass(frozen=True)
class Drawing:
    """Complete simple topological graph on n vertices.

    Exactly one backend is populated according to ``model``:

    * ``explicit``   -- ``crossings``: set of (rank1, rank2) with rank1 < rank2
    * ``convex``     -- no parameters (regular n-gon)
    * ``twisted``    -- optional ``radii`` (spiral realization, default 1..n)
    * ``halfcircle`` -- ``signs``: U/L per edge rank
    * ``points``     -- ``points``: integer coordinates, general position

    ``rotations`` and ``anchor`` are stored payloads (decoded documents or
    induced drawings); for implicit families they are derived on demand by
    :mod:`cstg.generators`.
    """

    n: int
    model: str
    crossings: Optional[frozenset] = None
    signs: Optional[str] = None
    points: Optional[Tuple[Tuple[int, int], ...]] = None
    radii: Optional[Tuple[int, ...]] = field(default=None, compare=False)
    rotations: Optional[Tuple[Tuple[int, ...], ...]] = None
    anchor: Optional[Tuple[int, Tuple[int, ...]]] = None

    def __post_init__(self):
        if self.n < 2:
            raise InvalidSelection(f"drawing needs n >= 2, got {self.n}")
        if self.model not in MODELS:
            raise InvalidSelection(f"unknown model {self.model!r}")
        if self.model == "explicit" and self.n > EXPLICIT_N_CAP:
            raise SizeLimit(
                f"explicit backend capped at n={EXPLICIT_N_CAP}, got {self.n}"
            )
        if self.rotations is not None:
            if len(self.rotations) != self.n:
                raise InvalidSelection("rotations must hold one sequence per vertex")
            for v, rot in enumerate(self.rotations):
                if sorted(rot) != [u for u in range(self.n) if u != v]:
                    raise InvalidSelection(
                        f"rotation at vertex {v} is not a permutation of the others"
                    )
        if self.anchor is not None:
            v0, order = self.anchor
            if not (0 <= v0 < self.n) or sorted(order) != [
                u for u in range(self.n) if u != v0
            ]:
                raise InvalidSelection("anchor order is not a permutation of V \\ {v0}")

    @property
    def edge_count(self) -> int:
        return self.n * (self.n - 1) // 2

    def rank(self, i: int, j: int) -> int:
        return edge_index(min(i, j), max(i, j), self.n)


def cross(d: Drawing, e1, e2) -> bool:
    """True iff the two independent edges cross in the drawing."""
    a, b = _norm_edge(e1, d.n)
    c, e = _norm_edge(e2, d.n)
    if a in (c, e) or b in (c, e):
        raise NotIndependent(f"edges ({a},{b}) and ({c},{e}) share an endpoint")
    return crossing_function(d)(a, b, c, e)


def crossing_function(d: Drawing):
    """Raw crossing predicate f(i, j, k, l) on sorted, independent pairs.

    No validation; used by hot loops (chi scans, certificate checks).
    """
    if d.model == "convex":
        return _interleave
    if d.model == "twisted":
        return _nested
    if d.model == "halfcircle":
        signs = d.signs
        n = d.n

        def f(i, j, k, l, signs=signs, n=n):
            if not ((i < k < j < l) or (k < i < l < j)):
                return False
            r1 = i * n - i * (i + 1) // 2 + (j - i - 1)
            r2 = k * n - k * (k + 1) // 2 + (l - k - 1)
            return signs[r1] == signs[r2]

        return f
    if d.model == "points":
        pts = d.points

        def f(i, j, k, l, pts=pts):
            return segments_cross(pts[i], pts[j], pts[k], pts[l])

        return f
    # explicit
    table = d.crossings
    n = d.n

    def f(i, j, k, l, table=table, n=n):
        r1 = i * n - i * (i + 1) // 2 + (j - i - 1)
        r2 = k * n - k * (k + 1) // 2 + (l - k - 1)
        return ((r1, r2) if r1 < r2 else (r2, r1)) in table

    return f


def explicit_from(d: Drawing, keep_rotations: bool = True) -> Drawing:
    """Rebuild d with an explicit crossing table (n-capped).

    Queries every independent pair once; used to cross-check implicit
    backends against table storage.  With ``keep_rotations`` the result
    carries the source's rotation system (stored or family-analytic).
    """
    if d.n > EXPLICIT_N_CAP:
        raise SizeLimit(f"explicit backend capped at n={EXPLICIT_N_CAP}")
    f = crossing_function(d)
    n = d.n
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairs = set()
    for r1, (i, j) in enumerate(edges):
        for r2 in range(r1 + 1, len(edges)):
            k, l = edges[r2]
            if k in (i, j) or l in (i, j):
                continue
            if f(i, j, k, l):
                pairs.add((r1, r2))
    rotations = d.rotations
    if keep_rotations and rotations is None and d.model != "explicit":
        from . import generators

        rotations = generators.rotations_of(d)
    return Drawing(
        n=n,
        model="explicit",
        crossings=frozenset(pairs),
        rotations=rotations if keep_rotations else None,
        anchor=d.anchor,
    )


def induced_subdrawing(d: Drawing, vs: Sequence[int]) -> Drawing:
    """Restriction of d to the ordered vertex selection vs.

    The result is an explicit drawing whose crossing relation is the
    restriction of d's under the index mapping; rotations and anchor are
    restricted when the source carries them (erasing vertices preserves the
    cyclic order of the surviving edge germs, and the unbounded cell only
    grows).
    """
    vs = list(vs)
    if len(vs) < 2:
        raise InvalidSelection("selection needs at least 2 vertices")
    if len(set(vs)) != len(vs):
        raise InvalidSelection("selection contains duplicates")
    if any(not (0 <= v < d.n) for v in vs):
        raise InvalidSelection("selection out of range")
    back = {v: idx for idx, v in enumerate(vs)}
    m = len(vs)
    f = crossing_function(d)
    sub_edges = [(ia, ib) for ia in range(m) for ib in range(ia + 1, m)]
    pairs = set()
    for r1, (ia, ib) in enumerate(sub_edges):
        a, b = _sorted2(vs[ia], vs[ib])
        for r2 in range(r1 + 1, len(sub_edges)):
            ic, id_ = sub_edges[r2]
            c, e = _sorted2(vs[ic], vs[id_])
            if c in (a, b) or e in (a, b):
                continue
            if f(a, b, c, e):
                pairs.add((r1, r2))

    rotations = None
    src_rot = d.rotations
    if src_rot is None and d.model != "explicit":
        from . import generators  # deferred: generators imports this module

        src_rot = generators.rotations_of(d)
    if src_rot is not None:
        keep = set(vs)
        rotations = tuple(
            tuple(back[u] for u in src_rot[v] if u in keep) for v in vs
        )

    anchor = None
    if d.anchor is not None and d.anchor[0] in back:
        v0, order = d.anchor
        keep = set(vs)
        anchor = (back[v0], tuple(back[u] for u in order if u in keep))

    return Drawing(
        n=m,
        model="explicit",
        crossings=frozenset(pairs),
        rotations=rotations,
        anchor=anchor,
    )


@dataclass(frozen=True)
class AnchoredDrawing:
    """A drawing with a vertex v0 on the unbounded cell and the clockwise
    linear order of the remaining vertices around it.

    Anchored positions are 1-based (position 0 is v0 itself); ``order[p-1]``
    is the base vertex at position p.
    """

    base: Drawing
    v0: int
    order: Tuple[int, ...]

    def __post_init__(self):
        n = self.base.n
        if not (0 <= self.v0 < n):
            raise InvalidSelection(f"anchor {self.v0} out of range")
        if sorted(self.order) != [v for v in range(n) if v != self.v0]:
            raise InvalidSelection("anchored order is not a permutation of V \\ {v0}")

    @property
    def n(self) -> int:
        return self.base.n

    def vertex_at(self, p: int) -> int:
        """Base vertex at anchored position p (p=0 is the anchor)."""
        return self.v0 if p == 0 else self.order[p - 1]

    def position_of(self, v: int) -> int:
        if v == self.v0:
            return 0
        return self.order.index(v) + 1


@dataclass(frozen=True)
class Certificate:
    """Pattern witness: ordered vertex list plus a kind.

    For PLANE_BIPARTITE the first two vertices are the star centers and the
    rest are the leaves.
    """

    kind: str
    vertices: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise InvalidCertificate(f"unknown certificate kind {self.kind!r}")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidCertificate("certificate vertices must be distinct")
        if any(v < 0 for v in self.vertices):
            raise InvalidCertificate("certificate vertices must be non-negative")
        minimum = 3 if self.kind == PLANE_BIPARTITE else 1
        if len(self.vertices) < minimum:
            raise InvalidCertificate(
                f"{self.kind} certificate needs at least {minimum} vertices"
            )

    def edges(self) -> list:
        """Drawn edges the certificate asserts to be present/plane."""
        vs = self.vertices
        if self.kind in (CONVEX, TWISTED):
            return [
                (vs[a], vs[b]) for a in range(len(vs)) for b in range(a + 1, len(vs))
            ]
        if self.kind == PLANE_PATH:
            return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        c1, c2 = vs[0], vs[1]
        leaves = vs[2:]
        return [(c1, u) for u in leaves] + [(c2, u) for u in leaves]


@dataclass(frozen=True)
class CertificateReport:
    ok: bool
    kind: str
    checked: int
    failure: Optional[str] = None
    failing_tuple: Optional[Tuple[int, ...]] = None

    def __bool__(self):
        return self.ok


def check_plane_edges(d: Drawing, edges: Iterable[Tuple[int, int]]):
    """First crossing pair among the given drawn edges, or None.

    Edge pairs sharing an endpoint are skipped (they cannot cross).
    """
    f = crossing_function(d)
    es = [_norm_edge(e, d.n) for e in edges]
    for x in range(len(es)):
        a, b = es[x]
        for y in range(x + 1, len(es)):
            c, e = es[y]
            if a in (c, e) or b in (c, e):
                continue
            if f(a, b, c, e):
                return (es[x], es[y])
    return None


def verify_certificate(d: Drawing, c: Certificate) -> CertificateReport:
    """Check a certificate against the drawing's actual crossing relation.

    Convex: every 4-tuple of certificate positions a<b<c<d must have the
    middle pairing {a,c}x{b,d} crossing and the other two pairings not.
    Twisted: the outer pairing {a,d}x{b,c} crosses, the other two do not.
    Plane path / plane bipartite: the asserted edges are pairwise
    non-crossing.  Reports pass or the first offending tuple.
    """
    vs = c.vertices
    if any(v >= d.n for v in vs):
        raise InvalidCertificate("certificate vertex out of range for drawing")
    f = crossing_function(d)

    if c.kind in (CONVEX, TWISTED):
        m = len(vs)
        checked = 0
        for a in range(m - 3):
            for b in range(a + 1, m - 2):
                for cc in range(b + 1, m - 1):
                    for dd in range(cc + 1, m):
                        checked += 1
                        va, vb, vc, vd = vs[a], vs[b], vs[cc], vs[dd]
                        mid = f(*_sorted2(va, vc), *_sorted2(vb, vd))
                        inner = f(*_sorted2(va, vb), *_sorted2(vc, vd))
                        outer = f(*_sorted2(va, vd), *_sorted2(vb, vc))
                        want_mid = c.kind == CONVEX
                        want_outer = c.kind == TWISTED
                        if mid != want_mid or inner or outer != want_outer:
                            return CertificateReport(
                                ok=False,
                                kind=c.kind,
                                checked=checked,
                                failing_tuple=(a, b, cc, dd),
                                failure=_tuple_failure(
                                    c.kind, (va, vb, vc, vd), mid, inner, outer
                                ),
                            )
        return CertificateReport(ok=True, kind=c.kind, checked=checked)

    if c.kind == PLANE_BIPARTITE and vs[0] == vs[1]:
        raise InvalidCertificate("bipartite centers must be distinct")
    edges = c.edges()
    bad = check_plane_edges(d, edges)
    pairs = len(edges) * (len(edges) - 1) // 2
    if bad is None:
        return CertificateReport(ok=True, kind=c.kind, checked=pairs)
    return CertificateReport(
        ok=False,
        kind=c.kind,
        checked=pairs,
        failing_tuple=bad[0] + bad[1],
        failure=f"edges {bad[0]} and {bad[1]} cross",
    )


def _sorted2(a, b):
    return (a, b) if a < b else (b, a)


def _tuple_failure(kind, quad, mid, inner, outer):
    want = "mid" if kind == CONVEX else "outer"
    got = [
        name
        for name, val in (("mid", mid), ("inner", inner), ("outer", outer))
        if val
    ]
    return (
        f"vertices {quad}: required crossing pattern {want!r}, "
        f"observed {got or ['none']}"
    )
