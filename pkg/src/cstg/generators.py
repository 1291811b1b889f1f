"""Exact constructors for the drawing families, with analytic rotations.

Each family comes with an O(1) crossing rule, a rotation system derived from
a concrete realization, and a canonical anchor vertex that provably lies on
the unbounded cell:

* convex      -- regular n-gon; any vertex anchors.
* twisted     -- spiral realization: vertex i at radius r_i on the positive
                 x-axis, edge {i,j} (i<j) sweeps counterclockwise from r_i at
                 angle 0 to r_j at angle 2*pi with radius linear in angle.
                 Radius differences of two arcs are linear in angle, so
                 nested index pairs cross exactly once and interleaved pairs
                 never, matching the index rule.  Anchor: outermost vertex.
* halfcircle  -- vertices on the x-axis, each edge a semicircle above (U) or
                 below (L); same-side strictly interleaving edges cross.
                 All germs leave a vertex vertically; the order around the
                 vertex is resolved by curvature 2/|x_j - x_i| (sharper arcs
                 deviate further).  Anchor: leftmost vertex.
* points      -- straight-line segments on an integer point set in general
                 position; everything by exact orientation predicates.
                 Anchor: any hull vertex.

The derived rotation rules are validated against the numeric germ-sampling
oracle, never trusted (see cstg.oracles.numeric_rotation_oracle and the test
suite).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cmp_to_key
from typing import List, Optional, Sequence, Tuple

from .drawing import AnchoredDrawing, Drawing, edge_index, orient
from .errors import (
    AnchorUnavailable,
    DegenerateInput,
    InvalidSelection,
    InvalidSigns,
    RotationMissing,
    SizeLimit,
)


@dataclass(frozen=True)
class HalfCircleSigns:
    """One U/L symbol per edge rank; length C(n,2)."""

    n: int
    signs: str

    def __post_init__(self):
        want = self.n * (self.n - 1) // 2
        if len(self.signs) != want:
            raise InvalidSigns(
                f"sign vector length {len(self.signs)}, expected C({self.n},2)={want}"
            )
        if any(s not in "UL" for s in self.signs):
            raise InvalidSigns("sign vector must use only U and L")


@dataclass(frozen=True)
class SpiralTwistedParams:
    """Strictly increasing positive radii for the twisted spiral realization."""

    m: int
    radii: Tuple[int, ...]

    def __post_init__(self):
        if len(self.radii) != self.m:
            raise InvalidSelection("radii count must equal m")
        if any(r <= 0 for r in self.radii):
            raise InvalidSelection("radii must be positive")
        if any(a >= b for a, b in zip(self.radii, self.radii[1:])):
            raise InvalidSelection("radii must be strictly increasing")


def gen_convex(n: int) -> Drawing:
    """Complete convex geometric graph on a regular n-gon."""
    return Drawing(n=n, model="convex")


def gen_twisted(m: int, params: Optional[SpiralTwistedParams] = None) -> Drawing:
    """Complete twisted graph; crossing iff index intervals are nested."""
    radii = params.radii if params is not None else tuple(range(1, m + 1))
    if params is not None and params.m != m:
        raise InvalidSelection("params.m does not match m")
    return Drawing(n=m, model="twisted", radii=radii)


def gen_halfcircle(n: int, seed=None, signs: Optional[HalfCircleSigns] = None) -> Drawing:
    """Random half-circle drawing; seeded generation is bit-reproducible."""
    if signs is not None:
        if signs.n != n:
            raise InvalidSigns(f"signs built for n={signs.n}, drawing has n={n}")
        vector = signs.signs
    else:
        rng = random.Random(seed)
        vector = "".join("U" if rng.getrandbits(1) else "L" for _ in range(n * (n - 1) // 2))
    return Drawing(n=n, model="halfcircle", signs=vector)


def gen_straightline(points: Sequence[Tuple[int, int]]) -> Drawing:
    """Complete geometric graph on integer points in general position."""
    pts = tuple((int(x), int(y)) for x, y in points)
    if len(pts) < 2:
        raise InvalidSelection("need at least 2 points")
    seen = {}
    for idx, p in enumerate(pts):
        if p in seen:
            raise DegenerateInput(f"duplicate point {p} at indices {seen[p]} and {idx}")
        seen[p] = idx
    n = len(pts)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if orient(pts[a], pts[b], pts[c]) == 0:
                    raise DegenerateInput(f"collinear triple ({a},{b},{c})")
    return Drawing(n=n, model="points", points=pts)


HORTON_K_CAP = 12  # 2^12 = 4096 points


def gen_horton(k: int) -> List[Tuple[int, int]]:
    """2^k integer points in general position with no large convex subset.

    Recursive doubling: the even-x half is a stretched copy of the previous
    set, the odd-x half is another copy lifted high enough that any line
    through two points of one half misses the other half entirely (which also
    rules out mixed collinear triples).
    """
    if k < 0:
        raise InvalidSelection("k must be non-negative")
    if k > HORTON_K_CAP:
        raise SizeLimit(f"gen_horton capped at k={HORTON_K_CAP}")
    pts = [(0, 0)]
    for _ in range(k):
        lower = [(2 * x, y) for x, y in pts]
        upper = [(2 * x + 1, y) for x, y in pts]
        ys = [y for _, y in lower]
        spread = max(ys) - min(ys)
        width = 2 * len(pts)
        # lift strictly above every line through two lower points (slope
        # bounded by spread over min x-gap 1, evaluated across the window)
        delta = (2 * spread + 1) * (width + 1) + 1
        pts = lower + [(x, y + delta) for x, y in upper]
    return pts


# -- twisted spiral geometry ------------------------------------------------


def spiral_cross(radii: Sequence[int], e1, e2) -> bool:
    """Crossing of two spiral arcs, decided from the realization itself.

    Arc {i,j} (i<j) has radius rho(s) = r_i + (r_j - r_i) * s over sweep
    parameter s in [0,1].  Two arcs meet where their radius difference
    vanishes; with linear radii that happens at s* = u / (u - v) for
    u = rho1(0)-rho2(0), v = rho1(1)-rho2(1), and the crossing is interior
    (0 < s* < 1) exactly when u and v have strictly opposite signs.
    """
    i, j = min(e1), max(e1)
    k, l = min(e2), max(e2)
    u = radii[i] - radii[k]
    v = radii[j] - radii[l]
    return u * v < 0


# -- rotation systems -------------------------------------------------------


def rotations_of(d: Drawing) -> Tuple[Tuple[int, ...], ...]:
    """Counterclockwise rotation at every vertex (stored or analytic)."""
    if d.rotations is not None:
        return d.rotations
    if d.model == "explicit":
        raise RotationMissing("explicit drawing carries no rotation data")
    return tuple(rotation_at(d, v) for v in range(d.n))


def rotation_at(d: Drawing, v: int) -> Tuple[int, ...]:
    """Counterclockwise cyclic order of the other vertices around v.

    Returned as a tuple with a family-specific (documented) starting germ;
    callers comparing rotations should use cyclic_equal.
    """
    if d.rotations is not None:
        return d.rotations[v]
    n = d.n
    if d.model == "convex":
        # all germs point into the polygon; ccw order is increasing label
        return tuple((v + t) % n for t in range(1, n))
    if d.model == "twisted":
        # arcs to larger indices start here going up-right (angles in
        # (0, 90): sharper slope = closer to the axis), arcs from smaller
        # indices arrive from below-left (angles in (180, 270))
        return tuple(range(n - 1, v, -1)) + tuple(range(v))
    if d.model == "halfcircle":
        signs = d.signs
        up = [j for j in range(n) if j != v and signs[edge_index(*_s2(v, j), n)] == "U"]
        down = [j for j in range(n) if j != v and signs[edge_index(*_s2(v, j), n)] == "L"]
        # all upper germs point straight up, lower germs straight down;
        # sharper arcs (closer endpoints) deviate further toward their side
        upper = [j for j in up if j > v] + [j for j in up if j < v]
        lower = [j for j in down if j < v][::-1] + [j for j in down if j > v][::-1]
        return tuple(upper) + tuple(lower)
    if d.model == "points":
        pts = d.points
        origin = pts[v]
        others = [u for u in range(n) if u != v]

        def half(u):
            dx = pts[u][0] - origin[0]
            dy = pts[u][1] - origin[1]
            return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

        def cmp(u, w):
            hu, hw = half(u), half(w)
            if hu != hw:
                return -1 if hu < hw else 1
            s = orient(origin, pts[u], pts[w])
            return -s  # u before w iff w is ccw of u

        others.sort(key=cmp_to_key(cmp))
        return tuple(others)
    raise RotationMissing(f"no rotation rule for model {d.model!r}")


def _s2(a, b):
    return (a, b) if a < b else (b, a)


def _upper_run(d: Drawing, v: int) -> List[int]:
    signs = d.signs
    n = d.n
    return [
        j
        for j in range(n)
        if j != v and signs[edge_index(*_s2(v, j), n)] == "U"
    ]


def cyclic_equal(a: Sequence, b: Sequence) -> bool:
    """Equality of cyclic sequences (same length, some rotation matches)."""
    if len(a) != len(b):
        return False
    if len(a) == 0:
        return True
    la = list(a)
    lb = list(b)
    try:
        start = lb.index(la[0])
    except ValueError:
        return False
    return la == lb[start:] + lb[:start]


# -- anchors ----------------------------------------------------------------


def hull_vertices(pts: Sequence[Tuple[int, int]]) -> List[int]:
    """Indices of convex hull vertices (general position), ccw order."""
    idx = sorted(range(len(pts)), key=lambda i: pts[i])
    if len(idx) <= 2:
        return idx

    def build(seq):
        out = []
        for i in seq:
            while len(out) >= 2 and orient(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = build(idx)
    upper = build(reversed(idx))
    return lower[:-1] + upper[:-1]


def canonical_anchor(d: Drawing) -> int:
    """Family's default vertex certified on the unbounded cell."""
    if d.model == "convex":
        return 0
    if d.model == "twisted":
        return d.n - 1  # outermost spiral vertex
    if d.model == "halfcircle":
        return 0  # leftmost vertex; nothing of the drawing lies left of it
    if d.model == "points":
        return min(range(d.n), key=lambda i: d.points[i])  # lexicographic min is on the hull
    if d.anchor is not None:
        return d.anchor[0]
    raise AnchorUnavailable("explicit drawing without a declared anchor")


def anchored_order(d: Drawing, v0: int) -> Tuple[int, ...]:
    """Clockwise order of the remaining vertices around v0, cut at the
    unbounded-cell gap."""
    n = d.n
    if d.anchor is not None and d.anchor[0] == v0:
        return tuple(d.anchor[1])
    if d.model == "convex":
        # every vertex is on the outer face; reading clockwise from the
        # outside gap walks the hull backwards
        return tuple((v0 - t) % n for t in range(1, n))
    if d.model == "twisted":
        if v0 != n - 1:
            raise AnchorUnavailable(
                "only the outermost spiral vertex is certified on the unbounded cell"
            )
        return tuple(range(n - 2, -1, -1))
    if d.model == "halfcircle":
        if v0 != 0:
            raise AnchorUnavailable(
                "only the leftmost vertex is certified on the unbounded cell"
            )
        up = _upper_run(d, 0)
        down = [j for j in range(1, n) if j not in set(up)]
        # clockwise from the empty left half-plane: upper germs from the
        # flattest down to the sharpest, then lower germs sharpest first
        return tuple(sorted(up, reverse=True)) + tuple(sorted(down))
    if d.model == "points":
        pts = d.points
        if v0 not in hull_vertices(pts):
            raise AnchorUnavailable(f"point {v0} is not a hull vertex")
        ccw = list(rotation_at(d, v0))
        # at a hull vertex all germs span less than a half turn; the single
        # gap is the consecutive ccw pair turning by more than pi
        k = len(ccw)
        cut = 0
        for t in range(k):
            u, w = ccw[t], ccw[(t + 1) % k]
            if orient(pts[v0], pts[u], pts[w]) < 0:
                cut = (t + 1) % k
                break
        ccw = ccw[cut:] + ccw[:cut]
        return tuple(reversed(ccw))
    if d.rotations is not None:
        raise AnchorUnavailable(
            f"vertex {v0} is not certified on the unbounded cell"
        )
    raise RotationMissing("drawing has no rotation data")


def anchored_view(d: Drawing, v0: Optional[int] = None) -> AnchoredDrawing:
    """Anchored drawing at v0 (family canonical anchor when omitted).

    When rotation data is available the order is checked to be consistent
    with it: the clockwise order must be a cyclic reading of the rotation.
    """
    if v0 is None:
        v0 = canonical_anchor(d)
    order = anchored_order(d, v0)
    rot = None
    if d.rotations is not None:
        rot = d.rotations[v0]
    elif d.model != "explicit":
        rot = rotation_at(d, v0)
    if rot is not None and not cyclic_equal(tuple(reversed(order)), rot):
        raise AnchorUnavailable(
            "anchored order is not a clockwise reading of the rotation at v0"
        )
    return AnchoredDrawing(base=d, v0=v0, order=order)
