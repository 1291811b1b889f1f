"""Canonical text serialization for drawings and certificates.

Documents are single-line canonical JSON (sorted keys, compact separators,
trailing newline), so encoding is byte-deterministic and encode(decode(x))
is the identity on well-formed documents.

Drawing document (format tag "cstg-1"):

    {"format": "cstg-1", "model": "...", "n": ...,
     "params":    {...}               # halfcircle: {"signs": "UL..."}
                                      # points: {"points": [[x, y], ...]}
     "crossings": [[r1, r2], ...]     # explicit model only, sorted ranks
     "rotations": [[...], ...]        # optional, ccw, one list per vertex
     "anchor":    {"order": [...], "v0": k}}   # optional

Certificate document: {"kind": "...", "vertices": [...]}.
"""

from __future__ import annotations

import json
from typing import Tuple

from .drawing import Certificate, Drawing, edge_at, edge_index
from .errors import ParseError, ValidationError

FORMAT_TAG = "cstg-1"


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def encode_drawing(d: Drawing) -> str:
    doc = {"format": FORMAT_TAG, "model": d.model, "n": d.n}
    if d.model == "halfcircle":
        doc["params"] = {"signs": d.signs}
    elif d.model == "points":
        doc["params"] = {"points": [list(p) for p in d.points]}
    elif d.model == "explicit":
        doc["crossings"] = sorted(list(p) for p in d.crossings)
    if d.rotations is not None:
        doc["rotations"] = [list(r) for r in d.rotations]
    if d.anchor is not None:
        doc["anchor"] = {"v0": d.anchor[0], "order": list(d.anchor[1])}
    return _canonical(doc)


def decode_drawing(text: str) -> Drawing:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document is not an object")
    if doc.get("format") != FORMAT_TAG:
        raise ParseError(f"field 'format': expected {FORMAT_TAG!r}, got {doc.get('format')!r}")
    for field in ("n", "model"):
        if field not in doc:
            raise ParseError(f"field {field!r} missing")
    n = doc["n"]
    model = doc["model"]
    if not isinstance(n, int) or n < 2:
        raise ValidationError(f"n must be an integer >= 2, got {n!r}")
    known = {"format", "n", "model", "params", "crossings", "rotations", "anchor"}
    extra = set(doc) - known
    if extra:
        raise ParseError(f"unknown fields {sorted(extra)}")

    params = doc.get("params", {})
    signs = None
    points = None
    crossings = None
    if model == "halfcircle":
        signs = params.get("signs") if isinstance(params, dict) else None
        if not isinstance(signs, str):
            raise ParseError("field 'params.signs' missing for halfcircle model")
        want = n * (n - 1) // 2
        if len(signs) != want or any(s not in "UL" for s in signs):
            raise ValidationError(
                f"sign vector must be {want} symbols from {{U,L}}"
            )
    elif model == "points":
        raw = params.get("points") if isinstance(params, dict) else None
        if not isinstance(raw, list) or len(raw) != n:
            raise ParseError("field 'params.points' must list n integer pairs")
        try:
            points = tuple((int(x), int(y)) for x, y in raw)
        except (TypeError, ValueError) as exc:
            raise ParseError("field 'params.points' malformed") from exc
        from .generators import gen_straightline

        try:
            gen_straightline(points)
        except Exception as exc:
            raise ValidationError(f"point set invalid: {exc}") from exc
    elif model == "explicit":
        raw = doc.get("crossings")
        if raw is None:
            raise ParseError("field 'crossings' missing for explicit model")
        crossings = _decode_crossings(raw, n)
        if "params" in doc:
            raise ParseError("explicit model takes no 'params'")
    elif model in ("convex", "twisted"):
        if "params" in doc:
            raise ParseError(f"{model} model takes no 'params'")
    else:
        raise ValidationError(f"unknown model {model!r}")
    if model != "explicit" and "crossings" in doc:
        raise ParseError("'crossings' is only valid for the explicit model")

    rotations = None
    if "rotations" in doc:
        rotations = _decode_rotations(doc["rotations"], n)
    anchor = None
    if "anchor" in doc:
        anchor = _decode_anchor(doc["anchor"], n, rotations)

    radii = tuple(range(1, n + 1)) if model == "twisted" else None
    return Drawing(
        n=n,
        model=model,
        crossings=crossings,
        signs=signs,
        points=points,
        radii=radii,
        rotations=rotations,
        anchor=anchor,
    )


def _decode_crossings(raw, n: int) -> frozenset:
    if not isinstance(raw, list):
        raise ParseError("field 'crossings' must be a list of rank pairs")
    ranks = n * (n - 1) // 2
    pairs = set()
    for entry in raw:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ParseError(f"crossing entry {entry!r} is not a pair")
        r1, r2 = entry
        if not (isinstance(r1, int) and isinstance(r2, int)):
            raise ParseError(f"crossing entry {entry!r} is not integer")
        if not (0 <= r1 < ranks and 0 <= r2 < ranks) or r1 == r2:
            raise ValidationError(f"crossing ranks {entry} out of range for n={n}")
        i, j = edge_at(r1, n)
        k, l = edge_at(r2, n)
        if k in (i, j) or l in (i, j):
            raise ValidationError(
                f"crossing pair {entry} joins edges ({i},{j}) and ({k},{l}) "
                "which share a vertex"
            )
        pairs.add((r1, r2) if r1 < r2 else (r2, r1))
    return frozenset(pairs)


def _decode_rotations(raw, n: int) -> Tuple[Tuple[int, ...], ...]:
    if not (isinstance(raw, list) and len(raw) == n):
        raise ParseError("field 'rotations' must hold one list per vertex")
    rotations = []
    for v, seq in enumerate(raw):
        if not isinstance(seq, list):
            raise ParseError(f"rotation at vertex {v} is not a list")
        if sorted(seq) != [u for u in range(n) if u != v]:
            raise ValidationError(
                f"rotation at vertex {v} is not a permutation of the other vertices"
            )
        rotations.append(tuple(seq))
    return tuple(rotations)


def _decode_anchor(raw, n: int, rotations) -> Tuple[int, Tuple[int, ...]]:
    if not (isinstance(raw, dict) and "v0" in raw and "order" in raw):
        raise ParseError("field 'anchor' must carry 'v0' and 'order'")
    v0 = raw["v0"]
    order = raw["order"]
    if not isinstance(v0, int) or not (0 <= v0 < n):
        raise ValidationError(f"anchor v0 {v0!r} out of range")
    if not isinstance(order, list) or sorted(order) != [u for u in range(n) if u != v0]:
        raise ValidationError("anchor order is not a permutation of V \\ {v0}")
    if rotations is not None:
        from .generators import cyclic_equal

        if not cyclic_equal(tuple(reversed(order)), rotations[v0]):
            raise ValidationError(
                "anchor order is not a clockwise reading of the rotation at v0"
            )
    return (v0, tuple(order))


def encode_certificate(c: Certificate) -> str:
    return _canonical({"kind": c.kind, "vertices": list(c.vertices)})


def decode_certificate(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict) or "kind" not in doc or "vertices" not in doc:
        raise ParseError("certificate document must carry 'kind' and 'vertices'")
    vs = doc["vertices"]
    if not isinstance(vs, list) or any(not isinstance(v, int) for v in vs):
        raise ParseError("certificate vertices must be integers")
    from .errors import InvalidCertificate

    try:
        return Certificate(kind=doc["kind"], vertices=tuple(vs))
    except InvalidCertificate as exc:
        raise ValidationError(str(exc)) from exc


def load_drawing(path) -> Drawing:
    with open(path, "r", encoding="utf-8") as fh:
        return decode_drawing(fh.read())


def save_drawing(d: Drawing, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(encode_drawing(d))


def load_certificate(path) -> Certificate:
    with open(path, "r", encoding="utf-8") as fh:
        return decode_certificate(fh.read())


def save_certificate(c: Certificate, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(encode_certificate(c))
