"""JSON documents for images, maps, verdicts and lifting reports.

Points are written in canonical (lexicographic) order and everything else
refers to them by index into that order.  ``dumps`` is the one place that
fixes key order and layout, so equal values always serialize to equal bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .classifiers import ClassVerdict, Violation
from .image import CU, DigitalImage, DigitalTopologyError, Explicit, InvalidImageError
from .lifting import Counterexample, PathLift, ULPReport
from .maps import DigitalMap, InvalidMapError


class FormatError(DigitalTopologyError):
    """A document that does not describe a valid image or map."""


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# -- images -------------------------------------------------------------------


def image_to_json(X: DigitalImage) -> dict:
    idx = X.index
    if isinstance(X.adjacency, CU):
        adjacency: dict = {"cu": X.adjacency.u}
    else:
        adjacency = {"edges": [[idx(a), idx(b)] for a, b in X.adjacency.edges]}
    doc: dict = {"dim": X.dim, "points": [list(p) for p in X.points], "adjacency": adjacency}
    if X.labels:
        doc["labels"] = [X.labels.get(p) for p in X.points]
    if X.boundary:
        doc["boundary"] = sorted(idx(p) for p in X.boundary)
    return doc


def _int_list(v, where: str) -> list[int]:
    if not isinstance(v, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
        raise FormatError(f"{where}: expected a list of integers, got {v!r}")
    return v


def image_from_json(doc: Any) -> DigitalImage:
    if not isinstance(doc, dict):
        raise FormatError("image: expected a JSON object")
    for key in ("dim", "points", "adjacency"):
        if key not in doc:
            raise FormatError(f"image: missing field {key!r}")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise FormatError(f"image.dim: expected a positive integer, got {dim!r}")
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise FormatError("image.points: expected a nonempty list")
    pts = []
    seen = set()
    for i, p in enumerate(raw):
        p = tuple(_int_list(p, f"image.points[{i}]"))
        if len(p) != dim:
            raise FormatError(f"image.points[{i}]: expected {dim} coordinates")
        if p in seen:
            raise FormatError(f"image.points[{i}]: duplicate point {list(p)}")
        seen.add(p)
        pts.append(p)
    adj = doc["adjacency"]
    if not isinstance(adj, dict) or len(adj) != 1:
        raise FormatError('image.adjacency: expected {"cu": u} or {"edges": [...]}')
    if "cu" in adj:
        u = adj["cu"]
        if not isinstance(u, int) or not 1 <= u <= dim:
            raise FormatError(f"image.adjacency.cu: expected 1..{dim}, got {u!r}")
        adjacency: CU | Explicit = CU(u)
    elif "edges" in adj:
        edges = adj["edges"]
        if not isinstance(edges, list):
            raise FormatError("image.adjacency.edges: expected a list")
        pairs = []
        for k, e in enumerate(edges):
            e = _int_list(e, f"image.adjacency.edges[{k}]")
            if len(e) != 2 or not all(0 <= i < len(pts) for i in e):
                raise FormatError(f"image.adjacency.edges[{k}]: bad index pair {e}")
            if e[0] == e[1]:
                raise FormatError(f"image.adjacency.edges[{k}]: self-loop at {e[0]}")
            pairs.append((pts[e[0]], pts[e[1]]))
        adjacency = Explicit.from_pairs(pairs)
    else:
        raise FormatError(f"image.adjacency: unknown kind {sorted(adj)}")
    labels = {}
    if "labels" in doc:
        lab = doc["labels"]
        if not isinstance(lab, list) or len(lab) != len(pts):
            raise FormatError("image.labels: expected one entry per point")
        labels = {p: str(n) for p, n in zip(pts, lab) if n is not None}
    boundary = []
    if "boundary" in doc:
        for i in _int_list(doc["boundary"], "image.boundary"):
            if not 0 <= i < len(pts):
                raise FormatError(f"image.boundary: index {i} out of range")
            boundary.append(pts[i])
    try:
        return DigitalImage(pts, adjacency, dim=dim, labels=labels, boundary=boundary)
    except InvalidImageError as exc:
        raise FormatError(f"image: {exc}") from None


# -- maps ---------------------------------------------------------------------


def map_to_json(f: DigitalMap) -> dict:
    si, ti = f.source.index, f.target.index
    return {
        "source": image_to_json(f.source),
        "target": image_to_json(f.target),
        "pairs": [[si(x), ti(y)] for x, y in f.assignment.items()],
    }


def _load_ref(ref, base: Path | None, where: str) -> DigitalImage:
    if isinstance(ref, str):
        path = Path(ref) if base is None else base / ref
        try:
            ref = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise FormatError(f"{where}: cannot read {path}: {exc}") from None
    try:
        return image_from_json(ref)
    except FormatError as exc:
        raise FormatError(f"{where}.{exc}") from None


def map_from_json(doc: Any, base: Path | None = None) -> DigitalMap:
    """Load a map; ``source``/``target`` may be inline images or file paths
    (resolved relative to ``base``)."""
    if not isinstance(doc, dict):
        raise FormatError("map: expected a JSON object")
    for key in ("source", "target", "pairs"):
        if key not in doc:
            raise FormatError(f"map: missing field {key!r}")
    E = _load_ref(doc["source"], base, "map.source")
    B = _load_ref(doc["target"], base, "map.target")
    pairs = doc["pairs"]
    if not isinstance(pairs, list):
        raise FormatError("map.pairs: expected a list")
    assignment = {}
    for k, pr in enumerate(pairs):
        pr = _int_list(pr, f"map.pairs[{k}]")
        if len(pr) != 2:
            raise FormatError(f"map.pairs[{k}]: expected [source, target]")
        s, t = pr
        if not 0 <= s < len(E):
            raise FormatError(f"map.pairs[{k}]: source index {s} out of range")
        if not 0 <= t < len(B):
            raise FormatError(f"map.pairs[{k}]: target index {t} out of range")
        x = E.points[s]
        if x in assignment:
            raise FormatError(f"map.pairs[{k}]: source index {s} assigned twice")
        assignment[x] = B.points[t]
    try:
        return DigitalMap(E, B, assignment)
    except InvalidMapError as exc:
        raise FormatError(f"map: {exc}") from None


def read_image(path) -> DigitalImage:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return image_from_json(doc)


def read_map(path) -> DigitalMap:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return map_from_json(doc, base=path.parent)


# -- verdicts and lifting ---------------------------------------------------------


def violation_to_json(v: Violation, p: DigitalMap) -> dict:
    si, ti = p.source.index, p.target.index
    doc: dict = {"condition": v.condition, "reason": v.reason}
    if v.base is not None:
        doc["base"] = ti(v.base)
    if v.point is not None:
        doc["point"] = si(v.point)
    if v.other is not None:
        doc["other"] = si(v.other)
    on_target = v.reason == "surjectivity"
    doc["points"] = [ti(x) if on_target else si(x) for x in v.points]
    if v.sheet_failures:
        doc["sheet_failures"] = [[si(e), c] for e, c in v.sheet_failures]
    return doc


def verdict_to_json(v: ClassVerdict, p: DigitalMap) -> dict:
    si, ti = p.source.index, p.target.index
    if v.violation is not None:
        witness = violation_to_json(v.violation, p)
    else:
        witness = {
            "decomposition": [
                {"base": ti(s.base), "sheets": [si(e) for e in s.sheets]}
                for s in v.decomposition
            ]
        }
    return {
        "kind": v.kind.value,
        "holds": v.holds,
        "continuous": v.continuous,
        "surjective": v.surjective,
        "witness": witness,
    }


def lift_to_json(L: PathLift, p: DigitalMap) -> list[int]:
    return [p.source.index(x) for x in L.lift]


def counterexample_to_json(c: Counterexample, p: DigitalMap) -> dict:
    return {
        "base_path": [p.target.index(b) for b in c.base_path],
        "start": p.source.index(c.start),
        "lift_count": c.lift_count,
        "lifts": [lift_to_json(L, p) for L in c.lifts],
        "boundary_tainted": c.boundary_tainted,
    }


def ulp_to_json(r: ULPReport, p: DigitalMap) -> dict:
    return {
        "holds": r.holds,
        "max_length_checked": r.max_length_checked,
        "stuttering": r.stuttering,
        "instances_checked": r.instances_checked,
        "counterexample": None if r.counterexample is None
        else counterexample_to_json(r.counterexample, p),
    }
