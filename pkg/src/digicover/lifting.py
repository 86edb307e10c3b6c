"""Path lifts through a map, and a bounded check of unique path lifting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .image import DigitalTopologyError, Point, as_point, is_path
from .maps import DigitalMap


@dataclass(frozen=True)
class PathLift:
    base_path: tuple[Point, ...]
    lift: tuple[Point, ...]
    start: Point


@dataclass(frozen=True)
class Counterexample:
    base_path: tuple[Point, ...]
    start: Point
    lift_count: int
    lifts: tuple[PathLift, ...]
    boundary_tainted: bool = False


@dataclass(frozen=True)
class ULPReport:
    """Outcome of a bounded unique-path-lifting check.

    ``holds`` is True, False, or ``"inconclusive"`` when the only failures
    found involve points tagged as window-boundary artifacts.  True means
    every based path of at most ``max_length_checked`` steps lifts uniquely
    from every start point; it is a bounded verification.
    """

    holds: bool | str
    max_length_checked: int
    stuttering: bool
    counterexample: Counterexample | None = None
    instances_checked: int = 0


def _validate_base(p: DigitalMap, base: Sequence, start) -> tuple[tuple[Point, ...], Point]:
    base = tuple(as_point(b) for b in base)
    start = as_point(start)
    if not base:
        raise DigitalTopologyError("empty base path")
    if not is_path(p.target, base):
        raise DigitalTopologyError(f"{base!r} is not a path in the target")
    if start not in p.source:
        raise DigitalTopologyError(f"start {start!r} is not a source point")
    if p(start) != base[0]:
        raise DigitalTopologyError(f"start {start!r} does not lie over {base[0]!r}")
    return base, start


def enumerate_lifts(p: DigitalMap, base: Sequence, start) -> list[PathLift]:
    """All lifts of ``base`` starting at ``start``, in canonical order.

    Depth-first: each next lift point is equal or adjacent to the previous
    one and lies over the next base point.
    """
    base, start = _validate_base(p, base, start)
    src, a = p.source, p.assignment
    out: list[PathLift] = []
    lift = [start]

    def extend(k: int) -> None:
        if k == len(base):
            out.append(PathLift(base, tuple(lift), start))
            return
        prev = lift[-1]
        for e in sorted(src._nbrs[prev] | {prev}):
            if a[e] == base[k]:
                lift.append(e)
                extend(k + 1)
                lift.pop()

    extend(1)
    return out


def _step(p: DigitalMap, vec: dict[Point, int], b: Point) -> dict[Point, int]:
    """Lift counts per end point after extending the base path by b."""
    src, a = p.source, p.assignment
    new: dict[Point, int] = {}
    for e, c in vec.items():
        for e2 in src._nbrs[e] | {e}:
            if a[e2] == b:
                new[e2] = new.get(e2, 0) + c
    return new


def _touched(p: DigitalMap, path: tuple[Point, ...], start: Point) -> set[Point]:
    vec = {start: 1}
    seen = {start}
    for b in path[1:]:
        vec = _step(p, vec, b)
        seen.update(vec)
    return seen


def check_unique_path_lifting(
    p: DigitalMap, L_max: int, stuttering: bool = False
) -> ULPReport:
    """Bounded check that every based path lifts uniquely.

    Instances are ordered by start point (canonical source order), then by
    path length, then lexicographically by base path; the first instance
    whose lift count is not exactly one is the counterexample.

    Per start point the search runs breadth-first over states (end of base
    path, lift count per end point).  Two base paths reaching the same state
    have identical futures, so only the lexicographically first is expanded;
    this keeps the search small without changing which counterexample is
    reported.  Without ``stuttering`` base paths never repeat a point
    immediately; lifts may still stay put where adjacency forces it.
    """
    if L_max < 1:
        raise DigitalTopologyError("L_max must be >= 1")
    tgt = p.target
    checked = 0
    tainted_first: Counterexample | None = None
    has_boundary = bool(p.source.boundary)

    for e0 in p.source.points:
        b0 = p(e0)
        frontier = [((b0,), {e0: 1})]
        seen = {(b0, ((e0, 1),))}
        checked += 1
        for _ in range(L_max):
            nxt = []
            for path, vec in frontier:
                steps = tgt._nbrs[path[-1]] | {path[-1]} if stuttering else tgt._nbrs[path[-1]]
                for b in sorted(steps):
                    new = _step(p, vec, b)
                    key = (b, tuple(sorted(new.items())))
                    if key in seen:
                        continue
                    seen.add(key)
                    checked += 1
                    npath = path + (b,)
                    total = sum(new.values())
                    if total == 1:
                        nxt.append((npath, new))
                        continue
                    tainted = has_boundary and bool(_touched(p, npath, e0) & p.source.boundary)
                    cx = Counterexample(
                        npath, e0, total, tuple(enumerate_lifts(p, npath, e0)), tainted
                    )
                    if not tainted:
                        return ULPReport(False, L_max, stuttering, cx, checked)
                    if tainted_first is None:
                        tainted_first = cx
            frontier = nxt
            if not frontier:
                break
    if tainted_first is not None:
        return ULPReport("inconclusive", L_max, stuttering, tainted_first, checked)
    return ULPReport(True, L_max, stuttering, None, checked)
