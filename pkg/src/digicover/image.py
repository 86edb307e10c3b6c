"""Finite digital images: points of Z^d with c_u or explicit adjacency.

A digital image is treated as a finite undirected simple graph whose
vertices are lattice points.  Points are plain tuples of ints; every image
keeps its points in lexicographic order, and that order is the canonical
indexing used by the JSON formats and by every witness the package emits.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Point = tuple[int, ...]


class DigitalTopologyError(ValueError):
    """Base class for invalid inputs to the toolkit."""


class InvalidImageError(DigitalTopologyError):
    pass


class PointNotInImageError(DigitalTopologyError):
    def __init__(self, point, where: str = "image"):
        super().__init__(f"point {point!r} is not in the {where}")
        self.point = point


def as_point(p) -> Point:
    """Coerce an int or an iterable of ints to a point tuple."""
    if isinstance(p, bool):
        raise InvalidImageError(f"not a point: {p!r}")
    if isinstance(p, int):
        return (p,)
    try:
        pt = tuple(p)
    except TypeError:
        raise InvalidImageError(f"not a point: {p!r}") from None
    if not pt or not all(isinstance(c, int) and not isinstance(c, bool) for c in pt):
        raise InvalidImageError(f"not a point: {p!r}")
    return pt


@dataclass(frozen=True)
class CU:
    """c_u adjacency: 1 to u coordinates differ by exactly 1, the rest agree."""

    u: int


@dataclass(frozen=True)
class Explicit:
    """Adjacency given by an edge list, stored as sorted canonical pairs."""

    edges: tuple[tuple[Point, Point], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> "Explicit":
        canon = set()
        for a, b in pairs:
            a, b = as_point(a), as_point(b)
            if a == b:
                raise InvalidImageError(f"self-adjacency at {a!r}")
            canon.add((a, b) if a < b else (b, a))
        return cls(tuple(sorted(canon)))


Adjacency = CU | Explicit


def cu_adjacent(x: Sequence[int], y: Sequence[int], u: int) -> bool:
    if len(x) != len(y):
        raise DigitalTopologyError(f"dimension mismatch: {len(x)} vs {len(y)}")
    if not 1 <= u <= len(x):
        raise DigitalTopologyError(f"u={u} out of range 1..{len(x)}")
    changed = 0
    for a, b in zip(x, y):
        d = a - b
        if d == 0:
            continue
        if d != 1 and d != -1:
            return False
        changed += 1
    return 1 <= changed <= u


def _cu_offsets(dim: int, u: int) -> list[Point]:
    return [
        off
        for off in itertools.product((-1, 0, 1), repeat=dim)
        if 1 <= sum(1 for c in off if c) <= u
    ]


class DigitalImage:
    """A finite nonempty set of lattice points with an adjacency relation.

    Instances are immutable.  Strict neighbor sets are computed once at
    construction, so adjacency queries are dictionary lookups.

    ``labels`` optionally names points (``c0``, ``c1``, ... for generated
    cycles) and ``boundary`` tags points that are artifacts of truncating an
    infinite image to a finite window.
    """

    __slots__ = ("dim", "points", "adjacency", "labels", "boundary", "_index", "_nbrs")

    def __init__(
        self,
        points: Iterable,
        adjacency: Adjacency,
        dim: int | None = None,
        labels: Mapping | None = None,
        boundary: Iterable = (),
    ):
        pts = [as_point(p) for p in points]
        if not pts:
            raise InvalidImageError("an image needs at least one point")
        if dim is None:
            dim = len(pts[0])
        if dim < 1:
            raise InvalidImageError(f"dimension must be >= 1, got {dim}")
        for p in pts:
            if len(p) != dim:
                raise InvalidImageError(f"point {p!r} does not have dimension {dim}")
        ordered = tuple(sorted(set(pts)))
        if len(ordered) != len(pts):
            raise InvalidImageError("duplicate points")
        index = {p: i for i, p in enumerate(ordered)}

        nbrs: dict[Point, set[Point]] = {p: set() for p in ordered}
        if isinstance(adjacency, CU):
            if not 1 <= adjacency.u <= dim:
                raise InvalidImageError(f"c_u needs 1 <= u <= {dim}, got u={adjacency.u}")
            offsets = _cu_offsets(dim, adjacency.u)
            for p in ordered:
                for off in offsets:
                    q = tuple(a + b for a, b in zip(p, off))
                    if q in index:
                        nbrs[p].add(q)
        elif isinstance(adjacency, Explicit):
            for a, b in adjacency.edges:
                if a == b:
                    raise InvalidImageError(f"self-adjacency at {a!r}")
                for e in (a, b):
                    if e not in index:
                        raise InvalidImageError(f"edge endpoint {e!r} is not a point of the image")
                nbrs[a].add(b)
                nbrs[b].add(a)
        else:
            raise InvalidImageError(f"unknown adjacency {adjacency!r}")

        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", ordered)
        object.__setattr__(self, "adjacency", adjacency)
        lab = {as_point(k): str(v) for k, v in (labels or {}).items()}
        for k in lab:
            if k not in index:
                raise PointNotInImageError(k)
        object.__setattr__(self, "labels", lab)
        bnd = frozenset(as_point(b) for b in boundary)
        for b in bnd:
            if b not in index:
                raise PointNotInImageError(b)
        object.__setattr__(self, "boundary", bnd)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_nbrs", {p: frozenset(s) for p, s in nbrs.items()})

    def __setattr__(self, name, value):
        raise AttributeError("DigitalImage is immutable")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return p in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, DigitalImage):
            return NotImplemented
        return self.points == other.points and self.edges() == other.edges()

    def __hash__(self) -> int:
        return hash((self.points, self.edges()))

    def __repr__(self) -> str:
        adj = f"c{self.adjacency.u}" if isinstance(self.adjacency, CU) else "explicit"
        return f"DigitalImage(dim={self.dim}, n={len(self.points)}, {adj})"

    def index(self, p) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise PointNotInImageError(p) from None

    def label(self, p: Point) -> str:
        if p in self.labels:
            return self.labels[p]
        return str(p[0]) if self.dim == 1 else str(p)

    def resolve(self, token: str) -> Point:
        """Find a point by label, then by canonical index."""
        for p, name in self.labels.items():
            if name == token:
                return p
        try:
            i = int(token)
        except ValueError:
            raise PointNotInImageError(token) from None
        if not 0 <= i < len(self.points):
            raise PointNotInImageError(token)
        return self.points[i]

    def nbrs(self, p: Point) -> frozenset[Point]:
        try:
            return self._nbrs[p]
        except KeyError:
            raise PointNotInImageError(p) from None

    def edges(self) -> tuple[tuple[Point, Point], ...]:
        """All adjacent pairs (a, b) with a < b, sorted."""
        return tuple(sorted((a, b) for a in self.points for b in self._nbrs[a] if a < b))

    def degree(self, p: Point) -> int:
        return len(self.nbrs(p))


def _check(X: DigitalImage, *pts) -> None:
    for p in pts:
        if p not in X:
            raise PointNotInImageError(p)


def adjacent(X: DigitalImage, x: Point, y: Point) -> bool:
    _check(X, x, y)
    return y in X._nbrs[x]


def adjeq(X: DigitalImage, x: Point, y: Point) -> bool:
    """Equal or adjacent."""
    return x == y or adjacent(X, x, y)


def neighbors_strict(X: DigitalImage, x: Point) -> frozenset[Point]:
    return X.nbrs(x)


def neighborhood_closed(X: DigitalImage, x: Point) -> frozenset[Point]:
    """The closed neighborhood N(x): x together with its adjacent points.

    This also serves as the radius-1 ball N(x, 1) used by the pseudo-covering
    definitions; no larger radius is supported.
    """
    return X.nbrs(x) | {x}


def components(X: DigitalImage) -> list[list[Point]]:
    seen: set[Point] = set()
    comps = []
    for s in X.points:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted(X._nbrs[v]):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(X: DigitalImage) -> bool:
    return len(components(X)) == 1


def shortest_path(X: DigitalImage, a: Point, b: Point) -> list[Point] | None:
    """Breadth-first path from a to b, or None when they are disconnected."""
    _check(X, a, b)
    prev = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            break
        for w in sorted(X._nbrs[v]):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    if b not in prev:
        return None
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def is_path(X: DigitalImage, seq: Sequence) -> bool:
    pts = [as_point(p) for p in seq]
    if not pts:
        raise DigitalTopologyError("a path has at least one point")
    _check(X, *pts)
    return all(adjeq(X, a, b) for a, b in zip(pts, pts[1:]))


def is_simple_closed_curve(X: DigitalImage) -> bool:
    """True iff the points can be cyclically ordered so that each point's
    strict neighbors are exactly its two cyclic neighbors (at least 4 points).
    """
    m = len(X)
    if m < 4:
        return False
    if any(len(X.nbrs(p)) != 2 for p in X.points):
        return False
    # 2-regular: a simple closed curve iff it is a single cycle
    return is_connected(X)


def gen_interval(a: int, b: int) -> DigitalImage:
    if a > b:
        raise DigitalTopologyError(f"empty interval [{a},{b}]")
    return DigitalImage([(z,) for z in range(a, b + 1)], CU(1), dim=1)


def gen_cycle(n: int) -> DigitalImage:
    """C_n as points (0,)..(n-1,) of Z^1 with explicit cyclic edges."""
    if n < 4:
        raise DigitalTopologyError(f"cycles need n >= 4, got {n}")
    pts = [(i,) for i in range(n)]
    edges = Explicit.from_pairs((pts[i], pts[(i + 1) % n]) for i in range(n))
    return DigitalImage(pts, edges, dim=1, labels={p: f"c{p[0]}" for p in pts})


def cycle_point(n: int, i: int) -> Point:
    """The point labelled c_i in gen_cycle(n)."""
    return (i % n,)


def gen_cycle_rect(n: int) -> DigitalImage:
    """C_n embedded in Z^2 as the perimeter of a 3 x (n-2)/2 box under c_1.

    Points are labelled c0, c1, ... going around the perimeter, so the label
    order matches gen_cycle(n).
    """
    if n < 8 or n % 2:
        raise DigitalTopologyError(f"rectangle embedding needs even n >= 8, got {n}")
    h = (n - 4) // 2
    ring = [(0, y) for y in range(h + 1)]
    ring += [(1, h), (2, h)]
    ring += [(2, y) for y in range(h - 1, -1, -1)]
    ring += [(1, 0)]
    assert len(ring) == n
    return DigitalImage(ring, CU(1), dim=2, labels={p: f"c{i}" for i, p in enumerate(ring)})


def gen_window(q: int, n: int) -> DigitalImage:
    """The window [0, q*n] of N*, with the cut point and its neighbor tagged."""
    if q < 2 or n < 4:
        raise DigitalTopologyError(f"window needs q >= 2 and n >= 4, got q={q}, n={n}")
    end = q * n
    return DigitalImage(
        [(z,) for z in range(end + 1)], CU(1), dim=1, boundary=[(end - 1,), (end,)]
    )
