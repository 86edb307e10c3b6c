"""Maps between digital images, stored extensionally as point pairs."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .image import (
    CU,
    DigitalImage,
    DigitalTopologyError,
    Explicit,
    Point,
    PointNotInImageError,
    as_point,
)


class InvalidMapError(DigitalTopologyError):
    pass


class SubImage(DigitalImage):
    """An induced subimage; ``parent`` is the image it was cut from."""

    __slots__ = ("parent",)

    def __init__(self, parent: DigitalImage, subset: Iterable):
        pts = sorted({as_point(p) for p in subset})
        if not pts:
            raise DigitalTopologyError("a subimage needs at least one point")
        keep = set(pts)
        for p in pts:
            if p not in parent:
                raise PointNotInImageError(p, "parent image")
        if isinstance(parent.adjacency, CU):
            # c_u is intrinsic to the coordinates, so it restricts to itself
            adjacency = parent.adjacency
        else:
            adjacency = Explicit(
                tuple(e for e in parent.adjacency.edges if e[0] in keep and e[1] in keep)
            )
        super().__init__(
            pts,
            adjacency,
            dim=parent.dim,
            labels={p: n for p, n in parent.labels.items() if p in keep},
            boundary=parent.boundary & keep,
        )
        object.__setattr__(self, "parent", parent)


def sub_image(X: DigitalImage, S: Iterable) -> SubImage:
    return SubImage(X, S)


class DigitalMap:
    """A total function from ``source`` points to ``target`` points."""

    __slots__ = ("source", "target", "assignment")

    def __init__(self, source: DigitalImage, target: DigitalImage, assignment: Mapping):
        amap = {as_point(k): as_point(v) for k, v in assignment.items()}
        for x in amap:
            if x not in source:
                raise InvalidMapError(f"{x!r} is not a source point")
        for x in source.points:
            if x not in amap:
                raise InvalidMapError(f"no value assigned to source point {x!r}")
        for x, y in amap.items():
            if y not in target:
                raise InvalidMapError(f"value {y!r} of {x!r} is not a target point")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "assignment", {x: amap[x] for x in source.points})

    @classmethod
    def from_function(
        cls, source: DigitalImage, target: DigitalImage, fn: Callable[[Point], Point]
    ) -> "DigitalMap":
        return cls(source, target, {x: fn(x) for x in source.points})

    def __setattr__(self, name, value):
        raise AttributeError("DigitalMap is immutable")

    def __call__(self, x: Point) -> Point:
        try:
            return self.assignment[x]
        except KeyError:
            raise PointNotInImageError(x, "source") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, DigitalMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.assignment == other.assignment
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(self.assignment.items())))

    def __repr__(self) -> str:
        return f"DigitalMap({self.source!r} -> {self.target!r})"

    def image_of(self, S: Iterable[Point]) -> frozenset[Point]:
        return frozenset(self(x) for x in S)

    def fiber(self, b: Point) -> tuple[Point, ...]:
        """p^-1(b) in canonical source order."""
        if b not in self.target:
            raise PointNotInImageError(b, "target")
        return tuple(x for x in self.source.points if self.assignment[x] == b)

    def preimage(self, T: Iterable[Point]) -> frozenset[Point]:
        T = frozenset(T)
        return frozenset(x for x, y in self.assignment.items() if y in T)


def compose(g: DigitalMap, f: DigitalMap) -> DigitalMap:
    """g after f."""
    if f.target.points != g.source.points:
        raise InvalidMapError("maps are not composable")
    return DigitalMap(f.source, g.target, {x: g(f(x)) for x in f.source.points})


def identity(X: DigitalImage) -> DigitalMap:
    return DigitalMap(X, X, {x: x for x in X.points})


def continuity_violation(f: DigitalMap) -> tuple[Point, Point] | None:
    """First adjacent source pair whose images are neither equal nor adjacent."""
    src, tgt, a = f.source, f.target, f.assignment
    for x, y in src.edges():
        fx, fy = a[x], a[y]
        if fx != fy and fy not in tgt.nbrs(fx):
            return (x, y)
    return None


def is_continuous(f: DigitalMap) -> bool:
    return continuity_violation(f) is None


def missed_points(f: DigitalMap) -> tuple[Point, ...]:
    hit = set(f.assignment.values())
    return tuple(b for b in f.target.points if b not in hit)


def is_surjective(f: DigitalMap) -> bool:
    return len(set(f.assignment.values())) == len(f.target)


def is_injective(f: DigitalMap) -> bool:
    return len(set(f.assignment.values())) == len(f.source)


def is_isomorphism(f: DigitalMap) -> bool:
    """A bijection with x ~ x' iff f(x) ~ f(x')."""
    if not (is_injective(f) and is_surjective(f)):
        return False
    a, src, tgt = f.assignment, f.source, f.target
    for x in src.points:
        if {a[y] for y in src.nbrs(x)} != tgt.nbrs(a[x]):
            return False
    return True


def restrict_to(f: DigitalMap, S: Iterable, T: Iterable) -> DigitalMap:
    """f restricted to the subimage on S, with codomain the subimage on T."""
    S = [as_point(x) for x in S]
    for x in S:
        if x not in f.source:
            raise PointNotInImageError(x, "source")
    return DigitalMap(
        sub_image(f.source, S), sub_image(f.target, T), {x: f(x) for x in S}
    )


def restrict(f: DigitalMap, S: Iterable) -> DigitalMap:
    """f restricted to S, with codomain its image f(S)."""
    S = [as_point(x) for x in S]
    for x in S:
        if x not in f.source:
            raise PointNotInImageError(x, "source")
    return restrict_to(f, S, f.image_of(S))


def _degree_profile(X: DigitalImage) -> list[int]:
    return sorted(len(X.nbrs(p)) for p in X.points)


def find_isomorphism(A: DigitalImage, B: DigitalImage) -> dict[Point, Point] | None:
    """Some adjacency-preserving bijection A -> B, or None.

    Backtracking over degree-compatible candidates.  The first solution in
    canonical order is returned, so witnesses are reproducible.
    """
    if len(A) != len(B) or len(A.edges()) != len(B.edges()):
        return None
    if _degree_profile(A) != _degree_profile(B):
        return None
    # place high-degree, well-connected vertices first to prune early
    order: list[Point] = []
    remaining = set(A.points)
    while remaining:
        placed = set(order)
        nxt = max(
            sorted(remaining),
            key=lambda v: (len(A.nbrs(v) & placed), len(A.nbrs(v))),
        )
        order.append(nxt)
        remaining.discard(nxt)
    candidates = {
        v: [w for w in B.points if len(B.nbrs(w)) == len(A.nbrs(v))] for v in A.points
    }
    mapping: dict[Point, Point] = {}
    used: set[Point] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for u, wu in mapping.items():
                if (u in A.nbrs(v)) != (wu in B.nbrs(w)):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def subgraphs_isomorphic(A: DigitalImage, B: DigitalImage) -> bool:
    return find_isomorphism(A, B) is not None
