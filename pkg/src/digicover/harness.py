"""Instance generation and the equivalence harness.

The harness runs every classifier and a bounded unique-path-lifting check
on each instance (a continuous surjection) and checks the relations that
must hold between them for continuous surjections:

* covering, local isomorphism and Han pseudo-covering coincide;
* covering coincides with WL-isomorphism plus unique path lifting;
* a local isomorphism is a PL isomorphism;
* a covering is a Pakdaman pseudocovering and a WL-isomorphism;
* a Han pseudo-covering is a WL-isomorphic surjection.

Instances come from two sources: exhaustive (every connected image with at
most ``max_points`` points up to isomorphism, explicit and lattice-embedded,
with every continuous surjection between each ordered pair) and sampled
(seeded pseudo-random images, maps and two-sheeted covers).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator

from .classifiers import ClassVerdict, Kind, check_pak_pseudocover, classify
from .image import CU, DigitalImage, DigitalTopologyError, Explicit, Point, is_connected
from .lifting import ULPReport, check_unique_path_lifting
from .maps import DigitalMap

#: exhaustive enumeration stops here; larger images are only sampled
EXHAUSTIVE_MAX_POINTS = 5

RELATIONS = (
    "covering==local-iso",
    "covering==han-pseudo",
    "covering==wl-iso&ulp",
    "local-iso=>pl-iso",
    "covering=>pak-pseudo",
    "covering=>wl-iso",
    "han-pseudo=>wl-iso&surjective",
)


# -- graphs up to isomorphism -----------------------------------------------------


def _certificate(k: int, edges: frozenset) -> tuple:
    """Canonical form of a graph on range(k): its lexicographically smallest
    sorted edge list over all relabelings."""
    best = None
    for perm in itertools.permutations(range(k)):
        form = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or form < best:
            best = form
    return best


def image_certificate(X: DigitalImage) -> tuple:
    idx = X.index
    return (len(X), _certificate(len(X), frozenset((idx(a), idx(b)) for a, b in X.edges())))


def connected_graphs(k: int) -> list[DigitalImage]:
    """All connected graphs on k vertices up to isomorphism, as explicit
    images on the points (0,), ..., (k-1,)."""
    if k > EXHAUSTIVE_MAX_POINTS:
        raise DigitalTopologyError(f"exhaustive enumeration is limited to {EXHAUSTIVE_MAX_POINTS} points")
    pts = [(i,) for i in range(k)]
    slots = list(itertools.combinations(range(k), 2))
    found: dict[tuple, DigitalImage] = {}
    for mask in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        X = DigitalImage(pts, Explicit.from_pairs((pts[a], pts[b]) for a, b in edges), dim=1)
        if not is_connected(X):
            continue
        cert = image_certificate(X)
        if cert not in found:
            found[cert] = X
    return sorted(found.values(), key=lambda X: (len(X.edges()), X.edges()))


def lattice_animals(k: int, dim: int, u: int) -> list[DigitalImage]:
    """Connected k-point c_u images in Z^dim, one per isomorphism class."""
    offsets = [o for o in itertools.product((-1, 0, 1), repeat=dim) if 1 <= sum(map(bool, o)) <= u]
    shapes = {(tuple([0] * dim),)}
    for _ in range(k - 1):
        grown = set()
        for s in shapes:
            cells = set(s)
            for c in s:
                for o in offsets:
                    n = tuple(a + b for a, b in zip(c, o))
                    if n not in cells:
                        new = cells | {n}
                        lo = [min(p[i] for p in new) for i in range(dim)]
                        grown.add(tuple(sorted(tuple(p[i] - lo[i] for i in range(dim)) for p in new)))
        shapes = grown
    found: dict[tuple, DigitalImage] = {}
    for s in sorted(shapes):
        X = DigitalImage(s, CU(u), dim=dim)
        found.setdefault(image_certificate(X), X)
    return list(found.values())


def exhaustive_images(max_points: int) -> list[DigitalImage]:
    """Explicit connected graphs plus c_1 (Z^1, Z^2) and c_2 (Z^2) images."""
    out = []
    for k in range(1, max_points + 1):
        out += connected_graphs(k)
        out += lattice_animals(k, 1, 1)
        out += lattice_animals(k, 2, 1)
        out += lattice_animals(k, 2, 2)
    return out


# -- continuous maps ----------------------------------------------------------------


def continuous_maps(X: DigitalImage, Y: DigitalImage) -> Iterator[DigitalMap]:
    """Every continuous map X -> Y, in canonical order."""
    order: list[Point] = []
    for comp_start in X.points:
        if comp_start in order:
            continue
        queue = [comp_start]
        order.append(comp_start)
        while queue:
            v = queue.pop(0)
            for w in sorted(X.nbrs(v)):
                if w not in order:
                    order.append(w)
                    queue.append(w)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in X.nbrs(v) if pos[w] < i] for i, v in enumerate(order)]
    close = {y: Y.nbrs(y) | {y} for y in Y.points}
    assign: dict[Point, Point] = {}

    def go(i: int):
        if i == len(order):
            yield DigitalMap(X, Y, assign)
            return
        cands = Y.points
        for w in earlier[i]:
            cands = [c for c in cands if c in close[assign[w]]]
        for c in cands:
            assign[order[i]] = c
            yield from go(i + 1)
        assign.pop(order[i], None)

    yield from go(0)


def continuous_surjections(X: DigitalImage, Y: DigitalImage) -> Iterator[DigitalMap]:
    if len(X) < len(Y):
        return
    for f in continuous_maps(X, Y):
        if len(set(f.assignment.values())) == len(Y):
            yield f


def random_image(max_points: int, dim: int, seed, explicit: bool = False) -> DigitalImage:
    """A seeded random connected image with 1..max_points points.

    Lattice images grow by accretion in Z^dim under a random c_u; explicit
    ones are random connected graphs on (0,), (1,), ...
    """
    if max_points < 1 or dim < 1:
        raise DigitalTopologyError("bounds must be positive")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    k = rng.randint(1, max_points)
    if explicit:
        pts = [(i,) for i in range(k)]
        edges = {(rng.randrange(i), i) for i in range(1, k)}  # random spanning tree
        for a, b in itertools.combinations(range(k), 2):
            if rng.random() < 0.3:
                edges.add((a, b))
        return DigitalImage(pts, Explicit.from_pairs((pts[a], pts[b]) for a, b in edges), dim=1)
    u = rng.randint(1, dim)
    offsets = [o for o in itertools.product((-1, 0, 1), repeat=dim) if 1 <= sum(map(bool, o)) <= u]
    cells = [tuple([0] * dim)]
    while len(cells) < k:
        c = rng.choice(cells)
        n = tuple(a + b for a, b in zip(c, rng.choice(offsets)))
        if n not in cells:
            cells.append(n)
    return DigitalImage(cells, CU(u), dim=dim)


def random_continuous_surjection(X: DigitalImage, Y: DigitalImage, seed,
                                 budget: int = 2000) -> DigitalMap | None:
    """Randomized backtracking search for a continuous surjection.

    Returns None when none is found within ``budget`` node expansions
    (always None when X has fewer points than Y).
    """
    if len(X) < len(Y):
        return None
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    order = list(X.points)
    rng.shuffle(order)
    close = {y: Y.nbrs(y) | {y} for y in Y.points}
    assign: dict[Point, Point] = {}
    steps = 0

    def go(i: int) -> bool:
        nonlocal steps
        steps += 1
        if steps > budget:
            return False
        remaining = len(order) - i
        missing = len(set(Y.points) - set(assign.values()))
        if missing > remaining:
            return False
        if i == len(order):
            return True
        v = order[i]
        cands = [c for c in Y.points
                 if all(c in close[assign[w]] for w in X.nbrs(v) if w in assign)]
        rng.shuffle(cands)
        hit = set(assign.values())
        cands.sort(key=lambda c: c in hit)  # prefer points not yet covered
        for c in cands:
            assign[v] = c
            if go(i + 1):
                return True
            del assign[v]
        return False

    if not go(0):
        return None
    return DigitalMap(X, Y, assign)


def random_double_cover(Y: DigitalImage, seed) -> DigitalMap:
    """Y x {0, 1} with a random sheet-swap bit per edge, projected onto Y.

    The result is a graph double cover; it is a digital covering exactly
    when the swaps are consistent around every triangle, so both outcomes
    occur.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    k = len(Y)
    idx = Y.index
    pts = [(i,) for i in range(2 * k)]
    edges = []
    for a, b in Y.edges():
        s = rng.randint(0, 1)
        for sheet in (0, 1):
            edges.append((pts[idx(a) + k * sheet], pts[idx(b) + k * (sheet ^ s)]))
    E = DigitalImage(pts, Explicit.from_pairs(edges), dim=1)
    return DigitalMap(E, Y, {pts[i]: Y.points[i % k] for i in range(2 * k)})


# -- the harness --------------------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    label: str
    map: DigitalMap
    verdicts: dict[Kind, ClassVerdict]
    ulp: ULPReport
    pak_exhaustive: ClassVerdict

    @property
    def relations(self) -> dict[str, bool]:
        v = {k: self.verdicts[k].holds for k in Kind}
        cov = v[Kind.COVERING]
        ulp = self.ulp.holds is True
        return {
            "covering==local-iso": cov == v[Kind.LOCAL_ISO],
            "covering==han-pseudo": cov == v[Kind.HAN_PSEUDO],
            "covering==wl-iso&ulp": cov == (v[Kind.WL_ISO] and ulp),
            "local-iso=>pl-iso": not v[Kind.LOCAL_ISO] or v[Kind.PL_ISO],
            "covering=>pak-pseudo": not cov or (v[Kind.PAK_PSEUDO] and self.pak_exhaustive.holds),
            "covering=>wl-iso": not cov or v[Kind.WL_ISO],
            "han-pseudo=>wl-iso&surjective": not v[Kind.HAN_PSEUDO]
            or (v[Kind.WL_ISO] and self.map_is_surjective),
        }

    @property
    def map_is_surjective(self) -> bool:
        return self.verdicts[Kind.COVERING].surjective


def evaluate(label: str, p: DigitalMap, L_max: int | None = None) -> Instance:
    if L_max is None:
        L_max = 2 * max(len(p.source), len(p.target))
    return Instance(
        label,
        p,
        classify(p),
        check_unique_path_lifting(p, L_max),
        check_pak_pseudocover(p, exhaustive=True),
    )


def exhaustive_instances(max_points: int) -> Iterator[tuple[str, DigitalMap]]:
    images = exhaustive_images(max_points)
    for i, X in enumerate(images):
        for j, Y in enumerate(images):
            for k, f in enumerate(continuous_surjections(X, Y)):
                yield f"exhaustive/{i}-{j}/{k}", f


def sampled_instances(samples: int, seed: int, max_points: int = 6,
                      max_attempts: int | None = None) -> Iterator[tuple[str, DigitalMap]]:
    """``samples`` seeded continuous surjections between random images.

    Every fourth sample is a random double cover of an image with at most
    max_points // 2 points, so coverings are well represented.
    """
    rng = random.Random(seed)
    made = attempts = 0
    limit = max_attempts if max_attempts is not None else 50 * samples + 100
    while made < samples and attempts < limit:
        attempts += 1
        if made % 4 == 3 and max_points >= 2:
            Y = random_image(max_points // 2, 2, rng, explicit=rng.random() < 0.5)
            f = random_double_cover(Y, rng)
        else:
            explicit = rng.random() < 0.4
            X = random_image(max_points, rng.randint(1, 3), rng, explicit=explicit)
            Y = random_image(len(X), rng.randint(1, 2), rng, explicit=rng.random() < 0.4)
            f = random_continuous_surjection(X, Y, rng)
            if f is None:
                continue
        yield f"sampled/{made}", f
        made += 1


@dataclass
class HarnessSummary:
    max_points: int
    samples: int
    seed: int
    exhaustive_count: int = 0
    sampled_count: int = 0
    class_counts: dict[str, int] = field(default_factory=lambda: {k.value: 0 for k in Kind})
    ulp_count: int = 0
    relation_checks: dict[str, int] = field(default_factory=lambda: {r: 0 for r in RELATIONS})
    divergences: list[tuple[str, Instance]] = field(default_factory=list)

    @property
    def instances(self) -> int:
        return self.exhaustive_count + self.sampled_count

    @property
    def agreements(self) -> int:
        return sum(self.relation_checks.values()) - len(self.divergences)

    def add(self, inst: Instance, sampled: bool) -> None:
        if sampled:
            self.sampled_count += 1
        else:
            self.exhaustive_count += 1
        for k, v in inst.verdicts.items():
            self.class_counts[k.value] += v.holds
        self.ulp_count += inst.ulp.holds is True
        for name, ok in inst.relations.items():
            self.relation_checks[name] += 1
            if not ok:
                self.divergences.append((name, inst))


def run_equivalence_harness(max_points: int, samples: int, seed: int,
                            sample_max_points: int = 6,
                            keep: list | None = None) -> HarnessSummary:
    """Exhaustive run up to ``max_points`` (capped at 5) plus ``samples``
    sampled instances of up to ``sample_max_points`` points.

    ``keep``, when given, collects every evaluated :class:`Instance`.
    """
    if max_points < 2:
        raise DigitalTopologyError("max_points must be >= 2")
    summary = HarnessSummary(max_points, samples, seed)
    for label, f in exhaustive_instances(min(max_points, EXHAUSTIVE_MAX_POINTS)):
        inst = evaluate(label, f)
        summary.add(inst, sampled=False)
        if keep is not None:
            keep.append(inst)
    for label, f in sampled_instances(samples, seed, sample_max_points):
        inst = evaluate(label, f)
        summary.add(inst, sampled=True)
        if keep is not None:
            keep.append(inst)
    return summary
