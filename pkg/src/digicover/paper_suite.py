"""Window-map experiments on p(z) = c_{z mod n} from a window of N* onto C_n.

Everything here is computed by enumeration over the finite window; nothing
hard-codes which published claim about p is right.  Points within one step
of the window cut are tagged on the source image, and any conclusion whose
evidence touches them is reported as tainted or inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classifiers import (
    ClassVerdict,
    Violation,
    check_covering,
    check_han_pseudocover,
    check_pak_pseudocover,
    check_wl_iso,
    han_base_violation,
)
from .image import (
    DigitalTopologyError,
    Point,
    cycle_point,
    gen_cycle,
    gen_window,
    neighborhood_closed,
)
from .lifting import ULPReport, check_unique_path_lifting, enumerate_lifts
from .maps import DigitalMap, is_surjective

#: the (n, q) grid of the canned verification run
DEFAULT_GRID = tuple((n, q) for n in (4, 5, 6, 8) for q in (2, 3))


def build_window_map(n: int, q: int) -> DigitalMap:
    if n < 4 or q < 2:
        raise DigitalTopologyError(f"window map needs n >= 4 and q >= 2, got n={n}, q={q}")
    return DigitalMap.from_function(gen_window(q, n), gen_cycle(n), lambda z: cycle_point(n, z[0]))


def build_doubling_map(n: int) -> DigitalMap:
    """The two-sheeted cover C_2n -> C_n, z -> c_{z mod n}."""
    return DigitalMap.from_function(gen_cycle(2 * n), gen_cycle(n), lambda z: cycle_point(n, z[0]))


@dataclass(frozen=True)
class AssertionRow:
    base: Point
    fiber: tuple[Point, ...]
    lhs: frozenset[Point]       # union of N(e) over the fiber
    rhs: frozenset[Point]       # p^-1(N(base))
    diff: frozenset[Point]      # symmetric difference
    interior_diff: frozenset[Point]
    equal: bool                 # no difference away from the cut
    boundary_tainted: bool


@dataclass(frozen=True)
class AssertionReport:
    n: int
    q: int
    rows: tuple[AssertionRow, ...]
    verdict: str


def check_assertion_3_10(n: int, q: int) -> AssertionReport:
    """Compare the fiber-neighborhood union with p^-1(N(b)) for every b.

    A row is ``equal`` when the two sets agree off the tagged cut points, and
    ``boundary_tainted`` when they differ at a tagged point.  The claim is
    existential in b, so it holds on the window as soon as one untainted row
    is unequal; it fails when every row is untainted and equal; any other
    outcome is inconclusive.
    """
    if n < 4 or q < 3:
        raise DigitalTopologyError(f"needs n >= 4 and q >= 3, got n={n}, q={q}")
    p = build_window_map(n, q)
    E, B = p.source, p.target
    flagged = E.boundary
    rows = []
    for b in B.points:
        fiber = p.fiber(b)
        lhs = frozenset().union(*(neighborhood_closed(E, e) for e in fiber))
        rhs = p.preimage(neighborhood_closed(B, b))
        diff = lhs ^ rhs
        interior = diff - flagged
        rows.append(AssertionRow(b, fiber, lhs, rhs, diff, interior, not interior,
                                 bool(diff & flagged)))
    clean = [r for r in rows if not r.boundary_tainted]
    if any(not r.equal for r in clean):
        verdict = "assertion_holds_on_window"
    elif len(clean) == len(rows):
        verdict = "assertion_fails_on_window"
    else:
        verdict = "inconclusive"
    return AssertionReport(n, q, tuple(rows), verdict)


@dataclass(frozen=True)
class CorollaryCheck:
    map: DigitalMap
    wl_iso: ClassVerdict
    surjective: bool
    han_pseudo: ClassVerdict
    ulp: ULPReport
    witness_path: tuple[Point, ...] | None
    witness_lift_count: int | None
    # every base point where Han's decomposition fails, with boundary taint
    han_failures: tuple[tuple[Violation, bool], ...] = ()

    @property
    def han_untainted_failure(self) -> Violation | None:
        return next((v for v, tainted in self.han_failures if not tainted), None)

    @property
    def reproduced(self) -> bool:
        """The WL-iso surjection that is not a Han pseudo-covering."""
        return (
            self.wl_iso.holds
            and self.surjective
            and not self.han_pseudo.holds
            and self.ulp.holds is False
            and self.witness_lift_count == 0
        )


def verify_corollary_3_11(n: int, q: int, p: DigitalMap | None = None,
                          L_max: int | None = None) -> CorollaryCheck:
    """WL-isomorphism, surjectivity, Han pseudo-covering and path lifting
    for the window map (or for ``p`` when given, e.g. as a control)."""
    if p is None:
        p = build_window_map(n, q)
        witness = (cycle_point(n, 0), cycle_point(n, n - 1))
        start = (0,)
        count = len(enumerate_lifts(p, witness, start))
    else:
        witness, count = None, None
    if L_max is None:
        L_max = 2 * max(len(p.source), len(p.target))
    flagged = p.source.boundary
    han_failures = []
    for b in p.target.points:
        v = han_base_violation(p, b)
        if v is not None:
            touched = set(v.points) | {x for x in (v.point, v.other) if x is not None}
            han_failures.append((v, bool(touched & flagged)))
    return CorollaryCheck(
        p,
        check_wl_iso(p),
        is_surjective(p),
        check_han_pseudocover(p),
        check_unique_path_lifting(p, L_max),
        witness,
        count,
        tuple(han_failures),
    )


@dataclass(frozen=True)
class SeparationCheck:
    map: DigitalMap
    pak_pseudo: ClassVerdict
    covering: ClassVerdict

    @property
    def separated(self) -> bool:
        return self.pak_pseudo.holds and not self.covering.holds


def verify_pak_separation(n: int, q: int, p: DigitalMap | None = None) -> SeparationCheck:
    if p is None:
        p = build_window_map(n, q)
    return SeparationCheck(p, check_pak_pseudocover(p, exhaustive=True), check_covering(p))


@dataclass(frozen=True)
class WindowRun:
    n: int
    q: int
    assertion: AssertionReport | None
    corollary_3_11: CorollaryCheck
    pak_separation: SeparationCheck


def run_window(n: int, q: int) -> WindowRun:
    assertion = check_assertion_3_10(n, q) if q >= 3 else None
    return WindowRun(n, q, assertion, verify_corollary_3_11(n, q), verify_pak_separation(n, q))
