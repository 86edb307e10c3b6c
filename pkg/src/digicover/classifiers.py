"""Membership tests for the six morphism classes, with checkable witnesses.

Every checker returns a :class:`ClassVerdict`.  A failing verdict carries a
:class:`Violation` naming the definition condition that broke and the points
where it broke; :func:`replay` re-evaluates that condition from scratch
through the public map API, so a witness can be audited without trusting
the checker that produced it.

Condition numbers follow the three-part decomposition of the covering-style
definitions (1: the neighborhoods of the fiber cover the preimage of the base
neighborhood, 2: they are pairwise disjoint, 3: each restriction is the right
kind of isomorphism).  Condition 0 marks a failed precondition (continuity or
surjectivity).  The single-condition classes (local, PL and WL isomorphism)
report condition 1 at a source point.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .image import Point, neighborhood_closed
from .maps import (
    DigitalMap,
    InvalidMapError,
    continuity_violation,
    is_continuous,
    is_isomorphism,
    is_surjective,
    missed_points,
    restrict,
    restrict_to,
    sub_image,
    subgraphs_isomorphic,
)

#: fibers up to this size get an exact maximum sheet search by default
EXHAUSTIVE_SHEET_LIMIT = 12


class Kind(str, enum.Enum):
    COVERING = "covering"
    LOCAL_ISO = "local-iso"
    PL_ISO = "pl-iso"
    WL_ISO = "wl-iso"
    HAN_PSEUDO = "han-pseudo"
    PAK_PSEUDO = "pak-pseudo"


@dataclass(frozen=True)
class Violation:
    condition: int
    reason: str
    base: Point | None = None
    point: Point | None = None
    other: Point | None = None
    points: tuple[Point, ...] = ()
    # pseudocovering only: every fiber point with the condition it fails
    sheet_failures: tuple[tuple[Point, int], ...] = ()


@dataclass(frozen=True)
class Sheet:
    base: Point
    sheets: tuple[Point, ...]


@dataclass(frozen=True)
class ClassVerdict:
    kind: Kind
    holds: bool
    continuous: bool
    surjective: bool
    violation: Violation | None = None
    decomposition: tuple[Sheet, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.holds


# -- fast set-level predicates -----------------------------------------------


def _nbhd(X, x) -> frozenset[Point]:
    return X._nbrs[x] | {x}


def _iso_onto(p: DigitalMap, S: frozenset, T: frozenset) -> bool:
    """p|S is a bijection onto T preserving adjacency in both directions."""
    a = p.assignment
    img = {a[x] for x in S}
    if len(img) != len(S) or img != T:
        return False
    src, tgt = p.source._nbrs, p.target._nbrs
    for x in S:
        if {a[y] for y in src[x] & S} != tgt[a[x]] & T:
            return False
    return True


def _wl_on(p: DigitalMap, S: frozenset) -> Point | None:
    """First x of S where p, restricted to the subimage on S, is not
    isomorphic from N_S(x) onto its image."""
    a = p.assignment
    for x in sorted(S):
        Nx = _nbhd(p.source, x) & S
        if not _iso_onto(p, Nx, frozenset(a[y] for y in Nx)):
            return x
    return None


def _precondition(p: DigitalMap, need_continuous: bool, need_surjective: bool):
    cont = is_continuous(p)
    surj = is_surjective(p)
    bad = None
    if need_continuous and not cont:
        x, y = continuity_violation(p)
        bad = Violation(0, "continuity", point=x, other=y, points=(x, y))
    elif need_surjective and not surj:
        bad = Violation(0, "surjectivity", points=missed_points(p))
    return cont, surj, bad


# -- covering-style decompositions ---------------------------------------------


def _decomposition_failure(p: DigitalMap, b: Point, sheets, cond3) -> Violation | None:
    """Conditions 1-3 for one base point with the given sheet points."""
    src = p.source
    nb = {e: _nbhd(src, e) for e in sheets}
    union = frozenset().union(*nb.values()) if nb else frozenset()
    rhs = p.preimage(_nbhd(p.target, b))
    if union != rhs:
        return Violation(1, "union", base=b, points=tuple(sorted(union ^ rhs)))
    for ei, ej in itertools.combinations(sheets, 2):
        common = nb[ei] & nb[ej]
        if common:
            return Violation(2, "disjointness", base=b, point=ei, other=ej,
                             points=tuple(sorted(common)))
    for e in sheets:
        reason = cond3(e, nb[e], b)
        if reason:
            return Violation(3, reason, base=b, point=e, points=tuple(sorted(nb[e])))
    return None


def _covering_cond3(p: DigitalMap):
    def cond3(e, Ne, b):
        return None if _iso_onto(p, Ne, _nbhd(p.target, b)) else "isomorphism"
    return cond3


def _han_cond3(p: DigitalMap):
    def cond3(e, Ne, b):
        if not p.image_of(Ne) <= _nbhd(p.target, b):
            return "codomain"
        return None if _wl_on(p, Ne) is None else "wl-isomorphism"
    return cond3


def covering_base_violation(p: DigitalMap, b: Point) -> Violation | None:
    """Conditions 1-3 of the covering definition at one base point."""
    return _decomposition_failure(p, b, p.fiber(b), _covering_cond3(p))


def han_base_violation(p: DigitalMap, b: Point) -> Violation | None:
    """Conditions 1-3 of Han's pseudo-covering definition at one base point."""
    return _decomposition_failure(p, b, p.fiber(b), _han_cond3(p))


def check_covering(p: DigitalMap) -> ClassVerdict:
    """Covering map test, with every fiber point taken as a sheet.

    Taking the whole fiber is not a restriction.  Any e in p^-1(b) lies in
    p^-1(N(b)), hence by condition 1 in some N(e_i); condition 3 makes p
    injective on N(e_i), and p(e) = p(e_i) = b, so e = e_i.
    """
    cont, surj, bad = _precondition(p, True, True)
    if bad:
        return ClassVerdict(Kind.COVERING, False, cont, surj, bad)
    cond3 = _covering_cond3(p)
    decomp = []
    for b in p.target.points:
        fib = p.fiber(b)
        v = _decomposition_failure(p, b, fib, cond3)
        if v:
            return ClassVerdict(Kind.COVERING, False, cont, surj, v)
        decomp.append(Sheet(b, fib))
    return ClassVerdict(Kind.COVERING, True, cont, surj, decomposition=tuple(decomp))


def check_han_pseudocover(p: DigitalMap) -> ClassVerdict:
    """Han's pseudo-covering: the covering decomposition with each sheet
    restriction N(e_i) -> N(b) only required to be a WL-isomorphism.

    Continuity is not part of the definition; it is recorded on the verdict.
    The sheet set is the whole fiber by the same argument as for coverings
    (a WL-isomorphism is injective on N(e_i) itself).
    """
    cont, surj, bad = _precondition(p, False, True)
    if bad:
        return ClassVerdict(Kind.HAN_PSEUDO, False, cont, surj, bad)
    cond3 = _han_cond3(p)
    decomp = []
    for b in p.target.points:
        fib = p.fiber(b)
        v = _decomposition_failure(p, b, fib, cond3)
        if v:
            return ClassVerdict(Kind.HAN_PSEUDO, False, cont, surj, v)
        decomp.append(Sheet(b, fib))
    return ClassVerdict(Kind.HAN_PSEUDO, True, cont, surj, decomposition=tuple(decomp))


# -- pointwise classes ---------------------------------------------------------


def check_local_iso(p: DigitalMap) -> ClassVerdict:
    cont, surj, bad = _precondition(p, True, False)
    if bad:
        return ClassVerdict(Kind.LOCAL_ISO, False, cont, surj, bad)
    for x in p.source.points:
        Nx = _nbhd(p.source, x)
        if not _iso_onto(p, Nx, _nbhd(p.target, p(x))):
            v = Violation(1, "local-isomorphism", point=x, points=tuple(sorted(Nx)))
            return ClassVerdict(Kind.LOCAL_ISO, False, cont, surj, v)
    return ClassVerdict(Kind.LOCAL_ISO, True, cont, surj)


def check_pl_iso(p: DigitalMap) -> ClassVerdict:
    """Image of each N(x) abstractly isomorphic to N(p(x)) inside the target.

    For a continuous map p(N(x)) is a subset of N(p(x)), so equal sizes
    already force equality; the general isomorphism search is kept for the
    definition's sake but the two set tests decide almost every case.
    """
    cont, surj, bad = _precondition(p, True, False)
    if bad:
        return ClassVerdict(Kind.PL_ISO, False, cont, surj, bad)
    tgt = p.target
    for x in p.source.points:
        Nx = _nbhd(p.source, x)
        img = p.image_of(Nx)
        Nb = _nbhd(tgt, p(x))
        if img == Nb:
            continue
        if len(img) != len(Nb) or not subgraphs_isomorphic(sub_image(tgt, img), sub_image(tgt, Nb)):
            v = Violation(1, "pl-isomorphism", point=x, points=tuple(sorted(Nx)))
            return ClassVerdict(Kind.PL_ISO, False, cont, surj, v)
    return ClassVerdict(Kind.PL_ISO, True, cont, surj)


def check_wl_iso(p: DigitalMap) -> ClassVerdict:
    cont, surj = is_continuous(p), is_surjective(p)
    for x in p.source.points:
        Nx = _nbhd(p.source, x)
        if not _iso_onto(p, Nx, p.image_of(Nx)):
            v = Violation(1, "wl-isomorphism", point=x, points=tuple(sorted(Nx)))
            return ClassVerdict(Kind.WL_ISO, False, cont, surj, v)
    return ClassVerdict(Kind.WL_ISO, True, cont, surj)


# -- Pakdaman pseudocovering ------------------------------------------------------


def _pak_sheet_failure(p: DigitalMap, e: Point, rhs: frozenset) -> int:
    """0 if e can serve as a sheet over p(e), else the first failed condition."""
    Ne = _nbhd(p.source, e)
    if not Ne <= rhs:
        return 1
    if not _iso_onto(p, Ne, p.image_of(Ne)):
        return 3
    return 0


def _max_disjoint(cands: list[Point], nb: dict, exhaustive: bool) -> tuple[Point, ...]:
    """A largest pairwise-disjoint family of candidate sheets.

    Exact branch-and-bound search (first optimum in canonical order) for
    small candidate lists or when forced; a greedy canonical pass otherwise.
    """
    if not exhaustive and len(cands) > EXHAUSTIVE_SHEET_LIMIT:
        chosen: list[Point] = []
        for e in cands:
            if all(not (nb[e] & nb[c]) for c in chosen):
                chosen.append(e)
        return tuple(chosen)

    best: list[Point] = []
    cur: list[Point] = []

    def go(i: int) -> None:
        nonlocal best
        if len(cur) + (len(cands) - i) <= len(best):
            return
        if i == len(cands):
            best = list(cur)
            return
        e = cands[i]
        if all(not (nb[e] & nb[c]) for c in cur):
            cur.append(e)
            go(i + 1)
            cur.pop()
        go(i + 1)

    go(0)
    return tuple(best)


def check_pak_pseudocover(
    p: DigitalMap, exhaustive: bool = False, full_fiber: bool = False
) -> ClassVerdict:
    """Pakdaman's pseudocovering.

    The sheet family is existential, and conditions 1 and 3 constrain each
    sheet on its own while condition 2 is pairwise, so a single admissible
    sheet per base point already satisfies the definition.  The decomposition
    reported on success is a largest disjoint family of admissible sheets.

    ``full_fiber`` switches to the stricter reading in which the family must
    be all of p^-1(b).  ``exhaustive`` forces the exact maximum search for
    every fiber size.
    """
    cont, surj, bad = _precondition(p, False, True)
    if bad:
        return ClassVerdict(Kind.PAK_PSEUDO, False, cont, surj, bad)
    src = p.source
    decomp = []
    for b in p.target.points:
        fib = p.fiber(b)
        rhs = p.preimage(_nbhd(p.target, b))
        fails = [(e, _pak_sheet_failure(p, e, rhs)) for e in fib]
        good = [e for e, c in fails if c == 0]
        nb = {e: _nbhd(src, e) for e in fib}
        if full_fiber:
            bad_sheets = [(e, c) for e, c in fails if c]
            if bad_sheets:
                e, c = bad_sheets[0]
                v = Violation(c, "sheet", base=b, point=e, points=tuple(sorted(nb[e])),
                              sheet_failures=tuple(bad_sheets))
                return ClassVerdict(Kind.PAK_PSEUDO, False, cont, surj, v)
            for ei, ej in itertools.combinations(fib, 2):
                if nb[ei] & nb[ej]:
                    v = Violation(2, "disjointness", base=b, point=ei, other=ej,
                                  points=tuple(sorted(nb[ei] & nb[ej])))
                    return ClassVerdict(Kind.PAK_PSEUDO, False, cont, surj, v)
            decomp.append(Sheet(b, fib))
            continue
        if not good:
            v = Violation(min(c for _, c in fails), "no-sheet", base=b, points=fib,
                          sheet_failures=tuple(fails))
            return ClassVerdict(Kind.PAK_PSEUDO, False, cont, surj, v)
        decomp.append(Sheet(b, _max_disjoint(good, nb, exhaustive)))
    return ClassVerdict(Kind.PAK_PSEUDO, True, cont, surj, decomposition=tuple(decomp))


CHECKERS = {
    Kind.COVERING: check_covering,
    Kind.LOCAL_ISO: check_local_iso,
    Kind.PL_ISO: check_pl_iso,
    Kind.WL_ISO: check_wl_iso,
    Kind.HAN_PSEUDO: check_han_pseudocover,
    Kind.PAK_PSEUDO: check_pak_pseudocover,
}


def classify(p: DigitalMap, kinds: Iterable[Kind] = tuple(Kind)) -> dict[Kind, ClassVerdict]:
    return {Kind(k): CHECKERS[Kind(k)](p) for k in kinds}


# -- witness replay ----------------------------------------------------------------


def _replay_iso_onto(p: DigitalMap, S, T) -> bool:
    try:
        return is_isomorphism(restrict_to(p, S, T))
    except InvalidMapError:
        return False


def _replay_wl(p: DigitalMap) -> Point | None:
    for x in p.source.points:
        if not is_isomorphism(restrict(p, neighborhood_closed(p.source, x))):
            return x
    return None


def replay(p: DigitalMap, verdict: ClassVerdict) -> bool:
    """Re-evaluate the condition cited by a failing verdict.

    Returns True iff the violation is reproduced at the cited points.  Uses
    the subimage/restriction API rather than the checkers' set shortcuts.
    """
    v = verdict.violation
    if verdict.holds or v is None:
        raise ValueError("only failing verdicts carry a violation to replay")
    E, B = p.source, p.target
    N = neighborhood_closed

    if v.condition == 0:
        if v.reason == "continuity":
            x, y = v.point, v.other
            return y in E.nbrs(x) and p(x) != p(y) and p(y) not in B.nbrs(p(x))
        if v.reason == "surjectivity":
            hit = set(p.assignment.values())
            return bool(v.points) and all(b not in hit for b in v.points)
        return False

    if verdict.kind in (Kind.LOCAL_ISO, Kind.PL_ISO, Kind.WL_ISO):
        x = v.point
        Nx = N(E, x)
        if tuple(sorted(Nx)) != v.points:
            return False
        if verdict.kind is Kind.LOCAL_ISO:
            return not _replay_iso_onto(p, Nx, N(B, p(x)))
        if verdict.kind is Kind.WL_ISO:
            return not is_isomorphism(restrict(p, Nx))
        img = p.image_of(Nx)
        return not subgraphs_isomorphic(sub_image(B, img), sub_image(B, N(B, p(x))))

    b = v.base
    fib = [e for e in E.points if p(e) == b]

    if verdict.kind is Kind.PAK_PSEUDO:
        rhs = {e for e in E.points if p(e) in N(B, b)}

        def fails(e, c):
            Ne = N(E, e)
            if c == 1:
                return not Ne <= rhs
            if c == 3:
                return not is_isomorphism(restrict(p, Ne))
            return False

        if v.reason == "no-sheet":
            cited = dict(v.sheet_failures)
            return set(cited) == set(fib) and all(fails(e, c) for e, c in cited.items())
        if v.reason == "sheet":
            return v.point in fib and fails(v.point, v.condition)
        if v.condition == 2:
            return bool(N(E, v.point) & N(E, v.other)) and {v.point, v.other} <= set(fib)
        return False

    # covering and Han pseudo-covering: the sheets are the whole fiber
    if v.condition == 1:
        lhs = set().union(*(N(E, e) for e in fib))
        rhs = {e for e in E.points if p(e) in N(B, b)}
        return tuple(sorted(lhs ^ rhs)) == v.points and bool(v.points)
    if v.condition == 2:
        common = N(E, v.point) & N(E, v.other)
        return (v.point in fib and v.other in fib and v.point != v.other
                and tuple(sorted(common)) == v.points and bool(common))
    if v.condition == 3:
        e = v.point
        if e not in fib:
            return False
        if verdict.kind is Kind.COVERING:
            return not _replay_iso_onto(p, N(E, e), N(B, b))
        try:
            local = restrict_to(p, N(E, e), N(B, b))
        except InvalidMapError:
            return v.reason == "codomain"
        return _replay_wl(local) is not None
    return False
