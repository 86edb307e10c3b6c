"""Assembling, serializing and printing the reproduction report.

The JSON document is the contract; the text summary is a view of the same
content.  Claims are named by their published labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formats import dumps, map_to_json, ulp_to_json, verdict_to_json, violation_to_json
from .harness import HarnessSummary, run_equivalence_harness
from .paper_suite import DEFAULT_GRID, AssertionReport, WindowRun, run_window


@dataclass(frozen=True)
class SuiteReport:
    runs: tuple[WindowRun, ...]
    equivalences: HarnessSummary | None

    @property
    def reproduced(self) -> bool:
        """Every non-adjudication claim came out as published.  The assertion
        rows are informational and never count against this."""
        ok = all(r.corollary_3_11.reproduced and r.pak_separation.separated for r in self.runs)
        if self.equivalences is not None:
            ok = ok and not self.equivalences.divergences
        return ok


def verify_paper(grid=DEFAULT_GRID, max_points: int = 3, samples: int = 0,
                 seed: int = 0) -> SuiteReport:
    runs = tuple(run_window(n, q) for n, q in grid)
    eq = run_equivalence_harness(max_points, samples, seed) if max_points >= 2 else None
    return SuiteReport(runs, eq)


def _ids(X, pts) -> list[int]:
    return [X.index(x) for x in sorted(pts)]


def assertion_to_json(a: AssertionReport, run: WindowRun) -> dict:
    p = run.corollary_3_11.map
    E, B = p.source, p.target
    return {
        "claim": "Assertion 3.10-1",
        "n": a.n,
        "q": a.q,
        "verdict": a.verdict,
        "boundary_points": _ids(E, E.boundary),
        "rows": [
            {
                "base": B.index(r.base),
                "base_label": B.label(r.base),
                "fiber": _ids(E, r.fiber),
                "lhs": _ids(E, r.lhs),
                "rhs": _ids(E, r.rhs),
                "diff": _ids(E, r.diff),
                "interior_diff": _ids(E, r.interior_diff),
                "equal": r.equal,
                "boundary_tainted": r.boundary_tainted,
            }
            for r in a.rows
        ],
    }


def window_run_to_json(run: WindowRun) -> dict:
    c, s = run.corollary_3_11, run.pak_separation
    p = c.map
    untainted = c.han_untainted_failure
    return {
        "n": run.n,
        "q": run.q,
        "assertion_3_10": None if run.assertion is None else assertion_to_json(run.assertion, run),
        "corollary_3_11": {
            "claim": "Corollary 3.11",
            "wl_iso": verdict_to_json(c.wl_iso, p),
            "surjective": c.surjective,
            "han_pseudo": verdict_to_json(c.han_pseudo, p),
            "han_failures": [
                dict(violation_to_json(v, p), boundary_tainted=t) for v, t in c.han_failures
            ],
            "han_untainted_failure": None if untainted is None else violation_to_json(untainted, p),
            "ulp": ulp_to_json(c.ulp, p),
            "witness_path": None if c.witness_path is None
            else [p.target.index(b) for b in c.witness_path],
            "witness_start": 0,
            "witness_lift_count": c.witness_lift_count,
            "reproduced": c.reproduced,
        },
        "pak_separation": {
            "claim": "Pakdaman separation",
            "pak_pseudo": verdict_to_json(s.pak_pseudo, p),
            "covering": verdict_to_json(s.covering, p),
            "reproduced": s.separated,
        },
    }


def harness_to_json(h: HarnessSummary) -> dict:
    return {
        "claim": "Theorem 3.5",
        "max_points": h.max_points,
        "samples": h.samples,
        "seed": h.seed,
        "instances": h.instances,
        "exhaustive_instances": h.exhaustive_count,
        "sampled_instances": h.sampled_count,
        "class_counts": h.class_counts,
        "ulp_count": h.ulp_count,
        "relation_checks": h.relation_checks,
        "agreements": h.agreements,
        "divergences": [
            {
                "relation": name,
                "instance": inst.label,
                "map": map_to_json(inst.map),
                "verdicts": {k.value: verdict_to_json(v, inst.map) for k, v in inst.verdicts.items()},
                "ulp": ulp_to_json(inst.ulp, inst.map),
            }
            for name, inst in h.divergences
        ],
        "reproduced": not h.divergences,
    }


def report_to_json(r: SuiteReport) -> dict:
    return {
        "runs": [window_run_to_json(run) for run in r.runs],
        "equivalences": None if r.equivalences is None else harness_to_json(r.equivalences),
        "reproduced": r.reproduced,
    }


def _mark(ok: bool) -> str:
    return "ok  " if ok else "FAIL"


def harness_text(h: HarnessSummary) -> list[str]:
    lines = [
        f"Theorem 3.5 harness: {h.instances} instances "
        f"({h.exhaustive_count} exhaustive up to {h.max_points} points, "
        f"{h.sampled_count} sampled, seed {h.seed})",
        "  class counts: " + ", ".join(f"{k}={v}" for k, v in h.class_counts.items())
        + f", ulp={h.ulp_count}",
    ]
    for name, n in h.relation_checks.items():
        bad = sum(1 for r, _ in h.divergences if r == name)
        lines.append(f"  [{_mark(not bad)}] {name}: {n - bad}/{n}")
    lines.append(f"  {len(h.divergences)} divergences")
    for name, inst in h.divergences:
        lines.append(f"    {name} at {inst.label}")
    return lines


def report_text(r: SuiteReport) -> str:
    out = []
    for run in r.runs:
        c, s = run.corollary_3_11, run.pak_separation
        p = c.map
        E, B = p.source, p.target
        out.append(f"window map [0,{run.q * run.n}] -> C_{run.n} (n={run.n}, q={run.q})")
        if run.assertion is not None:
            a = run.assertion
            out.append(f"  Assertion 3.10-1 (adjudication): {a.verdict}")
            for row in a.rows:
                diff = ",".join(E.label(x) for x in sorted(row.diff))
                out.append(
                    f"    b={B.label(row.base)}: equal={row.equal} diff={{{diff}}} "
                    f"boundary_tainted={row.boundary_tainted}"
                )
        ulp = c.ulp
        cx = ulp.counterexample
        cx_text = "none" if cx is None else (
            "(" + ",".join(B.label(b) for b in cx.base_path) + f") from {E.label(cx.start)}"
            f" with {cx.lift_count} lifts"
        )
        out.append(
            f"  [{_mark(c.reproduced)}] Corollary 3.11: wl_iso={c.wl_iso.holds} "
            f"surjective={c.surjective} han_pseudo={c.han_pseudo.holds} ulp={ulp.holds} "
            f"(L_max={ulp.max_length_checked}, counterexample {cx_text}); "
            f"lifts of (c0,c{run.n - 1}) from 0: {c.witness_lift_count}"
        )
        out.append(
            f"  [{_mark(s.separated)}] Pakdaman separation: pak_pseudo={s.pak_pseudo.holds} "
            f"covering={s.covering.holds}"
        )
    if r.equivalences is not None:
        out += harness_text(r.equivalences)
    out.append("all claims reproduced" if r.reproduced else "some claims NOT reproduced")
    return "\n".join(out) + "\n"


def report_json_text(r: SuiteReport) -> str:
    return dumps(report_to_json(r))

