"""Run the twist identities and cycle lemmas over whole sets of tilings."""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .charges import (
    LEMMA_KEYS,
    LaurentPoly,
    charge_boundary,
    charge_interior,
    p_derivative_at_one,
    p_polynomial,
    verify_cycle_lemmas,
    winding_number,
)
from .lattice import MINUS_I, MINUS_J, PLUS_I, PLUS_J, PLUS_K, Cube, Direction, Quarter, vertex_color
from .region import DuplexRegion
from .sock import Cycle, Sock, project_sock, resolve_trivial_cycles, trivial_cycles
from .tiling import Tiling, components_from_edges, flip_edges
from .twist import pretwist, tau

SELECTORS = {
    "prop1.1": ("prop1.1",),
    "2.1": ("2.1",),
    "3.1": ("3.1",),
    "3.2": ("3.2",),
    "3.3": ("3.3",),
    "3.4": ("3.4", "boundary-sum", "interior-sum"),
    "flips": ("flip-invariance", "sock-coherence"),
}
TILING_CHECKS = (
    "prop1.1", "2.1", "3.1", "3.2", "3.3", "3.4",
    "turning", "color", "boundary-sum", "interior-sum", "p-at-one",
)
ALL_CHECKS = TILING_CHECKS + ("flip-invariance", "sock-coherence")


def resolve_selector(selector: str) -> tuple[str, ...]:
    if selector == "all":
        return ALL_CHECKS
    keys: list[str] = []
    for part in selector.split(","):
        part = part.strip()
        if part not in SELECTORS:
            raise ValueError(f"unknown lemma selector {part!r}")
        keys.extend(k for k in SELECTORS[part] if k not in keys)
    return tuple(keys)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DUPLEX_TWIST_JOBS", "1")))
    except ValueError:
        return 1


def cycle_dominoes(t: Tiling, gamma: Cycle):
    """Horizontal dominoes of ``t`` whose projected edges make up ``gamma``."""
    return [t.cover[Cube(a.x, a.y, f)] for a, _, f in gamma.edges()]


def jewel_identity(t: Tiling, gamma: Cycle, v, u: Direction) -> tuple[Quarter, Quarter, Quarter]:
    """(ccol(v) wind(gamma, v), 2 sum tau(d, d_v), 2 sum tau(d_v, d)) over d in gamma.

    ``v`` must carry a vertical domino of ``t``.
    """
    d_v = t.cover[Cube(v.x, v.y, 0)]
    if not d_v.is_vertical:
        raise ValueError(f"{tuple(v)} does not carry a vertical domino")
    return _jewel_terms(gamma, tuple(cycle_dominoes(t, gamma)), d_v, u)


@lru_cache(maxsize=1 << 16)
def _jewel_terms(gamma: Cycle, doms: tuple, d_v, u: Direction) -> tuple[Quarter, Quarter, Quarter]:
    # the terms depend only on these arguments, and they repeat across tilings
    lhs = Quarter.from_int(vertex_color(d_v.a.cell) * winding_number(gamma, d_v.a.cell))
    fwd = sum((tau(d, d_v, u) for d in doms), Quarter(0)) * 2
    bwd = sum((tau(d_v, d, u) for d in doms), Quarter(0)) * 2
    return lhs, fwd, bwd


@dataclass
class TilingFacts:
    index: int
    pretwists: dict[str, Quarter]
    polynomial: LaurentPoly
    derivative: int
    sock: Sock
    passed: list[str] = field(default_factory=list)
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def twist(self):
        """Common pretwist value; the +i pretwist if they disagree."""
        v = self.pretwists["+i"]
        return v.to_int() if v.is_integral else str(v)


def examine(index: int, t: Tiling, checks: Sequence[str] = TILING_CHECKS) -> TilingFacts:
    """Evaluate the selected per-tiling checks on one tiling."""
    sock = project_sock(t)
    poly = p_polynomial(sock)
    deriv = p_derivative_at_one(poly)
    pts = {str(u): pretwist(t, u) for u in (PLUS_I, PLUS_J, PLUS_K, MINUS_I, MINUS_J)}
    facts = TilingFacts(index, pts, poly, deriv, sock)

    def record(key: str, ok: bool, detail: str) -> None:
        if not ok and key in checks:
            facts.failures.append((key, detail))

    main = [pts["+i"], pts["+j"], pts["+k"]]
    record(
        "prop1.1",
        all(q == deriv for q in main),
        f"P'(1)={deriv}, T^i={main[0]}, T^j={main[1]}, T^k={main[2]}",
    )

    if "2.1" in checks:
        side = [pts[k] for k in ("+i", "-i", "+j", "-j")]
        record("2.1", all(q == deriv for q in side), f"P'(1)={deriv}, T^(+-i,+-j)={[str(q) for q in side]}")
        rep = resolve_trivial_cycles(t)
        for gamma in sock.cycles:
            for v in sorted(sock.jewels):
                for u in (PLUS_I, PLUS_J):
                    lhs, fwd, bwd = jewel_identity(rep, gamma, v, u)
                    record("2.1", lhs == fwd == bwd, f"jewel {tuple(v)}, u={u}: {lhs}, {fwd}, {bwd}")

    total_boundary = Quarter(0)
    total_interior = 0
    for gamma in sock.cycles:
        report = verify_cycle_lemmas(gamma, strict=False)
        for key in LEMMA_KEYS:
            record(key, report.checks[key], f"cycle {gamma.to_json()}: {'; '.join(report.failures)}")
        total_boundary += charge_boundary(gamma)
        total_interior += charge_interior(gamma)
    record("boundary-sum", pts["+k"] == total_boundary, f"T^k={pts['+k']}, sum of boundary charges={total_boundary}")
    record("interior-sum", deriv == total_interior, f"P'(1)={deriv}, sum of interior charges={total_interior}")
    balance = sum(vertex_color(v) for v in sock.cells)
    record("p-at-one", poly(1) == balance, f"P(1)={poly(1)}, black-white={balance}")
    failed = {k for k, _ in facts.failures}
    facts.passed = [k for k in checks if k in TILING_CHECKS and k not in failed]
    return facts


def _examine_chunk(args):
    start, tilings, checks = args
    return [examine(start + k, t, checks) for k, t in enumerate(tilings)]


def examine_all(tilings: Sequence[Tiling], checks: Sequence[str] = TILING_CHECKS, jobs: int = 1) -> list[TilingFacts]:
    """Per-tiling facts in enumeration order, optionally over worker processes."""
    checks = tuple(checks)
    if jobs <= 1 or len(tilings) < 64:
        return [examine(k, t, checks) for k, t in enumerate(tilings)]
    size = max(16, len(tilings) // (jobs * 4))
    chunks = [(s, list(tilings[s : s + size]), checks) for s in range(0, len(tilings), size)]
    out: list[TilingFacts] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_examine_chunk, chunks):
            out.extend(part)
    return out


@dataclass
class FlipReport:
    components: list[list[int]]
    edges: int
    twist_changes: list[tuple[int, int]]
    polynomial_changes: int
    split_socks: list[list[int]]
    trivial_mismatches: list[int]

    @property
    def flip_invariant(self) -> bool:
        return not self.twist_changes

    @property
    def socks_coherent(self) -> bool:
        return not self.split_socks and not self.trivial_mismatches

    def to_json(self) -> dict:
        return {
            "components": len(self.components),
            "component_sizes": sorted((len(c) for c in self.components), reverse=True),
            "flip_edges": self.edges,
            "twist_changes": [list(e) for e in self.twist_changes],
            "polynomial_changes": self.polynomial_changes,
            "polynomial_flip_invariant": self.polynomial_changes == 0,
            "socks_split_across_components": self.split_socks,
            "trivial_cycle_sock_mismatches": self.trivial_mismatches,
        }


def flip_report(tilings: Sequence[Tiling], facts: Sequence[TilingFacts] | None = None) -> FlipReport:
    """Flip graph checks: twist constancy along edges and sock coherence.

    Whether P_t(q) itself survives each flip is counted, not asserted.
    """
    if facts is None:
        facts = examine_all(tilings, checks=())
    edges = flip_edges(tilings)
    comps = components_from_edges(len(tilings), edges)
    twist_changes = [(i, j) for i, j in edges if facts[i].pretwists["+k"] != facts[j].pretwists["+k"]]
    poly_changes = sum(1 for i, j in edges if facts[i].polynomial != facts[j].polynomial)

    comp_of = {}
    for c, members in enumerate(comps):
        for k in members:
            comp_of[k] = c
    by_sock: dict[Sock, list[int]] = {}
    socks = []
    for k, f in enumerate(facts):
        socks.append(f.sock)
        by_sock.setdefault(f.sock, []).append(k)
    split = [ks for ks in by_sock.values() if len({comp_of[k] for k in ks}) > 1]

    index = {t: k for k, t in enumerate(tilings)}
    trivial_bad = []
    for k, t in enumerate(tilings):
        if trivial_cycles(t):
            rep = resolve_trivial_cycles(t)
            m = index.get(rep)
            if project_sock(rep) != socks[k] or m is None or comp_of[m] != comp_of[k]:
                trivial_bad.append(k)
    return FlipReport(comps, len(edges), twist_changes, poly_changes, split, trivial_bad)


@dataclass
class RunReport:
    region: dict
    tiling_count: int
    twist_histogram: dict
    lemma_counts: dict[str, dict[str, int]]
    failures: list[dict]
    seconds: float
    flips: dict | None = None

    @property
    def ok(self) -> bool:
        return all(c["fail"] == 0 for c in self.lemma_counts.values())

    def to_json(self) -> dict:
        out = {
            "region": self.region,
            "tiling_count": self.tiling_count,
            "twist_histogram": {str(k): v for k, v in sorted(self.twist_histogram.items(), key=lambda kv: str(kv[0]))},
            "lemmas": self.lemma_counts,
            "failures": self.failures,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
        }
        if self.flips is not None:
            out["flips"] = self.flips
        return out


def region_summary(r: DuplexRegion) -> dict:
    return {"cells": len(r.base), "cubes": len(r.cubes), "width": r.base.width, "height": r.base.height}


def _histogram(facts: Iterable[TilingFacts]) -> dict:
    hist = Counter(f.twist for f in facts)
    return dict(sorted(hist.items(), key=lambda kv: (isinstance(kv[0], str), kv[0])))


def run_suite(
    region: DuplexRegion,
    tilings: Sequence[Tiling],
    checks: Sequence[str] = ALL_CHECKS,
    jobs: int = 1,
    max_failures: int = 50,
) -> RunReport:
    start = time.perf_counter()
    per_tiling = [c for c in checks if c in TILING_CHECKS]
    facts = examine_all(tilings, per_tiling, jobs)
    counts = {c: {"pass": 0, "fail": 0} for c in checks}
    failures: list[dict] = []
    for f in facts:
        for key in f.passed:
            counts[key]["pass"] += 1
        failed = set()
        for key, detail in f.failures:
            failed.add(key)
            if len(failures) < max_failures:
                failures.append({"index": f.index, "check": key, "detail": detail})
        for key in failed:
            counts[key]["fail"] += 1

    flips = None
    if "flip-invariance" in checks or "sock-coherence" in checks:
        rep = flip_report(tilings, facts)
        flips = rep.to_json()
        if "flip-invariance" in counts:
            counts["flip-invariance"] = {"pass": rep.edges - len(rep.twist_changes), "fail": len(rep.twist_changes)}
            for i, j in rep.twist_changes[:max_failures]:
                failures.append({"index": i, "check": "flip-invariance", "detail": f"twist changes on flip to tiling {j}"})
        if "sock-coherence" in counts:
            bad = len(rep.split_socks) + len(rep.trivial_mismatches)
            counts["sock-coherence"] = {"pass": len(tilings) - bad, "fail": bad}
            for ks in rep.split_socks[:max_failures]:
                failures.append({"index": ks[0], "check": "sock-coherence", "detail": f"equal socks in different components: {ks}"})
            for k in rep.trivial_mismatches[:max_failures]:
                failures.append({"index": k, "check": "sock-coherence", "detail": "resolving trivial cycles changes the sock"})
    return RunReport(
        region_summary(region),
        len(tilings),
        _histogram(facts),
        counts,
        failures,
        time.perf_counter() - start,
        flips,
    )
