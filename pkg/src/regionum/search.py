"""Exhaustive minimisation of region crossing change costs.

The multi-region index of a diagram is the cheapest region set whose changes
unknot it, where a set costs the total number of boundary crossings of its
regions.  Targets (sets of crossings to change) are visited by increasing
size; each unknotting target is solved over GF(2) and its coset minimised.
Since every changed crossing lies on a chosen region, a set's cost is at
least the size of its target, so the search stops once ``|T|`` reaches the
best cost found.
"""

from __future__ import annotations

import itertools
import json
import math
import threading
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .diagram import Diagram, apply_region_changes, change_crossings, is_reduced
from .errors import NoSolution, TooLarge
from .goeritz import mg2 as compute_mg2
from .invariants import BRACKET_CAP, UnknotCertificate, Verdict, is_unknot
from .regions import as_bits, incidence_system, min_cost_in_coset, solve_for_target

SEARCH_CAP = 16


class UnknotCache:
    """Unknot certificates keyed by diagram, optionally persisted as JSON lines."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._store: dict[str, UnknotCertificate] = {}
        self._lock = threading.Lock()
        self.hits = 0
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                if line.strip():
                    rec = json.loads(line)
                    self._store[rec["key"]] = UnknotCertificate.from_json(rec["certificate"])

    def __len__(self) -> int:
        return len(self._store)

    def check(self, d: Diagram, cap: int = BRACKET_CAP) -> UnknotCertificate:
        key = d.key()
        cert = self._store.get(key)
        if cert is not None:
            self.hits += 1
            return cert
        cert = is_unknot(d, cap)
        with self._lock:
            if key not in self._store:
                self._store[key] = cert
                if self.path:
                    with self.path.open("a") as fh:
                        fh.write(json.dumps({"key": key, "certificate": cert.to_json()}) + "\n")
        return cert


def _check_cap(d: Diagram, cap: int) -> None:
    if d.crossing_count > cap:
        raise TooLarge(f"{d.crossing_count} crossings exceed the search cap {cap}")


def _targets_of_size(c: int, k: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(c), k)


def _certify_level(
    d: Diagram, targets: list[tuple[int, ...]], cache: UnknotCache, threads: int
) -> list[UnknotCertificate]:
    def run(t: tuple[int, ...]) -> UnknotCertificate:
        return cache.check(change_crossings(d, t))

    if threads > 1 and len(targets) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run, targets))
    return [run(t) for t in targets]


def enumerate_unknotting_targets(
    d: Diagram, cost_cap: int | None = None, cap: int = SEARCH_CAP,
    cache: UnknotCache | None = None,
) -> Iterator[tuple[tuple[int, ...], UnknotCertificate]]:
    """Unknotting crossing sets with fewer than ``cost_cap`` members, smallest first."""
    _check_cap(d, cap)
    cache = UnknotCache() if cache is None else cache
    c = d.crossing_count
    limit = c + 1 if cost_cap is None else min(cost_cap, c + 1)
    for k in range(limit):
        for t in _targets_of_size(c, k):
            cert = cache.check(change_crossings(d, t))
            if cert.verdict is Verdict.UNKNOT:
                yield t, cert


@dataclass
class SearchResult:
    mri: int
    mri_witness: tuple[int, ...]
    reg: float
    reg_witness: int | None
    targets_examined: int
    certificates: dict[tuple[int, ...], UnknotCertificate] = field(default_factory=dict, repr=False)


def reg_of_diagram(
    d: Diagram, cap: int = SEARCH_CAP, cache: UnknotCache | None = None
) -> tuple[float, int | None]:
    """Cheapest single unknotting region as ``(cost, region id)``; ``(inf, None)`` if none."""
    _check_cap(d, cap)
    cache = UnknotCache() if cache is None else cache
    for r in sorted(d.regions, key=lambda r: (r.cost, r.id)):
        if cache.check(apply_region_changes(d, [r.id])).is_unknot:
            return r.cost, r.id
    return math.inf, None


def mri_of_diagram(
    d: Diagram, prune: bool = True, cap: int = SEARCH_CAP,
    cache: UnknotCache | None = None, threads: int = 1,
) -> SearchResult:
    _check_cap(d, cap)
    cache = UnknotCache() if cache is None else cache
    sys = incidence_system(d)
    c = d.crossing_count
    best: tuple[int, tuple[int, ...]] | None = None
    certs: dict[tuple[int, ...], UnknotCertificate] = {}
    examined = 0
    for k in range(c + 1):
        if prune and best is not None and k >= best[0]:
            break
        level = list(_targets_of_size(c, k))
        for t, cert in zip(level, _certify_level(d, level, cache, threads)):
            examined += 1
            certs[t] = cert
            if cert.verdict is not Verdict.UNKNOT:
                continue
            s = solve_for_target(sys, as_bits(t))
            if s is None:
                continue
            witness, cost = min_cost_in_coset(d, s, sys)
            if best is None or (cost, witness) < best:
                best = (cost, witness)
    if best is None:
        raise NoSolution("no region set unknots this diagram")
    reg, reg_witness = reg_of_diagram(d, cap, cache)
    return SearchResult(best[0], best[1], reg, reg_witness, examined, certs)


@dataclass(frozen=True)
class Bound:
    value: float
    provenance: tuple[str, ...]

    def to_json(self) -> dict:
        v = self.value
        return {"value": v if math.isfinite(v) else None, "provenance": list(self.provenance)}


@dataclass(frozen=True)
class BoundBracket:
    lower: Bound
    upper: Bound

    @property
    def tight(self) -> bool:
        return self.lower.value == self.upper.value


def _pick(candidates: list[tuple[float, str]], use_max: bool) -> Bound:
    if not candidates:
        return Bound(0, ())
    value = (max if use_max else min)(v for v, _ in candidates)
    return Bound(value, tuple(tag for v, tag in candidates if v == value))


def bound_bracket(d: Diagram, rec=None, result: SearchResult | None = None,
                  mg2: int | None = None) -> BoundBracket:
    """Lower and upper bounds on the knot's multi-region index, with their sources.

    ``rec`` may carry ``unknotting_number``, ``signature`` and ``conway_a2``.
    """
    result = result or mri_of_diagram(d)
    mg2 = compute_mg2(d) if mg2 is None else mg2
    upper = [(result.mri, "DiagramSearch")]
    if is_reduced(d):
        upper.append((2 * d.crossing_count, "TwoC"))
    if result.mri == 0:
        return BoundBracket(Bound(0, ()), _pick(upper, use_max=False))
    lower = [(2, "Trivial2"), (mg2 + 1, "Mg2Plus1")]
    u = getattr(rec, "unknotting_number", None)
    if u is not None:
        lower.append((u, "UnknottingNumber"))
    sigma, a2 = getattr(rec, "signature", None), getattr(rec, "conway_a2", None)
    if sigma == 0 and a2 is not None and a2 % 2 == 1:
        lower.append((3, "KKS3"))
    return BoundBracket(_pick(lower, use_max=True), _pick(upper, use_max=False))


@dataclass
class TheoremReport:
    crossings: int
    mri: int
    mri_witness: tuple[int, ...]
    reg: float
    mg2: int
    det: int
    bracket: BoundBracket
    checks: dict[str, bool | None]

    @property
    def violations(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]


def verify_theorems(d: Diagram, rec=None, result: SearchResult | None = None) -> TheoremReport:
    """Check the region-index inequalities on one diagram; None marks a vacuous check."""
    from .goeritz import goeritz_matrices

    result = result or mri_of_diagram(d)
    g = goeritz_matrices(d)
    mri, reg, c = result.mri, result.reg, d.crossing_count
    nontrivial = mri > 0
    u = getattr(rec, "unknotting_number", None)
    checks: dict[str, bool | None] = {
        "thm1": mri <= 2 * c if is_reduced(d) else None,
        "thm2": g.mg2 < mri if nontrivial else None,
        "ineq2": u <= mri if u is not None else None,
        "ineq3": mri >= 2 if nontrivial else None,
        "mri_reg": ((mri == 2) == (reg == 2) and (mri == 3) == (reg == 3)) if nontrivial else None,
        "mri_le_reg": mri <= reg,
    }
    bracket = bound_bracket(d, rec, result, g.mg2)
    checks["bracket"] = bracket.lower.value <= bracket.upper.value
    return TheoremReport(c, mri, result.mri_witness, reg, g.mg2, g.det, bracket, checks)
