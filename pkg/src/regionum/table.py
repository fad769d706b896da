"""Knot table ingestion, batch verification and JSON reports."""

from __future__ import annotations

import csv
import logging
import math
import time
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

from .diagram import Diagram, parse_pd
from .errors import RegionumError, TooLarge
from .goeritz import determinant
from .search import SEARCH_CAP, TheoremReport, UnknotCache, mri_of_diagram, verify_theorems

log = logging.getLogger(__name__)

SCHEMA = "regionum/1"
HEADER = ["name", "pd", "unknotting_number", "signature", "conway_a2", "determinant"]


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd: str
    unknotting_number: int | None = None
    signature: int | None = None
    conway_a2: int | None = None
    determinant: int | None = None

    @cached_property
    def diagram(self) -> Diagram:
        return parse_pd(self.pd, self.name)


def _opt_int(text: str | None) -> int | None:
    text = (text or "").strip()
    return int(text) if text else None


def read_records(rows: Iterable[dict[str, str]], diagnostics: list[str] | None = None) -> list[KnotRecord]:
    diagnostics = diagnostics if diagnostics is not None else []
    out = []
    for n, row in enumerate(rows, start=2):
        try:
            rec = KnotRecord(
                name=(row.get("name") or "").strip(),
                pd=(row.get("pd") or "").strip(),
                unknotting_number=_opt_int(row.get("unknotting_number")),
                signature=_opt_int(row.get("signature")),
                conway_a2=_opt_int(row.get("conway_a2")),
                determinant=_opt_int(row.get("determinant")),
            )
            d = rec.diagram
            if rec.determinant is not None:
                got = determinant(d)
                if got != rec.determinant:
                    raise RegionumError(f"determinant {got} disagrees with tabulated {rec.determinant}")
        except (RegionumError, ValueError) as exc:
            msg = f"row {n} ({row.get('name', '?')}): {type(exc).__name__}: {exc}"
            log.warning(msg)
            diagnostics.append(msg)
            continue
        out.append(rec)
    return out


def ingest_csv(path: str | Path, diagnostics: list[str] | None = None) -> list[KnotRecord]:
    """Validated records from a knot table; bad rows are skipped with a diagnostic."""
    diagnostics = diagnostics if diagnostics is not None else []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            diagnostics.append(f"{path}: empty file")
            log.warning(diagnostics[-1])
            return []
        missing = [h for h in ("name", "pd") if h not in reader.fieldnames]
        if missing:
            raise ValueError(f"{path}: missing columns {missing}")
        return read_records(reader, diagnostics)


def bundled_table(name: str = "knots9.csv") -> Path:
    """Path of a table shipped with the package (``knots9.csv`` or ``diagrams.csv``)."""
    return Path(str(resources.files("regionum") / "data" / name))


def lookup(name: str) -> KnotRecord:
    for table in ("knots9.csv", "diagrams.csv"):
        for rec in ingest_csv(bundled_table(table)):
            if rec.name == name:
                return rec
    raise KeyError(f"no bundled knot named {name!r}")


def _num(x: float) -> int | str:
    return int(x) if math.isfinite(x) else "inf"


def report_json(name: str | None, d: Diagram, rep: TheoremReport) -> dict:
    c = rep.checks
    return {
        "schema": SCHEMA,
        "name": name,
        "crossings": d.crossing_count,
        "mri": rep.mri,
        "mri_witness": list(rep.mri_witness),
        "reg": _num(rep.reg),
        "mg2": rep.mg2,
        "det": rep.det,
        "lower": rep.bracket.lower.to_json(),
        "upper": rep.bracket.upper.to_json(),
        "tight": rep.bracket.tight,
        "checks": {k: c[k] for k in ("thm1", "thm2", "ineq2", "ineq3")},
    }


@dataclass
class BatchSummary:
    reports: list[dict] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    violations: list[tuple[str, str]] = field(default_factory=list)
    tight: int = 0
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "knots": len(self.reports),
            "tight": self.tight,
            "violations": [list(v) for v in self.violations],
            "skipped": self.skipped,
            "seconds": round(self.seconds, 3),
            "reports": self.reports,
        }


def batch_verify(
    records: Iterable[KnotRecord], cap: int = SEARCH_CAP, prune: bool = True,
    cache: UnknotCache | None = None, threads: int = 1,
) -> BatchSummary:
    cache = UnknotCache() if cache is None else cache
    out = BatchSummary()
    start = time.perf_counter()
    for rec in records:
        d = rec.diagram
        try:
            res = mri_of_diagram(d, prune=prune, cap=cap, cache=cache, threads=threads)
        except TooLarge as exc:
            out.skipped.append(f"{rec.name}: {exc}")
            continue
        rep = verify_theorems(d, rec, res)
        out.reports.append(report_json(rec.name, d, rep))
        out.tight += rep.bracket.tight
        out.violations.extend((rec.name, v) for v in rep.violations)
    out.seconds = time.perf_counter() - start
    return out
