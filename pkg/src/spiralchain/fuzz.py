"""Randomized falsification loop for the spiral-chain coloring.

Every generated graph is colored under each swept (start, direction)
setting.  Any setting that does not end in ``success`` is shrunk by
regenerating the same seed at smaller sizes (earlier stages of the same
growth run) until the smallest size that still misbehaves is found.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .coloring import FAIL, FALLBACK, SUCCESS, color_graph
from .document import serialize_graph
from .graph import CubicGraph
from .oracle import verify
from .spiral import ACW, CW
from .generate import gen_random, size_for_seed

GENERATOR = "k4-growth-v1"


@dataclass
class FuzzRecord:
    seed: int
    n: int
    generator: str
    graph: str  # graph document text
    settings: list[dict]
    reports: list[dict]
    verified: list[bool]
    shrunk: Optional[dict] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "FuzzRecord":
        return cls(**json.loads(line))

    @property
    def outcomes(self) -> list[str]:
        return [r["outcome"] for r in self.reports]


@dataclass
class FuzzSummary:
    records: list[FuzzRecord] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {SUCCESS: 0, FALLBACK: 0, FAIL: 0}
        for r in self.records:
            for o in r.outcomes:
                out[o] += 1
        return out

    @property
    def runs(self) -> int:
        return sum(len(r.reports) for r in self.records)

    @property
    def spiral_rate(self) -> float:
        return self.counts[SUCCESS] / self.runs if self.runs else 0.0

    @property
    def all_verified(self) -> bool:
        return all(all(r.verified) for r in self.records)

    def to_dict(self) -> dict:
        return {"graphs": len(self.records), "runs": self.runs, **self.counts, "spiral_rate": self.spiral_rate}


def sweep_settings(g: CubicGraph, starts: int = 1, directions: Iterable[str] = (CW,)) -> list[dict]:
    """The first ``starts`` outer-boundary vertices crossed with ``directions``."""
    boundary = g.outer_boundary()
    picks = boundary[:starts] if starts > 0 else boundary
    return [{"start": s, "direction": d} for s in picks for d in directions]


def _run(g: CubicGraph, setting: dict, fallback: bool = True):
    c, report = color_graph(g, start=setting["start"], direction=setting["direction"], fallback=fallback)
    ok = bool(c) and verify(g, c)
    return c, report, ok


def shrink(seed: int, n: int, setting: dict) -> Optional[dict]:
    """Smallest earlier stage of the seed's growth run where ``setting`` still
    fails to succeed by spiral coloring alone."""
    for k in range(4, n + 1, 2):
        g = gen_random(k, seed)
        if setting["start"] >= g.n:
            continue
        _, report, _ = _run(g, setting, fallback=False)
        if report.outcome != SUCCESS:
            return {"n": k, "setting": setting, "report": report.to_dict(), "graph": serialize_graph(g)}
    return None


def fuzz_one(seed: int, n: int, starts: int = 1, directions: tuple[str, ...] = (CW,), do_shrink: bool = True) -> FuzzRecord:
    g = gen_random(n, seed)
    settings = sweep_settings(g, starts, directions)
    reports, verified = [], []
    bad = None
    for s in settings:
        _, report, ok = _run(g, s)
        reports.append(report.to_dict())
        verified.append(ok)
        if report.outcome != SUCCESS and bad is None:
            bad = s
    shrunk = shrink(seed, n, bad) if bad is not None and do_shrink else None
    return FuzzRecord(seed, n, GENERATOR, serialize_graph(g), settings, reports, verified, shrunk)


def _job(args) -> FuzzRecord:
    return fuzz_one(*args)


def fuzz(
    count: int,
    n_min: int = 4,
    n_max: int = 60,
    seed: int = 0,
    starts: int = 1,
    directions: tuple[str, ...] = (CW,),
    do_shrink: bool = True,
    workers: int = 1,
) -> FuzzSummary:
    """Generate ``count`` graphs from seeds ``seed .. seed+count-1`` and color each.

    Records come back in seed order whatever ``workers`` is.
    """
    jobs = [(s, size_for_seed(s, n_min, n_max), starts, tuple(directions), do_shrink) for s in range(seed, seed + count)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_job, jobs, chunksize=max(1, count // (4 * workers))))
    else:
        records = [_job(j) for j in jobs]
    return FuzzSummary(records)


def write_jsonl(summary: FuzzSummary, fh) -> None:
    for r in summary.records:
        fh.write(r.to_json() + "\n")


def read_jsonl(fh) -> list[FuzzRecord]:
    return [FuzzRecord.from_json(line) for line in fh if line.strip()]


BOTH = (CW, ACW)
