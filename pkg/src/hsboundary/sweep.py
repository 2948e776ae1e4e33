"""Exhaustive sweeps over grids of dominant weights."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .avoidance import AvoidanceReport, closed_form_avoidance, profile_avoidance
from .errors import SizeLimit
from .lattice import HighestWeight, make_weight

DEFAULT_SWEEP_CAP = 10**6
COLUMNS = ("k1", "k2", "corank", "completelyIrregular", "kostantParallel", "beta", "weights01Present")


class CrossCheckMismatch(RuntimeError):
    """The two avoidance computations disagree."""


@dataclass(frozen=True)
class SweepSpec:
    d: int
    k_max: int
    fmt: str = "csv"

    @property
    def size(self) -> int:
        return math.comb(self.k_max + 2, 2) ** self.d

    def check(self, cap: int = DEFAULT_SWEEP_CAP) -> None:
        if self.d < 1 or self.k_max < 0:
            raise ValueError("need d >= 1 and kMax >= 0")
        if self.size > cap:
            raise SizeLimit(f"sweep has {self.size} weights, cap is {cap}")

    def weights(self):
        pairs = [(a, b) for a in range(self.k_max + 1) for b in range(a + 1)]
        keys = sorted(
            (tuple(p[0] for p in combo), tuple(p[1] for p in combo))
            for combo in product(pairs, repeat=self.d)
        )
        return [make_weight(k1, k2) for k1, k2 in keys]


def checked_report(lam: HighestWeight) -> AvoidanceReport:
    report = profile_avoidance(lam)
    if report != closed_form_avoidance(lam):
        raise CrossCheckMismatch(f"avoidance routes disagree for {lam.to_json()}")
    return report


def row_for(report: AvoidanceReport) -> dict:
    if report.boundary_zero:
        beta = "ZERO"
    elif report.avoided_interval is None:
        beta = "NONE"
    else:
        beta = report.beta
    return {
        "k1": list(report.lam.k1),
        "k2": list(report.lam.k2),
        "corank": report.corank,
        "completelyIrregular": report.completely_irregular,
        "kostantParallel": bool(report.presentations),
        "beta": beta,
        "weights01Present": report.weights01_present,
    }


def _rows_for_chunk(chunk: list[tuple[tuple[int, ...], tuple[int, ...], int]]) -> list[dict]:
    return [row_for(checked_report(HighestWeight(k1, k2, c))) for k1, k2, c in chunk]


def sweep_rows(spec: SweepSpec, workers: int = 1, cap: int = DEFAULT_SWEEP_CAP) -> list[dict]:
    spec.check(cap)
    keys = [(lam.k1, lam.k2, lam.c) for lam in spec.weights()]
    if workers <= 1:
        return _rows_for_chunk(keys)
    size = max(1, -(-len(keys) // (workers * 4)))
    chunks = [keys[i : i + size] for i in range(0, len(keys), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves chunk order, so the merge is already in key order
        parts = list(pool.map(_rows_for_chunk, chunks))
    return [row for part in parts for row in part]


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, separators=(",", ":"))


def format_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in COLUMNS])
    return buf.getvalue()
