"""Benchmark harness: time the counting kernels and emit measurement records.

The timed region covers the counting kernel alone. Parsing, canonicalization,
and the triangular-split / incidence construction all happen before the
clock starts, and each record carries ``timed_region="kernel"`` to make that
methodology explicit. Timings use the monotonic high-resolution clock;
wall-clock timestamps are provenance only.
"""

from __future__ import annotations

import csv
import io
import os
import statistics
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from time import perf_counter

from .count import (
    DEFAULT_ORACLE_LIMIT,
    count_incidence,
    count_lu,
    count_triangles,
    warm_up_kernels,
)
from .graph import CsrGraph, build_incidence, split_lower_upper

CSV_HEADER = (
    "graph_id,n_edges,algorithm,t_tri_seconds,rate_eps,repetitions,"
    "triangle_count,timed_region,workers,timestamp"
)

_CSV_COLUMNS = CSV_HEADER.split(",")


@dataclass
class BenchRecord:
    """One triangle-counting measurement: graph identity, size, time, rate."""

    graph_id: str
    n_edges: int
    algorithm: str
    t_tri_seconds: float
    rate_eps: float
    repetitions: int
    triangle_count: int
    timed_region: str = "kernel"
    workers: int = 1
    timestamp: str = ""
    # set when the clock resolution exceeds 1% of the measured time; carried
    # in memory only, the CSV schema is fixed
    timer_warning: bool = field(default=False, compare=False)

    def csv_row(self) -> list[str]:
        return [
            self.graph_id,
            str(self.n_edges),
            self.algorithm,
            repr(float(self.t_tri_seconds)),
            repr(float(self.rate_eps)),
            str(self.repetitions),
            str(self.triangle_count),
            self.timed_region,
            str(self.workers),
            self.timestamp,
        ]

    @classmethod
    def from_csv_row(cls, row: list[str]) -> "BenchRecord":
        if len(row) != len(_CSV_COLUMNS):
            raise ValueError(f"expected {len(_CSV_COLUMNS)} fields, got {len(row)}")
        return cls(
            graph_id=row[0],
            n_edges=int(row[1]),
            algorithm=row[2],
            t_tri_seconds=float(row[3]),
            rate_eps=float(row[4]),
            repetitions=int(row[5]),
            triangle_count=int(row[6]),
            timed_region=row[7],
            workers=int(row[8]),
            timestamp=row[9],
        )


def run_benchmark(
    g: CsrGraph,
    algorithm: str,
    repetitions: int = 5,
    graph_id: str = "",
    workers: int = 1,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
) -> BenchRecord:
    """Time ``repetitions`` runs of one counting kernel and record the median.

    Prerequisite structures are built (and the JIT warmed) outside the timed
    region; the verified triangle count rides along in the record.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    warm_up_kernels()
    split = split_lower_upper(g) if algorithm == "lu" else None
    incidence = build_incidence(g) if algorithm == "incidence" else None

    def timed_kernel():
        if algorithm == "lu":
            return count_lu(g, split, workers=workers, check=False)
        if algorithm == "incidence":
            return count_incidence(g, incidence, workers=workers, check=False)
        return count_triangles(g, algorithm, workers=workers, oracle_limit=oracle_limit)

    timings = []
    counts = set()
    for _ in range(repetitions):
        start = perf_counter()
        result = timed_kernel()
        elapsed = perf_counter() - start
        timings.append(max(elapsed, 1e-9))  # clock ticks are >= 1 ns apart
        counts.add(result.count)
    if len(counts) != 1:
        raise AssertionError(f"kernel returned unstable counts: {sorted(counts)}")
    t_tri = statistics.median(timings)
    resolution = time.get_clock_info("perf_counter").resolution
    return BenchRecord(
        graph_id=graph_id or f"graph-{g.n_vertices}v-{g.n_edges}e",
        n_edges=g.n_edges,
        algorithm=algorithm,
        t_tri_seconds=t_tri,
        rate_eps=g.n_edges / t_tri,
        repetitions=repetitions,
        triangle_count=counts.pop(),
        workers=workers,
        timestamp=datetime.now(timezone.utc).isoformat(),
        timer_warning=resolution > 0.01 * t_tri,
    )


def emit_records(records, sink) -> None:
    """Append records as CSV lines, writing the header only on a fresh sink.

    ``sink`` is a path or a text file object. Output is flushed before
    returning; on write failure partial output may remain.
    """
    records = list(records)
    if not records:
        raise ValueError("no records to emit")
    if hasattr(sink, "write"):
        _write_records(sink, records, need_header=sink.tell() == 0)
        sink.flush()
        return
    try:
        fresh = not (os.path.exists(sink) and os.path.getsize(sink) > 0)
    except OSError:
        fresh = True
    with open(sink, "a", encoding="utf-8", newline="") as f:
        _write_records(f, records, need_header=fresh)
        f.flush()


def _write_records(f, records, need_header: bool) -> None:
    writer = csv.writer(f, lineterminator="\n")
    if need_header:
        writer.writerow(_CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.csv_row())


def read_records(source) -> list[BenchRecord]:
    """Parse a bench CSV (path, text, or file object) back into records."""
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, str) and "\n" in source:
        text = source
    else:
        with open(source, "r", encoding="utf-8", newline="") as f:
            text = f.read()
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        return []
    if rows[0] == _CSV_COLUMNS:
        rows = rows[1:]
    return [BenchRecord.from_csv_row(row) for row in rows]
