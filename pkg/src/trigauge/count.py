"""Exact triangle counting via three masked linear-algebra kernels.

Each kernel computes a pre-division aggregate and derives the count from it:

* ``adj2``: sum of the adjacency-masked square of A over stored entries,
  divided by 6.
* ``lu``: sum of the adjacency-masked product L·U of the triangular halves,
  divided by 2.
* ``incidence``: nonzero count of the overloaded adjacency x incidence
  product, divided by 3.

A dense brute-force oracle (direct triple adjacency testing) is provided for
verification on small graphs; it shares no code with the CSR kernels.

Kernels may split work across ``workers`` threads; partial aggregates are
64-bit integers combined by addition, so counts are identical for any worker
count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import CsrGraph, IncidenceMatrix, TriangularSplit, build_incidence, csr_from_pairs, merge_split, split_lower_upper

ALGORITHMS = ("adj2", "lu", "incidence", "brute")

# pre-division divisor per algorithm; brute counts triples directly
AGGREGATE_DIVISOR = {"adj2": 6, "lu": 2, "incidence": 3, "brute": 1}

DEFAULT_ORACLE_LIMIT = 2000


class OracleLimitError(ValueError):
    """Brute-force oracle invoked above its vertex-count limit."""


class StructureMismatchError(ValueError):
    """Auxiliary structure (split / incidence) does not match the graph."""


@dataclass(frozen=True)
class TriangleCount:
    """Triangle count plus the pre-division aggregate it was derived from."""

    count: int
    algorithm: str
    aggregate: int

    def __post_init__(self):
        divisor = AGGREGATE_DIVISOR[self.algorithm]
        if self.aggregate % divisor != 0:
            raise AssertionError(
                f"{self.algorithm} aggregate {self.aggregate} not divisible by {divisor}"
            )
        if self.count != self.aggregate // divisor:
            raise AssertionError("count inconsistent with aggregate")


def _chunks_by_nnz(indptr: np.ndarray, workers: int) -> list[tuple[int, int]]:
    """Contiguous row ranges with roughly equal stored-entry counts."""
    n = indptr.size - 1
    if workers <= 1 or n <= 1 or indptr[-1] == 0:
        return [(0, n)]
    targets = (int(indptr[-1]) * np.arange(1, workers)) // workers
    cuts = np.searchsorted(indptr, targets, side="left").tolist()
    bounds = [0] + cuts + [n]
    out = []
    prev = 0
    for b in bounds[1:]:
        b = min(max(int(b), prev), n)
        if b > prev:
            out.append((prev, b))
        prev = b
    return out or [(0, n)]


def _even_chunks(n_units: int, workers: int) -> list[tuple[int, int]]:
    if workers <= 1 or n_units <= 1:
        return [(0, n_units)]
    cuts = [(n_units * k) // workers for k in range(workers + 1)]
    return [(lo, hi) for lo, hi in zip(cuts[:-1], cuts[1:]) if hi > lo]


def _run_chunked(fn, args: tuple, chunks: list[tuple[int, int]], workers: int) -> int:
    if len(chunks) == 1:
        lo, hi = chunks[0]
        return int(fn(*args, lo, hi))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args, lo, hi) for lo, hi in chunks]
        return sum(int(f.result()) for f in futures)


def count_adj2(g: CsrGraph, workers: int = 1) -> TriangleCount:
    """Count triangles from the adjacency-masked square of the adjacency.

    The aggregate is the entrywise sum of A² at the nonzero positions of A;
    the dense square is never formed. Each unordered pair is evaluated once
    and doubled, since the masked value is symmetric.
    """
    deg = g.degrees()
    chunks = _chunks_by_nnz(g.row_offsets, workers)
    half = _run_chunked(
        _kernels.adj2_partial, (g.row_offsets, g.column_indices, deg), chunks, workers
    )
    aggregate = 2 * half
    return TriangleCount(count=aggregate // 6, algorithm="adj2", aggregate=aggregate)


def count_lu(
    g: CsrGraph, split: TriangularSplit | None = None, workers: int = 1, check: bool = True
) -> TriangleCount:
    """Count triangles from the adjacency-masked product of the L and U halves."""
    if split is None:
        split = split_lower_upper(g)
        check = False
    elif check:
        _require_split_consistent(g, split)
    ldeg = np.diff(split.lower.row_offsets)
    chunks = _chunks_by_nnz(g.row_offsets, workers)
    args = (
        g.row_offsets,
        g.column_indices,
        split.lower.row_offsets,
        split.lower.column_indices,
        ldeg,
    )
    half = _run_chunked(_kernels.lu_partial, args, chunks, workers)
    aggregate = 2 * half
    return TriangleCount(count=aggregate // 2, algorithm="lu", aggregate=aggregate)


def count_incidence(
    g: CsrGraph, inc: IncidenceMatrix | None = None, workers: int = 1, check: bool = True
) -> TriangleCount:
    """Count triangles from the nonzeros of the adjacency x incidence product.

    Each edge column (x, y) contributes one nonzero per vertex adjacent to
    both endpoints. Columns are swept twice, grouped by each endpoint in
    turn, so every column is counted exactly once from its cheaper side.
    """
    if inc is None:
        inc = build_incidence(g)
        check = False
    elif check:
        _require_incidence_consistent(g, inc)
    deg = g.degrees()
    by_v = np.argsort(inc.edge_v, kind="stable")
    ev_sorted = np.ascontiguousarray(inc.edge_v[by_v])
    eu_sorted = np.ascontiguousarray(inc.edge_u[by_v])
    chunks = _even_chunks(inc.n_edges, workers)
    base = (g.row_offsets, g.column_indices, deg)
    nnz = _run_chunked(
        _kernels.incidence_pass, base + (inc.edge_u, inc.edge_v, False), chunks, workers
    )
    nnz += _run_chunked(
        _kernels.incidence_pass, base + (ev_sorted, eu_sorted, True), chunks, workers
    )
    return TriangleCount(count=nnz // 3, algorithm="incidence", aggregate=nnz)


def count_brute(g: CsrGraph, limit: int = DEFAULT_ORACLE_LIMIT) -> TriangleCount:
    """Count triangles by direct triple adjacency testing on a dense matrix.

    Verification oracle only: refuses graphs above ``limit`` vertices. For
    each edge (u, v) with u < v it scans vertices k > v adjacent to both, so
    every triangle is seen exactly once, at its lexicographically smallest
    edge.
    """
    if g.n_vertices > limit:
        raise OracleLimitError(
            f"brute-force oracle limited to {limit} vertices, got {g.n_vertices}"
        )
    dense = g.to_dense_bool()
    u_arr, v_arr = g.edge_pairs()
    total = 0
    for u, v in zip(u_arr.tolist(), v_arr.tolist()):
        total += int(np.count_nonzero(dense[u, v + 1 :] & dense[v, v + 1 :]))
    return TriangleCount(count=total, algorithm="brute", aggregate=total)


def count_triangles(
    g: CsrGraph,
    algorithm: str,
    workers: int = 1,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
) -> TriangleCount:
    """Run one of the counting algorithms by tag, building aux structures as needed."""
    if algorithm == "adj2":
        return count_adj2(g, workers=workers)
    if algorithm == "lu":
        return count_lu(g, workers=workers)
    if algorithm == "incidence":
        return count_incidence(g, workers=workers)
    if algorithm == "brute":
        return count_brute(g, limit=oracle_limit)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")


def _require_split_consistent(g: CsrGraph, split: TriangularSplit) -> None:
    if split.lower.n_vertices != g.n_vertices or split.upper.n_vertices != g.n_vertices:
        raise StructureMismatchError("split vertex count differs from graph")
    if split.lower.n_entries != g.n_edges or split.upper.n_entries != g.n_edges:
        raise StructureMismatchError("split entry count differs from graph edge count")
    merged = merge_split(split)
    if not (
        np.array_equal(merged.row_offsets, g.row_offsets)
        and np.array_equal(merged.column_indices, g.column_indices)
    ):
        raise StructureMismatchError("split does not recombine to the graph")


def _require_incidence_consistent(g: CsrGraph, inc: IncidenceMatrix) -> None:
    if inc.n_vertices != g.n_vertices:
        raise StructureMismatchError("incidence vertex count differs from graph")
    u, v = g.edge_pairs()
    if not (np.array_equal(inc.edge_u, u) and np.array_equal(inc.edge_v, v)):
        raise StructureMismatchError("incidence columns do not match graph edges")


def warm_up_kernels() -> None:
    """Trigger JIT compilation on a 3-cycle so timed runs exclude it."""
    tri = csr_from_pairs(3, np.array([0, 1, 2]), np.array([1, 2, 0]))
    count_adj2(tri)
    count_lu(tri, split_lower_upper(tri))
    count_incidence(tri, build_incidence(tri))
