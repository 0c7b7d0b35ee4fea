"""Synthetic benchmark graph generators.

Three families:

* Erdos-Renyi G(n, p) for oracle-checkable random instances.
* Noise-free Kronecker powers of a seed adjacency, whose triangle count has
  the closed form 6^(k-1) * t^k for a seed with t triangles (trace
  multiplicativity of the tensor product).
* Stochastic Kronecker (RMAT-style recursive quadrant sampling) for skewed
  load-scale graphs.

All randomness comes from numpy's Philox counter-based bit generator keyed by
``rng_seed``: the same spec always reproduces the identical graph, byte for
byte, independent of platform or worker count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .graph import CsrGraph, csr_from_pairs

GRAPH500_PROBS = (0.57, 0.19, 0.19, 0.05)

# guards against runaway allocations, not a hard math limit
MAX_GENERATED_ENTRIES = 200_000_000


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.uint64(seed)))


def gen_erdos_renyi(n: int, p: float, seed: int = 0) -> CsrGraph:
    """G(n, p): each unordered pair is an edge independently with probability p."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    n_pairs = n * (n - 1) // 2
    if n_pairs > MAX_GENERATED_ENTRIES:
        raise ValueError(f"G({n}, p) needs {n_pairs} pair draws, above the size budget")
    if n_pairs == 0:
        return csr_from_pairs(n, np.empty(0, np.int64), np.empty(0, np.int64))
    u, v = np.triu_indices(n, k=1)
    keep = _rng(seed).random(n_pairs) < p
    return csr_from_pairs(n, u[keep].astype(np.int64), v[keep].astype(np.int64))


def gen_kron_power(seed_graph: CsrGraph, k: int, max_entries: int = MAX_GENERATED_ENTRIES) -> CsrGraph:
    """k-fold Kronecker (tensor) power of a seed adjacency matrix.

    The result is symmetric with zero diagonal whenever the seed is, and
    zero-degree vertices are retained, so the vertex count is exactly n^k.
    Raises before allocating anything if the result would exceed
    ``max_entries`` stored entries.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = seed_graph.n_vertices
    m2 = seed_graph.column_indices.size  # stored (directed) entries
    if n == 0:
        raise ValueError("seed graph must have at least one vertex")
    if n**k > 2**62 or (m2**k if m2 else 0) > max_entries:
        raise ValueError(
            f"Kronecker power too large: {n}^{k} vertices, {m2}^{k} stored entries"
        )
    rows0 = np.repeat(np.arange(n, dtype=np.int64), seed_graph.degrees())
    cols0 = seed_graph.column_indices
    rows, cols = rows0, cols0
    for _ in range(k - 1):
        rows = (rows[:, None] * n + rows0[None, :]).ravel()
        cols = (cols[:, None] * n + cols0[None, :]).ravel()
    return csr_from_pairs(n**k, rows, cols)


def gen_stochastic_kron(
    probs, scale: int, edge_factor: int, seed: int = 0
) -> CsrGraph:
    """RMAT-style sampler: recursive quadrant descent from a 2x2 seed matrix.

    Draws ``edge_factor * 2**scale`` directed edge picks on 2**scale vertices,
    one quadrant choice per bit, then canonicalizes (symmetrize, dedup, drop
    self-loops). The four probabilities must sum to 1 within 1e-9.
    """
    p = np.asarray(probs, dtype=np.float64).reshape(4)
    if np.any(p < 0) or np.any(p > 1):
        raise ValueError("seed probabilities must lie in [0, 1]")
    if abs(p.sum() - 1.0) > 1e-9:
        raise ValueError(f"seed probabilities must sum to 1, got {p.sum()!r}")
    if scale < 0:
        raise ValueError("scale must be non-negative")
    if edge_factor < 0:
        raise ValueError("edge_factor must be non-negative")
    n = 1 << scale
    n_picks = edge_factor << scale
    if n_picks > MAX_GENERATED_ENTRIES:
        raise ValueError(f"{n_picks} edge picks above the size budget")
    if n_picks == 0:
        return csr_from_pairs(n, np.empty(0, np.int64), np.empty(0, np.int64))
    cum = np.cumsum(p)
    rng = _rng(seed)
    src = np.zeros(n_picks, dtype=np.int64)
    dst = np.zeros(n_picks, dtype=np.int64)
    for bit in range(scale - 1, -1, -1):
        quadrant = np.minimum(np.searchsorted(cum, rng.random(n_picks), side="right"), 3)
        src |= (quadrant >> 1).astype(np.int64) << bit
        dst |= (quadrant & 1).astype(np.int64) << bit
    return csr_from_pairs(n, src, dst)


@dataclass(frozen=True)
class GenSpec:
    """Declarative generator spec; same spec (incl. rng_seed) -> identical graph."""

    model: str  # erdos_renyi | kron_power | stochastic_kron
    rng_seed: int = 0
    n: int | None = None
    p: float | None = None
    seed_graph: CsrGraph | None = None
    k: int | None = None
    probs: tuple[float, float, float, float] | None = None
    scale: int | None = None
    edge_factor: int | None = None

    def generate(self) -> CsrGraph:
        if self.model == "erdos_renyi":
            if self.n is None or self.p is None:
                raise ValueError("erdos_renyi requires n and p")
            return gen_erdos_renyi(self.n, self.p, seed=self.rng_seed)
        if self.model == "kron_power":
            if self.seed_graph is None or self.k is None:
                raise ValueError("kron_power requires seed_graph and k")
            return gen_kron_power(self.seed_graph, self.k)
        if self.model == "stochastic_kron":
            if self.probs is None or self.scale is None or self.edge_factor is None:
                raise ValueError("stochastic_kron requires probs, scale, edge_factor")
            return gen_stochastic_kron(self.probs, self.scale, self.edge_factor, seed=self.rng_seed)
        raise ValueError(f"unknown model {self.model!r}")

    def describe(self) -> dict[str, Any]:
        """Parameter dict for the metadata sidecar (seed graphs summarized)."""
        params: dict[str, Any] = {}
        if self.model == "erdos_renyi":
            params = {"n": self.n, "p": self.p}
        elif self.model == "kron_power":
            params = {
                "k": self.k,
                "seed_n_vertices": self.seed_graph.n_vertices if self.seed_graph else None,
                "seed_n_edges": self.seed_graph.n_edges if self.seed_graph else None,
            }
        elif self.model == "stochastic_kron":
            params = {"probs": list(self.probs or ()), "scale": self.scale, "edge_factor": self.edge_factor}
        return params

    def graph_id(self) -> str:
        parts = [self.model] + [f"{k}={v}" for k, v in sorted(self.describe().items())]
        return ",".join(parts + [f"rng_seed={self.rng_seed}"])


def write_metadata_sidecar(spec: GenSpec, g: CsrGraph, path) -> None:
    """Write the JSON sidecar describing a generated graph."""
    payload = {
        "model": spec.model,
        "parameters": spec.describe(),
        "rng_seed": spec.rng_seed,
        "n_vertices": g.n_vertices,
        "n_edges": g.n_edges,
    }
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
