"""Graph ingestion and the sparse structures consumed by the counting kernels.

Graphs are undirected and simple: parsing keeps the raw edge stream intact,
canonicalization symmetrizes, drops self-loops, and merges duplicates. The
canonical form is CSR (row offsets + sorted column indices) with 64-bit
indices throughout; all structures are frozen after construction and safe to
share across threads.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

COMMENT_PREFIXES = ("#", "%")


class ParseError(ValueError):
    """Malformed edge-list input. Carries the 1-based offending line number."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number


def _as_int64(values) -> np.ndarray:
    return np.ascontiguousarray(values, dtype=np.int64)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass
class EdgeList:
    """Raw (source, target) pairs plus the label -> dense index mapping.

    Pre-canonicalization: may contain duplicates, self-loops, and both
    orientations of the same pair. ``label_map`` assigns contiguous 0-based
    indices to the original vertex labels in ascending label order, so the
    relabeling is independent of line order.
    """

    edges: np.ndarray  # shape (m, 2), original labels
    label_map: dict[int, int]

    @classmethod
    def from_pairs(cls, pairs) -> "EdgeList":
        edges = _as_int64(pairs).reshape(-1, 2)
        labels = np.unique(edges) if edges.size else np.empty(0, dtype=np.int64)
        label_map = {int(lab): i for i, lab in enumerate(labels)}
        return cls(edges=edges, label_map=label_map)

    @property
    def n_raw_edges(self) -> int:
        return int(self.edges.shape[0])

    def __len__(self) -> int:
        return self.n_raw_edges


@dataclass(frozen=True)
class CsrGraph:
    """Canonical undirected simple graph in CSR form.

    Invariants: symmetric, zero diagonal, per-row columns strictly
    increasing, stored entry count equal to twice the undirected edge count.
    """

    n_vertices: int
    row_offsets: np.ndarray  # int64, length n_vertices + 1
    column_indices: np.ndarray  # int64, sorted ascending within each row

    def __post_init__(self):
        object.__setattr__(self, "row_offsets", _freeze(_as_int64(self.row_offsets)))
        object.__setattr__(self, "column_indices", _freeze(_as_int64(self.column_indices)))

    @property
    def n_edges(self) -> int:
        """Number of undirected edges (half the stored entries)."""
        return int(self.column_indices.size) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.column_indices[self.row_offsets[v] : self.row_offsets[v + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.row_offsets)

    def edge_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Undirected edges as (u, v) arrays with u < v, lexicographic order."""
        rows = np.repeat(np.arange(self.n_vertices, dtype=np.int64), self.degrees())
        keep = self.column_indices > rows
        return rows[keep], self.column_indices[keep]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        pos = np.searchsorted(row, v)
        return bool(pos < row.size and row[pos] == v)

    def validate(self) -> None:
        """Direct invariant scan; raises AssertionError on violation."""
        offs, cols, n = self.row_offsets, self.column_indices, self.n_vertices
        assert offs.shape == (n + 1,) and offs[0] == 0
        assert np.all(np.diff(offs) >= 0), "row offsets must be monotone"
        assert offs[-1] == cols.size == 2 * self.n_edges
        if cols.size:
            assert cols.min() >= 0 and cols.max() < n
        rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(offs))
        assert not np.any(rows == cols), "diagonal must be empty"
        if cols.size > 1:
            # strictly increasing within each row (no duplicates, sorted);
            # comparisons that straddle a row boundary are masked out
            same_row = rows[1:] == rows[:-1]
            assert np.all(cols[1:][same_row] > cols[:-1][same_row]), "rows must be strictly increasing"
        # symmetry: the set of (row, col) equals the set of (col, row)
        fwd = rows * n + cols
        bwd = cols * n + rows
        assert np.array_equal(np.sort(fwd), np.sort(bwd)), "adjacency must be symmetric"

    def to_dense_bool(self) -> np.ndarray:
        dense = np.zeros((self.n_vertices, self.n_vertices), dtype=bool)
        rows = np.repeat(np.arange(self.n_vertices, dtype=np.int64), self.degrees())
        dense[rows, self.column_indices] = True
        return dense


@dataclass(frozen=True)
class CsrTriangle:
    """One triangular half of an adjacency matrix in CSR form."""

    n_vertices: int
    row_offsets: np.ndarray
    column_indices: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "row_offsets", _freeze(_as_int64(self.row_offsets)))
        object.__setattr__(self, "column_indices", _freeze(_as_int64(self.column_indices)))

    @property
    def n_entries(self) -> int:
        return int(self.column_indices.size)


@dataclass(frozen=True)
class TriangularSplit:
    """Strictly lower / strictly upper triangular parts of the adjacency.

    Each half stores every undirected edge exactly once; lower is the
    transpose of upper.
    """

    lower: CsrTriangle
    upper: CsrTriangle


@dataclass(frozen=True)
class IncidenceMatrix:
    """Vertex x edge incidence structure: one column per undirected edge.

    Endpoints are stored as parallel arrays (u, v) with u < v, columns in
    lexicographic order.
    """

    n_vertices: int
    edge_u: np.ndarray
    edge_v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "edge_u", _freeze(_as_int64(self.edge_u)))
        object.__setattr__(self, "edge_v", _freeze(_as_int64(self.edge_v)))

    @property
    def n_edges(self) -> int:
        return int(self.edge_u.size)


def _iter_lines(source):
    """Yield lines from str or bytes content, or any line-iterable stream."""
    if isinstance(source, str):
        yield from io.StringIO(source)
    elif isinstance(source, bytes):
        yield from io.BytesIO(source)
    else:
        yield from source


def parse_edge_list(source) -> EdgeList:
    """Parse TSV edge-list input into an :class:`EdgeList`.

    Each non-empty line holds 2 or 3 whitespace-separated integer fields;
    the third field (a weight) is validated and ignored. Lines starting with
    '#' or '%' are comments. Input with no edge lines raises
    ``ParseError("no edges")``.
    """
    src_arr = []
    dst_arr = []
    for line_no, raw in enumerate(_iter_lines(source), start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise ParseError(
                f"line {line_no}: expected 2 or 3 fields, got {len(fields)}", line_no
            )
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"line {line_no}: non-integer field in {line!r}", line_no) from None
        src_arr.append(values[0])
        dst_arr.append(values[1])
    if not src_arr:
        raise ParseError("no edges", None)
    edges = np.column_stack([_as_int64(src_arr), _as_int64(dst_arr)])
    labels = np.unique(edges)
    label_map = {int(lab): i for i, lab in enumerate(labels)}
    return EdgeList(edges=edges, label_map=label_map)


def _csr_from_unique_pairs(n: int, u: np.ndarray, v: np.ndarray) -> CsrGraph:
    """Build a CsrGraph from deduplicated undirected pairs with u < v."""
    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    order = np.lexsort((dst, src))
    src = src[order]
    dst = dst[order]
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return CsrGraph(n_vertices=n, row_offsets=offsets, column_indices=dst)


def csr_from_pairs(n_vertices: int, src: np.ndarray, dst: np.ndarray) -> CsrGraph:
    """Canonicalize arbitrary (src, dst) index pairs into a CsrGraph.

    Drops self-loops, merges duplicates and reverse duplicates. Vertices are
    0..n_vertices-1; zero-degree vertices are retained.
    """
    if n_vertices > 2**31:
        raise ValueError("graphs above 2^31 vertices are not supported in memory")
    src = _as_int64(src)
    dst = _as_int64(dst)
    if src.size:
        if min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= n_vertices:
            raise ValueError("vertex index out of range")
    keep = src != dst
    lo = np.minimum(src[keep], dst[keep])
    hi = np.maximum(src[keep], dst[keep])
    if lo.size:
        packed = np.unique(lo * np.int64(n_vertices) + hi)
        lo = packed // n_vertices
        hi = packed % n_vertices
    return _csr_from_unique_pairs(n_vertices, lo, hi)


def canonicalize(el: EdgeList) -> CsrGraph:
    """Reduce an EdgeList to the canonical undirected simple CsrGraph."""
    n = len(el.label_map)
    if el.n_raw_edges == 0:
        return _csr_from_unique_pairs(n, np.empty(0, np.int64), np.empty(0, np.int64))
    labels = _as_int64(list(el.label_map.keys()))
    targets = _as_int64(list(el.label_map.values()))
    order = np.argsort(labels, kind="stable")
    labels, targets = labels[order], targets[order]
    pos = np.searchsorted(labels, el.edges)
    if np.any(pos >= labels.size) or np.any(labels[np.minimum(pos, labels.size - 1)] != el.edges):
        raise ValueError("edge references a label missing from label_map")
    mapped = targets[pos]
    return csr_from_pairs(n, mapped[:, 0], mapped[:, 1])


def split_lower_upper(g: CsrGraph) -> TriangularSplit:
    """Split the adjacency into strictly lower and strictly upper CSR halves."""
    rows = np.repeat(np.arange(g.n_vertices, dtype=np.int64), g.degrees())
    cols = g.column_indices
    low_mask = cols < rows
    up_mask = cols > rows

    def half(mask: np.ndarray) -> CsrTriangle:
        offsets = np.zeros(g.n_vertices + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows[mask], minlength=g.n_vertices), out=offsets[1:])
        return CsrTriangle(g.n_vertices, offsets, cols[mask])

    return TriangularSplit(lower=half(low_mask), upper=half(up_mask))


def merge_split(split: TriangularSplit) -> CsrGraph:
    """Recombine a TriangularSplit into the full symmetric CsrGraph."""
    n = split.lower.n_vertices
    rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(split.upper.row_offsets))
    return _csr_from_unique_pairs(n, rows, split.upper.column_indices)


def build_incidence(g: CsrGraph) -> IncidenceMatrix:
    """Build the vertex x edge incidence structure (one column per edge)."""
    u, v = g.edge_pairs()
    return IncidenceMatrix(n_vertices=g.n_vertices, edge_u=u, edge_v=v)


def permute_vertices(g: CsrGraph, perm) -> CsrGraph:
    """Relabel vertices by the bijection ``perm`` (index i -> perm[i])."""
    perm = _as_int64(perm)
    if perm.shape != (g.n_vertices,) or not np.array_equal(
        np.sort(perm), np.arange(g.n_vertices, dtype=np.int64)
    ):
        raise ValueError("perm must be a bijection on 0..n_vertices-1")
    u, v = g.edge_pairs()
    return csr_from_pairs(g.n_vertices, perm[u], perm[v])


def to_tsv(g: CsrGraph) -> str:
    """Render the graph as TSV, one ``u<TAB>v`` line per edge with u < v, sorted.

    Zero-degree vertices have no representation in this format; re-parsing
    the output recovers the edge set but not isolated vertices.
    """
    u, v = g.edge_pairs()
    return "".join(f"{a}\t{b}\n" for a, b in zip(u.tolist(), v.tolist()))


def write_tsv(g: CsrGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_tsv(g))


def load_graph(path) -> CsrGraph:
    """Parse and canonicalize a TSV edge-list file."""
    with open(path, "rb") as f:
        return canonicalize(parse_edge_list(f))
