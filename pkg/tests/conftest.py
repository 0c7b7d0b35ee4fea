import numpy as np
import pytest

import trigauge as tg
from trigauge.count import warm_up_kernels

# Fig-1-style fixture: 4 vertices, 5 edges, exactly two triangles
# ({0,1,2} and {1,2,3}).
TWO_TRIANGLE_TSV = "1\t2\n1\t3\n2\t3\n2\t4\n3\t4\n"


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    # pay JIT compilation once so per-test timings and hypothesis deadlines
    # stay clean
    warm_up_kernels()


@pytest.fixture
def two_triangle_graph() -> tg.CsrGraph:
    return tg.canonicalize(tg.parse_edge_list(TWO_TRIANGLE_TSV))


def complete_graph(n: int) -> tg.CsrGraph:
    u, v = np.triu_indices(n, k=1)
    return tg.csr_from_pairs(n, u.astype(np.int64), v.astype(np.int64))


def path_graph(n: int) -> tg.CsrGraph:
    idx = np.arange(n - 1, dtype=np.int64)
    return tg.csr_from_pairs(n, idx, idx + 1)


def star_graph(n_leaves: int) -> tg.CsrGraph:
    hub = np.zeros(n_leaves, dtype=np.int64)
    return tg.csr_from_pairs(n_leaves + 1, hub, np.arange(1, n_leaves + 1, dtype=np.int64))


def random_tree(n: int, seed: int) -> tg.CsrGraph:
    """Uniform-ish random tree: attach each vertex to a random predecessor."""
    rng = np.random.default_rng(seed)
    if n < 2:
        return tg.csr_from_pairs(n, np.empty(0, np.int64), np.empty(0, np.int64))
    dst = np.arange(1, n, dtype=np.int64)
    src = np.array([rng.integers(0, i) for i in range(1, n)], dtype=np.int64)
    return tg.csr_from_pairs(n, src, dst)


def triangle_free_check(g: tg.CsrGraph) -> bool:
    return tg.count_brute(g).count == 0
