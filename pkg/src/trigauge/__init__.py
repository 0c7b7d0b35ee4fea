"""trigauge: exact triangle counting kernels, benchmark harness, and
power-law performance model fitting for sparse graphs."""

from .bench import CSV_HEADER, BenchRecord, emit_records, read_records, run_benchmark
from .count import (
    ALGORITHMS,
    OracleLimitError,
    StructureMismatchError,
    TriangleCount,
    count_adj2,
    count_brute,
    count_incidence,
    count_lu,
    count_triangles,
)
from .generate import (
    GRAPH500_PROBS,
    GenSpec,
    gen_erdos_renyi,
    gen_kron_power,
    gen_stochastic_kron,
    write_metadata_sidecar,
)
from .graph import (
    CsrGraph,
    EdgeList,
    IncidenceMatrix,
    ParseError,
    TriangularSplit,
    build_incidence,
    canonicalize,
    csr_from_pairs,
    load_graph,
    merge_split,
    parse_edge_list,
    permute_vertices,
    split_lower_upper,
    to_tsv,
    write_tsv,
)
from .modelfit import (
    BETA_CANDIDATES,
    SOTA_2017,
    SOTA_2018,
    DegenerateFitError,
    ModelFit,
    SotaLine,
    compare_sota,
    emit_fit_table,
    evaluate_model,
    fit_loglog,
    fit_piecewise,
    snap_beta,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BETA_CANDIDATES",
    "BenchRecord",
    "CSV_HEADER",
    "CsrGraph",
    "DegenerateFitError",
    "EdgeList",
    "GRAPH500_PROBS",
    "GenSpec",
    "IncidenceMatrix",
    "ModelFit",
    "OracleLimitError",
    "ParseError",
    "SOTA_2017",
    "SOTA_2018",
    "SotaLine",
    "StructureMismatchError",
    "TriangleCount",
    "TriangularSplit",
    "build_incidence",
    "canonicalize",
    "compare_sota",
    "count_adj2",
    "count_brute",
    "count_incidence",
    "count_lu",
    "count_triangles",
    "csr_from_pairs",
    "emit_fit_table",
    "emit_records",
    "evaluate_model",
    "fit_loglog",
    "fit_piecewise",
    "gen_erdos_renyi",
    "gen_kron_power",
    "gen_stochastic_kron",
    "load_graph",
    "merge_split",
    "parse_edge_list",
    "permute_vertices",
    "read_records",
    "run_benchmark",
    "snap_beta",
    "split_lower_upper",
    "to_tsv",
    "write_metadata_sidecar",
    "write_tsv",
]
