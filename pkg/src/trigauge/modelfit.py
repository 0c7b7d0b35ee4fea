"""Power-law performance model fitting and state-of-the-art comparison.

Execution time is modeled as ``T = (Ne / N1) ** beta`` where ``N1`` is the
number of edges processable in one second. Fitting runs ordinary least
squares in log10-log10 space over the large-edge-count region, snaps the
exponent to the canonical candidate set {1/2, 2/3, 1, 4/3, 3/2}, then
re-estimates ``N1`` with the snapped exponent in closed form.

Two fixed reference lines summarize the published state of the art:
``T = (Ne / 1e8) ** (4/3)`` (2017) and ``T = Ne / 1e9`` (2018/2019).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .bench import BenchRecord

BETA_CANDIDATES = (
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(1, 1),
    Fraction(4, 3),
    Fraction(3, 2),
)


class DegenerateFitError(ValueError):
    """Too few retained points, or no spread in edge counts, to fit."""


@dataclass(frozen=True)
class ModelFit:
    """Fitted (N1, beta) pair plus fit diagnostics.

    ``beta`` is the raw least-squares slope kept for auditing the snap;
    ``beta_snapped`` is the candidate actually used by the model and by
    ``n1``.
    """

    n1: float
    beta: float
    beta_snapped: float
    fit_min_edges: float
    residual_rms: float
    n_points: int
    max_edges: float

    def __post_init__(self):
        assert self.n1 > 0 and self.n_points >= 2 and self.residual_rms >= 0


@dataclass(frozen=True)
class SotaLine:
    """One of the two published state-of-the-art reference lines."""

    label: str
    n1: float
    beta: float


SOTA_2017 = SotaLine(label="sota2017", n1=1e8, beta=4 / 3)
SOTA_2018 = SotaLine(label="sota2018", n1=1e9, beta=1.0)


def snap_beta(raw: float) -> Fraction:
    """Nearest candidate exponent; ties resolve to the smaller candidate."""
    best = BETA_CANDIDATES[0]
    best_dist = abs(raw - float(best))
    for cand in BETA_CANDIDATES[1:]:
        dist = abs(raw - float(cand))
        if dist < best_dist:
            best, best_dist = cand, dist
    return best


def beta_fraction_label(beta: float) -> str:
    """Exact fraction string for a (snapped) exponent, e.g. ``4/3`` or ``1``."""
    frac = snap_beta(beta)
    return str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"


def default_min_edges(max_edges: float) -> float:
    """Retention threshold: at least 1e6, at most the top decade of the range."""
    return max(1e6, max_edges / 10.0)


def fit_loglog(points: Iterable[tuple[float, float]], min_edges: float | None = None) -> ModelFit:
    """Fit ``T = (Ne/N1)**beta`` to (Ne, T) pairs with Ne >= min_edges.

    OLS on (log10 Ne, log10 T) gives the raw slope; the exponent is snapped
    to the candidate set and N1 re-estimated with it fixed:
    log10 N1 = mean(log10 Ne) - mean(log10 T) / beta_snapped.
    """
    pts = [(float(ne), float(t)) for ne, t in points]
    if any(t <= 0 for _, t in pts):
        raise ValueError("all T_tri values must be positive")
    if any(ne <= 0 for ne, _ in pts):
        raise ValueError("all edge counts must be positive")
    if min_edges is None:
        if not pts:
            raise DegenerateFitError("degenerate fit: no points")
        min_edges = default_min_edges(max(ne for ne, _ in pts))
    kept = [(ne, t) for ne, t in pts if ne >= min_edges]
    if len(kept) < 2 or len({ne for ne, _ in kept}) < 2:
        raise DegenerateFitError(
            f"degenerate fit: need >= 2 points with distinct edge counts at Ne >= {min_edges:g}, "
            f"got {len(kept)}"
        )
    log_ne = np.log10([ne for ne, _ in kept])
    log_t = np.log10([t for _, t in kept])
    beta_raw, _intercept = np.polyfit(log_ne, log_t, 1)
    beta_s = float(snap_beta(float(beta_raw)))
    log_n1 = float(np.mean(log_ne) - np.mean(log_t) / beta_s)
    residuals = log_t - beta_s * (log_ne - log_n1)
    return ModelFit(
        n1=10.0**log_n1,
        beta=float(beta_raw),
        beta_snapped=beta_s,
        fit_min_edges=float(min_edges),
        residual_rms=float(np.sqrt(np.mean(residuals**2))),
        n_points=len(kept),
        max_edges=max(ne for ne, _ in kept),
    )


def fit_piecewise(
    points: Iterable[tuple[float, float]], breakpoint: float, min_edges: float | None = None
) -> tuple[ModelFit, ModelFit]:
    """Two independent fits split at a user-supplied edge-count breakpoint."""
    pts = [(float(ne), float(t)) for ne, t in points]
    below = [(ne, t) for ne, t in pts if ne < breakpoint]
    above = [(ne, t) for ne, t in pts if ne >= breakpoint]
    return (
        fit_loglog(below, min_edges=0.0 if min_edges is None else min_edges),
        fit_loglog(above, min_edges=breakpoint if min_edges is None else max(min_edges, breakpoint)),
    )


def evaluate_model(model: ModelFit | SotaLine, n_edges: float) -> float:
    """Predicted T_tri in seconds: (Ne/N1)**beta, using the snapped exponent."""
    if n_edges <= 0:
        raise ValueError("n_edges must be positive")
    beta = getattr(model, "beta_snapped", None)
    if beta is None:
        beta = model.beta
    return (n_edges / model.n1) ** beta


@dataclass(frozen=True)
class SotaComparison:
    """Speed ratios of one measurement against the two reference lines.

    A ratio above 1 means the measurement beat that year's line.
    """

    graph_id: str
    algorithm: str
    n_edges: int
    t_tri_seconds: float
    ratio_2017: float
    ratio_2018: float


def compare_sota(records: Sequence[BenchRecord]) -> list[SotaComparison]:
    """Per-record speedups against both reference lines, sorted by edge count."""
    if not records:
        raise ValueError("no records to compare")
    rows = [
        SotaComparison(
            graph_id=rec.graph_id,
            algorithm=rec.algorithm,
            n_edges=rec.n_edges,
            t_tri_seconds=rec.t_tri_seconds,
            ratio_2017=evaluate_model(SOTA_2017, rec.n_edges) / rec.t_tri_seconds,
            ratio_2018=evaluate_model(SOTA_2018, rec.n_edges) / rec.t_tri_seconds,
        )
        for rec in records
    ]
    return sorted(rows, key=lambda r: r.n_edges)


def _one_significant(x: float) -> str:
    """Scientific notation at one significant digit, e.g. 3.2e8 -> ``3e8``."""
    exp = math.floor(math.log10(x))
    mant = round(x / 10.0**exp)
    if mant == 10:
        mant, exp = 1, exp + 1
    return f"{mant}e{exp}"


def _two_significant(x: float) -> str:
    exp = math.floor(math.log10(x))
    mant = x / 10.0**exp
    if round(mant, 1) >= 10.0:
        mant /= 10.0
        exp += 1
    return f"{mant:.1f}e{exp}"


def emit_fit_table(fits: Mapping[str, ModelFit]) -> str:
    """Aligned text table of fit coefficients, one row per submission/group."""
    if not fits:
        raise ValueError("no fits to tabulate")
    header = ("submission", "max_Ne", "N1", "beta")
    rows = [
        (
            name,
            _two_significant(fit.max_edges),
            _one_significant(fit.n1),
            beta_fraction_label(fit.beta_snapped),
        )
        for name, fit in fits.items()
    ]
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) for i in range(4)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def fit_table_csv(fits: Mapping[str, ModelFit]) -> str:
    """CSV companion of the fit table, carrying full-precision values."""
    if not fits:
        raise ValueError("no fits to tabulate")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["submission", "max_n_edges", "n1", "beta_raw", "beta_snapped", "beta_fraction",
         "fit_min_edges", "residual_rms", "n_points"]
    )
    for name, fit in fits.items():
        writer.writerow(
            [name, repr(fit.max_edges), repr(fit.n1), repr(fit.beta), repr(fit.beta_snapped),
             beta_fraction_label(fit.beta_snapped), repr(fit.fit_min_edges),
             repr(fit.residual_rms), fit.n_points]
        )
    return buf.getvalue()


def plot_data_csv(groups: Mapping[str, tuple[Sequence[BenchRecord], ModelFit]]) -> str:
    """Plot-ready CSV: observed and modeled times plus both reference lines."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["group", "n_edges", "t_observed", "t_model", "t_sota2017", "t_sota2018"])
    for name, (records, fit) in groups.items():
        for rec in sorted(records, key=lambda r: r.n_edges):
            writer.writerow(
                [
                    name,
                    rec.n_edges,
                    repr(rec.t_tri_seconds),
                    repr(evaluate_model(fit, rec.n_edges)),
                    repr(evaluate_model(SOTA_2017, rec.n_edges)),
                    repr(evaluate_model(SOTA_2018, rec.n_edges)),
                ]
            )
    return buf.getvalue()
