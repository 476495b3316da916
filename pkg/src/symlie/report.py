"""Analysis pipeline and report emission.

The toric test is one-directional: a symmetry algebra smaller than the
ideal's dimension certifies NOT_TORIC, anything else is INCONCLUSIVE.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Optional

from .graded import IdealSpec, PreconditionError
from .groebner import krull_dimension
from .lie import (
    LieAlgebraBasis,
    bracket_closure_check,
    diagonal_subalgebra_dim,
    symmetry_lie_algebra,
    symmetry_lie_algebra_multidegree,
)
from .parser import format_polynomial

NOT_TORIC = "NOT_TORIC"
INCONCLUSIVE = "INCONCLUSIVE"
SKIPPED = "SKIPPED"

_JSON_KEYS = [
    "ring",
    "generators",
    "degree_used",
    "graded_rank",
    "lie_dimension",
    "lie_basis",
    "ideal_dimension",
    "verdict",
    "diagonal_subalgebra_dimension",
    "bracket_closed",
    "asserted_prime",
    "graded_only",
    "timings_ms",
]


@dataclass
class AnalysisReport:
    ring: list
    generators: list  # canonical expression text
    degree_used: int
    graded_rank: int
    lie_dimension: int
    lie_basis: list  # matrices as lists of lists of scalar strings
    ideal_dimension: Optional[int]
    verdict: str
    diagonal_subalgebra_dimension: int
    bracket_closed: bool
    asserted_prime: bool
    graded_only: bool
    timings_ms: dict = field(default_factory=dict)
    algebra: Optional[LieAlgebraBasis] = None  # not serialized

    def as_dict(self, include_timings: bool = True) -> dict:
        out = {}
        for key in _JSON_KEYS:
            if key == "timings_ms" and not include_timings:
                continue
            out[key] = getattr(self, key)
        return out


def analyze(ideal: IdealSpec, degree: Optional[int] = None,
            compute_dimension: bool = True, nonprime: bool = False) -> AnalysisReport:
    """Graded basis -> symmetry Lie algebra -> Krull dimension -> verdict."""
    if not ideal.generators:
        raise PreconditionError("empty generator list")
    ideal.require_homogeneous()
    timings = {}

    t0 = time.perf_counter()
    maxdeg = ideal.max_degree()
    if nonprime:
        degrees = sorted(set(ideal.generator_degrees()))
        algebra = symmetry_lie_algebra_multidegree(ideal, degrees)
        degree_used = max(degrees)
        graded_only = False
    else:
        d = maxdeg if degree is None else degree
        graded_only = d < maxdeg
        algebra = symmetry_lie_algebra(ideal, degree=d, graded_only=graded_only)
        degree_used = d
    timings["lie_algebra"] = _ms(t0)

    t0 = time.perf_counter()
    bracket_closed = bracket_closure_check(algebra)
    diagonal_dim = diagonal_subalgebra_dim(algebra)
    timings["diagnostics"] = _ms(t0)

    ideal_dimension: Optional[int] = None
    if compute_dimension:
        t0 = time.perf_counter()
        ideal_dimension = krull_dimension(ideal)
        timings["krull_dimension"] = _ms(t0)

    if ideal_dimension is None:
        verdict = SKIPPED
    elif algebra.dimension < ideal_dimension:
        verdict = NOT_TORIC
    else:
        verdict = INCONCLUSIVE

    return AnalysisReport(
        ring=list(ideal.ring.variables),
        generators=[format_polynomial(g) for g in ideal.generators],
        degree_used=degree_used,
        graded_rank=algebra.graded_rank,
        lie_dimension=algebra.dimension,
        lie_basis=[[[str(c) for c in row] for row in m.rows] for m in algebra.basis],
        ideal_dimension=ideal_dimension,
        verdict=verdict,
        diagonal_subalgebra_dimension=diagonal_dim,
        bracket_closed=bracket_closed,
        asserted_prime=ideal.asserted_prime,
        graded_only=graded_only,
        timings_ms=timings,
    )


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def emit_report(report: AnalysisReport, format: str = "json",
                include_timings: bool = True) -> bytes:
    """Serialize a report; JSON key order is fixed for reproducibility."""
    if format == "json":
        data = report.as_dict(include_timings=include_timings)
        return (json.dumps(data, indent=2, sort_keys=False) + "\n").encode()
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = []
    lines.append(f"ring: {', '.join(report.ring)}")
    lines.append("generators:")
    for g in report.generators:
        lines.append(f"  {g}")
    lines.append(f"degree used: {report.degree_used}"
                 + (" (graded only)" if report.graded_only else ""))
    lines.append(f"graded rank: {report.graded_rank}")
    lines.append(f"lie dimension: {report.lie_dimension}")
    lines.append(f"diagonal subalgebra dimension: {report.diagonal_subalgebra_dimension}")
    lines.append(f"bracket closed: {str(report.bracket_closed).lower()}")
    lines.append(f"asserted prime: {str(report.asserted_prime).lower()}")
    if report.ideal_dimension is not None:
        lines.append(f"ideal dimension (affine cone): {report.ideal_dimension}")
    if include_timings and report.timings_ms:
        timing = ", ".join(f"{k}={v}" for k, v in report.timings_ms.items())
        lines.append(f"timings ms: {timing}")
    lines.append(_verdict_line(report))
    return ("\n".join(lines) + "\n").encode()


def _verdict_line(report: AnalysisReport) -> str:
    if report.verdict == SKIPPED:
        return "VERDICT: SKIPPED"
    g, d = report.lie_dimension, report.ideal_dimension
    if report.verdict == NOT_TORIC:
        return f"VERDICT: NOT TORIC (dim g = {g} < dim I = {d})"
    return f"VERDICT: INCONCLUSIVE (dim g = {g} >= dim I = {d})"
