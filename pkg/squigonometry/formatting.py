from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

from .geometry import PointClassification
from .models import Estimate, Method, OptimalResult
from .series import PowerSeries, RigidityReport

SCHEMA_VERSION = 1


def fmt_number(x: float) -> str:
    """Plain output uses 12 significant digits."""
    return f"{x:.12g}"


def fmt_fraction(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def build_envelope(
    command: str,
    parameters: Dict[str, Any],
    result: Any,
    method: Optional[str] = None,
    seed: Optional[int] = None,
    tolerances: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "result": result,
        "provenance": {"method": method, "seed": seed, "tolerances": tolerances or {}},
    }


def render_json(envelope: Dict[str, Any]) -> str:
    return json.dumps(envelope, sort_keys=True, indent=2, allow_nan=False)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue().rstrip("\r\n")


def fmt_estimate(est: Estimate) -> str:
    lines = [fmt_number(est.value), f"error: {fmt_number(est.error)}", f"method: {est.method.value}"]
    if est.method is Method.SERIES:
        lines[1] += " (indicative only)"
        lines.append(f"terms: {est.samples}")
    elif est.method is Method.MONTE_CARLO:
        lines.append(f"n: {est.samples}")
        lines.append(f"seed: {est.seed}")
    return "\n".join(lines)


def fmt_series_table(series: PowerSeries, kind: str, p: int) -> str:
    lines = [f"{kind}_{p} to order {series.order} (c_l = l-th derivative at 0)", "order\tc_l\tc_l/l!"]
    ordinary = series.ordinary()
    for l in series.nonzero_orders():
        lines.append(f"{l}\t{series[l]}\t{ordinary[l]}")
    return "\n".join(lines)


def fmt_rigidity(report: RigidityReport) -> str:
    flagged = [str(row.order) for row in report.rows if not row.pattern_holds]
    lines = [report.summary]
    if flagged:
        lines.append(f"orders breaking the pattern: {', '.join(flagged)}")
    return "\n".join(lines)


def fmt_optimal(res: OptimalResult) -> str:
    lines = [
        f"p_star: {fmt_number(res.p_star)}",
        f"residual: {res.residual:.3e}",
        f"iterations: {res.iterations}",
        f"bracket: [{fmt_number(res.bracket[0])}, {fmt_number(res.bracket[1])}]",
    ]
    if res.note:
        lines.append(f"note: {res.note}")
    return "\n".join(lines)


def fmt_classification(report: PointClassification, sample_count: int = 5) -> str:
    lines: List[str] = [
        f"p = {report.p}: {report.description}",
        f"justification: {report.justification}",
    ]
    if report.finite:
        lines.extend(f"  {pt}" for pt in report.points)
    else:
        lines.append("sample points:")
        lines.extend(f"  {pt}" for pt in report.samples(sample_count))
    return "\n".join(lines)


def fmt_table(rows: Iterable[Sequence[Any]]) -> str:
    out = []
    for label, value in rows:
        text = fmt_number(value) if isinstance(value, float) else str(value)
        out.append(f"{label}: {text}")
    return "\n".join(out)
