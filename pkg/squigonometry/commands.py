"""Command handlers: each runs one operation and returns renderable output."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .config import MC_WORKERS, logger
from .errors import ArgumentError
from .exactmath import stirling_first
from .formatting import (
    build_envelope,
    fmt_classification,
    fmt_estimate,
    fmt_fraction,
    fmt_number,
    fmt_optimal,
    fmt_rigidity,
    fmt_series_table,
    fmt_table,
    render_csv,
    render_json,
)
from .geometry import (
    curvature_diagonal,
    optimal_p,
    pythagorean_point,
    rational_point_classification,
)
from .models import Method, PParam, QuadratureConfig
from .pi import METHODS, pi_gamma, pi_estimate, pi_monotonicity_scan, pi_monte_carlo, pi_series
from .ptrig import FUNCTIONS, areal_point, cos_p, sin_p
from .series import (
    arcsin_derivative_gamma_forms,
    arcsin_series,
    leading_correction,
    rigidity_report,
    sin_series,
)


@dataclass
class CommandOutput:
    command: str
    parameters: Dict[str, Any]
    result: Any
    plain: str
    method: Optional[str] = None
    seed: Optional[int] = None
    tolerances: Dict[str, Any] = field(default_factory=dict)

    def render(self, as_json: bool) -> str:
        if as_json:
            return render_json(
                build_envelope(self.command, self.parameters, self.result, self.method, self.seed, self.tolerances)
            )
        return self.plain


def cmd_eval(function: str, p: float, arg: float, cfg: QuadratureConfig) -> CommandOutput:
    if function not in FUNCTIONS:
        raise ArgumentError(f"unknown function {function!r}; choose from {', '.join(FUNCTIONS)}")
    pp = PParam.of(p)
    value = FUNCTIONS[function](arg, pp, cfg)
    arg_name = "x" if function.startswith("arc") else "t"
    return CommandOutput(
        "eval",
        {"function": function, "p": pp.p, arg_name: arg},
        {"value": value},
        fmt_number(value),
        method="quadrature",
        tolerances=cfg.to_dict(),
    )


def _integer_p(p: float, minimum: int) -> int:
    if not float(p).is_integer():
        raise ArgumentError(f"p must be an integer here, got {p!r}")
    if int(p) < minimum:
        raise ArgumentError(f"p must be at least {minimum}, got {p!r}")
    return int(p)


def cmd_series(kind: str, p: float, order: int, rigidity: bool = False) -> CommandOutput:
    builders = {"arcsin": arcsin_series, "sin": sin_series}
    if kind not in builders:
        raise ArgumentError(f"unknown series {kind!r}; choose arcsin or sin")
    p_int = _integer_p(p, 2)
    series = builders[kind](p_int, order)
    result: Dict[str, Any] = {"series": series.to_json()}
    plain = fmt_series_table(series, kind, p_int)
    if rigidity:
        report = rigidity_report(p_int, min(order, 60))
        result["rigidity"] = report.to_dict()
        plain += "\n" + fmt_rigidity(report)
    return CommandOutput(
        "series",
        {"kind": kind, "p": p_int, "order": order, "rigidity": rigidity},
        result,
        plain,
        method="lagrange-inversion" if kind == "sin" else "binomial-series",
    )


def cmd_pi(
    p: Optional[float],
    method: str,
    cfg: QuadratureConfig,
    n: Optional[int] = None,
    seed: Optional[int] = None,
    terms: int = 1000,
    workers: int = MC_WORKERS,
    grid: Optional[Sequence[float]] = None,
) -> CommandOutput:
    if grid is not None:
        scan = pi_monotonicity_scan(grid)
        return CommandOutput(
            "pi",
            {"grid": list(scan_p for scan_p, _ in scan.rows)},
            scan.to_dict(),
            render_csv(["p", "pi_p"], scan.rows),
            method=Method.GAMMA.value,
        )
    if p is None:
        raise ArgumentError("pi needs --p or --grid")
    if method not in METHODS:
        raise ArgumentError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if method == "mc" and seed is None:
        raise ArgumentError("--method mc needs an explicit --seed")
    if method == "mc" and n is None:
        raise ArgumentError("--method mc needs --n")
    est = pi_estimate(p, method, cfg=cfg, terms=terms, n=n, seed=seed, workers=workers)
    parameters: Dict[str, Any] = {"p": float(p), "method": method}
    if method == "series":
        parameters["terms"] = terms
    if method == "mc":
        parameters.update({"n": n, "workers": workers})
    return CommandOutput(
        "pi",
        parameters,
        est.to_dict(),
        fmt_estimate(est),
        method=est.method.value,
        seed=est.seed,
        tolerances=cfg.to_dict() if method in ("integral", "area") else {},
    )


def cmd_optimal(objective: str, cfg: QuadratureConfig, tol: float = 1e-10) -> CommandOutput:
    res = optimal_p(objective, tol=tol, cfg=cfg)
    return CommandOutput(
        "optimal",
        {"objective": res.objective.value, "solver_tol": tol},
        res.to_dict(),
        fmt_optimal(res),
        method="brentq",
        tolerances={**cfg.to_dict(), "solver_tol": tol},
    )


def cmd_sample(p: float, count: int, what: str, cfg: QuadratureConfig) -> CommandOutput:
    if count < 2:
        raise ArgumentError(f"count must be at least 2, got {count}")
    pp = PParam.of(p)
    pi_p = pi_gamma(pp.p)
    if what == "circle":
        header = ["x", "y"]
        quarter = 0.25 * pi_p
        rows = [tuple(areal_point(quarter * i / (count - 1), pp, cfg)) for i in range(count)]
    elif what in ("sin", "cos"):
        fn = sin_p if what == "sin" else cos_p
        header = ["t", f"{what}_p"]
        period = 2.0 * pi_p
        rows = []
        for i in range(count):
            t = period * i / (count - 1)
            rows.append((t, fn(t, pp, cfg)))
    else:
        raise ArgumentError(f"unknown sample kind {what!r}; choose circle, sin or cos")
    return CommandOutput(
        "sample",
        {"p": pp.p, "count": count, "what": what},
        {"header": header, "rows": [list(r) for r in rows]},
        render_csv(header, rows),
        method="areal" if what == "circle" else "quadrature",
        tolerances=cfg.to_dict(),
    )


def cmd_points(p: float, samples: int = 5) -> CommandOutput:
    report = rational_point_classification(p)
    return CommandOutput(
        "points",
        {"p": report.p},
        report.to_dict(samples),
        fmt_classification(report, samples),
        method="classification",
    )


def cmd_reproduce(cfg: QuadratureConfig, seed: Optional[int] = None, n: int = 10_000_000) -> CommandOutput:
    """Reference values of the library, recomputed into one table."""
    rows: List[tuple] = []
    for p in (1, 2, 3, 4):
        rows.append((f"pi_{p} (gamma form)", pi_gamma(p)))
    rows.append(("pi_4 (series, 4 terms)", pi_series(4, 4).value))
    rows.append(("s(3, 2)", stirling_first(3, 2)))

    a2 = arcsin_series(2, 7).ordinary()
    rows.append(("arcsin_2 x^3, x^5, x^7", ", ".join(str(a2[l]) for l in (3, 5, 7))))
    a4 = arcsin_series(4, 13).ordinary()
    rows.append(("arcsin_4 x^5, x^9, x^13", ", ".join(str(a4[l]) for l in (5, 9, 13))))
    g2 = sin_series(2, 5)
    rows.append(("sin_2 g_1..g_5", ", ".join(str(g2[l]) for l in range(1, 6))))
    g4 = sin_series(4, 9)
    rows.append(("sin_4 g_5, g_9", f"{g4[5]}, {g4[9]}"))
    rows.append(("sin_4 leading correction", fmt_fraction(leading_correction(4))))

    forms = arcsin_derivative_gamma_forms(2, 3)
    rows.append(("arcsin_2''' at 0 (exact / corrected / printed gamma form)",
                 f"{forms.exact} / {fmt_number(forms.corrected)} / {fmt_number(forms.printed)}"))

    for objective in ("area", "perimeter", "curvature"):
        rows.append((f"optimal p ({objective})", optimal_p(objective, cfg=cfg).p_star))
    rows.append(("diagonal curvature at p = 1", curvature_diagonal(1.0)))
    rows.append(("rational point from (2, 1)", str(pythagorean_point(2, 1))))
    rows.append(("rational points for p = 4", len(rational_point_classification(4).points)))

    if seed is not None:
        for p in (3, 4):
            est = pi_monte_carlo(p, n, seed)
            rows.append((f"pi_{p} (Monte Carlo, n={n})", est.value))
    else:
        logger.debug("Monte Carlo rows skipped without --seed")

    result = {label: value for label, value in rows}
    return CommandOutput(
        "reproduce",
        {"seed": seed, "n": n if seed is not None else None},
        result,
        fmt_table(rows),
        method="all",
        seed=seed,
        tolerances=cfg.to_dict(),
    )
