"""Command-line interface: evaluate any quantity by any route, emit JSON or
CSV, and run cross-representation comparison reports.

Conventions:
  * complex scalars are written RE or RE,IM (e.g. --alpha 2.5,1);
  * weights are a comma list of reals (e.g. --w 1,1.41421356);
  * floats print with 17 significant digits, CSV uses LF line endings,
    JSON is emitted with sorted keys so output round-trips byte for byte;
  * BARNES_ZETA_TOL overrides the default tolerance, flags override both.

Exit codes: 0 ok, 1 comparison failure, 2 usage, 3 convergence/quadrature
failure, 4 pole.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .barnes_functions import Route, gamma_dq, log_gamma_B, log_rho, multiple_gamma, psi_B
from .foundations import (
    BarnesParams,
    BarnesZetaError,
    ConvergenceError,
    DomainError,
    EvalConfig,
    EvalResult,
    Method,
    PoleError,
    QuadratureError,
    validate_params,
    validate_weights,
)
from .integral_rep import (
    barnes_zeta_integral,
    deriv0_barnes_integral,
    deriv0_bh_integral,
    fp_barnes_integral,
    fp_bh_integral,
    residue,
    residue_bh,
    zeta_bh_integral,
)
from .limit_rep import deriv0_barnes_limit, deriv0_bh_limit, fp_barnes_limit, fp_bh_limit
from .oracles import direct_sum, direct_sum_bh, isotropic_reduction, rational_d2_reduction
from .series_rep import (
    barnes_zeta_series,
    deriv0_barnes_series,
    deriv0_bh_series,
    fp_barnes_series,
    fp_bh_series,
    zeta_bh_series,
)

EXIT_OK = 0
EXIT_COMPARISON = 1
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3
EXIT_POLE = 4


def fmt17(x: float) -> str:
    return format(float(x), ".17g")


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def parse_weights(text: str) -> tuple[complex, ...]:
    try:
        return tuple(complex(float(x), 0.0) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}") from exc


def _jsonable(obj):
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Method):
        return obj.value
    return obj


def canonical_json(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, separators=(",", ": "))


def result_payload(res: EvalResult) -> dict:
    return {
        "value": [res.value.real, res.value.imag],
        "est_error": res.abs_error_estimate,
        "method": res.method.value,
        "diagnostics": _jsonable(res.diagnostics),
    }


def emit_result(res: EvalResult, as_json: bool, out=None) -> None:
    out = out if out is not None else sys.stdout
    if as_json:
        out.write(canonical_json(result_payload(res)) + "\n")
    else:
        v = res.value
        out.write(f"value = {fmt17(v.real)} {'+' if v.imag >= 0 else '-'} {fmt17(abs(v.imag))}j"
                  f"  (est_error={res.abs_error_estimate:.3e}, method={res.method.value})\n")


def build_config(args) -> EvalConfig:
    tol = getattr(args, "tol", None)
    if tol is None:
        env = os.environ.get("BARNES_ZETA_TOL")
        tol = float(env) if env else None
    if tol is None:
        return EvalConfig()
    return EvalConfig(rel_tol=tol)


def _pole_hint(exc: PoleError, args) -> str:
    q = exc.q
    if q is None:
        return str(exc)
    try:
        if getattr(args, "homogeneous", False):
            res = residue_bh(q, args.w)
        else:
            res = residue(q, BarnesParams(args.a, args.w))
        return f"{exc} (hint: residue at alpha = {q} is {fmt17(res.real)}{res.imag:+.17g}j)"
    except Exception:
        return str(exc)


# ---------------------------------------------------------------------------
# eval


def _reduction_eval(alpha: complex, a: complex, w: tuple[complex, ...]) -> EvalResult:
    d = len(w)
    if all(wi == w[0] for wi in w):
        value = isotropic_reduction(alpha, a, w[0], d)
    elif d == 2 and w[0] == 1 and w[1].imag == 0 and float(w[1].real).is_integer() and w[1].real >= 1:
        value = rational_d2_reduction(alpha, a, int(w[1].real))
    else:
        raise DomainError(
            "reduction method needs equal weights or d = 2 with w = (1, n), n a positive integer"
        )
    return EvalResult(value, 1e-13 * (1 + abs(value)), Method.REDUCTION, {})


def cmd_eval(args) -> int:
    cfg = build_config(args)
    wt = validate_weights(args.w)
    if args.homogeneous:
        table = {
            "series": lambda: zeta_bh_series(args.alpha, wt, None if args.tol is None else _sc(cfg)),
            "integral": lambda: zeta_bh_integral(args.alpha, wt, None, cfg),
            "direct": lambda: direct_sum_bh(args.alpha, wt, cfg),
        }
        if args.method == "reduction":
            raise DomainError("reduction method applies to the inhomogeneous function")
    else:
        if args.a is None:
            raise DomainError("--a is required unless --homogeneous is given")
        p = BarnesParams(args.a, wt)
        validate_params(p)
        table = {
            "series": lambda: barnes_zeta_series(args.alpha, p, None if args.tol is None else _sc(cfg)),
            "integral": lambda: barnes_zeta_integral(args.alpha, p, None, cfg),
            "direct": lambda: direct_sum(args.alpha, p, cfg),
            "reduction": lambda: _reduction_eval(args.alpha, p.a, wt),
        }
    res = table[args.method]()
    emit_result(res, args.json)
    return EXIT_OK


def _sc(cfg: EvalConfig):
    from .series_rep import SeriesControls

    return SeriesControls(config=cfg)


# ---------------------------------------------------------------------------
# fp / deriv0 / gamma


def cmd_fp(args) -> int:
    cfg = build_config(args)
    wt = validate_weights(args.w)
    if args.homogeneous:
        fns = {"series": fp_bh_series, "integral": fp_bh_integral, "limit": fp_bh_limit}
        res = fns[args.method](args.q, wt, cfg)
    else:
        if args.a is None:
            raise DomainError("--a is required unless --homogeneous is given")
        p = BarnesParams(args.a, wt)
        fns = {"series": fp_barnes_series, "integral": fp_barnes_integral,
               "limit": fp_barnes_limit}
        res = fns[args.method](args.q, p, cfg)
    emit_result(res, args.json)
    return EXIT_OK


def cmd_deriv0(args) -> int:
    cfg = build_config(args)
    wt = validate_weights(args.w)
    if args.homogeneous:
        fns = {"series": deriv0_bh_series, "integral": deriv0_bh_integral,
               "limit": deriv0_bh_limit}
        res = fns[args.method](wt, cfg)
    else:
        if args.a is None:
            raise DomainError("--a is required unless --homogeneous is given")
        p = BarnesParams(args.a, wt)
        fns = {"series": deriv0_barnes_series, "integral": deriv0_barnes_integral,
               "limit": deriv0_barnes_limit}
        res = fns[args.method](p, cfg)
    emit_result(res, args.json)
    return EXIT_OK


def cmd_gamma(args) -> int:
    cfg = build_config(args)
    route = Route(args.method)
    if args.fn == "multigamma":
        if args.a is None or args.d is None:
            raise DomainError("multigamma needs --a and --d")
        res = multiple_gamma(args.a, args.d, route, cfg)
    elif args.fn == "logrho":
        res = log_rho(validate_weights(args.w), route, cfg)
    elif args.fn == "gammadq":
        if args.q is None:
            raise DomainError("gammadq needs --q")
        res = gamma_dq(args.q, validate_weights(args.w), route, cfg)
    elif args.fn == "loggammaB":
        if args.a is None:
            raise DomainError("loggammaB needs --a")
        res = log_gamma_B(BarnesParams(args.a, validate_weights(args.w)), route, cfg)
    else:  # psiB
        if args.a is None or args.q is None:
            raise DomainError("psiB needs --a and --q")
        res = psi_B(args.q, BarnesParams(args.a, validate_weights(args.w)), route, cfg)
    emit_result(res, args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# compare


@dataclass(frozen=True)
class ComparisonReport:
    """Cross-representation agreement for all finite parts and derivatives."""

    params: dict
    quantities: list
    agreement_matrix: dict
    tolerance: float
    passed: bool = field(default=False)

    def to_json(self) -> str:
        return canonical_json({
            "params": self.params,
            "quantities": self.quantities,
            "agreement_matrix": self.agreement_matrix,
            "tolerance": self.tolerance,
            "pass": self.passed,
        })

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["quantity", "series_re", "series_im", "integral_re", "integral_im",
                         "limit_re", "limit_im", "max_delta", "pass"])
        by_name: dict[str, dict[str, complex]] = {}
        for item in self.quantities:
            by_name.setdefault(item["name"], {})[item["route"]] = complex(*item["value"])
        for name, routes in by_name.items():
            delta = self.agreement_matrix[name]
            scale = 1.0 + abs(routes.get("series", 0.0))
            row = [name]
            for route in ("series", "integral", "limit"):
                v = routes.get(route)
                row.extend(["", ""] if v is None else [fmt17(v.real), fmt17(v.imag)])
            row.append(fmt17(delta))
            row.append(str(delta <= self.tolerance * scale).lower())
            writer.writerow(row)
        return buf.getvalue()


def _compare_quantities(p: BarnesParams, cfg: EvalConfig):
    d = p.d
    wt = p.w
    spec = []
    for q in range(1, d + 1):
        spec.append((f"fp_q{q}", {
            "series": lambda q=q: fp_barnes_series(q, p, cfg),
            "integral": lambda q=q: fp_barnes_integral(q, p, cfg),
            "limit": lambda q=q: fp_barnes_limit(q, p, cfg),
        }))
        spec.append((f"fp_bh_q{q}", {
            "series": lambda q=q: fp_bh_series(q, wt, cfg),
            "integral": lambda q=q: fp_bh_integral(q, wt, cfg),
            "limit": lambda q=q: fp_bh_limit(q, wt, cfg),
        }))
    spec.append(("deriv0", {
        "series": lambda: deriv0_barnes_series(p, cfg),
        "integral": lambda: deriv0_barnes_integral(p, cfg),
        "limit": lambda: deriv0_barnes_limit(p, cfg),
    }))
    spec.append(("deriv0_bh", {
        "series": lambda: deriv0_bh_series(wt, cfg),
        "integral": lambda: deriv0_bh_integral(wt, cfg),
        "limit": lambda: deriv0_bh_limit(wt, cfg),
    }))
    return spec


def cmd_compare(args) -> int:
    cfg = build_config(args)
    wt = validate_weights(args.w)
    p = BarnesParams(args.a, wt)
    validate_params(p)
    tol = args.tol_cmp if args.tol_cmp is not None else (1e-5 if p.d <= 2 else 1e-4)
    quantities = []
    agreement = {}
    passed = True
    for name, routes in _compare_quantities(p, cfg):
        values = {}
        for route, fn in routes.items():
            res = fn()
            values[route] = res.value
            quantities.append({
                "name": name,
                "route": route,
                "value": [res.value.real, res.value.imag],
                "est_error": res.abs_error_estimate,
            })
        vals = list(values.values())
        delta = max(abs(x - y) for i, x in enumerate(vals) for y in vals[i + 1:])
        agreement[name] = delta
        scale = 1.0 + abs(values["series"])
        passed = passed and delta <= tol * scale
    report = ComparisonReport(
        params={"a": [p.a.real, p.a.imag], "w": [[wi.real, wi.imag] for wi in wt]},
        quantities=quantities,
        agreement_matrix=agreement,
        tolerance=tol,
        passed=passed,
    )
    if args.out:
        stem = args.out[:-5] if args.out.endswith(".json") else args.out
        with open(stem + ".json", "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
        with open(stem + ".csv", "w", encoding="utf-8", newline="") as fh:
            fh.write(report.to_csv())
    else:
        sys.stdout.write(report.to_json() + "\n")
        sys.stdout.write(report.to_csv())
    return EXIT_OK if passed else EXIT_COMPARISON


# ---------------------------------------------------------------------------
# table


def parse_grid(text: str) -> tuple[float, float, int]:
    try:
        start, stop, num = text.split(":")
        out = (float(start), float(stop), int(num))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected START:STOP:N, got {text!r}") from exc
    if out[2] < 1:
        raise argparse.ArgumentTypeError("grid needs at least one point")
    return out


def cmd_table(args) -> int:
    cfg = build_config(args)
    wt = validate_weights(args.w)
    start, stop, num = args.alpha_grid
    alphas = [start] if num == 1 else [start + i * (stop - start) / (num - 1) for i in range(num)]
    rows = []
    saw_pole = False
    saw_convergence = False
    for ar in alphas:
        alpha = complex(ar, args.alpha_im)
        try:
            if args.homogeneous:
                fns = {"series": lambda: zeta_bh_series(alpha, wt),
                       "integral": lambda: zeta_bh_integral(alpha, wt, None, cfg),
                       "direct": lambda: direct_sum_bh(alpha, wt, cfg)}
                res = fns[args.method]()
            else:
                p = BarnesParams(args.a, wt)
                fns = {"series": lambda: barnes_zeta_series(alpha, p),
                       "integral": lambda: barnes_zeta_integral(alpha, p, None, cfg),
                       "direct": lambda: direct_sum(alpha, p, cfg),
                       "reduction": lambda: _reduction_eval(alpha, p.a, wt)}
                res = fns[args.method]()
            rows.append((alpha, res.value, res.abs_error_estimate, res.method.value))
        except PoleError:
            saw_pole = True
            rows.append((alpha, complex(float("nan"), float("nan")), float("nan"), args.method))
        except (ConvergenceError, QuadratureError):
            saw_convergence = True
            rows.append((alpha, complex(float("nan"), float("nan")), float("nan"), args.method))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha_re", "alpha_im", "value_re", "value_im", "est_error", "method"])
    for alpha, value, est, method in rows:
        writer.writerow([fmt17(alpha.real), fmt17(alpha.imag), fmt17(value.real),
                         fmt17(value.imag), fmt17(est), method])
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    if saw_convergence:
        return EXIT_CONVERGENCE
    if saw_pole:
        return EXIT_POLE
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(sub, need_alpha=False, methods=None, homog=True):
    sub.add_argument("--a", type=parse_complex, default=None, help="offset a as RE or RE,IM")
    sub.add_argument("--w", type=parse_weights, required=True, help="weights, comma list")
    if need_alpha:
        sub.add_argument("--alpha", type=parse_complex, required=True, help="argument alpha")
    if methods:
        sub.add_argument("--method", choices=methods, default=methods[0])
    if homog:
        sub.add_argument("--homogeneous", action="store_true",
                         help="evaluate the a = 0, origin-excluded variant")
    sub.add_argument("--tol", type=float, default=None, help="relative tolerance")
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barneszeta",
        description="Lattice zeta function evaluations with cross-checking representations.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate the zeta function itself")
    _add_common(p_eval, need_alpha=True, methods=["series", "integral", "direct", "reduction"])
    p_eval.set_defaults(func=cmd_eval)

    p_fp = subs.add_parser("fp", help="finite part at a pole alpha = q")
    p_fp.add_argument("--q", type=int, required=True)
    _add_common(p_fp, methods=["series", "integral", "limit"])
    p_fp.set_defaults(func=cmd_fp)

    p_d0 = subs.add_parser("deriv0", help="derivative at alpha = 0")
    _add_common(p_d0, methods=["series", "integral", "limit"])
    p_d0.set_defaults(func=cmd_deriv0)

    p_g = subs.add_parser("gamma", help="Gamma-family functions")
    p_g.add_argument("--fn", choices=["loggammaB", "psiB", "logrho", "gammadq", "multigamma"],
                     required=True)
    p_g.add_argument("--q", type=int, default=None)
    p_g.add_argument("--d", type=int, default=None)
    p_g.add_argument("--w", type=parse_weights, default=(1.0 + 0j,))
    p_g.add_argument("--a", type=parse_complex, default=None)
    p_g.add_argument("--method", choices=["series", "integral", "limit", "best"],
                     default="series")
    p_g.add_argument("--tol", type=float, default=None)
    p_g.add_argument("--json", action="store_true")
    p_g.set_defaults(func=cmd_gamma)

    p_cmp = subs.add_parser("compare", help="cross-representation comparison report")
    p_cmp.add_argument("--a", type=parse_complex, required=True)
    p_cmp.add_argument("--w", type=parse_weights, required=True)
    p_cmp.add_argument("--tol", dest="tol_cmp", type=float, default=None,
                       help="agreement tolerance (default 1e-5 for d<=2, 1e-4 for d=3)")
    p_cmp.add_argument("--out", default=None, help="output stem; writes .json and .csv")
    p_cmp.set_defaults(func=cmd_compare, tol=None)

    p_tab = subs.add_parser("table", help="CSV table over an alpha grid")
    p_tab.add_argument("--alpha-grid", type=parse_grid, required=True, metavar="START:STOP:N")
    p_tab.add_argument("--alpha-im", type=float, default=0.0)
    _add_common(p_tab, methods=["series", "integral", "direct", "reduction"])
    p_tab.add_argument("--out", default=None)
    p_tab.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except PoleError as exc:
        sys.stderr.write(_pole_hint(exc, args) + "\n")
        return EXIT_POLE
    except (ConvergenceError, QuadratureError) as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_CONVERGENCE
    except (DomainError, BarnesZetaError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
