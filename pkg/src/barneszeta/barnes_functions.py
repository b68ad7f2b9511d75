"""The derived Gamma-family functions: log of the lattice Gamma function,
multiple Gamma, the generalized digamma family, the gamma modular forms.

These are thin compositions over the representation modules:

    log rho(w)        = -zeta_bh'(0|w)
    log Gamma_B(a|w)  = zeta_B'(0,a|w) + log rho(w)
    Psi^(q)(a|w)      = (-1)^q (q-1)! * (FP at q + H_{q-1} * residue)
    gamma_dq(w)       = (-1)^(q-1) (q-1)! * (FP_h at q + H_{q-1} * residue_h)

Normalization: Gamma_B carries the rho(w) factor (the classical Barnes
convention); the alternative convention divides it out.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial

from .foundations import (
    BarnesParams,
    DEFAULT_CONFIG,
    DomainError,
    EvalConfig,
    EvalResult,
    harmonic_float,
    validate_params,
    validate_weights,
)
from .integral_rep import (
    deriv0_barnes_integral,
    deriv0_bh_integral,
    fp_barnes_integral,
    fp_bh_integral,
    residue,
    residue_bh,
)
from .limit_rep import (
    deriv0_barnes_limit,
    deriv0_bh_limit,
    fp_barnes_limit,
    fp_bh_limit,
)
from .series_rep import (
    deriv0_barnes_series,
    deriv0_bh_series,
    fp_barnes_series,
    fp_bh_series,
)


class Route(str, Enum):
    SERIES = "series"
    LIMIT = "limit"
    INTEGRAL = "integral"
    BEST = "best"


@dataclass(frozen=True)
class MethodChoice:
    """Route selector; BEST runs the series with an integral cross-check."""

    route: Route = Route.BEST


def _as_route(method: MethodChoice | Route | str | None) -> Route:
    if method is None:
        return Route.BEST
    if isinstance(method, MethodChoice):
        return method.route
    return Route(method)


_FP = {
    False: {Route.SERIES: fp_barnes_series, Route.LIMIT: fp_barnes_limit,
            Route.INTEGRAL: fp_barnes_integral},
    True: {Route.SERIES: fp_bh_series, Route.LIMIT: fp_bh_limit,
           Route.INTEGRAL: fp_bh_integral},
}
_DERIV0 = {
    False: {Route.SERIES: deriv0_barnes_series, Route.LIMIT: deriv0_barnes_limit,
            Route.INTEGRAL: deriv0_barnes_integral},
    True: {Route.SERIES: deriv0_bh_series, Route.LIMIT: deriv0_bh_limit,
           Route.INTEGRAL: deriv0_bh_integral},
}


def _dispatch(table, route: Route, args, cfg: EvalConfig) -> EvalResult:
    if route is Route.BEST:
        primary = table[Route.SERIES](*args, cfg)
        check = table[Route.INTEGRAL](*args, cfg)
        delta = abs(primary.value - check.value)
        diag = dict(primary.diagnostics)
        diag["cross_check_delta"] = delta
        return EvalResult(primary.value, max(primary.abs_error_estimate, delta),
                          primary.method, diag)
    return table[route](*args, cfg)


def log_rho(w, method: MethodChoice | Route | str | None = None,
            config: EvalConfig | None = None) -> EvalResult:
    """Log of the modular constant: -(homogeneous derivative at zero)."""
    cfg = config or DEFAULT_CONFIG
    wt = validate_weights(w)
    route = _as_route(method)
    res = _dispatch(_DERIV0[True], route, (wt,), cfg)
    return EvalResult(-res.value, res.abs_error_estimate, res.method, res.diagnostics)


def log_gamma_B(p: BarnesParams, method: MethodChoice | Route | str | None = None,
                config: EvalConfig | None = None) -> EvalResult:
    """log Gamma_B(a|w) = zeta'(0,a|w) + log rho(w) (Barnes normalization)."""
    cfg = config or DEFAULT_CONFIG
    validate_params(p)
    route = _as_route(method)
    dv = _dispatch(_DERIV0[False], route, (p,), cfg)
    lr = log_rho(p.w, method, cfg)
    return EvalResult(dv.value + lr.value,
                      dv.abs_error_estimate + lr.abs_error_estimate,
                      dv.method, {"deriv0": dv.diagnostics, "log_rho": lr.diagnostics})


def psi_B(q: int, p: BarnesParams, method: MethodChoice | Route | str | None = None,
          config: EvalConfig | None = None) -> EvalResult:
    """Generalized digamma value Psi^(q)(a|w), q = 1..d, from the finite part."""
    cfg = config or DEFAULT_CONFIG
    validate_params(p)
    if not 1 <= q <= p.d:
        raise DomainError(f"psi_B is defined through the poles q = 1..{p.d}, got {q}")
    route = _as_route(method)
    fp = _dispatch(_FP[False], route, (q, p), cfg)
    res = residue(q, p)
    scale = (-1.0) ** q * factorial(q - 1)
    value = scale * (fp.value + harmonic_float(q - 1) * res)
    return EvalResult(value, abs(scale) * fp.abs_error_estimate, fp.method,
                      {"fp": fp.diagnostics, "residue": [res.real, res.imag]})


def gamma_dq(q: int, w, method: MethodChoice | Route | str | None = None,
             config: EvalConfig | None = None) -> EvalResult:
    """q-th gamma modular form, from the homogeneous finite part at q."""
    cfg = config or DEFAULT_CONFIG
    wt = validate_weights(w)
    d = len(wt)
    if not 1 <= q <= d:
        raise DomainError(f"gamma_dq is defined for q = 1..{d}, got {q}")
    route = _as_route(method)
    fp = _dispatch(_FP[True], route, (q, wt), cfg)
    res = residue_bh(q, wt)
    scale = (-1.0) ** (q - 1) * factorial(q - 1)
    value = scale * (fp.value + harmonic_float(q - 1) * res)
    return EvalResult(value, abs(scale) * fp.abs_error_estimate, fp.method,
                      {"fp": fp.diagnostics, "residue": [res.real, res.imag]})


def multiple_gamma(a: complex, d: int, method: MethodChoice | Route | str | None = None,
                   config: EvalConfig | None = None) -> EvalResult:
    """log of the multiple Gamma function: log Gamma_B with unit weights."""
    if d < 1:
        raise DomainError("d must be >= 1")
    p = BarnesParams(a=a, w=(1.0,) * d)
    return log_gamma_B(p, method, config)
