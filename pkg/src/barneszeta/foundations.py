"""Shared domain types, parameter validation, and small exact helpers.

Branch convention used throughout the package: every logarithm and power is
taken on the principal branch, arg z in (-pi, pi], with z**s defined as
exp(s*log z) for z != 0.  All parameters live in the right half-plane
(Re(a) > 0, Re(w_i) > 0), so lattice points a + n.w never touch the cut.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping


class BarnesZetaError(Exception):
    """Base class for every error raised by this package."""


class DomainError(BarnesZetaError, ValueError):
    """A parameter violates its half-plane or positivity constraint."""


class PoleError(BarnesZetaError, ArithmeticError):
    """Evaluation requested at a pole of the target function."""

    def __init__(self, message: str, q: int | None = None):
        super().__init__(message)
        self.q = q


class ConvergenceError(BarnesZetaError, ArithmeticError):
    """A series, limit, or lattice sum failed to converge within budget."""

    def __init__(self, message: str, diagnostics: Mapping | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class QuadratureError(BarnesZetaError, ArithmeticError):
    """Adaptive quadrature could not meet the requested tolerance."""

    def __init__(self, message: str, achieved: float = float("inf")):
        super().__init__(message)
        self.achieved = achieved


class TruncationError(BarnesZetaError, ValueError):
    """A coefficient table was requested beyond its hard cap."""


class ResourceError(BarnesZetaError, RuntimeError):
    """An explicit enumeration would exceed its configured budget."""


class DimensionError(BarnesZetaError, ValueError):
    """Operation restricted to a specific dimension was called outside it."""


class EvaluationError(BarnesZetaError, RuntimeError):
    """A user-supplied callable failed; carries the offending subset."""

    def __init__(self, message: str, subset: tuple[int, ...] = ()):
        super().__init__(message)
        self.subset = subset


class Method(str, Enum):
    """Which computational route produced a value."""

    SERIES = "series"
    LIMIT = "limit"
    INTEGRAL = "integral"
    DIRECT = "direct"
    REDUCTION = "reduction"


def as_weights(w: Iterable[complex]) -> tuple[complex, ...]:
    """Normalize a weight list to a tuple of complex numbers (no validation)."""
    wt = tuple(complex(x) for x in w)
    if not wt:
        raise DomainError("weight list must contain at least one entry")
    return wt


def validate_weights(w: Iterable[complex]) -> tuple[complex, ...]:
    """Normalize and check Re(w_i) > 0 for every weight."""
    wt = as_weights(w)
    for i, wi in enumerate(wt, start=1):
        if not wi.real > 0:
            raise DomainError(f"weight w_{i} = {wi} violates Re(w_i) > 0")
    return wt


@dataclass(frozen=True)
class BarnesParams:
    """Parameter tuple (a, w_1..w_d) of the d-dimensional lattice a + n.w.

    The dimension d is always len(w); it is never stored separately.
    """

    a: complex
    w: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "w", as_weights(self.w))

    @property
    def d(self) -> int:
        return len(self.w)


def validate_params(p: BarnesParams) -> None:
    """Check Re(a) > 0 and Re(w_i) > 0; raise DomainError naming the offender."""
    if not p.a.real > 0:
        raise DomainError(f"parameter a = {p.a} violates Re(a) > 0")
    validate_weights(p.w)


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and budgets shared by the evaluation routes."""

    rel_tol: float = 1e-10
    max_shells: int = 100_000
    limit_M_schedule: tuple[int, ...] = (1000, 2000, 4000)
    quad_rel_tol: float = 1e-12
    quad_split_point: float = 1.0
    alpha_step: float = 1e-4

    def __post_init__(self):
        object.__setattr__(self, "limit_M_schedule", tuple(int(m) for m in self.limit_M_schedule))
        for name in ("rel_tol", "quad_rel_tol", "quad_split_point", "alpha_step"):
            if not getattr(self, name) > 0:
                raise DomainError(f"EvalConfig.{name} must be positive")
        if self.max_shells < 1:
            raise DomainError("EvalConfig.max_shells must be at least 1")
        sched = self.limit_M_schedule
        if not sched or any(b <= a for a, b in zip(sched, sched[1:])):
            raise DomainError("EvalConfig.limit_M_schedule must be nonempty and strictly increasing")
        if sched[0] < 1:
            raise DomainError("EvalConfig.limit_M_schedule entries must be >= 1")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class EvalResult:
    """A computed complex value with an error estimate and route diagnostics."""

    value: complex
    abs_error_estimate: float
    method: Method
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.abs_error_estimate >= 0:
            raise DomainError("abs_error_estimate must be nonnegative")


@lru_cache(maxsize=None)
def harmonic(k: int) -> Fraction:
    """Harmonic number H_k = sum_{i=1}^k 1/i as an exact rational; H_0 = 0."""
    if k < 0:
        raise DomainError("harmonic numbers are defined for k >= 0")
    if k == 0:
        return Fraction(0)
    return harmonic(k - 1) + Fraction(1, k)


def harmonic_float(k: int) -> float:
    return float(harmonic(k))
