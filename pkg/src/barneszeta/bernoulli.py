"""Higher-order Bernoulli numbers B_k(w), polynomials B_n(a|w), and the
derivative values of the associated Bernoullian functions at zero.

Convention: B_n(a|w) is the coefficient of z^n/n! in

    z^d e^{az} prod_i w_i / (e^{w_i z} - 1),    |z| < 2*pi/max|w_i|,

and B_k(w) = B_k(0|w).  (Some references rescale these objects by
prod_i w_i; that convention is *not* used here.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from .foundations import DomainError, TruncationError, as_weights

MAX_TABLE = 256
_CLASSICAL_CAP = 320


@lru_cache(maxsize=None)
def classical_bernoulli(n: int) -> tuple[Fraction, ...]:
    """Classical Bernoulli numbers B_0..B_n (B_1 = -1/2) as exact rationals.

    Uses the defining recurrence sum_{r=0}^{m} C(m+1, r) B_r = 0 for m >= 1,
    which produces the z/(e^z - 1) expansion coefficients directly.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > _CLASSICAL_CAP:
        raise TruncationError(f"classical Bernoulli table capped at {_CLASSICAL_CAP}")
    out = [Fraction(1)]
    for m in range(1, n + 1):
        if m > 2 and m % 2 == 1:
            out.append(Fraction(0))
            continue
        acc = Fraction(0)
        for r in range(m):
            acc += comb(m + 1, r) * out[r]
        out.append(-acc / (m + 1))
    return tuple(out)


@dataclass(frozen=True)
class BernoulliTable:
    """Pure function of (w, N): the numbers B_0(w)..B_N(w)."""

    w: tuple[complex, ...]
    N: int
    numbers: tuple[complex, ...]

    def __post_init__(self):
        if len(self.numbers) != self.N + 1:
            raise DomainError("table length must be N + 1")


@lru_cache(maxsize=512)
def _table_cached(w: tuple[complex, ...], N: int) -> BernoulliTable:
    d = len(w)
    classical = classical_bernoulli(N)
    # One-weight coefficient arrays for w_i*z/(e^{w_i z}-1) = sum B_n w_i^n z^n/n!.
    coeffs = []
    for wi in w:
        c = []
        pw = complex(1.0)
        for n in range(N + 1):
            c.append(complex(classical[n]) * pw / factorial(n))
            pw *= wi
        coeffs.append(c)
    prod = coeffs[0]
    for i in range(1, d):
        nxt = [complex(0.0)] * (N + 1)
        ci = coeffs[i]
        for n in range(N + 1):
            s = complex(0.0)
            for l in range(n + 1):
                s += prod[l] * ci[n - l]
            nxt[n] = s
        prod = nxt
    numbers = tuple(prod[n] * factorial(n) for n in range(N + 1))
    return BernoulliTable(w=w, N=N, numbers=numbers)


def bernoulli_numbers(w: Iterable[complex], N: int) -> BernoulliTable:
    """Table of higher-order Bernoulli numbers B_0(w)..B_N(w).

    Computed as the Cauchy product of the d classical one-weight expansions,
    each held exactly in rationals and scaled by w_i^n/n! before convolving.
    """
    if N < 0:
        raise DomainError("N must be >= 0")
    if N > MAX_TABLE:
        raise TruncationError(f"Bernoulli table size capped at N = {MAX_TABLE}")
    return _table_cached(as_weights(w), N)


def bernoulli_poly(n: int, a: complex, w: Iterable[complex]) -> complex:
    """Higher-order Bernoulli polynomial B_n(a|w), degree n in a.

    Uses the binomial expansion B_n(a|w) = sum_l C(n, l) a^l B_{n-l}(w).
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    wt = as_weights(w)
    a = complex(a)
    numbers = bernoulli_numbers(wt, n).numbers
    acc = complex(0.0)
    pa = complex(1.0)
    for l in range(n + 1):
        acc += comb(n, l) * pa * numbers[n - l]
        pa *= a
    return acc


def _poly_coeffs(n: int, w: tuple[complex, ...]) -> list[complex]:
    """Coefficients c_l of B_n(a|w) = sum_l c_l a^l."""
    numbers = bernoulli_numbers(w, n).numbers
    return [comb(n, l) * numbers[n - l] for l in range(n + 1)]


def bernoullian_dS(m: int, w: Iterable[complex]) -> complex:
    """The d-th derivative at zero of the m-th Bernoullian function.

    The Bernoullian functions S are pinned down by S'(a) being a known
    multiple of B_{m+d-1}(a|w); differentiating that relation d-1 more
    times in a (term by term on the polynomial coefficients, using
    d/da B_n = n B_{n-1}) and evaluating at a = 0 yields this value.
    It collapses algebraically to B_m(w)/prod(w_i); the collapse is
    asserted in the test suite rather than assumed here.
    """
    if m < 0:
        raise DomainError("m must be >= 0")
    wt = as_weights(w)
    d = len(wt)
    n = m + d - 1
    coeffs = _poly_coeffs(n, wt)
    for _ in range(d - 1):
        coeffs = [l * c for l, c in enumerate(coeffs)][1:]
    value_at_0 = coeffs[0] if coeffs else complex(0.0)
    prod_w = complex(1.0)
    for wi in wt:
        prod_w *= wi
    return factorial(m) / factorial(n) / prod_w * value_at_0


def bernoullian_dS_closed(m: int, w: Iterable[complex]) -> complex:
    """Closed form B_m(w)/prod(w_i) that bernoullian_dS must collapse to."""
    wt = as_weights(w)
    prod_w = complex(1.0)
    for wi in wt:
        prod_w *= wi
    return bernoulli_numbers(wt, m).numbers[m] / prod_w


def ds_values(w: Sequence[complex], count: int) -> list[complex]:
    """First `count` Bernoullian derivative values, index m = 0..count-1."""
    return [bernoullian_dS(m, w) for m in range(count)]
