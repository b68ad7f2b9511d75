"""Alternating subset symbols, lattice brackets, and hypercubic shells.

The F symbol is an alternating sum of a function over nonempty subset sums
of the weights; G adds the empty subset and is then the composition of the
d forward-difference operators with steps w_1..w_d, so it annihilates every
polynomial of degree < d.  The bracket [u(n)]_v is the same alternating
structure on the integer lattice, and sums of [u(n)]_1 over the cube
{0..M}^d telescope down to a single bracket at the far corner.

Finite differences of smooth functions at a large argument y lose roughly
d*log10|y| digits to cancellation, which is the dominant error source in
the lattice series of this package; all scalar accumulations here therefore
use error-free-transformation (Neumaier) summation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .foundations import DomainError, EvaluationError, ResourceError, as_weights

MAX_DIM = 16


class CompensatedSum:
    """Neumaier compensated accumulator for complex values."""

    __slots__ = ("_sr", "_cr", "_si", "_ci")

    def __init__(self):
        self._sr = self._cr = 0.0
        self._si = self._ci = 0.0

    @staticmethod
    def _step(s: float, c: float, x: float) -> tuple[float, float]:
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        return t, c

    def add(self, z: complex) -> None:
        z = complex(z)
        self._sr, self._cr = self._step(self._sr, self._cr, z.real)
        self._si, self._ci = self._step(self._si, self._ci, z.imag)

    @property
    def value(self) -> complex:
        return complex(self._sr + self._cr, self._si + self._ci)


def compensated_total(values: Iterable[complex]) -> complex:
    acc = CompensatedSum()
    for v in values:
        acc.add(v)
    return acc.value


@lru_cache(maxsize=64)
def subset_index_lists(d: int, include_empty: bool) -> tuple[tuple[int, ...], ...]:
    """All subsets of {0..d-1}, ordered by size then lexicographically."""
    if d < 1 or d > MAX_DIM:
        raise DomainError(f"dimension must be in 1..{MAX_DIM}")
    out: list[tuple[int, ...]] = []
    start = 0 if include_empty else 1
    for size in range(start, d + 1):
        out.extend(combinations(range(d), size))
    return tuple(out)


def _subset_terms(w: tuple[complex, ...], include_empty: bool):
    """Pairs (sign, sigma) with sign = (-1)^{d-|S|}, sigma = sum of w over S."""
    d = len(w)
    terms = []
    for idx in subset_index_lists(d, include_empty):
        sigma = complex(0.0)
        for i in idx:
            sigma += w[i]
        sign = -1.0 if (d - len(idx)) % 2 else 1.0
        terms.append((idx, sign, sigma))
    return terms


def f_symbol(f: Callable[[complex], complex], a: complex, w: Iterable[complex]) -> complex:
    """Alternating subset sum F[f(a+x)]_{x=w} over nonempty subsets.

    sum over nonempty S of (-1)^{d-|S|} f(a + sum_{i in S} w_i), evaluated
    in subset-size-then-lexicographic order with compensated accumulation.
    """
    wt = as_weights(w)
    a = complex(a)
    acc = CompensatedSum()
    for idx, sign, sigma in _subset_terms(wt, include_empty=False):
        try:
            val = f(a + sigma)
        except Exception as exc:
            raise EvaluationError(
                f"function evaluation failed at subset {idx}", subset=idx
            ) from exc
        acc.add(sign * complex(val))
    return acc.value


def g_symbol(f: Callable[[complex], complex], a: complex, w: Iterable[complex]) -> complex:
    """G[f(a+x)]_{x=w} = (-1)^d f(a) + F[f(a+x)]_{x=w}.

    Equals the d-fold forward difference of f with steps w_1..w_d at a, so
    G of any polynomial of degree < d vanishes and G[(c+x)^d] = d! prod(w_i).
    """
    wt = as_weights(w)
    a = complex(a)
    try:
        empty_val = f(a)
    except Exception as exc:
        raise EvaluationError("function evaluation failed at subset ()", subset=()) from exc
    acc = CompensatedSum()
    acc.add((-1.0 if len(wt) % 2 else 1.0) * complex(empty_val))
    acc.add(f_symbol(f, a, wt))
    return acc.value


def _masked(n: Sequence[int], v: Sequence[int], idx: tuple[int, ...]) -> tuple[int, ...]:
    out = list(n)
    for i in idx:
        out[i] += v[i]
    return tuple(out)


def bracket_sum(
    u: Callable[[tuple[int, ...]], complex],
    n: Sequence[int],
    v: Sequence[int],
) -> complex:
    """Lattice bracket [u(n)]_v: alternating sum over masked additions of v.

    [u(n)]_v = sum over all S of (-1)^{d-|S|} u(n + v restricted to S).
    """
    n = tuple(int(x) for x in n)
    v = tuple(int(x) for x in v)
    if len(n) != len(v):
        raise DomainError("n and v must have the same length")
    d = len(n)
    if d < 1 or d > MAX_DIM:
        raise DomainError(f"dimension must be in 1..{MAX_DIM}")
    acc = CompensatedSum()
    for idx in subset_index_lists(d, include_empty=True):
        sign = -1.0 if (d - len(idx)) % 2 else 1.0
        try:
            val = u(_masked(n, v, idx))
        except Exception as exc:
            raise EvaluationError(
                f"lattice function failed at subset {idx}", subset=idx
            ) from exc
        acc.add(sign * complex(val))
    return acc.value


def shell_indices(k: int, d: int) -> Iterator[tuple[int, ...]]:
    """Lattice points with max coordinate exactly k, lexicographic order."""
    if k < 0:
        raise DomainError("shell index must be >= 0")
    if k == 0:
        yield (0,) * d
        return
    for point in product(range(k + 1), repeat=d):
        if max(point) == k:
            yield point


def cube_indices(M: int, d: int, exclude_origin: bool = False) -> Iterator[tuple[int, ...]]:
    """All points of {0..M}^d, grouped in hypercubic shells S_0, S_1, ...

    Within each shell the order is lexicographic, so iteration is fully
    deterministic.  With exclude_origin the single point of S_0 is skipped.
    """
    if M < 0:
        raise DomainError("M must be >= 0")
    if d < 1 or d > MAX_DIM:
        raise DomainError(f"dimension must be in 1..{MAX_DIM}")
    for k in range(M + 1):
        if k == 0 and exclude_origin:
            continue
        yield from shell_indices(k, d)


@dataclass(frozen=True)
class CubeBracketSum:
    """Both sides of the telescoping identity; `value` is the closed side."""

    rhs: complex
    lhs: complex | None

    @property
    def value(self) -> complex:
        return self.rhs


def cube_bracket_sum(
    u: Callable[[tuple[int, ...]], complex],
    M: int,
    d: int,
    explicit: bool = True,
    budget: int = 2_000_000,
) -> CubeBracketSum:
    """sum_{n in C_M} [u(n)]_1 together with its closed form [u(0)]_{(M+1)1}.

    The left side is the explicit telescoping sum over (M+1)^d lattice
    points (kept for testing); the right side is a single bracket at the
    far corner.  ResourceError if the explicit side would exceed `budget`.
    """
    if M < 0:
        raise DomainError("M must be >= 0")
    ones = (1,) * d
    rhs = bracket_sum(u, (0,) * d, ((M + 1),) * d)
    lhs: complex | None = None
    if explicit:
        npoints = (M + 1) ** d
        if npoints > budget:
            raise ResourceError(
                f"explicit cube sum needs {npoints} points, budget is {budget}"
            )
        acc = CompensatedSum()
        for point in cube_indices(M, d):
            acc.add(bracket_sum(u, point, ones))
        lhs = acc.value
    return CubeBracketSum(rhs=rhs, lhs=lhs)


def shell_values(a: complex, w: Sequence[complex], k: int, skip_origin: bool = False) -> np.ndarray:
    """Values a + n.w on the shell S_k as a flat complex array.

    Faces are enumerated by the set of coordinates pinned at k (ordered by
    size then lexicographically) and each face is laid out in C order, so
    the output ordering is reproducible bit for bit.
    """
    wt = tuple(complex(x) for x in w)
    d = len(wt)
    a = complex(a)
    if k == 0:
        if skip_origin:
            return np.empty(0, dtype=np.complex128)
        return np.array([a], dtype=np.complex128)
    faces = []
    for idx in subset_index_lists(d, include_empty=False):
        base = a + k * sum(wt[i] for i in idx)
        arr = np.array([base], dtype=np.complex128)
        for i in range(d):
            if i in idx:
                continue
            arr = (arr[:, None] + wt[i] * np.arange(k, dtype=np.float64)[None, :]).ravel()
        faces.append(arr)
    return np.concatenate(faces) if faces else np.empty(0, dtype=np.complex128)
