import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from barneszeta import (
    DomainError,
    EvaluationError,
    ResourceError,
    bracket_sum,
    cube_bracket_sum,
    cube_indices,
    f_symbol,
    g_symbol,
    shell_indices,
)
from barneszeta.combinatorics import CompensatedSum, shell_values

complex_small = st.complex_numbers(
    min_magnitude=0.1, max_magnitude=3.0, allow_nan=False, allow_infinity=False
)
weights = st.lists(
    st.floats(min_value=0.3, max_value=2.5).map(lambda x: complex(round(x, 3), 0.1)),
    min_size=1,
    max_size=4,
)


def prod(w):
    out = 1.0 + 0j
    for x in w:
        out *= x
    return out


class TestFSymbol:
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_constant_one(self, d):
        w = tuple(0.5 + 0.25 * i for i in range(d))
        assert f_symbol(lambda x: 1.0, 0.3, w) == pytest.approx((-1.0) ** (d - 1))

    @pytest.mark.parametrize("d,l", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3)])
    def test_monomials_vanish(self, d, l):
        w = tuple(0.4 + 0.3 * i for i in range(d))
        scale = sum(abs(x) for x in w) ** l
        assert abs(f_symbol(lambda x: x**l, 0.0, w)) <= 1e-12 * scale

    def test_single_weight(self):
        assert f_symbol(lambda x: x * x, 2.0, (3.0,)) == 25.0

    def test_failure_carries_subset(self):
        def bad(x):
            raise ValueError("boom")

        with pytest.raises(EvaluationError) as err:
            f_symbol(bad, 0.0, (1.0, 2.0))
        assert err.value.subset == (0,)


class TestGSymbol:
    @settings(max_examples=25, deadline=None)
    @given(complex_small, weights)
    def test_annihilates_constants(self, c, w):
        assert abs(g_symbol(lambda x: c, 0.7, tuple(w))) <= 1e-13 * (1 + abs(c))

    @settings(max_examples=25, deadline=None)
    @given(complex_small, weights)
    def test_annihilates_low_degree(self, c, w):
        d = len(w)
        scale = (abs(c) + sum(abs(x) for x in w)) ** d
        for n in range(d):
            val = g_symbol(lambda x, n=n: (c + x) ** n, c, tuple(w))
            assert abs(val) <= 1e-12 * scale

    @settings(max_examples=25, deadline=None)
    @given(complex_small, weights)
    def test_top_degree_value(self, c, w):
        d = len(w)
        want = math.factorial(d) * prod(w)
        got = g_symbol(lambda x: (c + x) ** d, c, tuple(w))
        scale = abs(want) + (abs(c) + sum(abs(x) for x in w)) ** d
        assert abs(got - want) <= 1e-12 * scale


class TestBracket:
    def test_one_dimensional(self):
        u = lambda n: (n[0] + 1.0) ** 2
        assert bracket_sum(u, (2,), (3,)) == u((5,)) - u((2,))

    def test_zero_step(self):
        u = lambda n: math.exp(0.1 * n[0] + 0.2 * n[1])
        assert bracket_sum(u, (1, 2), (0, 0)) == 0

    def test_two_dimensional_product(self):
        u = lambda n: n[0] * n[1]
        assert bracket_sum(u, (0, 0), (1, 1)) == 1.0

    def test_bridge_to_g_symbol(self):
        # G[u(a + n.w + x)]_{x=w} = [u~(n)]_1 with u~(n) = u(a + n.w)
        a, w = 0.4, (0.9, 1.7)
        f = lambda z: z**2 * cmath.log(z)
        n = (2, 1)
        y = a + n[0] * w[0] + n[1] * w[1]
        lhs = g_symbol(f, y, w)
        u = lambda m: f(a + m[0] * w[0] + m[1] * w[1])
        rhs = bracket_sum(u, n, (1, 1))
        assert lhs == pytest.approx(rhs, abs=1e-13)


class TestCubeBracket:
    def test_one_dimensional_telescope(self):
        u = lambda n: (n[0] + 0.5) ** 3
        res = cube_bracket_sum(u, 4, 1)
        assert res.lhs == pytest.approx(u((5,)) - u((0,)))
        assert res.value == pytest.approx(res.lhs)

    def test_two_dimensional_exponential(self):
        u = lambda n: math.exp(0.1 * n[0] + 0.2 * n[1])
        res = cube_bracket_sum(u, 3, 2)
        assert abs(res.lhs - res.rhs) <= 1e-12 * (1 + abs(res.rhs))

    def test_three_dimensional_polynomial(self):
        u = lambda n: (1 + n[0]) * (2 + n[1]) ** 2 + 0.3 * n[2] ** 3
        res = cube_bracket_sum(u, 2, 3)
        assert abs(res.lhs - res.rhs) <= 1e-12 * (1 + abs(res.rhs))

    def test_budget(self):
        with pytest.raises(ResourceError):
            cube_bracket_sum(lambda n: 1.0, 1000, 3, budget=100)

    def test_shell_decomposition_identity(self):
        # sum over S_k of [u(n)]_1 = [u(0)]_{(k+1)1} - [u(0)]_{k1}
        u = lambda n: math.exp(0.15 * n[0] + 0.05 * n[1] + 0.1 * n[2])
        d = 3
        for k in range(4):
            acc = CompensatedSum()
            for pt in shell_indices(k, d):
                acc.add(bracket_sum(u, pt, (1,) * d))
            rhs = (bracket_sum(u, (0,) * d, ((k + 1),) * d)
                   - bracket_sum(u, (0,) * d, (k,) * d))
            assert abs(acc.value - rhs) <= 1e-12 * (1 + abs(rhs))


class TestIndices:
    def test_single_point(self):
        assert list(cube_indices(0, 3)) == [(0, 0, 0)]

    def test_exclude_origin(self):
        assert list(cube_indices(1, 2, exclude_origin=True)) == [(0, 1), (1, 0), (1, 1)]

    def test_shell_counts(self):
        for d in (1, 2, 3):
            for k in (1, 2, 3):
                n = sum(1 for _ in shell_indices(k, d))
                assert n == (k + 1) ** d - k**d

    def test_deterministic(self):
        assert list(cube_indices(3, 2)) == list(cube_indices(3, 2))

    def test_dimension_cap(self):
        with pytest.raises(DomainError):
            list(cube_indices(1, 17))


class TestShellValues:
    def test_matches_index_enumeration(self):
        a, w = 0.3 + 0.2j, (1.0, 0.5 + 0.1j)
        for k in range(4):
            got = shell_values(a, w, k)
            want = np.array([a + n[0] * w[0] + n[1] * w[1] for n in shell_indices(k, 2)])
            assert sorted(got, key=lambda z: (z.real, z.imag)) == pytest.approx(
                sorted(want, key=lambda z: (z.real, z.imag))
            )

    def test_skip_origin(self):
        assert shell_values(0.0, (1.0,), 0, skip_origin=True).size == 0


class TestCompensatedSum:
    def test_recovers_cancellation(self):
        acc = CompensatedSum()
        for x in (1e16, 1.0, -1e16):
            acc.add(x)
        assert acc.value == 1.0

    def test_complex_components(self):
        acc = CompensatedSum()
        acc.add(1e16 + 1e16j)
        acc.add(1.0 - 2.0j)
        acc.add(-1e16 - 1e16j)
        assert acc.value == 1.0 - 2.0j
