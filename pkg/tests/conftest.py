import pytest


def rel_err(got: complex, want: complex) -> float:
    return abs(got - want) / max(abs(want), 1e-300)


def scaled_err(got: complex, want: complex) -> float:
    """|got - want| / (1 + |want|), the agreement metric used throughout."""
    return abs(got - want) / (1.0 + abs(want))


def neville_to_zero(xs, vals):
    """Polynomial extrapolation of vals(x) to x = 0."""
    rows = [list(vals)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        lvl = len(rows)
        nxt = []
        for i in range(len(prev) - 1):
            x0, x1 = xs[i], xs[i + lvl]
            nxt.append((x0 * prev[i + 1] - x1 * prev[i]) / (x0 - x1))
        rows.append(nxt)
    return rows[-1][0]


@pytest.fixture
def d2_params():
    from barneszeta import BarnesParams

    return BarnesParams(0.7, (1.0, 2 ** 0.5))


@pytest.fixture
def d3_params():
    import math

    from barneszeta import BarnesParams

    return BarnesParams(0.9, (1.0, 2 ** 0.5, math.pi / 4))
