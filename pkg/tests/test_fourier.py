import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crossbound.combinatorics import Chord, chords_cross
from crossbound.drawing import all_top, build_cylindrical, parity_drawing, random_drawing
from crossbound.fourier import (
    CoefficientTable,
    cell_averaged_indicator,
    cell_sum_identity,
    convolution_sum,
    convolution_sum_exact,
    crossing_indicator,
    lhs_form,
    parity_product,
    quadrature_integral,
    random_symmetric_table,
    rhs_form,
    step_function_integral,
    step_function_table,
    sup_norm_sampled,
    symmetrize,
    truncated_series_c,
)
from crossbound.verify import generic_points

INV_PI2 = 1 / math.pi**2
torus = st.floats(0, 1, exclude_max=True, allow_nan=False)


def sym(entries):
    return CoefficientTable(entries, symmetric=True)


@pytest.mark.parametrize("pt, expected", [
    ((0.05, 0.30, 0.55, 0.80), 1),
    ((0.10, 0.40, 0.20, 0.80), 0),
    ((0.1, 0.1, 0.5, 0.9), 0),
])
def test_indicator_examples(pt, expected):
    assert crossing_indicator(*pt) == expected


def test_indicator_matches_discrete_predicate():
    n = 9
    for w, x, y, z in itertools.permutations(range(n), 4):
        expected = chords_cross(Chord.of(w, y, n), Chord.of(x, z, n))
        assert crossing_indicator(w / n, x / n, y / n, z / n) == expected


def test_parity_examples():
    assert parity_product(0.05, 0.30, 0.55, 0.80) == pytest.approx(-1, abs=1e-9)
    assert parity_product(0.10, 0.40, 0.20, 0.80) == pytest.approx(1, abs=1e-9)


def test_parity_sweep():
    w, x, y, z = generic_points(np.random.default_rng(11), 10_000).T
    err = np.abs(parity_product(w, x, y, z) - (-1.0) ** crossing_indicator(w, x, y, z))
    assert err.max() <= 1e-9


@settings(max_examples=300)
@given(torus, torus, torus, torus, torus)
def test_indicator_symmetries(w, x, y, z, t):
    pts = [w, x, y, z]
    if len(set(pts)) < 4:
        return
    c = crossing_indicator(w, x, y, z)
    assert c + crossing_indicator(w, y, x, z) + crossing_indicator(w, x, z, y) == 1
    assert crossing_indicator(x, w, z, y) == c
    shifted = [(p + t) % 1.0 for p in pts]
    if len(set(shifted)) == 4:
        assert crossing_indicator(*shifted) == c


def direct_series(w, x, y, z, N):
    """Term-by-term double sums of e(.)/(nm) and e(.)/n^2, no factorisation."""
    e = lambda t: np.exp(2j * np.pi * t)  # noqa: E731
    ns = [n for n in range(-N, N + 1) if n]
    total = 0j
    for n, m in itertools.product(ns, ns):
        total += -(e(n * w - n * x + m * y - m * z) + e(n * w - m * x + m * y - n * z)) / (n * m)
        total += (e(-m * x + (n + m) * y - n * z) + e(n * w + m * y - (n + m) * z)) / (n * m)
        total += (e((n + m) * w - n * x - m * z) + e(n * w - (n + m) * x + m * y)) / (n * m)
    for n in ns:
        total += (e(n * (w - x)) + e(n * (x - y)) + e(n * (y - z)) + e(n * (z - w))) / n**2
    return total / (2 * math.pi**2) + 1 / 3


@pytest.mark.parametrize("pt", [(0.05, 0.30, 0.55, 0.80), (0.71, 0.12, 0.93, 0.4), (0.2, 0.9, 0.45, 0.6)])
def test_series_factorisation_matches_direct_sum(pt):
    direct = direct_series(*pt, N=6)
    assert abs(direct.imag) < 1e-12
    assert truncated_series_c(*pt, N=6) == pytest.approx(direct.real, abs=1e-12)


def test_series_constant_term():
    g = np.arange(17) / 17
    W, X, Y, Z = np.meshgrid(g, g, g, g, indexing="ij")
    assert truncated_series_c(W, X, Y, Z, 8).mean() == pytest.approx(1 / 3, abs=1e-12)


def test_series_pointwise():
    assert abs(truncated_series_c(0.05, 0.30, 0.55, 0.80, 400) - 1) <= 0.1
    rng = np.random.default_rng(5)
    pts = rng.random((400, 4))
    gaps = np.abs((pts[:, :, None] - pts[:, None, :] + 0.5) % 1 - 0.5) + np.eye(4)
    pts = pts[gaps.min(axis=(1, 2)) >= 0.05]
    w, x, y, z = pts.T
    err = np.abs(truncated_series_c(w, x, y, z, 400) - crossing_indicator(w, x, y, z))
    assert err.max() <= 0.1


def grid_points():
    g = np.arange(17) / 17
    P = np.stack(np.meshgrid(g, g, g, g, indexing="ij"), -1).reshape(-1, 4)
    keep = np.array([len(set(p)) == 4 for p in map(tuple, P)])
    return P[keep].T


def test_series_mean_square_convergence():
    w, x, y, z = grid_points()
    ind = crossing_indicator(w, x, y, z)
    mse = [np.mean((truncated_series_c(w, x, y, z, N) - ind) ** 2) for N in (25, 50, 100, 200)]
    assert all(a > b for a, b in zip(mse, mse[1:])), mse


def test_series_as_printed_does_not_converge():
    w, x, y, z = grid_points()
    ind = crossing_indicator(w, x, y, z)
    mse = np.mean((truncated_series_c(w, x, y, z, 200, as_printed=True) - ind) ** 2)
    assert mse > 0.01


def test_convolution_sums():
    assert convolution_sum(0, 10**5) == pytest.approx(-math.pi**2 / 3, abs=1e-4)
    for k in range(1, 11):
        assert convolution_sum(k, 10**5) == pytest.approx(-2 / k**2, abs=1e-4)
        assert convolution_sum(-k, 10**5) == pytest.approx(-2 / k**2, abs=1e-4)
        assert convolution_sum_exact(k) == -2 / k**2
    with pytest.raises(ValueError):
        convolution_sum(5, 5)


def test_symmetrize():
    t = sym({(1, 2): 0.3, (2, 1): 0.3, (0, 0): 1})
    assert symmetrize(t).entries == t.entries
    s = symmetrize(CoefficientTable({(1, 2): 1}))
    assert s.entries == {(1, 2): 0.5, (2, 1): 0.5} and s.symmetric
    assert symmetrize(CoefficientTable()).entries == {}
    with pytest.raises(ValueError):
        CoefficientTable({(1, 2): 1}, symmetric=True)


def test_lhs_examples():
    assert lhs_form(sym({(1, 1): 1})) == pytest.approx(-INV_PI2, abs=1e-15)
    # f = 1: the integral of C itself
    assert lhs_form(sym({(0, 0): 1})) == pytest.approx(1 / 3, abs=1e-15)
    assert lhs_form(sym({(1, -1): 1, (-1, 1): 1})) == pytest.approx(2 * INV_PI2, abs=1e-15)
    with pytest.raises(ValueError):
        lhs_form(CoefficientTable({(1, 1): 1}))


def test_rhs_examples():
    assert rhs_form(sym({(1, 1): 1})) == pytest.approx(-INV_PI2)
    assert rhs_form(sym({(0, 0): 1})) == pytest.approx(-INV_PI2)
    assert rhs_form(sym({})) == 0
    with pytest.raises(ValueError):
        rhs_form(CoefficientTable({(0, 1): 1}))


@pytest.mark.parametrize("seed", range(5))
def test_rhs_is_weighted_norm(seed):
    t = random_symmetric_table(np.random.default_rng(seed), 3)
    m = 32  # exact for trigonometric polynomials of this degree
    g = (np.arange(m) + 0.5) / m
    F = t.grid(m)
    weight = np.sin(np.pi * (g[:, None] - g[None, :])) ** 2
    integral = np.mean(np.abs(F) ** 2 * weight)
    assert rhs_form(t) == pytest.approx(-2 * INV_PI2 * integral, abs=1e-12)


def test_quadrature_examples():
    assert quadrature_integral(sym({(1, 1): 1}), 64) == pytest.approx(-INV_PI2, rel=0.05)
    assert quadrature_integral(sym({(0, 0): 1}), 64) == pytest.approx(1 / 3, rel=0.05)
    assert quadrature_integral(sym({}), 64) == 0
    with pytest.raises(ValueError):
        quadrature_integral(sym({(0, 0): 1}), 4)


def test_quadrature_constant_error_within_c_over_m():
    for m in (16, 32, 64):
        assert abs(quadrature_integral(sym({(0, 0): 1}), m) - 1 / 3) <= 1 / m


def test_quadrature_error_decreases():
    errs = [abs(quadrature_integral(sym({(1, 1): 1}), m) + INV_PI2) for m in (16, 32, 64)]
    assert errs[0] > errs[1] > errs[2]


def test_cell_average_partition_of_unity():
    C = cell_averaged_indicator(10)
    # swapping the roles of x and y, or of y and z, gives the other two pairings
    total = C + C.transpose(1, 0, 2) + C.transpose(0, 2, 1)
    assert np.allclose(total, 1)


@pytest.mark.parametrize("seed", range(3))
def test_quadrature_matches_closed_form(seed):
    t = random_symmetric_table(np.random.default_rng(100 + seed), 2)
    assert quadrature_integral(t, 48) == pytest.approx(lhs_form(t), abs=max(0.005, 0.05 * abs(lhs_form(t))))


def test_main_inequality_random_tables():
    rng = np.random.default_rng(42)
    for _ in range(100):
        t = random_symmetric_table(rng, int(rng.integers(1, 6)))
        assert lhs_form(t) >= rhs_form(t) - 1e-12


def test_bounded_tables_respect_bound():
    rng = np.random.default_rng(43)
    for _ in range(50):
        t = random_symmetric_table(rng, int(rng.integers(1, 6)))
        scale = 0.999 / sup_norm_sampled(t)
        t = sym({k: v * scale for k, v in t.entries.items()})
        assert sup_norm_sampled(t) <= 1
        assert lhs_form(t) >= -INV_PI2 - 1e-9


def test_step_table_all_top():
    n = 6
    t = step_function_table(all_top(n), 4, diagonal=1.0)
    assert t[0, 0] == pytest.approx(1)
    assert max(abs(v) for k, v in t.entries.items() if k != (0, 0)) < 1e-12
    # literal convention: the n diagonal cells carry no chord
    assert step_function_table(all_top(n), 4)[0, 0] == pytest.approx(1 - 2 / n)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_step_table_parity_balanced(n):
    assert abs(step_function_table(parity_drawing(n), 3)[0, 0]) < 1e-12


def test_step_table_energy():
    t = step_function_table(random_drawing(5, 1), 60)
    energy = sum(abs(v) ** 2 for v in t.entries.values())
    assert 0.95 <= energy <= 1 + 1e-12


@pytest.mark.parametrize("d", [build_cylindrical(7), random_drawing(6, 0), all_top(5), random_drawing(9, 4)])
def test_distinct_cells_give_cut_identity(d):
    distinct, coincident = step_function_integral(d)
    assert distinct == pytest.approx(cell_sum_identity(d), abs=1e-12)
    assert abs(coincident) <= 6 / d.n


def test_step_integral_matches_closed_form_of_full_table():
    d = build_cylindrical(5)
    exact = sum(step_function_integral(d))
    assert lhs_form(step_function_table(d, 24)) == pytest.approx(exact, abs=1e-4)
