from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crossbound.levels import (
    canonical_vector,
    level_form_evaluate,
    level_forms_exact,
    level_gradient_check,
    level_matrix,
    level_max_ratio,
    level_profile,
    level_qform,
    partial_sum_identity,
)


@pytest.mark.parametrize("k, c, expected", [(3, [2], (4, 4)), (2, [1], (1, 1)), (4, [3, 1], (10, 10))])
def test_level_form_examples(k, c, expected):
    assert level_form_evaluate(k, c) == pytest.approx(expected)


def test_profile_symmetry():
    b = level_profile(7, [1.0, 2.0, 3.0])
    assert list(b) == [0, 1, 3, 6, 6, 3, 1, 0]
    with pytest.raises(ValueError):
        level_profile(7, [1.0, 2.0])
    with pytest.raises(ValueError):
        level_profile(1, [])


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 50).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.floats(-1e3, 1e3), min_size=k // 2, max_size=k // 2))))
def test_level_inequality(args):
    k, c = args
    lhs, rhs = level_form_evaluate(k, np.array(c))
    assert lhs <= rhs * (1 + 1e-12) + 1e-12


def test_level_inequality_complex():
    rng = np.random.default_rng(9)
    for k in range(2, 51):
        for _ in range(100):
            c = rng.normal(size=k // 2) + 1j * rng.normal(size=k // 2)
            lhs, rhs = level_form_evaluate(k, c)
            assert lhs <= rhs + 1e-12


@pytest.mark.parametrize("k", [2, 3, 8, 31])
def test_matrix_encodes_form(k):
    Q = level_matrix(k)
    assert np.allclose(Q, Q.T) and (Q > 0).all()
    c = np.random.default_rng(k).normal(size=k // 2)
    assert c @ Q @ c == pytest.approx(level_qform(k, c))
    assert level_qform(k, c) == pytest.approx(level_form_evaluate(k, c)[0])


def test_max_ratio_examples():
    ratio, vec = level_max_ratio(2)
    assert ratio == pytest.approx(1) and vec == pytest.approx([1])
    ratio, vec = level_max_ratio(3)
    assert abs(ratio - 1) <= 1e-9 and vec == pytest.approx([1])
    ratio, vec = level_max_ratio(50)
    canon = np.arange(49, 0, -2)
    assert abs(ratio - 1) <= 1e-9
    assert vec @ canon / np.linalg.norm(canon) >= 1 - 1e-9


def test_canonical_forms_exact():
    for k in range(2, 301):
        lhs, rhs = level_forms_exact(k)
        assert lhs == rhs == Fraction(k**3 - k, 6)


def test_partial_sums():
    c = canonical_vector(7)
    assert list(np.cumsum(c)) == [6, 10, 12]
    assert all(partial_sum_identity(k) for k in range(2, 301))


@pytest.mark.parametrize("k", [2, 3, 10, 300])
def test_gradient(k):
    assert level_gradient_check(k) <= 1e-6
