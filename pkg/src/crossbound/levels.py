"""Per-level quadratic forms behind the main inequality.

For a fixed level k >= 2 let b_n = b[n, k-n] for n = 0..k, with b_0 = b_k = 0
and b_n = b_{k-n}. Writing c_i = b_i - b_{i-1} for i = 1..floor(k/2), the two
sides of the level inequality are

    lhs(c) = sum_{n=1}^{k-1} |b_n|^2 / (n(k-n))            (a quadratic form in c)
    rhs(c) = sum_{n=0}^{k-1} |b_n - b_{n+1}|^2 / 2  =  sum_i |c_i|^2.

The largest value of lhs/rhs is 1, attained at c_n = k + 1 - 2n, where both
sides equal (k^3 - k)/6.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def _half(k: int) -> int:
    if k < 2:
        raise ValueError(f"level must be >= 2, got {k}")
    return k // 2


def canonical_vector(k: int) -> np.ndarray:
    h = _half(k)
    return np.array([k + 1 - 2 * n for n in range(1, h + 1)], dtype=float)


def level_profile(k: int, c) -> np.ndarray:
    """b_0..b_k from the increments c_1..c_{floor(k/2)} and the mirror symmetry."""
    h = _half(k)
    c = np.asarray(c)
    if c.shape != (h,):
        raise ValueError(f"level {k} needs {h} increments, got shape {c.shape}")
    b = np.zeros(k + 1, dtype=c.dtype if np.iscomplexobj(c) else float)
    b[1 : h + 1] = np.cumsum(c)
    for n in range(h + 1, k + 1):
        b[n] = b[k - n]
    return b


def level_form_evaluate(k: int, c) -> tuple[float, float]:
    b = level_profile(k, c)
    n = np.arange(1, k)
    lhs = float(np.sum(np.abs(b[1:k]) ** 2 / (n * (k - n))))
    rhs = float(np.sum(np.abs(np.diff(b)) ** 2) / 2)
    return lhs, rhs


def level_forms_exact(k: int) -> tuple[Fraction, Fraction]:
    """Both sides at the canonical vector, in exact rational arithmetic."""
    h = _half(k)
    c = [k + 1 - 2 * n for n in range(1, h + 1)]
    b = [0] * (k + 1)
    for n in range(1, h + 1):
        b[n] = b[n - 1] + c[n - 1]
    for n in range(h + 1, k + 1):
        b[n] = b[k - n]
    lhs = sum((Fraction(b[n] ** 2, n * (k - n)) for n in range(1, k)), Fraction(0))
    rhs = Fraction(sum((b[n] - b[n + 1]) ** 2 for n in range(k)), 2)
    return lhs, rhs


def level_matrix(k: int) -> np.ndarray:
    """Symmetric matrix Q with lhs(c) = c^T Q c.

    b_n = c_1 + ... + c_n, and each n <= floor(k/2) appears in lhs once for
    itself and once for its mirror k - n, except n = k/2 which is its own
    mirror. So Q[i, j] = sum_{n >= max(i, j)} weight_n.
    """
    h = _half(k)
    n = np.arange(1, h + 1)
    weight = np.where(2 * n == k, 1.0, 2.0) / (n * (k - n))
    tail = np.cumsum(weight[::-1])[::-1]
    i = np.arange(h)
    return tail[np.maximum.outer(i, i)]


def level_max_ratio(k: int) -> tuple[float, np.ndarray]:
    """Largest lhs/rhs over real c, and its eigenvector (positive, unit norm).

    rhs is the identity form in c, so this is the top eigenpair of Q.
    """
    vals, vecs = np.linalg.eigh(level_matrix(k))
    vec = vecs[:, -1]
    if vec.sum() < 0:
        vec = -vec
    return float(vals[-1]), vec


def level_qform(k: int, c) -> float:
    """lhs written directly as sum of squared partial sums (the form Q encodes)."""
    h = _half(k)
    c = np.asarray(c, dtype=float)
    partial = np.cumsum(c)
    n = np.arange(1, h + 1)
    full = partial**2 / (n * (k - n))
    mirrored = full[: (k - 1) // 2]
    return float(full.sum() + mirrored.sum())


def partial_sum_identity(k: int) -> bool:
    """sum_{i<=n} (k + 1 - 2i) == n(k - n) for n = 1..floor(k/2), in integers."""
    h = _half(k)
    run = 0
    for n in range(1, h + 1):
        run += k + 1 - 2 * n
        if run != n * (k - n):
            return False
    return True


def level_gradient_check(k: int, step: float = 1e-4) -> float:
    """max_m |d lhs / d c_m - 2 c_m| at the canonical vector, by central differences.

    The step is relative to max |c| so that roundoff in the form (of size
    ~k^3) does not swamp the difference quotient at large k; the form is
    quadratic, so central differences carry no truncation error.
    """
    if not partial_sum_identity(k):
        raise AssertionError(f"partial sums of the canonical vector fail at k={k}")
    c = canonical_vector(k)
    h = step * max(1.0, float(np.abs(c).max()))
    worst = 0.0
    for m in range(len(c)):
        up, down = c.copy(), c.copy()
        up[m] += h
        down[m] -= h
        grad = (level_qform(k, up) - level_qform(k, down)) / (2 * h)
        worst = max(worst, abs(grad - 2 * c[m]))
    return worst
