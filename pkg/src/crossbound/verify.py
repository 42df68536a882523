"""Verification sweeps behind ``crossbound verify``.

Each sweep yields ``Check`` records in order; callers stop at the first
failure.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from crossbound import drawing, fourier, levels


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class FourierConfig:
    trials: int = 100
    truncation: int = 400
    grid: int = 32
    seed: int = 0
    points: int = 10_000


def generic_points(rng: np.random.Generator, count: int) -> np.ndarray:
    """(count, 4) uniform points on the 4-torus with pairwise gaps of at least 1e-6."""
    pts = rng.random((count, 4))
    gaps = np.abs((pts[:, :, None] - pts[:, None, :] + 0.5) % 1.0 - 0.5)
    gaps[:, range(4), range(4)] = 1.0
    bad = gaps.min(axis=(1, 2)) < 1e-6
    while bad.any():
        pts[bad] = rng.random((int(bad.sum()), 4))
        gaps = np.abs((pts[:, :, None] - pts[:, None, :] + 0.5) % 1.0 - 0.5)
        gaps[:, range(4), range(4)] = 1.0
        bad = gaps.min(axis=(1, 2)) < 1e-6
    return pts


def fourier_checks(cfg: FourierConfig) -> Iterator[Check]:
    rng = np.random.default_rng(cfg.seed)
    w, x, y, z = generic_points(rng, cfg.points).T

    ind = fourier.crossing_indicator(w, x, y, z)
    err = float(np.abs(fourier.parity_product(w, x, y, z) - (-1.0) ** ind).max())
    yield Check("parity product equals (-1)^C", err <= 1e-9, f"max error {err:.2e} over {cfg.points} points")

    total = ind + fourier.crossing_indicator(w, y, x, z) + fourier.crossing_indicator(w, x, z, y)
    yield Check("exactly one pairing crosses", bool((total == 1).all()), f"{int((total != 1).sum())} violations")

    shift = rng.random(cfg.points)
    rotated = fourier.crossing_indicator(w + shift, x + shift, y + shift, z + shift)
    swapped = fourier.crossing_indicator(x, w, z, y)
    yield Check(
        "indicator invariant under rotation and (w,y)<->(x,z)",
        bool((rotated == ind).all() and (swapped == ind).all()),
    )

    for k in range(0, 11):
        value = fourier.convolution_sum(k, 100_000)
        limit = fourier.convolution_sum_exact(k)
        yield Check(f"convolution sum k={k}", abs(value - limit) <= 1e-4, f"{value:.8f} vs limit {limit:.8f}")

    worst = math.inf
    for _ in range(cfg.trials):
        t = fourier.random_symmetric_table(rng, int(rng.integers(1, 6)))
        worst = min(worst, fourier.lhs_form(t) - fourier.rhs_form(t))
    yield Check("lhs_form >= rhs_form", worst >= -1e-12, f"min gap {worst:.3e} over {cfg.trials} tables")

    worst = math.inf
    for _ in range(cfg.trials):
        t = fourier.random_symmetric_table(rng, int(rng.integers(1, 6)))
        scale = 0.999 / fourier.sup_norm_sampled(t)
        t = fourier.CoefficientTable({k: v * scale for k, v in t.entries.items()}, symmetric=True)
        worst = min(worst, fourier.lhs_form(t) + 1 / math.pi**2)
    yield Check("lhs_form >= -1/pi^2 when |f| <= 1", worst >= -1e-9, f"min margin {worst:.3e}")

    for i in range(3):
        t = fourier.random_symmetric_table(rng, 2)
        closed, quad = fourier.lhs_form(t), fourier.quadrature_integral(t, cfg.grid)
        tol = max(0.05 * abs(closed), 0.005)
        yield Check(f"quadrature matches closed form (table {i})", abs(quad - closed) <= tol,
                    f"{quad:.6f} vs {closed:.6f}, grid {cfg.grid}")

    value = fourier.truncated_series_c(0.05, 0.30, 0.55, 0.80, cfg.truncation)
    yield Check("truncated series approaches C", abs(value - 1) <= 0.1,
                f"{value:.6f} at N={cfg.truncation}")


def level_checks(k_max: int) -> Iterator[Check]:
    rng = np.random.default_rng(0)
    for k in range(2, k_max + 1):
        ratio, vec = levels.level_max_ratio(k)
        canon = levels.canonical_vector(k)
        cosine = float(vec @ canon / np.linalg.norm(canon))
        lhs, rhs = levels.level_forms_exact(k)
        grad = levels.level_gradient_check(k)
        gap = math.inf
        for _ in range(20):
            lo, hi = levels.level_form_evaluate(k, rng.normal(size=k // 2))
            gap = min(gap, hi - lo)
        ok = (
            abs(ratio - 1) <= 1e-9
            and cosine >= 1 - 1e-9
            and lhs == rhs == Fraction(k**3 - k, 6)
            and grad <= 1e-6
            and gap >= -1e-12
        )
        yield Check(f"level k={k}", ok,
                    f"ratio-1={ratio - 1:.1e} 1-cos={1 - cosine:.1e} grad={grad:.1e} forms={lhs}")


def counting_checks(n_max: int) -> Iterator[Check]:
    for n in range(3, n_max + 1):
        bad = [d for d in range(1, (n + 1) // 2) if drawing.same_page_shift_count(n, d) != n - 2 * d]
        yield Check(f"same-page shift count n={n}", not bad, f"failing d: {bad}" if bad else "")
        if n % 2 == 0 and n >= 4:
            yield Check(f"opposite pages at half span n={n}", drawing.opposite_page_at_half_span(n))
