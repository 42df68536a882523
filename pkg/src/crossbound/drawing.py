"""Two-page drawings of K_n with a crossing-free Hamiltonian cycle.

The spine is the cycle 0, 1, ..., n-1. Every chord goes on one of two pages
(inside or outside the cycle); two chords cross exactly when they interleave
on the cycle and share a page.

Presentation labels run 1..n (residue r is label r+1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from crossbound.combinatorics import Chord, all_chords, chord_index, chords_cross


class Page(enum.Enum):
    TOP = "top"
    BOTTOM = "bottom"


@dataclass(frozen=True)
class TwoPageDrawing:
    n: int
    pages: tuple[Page, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"need n >= 3, got {self.n}")
        expected = self.n * (self.n - 1) // 2
        if len(self.pages) != expected:
            raise ValueError(f"need a page for all {expected} chords, got {len(self.pages)}")

    @classmethod
    def from_mask(cls, n: int, top) -> TwoPageDrawing:
        top = np.asarray(top, dtype=bool)
        return cls(n, tuple(Page.TOP if t else Page.BOTTOM for t in top))

    def page(self, chord: Chord) -> Page:
        return self.pages[chord_index(chord)]

    @property
    def top_mask(self) -> np.ndarray:
        return np.array([p is Page.TOP for p in self.pages], dtype=bool)

    def top_matrix(self) -> np.ndarray:
        """Symmetric n x n 0/1 matrix with 1 where the chord lies on the top page."""
        t = np.zeros((self.n, self.n), dtype=np.int64)
        iu = np.triu_indices(self.n, 1)
        t[iu] = self.top_mask
        return t + t.T


def cylindrical_page(x: int, y: int, n: int) -> Page:
    """Page of the chord between 1-based labels x and y.

    The label sum is reduced into 1..n; the chord goes on top iff that sum lies
    in {1, ..., floor(n/2)}.
    """
    s = (x + y - 1) % n + 1
    return Page.TOP if s <= n // 2 else Page.BOTTOM


def build_cylindrical(n: int) -> TwoPageDrawing:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return TwoPageDrawing(n, tuple(cylindrical_page(ch.a + 1, ch.c + 1, n) for ch in all_chords(n)))


def all_top(n: int) -> TwoPageDrawing:
    return TwoPageDrawing(n, (Page.TOP,) * (n * (n - 1) // 2))


def random_drawing(n: int, seed: int) -> TwoPageDrawing:
    rng = np.random.default_rng(seed)
    return TwoPageDrawing.from_mask(n, rng.random(n * (n - 1) // 2) < 0.5)


def parity_drawing(n: int) -> TwoPageDrawing:
    """Top iff the smaller endpoint label is odd."""
    return TwoPageDrawing.from_mask(n, [(ch.a + 1) % 2 == 1 for ch in all_chords(n)])


def _rect_sums(prefix: np.ndarray, r0, r1, c0, c1) -> np.ndarray:
    # sum over rows [r0, r1) and cols [c0, c1); empty ranges give 0
    r1 = np.maximum(r0, r1)
    c1 = np.maximum(c0, c1)
    return prefix[r1, c1] - prefix[r0, c1] - prefix[r1, c0] + prefix[r0, c0]


def count_crossings(d: TwoPageDrawing) -> int:
    """Number of unordered same-page pairs of interleaving chords.

    For chord (a, c) with a < c the chords interleaving it are exactly those
    with one endpoint in (a, c) and the other outside [a, c]; rectangle sums
    over a prefix-summed page matrix count them per page.
    """
    n = d.n
    top = d.top_matrix()
    bottom = 1 - top
    np.fill_diagonal(bottom, 0)
    a, c = np.triu_indices(n, 1)
    total = 0
    for same, mat in ((d.top_mask, top), (~d.top_mask, bottom)):
        prefix = np.zeros((n + 1, n + 1), dtype=np.int64)
        prefix[1:, 1:] = mat.cumsum(0).cumsum(1)
        inner_lo, inner_hi = a + 1, c
        partners = _rect_sums(prefix, inner_lo, inner_hi, 0 * a, a) + _rect_sums(
            prefix, inner_lo, inner_hi, c + 1, np.full_like(c, n)
        )
        total += int(partners[same].sum())
    # every crossing pair was seen from both of its chords
    return total // 2


def closed_form_crossings(n: int) -> int:
    """Half of sum_{s=2}^{floor(n/2)} (s-1)(n-1-s)(n-2s)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    twice = sum((s - 1) * (n - 1 - s) * (n - 2 * s) for s in range(2, n // 2 + 1))
    half, rem = divmod(twice, 2)
    assert rem == 0, (n, twice)
    return half


def same_page_shift_count(n: int, d: int) -> int:
    """Brute-force count of labels y in 1..n with y and y+d on the same side of the S1/S2 split."""
    if not (1 <= d and 2 * d < n):
        raise ValueError(f"need 1 <= d < n/2, got n={n}, d={d}")
    half = n // 2
    count = 0
    for y in range(1, n + 1):
        z = (y + d - 1) % n + 1
        count += (y <= half) == (z <= half)
    return count


def cycle_is_crossing_free(d: TwoPageDrawing) -> bool:
    chords = all_chords(d.n)
    for p in chords:
        if not p.is_cycle_edge:
            continue
        for q in chords:
            if d.page(p) is d.page(q) and chords_cross(p, q):
                return False
    return True


def opposite_page_at_half_span(n: int) -> bool:
    """Check that, in the cylindrical drawing, the potentially crossing pair of a
    4-point configuration with gaps a, b, c and a + c = n/2 always straddles
    the two pages."""
    if n % 2 or n < 4:
        raise ValueError(f"need even n >= 4, got {n}")
    h = n // 2
    for x in range(1, n + 1):
        for a in range(1, h):
            c = h - a
            for b in range(1, n - h):
                p1 = cylindrical_page(x, x + a + b, n)
                p2 = cylindrical_page(x + a, x + a + b + c, n)
                if p1 is p2:
                    return False
    return True
