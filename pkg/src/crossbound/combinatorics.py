"""Cyclic labels, chords and the discrete crossing predicate.

Labels are residues ``0..n-1``. A chord is an unordered pair of distinct
labels, stored as ``(min, max)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, order=True)
class Chord:
    a: int
    c: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"modulus must be >= 3, got {self.n}")
        if not (0 <= self.a < self.c < self.n):
            raise ValueError(f"chord endpoints must satisfy 0 <= a < c < n, got {self}")

    @classmethod
    def of(cls, x: int, y: int, n: int) -> Chord:
        """Canonical chord through residues ``x mod n`` and ``y mod n``."""
        x, y = x % n, y % n
        if x == y:
            raise ValueError(f"chord endpoints coincide mod {n}: {x}")
        return cls(min(x, y), max(x, y), n)

    @property
    def is_cycle_edge(self) -> bool:
        """True for the Hamiltonian-cycle chords {x, x+1}."""
        return (self.c - self.a) % self.n in (1, self.n - 1)


def all_chords(n: int) -> list[Chord]:
    """All C(n,2) chords in lexicographic order; this order defines chord indices."""
    return [Chord(a, c, n) for a, c in itertools.combinations(range(n), 2)]


def chord_index(chord: Chord) -> int:
    a, c, n = chord.a, chord.c, chord.n
    # rows 0..a-1 hold (n-1) + (n-2) + ... + (n-a) chords
    return a * (2 * n - a - 1) // 2 + (c - a - 1)


def _strictly_between(lo: int, p: int, hi: int, n: int) -> bool:
    """p lies on the open arc going forward from lo to hi."""
    return 0 < (p - lo) % n < (hi - lo) % n


def chords_cross(p: Chord, q: Chord, n: int | None = None) -> bool:
    """Arc-separation test: q's endpoints fall in different open arcs cut out by p."""
    if n is None:
        n = p.n
    if p.n != n or q.n != n:
        raise ValueError(f"moduli disagree: {p.n}, {q.n}, {n}")
    if len({p.a, p.c, q.a, q.c}) < 4:
        return False
    return _strictly_between(p.a, q.a, p.c, n) != _strictly_between(p.a, q.c, p.c, n)


def crosses_array(a1, c1, a2, c2) -> np.ndarray:
    """Vectorised crossing test for canonical chords (endpoints given as ``a < c``).

    With canonical endpoints the arc test reduces to interleaving of integers:
    exactly one of a2, c2 lies strictly inside (a1, c1).
    """
    a1, c1, a2, c2 = map(np.asarray, (a1, c1, a2, c2))
    in_a2 = (a1 < a2) & (a2 < c1)
    in_c2 = (a1 < c2) & (c2 < c1)
    distinct = (a1 != a2) & (a1 != c2) & (c1 != a2) & (c1 != c2)
    return distinct & (in_a2 != in_c2)


def guy_number(n: int) -> int:
    """Z(n) = floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2) / 4."""
    if n < 3:
        raise ValueError(f"Z(n) needs n >= 3, got {n}")
    product = (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2)
    # odd n: (k(k-1))^2; even n: k(k-1)^2(k-2). Both divisible by 4.
    return product // 4
