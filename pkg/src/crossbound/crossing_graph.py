"""The crossing graph G_n and MAX-CUT on it.

Vertices of G_n are the chords of the n-cycle; two chords are adjacent when
they interleave. A cut (inside / outside) of G_n is the same thing as a
two-page drawing, and the same-page crossings of that drawing are exactly the
uncut edges. So every cut bounds the crossing number of the drawing class
from below by ``|E(G_n)| - MAXCUT(G_n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from crossbound.combinatorics import Chord, all_chords, crosses_array
from crossbound.drawing import TwoPageDrawing

LEADING_CONSTANT = 1 / 48 - 1 / (16 * math.pi**2)


class ExactTooLarge(ValueError):
    """Raised when an exact MAX-CUT instance exceeds the effort limit."""


@dataclass(frozen=True, eq=False)
class CrossingGraph:
    n: int
    chords: list[Chord]
    edges: np.ndarray  # (E, 2) int array of chord indices, i < j
    adjacency: np.ndarray = field(repr=False)  # dense 0/1, (V, V)

    @property
    def num_vertices(self) -> int:
        return len(self.chords)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def isolated(self) -> np.ndarray:
        return np.flatnonzero(self.degrees() == 0)


def build_crossing_graph(n: int) -> CrossingGraph:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    chords = all_chords(n)
    a = np.array([ch.a for ch in chords])
    c = np.array([ch.c for ch in chords])
    i, j = np.triu_indices(len(chords), 1)
    hit = crosses_array(a[i], c[i], a[j], c[j])
    edges = np.stack([i[hit], j[hit]], axis=1)
    adj = np.zeros((len(chords), len(chords)), dtype=np.int64)
    adj[edges[:, 0], edges[:, 1]] = 1
    adj[edges[:, 1], edges[:, 0]] = 1
    return CrossingGraph(n, chords, edges, adj)


@dataclass(frozen=True, eq=False)
class Cut:
    """``inside[v]`` is True when chord v is drawn inside the cycle (top page)."""

    inside: np.ndarray

    def flipped(self) -> Cut:
        return Cut(~self.inside)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cut) and np.array_equal(self.inside, other.inside)


@dataclass(frozen=True)
class MaxCutResult:
    value: int
    cut: Cut
    method: str  # "exact" or "heuristic"
    certificate: bool

    def __post_init__(self) -> None:
        if self.method not in ("exact", "heuristic"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.certificate and self.method != "exact":
            raise ValueError("only exact results carry an optimality certificate")


def cut_value(g: CrossingGraph, s: Cut) -> int:
    inside = np.asarray(s.inside, dtype=bool)
    if inside.shape != (g.num_vertices,):
        raise ValueError(f"cut covers {inside.shape} vertices, graph has {g.num_vertices}")
    return int(np.count_nonzero(inside[g.edges[:, 0]] != inside[g.edges[:, 1]]))


def cut_from_drawing(d: TwoPageDrawing) -> Cut:
    return Cut(d.top_mask)


def drawing_from_cut(n: int, s: Cut) -> TwoPageDrawing:
    return TwoPageDrawing.from_mask(n, s.inside)


def _enumerate_bits(k: int) -> np.ndarray:
    codes = np.arange(2**k, dtype=np.int64)
    return ((codes[:, None] >> np.arange(k)) & 1).astype(np.float64)


def exact_max_cut(g: CrossingGraph, effort_limit: int = 30, chunk: int = 1 << 22) -> MaxCutResult:
    """Exhaustive MAX-CUT over the non-isolated vertices.

    Isolated vertices go inside, and the first non-isolated vertex is pinned
    inside (a cut and its complement have the same value). The remaining r
    free bits split into halves L and H. For x in {0,1}^r with adjacency A
    and degrees d,

        cut(x) = d.x - x^T A x,

    which separates into a term over L, a term over H, and the bilinear
    coupling -2 x_L^T A_LH x_H. Scoring a block of L-assignments against every
    H-assignment is then a single matrix product.
    """
    active = np.flatnonzero(g.degrees() > 0)
    if len(active) > effort_limit:
        raise ExactTooLarge(
            f"G_{g.n} has {len(active)} non-isolated vertices, above the exact limit of "
            f"{effort_limit}; use the heuristic mode instead"
        )
    inside = np.ones(g.num_vertices, dtype=bool)
    if len(active) == 0:
        return MaxCutResult(0, Cut(inside), "exact", True)

    free = active[1:]
    A = g.adjacency[np.ix_(free, free)].astype(np.float64)
    deg = g.adjacency[free][:, active].sum(axis=1).astype(np.float64)
    r = len(free)
    nl = r // 2
    L, H = np.arange(nl), np.arange(nl, r)
    XL, XH = _enumerate_bits(nl), _enumerate_bits(r - nl)
    vl = XL @ deg[L] - np.einsum("ij,jk,ik->i", XL, A[np.ix_(L, L)], XL)
    vh = XH @ deg[H] - np.einsum("ij,jk,ik->i", XH, A[np.ix_(H, H)], XH)
    coupling = XL @ A[np.ix_(L, H)]

    best, best_l, best_h = -1.0, 0, 0
    rows = max(1, chunk // len(XH))
    for start in range(0, len(XL), rows):
        stop = min(start + rows, len(XL))
        block = vl[start:stop, None] + vh[None, :] - 2.0 * (coupling[start:stop] @ XH.T)
        flat = int(np.argmax(block))
        value = block.flat[flat]
        if value > best:
            best = value
            best_l, best_h = start + flat // len(XH), flat % len(XH)

    bits = np.concatenate([XL[best_l], XH[best_h]]).astype(bool)
    inside[free] = ~bits
    cut = Cut(inside)
    value = cut_value(g, cut)
    assert value == round(best), (value, best)
    return MaxCutResult(value, cut, "exact", True)


@dataclass(frozen=True)
class HeuristicParams:
    seed: int = 0
    restarts: int = 32
    iterations: int = 10_000


def _local_search(adj: np.ndarray, spins: np.ndarray, iterations: int) -> np.ndarray:
    # gain of flipping v = (same-side neighbours) - (opposite-side neighbours)
    field_ = adj @ spins
    for _ in range(iterations):
        gain = spins * field_
        v = int(np.argmax(gain))
        if gain[v] <= 0:
            break
        field_ -= 2 * spins[v] * adj[:, v]
        spins[v] = -spins[v]
    return spins


def heuristic_max_cut(
    g: CrossingGraph, seed: int = 0, restarts: int = 32, iterations: int = 10_000
) -> MaxCutResult:
    """Multi-restart steepest-ascent single-flip local search.

    Restart k starts from a uniform random cut drawn from ``default_rng([seed, k])``
    and flips the best-gain vertex (lowest index on ties) until no flip helps or
    ``iterations`` flips were made. Ties between restarts keep the earliest.
    """
    if restarts < 1 or iterations < 1:
        raise ValueError("restarts and iterations must be >= 1")
    adj = g.adjacency
    best_value, best_spins = -1, None
    for k in range(restarts):
        rng = np.random.default_rng([seed % 2**64, k])
        spins = np.where(rng.random(g.num_vertices) < 0.5, 1, -1).astype(np.int64)
        spins = _local_search(adj, spins, iterations)
        value = cut_value(g, Cut(spins > 0))
        if value > best_value:
            best_value, best_spins = value, spins
    inside = best_spins > 0
    # canonical orientation: isolated vertices inside, first active vertex inside
    active = np.flatnonzero(g.degrees() > 0)
    if len(active) and not inside[active[0]]:
        inside = ~inside
    inside[g.isolated()] = True
    cut = Cut(inside)
    return MaxCutResult(cut_value(g, cut), cut, "heuristic", False)


def crossing_lower_bound(n: int, maxcut_value: int) -> int:
    edges = math.comb(n, 4)
    if maxcut_value > edges or maxcut_value < 0:
        raise ValueError(f"MAX-CUT value {maxcut_value} outside [0, C({n},4)={edges}]")
    return edges - maxcut_value


def asymptotic_lower_bound(n: float) -> float:
    """Leading-order term n^4 (1/48 - 1/(16 pi^2)); the O(n^3) correction is unknown."""
    return LEADING_CONSTANT * n**4
