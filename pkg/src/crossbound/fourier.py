"""Fourier analysis of the crossing indicator on the torus.

Points of the circle are reals mod 1 and ``[t]`` is the representative of t in
[0, 1). The crossing indicator C(w, x, y, z) is 1 when the chords (w, y) and
(x, z) interleave. Functions on the 2-torus are given by finitely supported
coefficient tables a[n, m] with f(x, y) = sum a[n, m] e(nx + my) and
e(t) = exp(2 pi i t).

The quadruple integral

    I(f) = int f(w, y) conj(f(x, z)) C(w, x, y, z) dw dx dy dz

has the closed form ``lhs_form`` (valid for symmetric tables), which
``quadrature_integral`` checks independently by a midpoint rule.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from crossbound.crossing_graph import build_crossing_graph, cut_from_drawing, cut_value
from crossbound.drawing import TwoPageDrawing

PI2 = math.pi**2


def frac(t):
    return np.mod(t, 1.0)


def _degenerate(w, x, y, z) -> np.ndarray:
    pts = [frac(np.asarray(p, dtype=float)) for p in (w, x, y, z)]
    out = np.zeros(np.broadcast(*pts).shape, dtype=bool)
    for p, q in itertools.combinations(pts, 2):
        out |= p == q
    return out


def crossing_indicator(w, x, y, z):
    """1 where (w, y) crosses (x, z), else 0; points with a repeated coordinate give 0.

    [x-w] + [y-x] + [z-y] + [w-z] is an integer (the number of times the closed
    walk w -> x -> y -> z -> w winds round the circle); it is odd exactly
    when the two chords interleave.
    """
    w, x, y, z = (np.asarray(p, dtype=float) for p in (w, x, y, z))
    winding = np.rint(frac(x - w) + frac(y - x) + frac(z - y) + frac(w - z)).astype(np.int64)
    out = np.where(_degenerate(w, x, y, z), 0, winding % 2)
    return int(out) if out.ndim == 0 else out


def parity_product(w, x, y, z):
    """e([x-w]/2) e([y-x]/2) e([z-y]/2) e([w-z]/2), which equals (-1)^C."""
    w, x, y, z = (np.asarray(p, dtype=float) for p in (w, x, y, z))
    half = (frac(x - w) + frac(y - x) + frac(z - y) + frac(w - z)) / 2
    return np.exp(2j * np.pi * half)


def _sawtooth_sums(t: np.ndarray, N: int, power: int, chunk: int = 1 << 20) -> np.ndarray:
    """sum_{n=1}^N sin(2 pi n t)/n  (power=1)  or  sum_{n=1}^N cos(2 pi n t)/n^2  (power=2).

    Evaluated once per distinct value of t.
    """
    flat = frac(np.asarray(t, dtype=float)).ravel()
    uniq, inv = np.unique(flat, return_inverse=True)
    n = np.arange(1, N + 1, dtype=float)
    trig = np.sin if power == 1 else np.cos
    vals = np.empty(len(uniq))
    step = max(1, chunk // N)
    for s in range(0, len(uniq), step):
        u = uniq[s : s + step]
        vals[s : s + step] = (trig(2 * np.pi * np.outer(u, n)) / n**power).sum(axis=1)
    return vals[inv].reshape(np.shape(t))


def truncated_series_c(w, x, y, z, N: int, as_printed: bool = False):
    """Fourier series of C truncated to 1 <= |n|, |m| <= N.

    Every double sum over (n, m) factorises into a product of one-dimensional
    sums S(t) = sum_{0<|n|<=N} e(nt)/n = 2i s(t) with s(t) = sum sin(2 pi n t)/n,
    so S(t) S(u) = -4 s(t) s(u) and the series is real.

    The expansion is

      -1/(2pi^2) [S(w-x)S(y-z) + S(w-z)S(y-x)]
      +1/(2pi^2) [S(y-z)S(y-x) + S(w-z)S(y-z) + S(w-x)S(w-z) + S(w-x)S(y-x)]
      +1/(2pi^2) sum_{0<|n|<=N} [e(n(w-x)) + e(n(x-y)) + e(n(y-z)) + e(n(z-w))]/n^2
      + 1/3.

    The single-difference 1/n^2 terms come from poles where three of the four
    half-integer singularities meet. ``as_printed=True`` drops them and flips
    the sign of the S(w-x)S(y-x) family; that variant does not converge to C
    and is kept for comparison only.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    w, x, y, z = (np.asarray(p, dtype=float) for p in (w, x, y, z))
    s = {k: _sawtooth_sums(v, N, 1) for k, v in
         {"wx": w - x, "yz": y - z, "wz": w - z, "yx": y - x}.items()}
    pair = lambda a, b: -4.0 * s[a] * s[b]  # noqa: E731
    last = -1.0 if as_printed else 1.0
    total = -(pair("wx", "yz") + pair("wz", "yx"))
    total = total + pair("yz", "yx") + pair("wz", "yz") + pair("wx", "wz") + last * pair("wx", "yx")
    total = total / (2 * PI2)
    if not as_printed:
        axis = sum(2.0 * _sawtooth_sums(d, N, 2) for d in (w - x, x - y, y - z, z - w))
        total = total + axis / (2 * PI2)
    out = total + 1.0 / 3.0
    return float(out) if np.ndim(out) == 0 else out


def convolution_sum(k: int, N: int) -> float:
    """sum 1/(nm) over n + m = k with n, m != 0 and |n| <= N."""
    if N < abs(k) + 1:
        raise ValueError(f"need N >= |k| + 1, got N={N}, k={k}")
    n = np.arange(-N, N + 1, dtype=float)
    n = n[(n != 0) & (n != k)]
    return math.fsum(1.0 / (n * (k - n)))


@dataclass(frozen=True)
class CoefficientTable:
    entries: dict[tuple[int, int], complex] = field(default_factory=dict)
    symmetric: bool = False

    def __post_init__(self) -> None:
        if self.symmetric:
            for (n, m), v in self.entries.items():
                if not np.isclose(self.entries.get((m, n), 0), v, rtol=0, atol=1e-14):
                    raise ValueError(f"table flagged symmetric but a[{n},{m}] != a[{m},{n}]")

    @property
    def bound(self) -> int:
        return max((max(abs(n), abs(m)) for n, m in self.entries), default=0)

    def __getitem__(self, key: tuple[int, int]) -> complex:
        return self.entries.get(key, 0j)

    def evaluate(self, x, y) -> np.ndarray:
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        out = np.zeros(np.broadcast(x, y).shape, dtype=complex)
        for (n, m), v in self.entries.items():
            out += v * np.exp(2j * np.pi * (n * x + m * y))
        return out

    def grid(self, m: int) -> np.ndarray:
        """f at the midpoints ((i + 1/2)/m, (j + 1/2)/m), as an (m, m) array."""
        t = (np.arange(m) + 0.5) / m
        N = self.bound
        dense = np.zeros((2 * N + 1, 2 * N + 1), dtype=complex)
        for (n, k), v in self.entries.items():
            dense[n + N, k + N] = v
        waves = np.exp(2j * np.pi * np.outer(np.arange(-N, N + 1), t))
        return waves.T @ dense @ waves


def symmetrize(t: CoefficientTable) -> CoefficientTable:
    keys = set(t.entries) | {(m, n) for n, m in t.entries}
    return CoefficientTable({(n, m): (t[n, m] + t[m, n]) / 2 for n, m in keys}, symmetric=True)


def _require_symmetric(t: CoefficientTable) -> None:
    if not t.symmetric:
        raise ValueError("form is only defined for symmetric tables; call symmetrize() first")


def convolution_sum_exact(k: int) -> float:
    """Limit of ``convolution_sum``: -pi^2/3 at k = 0 and -2/k^2 otherwise.

    For k != 0, 1/(n(k-n)) = (1/k)(1/n + 1/(k-n)); summing over n != 0, k each
    harmonic piece leaves exactly one unmatched term, -1/k, so the total is
    -2/k^2.
    """
    return -PI2 / 3 if k == 0 else -2.0 / k**2


def lhs_form(t: CoefficientTable) -> float:
    """Closed form of I(f): -1/pi^2 sum_{n,m != 0} |a[n,m] - a[n+m,0]|^2 / (nm), exactly.

    Off the table's support the summand is |a[k,0]|^2/(nm) along each line
    n + m = k, so every line with a[k,0] != 0 carries an infinite tail. It is
    summed in closed form with ``convolution_sum_exact`` after subtracting the
    in-support part of the line.
    """
    _require_symmetric(t)
    terms = []
    for (n, m), v in t.entries.items():
        if n and m:
            r = t[n + m, 0]
            terms.append((abs(v - r) ** 2 - abs(r) ** 2) / (n * m))
    for (k, m), v in t.entries.items():
        if m == 0:
            terms.append(abs(v) ** 2 * convolution_sum_exact(k))
    return -math.fsum(terms) / PI2


def rhs_form(t: CoefficientTable) -> float:
    """-1/(2pi^2) sum_{n,m} |a[n,m] - a[n+1,m-1]|^2, i.e. -(2/pi^2) int |f|^2 sin^2(pi(x-y))."""
    _require_symmetric(t)
    pairs = set(t.entries) | {(n - 1, m + 1) for n, m in t.entries}
    return -math.fsum(abs(t[n, m] - t[n + 1, m - 1]) ** 2 for n, m in pairs) / (2 * PI2)


@lru_cache(maxsize=8)
def cell_averaged_indicator(m: int) -> np.ndarray:
    """Mean of C over a product of four grid cells, indexed by cell offsets from w.

    ``out[i, j, k]`` is the average of C(w, x, y, z) with w in cell 0, x in
    cell i, y in cell j, z in cell k. C depends only on the cyclic order of
    the points, so for distinct cells it is 0 or 1, and where cells coincide
    every relative order of the tied points is equally likely. Averaging the
    24 ways of staggering the four points inside their cells gives that mean
    exactly.
    """
    d = np.arange(m)
    X, Y, Z = np.meshgrid(d, d, d, indexing="ij")
    acc = np.zeros((m, m, m))
    for perm in itertools.permutations(range(4)):
        e = np.array(perm) / 4.0
        span = np.mod(Y + e[2] - e[0], m)
        rel_x = np.mod(X + e[1] - e[0], m)
        rel_z = np.mod(Z + e[3] - e[0], m)
        acc += ((rel_x > 0) & (rel_x < span)) != ((rel_z > 0) & (rel_z < span))
    out = acc / 24
    out.setflags(write=False)
    return out


def grid_integral(F: np.ndarray) -> complex:
    """Midpoint rule for I(f) from samples F[i, j] = f(t_i, t_j) at cell midpoints."""
    m = F.shape[0]
    C = cell_averaged_indicator(m)
    Fc = F.conj()
    total = 0j
    for w in range(m):
        Cw = np.roll(C, (w, w, w), axis=(0, 1, 2))
        total += np.einsum("y,xz,xyz->", F[w], Fc, Cw)
    return total / m**4


def quadrature_integral(t: CoefficientTable, m: int) -> float:
    """Independent check of ``lhs_form``: midpoint rule on an m^4 grid."""
    if m < 8:
        raise ValueError(f"grid must have m >= 8, got {m}")
    if not t.entries:
        return 0.0
    return float(grid_integral(t.grid(m)).real)


def random_symmetric_table(rng: np.random.Generator, N: int) -> CoefficientTable:
    """Complex Gaussian coefficients on |n|, |m| <= N, symmetrised, unit l2 norm."""
    entries = {}
    for n in range(-N, N + 1):
        for m in range(n, N + 1):
            entries[n, m] = entries[m, n] = complex(*rng.normal(size=2))
    norm = math.sqrt(sum(abs(v) ** 2 for v in entries.values()))
    return CoefficientTable({k: v / norm for k, v in entries.items()}, symmetric=True)


def sup_norm_sampled(t: CoefficientTable, m: int = 256) -> float:
    return float(np.abs(t.grid(m)).max())


# --- step functions from cuts ---------------------------------------------


def step_function_values(d: TwoPageDrawing, diagonal: float = -1.0) -> np.ndarray:
    """+1 on cells (a, b) whose chord {a, b} is inside, -1 on the other chords.

    Diagonal cells (a, a) carry no chord; they are outside the inside set and
    get -1 unless ``diagonal`` says otherwise.
    """
    F = np.where(d.top_matrix() == 1, 1.0, -1.0)
    np.fill_diagonal(F, diagonal)
    return F


def step_function_table(d: TwoPageDrawing, N: int, diagonal: float = -1.0) -> CoefficientTable:
    """Exact Fourier coefficients of the step function, truncated to |n|, |m| <= N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    F = step_function_values(d, diagonal)
    n = d.n
    ps = np.arange(-N, N + 1)
    a = np.arange(n)
    # I[p, a] = int over cell a of e(-p x) dx
    with np.errstate(divide="ignore", invalid="ignore"):
        I = (np.exp(-2j * np.pi * np.outer(ps, a + 1) / n) - np.exp(-2j * np.pi * np.outer(ps, a) / n)) / (
            -2j * np.pi * ps[:, None]
        )
    I[ps == 0] = 1.0 / n
    A = I @ F @ I.T
    A = (A + A.T) / 2  # exact up to roundoff; removes it
    entries = {(int(p), int(q)): complex(A[i, j]) for i, p in enumerate(ps) for j, q in enumerate(ps)}
    return CoefficientTable(entries, symmetric=True)


def step_function_integral(d: TwoPageDrawing) -> tuple[float, float]:
    """Exact I(f_S) split into (distinct-cell part, coincident-cell part)."""
    n = d.n
    F = step_function_values(d)
    C = cell_averaged_indicator(n)
    idx = np.arange(n)
    X, Y, Z = np.meshgrid(idx, idx, idx, indexing="ij")
    distinct = (X != 0) & (Y != 0) & (Z != 0) & (X != Y) & (Y != Z) & (X != Z)
    parts = np.zeros(2)
    for w in range(n):
        Cw = np.roll(C, (w, w, w), axis=(0, 1, 2))
        Dw = np.roll(distinct, (w, w, w), axis=(0, 1, 2))
        contrib = F[w][None, :, None] * F[:, None, :] * Cw
        parts += contrib[Dw].sum(), contrib[~Dw].sum()
    return parts[0] / n**4, parts[1] / n**4


def cell_sum_identity(d: TwoPageDrawing) -> float:
    """8 n^-4 (uncut edges - cut edges) of G_n under the cut induced by d."""
    g = build_crossing_graph(d.n)
    cut = cut_value(g, cut_from_drawing(d))
    return 8.0 * (g.num_edges - 2 * cut) / d.n**4
