"""Zernike expansions: fitting from samples on the interpolation grid and synthesis.

The grid for degree bound M has the M roots of Pt_M^1 in r and the 2M - 1
angles theta_l = l 2 pi / (2M - 1), l = 1..2M-1.  Fitting is exact for every
function in the span of normalised Zernike polynomials of degree <= M - 1.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import csv
import io
import json
import math
import os
from typing import Dict

import numpy as np

from .errors import DomainError, ValidationError
from .quad import RadialRule, radial_rule
from .zernike import COS, SIN, ZernikeTriple, _check_radius, radial_eval_batch, radial_norm, triples_up_to

COEFF_HEADER = ("N", "n", "parity", "alpha")


@dataclass(frozen=True)
class InterpGrid:
    M: int
    radial: RadialRule

    @property
    def radial_nodes(self):
        return self.radial.nodes

    @property
    def radial_weights(self):
        return self.radial.weights

    @property
    def angular_count(self):
        return 2 * self.M - 1

    @property
    def angular_nodes(self):
        return np.arange(1, 2 * self.M) * (2 * math.pi) / (2 * self.M - 1)

    @property
    def shape(self):
        return (self.M, 2 * self.M - 1)

    @property
    def size(self):
        return self.M * (2 * self.M - 1)

    def points(self):
        """Arrays (r, theta) of shape (M, 2M - 1)."""
        return np.meshgrid(self.radial_nodes, self.angular_nodes, indexing="ij")


@dataclass
class Expansion:
    """Coefficients in the orthonormal basis of triples with N + 2n <= M - 1."""

    M: int
    coeffs: Dict[ZernikeTriple, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.M < 1:
            raise DomainError("degree bound M must be at least 1")
        for t in self.coeffs:
            if t.degree > self.M - 1:
                raise ValidationError(f"triple {t} exceeds the degree bound M - 1 = {self.M - 1}")

    def __getitem__(self, t):
        return self.coeffs.get(t, 0.0)

    def ordered(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())


def _check_M(M):
    if isinstance(M, bool) or int(M) != M or M < 1:
        raise DomainError(f"degree bound M must be a positive integer, got {M!r}")
    return int(M)


def make_grid(M):
    """Interpolation grid with M radial and 2M - 1 angular nodes."""
    M = _check_M(M)
    return InterpGrid(M=M, radial=radial_rule(M, 1.0))


def sample(f, grid):
    """Evaluate f(r, theta) on the grid; returns an (M, 2M - 1) array."""
    r, theta = grid.points()
    return np.broadcast_to(np.asarray(f(r, theta), dtype=float), grid.shape).copy()


def _threads():
    try:
        return max(1, int(os.environ.get("ZERNKIT_THREADS", "1")))
    except ValueError:
        return 1


def fit(samples, grid):
    """Coefficients of the degree <= M - 1 interpolant through the samples.

    ``samples[i, l]`` is f at (r_i, theta_l).  The angular sums are formed
    once per ring and frequency, then combined with the radial weights, so
    the cost is O(M^3).
    """
    samples = np.asarray(samples, dtype=float)
    M = grid.M
    if samples.shape != grid.shape:
        raise ValidationError(f"expected samples of shape {grid.shape}, got {samples.shape}")
    bad = ~np.isfinite(samples)
    if np.any(bad):
        i, l = (int(v) for v in np.argwhere(bad)[0])
        raise ValidationError(
            f"missing or non-finite sample at radial node {i + 1} (r={grid.radial_nodes[i]!r}), "
            f"angular node {l + 1} (theta={grid.angular_nodes[l]!r})")

    h = 2 * math.pi / (2 * M - 1)
    thetas = grid.angular_nodes
    freqs = np.arange(M)
    cos_tab = np.cos(np.outer(freqs, thetas))
    sin_tab = np.sin(np.outer(freqs, thetas))

    def ring(i):
        row = samples[i]
        return h * (cos_tab @ row), h * (sin_tab @ row)

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        rings = list(pool.map(ring, range(M)))
    cos_sums = np.array([c for c, _ in rings])  # (M rings, M freqs)
    sin_sums = np.array([s for _, s in rings])

    r, w = grid.radial_nodes, grid.radial_weights
    coeffs = {}
    for N in range(M):
        n_max = (M - 1 - N) // 2
        if n_max < 0:
            continue
        rad = radial_eval_batch(N, n_max, 0, r)  # (n_max + 1, M)
        norms = np.array([radial_norm(N, n) for n in range(n_max + 1)])
        weighted = rad * norms[:, None] * w[None, :]
        if N == 0:
            vals = weighted @ cos_sums[:, 0] / math.sqrt(2 * math.pi)
            for n in range(n_max + 1):
                coeffs[ZernikeTriple(0, n, COS)] = float(vals[n])
        else:
            vc = weighted @ cos_sums[:, N] / math.sqrt(math.pi)
            vs = weighted @ sin_sums[:, N] / math.sqrt(math.pi)
            for n in range(n_max + 1):
                coeffs[ZernikeTriple(N, n, COS)] = float(vc[n])
                coeffs[ZernikeTriple(N, n, SIN)] = float(vs[n])
    return Expansion(M=M, coeffs=dict(sorted(coeffs.items(), key=lambda kv: kv[0].sort_key())))


def fit_function(f, M):
    """Convenience wrapper: build the grid, sample f and fit."""
    grid = make_grid(M)
    return fit(sample(f, grid), grid)


def evaluate(e, r, theta):
    """Sum of alpha_t Z-bar_t(r, theta) over the stored coefficients."""
    _check_radius(r)
    r_arr = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    total = np.zeros(np.broadcast(r_arr, theta).shape)
    by_freq = {}
    for t, a in e.coeffs.items():
        by_freq.setdefault(t.N, []).append((t, a))
    for N, items in sorted(by_freq.items()):
        n_max = max(t.n for t, _ in items)
        rad = radial_eval_batch(N, n_max, 0, r_arr if r_arr.ndim else np.array([float(r_arr)]))
        if not r_arr.ndim:
            rad = rad[:, 0]
        for t, a in items:
            radial = rad[t.n] * radial_norm(N, t.n)
            if N == 0:
                ang = 1.0 / math.sqrt(2 * math.pi)
            else:
                ang = (np.cos if t.parity == COS else np.sin)(N * theta) / math.sqrt(math.pi)
            total = total + a * radial * ang
    return float(total) if total.ndim == 0 else total


def coeff_decay_report(e, N, parity=COS):
    """[(n, log10|alpha|)] for frequency N, ascending n; zero coefficients are omitted."""
    out = []
    for t, a in e.ordered():
        if t.N == N and (t.parity == parity or N == 0) and a != 0.0:
            out.append((t.n, math.log10(abs(a))))
    return out


def basis_count(M):
    """Number of triples with N + 2n <= M - 1."""
    return len(triples_up_to(M - 1))


# -- coefficient files ------------------------------------------------------

def format_number(x):
    """Shortest decimal that round-trips to the same double."""
    return repr(float(x))


def expansion_to_csv(e):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COEFF_HEADER)
    for t, a in e.ordered():
        writer.writerow([t.N, t.n, t.parity, format_number(a)])
    return buf.getvalue()


def expansion_to_json(e):
    rows = [{"N": t.N, "n": t.n, "parity": t.parity, "alpha": float(a)} for t, a in e.ordered()]
    return json.dumps({"M": e.M, "coefficients": rows}, indent=2) + "\n"


def expansion_from_csv(text, M=None):
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != COEFF_HEADER:
        raise ValidationError(f"coefficient file header must be {','.join(COEFF_HEADER)}")
    coeffs = {}
    for row in reader:
        if not row:
            continue
        t = ZernikeTriple(int(row[0]), int(row[1]), row[2])
        coeffs[t] = float(row[3])
    if M is None:
        M = max((t.degree for t in coeffs), default=0) + 1
    return Expansion(M=M, coeffs=coeffs)


def expansion_from_json(text):
    data = json.loads(text)
    coeffs = {ZernikeTriple(r["N"], r["n"], r["parity"]): float(r["alpha"])
              for r in data["coefficients"]}
    return Expansion(M=int(data["M"]), coeffs=coeffs)
