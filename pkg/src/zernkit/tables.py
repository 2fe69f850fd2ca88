"""Builders that regenerate the benchmark tables and figure series as rows.

Each builder returns (header, rows); the CLI writes them as CSV.
"""

import math

import numpy as np

from . import oracles, reference
from .expansion import coeff_decay_report, fit_function
from .quad import angular_nodes, disk_rule, integrate_disk, radial_rule
from .testfuncs import EXACT_INTEGRALS, f1, f2, f3, f4, bessel
from .zernike import COS, ZernikeTriple

F4_GRID_M = 9
BESSEL_M = 41


def quad_table(f, exact, sizes):
    rows = []
    for m in sizes:
        value = integrate_disk(f, disk_rule(m))
        abs_err = value - exact
        rel_err = abs_err / exact if exact else float("nan")
        rows.append((m, 2 * m, exact, value, abs_err, rel_err))
    return ("m", "angular", "exact", "quadrature", "abs_error", "rel_error"), rows


def f1_quad():
    return quad_table(f1, EXACT_INTEGRALS["f1"], sorted(reference.F1_ROWS))


def f2_quad():
    return quad_table(f2, 0.0, sorted(reference.F2_ROWS))


def f3_quad():
    return quad_table(f3, EXACT_INTEGRALS["f3"], sorted(reference.F3_ROWS))


def f4_coefficients(M=F4_GRID_M):
    """Cosine coefficients of f4 on the orthonormal basis for N, n in the table's range."""
    e = fit_function(f4, M)
    rows = []
    for (N, n) in sorted(reference.F4_COEFFS):
        t = ZernikeTriple(N, n, COS)
        rows.append((N, n, e[t] if t.degree <= M - 1 else float("nan")))
    return ("N", "n", "alpha"), rows


def bessel_zernike_series(M=BESSEL_M, count=16):
    """[(index, log10|alpha|)] for R_{10,n}, index = n + 1."""
    e = fit_function(bessel, M)
    report = dict(coeff_decay_report(e, 10, COS))
    return [(n + 1, report.get(n, -math.inf)) for n in range(count)]


def bessel_chebyshev_series(count=BESSEL_M):
    """[(index, log10|c|)] for the Chebyshev interpolant of the radial factor, index = degree + 1.

    The radial factor is taken relative to the normalised angular function
    cos(10 theta)/sqrt(pi), i.e. sqrt(pi) J_10(10 r).
    """
    nodes = oracles.chebyshev_nodes(count)
    samples = math.sqrt(math.pi) * oracles.bessel_j(10, 10.0 * nodes)
    coeffs = oracles.chebyshev_radial_fit(samples)
    return [(i + 1, math.log10(abs(c)) if c else -math.inf) for i, c in enumerate(coeffs)]


def bessel_decay():
    zern = dict(bessel_zernike_series())
    cheb = dict(bessel_chebyshev_series())
    rows = [(i, zern.get(i, float("nan")), cheb[i]) for i in sorted(cheb)]
    return ("index", "zernike_log10", "chebyshev_log10"), rows


def nodes_20():
    rule = radial_rule(20, 1.0)
    theta = angular_nodes(40)
    rows = []
    for j in range(40):
        r, w = (rule.nodes[j], rule.weights[j]) if j < 20 else (float("nan"), float("nan"))
        rows.append((j + 1, theta[j], r, w))
    return ("node", "theta", "r", "omega"), rows


TABLES = {
    "f1-quad": f1_quad,
    "f2-quad": f2_quad,
    "f3-quad": f3_quad,
    "f4-coeffs": f4_coefficients,
    "bessel-decay": bessel_decay,
    "nodes-20": nodes_20,
}


def first_index_below(series, threshold):
    """Smallest index whose log10 value is at or below log10(threshold)."""
    level = math.log10(threshold)
    for i, v in series:
        if v <= level:
            return i
    return None


def compare_log10(ours, published, floor=-15.0):
    """Per-index deviations; entries where both sides sit below ``floor`` count as 0."""
    out = []
    for (i, a), b in zip(ours, published):
        out.append((i, 0.0 if a <= floor and b <= floor else abs(a - b)))
    return out


def max_abs(values):
    return float(np.max(np.abs(values)))
