"""Quick consistency checks of the main routines against the oracles."""

import math

import numpy as np

from . import oracles
from .expansion import fit_function
from .prufer import find_roots
from .quad import disk_rule, integrate_disk
from .testfuncs import EXACT_INTEGRALS, f1
from .zernike import ZernikeTriple, radial_eval, zernike_eval


def _checks():
    yield "radial recurrence vs direct sum", max(
        abs(radial_eval(N, n, 0, x) - oracles.radial_direct_sum(N, n, 0, x))
        for N in range(6) for n in range(6) for x in (0.1, 0.5, 0.9)) <= 1e-11
    ours = np.array(find_roots(20, 1.0).roots)
    ref = np.array(oracles.bisection_roots(20, 1.0))
    yield "roots of Pt_20^1 vs bisection", float(np.max(np.abs(ours - ref))) <= 1e-12
    value = integrate_disk(f1, disk_rule(25))
    yield "f1 quadrature at m = 25", abs(value - EXACT_INTEGRALS["f1"]) <= 1e-13
    t = ZernikeTriple(3, 1, "sin")
    e = fit_function(lambda r, th: zernike_eval(t, r, th), 10)
    yield "fit recovers a single Zernike polynomial", all(
        abs(a - (1.0 if k == t else 0.0)) <= 1e-12 for k, a in e.coeffs.items())
    yield "Bessel J_10(5) vs power series", math.isclose(
        oracles.bessel_j(10, 5.0), oracles.bessel_series(10, 5.0), rel_tol=1e-12)


def run_selftest(stream):
    failures = 0
    for name, ok in _checks():
        stream.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
        failures += not ok
    return failures
