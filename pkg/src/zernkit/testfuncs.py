"""Benchmark integrands on the unit disk, addressable by short ids.

Ids: f1, f2, f3, f4, bessel, unit, and ``zernike:N,n,parity`` for a single
normalised Zernike polynomial.  Every function takes (r, theta) arrays.
"""

import math

import numpy as np

from . import oracles
from .errors import ValidationError
from .zernike import ZernikeTriple, zernike_eval


def f1(r, theta):
    """1 / (1 + 25 (x^2 + y^2))."""
    return 1.0 / (1.0 + 25.0 * r * r) + 0.0 * theta


def f2(r, theta):
    """J_100(150 r) cos(100 theta); its integral over the disk is 0."""
    return oracles.bessel_j(100, 150.0 * np.asarray(r, dtype=float)) * np.cos(100 * theta)


def f3(r, theta):
    """P_8(x) P_12(y)."""
    return oracles.legendre_p(8, r * np.cos(theta)) * oracles.legendre_p(12, r * np.sin(theta))


def f4(r, theta):
    """P_2(x) P_4(y)."""
    return oracles.legendre_p(2, r * np.cos(theta)) * oracles.legendre_p(4, r * np.sin(theta))


def bessel(r, theta):
    """J_10(10 r) cos(10 theta)."""
    return oracles.bessel_j(10, 10.0 * np.asarray(r, dtype=float)) * np.cos(10 * theta)


def unit(r, theta):
    return np.ones(np.broadcast(r, theta).shape)


FUNCTIONS = {"f1": f1, "f2": f2, "f3": f3, "f4": f4, "bessel": bessel, "unit": unit}

# disk integrals; f3 from exact rational arithmetic
EXACT_INTEGRALS = {
    "f1": math.pi * math.log(26.0) / 25.0,
    "f2": 0.0,
    "f3": oracles.fraction_times_pi(oracles.legendre_product_disk_integral(8, 12)),
    "f4": oracles.fraction_times_pi(oracles.legendre_product_disk_integral(2, 4)),
    "bessel": 0.0,
    "unit": math.pi,
}


def parse_triple(text):
    """'3,1,sin' -> ZernikeTriple(3, 1, 'sin'); parity defaults to cos."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (2, 3):
        raise ValidationError(f"expected 'N,n[,parity]', got {text!r}")
    try:
        N, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValidationError(f"expected integer N and n, got {text!r}") from None
    return ZernikeTriple(N, n, parts[2] if len(parts) == 3 else "cos")


def get_function(fid):
    """Resolve an id to a callable f(r, theta)."""
    if fid in FUNCTIONS:
        return FUNCTIONS[fid]
    if fid.startswith("zernike:"):
        t = parse_triple(fid[len("zernike:"):])
        return lambda r, theta: zernike_eval(t, r, theta)
    raise ValidationError(f"unknown function id {fid!r}; choose from "
                          f"{', '.join(sorted(FUNCTIONS))} or zernike:N,n,parity")


def exact_integral(fid):
    if fid in EXACT_INTEGRALS:
        return EXACT_INTEGRALS[fid]
    if fid.startswith("zernike:"):
        t = parse_triple(fid[len("zernike:"):])
        return math.sqrt(math.pi) if (t.N, t.n) == (0, 0) else 0.0
    return None
