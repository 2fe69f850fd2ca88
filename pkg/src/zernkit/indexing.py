"""Conversions between (N, n, parity) triples and the optics orderings.

The standard double index (n, m) has radial order n and signed azimuthal
order m with |m| <= n and n - |m| even; m < 0 selects the sine factor.
"""

from dataclasses import dataclass
import math
from typing import Optional

import numpy as np

from .errors import ValidationError
from .jacobi import JacobiSpec, eval_jacobi
from .zernike import COS, SIN, ZernikeTriple


@dataclass(frozen=True)
class StdIndex:
    n: int
    m: int

    def __post_init__(self):
        for name in ("n", "m"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise ValidationError(f"{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.n < 0 or abs(self.m) > self.n or (self.n - abs(self.m)) % 2:
            raise ValidationError(f"invalid double index (n={self.n}, m={self.m}): "
                                  "need |m| <= n and n - |m| even")

    @property
    def spatial_frequency(self):
        return self.n + abs(self.m)


def std_to_triple(s):
    am = abs(s.m)
    return ZernikeTriple(am, (s.n - am) // 2, SIN if s.m < 0 else COS)


def triple_to_std(t):
    return StdIndex(t.N + 2 * t.n, -t.N if t.parity == SIN else t.N)


def std_indices(max_order):
    """All valid (n, m) with n <= max_order."""
    return [StdIndex(n, m) for n in range(max_order + 1) for m in range(-n, n + 1, 2)]


# -- ANSI --------------------------------------------------------------------

def ansi_index(s):
    return (s.n * (s.n + 2) + s.m) // 2


def ansi_to_std(j):
    if isinstance(j, bool) or int(j) != j or j < 0:
        raise ValidationError(f"ANSI index must be a non-negative integer, got {j!r}")
    n = (math.isqrt(8 * int(j) + 1) - 1) // 2
    return StdIndex(n, 2 * int(j) - n * (n + 2))


# -- Fringe --------------------------------------------------------------------

def fringe_index(s):
    """Rank by (n + |m|)/2, then descending |m|, cosine before sine; 0-based."""
    shell = (s.n + abs(s.m)) // 2
    # every index in earlier shells precedes; shell q holds 2q + 1 entries
    before = shell * shell
    am = abs(s.m)
    # within a shell |m| runs q, q-1, ..., 0; each |m| > 0 takes two slots
    slots = 2 * (shell - am)
    return before + slots + (1 if s.m < 0 else 0)


def fringe_to_std(j):
    if isinstance(j, bool) or int(j) != j or j < 0:
        raise ValidationError(f"Fringe index must be a non-negative integer, got {j!r}")
    j = int(j)
    shell = math.isqrt(j)
    offset = j - shell * shell
    am = shell - offset // 2
    m = -am if offset % 2 else am
    return StdIndex(2 * shell - am, m)


# -- Wyant-Creath factor -------------------------------------------------------

def wyant_q_eval(s, rho):
    """Q with R*_n^{|m|}(rho) = rho^{|m|} Q(rho), well defined at rho = 0."""
    rho_arr = np.asarray(rho, dtype=float)
    if np.any(rho_arr < 0) or np.any(rho_arr > 1) or not np.all(np.isfinite(rho_arr)):
        raise ValidationError("rho must lie in [0, 1]")
    am = abs(s.m)
    k = (s.n - am) // 2
    val = (-1) ** k * eval_jacobi(JacobiSpec(k, am), 1.0 - 2.0 * rho * rho)
    return val


# -- names -----------------------------------------------------------------

_NAMES = {
    (0, 0): "piston",
    (1, 1): "tilt in x-direction",
    (1, -1): "tilt in y-direction",
    (2, 0): "defocus (power)",
    (2, 2): "defocus + astigmatism 45/135 degrees",
    (2, -2): "defocus + astigmatism 90/180 degrees",
    (3, 1): "tilt + horiz. coma along x-axis",
    (3, -1): "tilt + vert. coma along y-axis",
    (4, 0): "defocus + spherical aberration",
    (3, 3): "trefoil in x-direction",
    (3, -3): "trefoil in y-direction",
}


def named_aberration(s) -> Optional[str]:
    return _NAMES.get((s.n, s.m))


# -- table basis -------------------------------------------------------------

def to_table_basis(alpha, t):
    """Coefficient on R-bar * trig from one on the orthonormal basis R-bar * S.

    The tables' basis drops the angular normalisation, so the coefficient
    is divided by sqrt(2 pi) for N = 0 and by sqrt(pi) otherwise.
    """
    return alpha / math.sqrt(2 * math.pi if t.N == 0 else math.pi)


def from_table_basis(c, t):
    return c * math.sqrt(2 * math.pi if t.N == 0 else math.pi)


def convert_all(s):
    t = std_to_triple(s)
    return {
        "std": {"n": s.n, "m": s.m},
        "triple": {"N": t.N, "n": t.n, "parity": t.parity},
        "ansi": ansi_index(s),
        "fringe": fringe_index(s),
        "name": named_aberration(s),
    }
