"""Radial polynomials R_{N,n}, angular factors S_N^l and Zernike polynomials.

R_{N,n} has degree N + 2n, satisfies R_{N,n}(1) = 1 and is orthogonal on
[0, 1] under the weight x^(p+1); p = 0 is the unit disk, p = -1 the interval.
Evaluation uses the forward recurrence in n for fixed N (Kintner's method,
generalised to arbitrary p).
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError, ValidationError
from .jacobi import JacobiSpec, eval_jacobi, eval_jacobi_deriv

COS = "cos"
SIN = "sin"


@dataclass(frozen=True, order=True)
class ZernikeTriple:
    """Index (N, n, parity): angular frequency, radial index, cos/sin.

    N = 0 has a single (constant) angular factor, stored as ``cos``.
    """

    N: int
    n: int
    parity: str = COS

    def __post_init__(self):
        for name in ("N", "n"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 0:
                raise ValidationError(f"{name} must be a non-negative integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.parity not in (COS, SIN):
            raise ValidationError(f"parity must be 'cos' or 'sin', got {self.parity!r}")
        if self.N == 0 and self.parity == SIN:
            raise ValidationError("N = 0 has no sine component")

    @property
    def degree(self):
        return self.N + 2 * self.n

    def sort_key(self):
        return (self.N, self.n, self.parity == SIN)

    def __str__(self):
        return f"({self.N},{self.n},{self.parity})"


def triples_up_to(degree):
    """All triples with N + 2n <= degree, in (N, n, cos-before-sin) order."""
    out = []
    for N in range(degree + 1):
        for n in range((degree - N) // 2 + 1):
            out.append(ZernikeTriple(N, n, COS))
            if N > 0:
                out.append(ZernikeTriple(N, n, SIN))
    out.sort(key=ZernikeTriple.sort_key)
    return out


def _check_radius(x, open_interval=False):
    x_arr = np.asarray(x)
    if not np.all(np.isfinite(x_arr)):
        raise DomainError("radius must be finite")
    if open_interval:
        bad = np.any(x_arr <= 0.0) or np.any(x_arr >= 1.0)
    else:
        bad = np.any(x_arr < 0.0) or np.any(x_arr > 1.0)
    if bad:
        raise DomainError("radius must lie in the unit interval")


def _check_p(p):
    if not p >= -1:
        raise DomainError(f"dimension parameter must satisfy p >= -1, got {p!r}")


def radial_norm(N, n, p=0):
    """Factor sqrt(2(2n + N + p/2 + 1)) turning R_{N,n} into R-bar_{N,n}."""
    return math.sqrt(2 * (2 * n + N + p / 2 + 1))


def _recurrence_step(n, a, x2):
    # coefficients of R_{N,n+1} = c1 * R_{N,n} - c2 * R_{N,n-1}, a = N + p/2
    denom = 2.0 * (n + 1) * (n + a + 1) * (2 * n + a)
    poch = (2 * n + a) * (2 * n + a + 1) * (2 * n + a + 2)
    c1 = -((2 * n + a + 1) * a * a + poch * (1 - 2 * x2)) / denom
    c2 = 2.0 * n * (n + a) * (2 * n + a + 2) / denom
    return c1, c2


def radial_eval_batch(N, n_max, p, x):
    """Return [R_{N,0}(x), ..., R_{N,n_max}(x)] from a single recurrence pass.

    For array ``x`` the result is an array with a leading axis of length
    n_max + 1.
    """
    _check_p(p)
    _check_radius(x)
    a = N + p / 2
    x2 = x * x
    r0 = x**N if N else (np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0)
    values = [r0]
    if n_max >= 1:
        values.append(r0 * ((a + 2) * x2 - (a + 1)))
    for n in range(1, n_max):
        c1, c2 = _recurrence_step(n, a, x2)
        values.append(c1 * values[n] - c2 * values[n - 1])
    if isinstance(x, np.ndarray):
        return np.array(values)
    return values


def radial_eval(N, n, p, x):
    """Evaluate R_{N,n}(x) for dimension parameter p (p = 0 is the disk)."""
    return radial_eval_batch(N, n, p, x)[n]


def radial_deriv(N, n, p, x):
    """d/dx R_{N,n}(x).

    Inside (0, 1) the derivative is recovered from the differential relation

        (2n+a) x (1-x^2) R' = (N(2n+a) + 2n^2 - (2n+N)(2n+a) x^2) R_{N,n}
                              + 2n(n+a) R_{N,n-1},      a = N + p/2.

    At the endpoints, where that relation degenerates, the Jacobi form
    R = (-1)^n x^N P_n^(a,0)(1 - 2x^2) is differentiated instead.
    """
    _check_p(p)
    _check_radius(x)
    if n == 0:
        return N * x ** (N - 1) if N else 0.0 * x
    a = N + p / 2
    x = np.asarray(x, dtype=float)
    interior = (x > 0.0) & (x < 1.0)
    out = np.empty_like(x)
    if np.any(interior):
        xi = x[interior]
        vals = radial_eval_batch(N, n, p, xi)
        rhs = ((N * (2 * n + a) + 2 * n * n - (2 * n + N) * (2 * n + a) * xi * xi) * vals[n]
               + 2 * n * (n + a) * vals[n - 1])
        out[interior] = rhs / ((2 * n + a) * xi * (1 - xi * xi))
    if np.any(~interior):
        xe = x[~interior]
        spec = JacobiSpec(n, a)
        t = 1.0 - 2.0 * xe * xe
        lead = N * xe ** (N - 1) if N else 0.0 * xe
        tail = xe**N * eval_jacobi_deriv(spec, t) * (-4.0 * xe)
        out[~interior] = (-1) ** n * (lead * eval_jacobi(spec, t) + tail)
    return out if out.ndim else float(out)


def angular_eval(N, parity, theta):
    """S_N^l(theta): (2 pi)^(-1/2) for N = 0, else sin/cos(N theta)/sqrt(pi)."""
    if N == 0:
        return np.full_like(theta, 1.0 / math.sqrt(2 * math.pi), dtype=float) \
            if isinstance(theta, np.ndarray) else 1.0 / math.sqrt(2 * math.pi)
    trig = np.cos if parity == COS else np.sin
    val = trig(N * theta) / math.sqrt(math.pi)
    return val if isinstance(theta, np.ndarray) else float(val)


def zernike_eval(t, r, theta, normalized=True):
    """Z_{N,n}^l(r, theta) = R_{N,n}(r) S_N^l(theta), optionally L2-normalised.

    The normalised polynomial multiplies by sqrt(2(2n + N + 1)) and has unit
    L2 norm on the disk.
    """
    value = radial_eval(t.N, t.n, 0, r) * angular_eval(t.N, t.parity, theta)
    if normalized:
        value = value * radial_norm(t.N, t.n)
    return value
