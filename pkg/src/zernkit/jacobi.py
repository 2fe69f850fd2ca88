"""Jacobi polynomials P_n^(k,0) and the shifted family orthonormal on [0, 1].

The shifted polynomials are

    Pt_n^k(x) = sqrt(k + 2n + 1) * P_n^(k,0)(1 - 2x),

which satisfy  int_0^1 Pt_i^k Pt_j^k x^k dx = delta_ij  for real k > -1.
Their roots are the radial nodes of the disk quadrature.

All evaluators accept a float or a numpy array for ``x``.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class JacobiSpec:
    """Degree ``n`` and weight exponent ``k`` of P_n^(k,0)."""

    n: int
    k: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise DomainError(f"degree must be a non-negative integer, got {self.n!r}")
        if not math.isfinite(self.k) or self.k <= -1:
            raise DomainError(f"weight exponent must satisfy k > -1, got {self.k!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "k", float(self.k))


def _coefficients(n, k):
    # three-term coefficients for P_{n+1} from P_n, P_{n-1}; valid for n >= 1
    a1 = 2.0 * (n + 1) * (n + k + 1) * (2 * n + k)
    a2 = (2 * n + k + 1) * k * k
    a3 = (2 * n + k) * (2 * n + k + 1) * (2 * n + k + 2)
    a4 = 2.0 * (n + k) * n * (2 * n + k + 2)
    return a2 / a1, a3 / a1, a4 / a1


def _check_finite(x):
    if not np.all(np.isfinite(x)):
        raise DomainError("evaluation point must be finite")


def _jacobi_pair(n, k, x):
    """Return (P_n^(k,0)(x), d/dx P_n^(k,0)(x)) by forward recurrence."""
    p_prev, d_prev = 1.0 + 0.0 * x, 0.0 * x
    if n == 0:
        return p_prev, d_prev
    p, d = (k + (k + 2) * x) / 2, (k + 2) / 2 + 0.0 * x
    for j in range(1, n):
        c2, c3, c4 = _coefficients(j, k)
        lin = c2 + c3 * x
        p_next = lin * p - c4 * p_prev
        d_next = lin * d - c4 * d_prev + c3 * p
        p_prev, p = p, p_next
        d_prev, d = d, d_next
    return p, d


def eval_jacobi(spec, x):
    """Evaluate P_n^(k,0)(x) with the stable three-term recurrence."""
    _check_finite(x)
    n, k = spec.n, spec.k
    p_prev = np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0
    if n == 0:
        return p_prev
    p = (k + (k + 2) * x) / 2
    for j in range(1, n):
        c2, c3, c4 = _coefficients(j, k)
        p_prev, p = p, (c2 + c3 * x) * p - c4 * p_prev
    return p


def eval_jacobi_deriv(spec, x):
    """Evaluate d/dx P_n^(k,0)(x) by the differentiated recurrence."""
    _check_finite(x)
    return _jacobi_pair(spec.n, spec.k, x)[1]


def _check_unit_interval(x):
    _check_finite(x)
    if np.any(np.asarray(x) < 0.0) or np.any(np.asarray(x) > 1.0):
        raise DomainError("shifted Jacobi polynomials are defined on [0, 1]")


def eval_shifted(spec, x):
    """Evaluate the orthonormal shifted polynomial Pt_n^k(x), x in [0, 1]."""
    _check_unit_interval(x)
    return math.sqrt(spec.k + 2 * spec.n + 1) * _shifted_pair_raw(spec.n, spec.k, x)[0]


def eval_shifted_deriv(spec, x):
    """Evaluate d/dx Pt_n^k(x) = -2 sqrt(k+2n+1) P_n^(k,0)'(1 - 2x)."""
    _check_unit_interval(x)
    return -2.0 * math.sqrt(spec.k + 2 * spec.n + 1) * _shifted_pair_raw(spec.n, spec.k, x)[1]


def _linear_factor(c2, c3, x, t):
    # c2 + c3 (1 - 2x): written in x below 1/2 so small x keeps its relative
    # precision; above 1/2 the subtraction 1 - 2x is exact
    if isinstance(x, np.ndarray):
        return np.where(x < 0.5, (c2 + c3) - 2.0 * c3 * x, c2 + c3 * t)
    return (c2 + c3) - 2.0 * c3 * x if x < 0.5 else c2 + c3 * t


def _shifted_pair_raw(n, k, x):
    # P_n^(k,0)(1 - 2x) and its derivative in t = 1 - 2x
    p_prev, d_prev = 1.0 + 0.0 * x, 0.0 * x
    if n == 0:
        return p_prev, d_prev
    t = 1.0 - 2.0 * x
    p, d = _linear_factor(k / 2, (k + 2) / 2, x, t), (k + 2) / 2 + 0.0 * x
    for j in range(1, n):
        c2, c3, c4 = _coefficients(j, k)
        lin = _linear_factor(c2, c3, x, t)
        p_next = lin * p - c4 * p_prev
        d_next = lin * d - c4 * d_prev + c3 * p
        p_prev, p = p, p_next
        d_prev, d = d, d_next
    return p, d


def shifted_pair(n, k, x):
    """Return (Pt_n^k(x), Pt_n^k'(x)) in one recurrence pass, no domain checks.

    Used by the root finder, where Newton iterates may briefly leave [0, 1].
    """
    p, d = _shifted_pair_raw(n, k, x)
    c = math.sqrt(k + 2 * n + 1)
    return c * p, -2.0 * c * d


def shifted_batch(n_max, k, x):
    """Return an array whose row j holds Pt_j^k(x) for j = 0..n_max."""
    x = np.asarray(x, dtype=float)
    t = 1.0 - 2.0 * x
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = _linear_factor(k / 2, (k + 2) / 2, x, t)
    for j in range(1, n_max):
        c2, c3, c4 = _coefficients(j, k)
        out[j + 1] = _linear_factor(c2, c3, x, t) * out[j] - c4 * out[j - 1]
    scale = np.sqrt(k + 2 * np.arange(n_max + 1) + 1.0)
    return out * scale.reshape((-1,) + (1,) * x.ndim)
