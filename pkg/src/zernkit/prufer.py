"""Roots of the shifted Jacobi polynomials via the Pruefer phase.

Dividing the ODE of Pt_n^k,

    (r - r^2) y'' + (k + 1 - (k + 2) r) y' + n (n + k + 1) y = 0,

by (r - r^2) gives y'' + alpha y' + beta y = 0 with

    alpha(r) = (k + 1 - (k + 2) r) / (r - r^2),
    beta(r)  = n (n + k + 1) / (r - r^2).

With y'/y = sqrt(beta) tan(theta) the phase obeys

    dtheta/dr = -sqrt(beta) - (beta'/(4 beta) + alpha/2) sin(2 theta),

which is negative on (0, 1), and zeros of y sit exactly at theta = pi/2 + j pi.
Starting just right of the largest root we integrate the inverse equation
dr/dtheta over successive phase intervals of length pi, moving leftwards one
root at a time, and polish each estimate with Newton's method.
"""

from dataclasses import dataclass, field
import math
from typing import List

import numpy as np

from .errors import ConvergenceError, DomainError
from .jacobi import JacobiSpec, shifted_pair

RK_STEPS = 100
NEWTON_MAX_ITER = 30
NEWTON_STEP_TOL = 1e-15
RESIDUAL_TOL = 1e-12

_R_FLOOR = 1e-300
_R_CEIL = 1.0 - 2.0**-53


@dataclass
class PhaseState:
    r: float
    theta: float


@dataclass
class RootSet:
    """All roots of Pt_n^k in ascending order.

    ``residuals[i]`` is |Pt_n^k(roots[i])|; ``fallback`` lists the indices of
    roots that needed the bisection fallback after Newton failed.
    ``max_slope`` is the largest dtheta/dr met while marching (it must be < 0).
    """

    n: int
    k: float
    roots: List[float]
    residuals: List[float]
    fallback: List[int] = field(default_factory=list)
    max_slope: float = -math.inf

    def __len__(self):
        return len(self.roots)


def phase_rhs(n, k, r, theta):
    """dtheta/dr of the Pruefer phase of Pt_n^k."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"phase equation is singular outside (0, 1): r={r!r}")
    s = r - r * r
    return (-math.sqrt(n * (n + k + 1) / s)
            - (1 - 2 * r + 2 * k - 2 * k * r) / (4 * s) * math.sin(2 * theta))


def _slope(n, k, r, theta):
    return phase_rhs(n, k, min(max(r, _R_FLOOR), _R_CEIL), theta)


def march(n, k, state, theta_end, steps=RK_STEPS):
    """Integrate dr/dtheta from ``state`` to ``theta_end`` with midpoint RK2.

    Returns the final PhaseState and the largest dtheta/dr evaluated.
    """
    h = (theta_end - state.theta) / steps
    r, theta = state.r, state.theta
    worst = -math.inf
    for _ in range(steps):
        s1 = _slope(n, k, r, theta)
        r_mid = r + 0.5 * h / s1
        s2 = _slope(n, k, r_mid, theta + 0.5 * h)
        worst = max(worst, s1, s2)
        r = r + h / s2
        theta = theta + h
    return PhaseState(r, theta_end), worst


def starting_point(n, k):
    """A point in (0, 1) to the right of the largest root of Pt_n^k."""
    if n < 10**3:
        gap = 1e-6
    elif n < 10**4:
        gap = 1e-8
    elif n < 10**5:
        gap = 1e-10
    else:
        gap = 0.1 / (n * n)
    x0 = 1.0 - gap
    if k < 1:
        # the tabulated gaps are only guaranteed for k >= 1; confirm by scanning
        for _ in range(8):
            grid = np.linspace(x0, 1.0, 1001)
            vals = shifted_pair(n, k, grid)[0]
            if np.all(vals > 0) or np.all(vals < 0):
                break
            gap *= 0.01
            x0 = 1.0 - gap
        else:
            raise ConvergenceError(f"no root-free starting point found for n={n}, k={k}")
    return x0


def initial_phase(n, k, x0):
    """Phase at x0 from y'/y = sqrt(beta) tan(theta), principal branch."""
    p, dp = shifted_pair(n, k, x0)
    sqrt_beta = math.sqrt(n * (n + k + 1) / (x0 - x0 * x0))
    if p == 0.0:
        return math.pi / 2
    return math.atan(dp / (sqrt_beta * p))


def _newton(n, k, x):
    """Polish a root estimate. Returns (x, ok)."""
    last_step = math.inf
    for _ in range(NEWTON_MAX_ITER):
        p, dp = shifted_pair(n, k, x)
        if dp == 0.0 or not math.isfinite(p):
            return x, False
        step = p / dp
        x -= step
        if not 0.0 < x < 1.0:
            return x, False
        if abs(step) <= NEWTON_STEP_TOL:
            break
        if abs(step) >= last_step and abs(p) <= RESIDUAL_TOL * max(1.0, abs(dp)):
            # stalled at rounding level
            break
        last_step = abs(step)
    p, dp = shifted_pair(n, k, x)
    return x, abs(p) <= RESIDUAL_TOL * max(1.0, abs(dp))


def _bisect(n, k, lo, hi):
    f_lo = shifted_pair(n, k, lo)[0]
    f_hi = shifted_pair(n, k, hi)[0]
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        return None
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = shifted_pair(n, k, mid)[0]
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_roots(n, k):
    """Compute all n roots of Pt_n^k in (0, 1), returned ascending.

    >>> find_roots(1, 1).roots
    [0.6666666666666666]
    """
    spec = JacobiSpec(n, k)
    n, k = spec.n, spec.k
    if n < 1:
        raise DomainError("find_roots needs degree n >= 1")

    x0 = starting_point(n, k)
    theta0 = initial_phase(n, k, x0)
    state, worst = march(n, k, PhaseState(x0, theta0), math.pi / 2)

    found = []
    fallback = []
    upper = x0
    for j in range(n):
        guess = state.r
        root, ok = _newton(n, k, guess)
        if not ok or not 0.0 < root < upper or (found and root >= found[-1]):
            root = _fallback(n, k, j, state, upper)
            fallback.append(n - 1 - j)
        found.append(root)
        upper = root
        if j < n - 1:
            state, w = march(n, k, PhaseState(root, math.pi / 2 + j * math.pi),
                             math.pi / 2 + (j + 1) * math.pi)
            worst = max(worst, w)

    found.reverse()
    residuals = [abs(shifted_pair(n, k, x)[0]) for x in found]
    return RootSet(n=n, k=k, roots=found, residuals=residuals,
                   fallback=sorted(fallback), max_slope=worst)


def _fallback(n, k, j, state, upper):
    guess = state.r
    hi = 0.5 * (guess + upper)
    if j < n - 1:
        ahead, _ = march(n, k, PhaseState(guess, state.theta), state.theta + math.pi)
        lo = 0.5 * (guess + max(ahead.r, 0.0))
    else:
        lo = 0.5 * guess
    root = _bisect(n, k, lo, hi)
    if root is None:
        root = _bisect(n, k, _R_FLOOR, upper * (1 - 1e-15))
    if root is None:
        raise ConvergenceError(f"could not bracket root {n - j} of Pt_{n}^{k}")
    return root
