"""Independent brute-force references for testing.

Nothing here reuses the recurrences of the main modules: radial polynomials
come from explicit binomial/factorial sums, Jacobi values from the general
(alpha, beta) recurrence in its textbook normalisation, integrals from
adaptive Gauss-Legendre and periodic trapezoid rules, and exact disk
integrals of polynomials from rational arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import ConvergenceError, DomainError, ValidationError


@dataclass(frozen=True)
class ToleranceSpec:
    abs_tol: float = 1e-13
    rel_tol: float = 1e-13
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValidationError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValidationError("max_subdivisions must be positive")


# -- series ---------------------------------------------------------------

def _binom(a, b):
    """Generalised binomial C(a, b) for real a and integer b >= 0.

    A running product is used while it is accurate; log-gamma takes over for
    large b, with the sign of Gamma(a - b + 1) restored by hand.
    """
    if b < 0:
        return 0.0
    if float(a).is_integer() and a >= 0:
        return float(math.comb(int(a), b)) if b <= a else 0.0
    if b <= 170:
        out = 1.0
        for i in range(b):
            out *= (a - i) / (i + 1)
        return out
    lg = math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)
    sign = -1.0 if a - b + 1 < 0 and math.floor(a - b + 1) % 2 == 1 else 1.0
    return sign * math.exp(lg)


def radial_direct_sum(N, n, p, x):
    """R_{N,n}(x) from the explicit alternating binomial sum."""
    if not 0.0 <= x <= 1.0:
        raise DomainError("x must lie in [0, 1]")
    x2 = x * x
    total = math.fsum((-1) ** m * _binom(n + N + p / 2, m) * math.comb(n, m)
                      * x2 ** (n - m) * (1 - x2) ** m for m in range(n + 1))
    return x**N * total


def radial_factorial_sum(n, m, rho):
    """Standard double-index radial polynomial from its factorial sum."""
    am = abs(m)
    if am > n or (n - am) % 2:
        raise DomainError("need |m| <= n and n - |m| even")
    return math.fsum(
        (-1) ** s * math.factorial(n - s)
        / (math.factorial(s) * math.factorial((n + am) // 2 - s) * math.factorial((n - am) // 2 - s))
        * rho ** (n - 2 * s)
        for s in range((n - am) // 2 + 1))


def radial_coefficients(N, n, p=0):
    """Exact monomial coefficients of R_{N,n} (p must be an even integer).

    Returns a dict {power: Fraction}.
    """
    if p % 2:
        raise DomainError("exact coefficients need integer N + p/2")
    a = n + N + p // 2
    coeffs = {}
    for m in range(n + 1):
        c = (-1) ** m * math.comb(a, m) * math.comb(n, m)
        # x^N (x^2)^(n-m) (1 - x^2)^m
        for i in range(m + 1):
            power = N + 2 * (n - m) + 2 * i
            coeffs[power] = coeffs.get(power, 0) + Fraction(c * (-1) ** i * math.comb(m, i))
    return {k: v for k, v in coeffs.items() if v != 0}


def jacobi_general(n, alpha, beta, x):
    """P_n^(alpha, beta)(x) by the textbook general recurrence (array-friendly)."""
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = 0.5 * (alpha - beta + (alpha + beta + 2) * x)
    for j in range(2, n + 1):
        s = 2 * j + alpha + beta
        a1 = 2 * j * (j + alpha + beta) * (s - 2)
        a2 = (s - 1) * (alpha * alpha - beta * beta)
        a3 = (s - 2) * (s - 1) * s
        a4 = 2 * (j + alpha - 1) * (j + beta - 1) * s
        p0, p1 = p1, ((a2 + a3 * x) * p1 - a4 * p0) / a1
    return p1


def jacobi_direct_series(n, k, x):
    """P_n^(k,0)(x) from its explicit binomial sum; for moderate n only."""
    u, v = (x - 1) / 2, (x + 1) / 2
    return math.fsum(_binom(n + k, n - s) * math.comb(n, s) * u**s * v ** (n - s)
                     for s in range(n + 1))


def shifted_jacobi(n, k, x):
    """Orthonormal shifted polynomial sqrt(k+2n+1) P_n^(k,0)(1-2x)."""
    return math.sqrt(k + 2 * n + 1) * jacobi_general(n, k, 0.0, 1.0 - 2.0 * np.asarray(x))


def legendre_p(n, x):
    """Legendre polynomial P_n(x)."""
    p0, p1 = 1.0 + 0.0 * x, x
    if n == 0:
        return p0
    for j in range(1, n):
        p0, p1 = p1, ((2 * j + 1) * x * p1 - j * p0) / (j + 1)
    return p1


def legendre_p_deriv(n, x):
    """P_n'(x) from (1 - x^2) P_n' = n (P_{n-1} - x P_n), with endpoint values."""
    if n == 0:
        return 0.0 * x
    if abs(x) == 1.0:
        return x ** (n + 1) * n * (n + 1) / 2
    return n * (legendre_p(n - 1, x) - x * legendre_p(n, x)) / (1 - x * x)


def chebyshev_t(n, x):
    """Chebyshev polynomial T_n(x)."""
    t0, t1 = 1.0 + 0.0 * x, x
    if n == 0:
        return t0
    for _ in range(1, n):
        t0, t1 = t1, 2 * x * t1 - t0
    return t1


# -- roots ----------------------------------------------------------------

def bisection_roots(n, k, grid_points=10**5, tol=1e-14):
    """Roots of the shifted Jacobi polynomial by sign-change scan + bisection."""
    grid = np.linspace(0.0, 1.0, grid_points + 1)
    vals = shifted_jacobi(n, k, grid)
    idx = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
    lo, hi = grid[idx].copy(), grid[idx + 1].copy()
    f_lo = vals[idx].copy()
    if len(lo) != n:
        raise ValidationError(f"bisection oracle found {len(lo)} roots, expected {n}")
    while np.max(hi - lo) > tol:
        mid = 0.5 * (lo + hi)
        if np.all((mid == lo) | (mid == hi)):
            break
        f_mid = shifted_jacobi(n, k, mid)
        left = np.signbit(f_mid) != np.signbit(f_lo)
        hi = np.where(left, mid, hi)
        lo = np.where(left, lo, mid)
        f_lo = np.where(left, f_lo, f_mid)
    return list(0.5 * (lo + hi))


# -- Bessel functions -----------------------------------------------------

_BIG = 1e250


def bessel_j(nu, x):
    """J_nu(x) for integer nu >= 0 and 0 <= x <= 200 (scalar or array).

    Miller's downward recurrence started at order nu + 40 + ceil(x) and
    normalised with J_0 + 2 sum_k J_2k = 1.
    """
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if nu < 0 or int(nu) != nu:
        raise DomainError("order must be a non-negative integer")
    if np.any(x < 0):
        raise DomainError("argument must be non-negative")
    out = np.zeros_like(x)
    zero = x == 0.0
    out[zero] = 1.0 if nu == 0 else 0.0
    xs = x[~zero]
    if xs.size:
        start = int(nu + 40 + math.ceil(float(np.max(xs))))
        start += start % 2
        j_next = np.zeros_like(xs)
        j_cur = np.full_like(xs, 1e-300)
        norm = np.zeros_like(xs)
        want = np.zeros_like(xs)
        for order in range(start, 0, -1):
            j_prev = 2 * order / xs * j_cur - j_next
            j_next, j_cur = j_cur, j_prev
            # j_cur now holds the (unnormalised) value of order - 1
            if order - 1 == nu:
                want = j_cur.copy()
            if (order - 1) % 2 == 0 and order - 1 > 0:
                norm += 2 * j_cur
            big = np.abs(j_cur) > _BIG
            if np.any(big):
                scale = np.where(big, 1.0 / _BIG, 1.0)
                j_cur *= scale
                j_next *= scale
                norm *= scale
                want *= scale
        norm += j_cur
        out[~zero] = want / norm
    return float(out[0]) if scalar else out


def bessel_series(nu, x, terms=30):
    """Power series of J_nu(x); accurate for small and moderate x."""
    return math.fsum((-1) ** m / (math.factorial(m) * math.factorial(m + nu)) * (x / 2) ** (2 * m + nu)
                     for m in range(terms))


def bessel_zero(nu, m):
    """m-th positive zero of J_nu by scanning and bisection."""
    step = 0.05
    x = max(nu, step)
    f = bessel_j(nu, x)
    count = 0
    while True:
        x_next = x + step
        f_next = bessel_j(nu, x_next)
        if f == 0.0 or (f > 0) != (f_next > 0):
            count += 1
            if count == m:
                lo, hi = x, x_next
                for _ in range(100):
                    mid = 0.5 * (lo + hi)
                    if (bessel_j(nu, mid) > 0) == (bessel_j(nu, lo) > 0):
                        lo = mid
                    else:
                        hi = mid
                return 0.5 * (lo + hi)
        x, f = x_next, f_next
        if x > 200:
            raise ConvergenceError("zero search left the supported range")


# -- Chebyshev interpolation ---------------------------------------------

def chebyshev_nodes(count):
    """First-kind Chebyshev points mapped to [0, 1], ordered as t_j = cos(pi (j + 1/2)/count)."""
    t = np.cos(math.pi * (np.arange(count) + 0.5) / count)
    return (t + 1) / 2


def chebyshev_radial_fit(samples, degree=None):
    """Chebyshev coefficients of the interpolant through samples at chebyshev_nodes."""
    samples = np.asarray(samples, dtype=float)
    count = samples.size
    degree = count - 1 if degree is None else degree
    j = np.arange(count) + 0.5
    coeffs = np.array([2.0 / count * math.fsum(samples * np.cos(math.pi * i * j / count))
                       for i in range(degree + 1)])
    coeffs[0] /= 2
    return coeffs


# -- integrals -------------------------------------------------------------

def _periodic_trapezoid(g, tol, max_points=2**16):
    """Integrate a 2 pi periodic vectorised g by doubling trapezoid sums."""
    n = 8
    prev = None
    while n <= max_points:
        theta = np.arange(n) * (2 * math.pi / n)
        val = 2 * math.pi / n * math.fsum(np.asarray(g(theta), dtype=float))
        if prev is not None and abs(val - prev) <= tol:
            return val
        prev = val
        n *= 2
    raise ConvergenceError("periodic trapezoid rule did not converge")


def adaptive_integral(g, a, b, tol, order=20, max_subdivisions=2000):
    """Adaptive Gauss-Legendre on [a, b] with an explicit work stack.

    Returns (value, error_estimate).
    """
    x, w = leggauss(order)

    def rule(lo, hi):
        mid, half = (lo + hi) / 2, (hi - lo) / 2
        vals = np.array([g(mid + half * t) for t in x])
        return half * math.fsum(w * vals)

    stack = [(a, b, rule(a, b))]
    total, err_total = [], []
    splits = 0
    while stack:
        lo, hi, coarse = stack.pop()
        mid = (lo + hi) / 2
        left, right = rule(lo, mid), rule(mid, hi)
        err = abs(left + right - coarse)
        if err <= tol * (hi - lo) / (b - a) or hi - lo < 1e-12 * (b - a):
            total.append(left + right)
            err_total.append(err)
            continue
        splits += 1
        if splits > max_subdivisions:
            raise ConvergenceError("adaptive quadrature exceeded its subdivision limit")
        stack.append((lo, mid, left))
        stack.append((mid, hi, right))
    return math.fsum(total), math.fsum(err_total)


def adaptive_disk_integral(f, tol=None):
    """Integrate f(r, theta) over the unit disk; returns (value, error_estimate).

    The inner angular integral uses a refined periodic trapezoid rule, the
    outer radial integral (weight r) adaptive Gauss-Legendre.
    """
    tol = tol or ToleranceSpec()
    inner_tol = tol.abs_tol * 1e-2

    def ring(r):
        return r * _periodic_trapezoid(lambda th: f(np.full_like(th, r), th), inner_tol)

    value, err = adaptive_integral(ring, 0.0, 1.0, tol.abs_tol, max_subdivisions=tol.max_subdivisions)
    if err > max(tol.abs_tol, tol.rel_tol * abs(value)):
        raise ConvergenceError(f"disk integral error estimate {err:.3g} above tolerance")
    return value, err + inner_tol * 2 * math.pi


def adaptive_interval_integral(g, a=0.0, b=1.0, tol=1e-13):
    """Integral of a scalar function on [a, b]; returns the value only."""
    return adaptive_integral(g, a, b, tol)[0]


def _double_factorial(n):
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def disk_monomial_integral(a, b):
    """Exact integral of x^a y^b over the unit disk, as Fraction * pi."""
    if a % 2 or b % 2:
        return Fraction(0)
    i, j = a // 2, b // 2
    return Fraction(_double_factorial(2 * i - 1) * _double_factorial(2 * j - 1),
                    2 ** (i + j) * math.factorial(i + j + 1))


def legendre_coefficients(n):
    """Exact monomial coefficients of P_n, lowest power first."""
    p0, p1 = [Fraction(1)], [Fraction(0), Fraction(1)]
    if n == 0:
        return p0
    for j in range(1, n):
        a = [Fraction(0)] + [c * (2 * j + 1) / (j + 1) for c in p1]
        b = [c * j / (j + 1) for c in p0] + [Fraction(0)] * 2
        p0, p1 = p1, [a[i] - b[i] for i in range(len(a))]
    return p1


def legendre_product_disk_integral(nx, ny):
    """Exact integral of P_nx(x) P_ny(y) over the unit disk, as Fraction * pi."""
    cx, cy = legendre_coefficients(nx), legendre_coefficients(ny)
    return sum((u * v * disk_monomial_integral(i, j)
                for i, u in enumerate(cx) if u for j, v in enumerate(cy) if v), Fraction(0))


def fraction_times_pi(q):
    """Round q * pi to double, using 40-digit decimal pi."""
    from decimal import Decimal, getcontext
    getcontext().prec = 50
    pi = Decimal("3.1415926535897932384626433832795028841971693993751")
    return float(Decimal(q.numerator) * pi / Decimal(q.denominator))
