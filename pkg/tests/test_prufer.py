import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from zernkit import oracles, reference
from zernkit.errors import DomainError
from zernkit.jacobi import JacobiSpec, eval_shifted_deriv
from zernkit.prufer import PhaseState, find_roots, initial_phase, march, phase_rhs, starting_point
from zernkit.zernike import radial_eval


def _rhs_from_ode(n, k, r, theta):
    # y'' + alpha y' + beta y = 0 after dividing by r - r^2
    s = r - r * r
    alpha = (k + 1 - (k + 2) * r) / s
    beta = n * (n + k + 1) / s
    dbeta = -n * (n + k + 1) * (1 - 2 * r) / s**2
    return -math.sqrt(beta) - (dbeta / (4 * beta) + alpha / 2) * math.sin(2 * theta)


def test_phase_rhs_examples():
    assert_allclose(phase_rhs(1, 1, 0.5, 0.0), -math.sqrt(12), rtol=1e-15)
    assert_allclose(phase_rhs(1, 1, 0.5, math.pi / 4), -math.sqrt(12) - 1, rtol=1e-15)


@pytest.mark.parametrize("r,theta", [(0.1, 0.3), (0.5, 2.0), (0.93, -1.1), (0.77, 5.0)])
def test_phase_rhs_two_codings(r, theta):
    for n, k in [(5, 1), (3, 2.5), (12, -0.4)]:
        assert_allclose(phase_rhs(n, k, r, theta), _rhs_from_ode(n, k, r, theta), rtol=1e-13)


def test_phase_rhs_domain():
    for r in (0.0, 1.0, -0.2, 1.5):
        with pytest.raises(DomainError):
            phase_rhs(3, 1, r, 0.0)


def test_single_root():
    assert_allclose(find_roots(1, 1).roots, [2 / 3], rtol=1e-15)


def test_twenty_nodes_match_table():
    rs = find_roots(20, 1)
    assert_allclose(rs.roots, reference.NODES_20, rtol=0, atol=1e-12)
    assert rs.roots[0] == pytest.approx(0.0083000442070672, abs=1e-15)
    assert rs.roots[-1] == pytest.approx(0.9967238933309499, abs=1e-15)


def test_matches_bisection_oracle():
    assert_allclose(find_roots(6, 2).roots, oracles.bisection_roots(6, 2), atol=1e-12)


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("n", [2, 9, 23, 50])
def test_oracle_equivalence(n, k):
    assert_allclose(find_roots(n, k).roots, oracles.bisection_roots(n, k), rtol=0, atol=1e-12)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_count_and_invariants(k):
    for n in (1, 2, 3, 10, 37, 64, 100):
        rs = find_roots(n, k)
        roots = np.array(rs.roots)
        assert len(rs) == n
        assert np.all(np.diff(roots) > 0)
        assert roots[0] > 0 and roots[-1] < 1
        deriv = np.abs(eval_shifted_deriv(JacobiSpec(n, k), roots))
        assert np.all(np.array(rs.residuals) <= 1e-12 * np.maximum(1.0, deriv))
        assert rs.max_slope < 0
        assert rs.fallback == []


@pytest.mark.parametrize("k", [-0.5, 0.0, 2.0])
def test_interlacing(k):
    for n in (2, 7, 30):
        big = np.array(find_roots(n, k).roots)
        small = np.array(find_roots(n - 1, k).roots)
        counts = [np.count_nonzero((small > a) & (small < b)) for a, b in zip(big[:-1], big[1:])]
        assert counts == [1] * (n - 1)


def test_fractional_k():
    for k in (-0.9, -0.5, 0.3):
        assert_allclose(find_roots(15, k).roots, oracles.bisection_roots(15, k), atol=1e-12)


def test_starting_point_right_of_roots():
    for n, k in [(5, 1), (500, 1), (40, -0.5)]:
        x0 = starting_point(n, k)
        assert max(find_roots(n, k).roots) < x0 < 1


def test_march_reaches_first_root():
    n, k = 8, 1.0
    x0 = starting_point(n, k)
    state, worst = march(n, k, PhaseState(x0, initial_phase(n, k, x0)), math.pi / 2)
    assert worst < 0
    assert abs(state.r - find_roots(n, k).roots[-1]) < 1e-3


def test_invalid_degree():
    with pytest.raises(DomainError):
        find_roots(0, 1)
    with pytest.raises(DomainError):
        find_roots(3, -1)


def test_zeros_limit():
    # 2n x_{N,1}^{(n)} -> j_{N,1} at p = 0; the radial zeros come from Pt_n^N via x = sqrt(1 - r)
    n = 200
    for N in (0, 1):
        # R_{N,n}(x) = (-1)^n x^N P_n^{(N,0)}(1 - 2x^2): zeros at x^2 = root of Pt_n^N
        r = find_roots(n, N).roots[0]
        x1 = math.sqrt(r)
        assert abs(radial_eval(N, n, 0, x1)) < 1e-8
        j = oracles.bessel_zero(N, 1)
        assert abs(2 * n * x1 - j) / j <= 1e-2
