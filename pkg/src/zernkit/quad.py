"""Gaussian radial rules for the weight x^k on [0, 1] and the disk rule.

The disk rule tensors the m-point radial rule for weight r with 2m equispaced
angles; it integrates every Zernike polynomial of degree <= 2m - 1 exactly.
"""

from dataclasses import dataclass
import math
from typing import Optional, Sequence

import numpy as np

from .errors import ComputationError, DomainError, ValidationError
from .jacobi import shifted_batch
from .prufer import find_roots

# weights whose moments miss by more than this are rejected
_MOMENT_TOL = 1e-10
# optional angular thinning: drop frequencies with r^N below this
REDUCTION_THRESHOLD = 1e-17


@dataclass(frozen=True)
class RadialRule:
    k: float
    m: int
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, q):
        """Approximate int_0^1 q(x) x^k dx."""
        return math.fsum(np.asarray(q(self.nodes)) * self.weights)


@dataclass(frozen=True)
class DiskRule:
    """Radial rule (k = 1) tensored with ``angular_count`` equispaced angles.

    ``ring_counts`` is only set for the reduced variant, where ring i uses
    ring_counts[i] angles instead of angular_count.
    """

    radial: RadialRule
    angular_count: int
    ring_counts: Optional[Sequence[int]] = None

    @property
    def m(self):
        return self.radial.m

    @property
    def angular_nodes(self):
        return angular_nodes(self.angular_count)

    @property
    def node_count(self):
        if self.ring_counts is None:
            return self.radial.m * self.angular_count
        return int(sum(self.ring_counts))


def angular_nodes(count):
    """theta_j = j 2 pi / count for j = 0..count-1."""
    return np.arange(count) * (2 * math.pi) / count


def gauss_weights(nodes, m, k):
    """Christoffel weights w_i = 1 / sum_{j<m} Pt_j^k(x_i)^2.

    The nodes must be the m roots of Pt_m^k; this is checked through the
    moments of Pt_0..Pt_{2m-1}, which a Gaussian rule reproduces exactly.
    """
    nodes = np.asarray(nodes, dtype=float)
    if nodes.shape != (m,):
        raise ValidationError(f"expected {m} nodes, got shape {nodes.shape}")
    table = shifted_batch(2 * m - 1, k, nodes)
    weights = 1.0 / np.sum(table[:m] ** 2, axis=0)
    moments = table @ weights
    target = np.zeros(2 * m)
    target[0] = 1.0 / math.sqrt(k + 1)
    err = np.max(np.abs(moments - target))
    if not err <= _MOMENT_TOL * max(1.0, np.max(np.abs(table)) * np.sum(weights)):
        raise ValidationError(
            f"nodes do not form a Gaussian rule for weight x^{k:g} (moment error {err:.3g})")
    return weights


def radial_rule(m, k=1.0):
    """m-point Gaussian rule for int_0^1 q(x) x^k dx, exact for deg q <= 2m - 1."""
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise DomainError(f"rule size must be a positive integer, got {m!r}")
    m = int(m)
    roots = np.array(find_roots(m, k).roots)
    return RadialRule(k=float(k), m=m, nodes=roots, weights=gauss_weights(roots, m, k))


def disk_rule(m, reduced=False):
    """Tensor rule with m radial and 2m angular nodes on the unit disk.

    With ``reduced=True`` each ring keeps only enough equispaced angles to
    integrate the frequencies N whose factor r_i^N stays above
    REDUCTION_THRESHOLD; the remaining terms are below rounding level.
    """
    radial = radial_rule(m, 1.0)
    counts = None
    if reduced:
        counts = []
        for r in radial.nodes:
            n_keep = math.floor(math.log(REDUCTION_THRESHOLD) / math.log(r))
            counts.append(int(min(2 * m, n_keep + 1)))
    return DiskRule(radial=radial, angular_count=2 * m, ring_counts=counts)


def _ring_values(f, r, thetas, vectorized):
    if vectorized:
        vals = np.asarray(f(np.full_like(thetas, r), thetas), dtype=float)
        return np.broadcast_to(vals, thetas.shape)
    return np.array([f(r, t) for t in thetas], dtype=float)


def integrate_disk(f, rule, vectorized=True):
    """Approximate the integral of f(r, theta) over the unit disk.

    ``f`` is called with numpy arrays (one ring at a time) unless
    ``vectorized`` is False, in which case it is called point by point.
    """
    total = []
    for i, (r, w) in enumerate(zip(rule.radial.nodes, rule.radial.weights)):
        count = rule.angular_count if rule.ring_counts is None else rule.ring_counts[i]
        thetas = angular_nodes(count)
        vals = _ring_values(f, r, thetas, vectorized)
        bad = ~np.isfinite(vals)
        if np.any(bad):
            j = int(np.argmax(bad))
            raise ComputationError(
                f"non-finite integrand at radial node {i + 1} (r={r!r}), "
                f"angular node {j + 1} (theta={thetas[j]!r})")
        total.append(w * (2 * math.pi / count) * math.fsum(vals))
    return math.fsum(total)
