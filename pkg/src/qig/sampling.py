"""Uniform measure over pure states, and invariance tests.

The Euclidean metric on the 2N-real state space induces the uniform
measure on the unit hypersphere.  In complex form the metric is
ds^2 = |dv|^2, invariant under unitary and antiunitary maps, and the
uniform measure inherits that invariance.  Sampling is by normalizing
2N independent standard normals.
"""

from dataclasses import dataclass

import numpy as np
from scipy import stats

from .transforms import GaugeMap, apply


@dataclass(frozen=True)
class StateSampler:
    """Seeded sampler of uniformly distributed pure states of dimension N."""

    dim: int
    seed: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")

    def rng(self):
        return np.random.default_rng(self.seed)


def sample_uniform(sampler, count, rng=None):
    """``count`` independent uniform pure states, rows of a (count, N) array."""
    if count < 1:
        raise ValueError("count must be positive")
    if rng is None:
        rng = sampler.rng()
    z = rng.normal(size=(count, sampler.dim)) + 1j * rng.normal(size=(count, sampler.dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def haar_unitary(n, rng):
    """Haar-distributed n x n unitary (QR of a complex Ginibre matrix)."""
    z = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def haar_orthogonal(n, rng):
    """Haar-distributed n x n real orthogonal matrix (QR of a Ginibre matrix)."""
    z = rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * np.sign(np.diagonal(r))


def metric_invariance_check(g, pairs, seed, displacement=1e-4):
    """Max relative change of |dv|^2 between nearby states under ``g``.

    Samples ``pairs`` pairs (v, v + dv renormalized) and compares the
    squared chord length before and after applying the map.  For an
    antiunitary map both endpoints are conjugated, so the displacement
    is the pushforward of the pair, not an independently conjugated
    tangent vector.
    """
    if not g.is_gauge_invariant:
        raise ValueError("map must be unitary or antiunitary")
    n = g.v.shape[0]
    rng = np.random.default_rng(seed)
    sampler = StateSampler(dim=n, seed=0)
    worst = 0.0
    vs = sample_uniform(sampler, pairs, rng=rng)
    for v in vs:
        dv = rng.normal(size=n) + 1j * rng.normal(size=n)
        w = v + displacement * dv / np.linalg.norm(dv)
        w = w / np.linalg.norm(w)
        before = np.sum(np.abs(w - v) ** 2)
        after = np.sum(np.abs(apply(g, w) - apply(g, v)) ** 2)
        worst = max(worst, abs(after - before) / before)
    return float(worst)


def _uniformity_pvalues(states, bins):
    """Chi-squared p-values of uniformity statistics of a state sample.

    For uniform states the per-component probability |v_i|^2 is
    Beta(1, N-1) distributed and pairwise relative phases are uniform
    on [0, 2pi); each statistic is transformed to [0, 1) by its CDF and
    binned against equal expected counts.
    """
    count, n = states.shape
    pvals = {}
    probs = np.abs(states) ** 2
    for i in range(n):
        if n == 1:
            u = probs[:, i]  # identically 1; skip
            continue
        u = 1.0 - (1.0 - probs[:, i]) ** (n - 1)
        pvals[f"|v_{i}|^2"] = _chi2_uniform(u, bins)
    for i in range(n):
        for j in range(i + 1, n):
            rel = np.angle(states[:, i] * states[:, j].conj()) % (2.0 * np.pi)
            pvals[f"arg(v_{i}/v_{j})"] = _chi2_uniform(rel / (2.0 * np.pi), bins)
    return pvals


def _chi2_uniform(u, bins):
    counts, _ = np.histogram(u, bins=bins, range=(0.0, 1.0))
    expected = u.size / bins
    stat = np.sum((counts - expected) ** 2 / expected)
    return float(stats.chi2.sf(stat, df=bins - 1))


def measure_invariance_check(g, samples, bins, seed, significance=0.001,
                             transform=None):
    """Test that the pushforward of the uniform measure stays uniform.

    Pushes ``samples`` uniform states through the gauge map ``g`` (or
    through an arbitrary ``transform`` callable, for negative controls)
    and chi-squared-tests the uniformity statistics.  Returns a dict
    with the per-statistic p-values and a Bonferroni verdict at the
    given significance.
    """
    if transform is None:
        if not g.is_gauge_invariant:
            raise ValueError("map must be unitary or antiunitary")
        n = g.v.shape[0]
        if g.kind == "unitary":
            transform = lambda states: states @ g.v.T
        else:
            transform = lambda states: states.conj() @ g.v.T
    else:
        # negative-control mode: ``g`` is the dimension, ``transform``
        # maps an array of row states to row states
        n = int(g)
    sampler = StateSampler(dim=n, seed=seed)
    states = sample_uniform(sampler, samples)
    pushed = transform(states)
    pushed = pushed / np.linalg.norm(pushed, axis=1, keepdims=True)
    pvals = _uniformity_pvalues(pushed, bins)
    threshold = significance / max(len(pvals), 1)
    verdict = all(p >= threshold for p in pvals.values())
    return {"p_values": pvals, "passed": verdict,
            "significance": significance, "threshold": threshold}
