import numpy as np
import pytest
from scipy import stats

from qig import sampling, transforms


def test_sampler_validation():
    with pytest.raises(ValueError):
        sampling.StateSampler(dim=0, seed=1)
    with pytest.raises(ValueError):
        sampling.sample_uniform(sampling.StateSampler(dim=2, seed=1), 0)


def test_samples_are_normalized_and_deterministic():
    sampler = sampling.StateSampler(dim=4, seed=99)
    a = sampling.sample_uniform(sampler, 100)
    b = sampling.sample_uniform(sampler, 100)
    assert np.array_equal(a, b)
    norms = np.linalg.norm(a, axis=1)
    assert np.max(np.abs(norms - 1.0)) < 1e-12


def test_haar_matrices_are_unitary():
    rng = np.random.default_rng(0)
    for n in (2, 3, 5):
        u = sampling.haar_unitary(n, rng)
        assert np.max(np.abs(u.conj().T @ u - np.eye(n))) < 1e-12
        o = sampling.haar_orthogonal(n, rng)
        assert np.max(np.abs(o.T @ o - np.eye(n))) < 1e-12
        assert np.isrealobj(o)


def test_haar_unitary_eigenangles_uniform():
    # eigenvalue arguments of a Haar unitary are uniform marginally
    rng = np.random.default_rng(1)
    angles = []
    for _ in range(2000):
        u = sampling.haar_unitary(3, rng)
        angles.extend(np.angle(np.linalg.eigvals(u)))
    u01 = (np.array(angles) % (2 * np.pi)) / (2 * np.pi)
    assert stats.kstest(u01, "uniform").pvalue > 1e-4


def test_component_probability_beta_law():
    # |v_0|^2 of a uniform state in dimension N is Beta(1, N-1)
    for n in (2, 3, 5):
        sampler = sampling.StateSampler(dim=n, seed=7)
        states = sampling.sample_uniform(sampler, 20000)
        probs = np.abs(states[:, 0]) ** 2
        assert stats.kstest(probs, stats.beta(1, n - 1).cdf).pvalue > 1e-4


def test_metric_invariance_of_gauge_maps():
    rng = np.random.default_rng(2)
    for kind in ("unitary", "antiunitary"):
        g = transforms.GaugeMap(kind=kind, v=sampling.haar_unitary(3, rng))
        worst = sampling.metric_invariance_check(g, pairs=200, seed=5)
        assert worst < 1e-10


def test_metric_invariance_rejects_invalid_map():
    bad = transforms.GaugeMap(kind="not_gauge_invariant", diagnostic="x")
    with pytest.raises(ValueError):
        sampling.metric_invariance_check(bad, 10, 0)


def test_measure_invariance_accepts_gauge_maps():
    rng = np.random.default_rng(3)
    for kind in ("unitary", "antiunitary"):
        g = transforms.GaugeMap(kind=kind, v=sampling.haar_unitary(3, rng))
        result = sampling.measure_invariance_check(g, samples=20000, bins=40,
                                                   seed=11)
        assert result["passed"]
        assert all(p >= result["threshold"] for p in result["p_values"].values())


def test_measure_invariance_negative_control():
    # componentwise squaring then renormalizing is not measure preserving
    def squarer(states):
        return states ** 2

    result = sampling.measure_invariance_check(3, samples=20000, bins=40,
                                               seed=13, transform=squarer)
    assert not result["passed"]


def test_measure_invariance_deterministic():
    rng = np.random.default_rng(4)
    g = transforms.GaugeMap(kind="unitary", v=sampling.haar_unitary(2, rng))
    r1 = sampling.measure_invariance_check(g, samples=5000, bins=25, seed=17)
    r2 = sampling.measure_invariance_check(g, samples=5000, bins=25, seed=17)
    assert r1 == r2
