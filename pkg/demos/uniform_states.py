"""The uniform measure on pure states and what preserves it.

Normalizing 2N independent Gaussians samples the rotation-invariant
measure on the unit sphere of the real state space.  Unitary and
antiunitary maps push it to itself; a nonlinear map does not.
"""

import numpy as np

from qig import sampling, transforms

n = 3
sampler = sampling.StateSampler(dim=n, seed=1)
states = sampling.sample_uniform(sampler, 100_000)
print(f"sampled {states.shape[0]} uniform states of dimension {n}")
print(f"mean |v_0|^2 = {np.mean(np.abs(states[:, 0]) ** 2):.4f} (exact: 1/{n})")

rng = np.random.default_rng(2)
g = transforms.GaugeMap(kind="unitary", v=sampling.haar_unitary(n, rng))

dev = sampling.metric_invariance_check(g, pairs=2000, seed=3)
print(f"\nmetric invariance under a random unitary: worst deviation {dev:.2e}")

report = sampling.measure_invariance_check(g, samples=100_000, bins=50, seed=4)
print(f"measure invariance chi-squared: passed = {report['passed']}, "
      f"min p-value {min(report['p_values'].values()):.3f}")

control = sampling.measure_invariance_check(
    n, samples=100_000, bins=50, seed=5,
    transform=lambda s: s ** 2)
print(f"negative control (componentwise squaring): passed = {control['passed']}, "
      f"min p-value {min(control['p_values'].values()):.2e}")
