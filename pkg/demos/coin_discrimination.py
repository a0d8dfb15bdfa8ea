"""How far apart are two coins?

The information metric measures distinguishability: the expected log
Bayes factor after n tosses is roughly 2n ds^2 for nearby coins.  This
script compares the analytic factor against the metric expansion and
against brute-force simulated datasets.
"""

import numpy as np

from qig import simplex

fair = np.array([0.5, 0.5])
bent = np.array([0.55, 0.45])
n = 200

ds2 = simplex.info_metric_ds2(fair, bent - fair)
analytic = simplex.log_bayes_factor(fair, bent, n)
print(f"coins {fair} vs {bent}, {n} tosses")
print(f"  ds^2 = {ds2:.6f}, geodesic distance = {simplex.geodesic_distance(fair, bent):.6f}")
print(f"  analytic log Bayes factor : {analytic:.4f}")
print(f"  metric approximation 2n ds^2: {2 * n * ds2:.4f}")

rng = np.random.default_rng(0)
values = simplex.simulate_log_evidence(fair, bent, n, 100_000, rng)
se = values.std(ddof=1) / np.sqrt(values.size)
print(f"  simulated mean over 1e5 datasets: {values.mean():.4f} +- {se:.4f}")

print("\nconvergence of the expansion as the coins approach each other:")
for delta in (1e-1, 1e-2, 1e-3):
    dp = np.array([delta, -delta])
    lbf = simplex.log_bayes_factor(fair, fair + dp, n)
    ratio = lbf / (2 * n * simplex.info_metric_ds2(fair, dp))
    print(f"  |dp| = {delta:.0e}: log-BF / (2n ds^2) = {ratio:.6f}")
