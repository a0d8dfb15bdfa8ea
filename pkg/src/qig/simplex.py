"""Discrete probability distributions with the information metric.

A point on the M-outcome simplex is a 1-D float array with nonnegative
entries summing to 1; a tangent displacement sums to 0.  Distinguishing
two nearby distributions by repeated sampling yields an expected
log-Bayes-factor of 2n ds^2 where ds^2 = (1/4) sum dp_i^2 / p_i, which
is what singles this metric out.
"""

import numpy as np

NORM_TOL = 1e-12


class SupportMismatchError(ValueError):
    """Raised when a hypothesis assigns zero probability to an outcome
    the other hypothesis can produce (infinite evidence)."""


def as_prob_vec(p, tol=NORM_TOL):
    """Validate and return ``p`` as a probability vector.

    Entries must be nonnegative and sum to 1 within ``tol``.
    """
    p = np.asarray(p, dtype=float)
    if p.ndim != 1:
        raise ValueError("probability vector must be 1-D")
    if np.any(p < 0):
        raise ValueError("probability entries must be nonnegative")
    if abs(p.sum() - 1.0) > tol:
        raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
    return p


def renormalized(p):
    """Construct a probability vector from unnormalized nonnegative weights."""
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise ValueError("weights must be nonnegative")
    s = p.sum()
    if s <= 0:
        raise ValueError("weights must not all be zero")
    return p / s


def as_tangent_vec(dp, tol=NORM_TOL):
    """Validate a simplex displacement: entries must sum to 0 within ``tol``."""
    dp = np.asarray(dp, dtype=float)
    if dp.ndim != 1:
        raise ValueError("tangent vector must be 1-D")
    if abs(dp.sum()) > tol:
        raise ValueError(f"displacement entries sum to {dp.sum()!r}, not 0")
    return dp


def info_metric_ds2(p, dp):
    """Squared length (1/4) sum dp_i^2 / p_i of a displacement ``dp`` at ``p``.

    Entries where p_i = 0 and dp_i = 0 are skipped; a nonzero displacement
    at a zero-probability entry hits the metric singularity and raises.
    """
    p = as_prob_vec(p)
    dp = as_tangent_vec(dp)
    if p.shape != dp.shape:
        raise ValueError("p and dp must have the same dimension")
    zero = p == 0
    if np.any(zero & (dp != 0)):
        raise ValueError("nonzero displacement at a zero-probability entry")
    live = ~zero
    return 0.25 * np.sum(dp[live] ** 2 / p[live])


def sqrt_embedding(p):
    """Map a distribution to the unit vector (sqrt(p_1), ..., sqrt(p_M)).

    Under this change of variables the information metric becomes the
    Euclidean metric on the sphere octant.
    """
    return np.sqrt(as_prob_vec(p))


def geodesic_distance(p, p2):
    """Great-circle distance arccos(sum sqrt(p_i p2_i)) between distributions."""
    p = as_prob_vec(p)
    p2 = as_prob_vec(p2)
    if p.shape != p2.shape:
        raise ValueError("distributions must have the same dimension")
    dot = np.sum(np.sqrt(p * p2))
    return float(np.arccos(np.clip(dot, -1.0, 1.0)))


def log_bayes_factor(p, p2, n):
    """Expected log evidence ratio n * sum p_i ln(p_i / p2_i).

    This is the large-n expectation of ln(P_A / P_B) when n samples are
    drawn from ``p`` and the hypotheses ``p`` (A) and ``p2`` (B) are a
    priori equally likely.  Entries with p_i = 0 contribute nothing;
    p_i > 0 with p2_i = 0 means a single sample can rule out B outright.
    """
    p = as_prob_vec(p)
    p2 = as_prob_vec(p2)
    if p.shape != p2.shape:
        raise ValueError("distributions must have the same dimension")
    if n <= 0:
        raise ValueError("sample count must be positive")
    live = p > 0
    if np.any(live & (p2 == 0)):
        raise SupportMismatchError(
            "p assigns probability to an outcome p2 excludes: evidence is infinite"
        )
    return n * np.sum(p[live] * np.log(p[live] / p2[live]))


def simulate_log_evidence(p, p2, n, datasets, rng):
    """Monte-Carlo oracle for :func:`log_bayes_factor`.

    Draws ``datasets`` independent datasets of ``n`` samples from ``p``
    and returns the per-dataset values of ln(P_A / P_B), computed from
    the multinomial counts.  Their mean estimates the analytic value.
    """
    p = as_prob_vec(p)
    p2 = as_prob_vec(p2)
    live = p > 0
    if np.any(live & (p2 == 0)):
        raise SupportMismatchError("p2 excludes an outcome p can produce")
    counts = rng.multinomial(n, p, size=datasets)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_ratio = np.where(live, np.log(np.where(live, p, 1.0) / np.where(live, p2, 1.0)), 0.0)
    return counts @ log_ratio
