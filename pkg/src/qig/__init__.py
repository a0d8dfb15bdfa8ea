"""Numerical library for the information-geometric structure of
finite-dimensional quantum theory.

Submodules
----------
simplex      -- probability simplex, information metric, coin discrimination
qspace       -- 2N-real state vectors, phase representation, complex form
measure      -- determination of the embedding functions from measure invariance
transforms   -- gauge-invariant orthogonal maps and unitary/antiunitary factorization
measurement  -- Born rule, measurement simulation, observables
composite    -- composite-system (tensor product) rule
dynamics     -- stationary evolution and Hamilton-Jacobi correspondence
sampling     -- uniform state sampling and invariance tests
"""

from . import (
    composite,
    dynamics,
    measure,
    measurement,
    qspace,
    sampling,
    simplex,
    transforms,
)

__all__ = [
    "composite",
    "dynamics",
    "measure",
    "measurement",
    "qspace",
    "sampling",
    "simplex",
    "transforms",
]
