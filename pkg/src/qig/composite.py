"""Composite systems: probabilities multiply, phases add.

Two subsystems with states (p_i; phi_i) and (p'_j; phi'_j) compose to
(p_i p'_j; phi_i + phi'_j) at the flattened index l = N'(i-1) + j.  In
complex form this is exactly the Kronecker product of the state
vectors.
"""

import numpy as np

from .measurement import MeasurementBasis, Observable
from .qspace import TWO_PI, PhaseRep, as_pure_state


def composite_index(n1, n2, i, j):
    """Flattened 0-based index of subsystem results (i, j)."""
    if not (0 <= i < n1 and 0 <= j < n2):
        raise IndexError("subsystem index out of range")
    return n2 * i + j


def split_index(n1, n2, l):
    """Inverse of :func:`composite_index`."""
    if not 0 <= l < n1 * n2:
        raise IndexError("composite index out of range")
    return divmod(l, n2)


def compose_phase_reps(s1, s2):
    """Composite phase representation: p''_l = p_i p'_j, phi''_l = phi_i + phi'_j.

    Entries with zero probability get an absent phase.  Both factors
    must share the a, b convention.
    """
    if (s1.a, s1.b) != (s2.a, s2.b):
        raise ValueError("factors use different phase conventions")
    p = np.outer(s1.p, s2.p).ravel()
    phi = []
    for f1 in s1.phi:
        for f2 in s2.phi:
            if f1 is None or f2 is None:
                phi.append(None)
            else:
                phi.append((f1 + f2) % TWO_PI)
    return PhaseRep(p=p / p.sum(), phi=tuple(phi), a=s1.a, b=s1.b)


def tensor(v1, v2):
    """Kronecker product of two complex states, ordered per composite_index."""
    v1 = as_pure_state(v1)
    v2 = as_pure_state(v2)
    return np.kron(v1, v2)


def fold(states):
    """Left-associated iterated tensor product of one or more states."""
    states = list(states)
    if not states:
        raise ValueError("need at least one state")
    out = as_pure_state(states[0])
    for v in states[1:]:
        out = tensor(out, v)
    return out


def subsystem_observable(obs, n_other, position="first"):
    """Lift an observable to the composite: A (x) I or I (x) A.

    The lifted observable keeps the original values, each with
    multiplicity ``n_other`` -- a degenerate measurement on the
    composite whose expectation on product states ignores the other
    factor.
    """
    eye = np.eye(n_other, dtype=complex)
    rows = []
    values = []
    if position == "first":
        for vi, ai in zip(obs.basis.vectors, obs.values):
            for ej in eye:
                rows.append(np.kron(vi, ej))
                values.append(ai)
    elif position == "second":
        for ej in eye:
            for vi, ai in zip(obs.basis.vectors, obs.values):
                rows.append(np.kron(ej, vi))
                values.append(ai)
    else:
        raise ValueError("position must be 'first' or 'second'")
    return Observable(basis=MeasurementBasis(np.array(rows)), values=np.array(values))


def energy_additivity_check(s1, s2, e1, e2, dt, alpha):
    """Max phase discrepancy between evolve-then-compose and compose-then-evolve.

    Each subsystem of definite energy evolves by phi_i -> phi_i -
    a E dt / alpha; the composite must evolve identically with energy
    e1 + e2.  Returns the maximum discrepancy mod 2pi over composite
    entries (0 for full-support states, by additivity of phase shifts).
    """
    from .dynamics import evolve_stationary

    first = compose_phase_reps(
        evolve_stationary(s1, e1, dt, alpha),
        evolve_stationary(s2, e2, dt, alpha),
    )
    second = evolve_stationary(compose_phase_reps(s1, s2), e1 + e2, dt, alpha)
    worst = 0.0
    for f1, f2 in zip(first.phi, second.phi):
        if (f1 is None) != (f2 is None):
            return np.pi  # support mismatch: maximal discrepancy
        if f1 is None:
            continue
        d = abs(f1 - f2) % TWO_PI
        worst = max(worst, min(d, TWO_PI - d))
    return worst
