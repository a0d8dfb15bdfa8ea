"""States as unit vectors in 2N-dimensional real Euclidean space.

A system whose measurements have N results realizes 2N underlying
outcomes; result i coarse-grains outcomes 2i-1 and 2i.  The state is a
unit vector Q with outcome probabilities P_q = Q_q^2, and carries a
binary polarity sign(Q_q) per outcome with nonzero probability.  In the
phase representation Q = (sqrt(p_1) cos(phi_1), sqrt(p_1) sin(phi_1),
..., sqrt(p_N) sin(phi_N)), and the complex form v_i = sqrt(p_i)
e^{i phi_i} packs each outcome pair into one complex amplitude.
"""

from dataclasses import dataclass

import numpy as np

from .simplex import as_prob_vec

NORM_TOL = 1e-12
POLARITY_TOL = 1e-12

TWO_PI = 2.0 * np.pi


def as_qvector(q, tol=NORM_TOL):
    """Validate a 2N-real state vector: even length, unit norm, entries in [-1, 1]."""
    q = np.asarray(q, dtype=float)
    if q.ndim != 1 or q.size % 2 != 0 or q.size == 0:
        raise ValueError("state vector must be 1-D with even, positive length")
    if abs(np.sum(q * q) - 1.0) > tol:
        raise ValueError(f"state vector has squared norm {np.sum(q * q)!r}, not 1")
    return q


def as_pure_state(v, tol=NORM_TOL):
    """Validate an N-complex unit vector."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("state must be a nonempty 1-D complex vector")
    if abs(np.sum(np.abs(v) ** 2) - 1.0) > tol:
        raise ValueError(f"state has squared norm {np.sum(np.abs(v) ** 2)!r}, not 1")
    return v


@dataclass(frozen=True)
class PhaseRep:
    """State as result probabilities plus one phase per nonzero result.

    ``phi`` holds ``None`` wherever ``p`` is zero -- the phase is
    undefined there, not merely unknown.  Present phases are stored
    reduced to [0, 2pi).  ``a`` and ``b`` record the affine map
    phi = a*chi + b to the underlying dimensionless degree of freedom;
    their values are conventional here (a=1, b=0 by default).
    """

    p: np.ndarray
    phi: tuple
    a: float = 1.0
    b: float = 0.0

    def __post_init__(self):
        p = as_prob_vec(np.asarray(self.p, dtype=float))
        object.__setattr__(self, "p", p)
        if len(self.phi) != p.size:
            raise ValueError("p and phi must have the same length")
        if self.a == 0:
            raise ValueError("a must be nonzero")
        phi = []
        for pi, f in zip(p, self.phi):
            if pi > 0:
                if f is None:
                    raise ValueError("phase missing at a nonzero-probability result")
                phi.append(float(f) % TWO_PI)
            else:
                if f is not None:
                    raise ValueError("phase present at a zero-probability result")
                phi.append(None)
        object.__setattr__(self, "phi", tuple(phi))

    @property
    def dim(self):
        return self.p.size

    def chi(self):
        """Recover the underlying chi_i = (phi_i - b) / a (None where absent)."""
        return tuple(None if f is None else (f - self.b) / self.a for f in self.phi)


def from_phase_rep(rep):
    """Build the 2N-real state vector from a phase representation."""
    q = np.zeros(2 * rep.dim)
    for i, (pi, f) in enumerate(zip(rep.p, rep.phi)):
        if pi > 0:
            r = np.sqrt(pi)
            q[2 * i] = r * np.cos(f)
            q[2 * i + 1] = r * np.sin(f)
    return q


def to_phase_rep(q, a=1.0, b=0.0):
    """Read off result probabilities and phases from a 2N-real state vector.

    Inverse of :func:`from_phase_rep` up to reduction of phases mod 2pi.
    """
    q = as_qvector(q)
    pairs = q.reshape(-1, 2)
    p = pairs[:, 0] ** 2 + pairs[:, 1] ** 2
    phi = tuple(
        float(np.arctan2(y, x)) % TWO_PI if pi > 0 else None
        for (x, y), pi in zip(pairs, p)
    )
    # guard against rounding pushing the sum off 1
    p = p / p.sum()
    return PhaseRep(p=p, phi=phi, a=a, b=b)


def outcome_probs(q):
    """The 2N outcome probabilities P_q = Q_q^2."""
    q = as_qvector(q)
    P = q * q
    return P / P.sum()


def result_probs(q):
    """Coarse-grained result probabilities p_i = P_{2i-1} + P_{2i}."""
    P = outcome_probs(q)
    return P.reshape(-1, 2).sum(axis=1)


def polarities(q, tol=POLARITY_TOL):
    """Signs of the Q_q, as a tuple of +1/-1 with None where |Q_q| <= tol."""
    q = as_qvector(q)
    return tuple(None if abs(x) <= tol else int(np.sign(x)) for x in q)


def gauge_shift(v, phi0):
    """Multiply a complex state by the global phase e^{i phi0}.

    Adds phi0 to every phase; no outcome probability changes, so no
    prediction changes -- this is the global gauge freedom.
    """
    v = as_pure_state(v)
    return np.exp(1j * phi0) * v


def to_complex(q):
    """Complex form v_i = Q_{2i-1} + i Q_{2i}."""
    q = as_qvector(q)
    pairs = q.reshape(-1, 2)
    return pairs[:, 0] + 1j * pairs[:, 1]


def from_complex(v):
    """Real form (Re v_1, Im v_1, ..., Re v_N, Im v_N); exact inverse of to_complex."""
    v = as_pure_state(v)
    q = np.empty(2 * v.size)
    q[0::2] = v.real
    q[1::2] = v.imag
    return q
