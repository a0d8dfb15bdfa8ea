"""Determination of the sphere-embedding functions from measure invariance.

Writing the per-result pair of state components as (sqrt(p) f(chi),
sqrt(p) ftilde(chi)) with f^2 + ftilde^2 = 1, the metric over states
induces a measure over chi proportional to F'(chi) / sqrt(F(1-F)) with
F = f^2.  Requiring that measure to be translation invariant in chi
forces F' / sqrt(F(1-F)) = 2a, whose solutions are F = cos^2(a chi + b).
This module evaluates the induced density, tests translation invariance
on a grid, and integrates the ODE numerically (with branch switching at
the F in {0,1} turning points) to compare against the closed form.
"""

from dataclasses import dataclass

import numpy as np


class SingularDensityError(ValueError):
    """Raised when the induced density is evaluated where F(1-F) = 0."""


@dataclass(frozen=True)
class EmbeddingFunction:
    """A candidate F = f^2 with its derivative on a closed domain."""

    F: callable
    dF: callable
    domain: tuple

    def __post_init__(self):
        lo, hi = self.domain
        if not lo < hi:
            raise ValueError("domain must be a nondegenerate interval")

    def check_consistency(self, n_points=101, tol=1e-6, h=1e-7):
        """Verify 0 <= F <= 1 and that dF matches F by central differences."""
        lo, hi = self.domain
        xs = np.linspace(lo + h, hi - h, n_points)
        Fv = np.array([self.F(x) for x in xs])
        if np.any(Fv < -1e-12) or np.any(Fv > 1 + 1e-12):
            raise ValueError("F leaves [0, 1] on its domain")
        num = np.array([(self.F(x + h) - self.F(x - h)) / (2 * h) for x in xs])
        dec = np.array([self.dF(x) for x in xs])
        if np.max(np.abs(num - dec)) > tol:
            raise ValueError("declared derivative inconsistent with F")
        return True


def cos_squared_family(a=1.0, b=0.0, domain=None):
    """The translation-invariant family F(chi) = cos^2(a chi + b)."""
    if a == 0:
        raise ValueError("a must be nonzero (f must not be constant)")
    if domain is None:
        domain = (0.0, 2.0 * np.pi / abs(a))
    return EmbeddingFunction(
        F=lambda x: np.cos(a * x + b) ** 2,
        dF=lambda x: -2.0 * a * np.cos(a * x + b) * np.sin(a * x + b),
        domain=domain,
    )


def induced_measure_density(ff, chi):
    """|F'(chi)| / sqrt(F(chi)(1 - F(chi))), the induced density up to a constant.

    The overall constant is arbitrary and dropped; the absolute value is
    reported since a measure density carries no sign.
    """
    F = ff.F(chi)
    if not 0.0 < F < 1.0:
        raise SingularDensityError(f"F({chi}) = {F} is at the boundary of [0, 1]")
    return abs(ff.dF(chi)) / np.sqrt(F * (1.0 - F))


def is_translation_invariant(ff, grid, tol):
    """True iff the induced density varies by less than ``tol`` (relative) on ``grid``.

    Comparison is by ratio: (max - min) / max < tol, so the arbitrary
    normalization constant drops out.  A grid point where the density is
    singular raises; an identically-zero derivative (constant F) is
    rejected outright since f must not be constant.
    """
    dens = np.array([induced_measure_density(ff, x) for x in grid])
    if np.max(dens) == 0.0:
        raise ValueError("F is constant on the grid; f must not be constant")
    return (np.max(dens) - np.min(dens)) / np.max(dens) < tol


def solve_F_ode(a, F0, chi0, grid, step=1e-4, boundary_tol=1e-10, rising=None):
    """Integrate dF/dchi = s * 2a sqrt(F(1-F)) along ``grid`` from (chi0, F0).

    ``grid`` must be ascending with grid[0] >= chi0.  The sign branch
    ``s`` starts at +1 (or as given by ``rising``) and is switched
    whenever F reaches 0 or 1 within ``boundary_tol``.  The square-root
    right-hand side is not Lipschitz at the turning points, so close to
    a boundary the integrator crosses analytically: with u the distance
    to the boundary, the ODE linearizes to d(sqrt u)/dchi = -/+ a, which
    places the turning point at chi* = chi + sqrt(u)/|a| and restarts
    the opposite branch with u = a^2 (chi - chi*)^2.

    Returns the array of F values on the grid points.
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("grid must be a nonempty 1-D array")
    if grid.size > 1 and np.all(np.diff(grid) < 0):
        # integrate backwards by reflecting: chi -> 2 chi0 - chi flips
        # the sign branch but leaves the trajectory otherwise unchanged
        flipped = None if rising is None else not rising
        return solve_F_ode(a, F0, chi0, 2.0 * chi0 - grid, step=step,
                           boundary_tol=boundary_tol, rising=flipped)
    if np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be strictly monotone")
    if grid[0] < chi0 - 1e-15:
        raise ValueError("grid must start at or after chi0")
    if not 0.0 <= F0 <= 1.0:
        raise ValueError("F0 must lie in [0, 1]")
    if step <= 0:
        raise ValueError("step must be positive")

    aa = abs(a)
    # analytic-crossing trigger; well above boundary_tol so RK4 never
    # operates where the sqrt derivative blows up
    switch = max(boundary_tol, (10.0 * aa * step) ** 2)

    def rhs(F, s):
        return s * 2.0 * aa * np.sqrt(max(F * (1.0 - F), 0.0))

    s = 1.0 if rising is None else (1.0 if rising else -1.0)
    if rising is None:
        # a state starting at a boundary must move into the interior
        if F0 >= 1.0 - switch:
            s = -1.0
        elif F0 <= switch:
            s = 1.0

    out = np.empty_like(grid)
    chi, F = float(chi0), float(F0)
    # turning-point bookkeeping: when set, F follows the local quadratic
    # u = a^2 (chi - chi_star)^2 off the boundary at ``level``
    chi_star, level = None, None
    if F0 >= 1.0 - boundary_tol:
        chi_star, level, s = chi, 1.0, -1.0
    elif F0 <= boundary_tol:
        chi_star, level, s = chi, 0.0, 1.0

    for k, target in enumerate(grid):
        while chi < target - 1e-15:
            h = min(step, target - chi)
            if chi_star is not None:
                # ride the local quadratic until safely interior
                u = (aa * (chi + h - chi_star)) ** 2
                F = (1.0 - u) if level == 1.0 else u
                chi += h
                if u > switch:
                    chi_star, level = None, None
                continue
            u = min(F, 1.0 - F)
            if u < switch:
                # locate the turning point analytically and hop over it
                boundary = 1.0 if F > 0.5 else 0.0
                approaching = (s > 0) == (boundary == 1.0)
                if approaching:
                    chi_star = chi + np.sqrt(max(u, 0.0)) / aa
                    level = boundary
                    s = -s
                    continue
                # receding from the boundary: same quadratic, no flip
                chi_star = chi - np.sqrt(max(u, 0.0)) / aa
                level = boundary
                continue
            k1 = rhs(F, s)
            k2 = rhs(F + 0.5 * h * k1, s)
            k3 = rhs(F + 0.5 * h * k2, s)
            k4 = rhs(F + h * k3, s)
            F += (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
            F = min(max(F, 0.0), 1.0)
            chi += h
        if chi_star is not None:
            u = (aa * (chi - chi_star)) ** 2
            out[k] = (1.0 - u) if level == 1.0 else u
        else:
            out[k] = F
    return out
