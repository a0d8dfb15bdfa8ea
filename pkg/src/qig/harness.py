"""Deterministic verification checks behind the ``verify`` command.

Each check function takes a :class:`Settings` and returns a report
dict; seeds for individual checks are derived from the master seed and
the check name, so checks can run in any order (or concurrently)
without changing results.
"""

import time
import zlib
from dataclasses import dataclass, field, replace

import numpy as np

from . import composite, dynamics, measure, measurement, qspace, sampling, simplex, transforms

DEFAULT_DIMENSIONS = (2, 3, 4, 5)


@dataclass(frozen=True)
class Settings:
    seed: int = 12345
    dimensions: tuple = DEFAULT_DIMENSIONS
    trials: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)

    def trial(self, name, default):
        return int(self.trials.get(name, default))

    def tol(self, name, default):
        return float(self.tolerances.get(name, default))

    def rng(self, check_name):
        return np.random.default_rng(check_seed(self.seed, check_name))


def check_seed(master_seed, check_name):
    """Per-check seed: master seed combined with a CRC of the check name."""
    ss = np.random.SeedSequence([int(master_seed), zlib.crc32(check_name.encode())])
    return ss


def run_check(name, fn, settings):
    """Execute one check and wrap the outcome in a report dict."""
    start = time.perf_counter()
    try:
        passed, max_residual, trials, details = fn(settings)
        status = "pass" if passed else "fail"
    except Exception as exc:  # noqa: BLE001 - harness must report, not crash
        status, max_residual, trials = "error", None, 0
        details = {"exception": f"{type(exc).__name__}: {exc}"}
    elapsed = time.perf_counter() - start
    return {
        "check": name,
        "status": status,
        "max_residual": max_residual,
        "trials": trials,
        "seed": int(settings.seed),
        "elapsed": round(elapsed, 6),
        "details": details,
    }


# ---------------------------------------------------------------- metric


def check_metric_pullback(settings):
    """Information metric equals the Euclidean metric of the sqrt embedding."""
    rng = settings.rng("metric.pullback")
    trials = settings.trial("metric", 500)
    tol = settings.tol("metric_pullback", 1e-12)
    worst = 0.0
    for _ in range(trials):
        m = int(rng.integers(2, 7))
        p = simplex.renormalized(rng.random(m) + 0.05)
        dp = rng.normal(size=m)
        dp = (dp - dp.mean()) * 1e-3
        ds2 = simplex.info_metric_ds2(p, dp)
        dq2 = np.sum((dp / (2.0 * np.sqrt(p))) ** 2)
        worst = max(worst, abs(ds2 - dq2))
    return worst < tol, worst, trials, {"tolerance": tol}


def check_metric_qspace(settings):
    """sum dQ^2 matches (1/4) sum dP^2/P on outcome probabilities."""
    rng = settings.rng("metric.qspace")
    trials = settings.trial("metric", 500)
    tol = settings.tol("metric_qspace", 1e-8)
    h = 1e-5
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 6))
        # keep all outcome probabilities bounded away from zero
        q = rng.uniform(0.2, 1.0, size=2 * n) * rng.choice([-1.0, 1.0], size=2 * n)
        q /= np.linalg.norm(q)
        d = rng.normal(size=2 * n)
        d -= (d @ q) * q
        d *= h / np.linalg.norm(d)
        q_plus = (q + d) / np.linalg.norm(q + d)
        q_minus = (q - d) / np.linalg.norm(q - d)
        dq2 = np.sum((q_plus - q_minus) ** 2)
        P = q * q
        dP = q_plus**2 - q_minus**2
        ds2 = 0.25 * np.sum(dP**2 / P)
        worst = max(worst, abs(ds2 - dq2) / dq2)
    return worst < tol, worst, trials, {"tolerance": tol, "displacement": h}


def check_metric_geodesic(settings):
    """Geodesic distance and metric agree to second order; triangle inequality."""
    rng = settings.rng("metric.geodesic")
    trials = settings.trial("metric", 200)
    worst_ratio = 0.0
    for _ in range(trials):
        m = int(rng.integers(2, 6))
        p = simplex.renormalized(rng.random(m) + 0.1)
        dp = rng.normal(size=m)
        dp = (dp - dp.mean()) / np.linalg.norm(dp)
        # deviation of distance^2 / ds^2 from 1 must shrink with scale
        devs = []
        for scale in (1e-2, 1e-3):
            d = simplex.geodesic_distance(p, simplex.renormalized(p + scale * dp))
            ds2 = simplex.info_metric_ds2(p, scale * dp)
            devs.append(abs(d**2 / ds2 - 1.0))
        # deviation must shrink clearly with scale (mixed first/second
        # order terms make the exact decade factor vary per sample)
        if devs[1] > devs[0] / 3.0:
            return False, devs[1], trials, {"diverging_ratio": devs}
        worst_ratio = max(worst_ratio, devs[1])
    tri_ok = True
    for _ in range(trials):
        m = int(rng.integers(2, 6))
        a, b, c = (simplex.renormalized(rng.random(m) + 1e-3) for _ in range(3))
        if simplex.geodesic_distance(a, c) > simplex.geodesic_distance(a, b) + simplex.geodesic_distance(b, c) + 1e-12:
            tri_ok = False
    passed = worst_ratio < 0.05 and tri_ok
    return passed, worst_ratio, trials, {"triangle_inequality": tri_ok}


# ------------------------------------------------------------------ coin


def check_coin_expansion(settings):
    """log Bayes factor ~ 2n ds^2 for nearby coins, converging with |dp|."""
    n = settings.trial("coin_n", 100)
    p = np.array([0.5, 0.5])
    deviations = []
    for delta in (1e-2, 1e-3, 1e-4):
        dp = np.array([delta, -delta])
        lbf = simplex.log_bayes_factor(p, p + dp, n)
        ds2 = simplex.info_metric_ds2(p, dp)
        deviations.append(abs(lbf / (2.0 * n * ds2) - 1.0))
    # at least first-order convergence per decade of |dp|
    converging = all(deviations[k + 1] < deviations[k] / 5.0 for k in range(2))
    small_enough = deviations[1] < 0.02
    details = {"deviations": deviations, "dp": [1e-2, 1e-3, 1e-4]}
    return converging and small_enough, deviations[0], 3, details


def check_coin_monte_carlo(settings):
    """Monte-Carlo mean of ln(P_A/P_B) matches the analytic value within 3 SE."""
    rng = settings.rng("coin.monte_carlo")
    datasets = settings.trial("coin_datasets", 100_000)
    n = settings.trial("coin_tosses", 200)
    p = np.array([0.5, 0.5])
    p2 = np.array([0.55, 0.45])
    analytic = simplex.log_bayes_factor(p, p2, n)
    values = simplex.simulate_log_evidence(p, p2, n, datasets, rng)
    se = values.std(ddof=1) / np.sqrt(datasets)
    z = abs(values.mean() - analytic) / se
    details = {"analytic": analytic, "empirical_mean": float(values.mean()),
               "standard_error": float(se), "z": float(z)}
    return z < 3.0, float(z), datasets, details


# --------------------------------------------------------- measure-solver


def check_measure_ode(settings):
    """RK4 solution of F' = +/- 2a sqrt(F(1-F)) matches cos^2(a chi + b)."""
    step = settings.tol("ode_step", 1e-4)
    tol = settings.tol("ode_error", 1e-6)
    a, b = 1.0, 0.0
    grid = np.linspace(0.0, 2.0 * np.pi, 629)
    sol = measure.solve_F_ode(a, 1.0, 0.0, grid, step=step)
    exact = np.cos(a * grid + b) ** 2
    worst = float(np.max(np.abs(sol - exact)))
    return worst < tol, worst, grid.size, {"tolerance": tol, "step": step}


def check_measure_invariant_density(settings):
    """Induced density of the cos^2 family is constant (= 2|a|)."""
    tol = settings.tol("density_flatness", 1e-9)
    points = settings.trial("density_grid", 1000)
    worst = 0.0
    for a, b in ((1.0, 0.3), (3.0, 0.0), (0.5, 1.1)):
        ff = measure.cos_squared_family(a, b)
        period = np.pi / abs(a)
        eps = 0.02 * period
        # avoid the zeros of sin*cos where the density is singular
        half = np.linspace(eps, period / 2 - eps, points // 2)
        grid = np.concatenate([half, half + period / 2]) - b / a + period
        dens = np.array([measure.induced_measure_density(ff, x) for x in grid])
        worst = max(worst, float(np.max(np.abs(dens - 2.0 * abs(a)))))
        if not measure.is_translation_invariant(ff, grid, tol):
            return False, worst, points, {"family": f"cos^2({a} chi + {b})"}
    return worst < tol, worst, points, {"tolerance": tol}


def check_measure_counterexamples(settings):
    """Non-sinusoidal embeddings are rejected: density varies by > 10%."""
    points = settings.trial("density_grid", 1000)
    quad = measure.EmbeddingFunction(
        F=lambda x: x**2, dF=lambda x: 2.0 * x, domain=(0.1, 0.9))
    logi = measure.EmbeddingFunction(
        F=lambda x: 0.05 + 0.9 * (1.0 + np.tanh(x)) / 2.0,
        dF=lambda x: 0.45 / np.cosh(x) ** 2,
        domain=(-2.0, 2.0))
    variations = {}
    ok = True
    for name, ff in (("quadratic", quad), ("logistic", logi)):
        lo, hi = ff.domain
        grid = np.linspace(lo + 1e-3, hi - 1e-3, points)
        dens = np.array([measure.induced_measure_density(ff, x) for x in grid])
        variation = float((dens.max() - dens.min()) / dens.max())
        variations[name] = variation
        if variation <= 0.10 or measure.is_translation_invariant(ff, grid, 0.10):
            ok = False
    return ok, min(variations.values()), points, {"density_variation": variations}


def check_measure_convergence(settings):
    """Halving the RK4 step reduces the error at least 8x away from turning points."""
    a = 1.0
    grid = np.linspace(0.3, np.pi / 2 - 0.3, 50)
    exact = np.cos(a * grid) ** 2
    errors = []
    for step in (2e-2, 1e-2):
        sol = measure.solve_F_ode(a, float(np.cos(0.3) ** 2), 0.3, grid,
                                  step=step, rising=False)
        errors.append(float(np.max(np.abs(sol - exact))))
    ratio = errors[0] / errors[1]
    return ratio >= 8.0, errors[1], grid.size, {"errors": errors, "ratio": ratio}


# -------------------------------------------------------------- classify


def check_classify_roundtrip(settings):
    """Haar unitaries and antiunitaries survive realify -> classify."""
    rng = settings.rng("classify.roundtrip")
    per_dim = settings.trial("classify", 1000)
    tol = settings.tol("roundtrip", 1e-9)
    worst = 0.0
    total = 0
    for n in settings.dimensions:
        for _ in range(per_dim):
            v = sampling.haar_unitary(n, rng)
            for maker, kind in ((transforms.realify_unitary, "unitary"),
                                (transforms.realify_antiunitary, "antiunitary")):
                g = transforms.classify(maker(v))
                total += 1
                if g.kind != kind:
                    return False, 1.0, total, {"failed_kind": kind, "n": n}
                worst = max(worst, float(np.max(np.abs(g.v - v))))
    return worst < tol, worst, total, {"tolerance": tol, "dimensions": list(settings.dimensions)}


def check_classify_rejects_generic(settings):
    """Generic orthogonal matrices are rejected and fail the witness."""
    rng = settings.rng("classify.generic")
    per_dim = settings.trial("classify", 1000)
    total = 0
    min_dev = np.inf
    for n in settings.dimensions:
        for _ in range(per_dim):
            m = sampling.haar_orthogonal(2 * n, rng)
            g = transforms.classify(m)
            passed, dev = transforms.gauge_invariance_witness(m, trials=8, rng=rng)
            total += 1
            min_dev = min(min_dev, dev)
            if g.is_gauge_invariant or passed or dev <= 1e-2:
                return False, float(dev), total, {"n": n, "verdict": g.kind}
    return True, float(min_dev), total, {"min_witness_deviation": float(min_dev)}


def check_classify_witness_agreement(settings):
    """classify and the gauge-invariance witness agree on the whole corpus."""
    rng = settings.rng("classify.agreement")
    per_dim = settings.trial("classify_agreement", 250)
    tol = settings.tol("witness", 1e-9)
    total, disagreements = 0, 0
    for n in settings.dimensions:
        for _ in range(per_dim):
            v = sampling.haar_unitary(n, rng)
            candidates = [transforms.realify_unitary(v),
                          transforms.realify_antiunitary(v),
                          sampling.haar_orthogonal(2 * n, rng)]
            for m in candidates:
                g = transforms.classify(m)
                passed, _ = transforms.gauge_invariance_witness(m, trials=8, tol=tol, rng=rng)
                total += 1
                if g.is_gauge_invariant != passed:
                    disagreements += 1
    return disagreements == 0, float(disagreements), total, {"disagreements": disagreements}


def check_classify_composition(settings):
    """classify respects the unitary/antiunitary composition table."""
    rng = settings.rng("classify.composition")
    trials = settings.trial("composition", 200)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 6))
        makers = (transforms.realify_unitary, transforms.realify_antiunitary)
        k1, k2 = rng.integers(0, 2), rng.integers(0, 2)
        v1, v2 = sampling.haar_unitary(n, rng), sampling.haar_unitary(n, rng)
        m = makers[k1](v1) @ makers[k2](v2)
        g = transforms.classify(m)
        expect_kind = "antiunitary" if k1 != k2 else "unitary"
        if g.kind != expect_kind:
            return False, 1.0, trials, {"expected": expect_kind, "got": g.kind}
        expect_v = v1 @ (v2.conj() if k1 == 1 else v2)
        worst = max(worst, float(np.max(np.abs(g.v - expect_v))))
    return worst < 1e-9, worst, trials, {}


# ------------------------------------------------------------------ born


def check_born_exact(settings):
    """Arrangement distribution equals Born probabilities, phases irrelevant."""
    rng = settings.rng("born.exact")
    pairs = settings.trial("born_pairs", 1000)
    tol = settings.tol("born", 1e-12)
    worst = 0.0
    total = 0
    for n in (2, 3, 5):
        for _ in range(pairs):
            basis = measurement.MeasurementBasis(sampling.haar_unitary(n, rng))
            v = sampling.sample_uniform(sampling.StateSampler(n, 0), 1, rng=rng)[0]
            arr = measurement.build_simulation(
                basis, theta=rng.uniform(0, 2 * np.pi, n),
                theta_out=rng.uniform(0, 2 * np.pi, n))
            exact = measurement.arrangement_probs(arr, v)
            born = measurement.born_probs(v, basis)
            worst = max(worst, float(np.max(np.abs(exact - born))))
            total += 1
    return worst < tol, worst, total, {"tolerance": tol, "dimensions": [2, 3, 5]}


def check_born_sampled(settings):
    """Sampled result frequencies match Born probabilities within 3 sigma."""
    rng = settings.rng("born.sampled")
    trials = settings.trial("simulate_trials", 100_000)
    n = 3
    basis = measurement.MeasurementBasis(sampling.haar_unitary(n, rng))
    v = sampling.sample_uniform(sampling.StateSampler(n, 0), 1, rng=rng)[0]
    arr = measurement.build_simulation(basis)
    p = measurement.born_probs(v, basis)
    counts = np.zeros(n, dtype=int)
    for _ in range(trials):
        i, _ = measurement.simulate_measurement(arr, v, rng)
        counts[i] += 1
    sigma = np.sqrt(trials * p * (1.0 - p))
    z = np.abs(counts - trials * p) / sigma
    worst = float(np.max(z))
    return worst < 3.0, worst, trials, {"born": p.tolist(), "counts": counts.tolist()}


def check_born_reproducible(settings):
    """Immediately repeating a measurement reproduces its result, always."""
    rng = settings.rng("born.reproducible")
    trials = settings.trial("repeat_trials", 100_000)
    n = 3
    basis = measurement.MeasurementBasis(sampling.haar_unitary(n, rng))
    arr = measurement.build_simulation(
        basis, theta=rng.uniform(0, 2 * np.pi, n), theta_out=rng.uniform(0, 2 * np.pi, n))
    v = sampling.sample_uniform(sampling.StateSampler(n, 0), 1, rng=rng)[0]
    mismatches = 0
    for _ in range(trials):
        i, out = measurement.simulate_measurement(arr, v, rng)
        j, _ = measurement.simulate_measurement(arr, out, rng)
        if i != j:
            mismatches += 1
    return mismatches == 0, float(mismatches), trials, {"mismatches": mismatches}


# --------------------------------------------------------------- compose


def check_compose_dual_route(settings):
    """Kronecker product agrees with the probabilities-multiply/phases-add rule."""
    rng = settings.rng("compose.dual")
    pairs = settings.trial("compose_pairs", 1000)
    tol = settings.tol("compose", 1e-12)
    worst = 0.0
    total = 0
    for n1 in (2, 3):
        for n2 in (2, 3):
            for _ in range(pairs // 2):
                s1 = _random_full_support_rep(n1, rng)
                s2 = _random_full_support_rep(n2, rng)
                via_reps = qspace.to_complex(qspace.from_phase_rep(
                    composite.compose_phase_reps(s1, s2)))
                direct = composite.tensor(
                    qspace.to_complex(qspace.from_phase_rep(s1)),
                    qspace.to_complex(qspace.from_phase_rep(s2)))
                worst = max(worst, float(np.max(np.abs(via_reps - direct))))
                total += 1
    return worst < tol, worst, total, {"tolerance": tol}


def check_compose_born_factorization(settings):
    """Born distribution of a product state in a product basis factorizes."""
    rng = settings.rng("compose.born")
    trials = settings.trial("compose_pairs", 300)
    tol = settings.tol("compose", 1e-12)
    worst = 0.0
    for _ in range(trials):
        n1, n2 = int(rng.integers(2, 4)), int(rng.integers(2, 4))
        u1, u2 = sampling.haar_unitary(n1, rng), sampling.haar_unitary(n2, rng)
        v1 = sampling.sample_uniform(sampling.StateSampler(n1, 0), 1, rng=rng)[0]
        v2 = sampling.sample_uniform(sampling.StateSampler(n2, 0), 1, rng=rng)[0]
        basis = measurement.MeasurementBasis(np.kron(u1, u2))
        joint = measurement.born_probs(composite.tensor(v1, v2), basis)
        p1 = measurement.born_probs(v1, measurement.MeasurementBasis(u1))
        p2 = measurement.born_probs(v2, measurement.MeasurementBasis(u2))
        worst = max(worst, float(np.max(np.abs(joint - np.outer(p1, p2).ravel()))))
    return worst < tol, worst, trials, {"tolerance": tol}


def check_compose_energy_additivity(settings):
    """Evolve-then-compose equals compose-then-evolve with E1 + E2."""
    rng = settings.rng("compose.energy")
    trials = settings.trial("energy_trials", 1000)
    tol = settings.tol("compose", 1e-12)
    worst = 0.0
    for _ in range(trials):
        s1 = _random_full_support_rep(int(rng.integers(2, 4)), rng)
        s2 = _random_full_support_rep(int(rng.integers(2, 4)), rng)
        e1, e2 = rng.normal(scale=3.0), rng.normal(scale=3.0)
        dt = rng.uniform(0.0, 2.0)
        resid = composite.energy_additivity_check(s1, s2, e1, e2, dt, alpha=1.0)
        worst = max(worst, float(resid))
    return worst < tol, worst, trials, {"tolerance": tol}


def check_compose_subsystem(settings):
    """<A (x) I> on product states equals the single-system expectation."""
    rng = settings.rng("compose.subsystem")
    trials = settings.trial("subsystem_trials", 200)
    tol = settings.tol("compose", 1e-12)
    worst = 0.0
    for _ in range(trials):
        n1, n2 = int(rng.integers(2, 4)), int(rng.integers(2, 4))
        obs = measurement.Observable(
            basis=measurement.MeasurementBasis(sampling.haar_unitary(n1, rng)),
            values=rng.normal(size=n1))
        v1 = sampling.sample_uniform(sampling.StateSampler(n1, 0), 1, rng=rng)[0]
        v2 = sampling.sample_uniform(sampling.StateSampler(n2, 0), 1, rng=rng)[0]
        lifted = composite.subsystem_observable(obs, n2, position="first")
        a = measurement.expected_value(composite.tensor(v1, v2), lifted)
        b = measurement.expected_value(v1, obs)
        worst = max(worst, abs(a - b))
    return worst < tol, worst, trials, {"tolerance": tol}


def check_compose_degenerate_example(settings):
    """Three results, two shared values: probabilities group as (p1, p2 + p3)."""
    basis = measurement.MeasurementBasis.standard(3)
    p = np.array([0.2, 0.3, 0.5])
    v = np.sqrt(p).astype(complex)
    grouped = measurement.degenerate_probs(v, basis, values=[1.0, 2.0, 2.0])
    resid = max(abs(grouped[1.0] - 0.2), abs(grouped[2.0] - 0.8))
    return resid < 1e-12, float(resid), 1, {"grouped": grouped}


def _random_full_support_rep(n, rng):
    p = simplex.renormalized(rng.random(n) + 0.05)
    phi = tuple(rng.uniform(0.0, 2.0 * np.pi, n))
    return qspace.PhaseRep(p=p, phi=phi)


# -------------------------------------------------------------- dynamics


def check_dynamics_correspondence(settings):
    """Stationary phase evolution matches the classical action shift."""
    rng = settings.rng("dynamics.correspondence")
    trials = settings.trial("dynamics_trials", 200)
    tol = settings.tol("dynamics", 1e-12)
    alpha = 1.0
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(3, 8))
        p = simplex.renormalized(rng.random(n) + 0.05)
        S = rng.normal(size=n)
        state = dynamics.HJGridState(h=0.1, x0=0.0, P=p, S=S, m=1.0)
        e, dt = rng.normal(scale=2.0), rng.uniform(0.0, 3.0)
        via_hj = dynamics.phase_rep_from_hj(
            dynamics.hj_stationary_step(state, e, dt), alpha)
        via_phase = dynamics.evolve_stationary(
            dynamics.phase_rep_from_hj(state, alpha), e, dt, alpha)
        for f1, f2 in zip(via_hj.phi, via_phase.phi):
            d = abs(f1 - f2) % (2.0 * np.pi)
            worst = max(worst, min(d, 2.0 * np.pi - d))
    return worst < tol, worst, trials, {"tolerance": tol}


def check_dynamics_unitary(settings):
    """Stationary evolution realifies to a map classified as unitary."""
    rng = settings.rng("dynamics.unitary")
    trials = settings.trial("dynamics_trials", 50)
    for _ in range(trials):
        n = int(rng.integers(2, 6))
        shift = rng.normal()
        m = transforms.realify_unitary(np.exp(-1j * shift) * np.eye(n))
        g = transforms.classify(m)
        if g.kind != "unitary":
            return False, 1.0, trials, {"got": g.kind}
    return True, 0.0, trials, {}


def check_dynamics_residuals(settings):
    """Plane wave: residual 0; spreading family: second-order convergence."""
    m_mass, momentum = 1.0, 0.7

    def plane(t):
        return dynamics.free_particle_state(momentum, m_mass, h=0.01,
                                            x0=-1.0, n=201, t=t)

    c0, h0 = dynamics.hj_residual(plane, t=1.0, dt=0.01)
    plane_resid = max(c0, h0)

    def spreading(h, dt):
        n = int(round(3.6 / h)) + 1

        def provider(t):
            return dynamics.spreading_free_particle_state(
                m_mass, h=h, x0=-1.8, n=n, t=t, width=0.2)

        return dynamics.hj_residual(provider, t=1.0, dt=dt)

    coarse = spreading(0.02, 0.02)
    fine = spreading(0.01, 0.01)
    ratios = [c / f for c, f in zip(coarse, fine)]
    passed = plane_resid < 1e-9 and all(r >= 3.5 for r in ratios)
    details = {"plane_wave_residual": plane_resid,
               "coarse": list(coarse), "fine": list(fine), "ratios": ratios}
    return passed, plane_resid, 2, details


# ------------------------------------------------------------------ haar


def check_haar_metric_invariance(settings):
    """|dv|^2 between nearby states is preserved by gauge maps."""
    rng = settings.rng("haar.metric")
    maps_per_kind = settings.trial("haar_maps", 100)
    pairs = settings.trial("haar_pairs", 10_000) // (2 * maps_per_kind)
    tol = settings.tol("metric_invariance", 1e-10)
    n = 3
    worst = 0.0
    total = 0
    for kind in ("unitary", "antiunitary"):
        for k in range(maps_per_kind):
            g = transforms.GaugeMap(kind=kind, v=sampling.haar_unitary(n, rng))
            dev = sampling.metric_invariance_check(
                g, pairs, seed=int(rng.integers(2**63)))
            worst = max(worst, dev)
            total += pairs
    return worst < tol, worst, total, {"tolerance": tol, "pairs_per_map": pairs}


def check_haar_uniformity(settings):
    """Pushforward of the uniform measure through a gauge map stays uniform."""
    rng = settings.rng("haar.uniformity")
    samples = settings.trial("haar_samples", 100_000)
    n = 3
    results = {}
    ok = True
    for kind in ("unitary", "antiunitary"):
        g = transforms.GaugeMap(kind=kind, v=sampling.haar_unitary(n, rng))
        rep = sampling.measure_invariance_check(
            g, samples, bins=50, seed=int(rng.integers(2**63)))
        results[kind] = min(rep["p_values"].values())
        ok = ok and rep["passed"]
    return ok, float(1.0 - min(results.values())), samples, {"min_p_values": results}


def check_haar_negative_control(settings):
    """A non-norm-preserving map visibly distorts the uniform measure."""
    rng = settings.rng("haar.negative")
    samples = settings.trial("haar_samples", 100_000)
    n = 3

    def squarer(states):
        return states**2

    rep = sampling.measure_invariance_check(
        n, samples, bins=50, seed=int(rng.integers(2**63)), transform=squarer)
    return (not rep["passed"]), float(min(rep["p_values"].values())), samples, {
        "min_p_value": float(min(rep["p_values"].values()))}


def check_haar_rotation_invariance(settings):
    """Projections of uniform samples onto any fixed direction agree (KS test)."""
    from scipy import stats

    rng = settings.rng("haar.rotation")
    samples = settings.trial("haar_ks_samples", 20_000)
    n = 3
    states = sampling.sample_uniform(sampling.StateSampler(n, 0), samples, rng=rng)
    qs = np.hstack([states.real, states.imag])
    u1 = rng.normal(size=2 * n)
    u1 /= np.linalg.norm(u1)
    u2 = rng.normal(size=2 * n)
    u2 /= np.linalg.norm(u2)
    stat, p = stats.ks_2samp(qs @ u1, qs @ u2)
    return p >= 0.001, float(stat), samples, {"p_value": float(p)}


# -------------------------------------------------------------- registry

SUITES = {
    "metric": [
        ("metric.pullback", check_metric_pullback),
        ("metric.qspace_euclidean", check_metric_qspace),
        ("metric.geodesic", check_metric_geodesic),
    ],
    "coin": [
        ("coin.expansion", check_coin_expansion),
        ("coin.monte_carlo", check_coin_monte_carlo),
    ],
    "measure-solver": [
        ("measure.ode_vs_closed_form", check_measure_ode),
        ("measure.invariant_density", check_measure_invariant_density),
        ("measure.counterexamples", check_measure_counterexamples),
        ("measure.ode_convergence", check_measure_convergence),
    ],
    "classify": [
        ("classify.roundtrip", check_classify_roundtrip),
        ("classify.rejects_generic", check_classify_rejects_generic),
        ("classify.witness_agreement", check_classify_witness_agreement),
        ("classify.composition", check_classify_composition),
    ],
    "born": [
        ("born.exact", check_born_exact),
    ],
    "simulate": [
        ("simulate.frequencies", check_born_sampled),
        ("simulate.reproducibility", check_born_reproducible),
    ],
    "compose": [
        ("compose.dual_route", check_compose_dual_route),
        ("compose.born_factorization", check_compose_born_factorization),
        ("compose.energy_additivity", check_compose_energy_additivity),
        ("compose.subsystem_observable", check_compose_subsystem),
        ("compose.degenerate_grouping", check_compose_degenerate_example),
    ],
    "dynamics": [
        ("dynamics.correspondence", check_dynamics_correspondence),
        ("dynamics.unitary_evolution", check_dynamics_unitary),
        ("dynamics.hj_residuals", check_dynamics_residuals),
    ],
    "haar": [
        ("haar.metric_invariance", check_haar_metric_invariance),
        ("haar.uniformity", check_haar_uniformity),
        ("haar.negative_control", check_haar_negative_control),
        ("haar.rotation_invariance", check_haar_rotation_invariance),
    ],
}


def run_suite(names, settings):
    """Run the named suites in order, yielding one report dict per check."""
    for suite in names:
        for check_name, fn in SUITES[suite]:
            report = run_check(check_name, fn, settings)
            report["suite"] = suite
            yield report
