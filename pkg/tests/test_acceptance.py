"""Acceptance suite: one test (and one printed pass/fail line) per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
complete.  Tolerances are absolute in nats.
"""

import math
import time

import numpy as np

from renyi_combining.binary import LN2, Alpha, binary_renyi_entropy
from renyi_combining.channels import (
    CQChannel,
    channel_entropy,
    check_entropy,
    dual_channel,
    exact_check_entropy_alpha2,
    exact_variable_entropy_half,
    pretty_good_guess,
    symmetry_check,
    transform_channel,
    variable_entropy,
)
from renyi_combining.classical import (
    JointDistribution,
    arimoto_entropy,
    bec,
    bec_bound_arimoto,
    bec_bound_hayashi,
    bsc,
    bsc_bound_arimoto,
    bsc_bound_hayashi,
    chain_rule_transform,
    combine_check,
    combine_variable,
    hayashi_entropy,
    inverse_chain_rule_transform,
)
from renyi_combining.families import bec_channel, bsc_channel, bsc_psc_bound
from renyi_combining.harness import (
    ExperimentConfig,
    random_density_matrix,
    random_joint_distribution,
    random_pure_tripartite,
    run_scatter,
)
from renyi_combining.states import (
    classical_embedding,
    petz_down_entropy,
    petz_up_entropy,
    quantum_chain_transform,
    sandwiched_down_entropy,
)

ALPHA_GRID = (0.3, 0.5, 0.9, 1.1, 1.5, 2.0, 3.0, 5.0)


def _report(name, worst, tol, elapsed=None, extra=""):
    ok = worst <= tol
    stamp = f" [{elapsed:.1f}s]" if elapsed is not None else ""
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: worst deviation {worst:.3e} (tol {tol:g}){stamp}{extra}")
    assert ok, f"{name}: worst deviation {worst:.3e} exceeds {tol:g}"


def _rand_channel(rng, d):
    return CQChannel(random_density_matrix(rng, d), random_density_matrix(rng, d))


def _rand_mixed_state(rng, dims):
    from renyi_combining.states import HybridState

    total = int(np.prod(dims))
    g = rng.standard_normal((total, total)) + 1j * rng.standard_normal((total, total))
    w = g @ g.conj().T
    return HybridState.from_quantum(w / np.trace(w).real, dims)


def test_chain_rule_identity_suite():
    """Lemma 1, 2, 5, 6 at 1e-10 over >= 200 instances each, alpha grid."""
    t0 = time.monotonic()
    rng = np.random.default_rng(20260809)
    tol = 1e-10
    worst = 0.0

    # Lemma 1: entropy-kind identity plus the bijective inverse, 200 dists
    for _ in range(200):
        dist = random_joint_distribution(rng, int(rng.integers(2, 7)))
        for a in ALPHA_GRID:
            bar = chain_rule_transform(dist, a)
            worst = max(worst, abs(hayashi_entropy(dist, a) - arimoto_entropy(bar, 1 / a)))
            back = inverse_chain_rule_transform(bar, a)
            worst = max(worst, float(np.abs(back.probs - dist.probs).max()))

    # Lemma 2: classical combining chain rule, 200 pairs
    for _ in range(200):
        p1 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        p2 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        for a in ALPHA_GRID:
            lhs = hayashi_entropy(p1, a) + hayashi_entropy(p2, a)
            rhs = arimoto_entropy(
                combine_variable(chain_rule_transform(p1, a), chain_rule_transform(p2, a)),
                1 / a,
            ) + hayashi_entropy(combine_check(p1, p2), a)
            worst = max(worst, abs(lhs - rhs))

    # Lemma 5: quantum chain rule, identity and three-register split,
    # 200 tripartite states (pure and mixed), register dims <= 3
    for i in range(200):
        dims = tuple(int(rng.integers(2, 4)) for _ in range(3))
        tri = random_pure_tripartite(rng, dims) if i % 2 else _rand_mixed_state(rng, dims)
        for a in ALPHA_GRID:
            tilted = quantum_chain_transform(tri, "C", a)
            lhs = sandwiched_down_entropy(tri, ("A", "B"), a)
            worst = max(worst, abs(lhs - petz_up_entropy(tilted, ("A", "B"), 1 / a)))
            split = petz_up_entropy(tilted, "A", 1 / a) + sandwiched_down_entropy(
                tri.trace_out("A"), "B", a
            )
            worst = max(worst, abs(lhs - split))

    # Lemma 6: channel combining chain rule, 200 pairs, output dim <= 3
    for _ in range(200):
        d = int(rng.integers(2, 4))
        w1, w2 = _rand_channel(rng, d), _rand_channel(rng, d)
        for a in ALPHA_GRID:
            lhs = channel_entropy(w1, "tilde_down", a) + channel_entropy(w2, "tilde_down", a)
            rhs = variable_entropy(
                transform_channel(w1, a), transform_channel(w2, a), "bar_up", 1 / a
            ) + check_entropy(w1, w2, "tilde_down", a)
            worst = max(worst, abs(lhs - rhs))

    elapsed = time.monotonic() - t0
    _report("chain-rule identity suite (Lemmas 1/2/5/6)", worst, tol, elapsed)
    assert elapsed < 60.0, f"runtime {elapsed:.1f}s exceeds the 60 s budget"


def test_theorems_1_to_4():
    """Equality orders, inequality directions, and BSC/BEC tightness."""
    rng = np.random.default_rng(41)
    tol = 1e-10

    # (a) equality at the special orders, 200 random pairs
    worst_eq = 0.0
    for _ in range(200):
        p1 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        p2 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        for a in (2.0, 3.0):
            combined = hayashi_entropy(combine_check(p1, p2), a)
            h1, h2 = hayashi_entropy(p1, a), hayashi_entropy(p2, a)
            worst_eq = max(worst_eq, abs(combined - bsc_bound_hayashi(h1, h2, a)))
            worst_eq = max(worst_eq, abs(combined - bec_bound_hayashi(h1, h2, a)))
        for a in (1.0 / 3.0, 0.5):
            varent = arimoto_entropy(combine_variable(p1, p2), a)
            g1, g2 = arimoto_entropy(p1, a), arimoto_entropy(p2, a)
            worst_eq = max(worst_eq, abs(varent - bsc_bound_arimoto(g1, g2, a)))
            worst_eq = max(worst_eq, abs(varent - bec_bound_arimoto(g1, g2, a)))
    _report("Theorems 1-4 equality at special orders", worst_eq, tol)

    # (b) inequality directions on 500 random pairs per regime
    worst_slack = 0.0
    for _ in range(500):
        p1 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        p2 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        for a in (0.5, 1.5, 5.0, 2.5):
            al = Alpha(a)
            h1, h2 = hayashi_entropy(p1, a), hayashi_entropy(p2, a)
            combined = hayashi_entropy(combine_check(p1, p2), a)
            lo = bsc_bound_hayashi(h1, h2, a)
            hi = bec_bound_hayashi(h1, h2, a)
            if al.check_bounds_flipped:
                lo, hi = hi, lo
            worst_slack = max(worst_slack, lo - combined, combined - hi)
        for a in (0.3, 0.7, 2.0, 0.4):
            al = Alpha(a)
            g1, g2 = arimoto_entropy(p1, a), arimoto_entropy(p2, a)
            varent = arimoto_entropy(combine_variable(p1, p2), a)
            up = bsc_bound_arimoto(g1, g2, a)
            dn = bec_bound_arimoto(g1, g2, a)
            if al.variable_bounds_flipped:
                up, dn = dn, up
            worst_slack = max(worst_slack, varent - up, dn - varent)
    _report("Theorems 1-4 inequality directions", max(worst_slack, 0.0), tol)

    # (c) exact tightness at constructed extremal pairs, every grid order
    worst_tight = 0.0
    for a in ALPHA_GRID:
        h1, h2 = binary_renyi_entropy(0.1, a), binary_renyi_entropy(0.23, a)
        worst_tight = max(
            worst_tight,
            abs(hayashi_entropy(combine_check(bsc(0.1), bsc(0.23)), a) - bsc_bound_hayashi(h1, h2, a)),
            abs(
                arimoto_entropy(combine_variable(bsc(0.1), bsc(0.23)), a)
                - bsc_bound_arimoto(h1, h2, a)
            ),
        )
        e1, e2 = hayashi_entropy(bec(0.3), a), hayashi_entropy(bec(0.6), a)
        g1, g2 = arimoto_entropy(bec(0.3), a), arimoto_entropy(bec(0.6), a)
        worst_tight = max(
            worst_tight,
            abs(hayashi_entropy(combine_check(bec(0.3), bec(0.6)), a) - bec_bound_hayashi(e1, e2, a)),
            abs(
                arimoto_entropy(combine_variable(bec(0.3), bec(0.6)), a)
                - bec_bound_arimoto(g1, g2, a)
            ),
        )
    _report("Theorems 1-4 tightness at BSC/BEC pairs", worst_tight, tol)


def test_exact_order_formulas_and_pgm():
    """Order-2 and order-1/2 closed forms plus the PGM identity, 1e-10."""
    rng = np.random.default_rng(42)
    tol = 1e-10
    worst = 0.0
    for _ in range(200):
        w1, w2 = _rand_channel(rng, 2), _rand_channel(rng, 2)
        worst = max(
            worst,
            abs(
                check_entropy(w1, w2, "tilde_down", 2.0)
                - exact_check_entropy_alpha2(
                    channel_entropy(w1, "tilde_down", 2.0),
                    channel_entropy(w2, "tilde_down", 2.0),
                )
            ),
            abs(
                variable_entropy(w1, w2, "bar_up", 0.5)
                - exact_variable_entropy_half(
                    channel_entropy(w1, "bar_up", 0.5), channel_entropy(w2, "bar_up", 0.5)
                )
            ),
            abs(math.log(pretty_good_guess(w1)) + channel_entropy(w1, "tilde_down", 2.0)),
        )
    _report("order-2 / order-1/2 closed forms and PGM identity", worst, tol)


def test_duality_contract():
    """Entropy complement and combining complement at 1e-9, 200 channels."""
    rng = np.random.default_rng(43)
    tol = 1e-9
    worst = 0.0
    for i in range(200):
        w1 = _rand_channel(rng, 2)
        w2 = _rand_channel(rng, 2)
        d1 = dual_channel(w1, self_test=False)
        d2 = dual_channel(w2, self_test=False)
        for a in ALPHA_GRID:
            worst = max(
                worst,
                abs(
                    channel_entropy(w1, "tilde_down", a)
                    + channel_entropy(d1, "bar_up", 1 / a)
                    - LN2
                ),
                abs(
                    check_entropy(w1, w2, "tilde_down", a)
                    - (LN2 - variable_entropy(d1, d2, "bar_up", 1 / a))
                ),
            )
    _report("duality contract (single and combining)", worst, tol)


def test_combining_symmetry():
    """Lemma 7 on 200 random pairs at 1e-9; closed-form symmetry at 1e-12."""
    t0 = time.monotonic()
    rng = np.random.default_rng(44)
    worst = 0.0
    for _ in range(200):
        w1, w2 = _rand_channel(rng, 2), _rand_channel(rng, 2)
        for a in ALPHA_GRID:
            lhs, rhs = symmetry_check(w1, w2, a)
            worst = max(worst, abs(lhs - rhs))
    _report("combining symmetry (exact route)", worst, 1e-9, time.monotonic() - t0)

    worst_cf = 0.0
    for a in ALPHA_GRID:
        for h1 in np.linspace(0.0, LN2, 13):
            for h2 in np.linspace(0.0, LN2, 13):
                lhs = bsc_psc_bound(h1, h2, a) - 0.5 * (h1 + h2)
                rhs = bsc_psc_bound(LN2 - h1, LN2 - h2, a) - 0.5 * (2 * LN2 - h1 - h2)
                worst_cf = max(worst_cf, abs(lhs - rhs))
    _report("combining symmetry (closed-form bound)", worst_cf, 1e-12)


def test_random_channel_scatter():
    """Seeded 1000-sample scatter: no sandwiched-bound violations at the
    grid orders, and at least one up-arrow envelope crossing at 1.7."""
    t0 = time.monotonic()
    cfg = ExperimentConfig(
        seed=987654321,
        samples=1000,
        dim=2,
        alphas=(0.5, 1.2, 1.4, 1.7, 2.0, 3.0, 5.0),
        entropy_kinds=("tilde_down",),
        tolerance=1e-9,
    )
    _, report = run_scatter(cfg)
    sandwiched_ok = report.total == 0 and report.symmetry_failures == 0

    cfg_up = ExperimentConfig(
        seed=987654321,
        samples=1000,
        dim=2,
        alphas=(1.7,),
        entropy_kinds=("bar_up",),
        tolerance=1e-9,
    )
    _, report_up = run_scatter(cfg_up)
    crossings = report_up.counts[(1.7, "bar_up")]
    elapsed = time.monotonic() - t0
    ok = sandwiched_ok and crossings >= 1
    print(
        f"[{'PASS' if ok else 'FAIL'}] random-channel scatter: sandwiched violations "
        f"{report.total}, up-arrow crossings at 1.7: {crossings} [{elapsed:.1f}s]"
    )
    assert sandwiched_ok, f"unexpected sandwiched-bound violations: {report.entries[:3]}"
    assert crossings >= 1, "expected at least one up-arrow envelope crossing at order 1.7"
    assert elapsed < 300.0, f"runtime {elapsed:.1f}s exceeds the 5 min budget"


def test_classical_reduction():
    """All three state entropies match the classical formulas, 100 instances."""
    rng = np.random.default_rng(45)
    tol = 1e-10
    worst = 0.0
    for _ in range(100):
        dist = random_joint_distribution(rng, int(rng.integers(2, 7)))
        st = classical_embedding(dist)
        p = dist.probs
        py = p.sum(axis=0)
        mask = py > 0
        for a in ALPHA_GRID:
            worst = max(
                worst,
                abs(sandwiched_down_entropy(st, "X", a) - hayashi_entropy(dist, a)),
                abs(petz_up_entropy(st, "X", a) - arimoto_entropy(dist, a)),
                abs(
                    petz_down_entropy(st, "X", a)
                    - math.log(((py[mask] ** (1 - a)) * (p[:, mask] ** a).sum(axis=0)).sum())
                    / (1 - a)
                ),
            )
    _report("classical reduction of the quantum entropies", worst, tol)


def test_worked_value_regressions():
    """Frozen worked values, each recomputed from a direct-formula oracle."""
    tol = 1e-5
    cases = [
        (
            "binary order-2 entropy at 0.1",
            binary_renyi_entropy(0.1, 2.0),
            -math.log(0.1**2 + 0.9**2),  # oracle: direct evaluation
            0.198451,
        ),
        (
            "combined BSC(0.1) pair at order 2",
            check_entropy(bsc_channel(0.1), bsc_channel(0.1), "tilde_down", 2.0),
            -math.log(0.18**2 + 0.82**2),  # oracle: h_2 of 0.1 * 0.1
            0.349841,
        ),
        (
            "erasure channel up-arrow entropy at order 2",
            channel_entropy(bec_channel(0.5), "bar_up", 2.0),
            -2.0 * math.log(0.5 + 0.5 * 2**-0.5),  # oracle: erasure branch 2^((1-a)/a)
            0.316694,
        ),
        (
            "order-1/2 combined formula at ln 1.5 inputs",
            exact_variable_entropy_half(math.log(1.5), math.log(1.5)),
            math.log(1.25),  # oracle: (e^h - 1)^2 = 0.25
            0.223144,
        ),
    ]
    worst = 0.0
    for name, got, oracle, frozen in cases:
        assert abs(oracle - frozen) <= 5e-7, f"oracle drifted from frozen constant for {name}"
        worst = max(worst, abs(got - oracle))
    _report("worked-value regressions", worst, tol)
