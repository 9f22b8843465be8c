"""Seeded random-channel experiments and the numerical verification suites.

Everything here is deterministic given the configuration: channels are drawn
from a counter-based generator keyed by (seed, sample index), so serial and
parallel evaluation orders produce identical bytes.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field, replace

import numpy as np

from .binary import LN2, Alpha, binary_renyi_entropy, inverse_binary_renyi, star
from .channels import (
    CQChannel,
    channel_entropy,
    check_entropy,
    combine_cq,
    dual_channel,
    exact_check_entropy_alpha2,
    exact_variable_entropy_half,
    pgm_operators,
    pretty_good_guess,
    symmetry_check,
    transform_channel,
    variable_entropy,
)
from .classical import (
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
from .families import (
    bec_bound_sandwiched,
    bsc_psc_bound,
    channel_for_entropy,
    normalize_kind,
    FAMILY_TAGS,
)
from .linalg import dense_of
from .states import (
    HybridState,
    classical_embedding,
    conditional_renyi_entropy,
    petz_down_entropy,
    petz_up_entropy,
    quantum_chain_transform,
    sandwiched_down_entropy,
)

DEFAULT_ALPHAS = (0.5, 1.2, 1.4, 1.7, 2.0, 3.0, 5.0)
IDENTITY_ALPHAS = (0.3, 0.5, 0.9, 1.1, 1.5, 2.0, 3.0, 5.0)
SEED_ENV_VAR = "RENYI_SEED"

SUITE_TAGS = ("chain-rules", "duality", "symmetry", "equalities", "bounds", "reductions")


@dataclass(frozen=True)
class ScatterRecord:
    sample_index: int
    h_in: float
    delta_h: float
    alpha: float
    entropy_kind: str
    seed: int


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 1234
    samples: int = 1000
    dim: int = 2
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    entropy_kinds: tuple[str, ...] = ("tilde_down",)
    tolerance: float = 1e-9
    output_path: str | None = None

    def __post_init__(self):
        if self.samples < 0:
            raise ValueError(f"samples must be >= 0, got {self.samples}")
        if self.dim < 2:
            raise ValueError(f"dim must be >= 2, got {self.dim}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "entropy_kinds", tuple(self.entropy_kinds))

    @classmethod
    def from_json(cls, path) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        known = {k: data[k] for k in (
            "seed", "samples", "dim", "alphas", "entropy_kinds", "tolerance", "output_path",
        ) if k in data}
        return cls(**known)

    def merged(self, **overrides) -> "ExperimentConfig":
        """Apply non-None overrides (flags beat the file, the environment
        seed beats both)."""
        updates = {k: v for k, v in overrides.items() if v is not None}
        cfg = replace(self, **updates) if updates else self
        env = os.environ.get(SEED_ENV_VAR)
        if env is not None:
            cfg = replace(cfg, seed=int(env))
        return cfg


def _generator(seed: int, index: int) -> np.random.Generator:
    # Philox keyed by (seed, index): counter-based, so per-sample streams
    # are identical however the samples are scheduled.
    return np.random.Generator(np.random.Philox(np.random.SeedSequence((int(seed), int(index)))))


def random_density_matrix(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Hilbert-Schmidt-random density matrix via a normalized Ginibre product."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    w = g @ g.conj().T
    return w / np.trace(w).real


def sample_random_channel(seed: int, index: int, dim: int) -> CQChannel:
    """Deterministic random channel: two independent HS-random outputs."""
    rng = _generator(seed, index)
    return CQChannel(random_density_matrix(rng, dim), random_density_matrix(rng, dim))


def random_joint_distribution(rng: np.random.Generator, y_arity: int) -> JointDistribution:
    p = rng.random((2, y_arity))
    return JointDistribution(p / p.sum())


def random_pure_tripartite(rng: np.random.Generator, dims) -> HybridState:
    total = math.prod(dims)
    v = rng.standard_normal(total) + 1j * rng.standard_normal(total)
    v /= np.linalg.norm(v)
    return HybridState.from_quantum(np.outer(v, v.conj()), dims, names=("A", "B", "C"))


# ---------------------------------------------------------------------------
# scatter experiment


@dataclass
class ViolationReport:
    tolerance: float
    counts: dict[tuple[float, str], int] = field(default_factory=dict)
    entries: list[dict] = field(default_factory=list)
    symmetry_checks: int = 0
    symmetry_failures: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "total_violations": self.total,
            "counts": [
                {"alpha": a, "entropy_kind": k, "violations": n}
                for (a, k), n in sorted(self.counts.items())
            ],
            "entries": self.entries,
            "symmetry_checks": self.symmetry_checks,
            "symmetry_failures": self.symmetry_failures,
        }


def _sandwiched_bounds(h: float, alpha: float) -> tuple[float, float]:
    lo = bsc_psc_bound(h, h, alpha)
    hi = bec_bound_sandwiched(h, h, alpha)
    if Alpha(alpha).check_bounds_flipped:
        lo, hi = hi, lo
    return min(lo, hi), max(lo, hi)


def _envelope_bounds(h: float, kind: str, alpha: float) -> tuple[float, float]:
    # outer envelope of the three extremal-family curves, combined exactly;
    # a family that cannot reach this entropy level (degenerate kind/order
    # combinations) simply drops out of the envelope
    values = []
    for fam in FAMILY_TAGS:
        try:
            w = channel_for_entropy(fam, h, kind, alpha)
        except ValueError:
            continue
        values.append(check_entropy(w, w, kind, alpha))
    return min(values), max(values)


def run_scatter(config: ExperimentConfig):
    """Draw seeded channels, record combining deltas, and flag bound
    violations.

    For the sandwiched kind each sample is tested against the conjectured
    BSC-PSC lower and BEC upper formulas (directions swapped on the flipped
    window); other kinds are tested against the numeric min/max envelope of
    the three extremal families.  One sample in a hundred additionally
    exercises the combining-symmetry identity.
    """
    records: list[ScatterRecord] = []
    report = ViolationReport(tolerance=config.tolerance)
    for (alpha, kind) in ((a, k) for a in config.alphas for k in config.entropy_kinds):
        report.counts[(alpha, kind)] = 0
    for idx in range(config.samples):
        w = sample_random_channel(config.seed, idx, config.dim)
        for alpha in config.alphas:
            for kind in config.entropy_kinds:
                kind_q = normalize_kind(kind)
                h_in = channel_entropy(w, kind_q, alpha)
                combined = check_entropy(w, w, kind_q, alpha)
                records.append(
                    ScatterRecord(
                        sample_index=idx,
                        h_in=h_in,
                        delta_h=combined - h_in,
                        alpha=alpha,
                        entropy_kind=kind,
                        seed=config.seed,
                    )
                )
                if kind_q == "tilde_down":
                    lo, hi = _sandwiched_bounds(h_in, alpha)
                else:
                    lo, hi = _envelope_bounds(h_in, kind_q, alpha)
                excess = max(lo - combined, combined - hi)
                if excess > config.tolerance:
                    report.counts[(alpha, kind)] += 1
                    report.entries.append(
                        {
                            "sample_index": idx,
                            "alpha": alpha,
                            "entropy_kind": kind,
                            "h_in": h_in,
                            "combined": combined,
                            "lower": lo,
                            "upper": hi,
                            "excess": excess,
                        }
                    )
        if idx % 100 == 0 and any(normalize_kind(k) == "tilde_down" for k in config.entropy_kinds):
            for alpha in config.alphas[:1]:
                lhs, rhs = symmetry_check(w, w, alpha)
                report.symmetry_checks += 1
                if abs(lhs - rhs) > 1e-9:
                    report.symmetry_failures += 1
    return records, report


SCATTER_CSV_HEADER = "sample_index,h_in,delta_h,alpha,entropy_kind,seed"


def scatter_to_csv(records) -> str:
    lines = [SCATTER_CSV_HEADER]
    for r in records:
        lines.append(
            f"{r.sample_index},{r.h_in + 0.0:.17g},{r.delta_h + 0.0:.17g},{r.alpha:.17g},"
            f"{r.entropy_kind},{r.seed}"
        )
    return "\n".join(lines) + "\n"


def write_scatter_csv(path, records) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(scatter_to_csv(records))


def write_violation_report(path, report: ViolationReport) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(report.to_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# verification suites


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: int = 0
    worst: float = 0.0
    details: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, label: str, deviation: float, tol: float) -> None:
        self.cases += 1
        dev = abs(float(deviation))
        self.worst = max(self.worst, dev)
        if dev > tol:
            self.failures += 1
            self.details.append(f"{label}: deviation {dev:.3e} exceeds {tol:.1e}")

    def check_nonnegative(self, label: str, slack: float, tol: float) -> None:
        self.cases += 1
        s = float(slack)
        if s < -tol:
            self.worst = max(self.worst, -s)
            self.failures += 1
            self.details.append(f"{label}: slack {s:.3e} below -{tol:.1e}")

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] suite={self.suite} cases={self.cases} "
            f"failures={self.failures} worst_deviation={self.worst:.3e}"
        )


def _suite_chain_rules(report, rng, instances, tol, alphas):
    for i in range(instances):
        dist = random_joint_distribution(rng, int(rng.integers(2, 7)))
        qdim = int(rng.integers(2, 4))
        w1 = CQChannel(random_density_matrix(rng, qdim), random_density_matrix(rng, qdim))
        w2 = CQChannel(random_density_matrix(rng, qdim), random_density_matrix(rng, qdim))
        tri = random_pure_tripartite(rng, tuple(int(rng.integers(2, 4)) for _ in range(3)))
        for a in alphas:
            bar = chain_rule_transform(dist, a)
            report.check(
                f"classical-identity[{i},{a}]",
                hayashi_entropy(dist, a) - arimoto_entropy(bar, 1 / a),
                tol,
            )
            back = inverse_chain_rule_transform(bar, a)
            report.check(
                f"classical-roundtrip[{i},{a}]",
                float(np.abs(back.probs - dist.probs).max()),
                tol,
            )
            p1 = random_joint_distribution(rng, int(rng.integers(2, 7)))
            p2 = random_joint_distribution(rng, int(rng.integers(2, 7)))
            lhs = hayashi_entropy(p1, a) + hayashi_entropy(p2, a)
            rhs = arimoto_entropy(
                combine_variable(chain_rule_transform(p1, a), chain_rule_transform(p2, a)),
                1 / a,
            ) + hayashi_entropy(combine_check(p1, p2), a)
            report.check(f"classical-combining[{i},{a}]", lhs - rhs, tol)
            # quantum chain rule on a tripartite state, both forms
            tilted = quantum_chain_transform(tri, "C", a)
            lhs_q = sandwiched_down_entropy(tri, ("A", "B"), a)
            report.check(
                f"quantum-identity[{i},{a}]",
                lhs_q - petz_up_entropy(tilted, ("A", "B"), 1 / a),
                tol,
            )
            report.check(
                f"quantum-split[{i},{a}]",
                lhs_q
                - petz_up_entropy(tilted, "A", 1 / a)
                - sandwiched_down_entropy(tri.trace_out("A"), "B", a),
                tol,
            )
            # channel-level combining chain rule
            t1, t2 = transform_channel(w1, a), transform_channel(w2, a)
            lhs_c = channel_entropy(w1, "tilde_down", a) + channel_entropy(w2, "tilde_down", a)
            rhs_c = variable_entropy(t1, t2, "bar_up", 1 / a) + check_entropy(
                w1, w2, "tilde_down", a
            )
            report.check(f"channel-combining[{i},{a}]", lhs_c - rhs_c, tol)


def _suite_duality(report, rng, instances, tol, alphas, dual_fn):
    for i in range(instances):
        tri = random_pure_tripartite(rng, (2, 2, 2))
        w = CQChannel(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
        w2 = CQChannel(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
        wd = dual_fn(w)
        w2d = dual_fn(w2)
        for a in alphas:
            report.check(
                f"pure-state[{i},{a}]",
                sandwiched_down_entropy(tri.trace_out("C"), "A", a)
                + petz_up_entropy(tri.trace_out("B"), "A", 1 / a),
                tol,
            )
            report.check(
                f"channel-complement[{i},{a}]",
                channel_entropy(w, "tilde_down", a)
                + channel_entropy(wd, "bar_up", 1 / a)
                - LN2,
                tol,
            )
            report.check(
                f"combining-complement[{i},{a}]",
                check_entropy(w, w2, "tilde_down", a)
                - (LN2 - variable_entropy(wd, w2d, "bar_up", 1 / a)),
                tol,
            )


def _suite_symmetry(report, rng, instances, tol, alphas):
    for i in range(instances):
        w1 = CQChannel(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
        w2 = CQChannel(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
        for a in alphas:
            lhs, rhs = symmetry_check(w1, w2, a)
            report.check(f"combining-symmetry[{i},{a}]", lhs - rhs, tol)
    for h1 in np.linspace(0.0, LN2, 9):
        for h2 in np.linspace(0.0, LN2, 9):
            for a in alphas:
                lhs = bsc_psc_bound(h1, h2, a) - 0.5 * (h1 + h2)
                rhs = bsc_psc_bound(LN2 - h1, LN2 - h2, a) - 0.5 * (2 * LN2 - h1 - h2)
                report.check(f"closed-form-symmetry[{h1:.3f},{h2:.3f},{a}]", lhs - rhs, 1e-12)


def _suite_equalities(report, rng, instances, tol, alphas):
    for i in range(instances):
        p1 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        p2 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        for a in (2.0, 3.0):
            report.check(
                f"check-bsc-equality[{i},{a}]",
                hayashi_entropy(combine_check(p1, p2), a)
                - bsc_bound_hayashi(hayashi_entropy(p1, a), hayashi_entropy(p2, a), a),
                tol,
            )
            report.check(
                f"check-bec-equality[{i},{a}]",
                hayashi_entropy(combine_check(p1, p2), a)
                - bec_bound_hayashi(hayashi_entropy(p1, a), hayashi_entropy(p2, a), a),
                tol,
            )
        for a in (1.0 / 3.0, 0.5):
            report.check(
                f"variable-bsc-equality[{i},{a}]",
                arimoto_entropy(combine_variable(p1, p2), a)
                - bsc_bound_arimoto(arimoto_entropy(p1, a), arimoto_entropy(p2, a), a),
                tol,
            )
            report.check(
                f"variable-bec-equality[{i},{a}]",
                arimoto_entropy(combine_variable(p1, p2), a)
                - bec_bound_arimoto(arimoto_entropy(p1, a), arimoto_entropy(p2, a), a),
                tol,
            )
        w1 = CQChannel(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
        w2 = CQChannel(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
        report.check(
            f"order2-closed-form[{i}]",
            check_entropy(w1, w2, "tilde_down", 2.0)
            - exact_check_entropy_alpha2(
                channel_entropy(w1, "tilde_down", 2.0), channel_entropy(w2, "tilde_down", 2.0)
            ),
            tol,
        )
        report.check(
            f"order-half-closed-form[{i}]",
            variable_entropy(w1, w2, "bar_up", 0.5)
            - exact_variable_entropy_half(
                channel_entropy(w1, "bar_up", 0.5), channel_entropy(w2, "bar_up", 0.5)
            ),
            tol,
        )
        report.check(
            f"pgm-identity[{i}]",
            channel_entropy(w1, "tilde_down", 2.0) + math.log(pretty_good_guess(w1)),
            tol,
        )
    for a in alphas:
        e1, e2, q1, q2 = 0.3, 0.6, 0.1, 0.23
        report.check(
            f"bsc-tightness[{a}]",
            hayashi_entropy(combine_check(bsc(q1), bsc(q2)), a)
            - bsc_bound_hayashi(
                binary_renyi_entropy(q1, a), binary_renyi_entropy(q2, a), a
            ),
            tol,
        )
        report.check(
            f"bec-tightness[{a}]",
            hayashi_entropy(combine_check(bec(e1), bec(e2)), a)
            - bec_bound_hayashi(hayashi_entropy(bec(e1), a), hayashi_entropy(bec(e2), a), a),
            tol,
        )
        report.check(
            f"bsc-variable-tightness[{a}]",
            arimoto_entropy(combine_variable(bsc(q1), bsc(q2)), a)
            - bsc_bound_arimoto(
                binary_renyi_entropy(q1, a), binary_renyi_entropy(q2, a), a
            ),
            tol,
        )
        report.check(
            f"bec-variable-tightness[{a}]",
            arimoto_entropy(combine_variable(bec(e1), bec(e2)), a)
            - bec_bound_arimoto(arimoto_entropy(bec(e1), a), arimoto_entropy(bec(e2), a), a),
            tol,
        )


def _suite_bounds(report, rng, instances, tol, alphas):
    for i in range(instances):
        p1 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        p2 = random_joint_distribution(rng, int(rng.integers(2, 7)))
        for a in alphas:
            al = Alpha(a)
            h1, h2 = hayashi_entropy(p1, a), hayashi_entropy(p2, a)
            combined = hayashi_entropy(combine_check(p1, p2), a)
            lo = bsc_bound_hayashi(h1, h2, a)
            hi = bec_bound_hayashi(h1, h2, a)
            if al.check_bounds_flipped:
                lo, hi = hi, lo
            report.check_nonnegative(f"check-lower[{i},{a}]", combined - lo, tol)
            report.check_nonnegative(f"check-upper[{i},{a}]", hi - combined, tol)
            g1, g2 = arimoto_entropy(p1, a), arimoto_entropy(p2, a)
            varent = arimoto_entropy(combine_variable(p1, p2), a)
            up = bsc_bound_arimoto(g1, g2, a)
            dn = bec_bound_arimoto(g1, g2, a)
            if al.variable_bounds_flipped:
                up, dn = dn, up
            report.check_nonnegative(f"variable-upper[{i},{a}]", up - varent, tol)
            report.check_nonnegative(f"variable-lower[{i},{a}]", varent - dn, tol)


def _suite_reductions(report, rng, instances, tol, alphas):
    for i in range(instances):
        dist = random_joint_distribution(rng, int(rng.integers(2, 7)))
        state = classical_embedding(dist)
        for a in alphas:
            report.check(
                f"hayashi-reduction[{i},{a}]",
                sandwiched_down_entropy(state, "X", a) - hayashi_entropy(dist, a),
                tol,
            )
            report.check(
                f"arimoto-reduction[{i},{a}]",
                petz_up_entropy(state, "X", a) - arimoto_entropy(dist, a),
                tol,
            )
            p = dist.probs
            py = p.sum(axis=0)
            mask = py > 0
            direct = float(
                np.log((py[mask] ** (1 - a) * (p[:, mask] ** a).sum(axis=0)).sum()) / (1 - a)
            )
            report.check(
                f"bar-down-reduction[{i},{a}]",
                petz_down_entropy(state, "X", a) - direct,
                tol,
            )
            q_cl = chain_rule_transform(dist, a)
            q_qu = quantum_chain_transform(state, "Y", a)
            dev = 0.0
            for x in range(2):
                w, m = q_qu.blocks[(x,)]
                dev = max(dev, float(np.abs(w * np.diag(dense_of(m)).real - q_cl.probs[x]).max()))
            report.check(f"transform-reduction[{i},{a}]", dev, tol)


def run_verify(
    suite: str,
    seed: int = 2024,
    tol: float | None = None,
    instances: int | None = None,
    alphas=None,
    dual_fn=None,
) -> SuiteReport:
    """Run one named verification suite on freshly sampled instances.

    ``dual_fn`` exists so a deliberately broken dual construction can be
    exercised as a negative control.
    """
    if suite not in SUITE_TAGS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITE_TAGS}")
    rng = np.random.default_rng(seed)
    report = SuiteReport(suite=suite)
    alphas = tuple(alphas) if alphas is not None else IDENTITY_ALPHAS
    if suite == "chain-rules":
        _suite_chain_rules(report, rng, instances or 25, tol or 1e-10, alphas)
    elif suite == "duality":
        _suite_duality(report, rng, instances or 25, tol or 1e-9, alphas, dual_fn or dual_channel)
    elif suite == "symmetry":
        _suite_symmetry(report, rng, instances or 25, tol or 1e-9, alphas)
    elif suite == "equalities":
        _suite_equalities(report, rng, instances or 40, tol or 1e-10, alphas)
    elif suite == "bounds":
        _suite_bounds(report, rng, instances or 60, tol or 1e-10, alphas)
    elif suite == "reductions":
        _suite_reductions(report, rng, instances or 40, tol or 1e-10, alphas)
    return report
