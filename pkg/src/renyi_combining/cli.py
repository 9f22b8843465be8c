"""Command-line interface: entropy evaluation, combining, transforms, duals,
bound curves, scatter experiments, and the verification suites.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .binary import order_value
from .channels import CQChannel, channel_entropy, check_entropy, dual_channel, transform_channel, variable_entropy
from .classical import JointDistribution, classical_entropy, CLASSICAL_KINDS
from .families import (
    FAMILY_TAGS,
    curve_family,
    parse_channel_shorthand,
    write_curves_csv,
)
from .harness import (
    SEED_ENV_VAR,
    SUITE_TAGS,
    ExperimentConfig,
    run_scatter,
    run_verify,
    write_scatter_csv,
    write_violation_report,
)
from .states import QUANTUM_KINDS

ALL_KINDS = tuple(CLASSICAL_KINDS) + tuple(QUANTUM_KINDS)


def _load_state(text: str):
    """Interpret --state/--w values: shorthand, inline JSON, or a JSON file."""
    candidate = text.strip()
    if os.path.isfile(candidate):
        with open(candidate, encoding="utf-8") as fh:
            obj = json.load(fh)
    elif candidate.startswith("{"):
        obj = json.loads(candidate)
    else:
        return parse_channel_shorthand(candidate)
    if "probs" in obj:
        return JointDistribution.from_json(obj)
    return CQChannel.from_json(obj)


def _load_channel(text: str) -> CQChannel:
    loaded = _load_state(text)
    if not isinstance(loaded, CQChannel):
        raise SystemExit("expected a channel (shorthand or CQ JSON), got a classical distribution")
    return loaded


def _resolve_seed(flag_seed, default: int) -> int:
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        return int(env)
    return default if flag_seed is None else int(flag_seed)


def _cmd_entropy(args) -> int:
    state = _load_state(args.state)
    if isinstance(state, JointDistribution):
        if args.kind not in CLASSICAL_KINDS:
            raise SystemExit(
                f"kind {args.kind!r} does not apply to a classical distribution; "
                f"use one of {CLASSICAL_KINDS}"
            )
        value = classical_entropy(state, args.kind, args.alpha)
    else:
        kind = {"hayashi": "tilde_down", "arimoto": "bar_up"}.get(args.kind, args.kind)
        value = channel_entropy(state, kind, args.alpha)
    print(f"{value:.17g}")
    return 0


def _cmd_combine(args) -> int:
    w1 = _load_channel(args.w1)
    w2 = _load_channel(args.w2)
    kind = {"hayashi": "tilde_down", "arimoto": "bar_up"}.get(args.kind, args.kind)
    if args.op == "check":
        value = check_entropy(w1, w2, kind, args.alpha)
    else:
        value = variable_entropy(w1, w2, kind, args.alpha)
    print(f"{value:.17g}")
    return 0


def _cmd_transform(args) -> int:
    out = transform_channel(_load_channel(args.w), args.alpha)
    print(json.dumps(out.to_json()))
    return 0


def _cmd_dual(args) -> int:
    out = dual_channel(_load_channel(args.w))
    print(json.dumps(out.to_json()))
    return 0


def _cmd_curves(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    unknown = set(families) - set(FAMILY_TAGS)
    if unknown:
        raise SystemExit(f"unknown families {sorted(unknown)}; expected subset of {FAMILY_TAGS}")
    curves = [curve_family(f, args.kind, args.alpha, args.grid) for f in families]
    write_curves_csv(args.out, curves)
    print(f"wrote {sum(len(c.points) for c in curves)} curve points to {args.out}")
    return 0


def _cmd_scatter(args) -> int:
    base = ExperimentConfig.from_json(args.config) if args.config else ExperimentConfig()
    cfg = base.merged(
        seed=args.seed,
        samples=args.samples,
        dim=args.dim,
        alphas=tuple(float(a) for a in args.alphas.split(",")) if args.alphas else None,
        entropy_kinds=tuple(k.strip() for k in args.kinds.split(",")) if args.kinds else None,
        tolerance=args.tol,
        output_path=args.out,
    )
    if cfg.output_path is None:
        raise SystemExit("an output path is required (flag --out or config output_path)")
    records, report = run_scatter(cfg)
    write_scatter_csv(cfg.output_path, records)
    write_violation_report(cfg.output_path + ".report.json", report)
    print(f"wrote {len(records)} records to {cfg.output_path}")
    for (alpha, kind), count in sorted(report.counts.items()):
        print(f"alpha={alpha:g} kind={kind}: {count} bound violations (tol {cfg.tolerance:g})")
    print(f"total violations: {report.total}")
    return 0


def _cmd_verify(args) -> int:
    seed = _resolve_seed(args.seed, 2024)
    report = run_verify(args.suite, seed=seed, tol=args.tol)
    print(report.summary())
    for line in report.details[:20]:
        print("  " + line)
    if len(report.details) > 20:
        print(f"  ... and {len(report.details) - 20} more failures")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="renyi-combining",
        description="Conditional Renyi entropies and information-combining numerics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="conditional entropy of a state or channel")
    p.add_argument("--state", required=True, help="channel shorthand, JSON, or JSON file")
    p.add_argument("--kind", required=True, choices=ALL_KINDS)
    p.add_argument("--alpha", required=True, type=float)
    p.set_defaults(fn=_cmd_entropy)

    p = sub.add_parser("combine", help="entropy after check/variable combining")
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.add_argument("--op", required=True, choices=("check", "variable"))
    p.add_argument("--kind", required=True, choices=ALL_KINDS)
    p.add_argument("--alpha", required=True, type=float)
    p.set_defaults(fn=_cmd_combine)

    p = sub.add_parser("transform", help="chain-rule transform of a channel")
    p.add_argument("--w", required=True)
    p.add_argument("--alpha", required=True, type=float)
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("dual", help="complementary (dual) channel")
    p.add_argument("--w", required=True)
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("curves", help="extremal-family bound curves as CSV")
    p.add_argument("--families", required=True, help="comma list from bsc,bec,psc")
    p.add_argument("--kind", required=True, choices=ALL_KINDS)
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--grid", required=True, type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_curves)

    p = sub.add_parser("scatter", help="seeded random-channel scatter experiment")
    p.add_argument("--samples", type=int)
    p.add_argument("--dim", type=int)
    p.add_argument("--alphas", help="comma list of orders")
    p.add_argument("--kinds", help="comma list of entropy kinds")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--tol", type=float)
    p.add_argument("--config", help="JSON config file; flags override it")
    p.set_defaults(fn=_cmd_scatter)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=SUITE_TAGS)
    p.add_argument("--tol", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    order_value(args.alpha) if hasattr(args, "alpha") else None
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
