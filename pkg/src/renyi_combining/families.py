"""Extremal channel families (BSC, BEC, PSC), the conjectured combining
bounds for the sandwiched entropy, and bound-curve generation for figures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .binary import (
    LN2,
    binary_renyi_entropy,
    inverse_binary_renyi,
    is_shannon_order,
    order_value,
    star,
)
from .channels import CQChannel, channel_entropy, check_entropy
from .classical import bec_bound_hayashi

FAMILY_TAGS = ("bsc", "bec", "psc")

# Classical tags are accepted anywhere a kind is needed; on the diagonal /
# pure embeddings used here they coincide with their quantum counterparts.
_KIND_ALIASES = {"hayashi": "tilde_down", "arimoto": "bar_up"}

ENTROPY_TARGET_TOL = 1e-10


def normalize_kind(kind: str) -> str:
    return _KIND_ALIASES.get(kind, kind)


def bsc_channel(p: float) -> CQChannel:
    """Diagonal embedding of the binary symmetric channel."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"flip probability out of [0, 1]: {p!r}")
    return CQChannel(np.diag([1 - p, p]).astype(complex), np.diag([p, 1 - p]).astype(complex))


def bec_channel(eps: float) -> CQChannel:
    """Diagonal embedding of the binary erasure channel (erasure symbol last)."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"erasure probability out of [0, 1]: {eps!r}")
    return CQChannel(
        np.diag([1 - eps, 0.0, eps]).astype(complex),
        np.diag([0.0, 1 - eps, eps]).astype(complex),
    )


def psc_channel(f: float) -> CQChannel:
    """Pure-state channel with output overlap ``f = |<psi0|psi1>|``.

    Uses the cos/sin embedding in dimension 2, so a single parameter sweeps
    the entropy over the whole of [0, ln 2] (f = 0 orthogonal, f = 1 blind).
    """
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"overlap out of [0, 1]: {f!r}")
    t = math.acos(f) / 2.0
    v0 = np.array([math.cos(t), math.sin(t)])
    v1 = np.array([math.cos(t), -math.sin(t)])
    return CQChannel(np.outer(v0, v0).astype(complex), np.outer(v1, v1).astype(complex))


_FAMILY_BUILDERS = {"bsc": bsc_channel, "bec": bec_channel, "psc": psc_channel}


def family_channel(family: str, parameter: float) -> CQChannel:
    try:
        return _FAMILY_BUILDERS[family](parameter)
    except KeyError:
        raise ValueError(f"unknown channel family {family!r}; expected one of {FAMILY_TAGS}") from None


def family_entropy(family: str, parameter: float, kind: str, alpha) -> float:
    return channel_entropy(family_channel(family, parameter), normalize_kind(kind), alpha)


def _bec_parameter(target: float, kind: str, alpha) -> float:
    # Both erasure-channel entropies are linear in eps with closed-form
    # slope; expm1 keeps the ratio stable near the Shannon order.
    a = order_value(alpha)
    if is_shannon_order(a):
        return target / LN2
    t = (1.0 - a) if normalize_kind(kind) in ("tilde_down", "bar_down") else (1.0 - a) / a
    return math.expm1(t * target) / math.expm1(t * LN2)


def family_parameter_for_entropy(family: str, target_h: float, kind: str, alpha) -> float:
    """Parameter at which the family's single-channel entropy equals
    ``target_h``.

    Raises a domain error when the target cannot be achieved (e.g. the
    down-arrow Petz entropy of a pure-state channel degenerates for orders
    at and above 2, so most targets have no preimage there).
    """
    target_h = float(target_h)
    if target_h < -1e-12 or target_h > LN2 + 1e-12:
        raise ValueError(f"target entropy out of [0, ln 2]: {target_h!r}")
    target_h = min(max(target_h, 0.0), LN2)
    kind = normalize_kind(kind)
    a = order_value(alpha)
    if family == "bsc":
        # every kind reduces to the binary Renyi entropy of the flip probability
        return inverse_binary_renyi(target_h, a)
    if family == "bec":
        return _bec_parameter(target_h, kind, a)
    if family == "psc":
        if target_h == 0.0:
            return 0.0
        if target_h == LN2:
            return 1.0
        lo, hi = 0.0, 1.0  # entropy is increasing in the overlap
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            if family_entropy("psc", mid, kind, a) < target_h:
                lo = mid
            else:
                hi = mid
        param = 0.5 * (lo + hi)
        if abs(family_entropy("psc", param, kind, a) - target_h) > 1e-8:
            raise ValueError(
                f"target entropy {target_h!r} is not achievable by the psc family "
                f"for kind {kind!r} at order {a!r}"
            )
        return param
    raise ValueError(f"unknown channel family {family!r}; expected one of {FAMILY_TAGS}")


def channel_for_entropy(family: str, target_h: float, kind: str, alpha) -> CQChannel:
    """Member of the family whose entropy equals ``target_h``."""
    return family_channel(family, family_parameter_for_entropy(family, target_h, kind, alpha))


def bsc_psc_bound(h1, h2, alpha) -> float:
    """Conjectured BSC-PSC bound on the sandwiched entropy of the sum.

    Piecewise in h1 + h2 against ln 2: the BSC formula below the seam and
    its reflected (pure-state) counterpart above; both branches agree on
    the seam.  Lower bound for alpha in (0,2] u [3,inf), upper for [2,3],
    exact at alpha in {2,3}.
    """
    h1, h2 = float(h1), float(h2)
    a = order_value(alpha)
    if h1 + h2 <= LN2:
        return binary_renyi_entropy(
            star(inverse_binary_renyi(h1, a), inverse_binary_renyi(h2, a)), a
        )
    return (
        h1
        + h2
        - LN2
        + binary_renyi_entropy(
            star(inverse_binary_renyi(LN2 - h1, a), inverse_binary_renyi(LN2 - h2, a)), a
        )
    )


def bec_bound_sandwiched(h1, h2, alpha) -> float:
    """Conjectured BEC bound on the sandwiched entropy of the sum.

    Same formula as the classical extremal-BEC evaluator (the conjectured
    delta coefficient is 2^(1-alpha)); upper bound for alpha in
    (0,2] u [3,inf), exact at alpha in {2,3}.
    """
    return bec_bound_hayashi(h1, h2, alpha)


@dataclass(frozen=True)
class BoundCurve:
    """Sampled bound curve: (input entropy, combined minus input entropy)."""

    alpha: float
    entropy_kind: str
    family: str
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        hs = [h for h, _ in self.points]
        if any(b <= a for a, b in zip(hs, hs[1:])):
            raise ValueError("curve grid must be strictly increasing in h_in")


def curve_family(family: str, kind: str, alpha, grid_size: int) -> BoundCurve:
    """Evaluate the exact combined entropy along one family, W1 = W2.

    The grid is uniform in the input entropy (not the channel parameter);
    endpoints land exactly on (0, 0) and (ln 2, 0).
    """
    if grid_size < 2:
        raise ValueError(f"grid_size must be >= 2, got {grid_size}")
    a = order_value(alpha)
    kind_q = normalize_kind(kind)
    points = []
    for h in np.linspace(0.0, LN2, grid_size):
        w = channel_for_entropy(family, float(h), kind_q, a)
        combined = check_entropy(w, w, kind_q, a)
        points.append((float(h), float(combined - h)))
    return BoundCurve(alpha=a, entropy_kind=kind, family=family, points=tuple(points))


CURVE_CSV_HEADER = "h_in,delta_h,family,alpha,entropy_kind"


def curves_to_csv(curves) -> str:
    """Serialize curves with 17-significant-digit floats (reproducible bytes)."""
    lines = [CURVE_CSV_HEADER]
    for c in curves:
        for h, dh in c.points:
            # + 0.0 normalizes negative zero
            lines.append(f"{h + 0.0:.17g},{dh + 0.0:.17g},{c.family},{c.alpha:.17g},{c.entropy_kind}")
    return "\n".join(lines) + "\n"


def write_curves_csv(path, curves) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(curves_to_csv(curves))


def parse_channel_shorthand(text: str) -> CQChannel:
    """Parse "bsc:p", "bec:eps", "psc:f", or "random:seed[:dim]"."""
    parts = text.strip().split(":")
    tag = parts[0].lower()
    if tag in _FAMILY_BUILDERS and len(parts) == 2:
        return family_channel(tag, float(parts[1]))
    if tag == "random" and len(parts) in (2, 3):
        from .harness import sample_random_channel

        dim = int(parts[2]) if len(parts) == 3 else 2
        return sample_random_channel(int(parts[1]), 0, dim)
    raise ValueError(
        f"unrecognized channel shorthand {text!r}; expected bsc:p, bec:eps, psc:f, "
        "or random:seed[:dim]"
    )
