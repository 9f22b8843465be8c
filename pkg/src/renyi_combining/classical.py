"""Classical side of the library: joint distributions with a binary input,
the two conditional Renyi entropies that obey monotonicity, the chain-rule
reweighting between them, check/variable-node combining, and the extremal
BSC/BEC bound formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .binary import (
    CLAMP_TOL,
    LN2,
    binary_renyi_entropy,
    inverse_binary_renyi,
    is_shannon_order,
    order_value,
    star,
)

PROB_ATOL = 1e-12


@dataclass(frozen=True)
class JointDistribution:
    """Finite joint distribution p(x, y) with binary x.

    ``probs`` has shape (2, y_arity); entries are nonnegative and sum to 1
    within ``PROB_ATOL``.  Instances are immutable.
    """

    probs: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float)
        if p.ndim != 2 or p.shape[0] != 2 or p.shape[1] < 1:
            raise ValueError(f"probs must have shape (2, y_arity), got {p.shape}")
        if p.min() < -PROB_ATOL:
            raise ValueError(f"negative probability entry: {p.min():.3e}")
        total = p.sum()
        if abs(total - 1.0) > PROB_ATOL:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        p = np.clip(p, 0.0, None)
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @property
    def y_arity(self) -> int:
        return self.probs.shape[1]

    def y_marginal(self) -> np.ndarray:
        return self.probs.sum(axis=0)

    def to_json(self) -> dict:
        return {
            "x_arity": 2,
            "y_arity": self.y_arity,
            "probs": [float(v) for v in self.probs.reshape(-1)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "JointDistribution":
        if int(obj["x_arity"]) != 2:
            raise ValueError("only binary-input distributions are supported")
        n = int(obj["y_arity"])
        flat = np.asarray(obj["probs"], dtype=float)
        if flat.size != 2 * n:
            raise ValueError(f"probs has {flat.size} entries, expected {2 * n}")
        return cls(flat.reshape(2, n))


def bsc(p: float) -> JointDistribution:
    """Binary symmetric channel with uniform input: p(x,y) = (1-p)/2 on
    matching symbols and p/2 on mismatches."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"flip probability out of [0, 1]: {p!r}")
    return JointDistribution(np.array([[(1 - p) / 2, p / 2], [p / 2, (1 - p) / 2]]))


def bec(eps: float) -> JointDistribution:
    """Binary erasure channel with uniform input; erasure symbol has index 2."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"erasure probability out of [0, 1]: {eps!r}")
    return JointDistribution(
        np.array([[(1 - eps) / 2, 0.0, eps / 2], [0.0, (1 - eps) / 2, eps / 2]])
    )


def _shannon_conditional(p: np.ndarray) -> float:
    py = p.sum(axis=0)
    h = 0.0
    for y in range(p.shape[1]):
        if py[y] <= 0.0:
            continue
        for x in range(2):
            if p[x, y] > 0.0:
                h -= p[x, y] * math.log(p[x, y] / py[y])
    return h


def hayashi_entropy(dist: JointDistribution, alpha) -> float:
    """Conditional Renyi entropy that averages p(x|y)^alpha under p(y).

    Equals ``ln(sum_y p(y)^(1-alpha) sum_x p(x,y)^alpha) / (1-alpha)``;
    symbols with p(y) = 0 are skipped and 0^alpha counts as 0.
    """
    a = order_value(alpha)
    p = dist.probs
    if is_shannon_order(a):
        return _shannon_conditional(p)
    py = p.sum(axis=0)
    mask = py > 0.0
    s = float((py[mask] ** (1.0 - a) * (p[:, mask] ** a).sum(axis=0)).sum())
    return math.log(s) / (1.0 - a)


def arimoto_entropy(dist: JointDistribution, alpha) -> float:
    """Conditional Renyi entropy built from the alpha-norm of p(.|y).

    Equals ``(alpha/(1-alpha)) ln sum_y (sum_x p(x,y)^alpha)^(1/alpha)``.
    """
    a = order_value(alpha)
    p = dist.probs
    if is_shannon_order(a):
        return _shannon_conditional(p)
    py = p.sum(axis=0)
    mask = py > 0.0
    s = float(((p[:, mask] ** a).sum(axis=0) ** (1.0 / a)).sum())
    return a / (1.0 - a) * math.log(s)


CLASSICAL_KINDS = ("hayashi", "arimoto")


def classical_entropy(dist: JointDistribution, kind: str, alpha) -> float:
    if kind == "hayashi":
        return hayashi_entropy(dist, alpha)
    if kind == "arimoto":
        return arimoto_entropy(dist, alpha)
    raise ValueError(f"unknown classical entropy kind {kind!r}")


def chain_rule_transform(dist: JointDistribution, alpha) -> JointDistribution:
    """Reweight p to p_bar with p_bar(x,y) proportional to p(x|y)^alpha p(y).

    Under this map the Hayashi entropy at order alpha of the input equals
    the Arimoto entropy at order 1/alpha of the output.
    """
    a = order_value(alpha)
    if is_shannon_order(a):
        return dist
    p = dist.probs
    py = p.sum(axis=0)
    out = np.zeros_like(p)
    for y in range(p.shape[1]):
        if py[y] <= 0.0:
            continue
        out[:, y] = (p[:, y] / py[y]) ** a * py[y]
    return JointDistribution(out / out.sum())


def inverse_chain_rule_transform(dist: JointDistribution, alpha) -> JointDistribution:
    """Inverse of :func:`chain_rule_transform`; entrywise round trips hold."""
    a = order_value(alpha)
    if is_shannon_order(a):
        return dist
    p = dist.probs
    py = p.sum(axis=0)
    out = np.zeros_like(p)
    for y in range(p.shape[1]):
        if py[y] <= 0.0:
            continue
        u = (p[:, y] / py[y]) ** (1.0 / a)
        out[:, y] = u * py[y] * u.sum() ** (a - 1.0)
    return JointDistribution(out / out.sum())


def combine_check(p1: JointDistribution, p2: JointDistribution) -> JointDistribution:
    """Joint distribution of the mod-2 sum given both side variables.

    Output symbol (y1, y2) is flattened as ``y1 * |Y2| + y2``.
    """
    a, b = p1.probs, p2.probs
    rows = []
    for z in (0, 1):
        acc = np.outer(a[z], b[0]) + np.outer(a[1 - z], b[1])
        rows.append(acc.reshape(-1))
    return JointDistribution(np.vstack(rows))


def combine_variable(p1: JointDistribution, p2: JointDistribution) -> JointDistribution:
    """Joint distribution of the second input given the sum and both side
    variables.

    Composite side symbol (z, y1, y2) is flattened as
    ``z * |Y1| * |Y2| + y1 * |Y2| + y2``.
    """
    a, b = p1.probs, p2.probs
    rows = []
    for x2 in (0, 1):
        cols = [np.outer(a[z ^ x2], b[x2]).reshape(-1) for z in (0, 1)]
        rows.append(np.concatenate(cols))
    return JointDistribution(np.vstack(rows))


def _check_entropy_arg(h: float) -> float:
    h = float(h)
    if h < -CLAMP_TOL or h > LN2 + CLAMP_TOL:
        raise ValueError(f"entropy argument out of [0, ln 2]: {h!r}")
    return min(max(h, 0.0), LN2)


def bsc_bound_hayashi(h1, h2, alpha) -> float:
    """Extremal-BSC formula for the Hayashi entropy of a check node.

    Lower bound on the combined entropy for alpha in (0,2] u [3,inf),
    upper bound for alpha in [2,3]; exact at BSC inputs for every alpha.
    """
    h1, h2 = _check_entropy_arg(h1), _check_entropy_arg(h2)
    a = order_value(alpha)
    return binary_renyi_entropy(
        star(inverse_binary_renyi(h1, a), inverse_binary_renyi(h2, a)), a
    )


def bec_bound_hayashi(h1, h2, alpha) -> float:
    """Extremal-BEC formula for the Hayashi entropy of a check node.

    With K_i = e^((1-a) h_i) and d = 2^(1-a) this is
    ``ln[(d-K1)(d-K2)/(1-d) + d] / (1-a)`` (the additive d sits inside the
    logarithm; that reading is fixed by exactness at BEC inputs).  At the
    Shannon order the erasure parameterization is linear and the limit is
    ``h1 + h2 - h1 h2 / ln 2``.
    """
    h1, h2 = _check_entropy_arg(h1), _check_entropy_arg(h2)
    a = order_value(alpha)
    if is_shannon_order(a):
        return h1 + h2 - h1 * h2 / LN2
    # d - K_i = K_i expm1((1-a)(ln2 - h_i)); assembled in log1p form so the
    # evaluation stays stable arbitrarily close to a = 1.
    t = math.expm1((1.0 - a) * LN2)  # = d - 1
    k1 = math.exp((1.0 - a) * h1)
    k2 = math.exp((1.0 - a) * h2)
    e1 = math.expm1((1.0 - a) * (LN2 - h1))
    e2 = math.expm1((1.0 - a) * (LN2 - h2))
    bracket_m1 = t + k1 * k2 * e1 * e2 / (-t)
    return math.log1p(bracket_m1) / (1.0 - a)


def bsc_bound_arimoto(h1, h2, alpha) -> float:
    """Extremal-BSC formula for the Arimoto entropy of a variable node.

    Upper bound for alpha in (0,1/3] u [1/2,inf), lower for [1/3,1/2];
    exact at BSC inputs for every alpha.
    """
    a = order_value(alpha)
    return float(h1) + float(h2) - bsc_bound_hayashi(h1, h2, 1.0 / a)


def bec_bound_arimoto(h1, h2, alpha) -> float:
    """Extremal-BEC formula for the Arimoto entropy of a variable node.

    Lower bound for alpha in (0,1/3] u [1/2,inf); exact at BEC inputs.
    """
    a = order_value(alpha)
    return float(h1) + float(h2) - bec_bound_hayashi(h1, h2, 1.0 / a)
