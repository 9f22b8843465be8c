"""Classical information combining: the two conditional Renyi entropies,
the chain-rule reweighting that connects them, and the extremal BSC/BEC
bound formulas with their tightness.

Run as: python3 demos/01_classical_combining.py
"""

import numpy as np

from renyi_combining import (
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
)

print("== Two conditional Renyi entropies ==")
w = bsc(0.1)
for a in (0.5, 1.0, 2.0, 5.0):
    print(
        f"  order {a:>3}: averaging-kind {hayashi_entropy(w, a):.6f} nats, "
        f"norm-kind {arimoto_entropy(w, a):.6f} nats (equal on symmetric channels)"
    )

print("\n== Chain-rule reweighting swaps the kinds and inverts the order ==")
rng = np.random.default_rng(1)
p = rng.random((2, 4))
from renyi_combining import JointDistribution

dist = JointDistribution(p / p.sum())
for a in (0.5, 2.0, 3.0):
    bar = chain_rule_transform(dist, a)
    print(
        f"  alpha={a}: H_avg[p] = {hayashi_entropy(dist, a):.12f}   "
        f"H_norm[p_bar] at 1/alpha = {arimoto_entropy(bar, 1 / a):.12f}"
    )

print("\n== Check-node and variable-node synthesis ==")
p1, p2 = bsc(0.1), bsc(0.2)
q = combine_check(p1, p2)
r = combine_variable(p1, p2)
a = 2.0
print(f"  BSC(0.1) [+] BSC(0.2) at order 2: {hayashi_entropy(q, a):.6f}  (= entropy of BSC(0.26))")
print(f"  conservation at order 1: "
      f"{hayashi_entropy(q, 1.0) + hayashi_entropy(r, 1.0):.12f} vs "
      f"{hayashi_entropy(p1, 1.0) + hayashi_entropy(p2, 1.0):.12f}")

print("\n== Extremal bounds, exact at their own families for every order ==")
for a in (0.5, 1.5, 2.0, 3.0, 5.0):
    h1, h2 = hayashi_entropy(bec(0.3), a), hayashi_entropy(bec(0.6), a)
    exact = hayashi_entropy(combine_check(bec(0.3), bec(0.6)), a)
    print(f"  order {a:>3}: BEC formula {bec_bound_hayashi(h1, h2, a):.12f} "
          f"vs exact combined {exact:.12f}")

print("\n  the BSC formula is the lower bound off the erasure family:")
rng = np.random.default_rng(2)
p = rng.random((2, 5))
dist = JointDistribution(p / p.sum())
for a in (0.5, 1.5, 5.0):
    h = hayashi_entropy(dist, a)
    combined = hayashi_entropy(combine_check(dist, dist), a)
    lo = bsc_bound_hayashi(h, h, a)
    hi = bec_bound_hayashi(h, h, a)
    print(f"  order {a:>3}: {lo:.6f} <= {combined:.6f} <= {hi:.6f}")

print("\n== Variable-node bounds (norm-kind entropy) ==")
for a in (0.3, 0.45, 2.0):
    g1, g2 = arimoto_entropy(bsc(0.1), a), arimoto_entropy(bsc(0.23), a)
    varent = arimoto_entropy(combine_variable(bsc(0.1), bsc(0.23)), a)
    print(f"  order {a:>4}: BSC formula {bsc_bound_arimoto(g1, g2, a):.12f} vs exact {varent:.12f}")
    g1, g2 = arimoto_entropy(bec(0.3), a), arimoto_entropy(bec(0.6), a)
    varent = arimoto_entropy(combine_variable(bec(0.3), bec(0.6)), a)
    print(f"            BEC formula {bec_bound_arimoto(g1, g2, a):.12f} vs exact {varent:.12f}")
