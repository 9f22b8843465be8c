"""The exactly solvable orders: pretty-good-measurement guessing at order 2
and the closed combining formulas at orders 2 and 1/2.

Run as: python3 demos/03_order_two_exact.py
"""

import math

from renyi_combining import (
    bsc_channel,
    channel_entropy,
    check_entropy,
    exact_check_entropy_alpha2,
    exact_variable_entropy_half,
    pretty_good_guess,
    psc_channel,
    sample_random_channel,
    variable_entropy,
)

print("== Pretty good measurement ==")
for label, w in (("BSC(0.1)", bsc_channel(0.1)), ("pure pair, overlap 0.5", psc_channel(0.5))):
    pg = pretty_good_guess(w)
    print(f"  {label}: P_guess = {pg:.6f}, -ln P_guess = {-math.log(pg):.6f}, "
          f"order-2 sandwiched entropy = {channel_entropy(w, 'tilde_down', 2.0):.6f}")

print("\n== Order-2 closed form for the combined sum entropy ==")
for seed in (3, 4):
    w1 = sample_random_channel(seed, 0, 2)
    w2 = sample_random_channel(seed, 1, 2)
    h1 = channel_entropy(w1, "tilde_down", 2.0)
    h2 = channel_entropy(w2, "tilde_down", 2.0)
    exact = check_entropy(w1, w2, "tilde_down", 2.0)
    print(f"  exact {exact:.12f} vs formula {exact_check_entropy_alpha2(h1, h2):.12f}")

print("\n== Order-1/2 closed form for the variable-node entropy ==")
for seed in (5, 6):
    w1 = sample_random_channel(seed, 0, 2)
    w2 = sample_random_channel(seed, 1, 2)
    g1 = channel_entropy(w1, "bar_up", 0.5)
    g2 = channel_entropy(w2, "bar_up", 0.5)
    exact = variable_entropy(w1, w2, "bar_up", 0.5)
    print(f"  exact {exact:.12f} vs formula {exact_variable_entropy_half(g1, g2):.12f}")

print("\n== Pure-state channels at order 1/2 ==")
for f in (0.0, 0.3, 0.5, 0.8):
    w = psc_channel(f)
    h = channel_entropy(w, "bar_up", 0.5)
    print(f"  overlap {f}: single-channel entropy {h:.6f} = ln(1 + f^2) = {math.log(1 + f * f):.6f}")
