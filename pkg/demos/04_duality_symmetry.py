"""Channel duality and the symmetry it forces on any optimal combining
bound.

Run as: python3 demos/04_duality_symmetry.py
"""

import math

from renyi_combining import (
    LN2,
    bec_channel,
    bsc_channel,
    channel_entropy,
    dual_channel,
    sample_random_channel,
    symmetry_check,
)

print("== Dual channels complement the entropy to ln 2 ==")
w = sample_random_channel(11, 0, 2)
wd = dual_channel(w)
for a in (0.5, 1.3, 2.0, 4.0):
    s = channel_entropy(w, "tilde_down", a) + channel_entropy(wd, "bar_up", 1 / a)
    print(f"  alpha={a}: H(W) + H_conj(W_dual) = {s:.14f}  (ln 2 = {LN2:.14f})")

print("\n== The erasure family is closed under duality ==")
d = dual_channel(bec_channel(0.3))
for a in (0.5, 2.0):
    print(
        f"  alpha={a}: H(BEC(0.3) dual) = {channel_entropy(d, 'tilde_down', a):.12f} "
        f"= H(BEC(0.7)) = {channel_entropy(bec_channel(0.7), 'tilde_down', a):.12f}"
    )

print("\n== A symmetric-channel dual is a pure-state channel in disguise ==")
wd = dual_channel(bsc_channel(0.15))
for a in (0.5, 2.0):
    print(
        f"  alpha={a}: complement of the dual {LN2 - channel_entropy(wd, 'bar_up', 1 / a):.12f} "
        f"vs h_alpha(0.15) {channel_entropy(bsc_channel(0.15), 'tilde_down', a):.12f}"
    )

print("\n== Combining symmetry: the excess over the mean input entropy is ==")
print("   invariant under the dual-of-transform reflection")
w1 = sample_random_channel(12, 0, 2)
w2 = sample_random_channel(12, 1, 2)
for a in (0.5, 1.2, 2.0, 5.0):
    lhs, rhs = symmetry_check(w1, w2, a)
    print(f"  alpha={a}: {lhs:+.12f} vs {rhs:+.12f}  (difference {abs(lhs - rhs):.2e})")
