"""Binary-input classical-quantum channels: CNOT combining, the chain-rule
transform, channel duality, pretty-good-measurement guessing, and the exact
order-2 / order-1/2 combined-entropy formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .binary import LN2, is_shannon_order, order_value
from .linalg import (
    SpectralMatrix,
    as_square_matrix,
    assert_hermitian,
    compress_roots,
    dense_of,
    dim_of,
    kron_psd,
    power_psd,
    trace_of,
)
from .states import (
    HybridState,
    conditional_renyi_entropy,
    quantum_chain_transform,
)

TRACE_ATOL = 1e-9
PRIOR_ATOL = 1e-11

# Orders at which a freshly built dual channel is self-tested against the
# entropy-complement contract.
_DUAL_SELF_TEST_ORDERS = (2.0, 0.5)
_DUAL_SELF_TEST_TOL = 1e-9


class DualityContractError(RuntimeError):
    """The dual construction failed its entropy-complement self-test."""


@dataclass(frozen=True)
class CQChannel:
    """Binary-input channel x -> sigma_x with quantum output.

    ``prior`` defaults to the uniform (1/2, 1/2) input distribution; the
    chain-rule transform of a generic channel tilts it, so non-uniform
    priors are carried explicitly.  Outputs may be dense matrices or
    factored :class:`~.linalg.SpectralMatrix` operators (transform results
    arrive factored to preserve their spectral tails).
    """

    sigma0: "np.ndarray | SpectralMatrix"
    sigma1: "np.ndarray | SpectralMatrix"
    prior: tuple[float, float] = (0.5, 0.5)

    def __post_init__(self):
        sigmas = []
        for tag, s in (("sigma0", self.sigma0), ("sigma1", self.sigma1)):
            if not isinstance(s, SpectralMatrix):
                s = as_square_matrix(s)
                assert_hermitian(s, atol=1e-10)
                if np.linalg.eigvalsh(s).min() < -1e-10:
                    raise ValueError(f"{tag} is not positive semidefinite")
                s = s.copy()
                s.setflags(write=False)
            tr = trace_of(s)
            if abs(tr - 1.0) > TRACE_ATOL:
                raise ValueError(f"{tag} has trace {tr!r}, expected 1")
            sigmas.append(s)
        if dim_of(sigmas[0]) != dim_of(sigmas[1]):
            raise ValueError(
                f"output dimensions differ: {dim_of(sigmas[0])} vs {dim_of(sigmas[1])}"
            )
        q0, q1 = (float(q) for q in self.prior)
        if q0 < -PRIOR_ATOL or q1 < -PRIOR_ATOL or abs(q0 + q1 - 1.0) > PRIOR_ATOL:
            raise ValueError(f"invalid input prior {self.prior!r}")
        object.__setattr__(self, "sigma0", sigmas[0])
        object.__setattr__(self, "sigma1", sigmas[1])
        object.__setattr__(self, "prior", (max(q0, 0.0), max(q1, 0.0)))

    @property
    def dim(self) -> int:
        return dim_of(self.sigma0)

    @property
    def sigmas(self):
        return (self.sigma0, self.sigma1)

    def to_state(self, input_name="X", output_name="B") -> HybridState:
        return HybridState.cq(
            self.prior, [self.sigma0, self.sigma1],
            classical_name=input_name, quantum_name=output_name,
        )

    def to_json(self) -> dict:
        def pairs(s):
            return [[float(v.real), float(v.imag)] for v in dense_of(s).reshape(-1)]

        obj = {"dim": self.dim, "sigma0": pairs(self.sigma0), "sigma1": pairs(self.sigma1)}
        if abs(self.prior[0] - 0.5) > 1e-15:
            obj["prior"] = [self.prior[0], self.prior[1]]
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "CQChannel":
        d = int(obj["dim"])

        def mat(pairs):
            flat = np.array([complex(re, im) for re, im in pairs])
            if flat.size != d * d:
                raise ValueError(f"expected {d * d} complex entries, got {flat.size}")
            return flat.reshape(d, d)

        prior = tuple(float(q) for q in obj.get("prior", (0.5, 0.5)))
        return cls(mat(obj["sigma0"]), mat(obj["sigma1"]), prior=prior)


def channel_entropy(w: CQChannel, kind: str, alpha) -> float:
    """Conditional entropy of the input given the quantum output."""
    return conditional_renyi_entropy(w.to_state(), "X", kind, alpha)


def combine_cq(w1: CQChannel, w2: CQChannel) -> HybridState:
    """State after a CNOT on the two classical inputs.

    Registers: classical Z (the mod-2 sum) and X2 (the second input kept as
    a copy), quantum B1 and B2.  The block labelled (z, x2) carries
    ``sigma1[z xor x2] (x) sigma2[x2]`` with weight ``q1[z xor x2] q2[x2]``.
    """
    blocks = {}
    for z in (0, 1):
        for x2 in (0, 1):
            w = w1.prior[z ^ x2] * w2.prior[x2]
            blocks[(z, x2)] = (w, kron_psd(w1.sigmas[z ^ x2], w2.sigmas[x2]))
    return HybridState(
        classical=(("Z", 2), ("X2", 2)),
        quantum=(("B1", w1.dim), ("B2", w2.dim)),
        blocks=blocks,
    )


def check_entropy(w1: CQChannel, w2: CQChannel, kind: str, alpha) -> float:
    """Entropy of the sum given both quantum outputs (second input forgotten)."""
    return conditional_renyi_entropy(combine_cq(w1, w2).trace_out("X2"), "Z", kind, alpha)


def variable_entropy(w1: CQChannel, w2: CQChannel, kind: str, alpha) -> float:
    """Entropy of the second input given the sum and both quantum outputs."""
    return conditional_renyi_entropy(combine_cq(w1, w2), "X2", kind, alpha)


def transform_channel(w: CQChannel, alpha) -> CQChannel:
    """Chain-rule transform of a channel, as a channel.

    The output states are the normalized
    ``((s0+s1)^((1-a)/2a) sigma_i (s0+s1)^((1-a)/2a))^a`` and the prior is
    tilted proportionally to the dropped normalizers, so the sandwiched
    entropy of the input at order alpha equals the up-arrow entropy of the
    output at order 1/alpha exactly (uniform priors survive only for
    symmetric channels).  Outputs are factored operators.
    """
    a = order_value(alpha)
    if is_shannon_order(a):
        return w
    out = quantum_chain_transform(w.to_state(), "B", a)
    w0, s0 = out.blocks[(0,)]
    w1, s1 = out.blocks[(1,)]
    return CQChannel(s0, s1, prior=(w0, w1))


def pgm_operators(w: CQChannel) -> list[np.ndarray]:
    """Pretty-good-measurement elements ``rho_B^-1/2 p_x sigma_x rho_B^-1/2``.

    They sum to the projector onto the support of the average output.
    """
    s0, s1 = dense_of(w.sigma0), dense_of(w.sigma1)
    rho_b = w.prior[0] * s0 + w.prior[1] * s1
    root = power_psd(rho_b, -0.5).dense()
    return [root @ (q * s) @ root for q, s in zip(w.prior, (s0, s1))]


def pretty_good_guess(w: CQChannel) -> float:
    """Success probability when guessing the input via the pretty good
    measurement; its negative log is the order-2 sandwiched entropy."""
    ms = pgm_operators(w)
    return float(
        sum(
            q * np.trace(dense_of(s) @ m).real
            for q, s, m in zip(w.prior, w.sigmas, ms)
        )
    )


def exact_check_entropy_alpha2(h1: float, h2: float) -> float:
    """Closed form for the order-2 sandwiched entropy of the sum.

    ``-ln[2 (1/2 - e^-h1)(1/2 - e^-h2) + 1/2]``; exact for every channel
    pair whose individual order-2 entropies are h1 and h2.
    """
    return -math.log(2.0 * (0.5 - math.exp(-h1)) * (0.5 - math.exp(-h2)) + 0.5)


def exact_variable_entropy_half(h1: float, h2: float) -> float:
    """Closed form for the order-1/2 up-arrow entropy of the second input.

    ``ln(1 + (e^h1 - 1)(e^h2 - 1))``; exact for every channel pair.
    """
    return math.log1p(math.expm1(h1) * math.expm1(h2))


def dual_channel(w: CQChannel, self_test: bool = True) -> CQChannel:
    """Complementary channel whose conjugate-order entropy complements the
    original's to ln 2.

    Construction: purify each output via the square-root embedding
    ``vec(sigma^1/2)`` on B (x) R, superpose the purifications with the
    prior amplitudes on a fresh qubit C, apply the z-th phase flip on C,
    and trace out B.  The outputs live on C (x) R (dimension 2 dim) and are
    assembled from the singular value decomposition of the amplitude
    matrix, i.e. in factored form.  A failed entropy-complement self-test
    raises :class:`DualityContractError` instead of returning a silently
    wrong channel.
    """
    d = w.dim
    # amplitude tensor of the superposed purification, indices (c, b, r)
    amp = np.zeros((2, d, d), dtype=complex)
    amp[0] = math.sqrt(w.prior[0]) * power_psd(w.sigma0, 0.5).dense()
    amp[1] = math.sqrt(w.prior[1]) * power_psd(w.sigma1, 0.5).dense()

    thetas = []
    for z in (0, 1):
        signed = amp.copy()
        if z:
            signed[1] *= -1.0
        # theta_z = M M^dag with M[(c,r), b] built from the amplitude tensor
        m = signed.transpose(0, 2, 1).reshape(2 * d, d)
        thetas.append(compress_roots([m]))
    dual = CQChannel(thetas[0], thetas[1])
    if self_test:
        for a in _DUAL_SELF_TEST_ORDERS:
            gap = (
                channel_entropy(w, "tilde_down", a)
                + channel_entropy(dual, "bar_up", 1.0 / a)
                - LN2
            )
            if abs(gap) > _DUAL_SELF_TEST_TOL:
                raise DualityContractError(
                    f"dual construction violates the entropy complement at order {a}: "
                    f"gap {gap:.3e}"
                )
    return dual


def symmetry_check(w1: CQChannel, w2: CQChannel, alpha) -> tuple[float, float]:
    """Both sides of the combining-symmetry identity.

    Left: excess of the combined sandwiched entropy over the mean of the
    individual ones.  Right: the same expression for the dual of the
    chain-rule transform of each channel.  The two agree for every pair.
    """
    a = order_value(alpha)

    def excess(u1, u2):
        return check_entropy(u1, u2, "tilde_down", a) - 0.5 * (
            channel_entropy(u1, "tilde_down", a) + channel_entropy(u2, "tilde_down", a)
        )

    lhs = excess(w1, w2)
    rhs = excess(
        dual_channel(transform_channel(w1, a), self_test=False),
        dual_channel(transform_channel(w2, a), self_test=False),
    )
    return lhs, rhs
