"""Hybrid classical-quantum states and their conditional Renyi entropies.

A :class:`HybridState` stores a density operator that is block diagonal over
the outcomes of its classical registers: one (weight, density matrix) pair
per outcome tuple, with the matrix living on the tensor product of the
quantum registers.  All entropies and transforms are evaluated blockwise,
which is exact for this family of states and keeps every eigenproblem tiny.

Block matrices may be plain ndarrays or :class:`~.linalg.SpectralMatrix`
instances; chain-rule transforms emit the factored form so that querying the
output at the conjugate order keeps full precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .binary import is_shannon_order, order_value
from .linalg import (
    SpectralMatrix,
    as_square_matrix,
    assert_hermitian,
    compress_roots,
    dense_of,
    dim_of,
    embed_operator,
    kron_psd,
    matrix_power_on_support,
    power_psd,
    root_factor,
    root_trace_out,
    sandwich_factored,
    sandwich_trace_power,
    spectral_entropy,
    spectral_of,
    trace_of,
    trace_power,
)

__all__ = [
    "HybridState",
    "QUANTUM_KINDS",
    "classical_embedding",
    "conditional_renyi_entropy",
    "petz_down_entropy",
    "petz_up_entropy",
    "product_state",
    "quantum_chain_transform",
    "sandwiched_down_entropy",
    "von_neumann_conditional",
]

WEIGHT_ATOL = 1e-11
TRACE_ATOL = 1e-9

# Blocks lighter than this are dropped: they do not contribute to the
# operator and would only poison negative powers.
WEIGHT_FLOOR = 1e-15

QUANTUM_KINDS = ("tilde_down", "bar_up", "bar_down")


@dataclass(frozen=True)
class HybridState:
    """Classical registers (x) quantum registers in block-diagonal form.

    ``classical`` and ``quantum`` are tuples of (name, size) pairs; register
    names must be unique across both lists.  ``blocks`` maps a classical
    outcome tuple to ``(weight, matrix)`` where the matrix is a trace-1 PSD
    operator on the tensor product of the quantum registers (a 1x1 matrix if
    there are none).  Weights are nonnegative and sum to 1.
    """

    classical: tuple[tuple[str, int], ...]
    quantum: tuple[tuple[str, int], ...]
    blocks: dict[tuple[int, ...], tuple[float, "np.ndarray | SpectralMatrix"]] = field(repr=False)

    def __post_init__(self):
        names = [n for n, _ in self.classical] + [n for n, _ in self.quantum]
        if len(set(names)) != len(names):
            raise ValueError(f"register names must be unique, got {names}")
        arities = tuple(int(s) for _, s in self.classical)
        qdim = math.prod(self.quantum_dims) if self.quantum else 1
        clean: dict[tuple[int, ...], tuple[float, np.ndarray | SpectralMatrix]] = {}
        total = 0.0
        for key, (w, m) in self.blocks.items():
            key = tuple(int(k) for k in key)
            if len(key) != len(arities) or any(not 0 <= k < a for k, a in zip(key, arities)):
                raise ValueError(f"block key {key} incompatible with classical arities {arities}")
            w = float(w)
            if w < -WEIGHT_ATOL:
                raise ValueError(f"negative block weight {w!r} at {key}")
            total += max(w, 0.0)
            if w <= WEIGHT_FLOOR:
                continue
            if dim_of(m) != qdim:
                raise ValueError(f"block at {key} has dimension {dim_of(m)}, expected {qdim}")
            if not isinstance(m, SpectralMatrix):
                m = as_square_matrix(m)
                assert_hermitian(m, atol=1e-10)
                m = m.copy()
                m.setflags(write=False)
            tr = trace_of(m)
            if abs(tr - 1.0) > TRACE_ATOL:
                raise ValueError(f"block at {key} has trace {tr!r}, expected 1")
            clean[key] = (w, m)
        if abs(total - 1.0) > WEIGHT_ATOL:
            raise ValueError(f"block weights sum to {total!r}, expected 1")
        object.__setattr__(self, "blocks", clean)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_quantum(cls, rho, dims, names=None) -> "HybridState":
        """Wrap a plain density matrix on ``dims`` as a purely quantum state."""
        dims = tuple(int(d) for d in dims)
        if names is None:
            names = tuple(chr(ord("A") + i) for i in range(len(dims)))
        tr = trace_of(rho)
        if abs(tr - 1.0) > TRACE_ATOL:
            raise ValueError(f"density matrix has trace {tr!r}, expected 1")
        quantum = tuple((str(n), d) for n, d in zip(names, dims))
        return cls(classical=(), quantum=quantum, blocks={(): (1.0, rho)})

    @classmethod
    def cq(cls, weights, matrices, classical_name="X", quantum_name="B") -> "HybridState":
        """Single classical register correlated with one quantum register."""
        weights = [float(w) for w in weights]
        if len(weights) != len(matrices):
            raise ValueError("weights and matrices must have equal length")
        dim = dim_of(matrices[0])
        blocks = {(i,): (w, m) for i, (w, m) in enumerate(zip(weights, matrices))}
        return cls(
            classical=((classical_name, len(weights)),),
            quantum=((quantum_name, dim),),
            blocks=blocks,
        )

    # -- register bookkeeping -----------------------------------------

    @property
    def quantum_dims(self) -> tuple[int, ...]:
        return tuple(int(d) for _, d in self.quantum)

    @property
    def register_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.classical) + tuple(n for n, _ in self.quantum)

    def _resolve(self, target) -> set[str]:
        names = {target} if isinstance(target, str) else set(target)
        unknown = names - set(self.register_names)
        if unknown:
            raise ValueError(f"unknown register(s) {sorted(unknown)}; have {self.register_names}")
        return names

    # -- structural operations ----------------------------------------

    def trace_out(self, name: str) -> "HybridState":
        """Remove one register, classical (marginalize) or quantum (partial
        trace).  Resulting blocks are factored so mixture tails survive."""
        self._resolve(name)
        cl_names = [n for n, _ in self.classical]
        if name in cl_names:
            idx = cl_names.index(name)
            merged: dict[tuple[int, ...], list] = {}
            for key, (w, m) in self.blocks.items():
                merged.setdefault(key[:idx] + key[idx + 1 :], []).append((w, m))
            blocks = {}
            for k, members in merged.items():
                wsum = sum(w for w, _ in members)
                roots = [math.sqrt(w / wsum) * root_factor(m) for w, m in members]
                blocks[k] = (wsum, compress_roots(roots))
            classical = self.classical[:idx] + self.classical[idx + 1 :]
            return HybridState(classical=classical, quantum=self.quantum, blocks=blocks)
        q_names = [n for n, _ in self.quantum]
        axis = q_names.index(name)
        dims = self.quantum_dims
        blocks = {
            k: (w, compress_roots([root_trace_out(root_factor(m), dims, [axis])]))
            for k, (w, m) in self.blocks.items()
        }
        quantum = self.quantum[:axis] + self.quantum[axis + 1 :]
        return HybridState(classical=self.classical, quantum=quantum, blocks=blocks)

    def to_density_matrix(self) -> np.ndarray:
        """Dense operator with classical registers first (declared order)."""
        arities = [a for _, a in self.classical]
        qdim = math.prod(self.quantum_dims) if self.quantum else 1
        total = math.prod(arities) * qdim if arities else qdim
        out = np.zeros((total, total), dtype=complex)
        for key, (w, m) in self.blocks.items():
            flat = 0
            for k, a in zip(key, arities):
                flat = flat * a + k
            sl = slice(flat * qdim, (flat + 1) * qdim)
            out[sl, sl] = w * dense_of(m)
        return out


def classical_embedding(dist, x_name="X", y_name="Y") -> HybridState:
    """Embed a classical joint distribution as a CQ state with diagonal
    side-information blocks."""
    p = dist.probs
    mats, weights = [], []
    for x in range(2):
        px = float(p[x].sum())
        weights.append(px)
        if px > 0:
            mats.append(np.diag(p[x] / px).astype(complex))
        else:
            mats.append(np.eye(p.shape[1], dtype=complex) / p.shape[1])
    return HybridState.cq(weights, mats, classical_name=x_name, quantum_name=y_name)


def product_state(s1: HybridState, s2: HybridState) -> HybridState:
    """Tensor product of two hybrid states (register names must not clash)."""
    blocks = {}
    for k1, (w1, m1) in s1.blocks.items():
        for k2, (w2, m2) in s2.blocks.items():
            blocks[k1 + k2] = (w1 * w2, kron_psd(m1, m2))
    return HybridState(
        classical=s1.classical + s2.classical,
        quantum=s1.quantum + s2.quantum,
        blocks=blocks,
    )


# -- blockwise evaluation ----------------------------------------------


def _grouped(state: HybridState, target):
    """Split registers into target (A) and conditioning (B) parts and group
    the blocks by the B-side classical outcomes."""
    names = state._resolve(target)
    cl_names = [n for n, _ in state.classical]
    q_names = [n for n, _ in state.quantum]
    a_q = [i for i, n in enumerate(q_names) if n in names]
    b_q = [i for i, n in enumerate(q_names) if n not in names]
    b_cl = [i for i, n in enumerate(cl_names) if n not in names]
    groups: dict[tuple[int, ...], list] = {}
    for key, (w, m) in state.blocks.items():
        mkey = tuple(key[i] for i in b_cl)
        groups.setdefault(mkey, []).append((w, m))
    return groups, a_q, b_q


def _conditioning_block(members, dims, a_q) -> SpectralMatrix:
    """B-side reduction of one group: sum of weighted members with the
    A-side quantum axes traced out, in factored form (1x1 when no quantum
    axis remains)."""
    roots = []
    for w, m in members:
        if w <= 0.0:
            continue
        r = root_factor(m)
        if a_q:
            r = root_trace_out(r, dims, a_q)
        roots.append(math.sqrt(w) * r)
    return compress_roots(roots)


def von_neumann_conditional(state: HybridState, target) -> float:
    """H(A|B) = H(AB) - H(B) for the named target register(s)."""
    groups, a_q, _ = _grouped(state, target)
    dims = state.quantum_dims
    h_ab = sum(spectral_entropy(m, w) for members in groups.values() for w, m in members)
    h_b = sum(
        spectral_entropy(_conditioning_block(members, dims, a_q))
        for members in groups.values()
    )
    return float(h_ab - h_b)


def sandwiched_down_entropy(state: HybridState, target, alpha) -> float:
    """Sandwiched conditional Renyi entropy (down-arrow variant).

    ``(1/(1-a)) ln Tr (rho_B^((1-a)/2a) rho_AB rho_B^((1-a)/2a))^a`` with A
    the target register(s) and B everything else, evaluated block by block.
    Orders within the Shannon window return the von Neumann conditional
    entropy.
    """
    a = order_value(alpha)
    if is_shannon_order(a):
        return von_neumann_conditional(state, target)
    groups, a_q, b_q = _grouped(state, target)
    dims = state.quantum_dims
    c = (1.0 - a) / (2.0 * a)
    s = 0.0
    for members in groups.values():
        omega = _conditioning_block(members, dims, a_q)
        g = embed_operator(matrix_power_on_support(omega, c), dims, b_q)
        for w, m in members:
            s += w**a * sandwich_trace_power(g, m, a)
    return math.log(s) / (1.0 - a)


def petz_up_entropy(state: HybridState, target, alpha) -> float:
    """Up-arrow conditional Renyi entropy from the alpha-power marginal.

    ``(a/(1-a)) ln Tr (Tr_A rho_AB^a)^(1/a)``, blockwise.  Powers of
    factored blocks act on their eigenvalues, so transformed states are
    queried at the conjugate order without precision loss.
    """
    a = order_value(alpha)
    if is_shannon_order(a):
        return von_neumann_conditional(state, target)
    groups, a_q, _ = _grouped(state, target)
    dims = state.quantum_dims
    s = 0.0
    for members in groups.values():
        roots = []
        for w, m in members:
            if w <= 0.0:
                continue
            r = root_factor(power_psd(m, a))
            if a_q:
                r = root_trace_out(r, dims, a_q)
            roots.append(w ** (a / 2.0) * r)
        s += trace_power(compress_roots(roots), 1.0 / a)
    return a / (1.0 - a) * math.log(s)


def petz_down_entropy(state: HybridState, target, alpha) -> float:
    """Down-arrow Petz conditional Renyi entropy.

    ``(1/(1-a)) ln Tr[rho_AB^a rho_B^(1-a)]``, blockwise.  Used only by the
    experiment harness; not part of the chain-rule machinery.
    """
    a = order_value(alpha)
    if is_shannon_order(a):
        return von_neumann_conditional(state, target)
    groups, a_q, b_q = _grouped(state, target)
    dims = state.quantum_dims
    s = 0.0
    for members in groups.values():
        omega = _conditioning_block(members, dims, a_q)
        g = embed_operator(matrix_power_on_support(omega, 1.0 - a), dims, b_q)
        for w, m in members:
            # Tr[m^a g] as sum_i lam_i^a <v_i|g|v_i> keeps factored tails
            f = spectral_of(m)
            mask = f.eigenvalues > 0.0
            if not mask.any():
                continue
            lam_a = np.exp(a * np.log(f.eigenvalues[mask]))
            vecs = f.vectors[:, mask]
            quad = np.einsum("ji,jk,ki->i", vecs.conj(), g, vecs).real
            s += w**a * float((lam_a * quad).sum())
    return math.log(s) / (1.0 - a)


_KIND_DISPATCH = {
    "tilde_down": sandwiched_down_entropy,
    "bar_up": petz_up_entropy,
    "bar_down": petz_down_entropy,
}


def conditional_renyi_entropy(state: HybridState, target, kind: str, alpha) -> float:
    """Dispatch on the entropy-kind tag: tilde_down, bar_up, or bar_down."""
    try:
        fn = _KIND_DISPATCH[kind]
    except KeyError:
        raise ValueError(f"unknown entropy kind {kind!r}; expected one of {QUANTUM_KINDS}") from None
    return fn(state, target, alpha)


def quantum_chain_transform(state: HybridState, conditioning, alpha) -> HybridState:
    """Chain-rule reweighting of a hybrid state against its reduction on the
    ``conditioning`` registers.

    Returns the normalized ``(rho_C^((1-a)/2a) rho rho_C^((1-a)/2a))^a``,
    under which the sandwiched down entropy at order alpha conditioned on C
    equals the up-arrow entropy at order 1/alpha of the output.  Output
    blocks are factored, so the conjugate-order query is exact.  The
    Shannon window returns the state unchanged.
    """
    a = order_value(alpha)
    if is_shannon_order(a):
        return state
    cond = state._resolve(conditioning)
    cl_names = [n for n, _ in state.classical]
    q_names = [n for n, _ in state.quantum]
    c_q = [i for i, n in enumerate(q_names) if n in cond]
    out_q = [i for i, n in enumerate(q_names) if n not in cond]
    c_cl = [i for i, n in enumerate(cl_names) if n in cond]
    dims = state.quantum_dims
    exponent = (1.0 - a) / (2.0 * a)

    groups: dict[tuple[int, ...], list] = {}
    for key, (w, m) in state.blocks.items():
        groups.setdefault(tuple(key[i] for i in c_cl), []).append((key, w, m))

    raw: dict[tuple[int, ...], tuple[float, SpectralMatrix]] = {}
    total = 0.0
    for members in groups.values():
        roots = []
        for _, w, m in members:
            if w <= 0.0:
                continue
            r = root_factor(m)
            if out_q:
                r = root_trace_out(r, dims, out_q)
            roots.append(math.sqrt(w) * r)
        omega = compress_roots(roots)
        g = embed_operator(matrix_power_on_support(omega, exponent), dims, c_q)
        for key, w, m in members:
            powered = sandwich_factored(g, m).power(a)
            norm = powered.trace()
            weight = w**a * norm
            total += weight
            if weight > 0.0 and norm > 0.0:
                raw[key] = (weight, SpectralMatrix(powered.vectors, powered.eigenvalues / norm))
    blocks = {k: (w / total, m) for k, (w, m) in raw.items()}
    return HybridState(classical=state.classical, quantum=state.quantum, blocks=blocks)
