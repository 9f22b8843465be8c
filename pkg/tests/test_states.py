import math

import numpy as np
import pytest

from renyi_combining.binary import LN2
from renyi_combining.classical import (
    JointDistribution,
    arimoto_entropy,
    chain_rule_transform,
    hayashi_entropy,
)
from renyi_combining.linalg import dense_of, partial_trace
from renyi_combining.states import (
    HybridState,
    classical_embedding,
    petz_down_entropy,
    petz_up_entropy,
    product_state,
    quantum_chain_transform,
    sandwiched_down_entropy,
    von_neumann_conditional,
)

ALPHAS = (0.3, 0.5, 0.9, 1.1, 1.5, 2.0, 3.0, 5.0)


def rand_psd(rng, d):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    w = g @ g.conj().T
    return w / np.trace(w).real


def rand_pure(rng, dims):
    total = int(np.prod(dims))
    v = rng.standard_normal(total) + 1j * rng.standard_normal(total)
    v /= np.linalg.norm(v)
    return HybridState.from_quantum(np.outer(v, v.conj()), dims)


def rand_cq(rng, d, k=2):
    w = rng.random(k)
    w /= w.sum()
    return HybridState.cq(w, [rand_psd(rng, d) for _ in range(k)])


# --- dense reference implementations, straight from the definitions ------


def _dense_power(m, p):
    lam, v = np.linalg.eigh(m)
    top = lam.max()
    out = np.where(lam > 1e-12 * top, lam, 1.0) ** p
    out[lam <= 1e-12 * top] = 0.0
    return (v * out) @ v.conj().T


def dense_tilde_down(rho, d_a, d_b, alpha):
    rho_b = partial_trace(rho, (d_a, d_b), 0)
    g = np.kron(np.eye(d_a), _dense_power(rho_b, (1 - alpha) / (2 * alpha)))
    lam = np.linalg.eigvalsh(g @ rho @ g)
    lam = lam[lam > 1e-14 * lam.max()]
    return math.log((lam**alpha).sum()) / (1 - alpha)


def dense_bar_up(rho, d_a, d_b, alpha):
    m = partial_trace(_dense_power(rho, alpha), (d_a, d_b), 0)
    lam = np.linalg.eigvalsh(m)
    lam = lam[lam > 1e-14 * lam.max()]
    return alpha / (1 - alpha) * math.log((lam ** (1 / alpha)).sum())


def dense_bar_down(rho, d_a, d_b, alpha):
    rho_b = partial_trace(rho, (d_a, d_b), 0)
    g = np.kron(np.eye(d_a), _dense_power(rho_b, 1 - alpha))
    val = np.trace(_dense_power(rho, alpha) @ g).real
    return math.log(val) / (1 - alpha)


def dense_vn(rho, d_a, d_b):
    def ent(m):
        lam = np.linalg.eigvalsh(m)
        lam = lam[lam > 1e-14]
        return float(-(lam * np.log(lam)).sum())

    return ent(rho) - ent(partial_trace(rho, (d_a, d_b), 0))


class TestHybridState:
    def test_validation(self):
        with pytest.raises(ValueError, match="unique"):
            HybridState(
                classical=(("X", 2),),
                quantum=(("X", 2),),
                blocks={(0,): (0.5, np.eye(2) / 2), (1,): (0.5, np.eye(2) / 2)},
            )
        with pytest.raises(ValueError, match="sum"):
            HybridState.cq([0.5, 0.6], [np.eye(2) / 2, np.eye(2) / 2])
        with pytest.raises(ValueError, match="trace"):
            HybridState.cq([0.5, 0.5], [np.eye(2), np.eye(2) / 2])

    def test_zero_weight_blocks_dropped(self):
        st = HybridState.cq([1.0, 0.0], [np.eye(2) / 2, np.eye(2)])
        assert set(st.blocks) == {(0,)}

    def test_to_density_matrix_layout(self):
        st = HybridState.cq([0.25, 0.75], [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])])
        dense = st.to_density_matrix()
        assert np.allclose(np.diag(dense).real, [0.25, 0.0, 0.0, 0.75])

    def test_trace_out_classical(self):
        rng = np.random.default_rng(0)
        st = rand_cq(rng, 3)
        reduced = st.trace_out("X")
        expect = sum(w * dense_of(m) for w, m in st.blocks.values())
        assert np.abs(dense_of(reduced.blocks[()][1]) - expect).max() <= 1e-12

    def test_trace_out_quantum(self):
        rng = np.random.default_rng(1)
        st = rand_pure(rng, (2, 3, 2))
        reduced = st.trace_out("B")
        direct = partial_trace(
            st.to_density_matrix().reshape(2, 3, 2, 2, 3, 2).transpose(0, 2, 1, 3, 5, 4).reshape(12, 12),
            (4, 3),
            1,
        )
        assert np.abs(reduced.to_density_matrix() - direct).max() <= 1e-12

    def test_product_state(self):
        rng = np.random.default_rng(2)
        s1 = HybridState.cq([0.4, 0.6], [rand_psd(rng, 2), rand_psd(rng, 2)], "X", "B")
        s2 = HybridState.from_quantum(rand_psd(rng, 3), (3,), names=("C",))
        prod = product_state(s1, s2)
        assert prod.register_names == ("X", "B", "C")
        assert abs(np.trace(prod.to_density_matrix()).real - 1.0) <= 1e-12


class TestAgainstDenseReference:
    def test_cq_states(self):
        rng = np.random.default_rng(3)
        for _ in range(6):
            st = rand_cq(rng, 3)
            rho = st.to_density_matrix()
            for a in ALPHAS:
                assert abs(sandwiched_down_entropy(st, "X", a) - dense_tilde_down(rho, 2, 3, a)) <= 1e-10
                assert abs(petz_up_entropy(st, "X", a) - dense_bar_up(rho, 2, 3, a)) <= 1e-10
                assert abs(petz_down_entropy(st, "X", a) - dense_bar_down(rho, 2, 3, a)) <= 1e-10
            assert abs(von_neumann_conditional(st, "X") - dense_vn(rho, 2, 3)) <= 1e-10

    def test_quantum_target(self):
        rng = np.random.default_rng(4)
        st = rand_pure(rng, (2, 3))
        mixed = HybridState.from_quantum(
            0.6 * st.to_density_matrix() + 0.4 * np.kron(rand_psd(rng, 2), rand_psd(rng, 3)),
            (2, 3),
        )
        rho = mixed.to_density_matrix()
        for a in (0.5, 2.0, 3.0):
            assert abs(sandwiched_down_entropy(mixed, "A", a) - dense_tilde_down(rho, 2, 3, a)) <= 1e-10
            assert abs(petz_up_entropy(mixed, "A", a) - dense_bar_up(rho, 2, 3, a)) <= 1e-10

    def test_composite_target(self):
        rng = np.random.default_rng(5)
        st = rand_pure(rng, (2, 2, 2))
        rho = st.to_density_matrix()
        for a in (0.5, 2.0):
            assert (
                abs(sandwiched_down_entropy(st, ("A", "B"), a) - dense_tilde_down(rho, 4, 2, a))
                <= 1e-10
            )


class TestSpecialStates:
    def test_indistinguishable_outputs(self):
        sig = np.diag([0.7, 0.3]).astype(complex)
        st = HybridState.cq([0.5, 0.5], [sig, sig])
        for a in ALPHAS:
            assert abs(sandwiched_down_entropy(st, "X", a) - LN2) <= 1e-12
            assert abs(petz_up_entropy(st, "X", a) - LN2) <= 1e-12
            assert abs(petz_down_entropy(st, "X", a) - LN2) <= 1e-12

    def test_orthogonal_pure_outputs(self):
        st = HybridState.cq([0.5, 0.5], [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])])
        for a in ALPHAS:
            assert abs(sandwiched_down_entropy(st, "X", a)) <= 1e-12
            assert abs(petz_up_entropy(st, "X", a)) <= 1e-12

    def test_shannon_window_dispatch(self):
        rng = np.random.default_rng(6)
        st = rand_cq(rng, 2)
        vn = von_neumann_conditional(st, "X")
        assert sandwiched_down_entropy(st, "X", 1.0) == vn
        assert abs(sandwiched_down_entropy(st, "X", 1.0 + 1e-4) - vn) <= 1e-3
        assert abs(petz_down_entropy(st, "X", 1.0 - 1e-4) - vn) <= 1e-3


class TestClassicalReduction:
    def test_all_three_entropies(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            p = rng.random((2, int(rng.integers(2, 7))))
            dist = JointDistribution(p / p.sum())
            st = classical_embedding(dist)
            probs = dist.probs
            py = probs.sum(axis=0)
            for a in ALPHAS:
                assert abs(sandwiched_down_entropy(st, "X", a) - hayashi_entropy(dist, a)) <= 1e-10
                assert abs(petz_up_entropy(st, "X", a) - arimoto_entropy(dist, a)) <= 1e-10
                mask = py > 0
                direct = (
                    math.log(((py[mask] ** (1 - a)) * (probs[:, mask] ** a).sum(axis=0)).sum())
                    / (1 - a)
                )
                assert abs(petz_down_entropy(st, "X", a) - direct) <= 1e-10

    def test_transform_agrees_with_classical(self):
        rng = np.random.default_rng(8)
        p = rng.random((2, 4))
        dist = JointDistribution(p / p.sum())
        st = classical_embedding(dist)
        for a in (0.5, 2.0, 3.0):
            bar_c = chain_rule_transform(dist, a)
            bar_q = quantum_chain_transform(st, "Y", a)
            for x in range(2):
                w, m = bar_q.blocks[(x,)]
                assert np.abs(w * np.diag(dense_of(m)).real - bar_c.probs[x]).max() <= 1e-10


class TestChainRuleAndDuality:
    def test_lemma_identity_bipartite(self):
        rng = np.random.default_rng(9)
        for _ in range(6):
            st = HybridState.from_quantum(rand_psd(rng, 6), (2, 3))
            for a in ALPHAS:
                bar = quantum_chain_transform(st, "B", a)
                lhs = sandwiched_down_entropy(st, "A", a)
                rhs = petz_up_entropy(bar, "A", 1 / a)
                assert abs(lhs - rhs) <= 1e-10

    def test_three_register_split(self):
        rng = np.random.default_rng(10)
        for dims in ((2, 2, 2), (2, 3, 2), (3, 2, 3)):
            st = rand_pure(rng, dims)
            for a in ALPHAS:
                tilted = quantum_chain_transform(st, "C", a)
                lhs = sandwiched_down_entropy(st, ("A", "B"), a)
                assert abs(lhs - petz_up_entropy(tilted, ("A", "B"), 1 / a)) <= 1e-10
                split = petz_up_entropy(tilted, "A", 1 / a) + sandwiched_down_entropy(
                    st.trace_out("A"), "B", a
                )
                assert abs(lhs - split) <= 1e-10

    def test_transform_shannon_window_identity(self):
        rng = np.random.default_rng(11)
        st = rand_cq(rng, 2)
        assert quantum_chain_transform(st, "B", 1.0) is st

    def test_pure_state_duality(self):
        rng = np.random.default_rng(12)
        for _ in range(8):
            st = rand_pure(rng, (2, 2, 2))
            for a in ALPHAS:
                lhs = sandwiched_down_entropy(st.trace_out("C"), "A", a)
                rhs = -petz_up_entropy(st.trace_out("B"), "A", 1 / a)
                assert abs(lhs - rhs) <= 1e-10

    def test_data_processing(self):
        rng = np.random.default_rng(13)
        for _ in range(8):
            full = HybridState(
                classical=(("X", 2),),
                quantum=(("B1", 2), ("B2", 2)),
                blocks={
                    (0,): (0.5, np.kron(rand_psd(rng, 2), rand_psd(rng, 2))),
                    (1,): (0.5, np.kron(rand_psd(rng, 2), rand_psd(rng, 2))),
                },
            )
            reduced = full.trace_out("B2")
            for a in (0.5, 1.3, 2.0, 4.0):
                assert sandwiched_down_entropy(full, "X", a) <= sandwiched_down_entropy(
                    reduced, "X", a
                ) + 1e-10
