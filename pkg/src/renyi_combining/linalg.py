"""Dense Hermitian linear algebra shared by every other module.

All entropy work in this package reduces to eigendecompositions of small
(dim <= 64) dense complex matrices, plus partial traces and spectral
functions evaluated on the support.

Chain-rule transforms raise states to powers alpha and are later queried at
the conjugate order 1/alpha; for alpha far from 1 the intermediate spectrum
spans a dynamic range that a dense float64 matrix cannot represent.  Such
operators are therefore carried in eigenfactored form
(:class:`SpectralMatrix`), on which spectral powers compose exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Hard cap on matrix dimension; combined states in this package stay tiny.
MAX_DIM = 64

# Per-entry tolerance for conjugate symmetry, relative to the entry scale.
HERMITIAN_ATOL = 1e-12

# Eigenvalues below SUPPORT_RTOL * max(eigenvalues) count as exact zeros
# when a matrix arrives in dense form (they are indistinguishable from
# rounding noise there).  Factored matrices keep their full spectrum.
SUPPORT_RTOL = 1e-12

# How far below zero an eigenvalue may dip before the input is rejected.
PSD_ATOL = 1e-12

# Singular values below ROOT_NOISE_RTOL * max are SVD rounding noise; the
# corresponding eigenvalues (their squares) sit 28 decades below the top of
# the spectrum, far deeper than dense storage could ever resolve.
ROOT_NOISE_RTOL = 1e-14


def as_square_matrix(m) -> np.ndarray:
    """Coerce to a complex square ndarray within the dense size cap."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {m.shape[0]} exceeds the dense cap of {MAX_DIM}")
    return m


def assert_hermitian(m: np.ndarray, atol: float = HERMITIAN_ATOL) -> None:
    scale = max(1.0, float(np.abs(m).max())) if m.size else 1.0
    dev = float(np.abs(m - m.conj().T).max())
    if dev > atol * scale:
        raise ValueError(f"matrix is not Hermitian: max|m - m^dag| = {dev:.3e}")


def hermitian_part(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def eig_hermitian(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with real eigenvalues in
    ascending order and ``m = V diag(lam) V^dag``.
    """
    m = as_square_matrix(m)
    assert_hermitian(m)
    lam, vecs = np.linalg.eigh(m)
    return lam, vecs


@dataclass(frozen=True)
class SpectralMatrix:
    """PSD operator stored as eigenvectors and nonnegative eigenvalues.

    Powers act on the eigenvalues alone, so expressions like
    ``(m^alpha)^(1/alpha)`` round-trip exactly even when ``m^alpha`` has a
    spectral range far beyond what dense storage can hold.
    """

    vectors: np.ndarray
    eigenvalues: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        lam = np.asarray(self.eigenvalues, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1] or lam.shape != (v.shape[0],):
            raise ValueError(f"incompatible factor shapes {v.shape} / {lam.shape}")
        if lam.size and lam.min() < 0.0:
            raise ValueError(f"negative eigenvalue in factored form: {lam.min():.3e}")
        v = v.copy()
        lam = lam.copy()
        v.setflags(write=False)
        lam.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        object.__setattr__(self, "eigenvalues", lam)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def dense(self) -> np.ndarray:
        return (self.vectors * self.eigenvalues) @ self.vectors.conj().T

    def trace(self) -> float:
        return float(self.eigenvalues.sum())

    def power(self, p: float) -> "SpectralMatrix":
        lam = self.eigenvalues
        with np.errstate(divide="ignore"):
            powered = np.where(lam > 0.0, np.exp(p * np.log(np.where(lam > 0.0, lam, 1.0))), 0.0)
        return SpectralMatrix(self.vectors, powered)


PSDLike = "np.ndarray | SpectralMatrix"


def dense_of(m) -> np.ndarray:
    if isinstance(m, SpectralMatrix):
        return m.dense()
    return as_square_matrix(m)


def dim_of(m) -> int:
    if isinstance(m, SpectralMatrix):
        return m.dim
    return as_square_matrix(m).shape[0]


def trace_of(m) -> float:
    if isinstance(m, SpectralMatrix):
        return m.trace()
    return float(np.trace(m).real)


def spectral_of(m, psd_atol: float = PSD_ATOL) -> SpectralMatrix:
    """Factor a PSD operator; dense input gets the support cutoff applied.

    Eigenvalues of a dense matrix below ``SUPPORT_RTOL * max`` are rounding
    noise and are mapped to exact zeros; an already factored input is
    returned unchanged (its small eigenvalues are genuine).
    """
    if isinstance(m, SpectralMatrix):
        return m
    lam, vecs = eig_hermitian(m)
    top = max(float(lam[-1]), 0.0) if lam.size else 0.0
    if lam.size and lam[0] < -psd_atol * max(top, 1.0):
        raise ValueError(f"matrix is not positive semidefinite: min eigenvalue {lam[0]:.3e}")
    lam = np.where(lam > SUPPORT_RTOL * top, lam, 0.0)
    return SpectralMatrix(vecs, lam)


def power_psd(m, p: float) -> SpectralMatrix:
    """Spectral power on the support, in factored form."""
    return spectral_of(m).power(p)


def matrix_power_on_support(m, p: float) -> np.ndarray:
    """Dense spectral power ``m^p`` of a PSD matrix, restricted to its
    support.

    Eigenvalues below ``SUPPORT_RTOL * max(eigenvalue)`` are treated as
    exactly zero, including for negative ``p`` (pseudo-inverse convention).
    """
    return hermitian_part(power_psd(m, p).dense())


def kron_psd(a, b):
    """Tensor product; factored if either factor is factored."""
    if isinstance(a, SpectralMatrix) or isinstance(b, SpectralMatrix):
        fa, fb = spectral_of(a), spectral_of(b)
        return SpectralMatrix(np.kron(fa.vectors, fb.vectors), np.kron(fa.eigenvalues, fb.eigenvalues))
    return np.kron(as_square_matrix(a), as_square_matrix(b))


def trace_power(m, p: float) -> float:
    """``Tr m^p`` over the support of a PSD matrix."""
    lam = spectral_of(m).eigenvalues
    mask = lam > 0.0
    if not mask.any():
        return 0.0
    return float(np.exp(p * np.log(lam[mask])).sum())


def root_factor(m) -> np.ndarray:
    """R with ``m = R R^dag`` (eigenvectors scaled by root eigenvalues)."""
    f = spectral_of(m)
    return f.vectors * np.sqrt(f.eigenvalues)


def _squared_singulars(s: np.ndarray) -> np.ndarray:
    if s.size and s[0] > 0.0:
        s = np.where(s > ROOT_NOISE_RTOL * s[0], s, 0.0)
    return s * s


def compress_roots(roots) -> SpectralMatrix:
    """Factored form of ``sum_i R_i R_i^dag`` from stacked root blocks.

    Mixtures assembled this way keep relative accuracy deep into the
    spectral tail (the singular values of the stacked roots are the square
    roots of the mixture's eigenvalues), which dense summation cannot do.
    Singular values at the SVD noise floor are mapped to exact zeros.
    """
    r = np.hstack([np.asarray(b, dtype=complex) for b in roots])
    u, s, _ = np.linalg.svd(r, full_matrices=True)
    lam = np.zeros(r.shape[0])
    lam[: s.size] = _squared_singulars(s)
    return SpectralMatrix(u, lam)


def root_trace_out(root, dims, axes) -> np.ndarray:
    """Root factor of the partial trace of ``root root^dag`` over ``axes``.

    Moves the traced subsystems of the row index into the column index, so
    the result is again a valid root block.
    """
    dims = [int(d) for d in dims]
    axes = sorted(axes)
    root = np.asarray(root, dtype=complex)
    k = root.shape[1]
    keep = [i for i in range(len(dims)) if i not in axes]
    tensor = root.reshape(dims + [k])
    tensor = tensor.transpose(keep + axes + [len(dims)])
    keep_dim = math.prod([dims[i] for i in keep]) if keep else 1
    traced_dim = math.prod([dims[i] for i in axes]) if axes else 1
    return tensor.reshape(keep_dim, traced_dim * k)


def sandwich_factored(g, m) -> SpectralMatrix:
    """Factored form of ``g m g`` for Hermitian g and PSD m.

    Built from the singular values of ``g R`` with ``m = R R^dag``: positive
    semidefinite by construction and accurate far into the spectral tail,
    where forming the triple product densely would drown in rounding noise.
    """
    x = np.asarray(g, dtype=complex) @ root_factor(m)
    u, s, _ = np.linalg.svd(x, full_matrices=True)
    lam = np.zeros(x.shape[0])
    lam[: s.size] = _squared_singulars(s)
    return SpectralMatrix(u, lam)


def sandwich_trace_power(g, m, p: float) -> float:
    """``Tr (g m g)^p`` via the singular-value route."""
    x = np.asarray(g, dtype=complex) @ root_factor(m)
    s = np.linalg.svd(x, compute_uv=False)
    lam = _squared_singulars(s)
    lam = lam[lam > 0.0]
    if lam.size == 0:
        return 0.0
    return float(np.exp(p * np.log(lam)).sum())


def spectral_entropy(m, weight: float = 1.0) -> float:
    """``-Tr[(w m) ln (w m)]`` over the support; ``m`` may be unnormalized."""
    if weight <= 0.0:
        return 0.0
    lam = spectral_of(m).eigenvalues
    lam = weight * lam[lam > 0.0]
    if lam.size == 0:
        return 0.0
    return float(-(lam * np.log(lam)).sum())


def partial_trace(m, dims, traced: int) -> np.ndarray:
    """Trace subsystem ``traced`` out of a matrix on the tensor product ``dims``.

    ``dims`` lists the subsystem dimensions in tensor order; ``traced`` is the
    0-based index of the subsystem to remove.  Trace is preserved.
    """
    m = as_square_matrix(m)
    dims = tuple(int(d) for d in dims)
    total = math.prod(dims)
    if total != m.shape[0]:
        raise ValueError(f"subsystem dims {dims} do not match matrix dimension {m.shape[0]}")
    if not 0 <= traced < len(dims):
        raise ValueError(f"traced index {traced} out of range for {len(dims)} subsystems")
    n = len(dims)
    tensor = m.reshape(dims + dims)
    tensor = np.trace(tensor, axis1=traced, axis2=n + traced)
    keep = total // dims[traced]
    return tensor.reshape(keep, keep)


def trace_out_axes(m, dims, axes) -> np.ndarray:
    """Partial trace over several subsystems at once (descending-order loop)."""
    out = dense_of(m)
    dims = list(int(d) for d in dims)
    for ax in sorted(axes, reverse=True):
        out = partial_trace(out, dims, ax)
        del dims[ax]
    return out


def embed_operator(op, dims, axes) -> np.ndarray:
    """Extend ``op`` acting on subsystems ``axes`` by identity elsewhere.

    ``axes`` must be ascending subsystem indices matching how ``op`` was
    built (e.g. the remaining axes after a partial trace).
    """
    dims = tuple(int(d) for d in dims)
    axes = tuple(axes)
    op = np.asarray(op, dtype=complex)
    if op.ndim == 0 or op.shape == (1, 1):
        scalar = complex(op) if op.ndim == 0 else complex(op[0, 0])
        return scalar * np.eye(math.prod(dims), dtype=complex)
    rest = [i for i in range(len(dims)) if i not in axes]
    rest_dim = math.prod([dims[i] for i in rest]) if rest else 1
    full = np.kron(op, np.eye(rest_dim, dtype=complex))
    if not rest:
        return full
    order = list(axes) + rest
    perm_dims = [dims[i] for i in order]
    tensor = full.reshape(perm_dims + perm_dims)
    inv = np.argsort(order)
    tensor = tensor.transpose(list(inv) + [len(dims) + int(j) for j in inv])
    total = math.prod(dims)
    return tensor.reshape(total, total)


def kron_all(mats) -> np.ndarray:
    out = np.asarray(mats[0], dtype=complex)
    for m in mats[1:]:
        out = np.kron(out, m)
    return out
