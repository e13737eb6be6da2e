"""Dense complex linear algebra for small multipartite systems.

Everything here operates on plain numpy arrays in row-major order, with the
tensor structure carried separately as a tuple of party dimensions.  All
entropies are base-2 (ebits).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log2, prod
from typing import Iterable, Sequence

import numpy as np

HERMITICITY_TOL = 1e-10
UNITARITY_TOL = 1e-10
TRACE_TOL = 1e-10
STATE_NORM_TOL = 1e-12
# Reductions of pure states routinely produce eigenvalues this far below
# zero; anything more negative is treated as a genuinely invalid operator.
NEGATIVE_EIG_TOL = 1e-9
EIG_ZERO_CLAMP = 1e-12


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(np.asarray(a), np.asarray(b))


def kron_all(mats: Iterable[np.ndarray]) -> np.ndarray:
    """Kronecker product of a sequence of matrices, left to right."""
    mats = list(mats)
    if not mats:
        raise ValueError("kron_all needs at least one matrix")
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = np.kron(out, np.asarray(m))
    return out


def is_unitary(m: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    """Check ||U^dag U - I||_max <= tol."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    d = m.shape[0]
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(d))) <= tol)


def _check_dims(size: int, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise ValueError(f"party dimensions must be positive, got {dims}")
    if prod(dims) != size:
        raise ValueError(f"product of dims {dims} does not match size {size}")
    return dims


@dataclass(frozen=True)
class DensityOperator:
    """Positive unit-trace operator with a list of party dimensions."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density operator must be a square matrix")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", _check_dims(m.shape[0], self.dims))
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise ValueError("density operator is not Hermitian")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise ValueError("density operator trace is not 1")
        w = np.linalg.eigvalsh(m)
        if w.min() < -NEGATIVE_EIG_TOL:
            raise ValueError(f"density operator has eigenvalue {w.min():.3e} < -1e-9")

    @property
    def n_parties(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class PureState:
    """Normalized state vector with a list of party dimensions."""

    amplitudes: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        v = np.asarray(self.amplitudes, dtype=complex).ravel()
        object.__setattr__(self, "amplitudes", v)
        object.__setattr__(self, "dims", _check_dims(v.size, self.dims))
        if abs(np.linalg.norm(v) - 1.0) > STATE_NORM_TOL:
            raise ValueError("pure state is not normalized")

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    def density(self) -> DensityOperator:
        v = self.amplitudes
        return DensityOperator(np.outer(v, v.conj()), self.dims)


def partial_trace_matrix(mat: np.ndarray, dims: Sequence[int],
                         keep: Iterable[int]) -> np.ndarray:
    """Partial trace of a raw matrix over all parties not in ``keep``.

    Kept parties stay in their original order.
    """
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep set must be nonempty")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep indices {keep} out of range for {n} parties")
    mat = np.asarray(mat)
    t = mat.reshape(dims + dims)
    keep_set = set(keep)
    out_labels = list(range(n))
    in_labels = [i if i not in keep_set else n + i for i in range(n)]
    target = [i for i in keep] + [n + i for i in keep]
    reduced = np.einsum(t, out_labels + in_labels, target)
    d_keep = prod(dims[i] for i in keep)
    return reduced.reshape(d_keep, d_keep)


def partial_trace(rho: DensityOperator, keep: Iterable[int]) -> DensityOperator:
    """Reduced density operator on the kept parties."""
    keep = sorted(set(int(k) for k in keep))
    reduced = partial_trace_matrix(rho.matrix, rho.dims, keep)
    return DensityOperator(reduced, tuple(rho.dims[i] for i in keep))


def eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("eigh expects a square matrix")
    if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
        raise ValueError("matrix is not Hermitian within 1e-10")
    return np.linalg.eigh(m)


def svd(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value decomposition m = U diag(s) Vh, singular values descending."""
    return np.linalg.svd(np.asarray(m, dtype=complex))


def entropy_of_spectrum(eigs: np.ndarray) -> float:
    """Shannon entropy (base 2) of a probability spectrum.

    Values in [-1e-9, 1e-12] are clamped to zero; more negative values are
    rejected.  0 log 0 = 0.
    """
    lam = np.real(np.asarray(eigs, dtype=float)).ravel()
    if lam.size and lam.min() < -NEGATIVE_EIG_TOL:
        raise ValueError(f"spectrum has eigenvalue {lam.min():.3e} < -1e-9")
    lam = np.where(lam < EIG_ZERO_CLAMP, 0.0, lam)
    nz = lam[lam > 0.0]
    if nz.size == 0:
        return 0.0
    return float(-np.sum(nz * np.log2(nz)))


def von_neumann_entropy(rho: DensityOperator) -> float:
    """Von Neumann entropy S(rho) in ebits."""
    return entropy_of_spectrum(np.linalg.eigvalsh(rho.matrix))


def binary_entropy(p: float) -> float:
    """H(p, 1-p) in bits."""
    if p < -1e-12 or p > 1.0 + 1e-12:
        raise ValueError(f"probability {p} outside [0, 1]")
    p = min(max(float(p), 0.0), 1.0)
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * log2(p) - (1.0 - p) * log2(1.0 - p)


def entanglement_entropy(state: PureState, left: Iterable[int]) -> float:
    """Entropy of the reduction of a pure state onto the given parties."""
    left = sorted(set(int(i) for i in left))
    n = state.n_parties
    if not left or len(left) >= n:
        raise ValueError("left must be a nonempty proper subset of parties")
    right = [i for i in range(n) if i not in left]
    dl = prod(state.dims[i] for i in left)
    dr = prod(state.dims[i] for i in right)
    t = state.amplitudes.reshape(state.dims).transpose(left + right)
    m = t.reshape(dl, dr)
    # spectrum of the smaller-side reduction; both sides agree for pure states
    if dl <= dr:
        g = m @ m.conj().T
    else:
        g = m.conj().T @ m
    return entropy_of_spectrum(np.linalg.eigvalsh(g))
