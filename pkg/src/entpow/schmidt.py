"""Operator Schmidt decomposition of a unitary across a bipartition.

The matrix is realigned so that (row, column) index pairs of the left parties
form rows and those of the right parties form columns; an SVD of the realigned
matrix yields the Schmidt coefficients.  Coefficients follow the standard
form: factors orthonormal under the normalized trace inner product
(1/d) Tr(A_j^dag A_k) = delta_jk and sum_j c_j^2 = 1, so the entropy of the
squared coefficients reads directly as the lower entangling-power bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log2, prod, sqrt
from typing import Iterable

import numpy as np

from .gates import Unitary
from .linalg import entropy_of_spectrum

# scale-invariant cutoff for rank counting
RANK_TOL_FACTOR = 1e-8


@dataclass(frozen=True)
class Bipartition:
    """A nonempty proper subset of party indices (the left block)."""

    left: frozenset[int]
    n_parties: int

    def __post_init__(self):
        left = frozenset(int(i) for i in self.left)
        object.__setattr__(self, "left", left)
        if self.n_parties < 2:
            raise ValueError("a bipartition needs at least two parties")
        if not left or len(left) >= self.n_parties:
            raise ValueError("left block must be a nonempty proper subset")
        if min(left) < 0 or max(left) >= self.n_parties:
            raise ValueError(f"party indices {sorted(left)} out of range")

    @property
    def left_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.left))

    @property
    def right_sorted(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n_parties) if i not in self.left)

    def label(self) -> str:
        names = [chr(ord("A") + i) for i in range(self.n_parties)]
        return ("".join(names[i] for i in self.left_sorted) + ":"
                + "".join(names[i] for i in self.right_sorted))


def cut(left: Iterable[int], n_parties: int) -> Bipartition:
    return Bipartition(frozenset(left), n_parties)


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Coefficients and trace-orthonormal factor operators for one cut."""

    coefficients: np.ndarray
    left_factors: tuple[np.ndarray, ...]
    right_factors: tuple[np.ndarray, ...]
    bipartition: Bipartition
    d_left: int
    d_right: int

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def reconstruct(self) -> np.ndarray:
        """Rebuild the matrix in left-right party order."""
        d = self.d_left * self.d_right
        out = np.zeros((d, d), dtype=complex)
        for c, a, b in zip(self.coefficients, self.left_factors, self.right_factors):
            out += c * np.kron(a, b)
        return out


def _realign(u: Unitary, bipartition: Bipartition) -> tuple[np.ndarray, int, int]:
    """Reshuffle so left (row, col) pairs index rows, right pairs columns."""
    dims = u.dims
    n = len(dims)
    if bipartition.n_parties != n:
        raise ValueError("bipartition party count does not match the unitary")
    left = bipartition.left_sorted
    right = bipartition.right_sorted
    dl = prod(dims[i] for i in left)
    dr = prod(dims[i] for i in right)
    t = u.matrix.reshape(dims + dims)  # out legs then in legs
    perm = ([i for i in left] + [n + i for i in left]
            + [i for i in right] + [n + i for i in right])
    m = t.transpose(perm).reshape(dl * dl, dr * dr)
    return m, dl, dr


def schmidt_decompose(u: Unitary, bipartition: Bipartition) -> SchmidtDecomposition:
    """Operator Schmidt decomposition of a unitary across a bipartition."""
    m, dl, dr = _realign(u, bipartition)
    uu, s, vh = np.linalg.svd(m)
    keep = int(np.sum(s > RANK_TOL_FACTOR * s[0]))
    scale = sqrt(dl * dr)
    coeffs = s[:keep] / scale
    lefts = tuple(sqrt(dl) * uu[:, j].reshape(dl, dl) for j in range(keep))
    rights = tuple(sqrt(dr) * vh[j, :].reshape(dr, dr) for j in range(keep))
    return SchmidtDecomposition(coeffs, lefts, rights, bipartition, dl, dr)


def schmidt_rank(u: Unitary, bipartition: Bipartition) -> int:
    """Number of nonzero Schmidt coefficients across the cut."""
    return schmidt_decompose(u, bipartition).rank


def ep_bounds(u: Unitary, bipartition: Bipartition) -> tuple[float, float]:
    """Entropy sandwich across a cut: (K_Sch, log2 of the Schmidt rank)."""
    dec = schmidt_decompose(u, bipartition)
    probs = dec.coefficients ** 2
    lower = entropy_of_spectrum(probs / probs.sum())
    upper = log2(dec.rank)
    return lower, upper
