"""Constructors for the multi-qubit gates analyzed by the closed forms.

Qubit ordering convention: party A1 is the most significant (leftmost) tensor
factor, so the basis state |a, b, c> has index a*4 + b*2 + c.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi, prod

import numpy as np

from .analytic import ControlledDiagonalSpec, TableISpec, ThreeQubitSr2Spec
from .linalg import UNITARITY_TOL, kron_all

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class Unitary:
    """Unitary matrix tagged with its multipartite tensor structure."""

    matrix: np.ndarray
    dims: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("unitary must be a square matrix")
        if prod(dims) != m.shape[0]:
            raise ValueError(f"dims {dims} do not match matrix size {m.shape[0]}")
        if np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) > UNITARITY_TOL:
            raise ValueError("matrix is not unitary within 1e-10")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _permutation_gate(n_qubits: int, rule, label: str) -> Unitary:
    """Permutation unitary from a bit-tuple mapping rule."""
    d = 2 ** n_qubits
    m = np.zeros((d, d), dtype=complex)
    for b in range(d):
        bits = tuple((b >> (n_qubits - 1 - i)) & 1 for i in range(n_qubits))
        out = rule(bits)
        idx = sum(bit << (n_qubits - 1 - i) for i, bit in enumerate(out))
        m[idx, b] = 1.0
    return Unitary(m, (2,) * n_qubits, label)


def toffoli(n: int = 3) -> Unitary:
    """n-qubit Toffoli: flip the target iff all n-1 controls are 1."""
    if n < 3:
        raise ValueError("Toffoli gate needs at least 3 qubits")

    def rule(bits):
        if all(bits[:-1]):
            return bits[:-1] + (1 - bits[-1],)
        return bits

    return _permutation_gate(n, rule, f"T{n}")


def ccp(phi: float) -> Unitary:
    """Controlled-controlled phase: e^{i phi} on |111> only."""
    phi = float(phi)
    if not (0.0 < phi < 2.0 * pi):
        raise ValueError("ccp phase must lie in (0, 2*pi)")
    diag = np.ones(8, dtype=complex)
    diag[7] = np.exp(1j * phi)
    return Unitary(np.diag(diag), (2, 2, 2), f"CCP({phi:.6g})")


def ccz() -> Unitary:
    return ccp(pi)


def cnot() -> Unitary:
    return _permutation_gate(2, lambda b: (b[0], b[1] ^ b[0]), "CNOT")


def swap() -> Unitary:
    return _permutation_gate(2, lambda b: (b[1], b[0]), "SWAP")


def fredkin3() -> Unitary:
    """Controlled-SWAP: exchange qubits B, C iff A is 1."""

    def rule(bits):
        if bits[0]:
            return (bits[0], bits[2], bits[1])
        return bits

    return _permutation_gate(3, rule, "F3")


def fredkin4() -> Unitary:
    """Doubly controlled SWAP: exchange C, D iff A and B are both 1."""

    def rule(bits):
        if bits[0] and bits[1]:
            return (bits[0], bits[1], bits[3], bits[2])
        return bits

    return _permutation_gate(4, rule, "F4")


def cyclic_shift3() -> Unitary:
    """The three-qubit shift U|a,b,c> = |c,a,b>."""
    return _permutation_gate(3, lambda b: (b[2], b[0], b[1]), "CYCLE3")


def controlled_diagonal(spec: ControlledDiagonalSpec, d_a: int,
                        rank_of_p1: int) -> Unitary:
    """U = P1 x I + P2 x diag(e^{i theta_j}) with P1 of the given rank."""
    if not 1 <= rank_of_p1 < d_a:
        raise ValueError("rank of P1 must satisfy 1 <= rank < d_A")
    d_b = spec.d_b
    m = np.zeros((d_a * d_b, d_a * d_b), dtype=complex)
    diag = np.exp(1j * np.asarray(spec.phases.angles))
    for i in range(d_a):
        block = np.eye(d_b, dtype=complex) if i < rank_of_p1 else np.diag(diag)
        m[i * d_b:(i + 1) * d_b, i * d_b:(i + 1) * d_b] = block
    return Unitary(m, (d_a, d_b), f"CDIAG({d_a}x{d_b})")


def three_qubit_sr2_gate(spec: ThreeQubitSr2Spec) -> Unitary:
    """|0><0|_A x diag(e^{i theta}) + |1><1|_A x diag(e^{i omega})."""
    diag = np.concatenate([np.exp(1j * np.asarray(spec.theta)),
                           np.exp(1j * np.asarray(spec.omega))])
    return Unitary(np.diag(diag), (2, 2, 2), "SR2-3Q")


def table1_gate(spec: TableISpec) -> Unitary:
    """Explicit 2^n x 2^n matrix of a Table I family member."""
    n, fam = spec.n, spec.family
    d = 2 ** n
    if fam == "n":
        m = np.eye(d, dtype=complex)
        m[0, 0] = np.exp(1j * spec.phi)
    elif fam == "n-1":
        m = np.eye(d, dtype=complex)
        m[0, 0] = np.exp(1j * spec.phi)
        m[1, 1] = np.exp(1j * spec.theta)
    elif fam == "2":
        tail = kron_all([np.diag([1.0, np.exp(1j * b)]) for b in spec.betas])
        m = np.zeros((d, d), dtype=complex)
        m[:d // 2, :d // 2] = np.eye(d // 2)
        m[d // 2:, d // 2:] = tail
    elif fam == "1":
        sz_tail = kron_all([SIGMA_Z] * (n - 1))
        m = (np.kron(np.diag([np.cos(spec.alpha), 1.0]), np.eye(d // 2))
             + 1j * np.sin(spec.alpha) * np.kron(np.diag([1.0, 0.0]), sz_tail))
    else:
        sz_tail = kron_all([SIGMA_Z] * (n - 1))
        m = (np.kron(np.diag([np.cos(spec.alpha), np.cos(spec.beta)]), np.eye(d // 2))
             + 1j * np.kron(np.diag([np.sin(spec.alpha), np.sin(spec.beta)]), sz_tail))
    return Unitary(m, (2,) * n, f"U(k={fam},n={n})")


def haar_unitary(dims: tuple[int, ...], rng: np.random.Generator,
                 label: str = "HAAR") -> Unitary:
    """Haar-random unitary on the given tensor structure."""
    d = prod(dims)
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return Unitary(q, tuple(dims), label)
