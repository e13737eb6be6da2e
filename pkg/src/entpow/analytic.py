"""Closed-form entangling power of Schmidt-rank-two multi-qubit unitaries.

Every formula reduces to the same primitive: across each bipartition the gate
is a two-term controlled unitary whose branches differ by a diagonal of
phases, and the maximal output entropy across that cut is

    H((1 - m) / 2, (1 + m) / 2),   m = min convex sum of the phase set.

The value is 1 ebit exactly when the phase set straddles the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import log2, pi

import numpy as np

from .linalg import binary_entropy
from .phases import (HULL_TOL, PhaseMultiset, min_convex_sum, normalize_phases,
                     origin_in_hull)

TWO_PI = 2.0 * pi
ANGLE_TOL = 1e-9


def value_from_phase_set(phases: PhaseMultiset) -> float:
    """H((1-m)/2, (1+m)/2) for m the minimum convex sum of the set."""
    m = min_convex_sum(phases)
    return binary_entropy((1.0 - m) / 2.0)


@dataclass(frozen=True)
class ControlledDiagonalSpec:
    """U = P1 x I + P2 x diag(e^{i theta_j}) with d_B diagonal phases."""

    phases: PhaseMultiset
    d_b: int

    def __post_init__(self):
        if len(self.phases) != self.d_b:
            raise ValueError(f"expected {self.d_b} phases, got {len(self.phases)}")


def ep_controlled_diagonal(spec: ControlledDiagonalSpec) -> float:
    """Entangling power of a two-term controlled-diagonal unitary."""
    return value_from_phase_set(spec.phases)


@dataclass(frozen=True)
class ThreeQubitSr2Spec:
    """Controlled three-qubit gate |0><0| x U1 + |1><1| x U2 on A:(BC).

    U1 and U2 are diagonal with phases theta[k*2+t] and omega[k*2+t] on the
    basis state |k, t> of the two target qubits.
    """

    theta: tuple[float, float, float, float]
    omega: tuple[float, float, float, float]

    def __post_init__(self):
        for name in ("theta", "omega"):
            val = tuple(float(x) for x in getattr(self, name))
            if len(val) != 4:
                raise ValueError(f"{name} must have 4 angles")
            object.__setattr__(self, name, val)

    @property
    def is_degenerate(self) -> bool:
        """True when U1 equals U2 up to a global phase (rank one across A:BC)."""
        diffs = np.mod(np.subtract(self.omega, self.theta), TWO_PI)
        spread = np.max(diffs) - np.min(diffs)
        return bool(min(spread, TWO_PI - spread) <= ANGLE_TOL)


def phase_sets_3qubit(spec: ThreeQubitSr2Spec) -> tuple[PhaseMultiset, PhaseMultiset, PhaseMultiset]:
    """The three branch-difference sets, one per single-qubit cut.

    A1 governs A:BC, A2 governs B:AC, A3 governs C:AB.
    """
    t00, t01, t10, t11 = spec.theta
    w00, w01, w10, w11 = spec.omega
    a1 = normalize_phases([w00 - t00, w01 - t01, w10 - t10, w11 - t11])
    a2 = normalize_phases([t10 - t00, t11 - t01, w10 - w00, w11 - w01])
    a3 = normalize_phases([t01 - t00, t11 - t10, w01 - w00, w11 - w10])
    return a1, a2, a3


def ep_3qubit_sr2(spec: ThreeQubitSr2Spec) -> float:
    """Entangling power of a Schmidt-rank-two three-qubit unitary."""
    return max(value_from_phase_set(s) for s in phase_sets_3qubit(spec))


def aep_is_maximal_3qubit(spec: ThreeQubitSr2Spec) -> bool:
    """True iff the assisted entangling power reaches one ebit."""
    return any(origin_in_hull(s) for s in phase_sets_3qubit(spec))


_FAMILIES = ("n", "n-1", "2", "1", "0")


def _in_open_interval(x: float, lo: float, hi: float) -> bool:
    return lo + ANGLE_TOL < x < hi - ANGLE_TOL


@dataclass(frozen=True)
class TableISpec:
    """A genuine Schmidt-rank-two n-qubit gate (n >= 4) by singular number k.

    k = n        phi
    k = n-1      phi, theta (theta != phi)
    k = 2        betas = (beta_2, ..., beta_n)
    k = 1        alpha
    k = 0        alpha, beta

    Boundary parameter values (phi = 0, theta = phi, beta_l = 0, alpha on
    {0, pi/2, pi}) make the gate degenerate rather than invalid: parameter
    sweeps cross them, the formulas stay continuous there, and
    ``is_degenerate`` flags them.
    """

    n: int
    k: int
    phi: float | None = None
    theta: float | None = None
    betas: tuple[float, ...] | None = None
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("Table I families are defined for n >= 4")
        if self.k not in (self.n, self.n - 1, 2, 1, 0):
            raise ValueError(f"singular number {self.k} not in {{n, n-1, 2, 1, 0}}")
        fam = self.family
        def _angle(name, lo=0.0, hi=TWO_PI):
            v = getattr(self, name)
            if v is None:
                raise ValueError(f"family k={fam} requires parameter {name}")
            v = float(v)
            if not (lo - ANGLE_TOL <= v <= hi + ANGLE_TOL):
                raise ValueError(f"{name}={v} outside [{lo}, {hi}]")
            object.__setattr__(self, name, v)
        if fam == "n":
            _angle("phi")
        elif fam == "n-1":
            _angle("phi")
            _angle("theta")
        elif fam == "2":
            if self.betas is None or len(self.betas) != self.n - 1:
                raise ValueError(f"family k=2 requires {self.n - 1} betas")
            bs = tuple(float(b) for b in self.betas)
            if any(not (-ANGLE_TOL <= b <= TWO_PI + ANGLE_TOL) for b in bs):
                raise ValueError("betas outside [0, 2*pi]")
            object.__setattr__(self, "betas", bs)
        elif fam == "1":
            _angle("alpha", 0.0, pi)
        else:
            _angle("alpha", 0.0, pi)
            _angle("beta", 0.0, pi)

    @property
    def family(self) -> str:
        if self.k == self.n:
            return "n"
        if self.k == self.n - 1:
            return "n-1"
        return str(self.k)

    @property
    def is_degenerate(self) -> bool:
        fam = self.family
        if fam == "n":
            return not _in_open_interval(self.phi, 0.0, TWO_PI)
        if fam == "n-1":
            return (not _in_open_interval(self.phi, 0.0, TWO_PI)
                    or not _in_open_interval(self.theta, 0.0, TWO_PI)
                    or abs(self.theta - self.phi) <= ANGLE_TOL)
        if fam == "2":
            return any(not _in_open_interval(b, 0.0, TWO_PI) for b in self.betas)
        if fam == "1":
            return (not _in_open_interval(self.alpha, 0.0, pi)
                    or abs(self.alpha - pi / 2) <= ANGLE_TOL)
        return any(
            not _in_open_interval(x, 0.0, pi) or abs(x - pi / 2) <= ANGLE_TOL
            for x in (self.alpha, self.beta))


def governing_phase_sets(spec: TableISpec) -> list[PhaseMultiset]:
    """The phase sets whose minimum convex sums determine K_E(U_k).

    k = n, n-1:  one set {0, phi} resp. {0, theta, phi}.
    k = 2:       the 2^(n-1) subset-sum set, then {0, beta_t} per single cut.
    k = 1:       {0, +-2 alpha}.
    k = 0:       {+-2 alpha, +-2 beta} (doubled angles: the branch-difference
                 diagonals carry exp(+-2 i alpha), exp(+-2 i beta)).
    """
    fam = spec.family
    if fam == "n":
        return [normalize_phases([0.0, spec.phi])]
    if fam == "n-1":
        return [normalize_phases([0.0, spec.theta, spec.phi])]
    if fam == "2":
        sums = [sum(q * b for q, b in zip(qs, spec.betas))
                for qs in product((0, 1), repeat=len(spec.betas))]
        sets = [normalize_phases(sums)]
        sets.extend(normalize_phases([0.0, b]) for b in spec.betas)
        return sets
    if fam == "1":
        return [normalize_phases([0.0, 2 * spec.alpha, -2 * spec.alpha])]
    return [normalize_phases([2 * spec.alpha, -2 * spec.alpha,
                              2 * spec.beta, -2 * spec.beta])]


def ep_nqubit_sr2(spec: TableISpec) -> float:
    """Entangling power of a Table I gate, maximized over its governing sets."""
    return max(value_from_phase_set(s) for s in governing_phase_sets(spec))


def aep_is_maximal_nqubit(spec: TableISpec) -> bool:
    """True iff the assisted entangling power of U_k reaches one ebit."""
    if spec.family == "2" and any(abs(b - pi) <= ANGLE_TOL for b in spec.betas):
        return True
    return any(origin_in_hull(s) for s in governing_phase_sets(spec))


def aep_ceiling(m: int) -> float:
    """log2(m): the assisted-power ceiling of an m-term controlled unitary."""
    if m < 1:
        raise ValueError("term count must be at least 1")
    return log2(m)


# -- reporting helpers for the CLI -------------------------------------------

def _detail(sets: list[PhaseMultiset], labels: list[str]) -> dict:
    values = [value_from_phase_set(s) for s in sets]
    j = int(np.argmax(values))
    return {
        "value_ebits": values[j],
        "governing_set": list(sets[j].angles),
        "governing_label": labels[j],
        "branch": "hull" if origin_in_hull(sets[j]) else "otherwise",
    }


def ep_controlled_diagonal_details(spec: ControlledDiagonalSpec) -> dict:
    return _detail([spec.phases], ["control:target"])


def ep_3qubit_details(spec: ThreeQubitSr2Spec) -> dict:
    sets = list(phase_sets_3qubit(spec))
    out = _detail(sets, ["A:BC", "B:AC", "C:AB"])
    out["degenerate"] = spec.is_degenerate
    return out


def ep_nqubit_details(spec: TableISpec) -> dict:
    sets = governing_phase_sets(spec)
    if spec.family == "2":
        labels = ["A1:rest"] + [f"A{t}:rest" for t in range(2, spec.n + 1)]
    else:
        labels = ["any contiguous cut"] * len(sets)
    out = _detail(sets, labels)
    out["degenerate"] = spec.is_degenerate
    return out
