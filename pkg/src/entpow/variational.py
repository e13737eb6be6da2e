"""Variational lower bounds on entangling power by direct entropy ascent.

Each party gets a local ancilla (default: same dimension as the party), the
input ranges over products of per-party pure states, and the objective is the
output entropy across one bipartition.  States are parameterized as real
coordinate vectors normalized per party block; ascent uses batched
finite-difference gradients with backtracking, so accepted steps are strictly
monotone.  Restarts are independent and deterministic for a fixed seed; they
stop early once the Schmidt-rank ceiling for the cut is attained.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import log2, prod, sqrt
from typing import Sequence

import numpy as np

from .gates import Unitary, fredkin4
from .linalg import EIG_ZERO_CLAMP, PureState
from .schmidt import Bipartition, cut, ep_bounds

DIM_CAP = 4096
# restart loop cutoff: the cut ceiling counts as attained within this margin
ATTAIN_TOL = 1e-6
BLOCK_DIAG_TOL = 1e-10


@dataclass(frozen=True)
class OptimizerConfig:
    """Multi-start ascent settings.

    ancilla: "match" (R_i dimension equals the party dimension), "none"
    (no ancillas), an int applied to every party, or an explicit tuple.
    """

    restarts: int = 64
    max_iters: int = 2000
    step_tol: float = 1e-9
    value_tol: float = 1e-3
    seed: int = 42
    ancilla: str | int | tuple[int, ...] = "match"
    fd_step: float = 1e-6
    init_step: float = 0.2

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if self.step_tol <= 0 or self.value_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class EpResult:
    """A certified lower bound: value, achieving input, and sandwich bounds.

    bounds brackets the true cut quantity (Schmidt-coefficient entropy below,
    log2 of the Schmidt rank above); with reduced ancillas the lower bound is
    relaxed to 0 since the coefficient bound assumes full-size ancillas.
    """

    value: float
    method: str
    bipartition: Bipartition | None
    bounds: tuple[float, float]
    certificate_factors: tuple[np.ndarray, ...] | None = None
    certificate_weights: np.ndarray | None = None
    certificate_state: PureState | None = None
    ancilla_dims: tuple[int, ...] | None = None
    seed: int | None = None
    restarts_used: int | None = None


def ancilla_dims(dims: Sequence[int], policy) -> tuple[int, ...]:
    """Per-party ancilla dimensions for a policy."""
    n = len(dims)
    if policy == "match":
        return tuple(int(d) for d in dims)
    if policy == "none":
        return (1,) * n
    if isinstance(policy, int):
        if policy < 1:
            raise ValueError("ancilla dimension must be positive")
        return (policy,) * n
    policy = tuple(int(r) for r in policy)
    if len(policy) != n or any(r < 1 for r in policy):
        raise ValueError(f"ancilla policy {policy} invalid for {n} parties")
    return policy


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    """All 2^(n-1) - 1 unordered nontrivial splits, party 0 kept left."""
    if n < 2:
        raise ValueError("need at least two parties")
    cuts = []
    for mask in range(2 ** (n - 1)):
        left = frozenset([0]) | frozenset(
            i for i in range(1, n) if mask & (1 << (i - 1)))
        if len(left) < n:
            cuts.append(Bipartition(left, n))
    cuts.sort(key=lambda b: (len(b.left), b.left_sorted))
    return cuts


def _entropy_rows(w: np.ndarray) -> np.ndarray:
    """Base-2 entropy of each row of a batch of spectra."""
    lam = np.where(w < EIG_ZERO_CLAMP, 0.0, w)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam > 0.0, lam * np.log2(lam), 0.0)
    return -terms.sum(axis=1)


def _gram_entropy_rows(w: np.ndarray) -> np.ndarray:
    """Reduction entropy of a batch of (d_left, d_right) pure-state matrices."""
    if w.shape[1] <= w.shape[2]:
        g = np.einsum("bij,bkj->bik", w, w.conj())
    else:
        g = np.einsum("bji,bjk->bik", w.conj(), w)
    return _entropy_rows(np.linalg.eigvalsh(g))


def _normalize_blocks(x: np.ndarray, blocks: list[tuple[int, int]]) -> np.ndarray:
    """Normalize each (start, stop) slice of each row to unit Euclidean norm."""
    out = np.array(x, dtype=float, copy=True)
    squeeze = out.ndim == 1
    if squeeze:
        out = out[None, :]
    for s, e in blocks:
        norms = np.linalg.norm(out[:, s:e], axis=1, keepdims=True)
        out[:, s:e] /= norms
    return out[0] if squeeze else out


class _ProductStateObjective:
    """Output entropy across a cut as a function of per-party input states."""

    def __init__(self, u: Unitary, bipartition: Bipartition,
                 anc: tuple[int, ...]):
        dims = u.dims
        n = len(dims)
        if bipartition.n_parties != n:
            raise ValueError("bipartition does not match the unitary")
        self.u = u.matrix
        self.dims = dims
        self.anc = anc
        self.local = tuple(d * r for d, r in zip(dims, anc))
        self.total = prod(self.local)
        if self.total > DIM_CAP:
            raise ValueError(
                f"total dimension {self.total} exceeds the cap {DIM_CAP}")
        self.d_sys = prod(dims)
        self.r_tot = prod(anc)
        self.left = bipartition.left_sorted
        self.right = bipartition.right_sorted
        # parameter layout: per party, 2*local real coordinates
        self.blocks: list[tuple[int, int]] = []
        off = 0
        for m in self.local:
            self.blocks.append((off, off + 2 * m))
            off += 2 * m
        self.n_params = off
        # state tensors carry interleaved legs (B, d1, r1, ..., dn, rn)
        self._shape_in = tuple(x for d, r in zip(dims, anc) for x in (d, r))
        self._shape_out = tuple(dims) + tuple(anc)
        # interleaved -> (B, system legs, ancilla legs) for applying U
        self._perm_sys = [0] + [1 + 2 * i for i in range(n)] + \
            [2 + 2 * i for i in range(n)]
        # (B, d1..dn, r1..rn) -> (B, left system+ancilla, right system+ancilla)
        self._perm_cut = [0] + \
            [1 + i for i in self.left] + [1 + n + i for i in self.left] + \
            [1 + i for i in self.right] + [1 + n + i for i in self.right]
        # interleaved -> cut order directly (for states not passed through U)
        axes = [0]
        for i in self.left:
            axes.extend([1 + 2 * i, 2 + 2 * i])
        for i in self.right:
            axes.extend([1 + 2 * i, 2 + 2 * i])
        self._perm_cut_interleaved = axes
        self.d_left = prod(self.local[i] for i in self.left)
        self.d_right = prod(self.local[i] for i in self.right)

    def factors(self, x: np.ndarray) -> tuple[np.ndarray, ...]:
        """Per-party unit vectors encoded by a parameter vector."""
        xn = _normalize_blocks(x, self.blocks)
        out = []
        for (s, e), m in zip(self.blocks, self.local):
            out.append(xn[s:s + m] + 1j * xn[s + m:e])
        return tuple(out)

    def params_from_factors(self, factors: Sequence[np.ndarray]) -> np.ndarray:
        if len(factors) != len(self.local):
            raise ValueError("one factor per party expected")
        parts = []
        for f, m in zip(factors, self.local):
            f = np.asarray(f, dtype=complex).ravel()
            if f.size != m:
                raise ValueError(f"factor of size {f.size}, expected {m}")
            parts.append(np.concatenate([f.real, f.imag]))
        return np.concatenate(parts)

    def product_batch(self, x: np.ndarray) -> np.ndarray:
        """Batch of normalized product states, shape (B, total)."""
        xn = _normalize_blocks(np.atleast_2d(x), self.blocks)
        state = None
        for (s, e), m in zip(self.blocks, self.local):
            z = xn[:, s:s + m] + 1j * xn[:, s + m:e]
            state = z if state is None else \
                (state[:, :, None] * z[:, None, :]).reshape(len(z), -1)
        return state

    def apply_gate(self, psi: np.ndarray) -> np.ndarray:
        """Apply the unitary to system legs of a batch of full states.

        Returns the output in cut order, shape (B, d_left, d_right).
        """
        b = psi.shape[0]
        t = psi.reshape((b,) + self._shape_in).transpose(self._perm_sys)
        t = t.reshape(b, self.d_sys, self.r_tot)
        out = np.matmul(self.u, t)
        w = out.reshape((b,) + self._shape_out).transpose(self._perm_cut)
        return w.reshape(b, self.d_left, self.d_right)

    def cut_matrix(self, psi: np.ndarray) -> np.ndarray:
        """Reshape a batch of full states (untouched by the gate) to cut order."""
        b = psi.shape[0]
        t = psi.reshape((b,) + self._shape_in)
        w = t.transpose(self._perm_cut_interleaved)
        return w.reshape(b, self.d_left, self.d_right)

    def value_batch(self, x: np.ndarray) -> np.ndarray:
        return _gram_entropy_rows(self.apply_gate(self.product_batch(x)))

    def value(self, x: np.ndarray) -> float:
        return float(self.value_batch(np.atleast_2d(x))[0])


def _softmax(logits: np.ndarray) -> np.ndarray:
    z = logits - logits.max(axis=-1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)


class _ControlledMixtureObjective:
    """Entropy of sum_j q_j U_j rho U_j^dag over weights and product inputs.

    rho is a pure product state of the controlled-side parties (with
    ancillas); the spectrum comes from the m x m Gram matrix of the branch
    outputs, so the entropy never touches the full-dimensional operator.
    """

    def __init__(self, branches: Sequence[Unitary], anc: tuple[int, ...]):
        if len(branches) < 2:
            raise ValueError("need at least two branch unitaries")
        dims = branches[0].dims
        if any(b.dims != dims for b in branches[1:]):
            raise ValueError("branch unitaries must share party dimensions")
        self.m = len(branches)
        self.dims = dims
        self.anc = anc
        self.local = tuple(d * r for d, r in zip(dims, anc))
        self.total = prod(self.local)
        if self.total > DIM_CAP:
            raise ValueError(
                f"total dimension {self.total} exceeds the cap {DIM_CAP}")
        n = len(dims)
        self.d_sys = prod(dims)
        self.r_tot = prod(anc)
        self.mats = np.stack([b.matrix for b in branches])
        self.blocks: list[tuple[int, int]] = []
        off = 0
        for mloc in self.local:
            self.blocks.append((off, off + 2 * mloc))
            off += 2 * mloc
        self.weight_off = off
        self.n_params = off + self.m
        self._shape_in = tuple(x for d, r in zip(dims, anc) for x in (d, r))
        self._perm_sys = [0] + [1 + 2 * i for i in range(n)] + \
            [2 + 2 * i for i in range(n)]

    def factors(self, x: np.ndarray) -> tuple[np.ndarray, ...]:
        xn = _normalize_blocks(x, self.blocks)
        out = []
        for (s, e), mloc in zip(self.blocks, self.local):
            out.append(xn[s:s + mloc] + 1j * xn[s + mloc:e])
        return tuple(out)

    def weights(self, x: np.ndarray) -> np.ndarray:
        return _softmax(np.asarray(x[self.weight_off:], dtype=float))

    def value_batch(self, x: np.ndarray) -> np.ndarray:
        xn = _normalize_blocks(np.atleast_2d(x), self.blocks)
        state = None
        for (s, e), mloc in zip(self.blocks, self.local):
            z = xn[:, s:s + mloc] + 1j * xn[:, s + mloc:e]
            state = z if state is None else \
                (state[:, :, None] * z[:, None, :]).reshape(len(z), -1)
        b = state.shape[0]
        t = state.reshape((b,) + self._shape_in).transpose(self._perm_sys)
        t = t.reshape(b, self.d_sys, self.r_tot)
        y = np.einsum("jpq,bqr->jbpr", self.mats, t)
        gram = np.einsum("jbpr,kbpr->bjk", y.conj(), y)
        q = _softmax(xn[:, self.weight_off:])
        sq = np.sqrt(q)
        rho = sq[:, :, None] * gram * sq[:, None, :]
        rho = 0.5 * (rho + rho.conj().transpose(0, 2, 1))
        return _entropy_rows(np.linalg.eigvalsh(rho))

    def value(self, x: np.ndarray) -> float:
        return float(self.value_batch(x)[0])


class _FullStateObjective:
    """Entropy difference E(U psi) - E(psi) over arbitrary pure inputs."""

    def __init__(self, u: Unitary, bipartition: Bipartition,
                 anc: tuple[int, ...]):
        self.base = _ProductStateObjective(u, bipartition, anc)
        self.total = self.base.total
        self.blocks = [(0, 2 * self.total)]
        self.n_params = 2 * self.total

    def state_batch(self, x: np.ndarray) -> np.ndarray:
        xn = _normalize_blocks(np.atleast_2d(x), self.blocks)
        m = self.total
        return xn[:, :m] + 1j * xn[:, m:]

    def state(self, x: np.ndarray) -> np.ndarray:
        return self.state_batch(x)[0]

    def value_batch(self, x: np.ndarray) -> np.ndarray:
        psi = self.state_batch(x)
        ent_in = _gram_entropy_rows(self.base.cut_matrix(psi))
        ent_out = _gram_entropy_rows(self.base.apply_gate(psi))
        return ent_out - ent_in

    def value(self, x: np.ndarray) -> float:
        return float(self.value_batch(x)[0])


_LADDER = 0.5 ** np.arange(8)
_STALL_TOL = 1e-10
_STALL_LIMIT = 5


def _ascend(obj, x0: np.ndarray, cfg: OptimizerConfig,
            stop_value: float | None = None) -> tuple[np.ndarray, float]:
    """Backtracking finite-difference ascent; accepted values never decrease.

    Each iteration evaluates the forward-difference gradient as one batch and
    a geometric ladder of candidate steps as another; the best improving
    candidate is accepted.  Stops at the ceiling, on a vanishing gradient, on
    steps below step_tol, or after several stalled iterations.
    """
    x = _normalize_blocks(x0, obj.blocks)
    f = obj.value(x)
    step = cfg.init_step
    h = cfg.fd_step
    p = obj.n_params
    rows = np.arange(p)
    stall = 0
    for _ in range(cfg.max_iters):
        if stop_value is not None and f >= stop_value - 1e-12:
            break
        batch = np.tile(x, (p + 1, 1))
        batch[1 + rows, rows] += h
        vals = obj.value_batch(batch)
        g = (vals[1:] - vals[0]) / h
        gnorm = float(np.linalg.norm(g))
        if gnorm < 1e-13:
            break
        accepted = False
        s = step
        for _ in range(4):
            ladder = s * _LADDER
            cands = _normalize_blocks(x[None, :] + ladder[:, None] * g, obj.blocks)
            fc = obj.value_batch(cands)
            k = int(np.argmax(fc))
            if fc[k] > f:
                accepted = True
                break
            s = ladder[-1] * 0.5
            if s * gnorm < cfg.step_tol * 1e-3:
                break
        if not accepted:
            break
        gain = float(fc[k] - f)
        moved = float(np.linalg.norm(cands[k] - x))
        x, f = cands[k], float(fc[k])
        step = min(2.0 * ladder[k], 1.0)
        if moved < cfg.step_tol:
            break
        stall = stall + 1 if gain < _STALL_TOL else 0
        if stall >= _STALL_LIMIT:
            break
    return x, f


def _multistart(obj, cfg: OptimizerConfig, upper: float | None = None,
                extra_starts: Sequence[np.ndarray] = ()) -> tuple[np.ndarray, float, int]:
    """Deterministic multi-start; ties resolve to the earliest start."""
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    best_x, best_f, used = None, -np.inf, 0
    starts = [np.asarray(s, dtype=float) for s in extra_starts]
    for idx in range(len(starts) + cfg.restarts):
        if idx < len(starts):
            x0 = starts[idx]
        else:
            rng = np.random.default_rng(seeds[idx - len(starts)])
            x0 = rng.standard_normal(obj.n_params)
        x, f = _ascend(obj, x0, cfg, stop_value=upper)
        used += 1
        if f > best_f:
            best_x, best_f = x, f
        if upper is not None and best_f >= upper - ATTAIN_TOL:
            break
    return best_x, best_f, used


def _structured_starts(obj: _ProductStateObjective) -> list[np.ndarray]:
    """Deterministic starting points matching controlled-gate optima.

    One start with every party maximally entangled with its ancilla, plus one
    per party where that party sits in an even computational superposition
    (ancilla idle) while the others stay maximally entangled.
    """
    bells = []
    for d, r in zip(obj.dims, obj.anc):
        v = np.zeros(d * r, dtype=complex)
        for k in range(min(d, r)):
            v[k * r + k] = 1.0
        bells.append(v / np.linalg.norm(v))
    starts = [obj.params_from_factors(bells)]
    for i, (d, r) in enumerate(zip(obj.dims, obj.anc)):
        flat = np.zeros(d * r, dtype=complex)
        flat[::r] = 1.0 / sqrt(d)  # ancilla pinned to |0>
        factors = list(bells)
        factors[i] = flat
        starts.append(obj.params_from_factors(factors))
    return starts


def evaluate_product_input(u: Unitary, bipartition: Bipartition,
                           factors: Sequence[np.ndarray]) -> float:
    """Output entropy across the cut for an explicit product input.

    Each factor is a unit vector on one party and its ancilla (system index
    major); ancilla dimensions are inferred from the factor lengths.
    """
    anc = []
    for f, d in zip(factors, u.dims):
        size = np.asarray(f).size
        if size % d:
            raise ValueError(f"factor size {size} not a multiple of dim {d}")
        anc.append(size // d)
    obj = _ProductStateObjective(u, bipartition, tuple(anc))
    return obj.value(obj.params_from_factors(factors))


def numeric_ep_cut(u: Unitary, bipartition: Bipartition, cfg: OptimizerConfig,
                   extra_starts: Sequence[Sequence[np.ndarray]] = ()) -> EpResult:
    """Variational lower bound on the entanglement generation across a cut.

    extra_starts: optional explicit per-party factor lists used as additional
    deterministic starting points before the random restarts.
    """
    anc = ancilla_dims(u.dims, cfg.ancilla)
    lower, upper = ep_bounds(u, bipartition)
    if any(r < d for d, r in zip(u.dims, anc)):
        lower = 0.0  # the coefficient bound assumes full-size ancillas
    obj = _ProductStateObjective(u, bipartition, anc)
    seeds = [obj.params_from_factors(fs) for fs in extra_starts]
    best_x, best_f, used = _multistart(obj, cfg, upper=upper, extra_starts=seeds)
    factors = obj.factors(best_x)
    full = factors[0]
    for f in factors[1:]:
        full = np.kron(full, f)
    return EpResult(
        value=best_f, method="variational", bipartition=bipartition,
        bounds=(lower, upper), certificate_factors=factors,
        certificate_state=PureState(full, obj.local), ancilla_dims=anc,
        seed=cfg.seed, restarts_used=used)


def numeric_ep(u: Unitary, cfg: OptimizerConfig) -> EpResult:
    """Variational entangling power: maximum over all bipartitions."""
    best = None
    for bip in enumerate_bipartitions(u.n_parties):
        res = numeric_ep_cut(u, bip, cfg)
        if best is None or res.value > best.value:
            best = res
    return best


def controlled_ep_cut(control_ranks: Sequence[int],
                      branches: Sequence[Unitary],
                      cfg: OptimizerConfig) -> EpResult:
    """Entanglement generation of a controlled unitary via its branches.

    Maximizes S(sum_j q_j U_j rho U_j^dag) over simplex weights q and product
    inputs rho on the controlled side (ancillas included); the reduction has
    already removed the control-side ancilla.  The value is capped by log2(m).
    """
    m = len(branches)
    if m < 2:
        raise ValueError("need at least two controlled terms")
    if len(control_ranks) != m or any(int(r) < 1 for r in control_ranks):
        raise ValueError("one positive projector rank per branch is required")
    anc = ancilla_dims(branches[0].dims, cfg.ancilla)
    obj = _ControlledMixtureObjective(branches, anc)
    upper = log2(m)
    best_x, best_f, used = _multistart(obj, cfg, upper=upper)
    factors = obj.factors(best_x)
    full = factors[0]
    for f in factors[1:]:
        full = np.kron(full, f)
    return EpResult(
        value=best_f, method="variational", bipartition=None,
        bounds=(0.0, upper), certificate_factors=factors,
        certificate_weights=obj.weights(_normalize_blocks(best_x, obj.blocks)),
        certificate_state=PureState(full, obj.local), ancilla_dims=anc,
        seed=cfg.seed, restarts_used=used)


def detect_controlled_terms(u: Unitary, bipartition: Bipartition) -> int | None:
    """Number of controlled terms across a cut, if the matrix is block
    diagonal in the computational basis of either side; None otherwise."""
    dims = u.dims
    n = len(dims)
    best = None
    for side in (bipartition.left_sorted, bipartition.right_sorted):
        other = tuple(i for i in range(n) if i not in side)
        dc = prod(dims[i] for i in side)
        dt = prod(dims[i] for i in other)
        t = u.matrix.reshape(dims + dims)
        perm = ([i for i in side] + [i for i in other]
                + [n + i for i in side] + [n + i for i in other])
        m4 = t.transpose(perm).reshape(dc, dt, dc, dt)
        off = m4.copy()
        idx = np.arange(dc)
        off[idx, :, idx, :] = 0.0
        if np.max(np.abs(off)) > BLOCK_DIAG_TOL:
            continue
        blocks = [m4[i, :, i, :] for i in range(dc)]
        distinct: list[np.ndarray] = []
        for blk in blocks:
            if not any(np.max(np.abs(blk - d)) <= BLOCK_DIAG_TOL for d in distinct):
                distinct.append(blk)
        if best is None or len(distinct) < best:
            best = len(distinct)
    return best


def numeric_aep_cut(u: Unitary, bipartition: Bipartition,
                    cfg: OptimizerConfig) -> EpResult:
    """Variational lower bound on the assisted entangling power across a cut.

    The input ranges over arbitrary pure states of the full ancilla-extended
    space; the objective is the entropy increase across the cut.
    """
    anc = ancilla_dims(u.dims, cfg.ancilla)
    obj = _FullStateObjective(u, bipartition, anc)
    lower, _ = ep_bounds(u, bipartition)
    if any(r < d for d, r in zip(u.dims, anc)):
        lower = 0.0
    m_terms = detect_controlled_terms(u, bipartition)
    if m_terms is not None:
        upper = log2(m_terms)
    else:
        # no controlled structure detected: trivial entropy-increase cap
        upper = log2(min(obj.base.d_left, obj.base.d_right))
    best_x, best_f, used = _multistart(obj, cfg, upper=upper)
    state = obj.state(best_x)
    return EpResult(
        value=best_f, method="variational", bipartition=bipartition,
        bounds=(lower, upper),
        certificate_state=PureState(state, obj.base.local),
        ancilla_dims=anc, seed=cfg.seed, restarts_used=used)


def numeric_aep(u: Unitary, cfg: OptimizerConfig) -> EpResult:
    """Variational assisted entangling power over all bipartitions."""
    best = None
    for bip in enumerate_bipartitions(u.n_parties):
        res = numeric_aep_cut(u, bip, cfg)
        if best is None or res.value > best.value:
            best = res
    return best


@dataclass(frozen=True)
class ConjectureProbeReport:
    """Evidence-grade search across the AD:BC cut of the four-qubit Fredkin."""

    best: EpResult
    seeded_value: float
    bound_interval: tuple[float, float]
    exceeds_two: bool
    restarts: int


def fredkin4_conjecture_probe(cfg: OptimizerConfig) -> ConjectureProbeReport:
    """Probe whether the AD:BC generation of F4 exceeds two ebits.

    Reports the best value found (never asserted as ground truth), the
    certificate, the a-priori interval [2, log2 5], and the value at the
    known input attaining exactly two ebits.
    """
    cfg = replace(cfg, ancilla="match")
    u = fredkin4()
    bip = cut({0, 3}, 4)
    e1 = np.zeros(4, dtype=complex)
    e1[2] = 1.0  # |1>_sys |0>_anc
    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 1.0 / sqrt(2.0)
    seed_factors = [e1, e1.copy(), bell, bell.copy()]
    seeded_value = evaluate_product_input(u, bip, seed_factors)
    result = numeric_ep_cut(u, bip, cfg, extra_starts=[seed_factors])
    return ConjectureProbeReport(
        best=result,
        seeded_value=seeded_value,
        bound_interval=(2.0, log2(5.0)),
        exceeds_two=bool(result.value > 2.0 + cfg.value_tol),
        restarts=cfg.restarts)
