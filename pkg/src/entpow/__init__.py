"""Entangling power of multipartite unitary gates.

Closed-form values for Schmidt-rank-two multi-qubit unitaries via minimum
convex sums of unit-modulus phases, operator Schmidt decompositions with the
entropy sandwich bounds, constructors for the named gates (Toffoli, CCP,
Fredkin, cyclic shift), and an independent variational maximizer of output
entropy for cross-validation.
"""

from .analytic import (ControlledDiagonalSpec, TableISpec, ThreeQubitSr2Spec,
                       aep_ceiling, aep_is_maximal_3qubit,
                       aep_is_maximal_nqubit, ep_3qubit_sr2,
                       ep_controlled_diagonal, ep_nqubit_sr2,
                       governing_phase_sets, phase_sets_3qubit,
                       value_from_phase_set)
from .gates import (Unitary, ccp, ccz, cnot, controlled_diagonal,
                    cyclic_shift3, fredkin3, fredkin4, haar_unitary, swap,
                    table1_gate, three_qubit_sr2_gate, toffoli)
from .io import load_matrix, save_matrix
from .linalg import (DensityOperator, PureState, binary_entropy,
                     entanglement_entropy, kron, partial_trace,
                     von_neumann_entropy)
from .phases import (PhaseMultiset, max_convex_sum, min_convex_sum,
                     min_convex_sum_oracle, normalize_phases, origin_in_hull)
from .schmidt import (Bipartition, SchmidtDecomposition, cut, ep_bounds,
                      schmidt_decompose, schmidt_rank)
from .variational import (ConjectureProbeReport, EpResult, OptimizerConfig,
                          controlled_ep_cut, enumerate_bipartitions,
                          evaluate_product_input, fredkin4_conjecture_probe,
                          numeric_aep, numeric_aep_cut, numeric_ep,
                          numeric_ep_cut)

__all__ = [
    "Bipartition", "ConjectureProbeReport", "ControlledDiagonalSpec",
    "DensityOperator", "EpResult", "OptimizerConfig", "PhaseMultiset",
    "PureState", "SchmidtDecomposition", "TableISpec", "ThreeQubitSr2Spec",
    "Unitary", "aep_ceiling", "aep_is_maximal_3qubit", "aep_is_maximal_nqubit",
    "binary_entropy", "ccp", "ccz", "cnot", "controlled_diagonal",
    "controlled_ep_cut", "cut", "cyclic_shift3", "enumerate_bipartitions",
    "entanglement_entropy", "ep_3qubit_sr2", "ep_bounds",
    "ep_controlled_diagonal", "ep_nqubit_sr2", "evaluate_product_input",
    "fredkin3", "fredkin4", "fredkin4_conjecture_probe",
    "governing_phase_sets", "haar_unitary", "kron", "load_matrix",
    "max_convex_sum", "min_convex_sum", "min_convex_sum_oracle", "numeric_aep",
    "numeric_aep_cut", "numeric_ep", "numeric_ep_cut", "normalize_phases",
    "origin_in_hull", "partial_trace", "phase_sets_3qubit", "save_matrix",
    "schmidt_decompose", "schmidt_rank", "swap", "table1_gate",
    "three_qubit_sr2_gate", "toffoli", "value_from_phase_set",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
