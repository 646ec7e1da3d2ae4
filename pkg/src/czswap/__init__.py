"""Exact toolkit for circuits of c-Z and SWAP gates.

The package normalizes such circuits through the group law
(E, s)(E', s') = (E xor s(E'), s o s'), resynthesizes and rewrites them for
the complete-graph and line topologies, simulates everything exactly (signed
permutations, or dense matrices over Q(i)[sqrt2] once H/X appear), and
classifies the entanglement of the states these circuits create from product
states, with brute-force oracles backing every claim at desk scale.
"""

from .circuit import (
    Circuit,
    CircuitSyntaxError,
    Gate,
    Topology,
    check_topology,
    cz,
    h,
    parse_circuit,
    serialize_circuit,
    swap,
    x,
)
from .four_qubit import (
    Covariants4,
    Invariants4,
    Phi4Classification,
    Quartic,
    RootConfig,
    classify_phi4,
    covariants4,
    invariants4,
    quartics,
    root_config,
)
from .five_qubit import (
    GENERICALLY_NONSINGULAR,
    FiveQubitWitness,
    WitnessNotFound,
    tabulated_solution_5q,
)
from .group import (
    NormalForm,
    PairSet,
    Permutation,
    conjugate_pairs,
    nf_inverse,
    nf_product,
)
from .hyperdet import SystemSolution, ghz_generic, ground_form, hyperdet_system_check
from .optimize import (
    bfs_minimize,
    circuit_to_word,
    dehn_reduce,
    heuristic_line_reduce,
    normalize,
    rothe_reduced_word,
    synthesize_complete,
    word_to_circuit,
)
from .poly import MultiPoly, VarId, differentiate, poly_is_zero, transvect
from .ring import RingScalar
from .simulate import (
    Presentation,
    RingMatrix,
    SignedPerm,
    apply_circuit,
    circuit_unitary,
    enumerate_group,
    equivalent,
    signed_perm_of,
    verify_presentation,
)
from .states import (
    ParamSpec,
    PureState,
    g_abcd_state,
    ghz_circuit,
    named_state,
    phi_state,
    random_params,
)
from .three_qubit import Class3, catalecticant3, classify3, delta3
from .words import GeneratorWord, RelationSet

__all__ = [name for name in dir() if not name.startswith("_")]
