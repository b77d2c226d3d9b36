"""Transfer-function analysis of discrete classical input/output systems.

Deterministic and stochastic systems in the transition and transfer
pictures, causal-loop constraints, the exact LP of the consistent region
of transfer probabilities, systematic derivation of Bell-type
inequalities, spacetime admissibility of classical wiring, and the
simplified/double Bell constructions.
"""

from .systems import (
    CapExceededError,
    DeterministicSystem,
    LayoutMismatchError,
    LoopStatus,
    PortLayout,
    PortSpec,
    TransferFunction,
    binary_gates,
    close_loop,
    combine_parallel,
    compose_series,
    constant_function,
    count_parallel_transfer_functions,
    count_parallel_transitions,
    count_transfer_functions,
    count_transitions,
    elementary_binary_layout,
    enumerate_transfer_functions,
    function_from_index,
    identity_function,
    loop_status,
    not_function,
)
from .stochastic import (
    JointTransferDistribution,
    LoopAnalysis,
    TransferDistribution,
    TransitionTable,
    count_independent_transition_probabilities,
    is_factorized,
    product_distribution,
    series_transfer_distribution,
    stochastic_loop_analysis,
    transitions_from_transfers,
)
from .simplex import FarkasCertificate
from .polytope import (
    ConsistencyProblem,
    DerivedInequality,
    FeasibilityReport,
    LinearConstraint,
    UnderdeterminedError,
    WeakSignalReport,
    apply_perfect_correlation,
    build_consistency_problem,
    certify_weak_signal,
    derive_inequalities,
    expectation_value,
    restrict_to_local,
    restricted_vertices,
    solve_feasibility,
)
from .spacetime import (
    Event,
    Interval,
    PortPlacement,
    WiringReport,
    boost,
    classify_interval,
    pi_rotation,
    validate_classical_wiring,
)
from .experiments import (
    CHANNEL_LAYOUT,
    BellScenario,
    BellViolationReport,
    DoubleBellNetwork,
    DoubleBellVerdict,
    SimplifiedBell,
    assumption_audit,
    bell_inequalities,
    bell_layout,
    bell_partition,
    bell_problem,
    bell_scenario,
    bell_symbol_order,
    bell_violation_report,
    build_double_bell_network,
    build_simplified_bell,
    double_bell_placements,
    double_bell_verdict,
    singlet_outcome_probability,
    singlet_table,
    standard_bell_placements,
)

__version__ = "0.1.0"
