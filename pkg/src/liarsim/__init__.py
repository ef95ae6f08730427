"""Quantum-style simulation of m-sentence liar cycles.

A paradoxical cycle of m sentences has no consistent classical truth
assignment, but reasoning about it is a perfectly regular process: a closed
walk of 2m hypothesis events.  This package models that walk as a state
vector on 2m basis states of an m-fold tensor space, with hypothesis
measurements as diagonal projectors and one reasoning step as a unitary
permutation whose matrix logarithm extends the dynamics to continuous time.
"""

from .audit import (
    AUDIT_BOUND,
    Constraint,
    ConstraintSystem,
    Contradiction,
    ContradictionWitness,
    MinimalityReport,
    Satisfiable,
    build_constraints,
    report_to_json,
    solve_constraints,
    verify_minimality,
)
from .config import (
    ENUMERATION_BOUND,
    Configuration,
    config_from_json,
    config_to_json,
    count_paradoxical,
    eight_liar,
    enumerate_paradoxical,
    is_paradoxical,
    one_liar,
    simple_liar,
    validate,
)
from .errors import (
    BoundExceeded,
    LiarSimError,
    NotParadoxical,
    NotSingleCycle,
    OutOfRange,
    SupportOutsideSubspace,
    UnsupportedDimension,
    ZeroProbabilityMeasurement,
)
from .evolution import (
    SubspaceEvolution,
    TraceRow,
    apply_steps,
    build_evolution,
    fourier_frame,
    hamiltonian,
    principal_phases,
    probability_trace,
    propagate,
    propagator,
    step_matrix,
    time_grid,
    trace_to_csv,
    trace_to_json,
)
from .inference import (
    HypothesisStep,
    ReasoningCycle,
    cycle_from_json,
    cycle_to_json,
    infer_next,
    reasoning_cycle,
)
from .measurement import (
    ProjectorSpec,
    apply_projector,
    collapse,
    falsehood_hypothesis_projector,
    hypothesis_projector,
    inference_projector,
    projection_probability,
    single_entry_projector,
    truth_hypothesis_projector,
)
from .statespace import (
    NORM_TOLERANCE,
    EntryMeaning,
    SparseState,
    build_initial_state,
    canonical_entry_cycle,
    cycle_states,
    interpret_entry,
    kappa,
    kappa_inverse,
    state_from_json,
    state_to_json,
)
from .verify import (
    CANONICAL_EIGHT_EMBEDDED,
    CANONICAL_EIGHT_TUPLES,
    CheckResult,
    all_passed,
    run_verification,
)

__version__ = "0.1.0"

__all__ = [
    "AUDIT_BOUND",
    "BoundExceeded",
    "CANONICAL_EIGHT_EMBEDDED",
    "CANONICAL_EIGHT_TUPLES",
    "CheckResult",
    "Configuration",
    "Constraint",
    "ConstraintSystem",
    "Contradiction",
    "ContradictionWitness",
    "ENUMERATION_BOUND",
    "EntryMeaning",
    "HypothesisStep",
    "LiarSimError",
    "MinimalityReport",
    "NORM_TOLERANCE",
    "NotParadoxical",
    "NotSingleCycle",
    "OutOfRange",
    "ProjectorSpec",
    "ReasoningCycle",
    "Satisfiable",
    "SparseState",
    "SubspaceEvolution",
    "SupportOutsideSubspace",
    "TraceRow",
    "UnsupportedDimension",
    "ZeroProbabilityMeasurement",
    "all_passed",
    "apply_projector",
    "apply_steps",
    "build_constraints",
    "build_evolution",
    "build_initial_state",
    "canonical_entry_cycle",
    "collapse",
    "config_from_json",
    "config_to_json",
    "count_paradoxical",
    "cycle_from_json",
    "cycle_states",
    "cycle_to_json",
    "eight_liar",
    "enumerate_paradoxical",
    "falsehood_hypothesis_projector",
    "fourier_frame",
    "hamiltonian",
    "hypothesis_projector",
    "infer_next",
    "inference_projector",
    "interpret_entry",
    "is_paradoxical",
    "kappa",
    "kappa_inverse",
    "one_liar",
    "principal_phases",
    "probability_trace",
    "projection_probability",
    "propagate",
    "propagator",
    "reasoning_cycle",
    "report_to_json",
    "run_verification",
    "simple_liar",
    "single_entry_projector",
    "solve_constraints",
    "state_from_json",
    "state_to_json",
    "step_matrix",
    "time_grid",
    "trace_to_csv",
    "trace_to_json",
    "truth_hypothesis_projector",
    "validate",
    "verify_minimality",
]
