"""Six-stroke irreversible quantum Carnot cycle on a driven spin-1/2.

Bloch-vector state algebra, unitary propagation of the driven spin with
step-doubling convergence control, cycle bookkeeping (heats, work,
efficiency, inner friction, efficiency lag, coherence/population split),
and a CLI for parameter sweeps.
"""

from .constants import HBAR_PEV_MS, K_BOLTZMANN, PLANCK_PEV_MS
from .cycle import (
    ENGINE,
    NON_ENGINE,
    CycleParams,
    CycleReport,
    StrokeRecord,
    check_scale_invariance,
    decompose_friction,
    efficiency_lag,
    friction,
    run_adiabatic,
    run_cycle,
    run_isothermal,
    run_relaxation,
)
from .driving import (
    COMPRESSION,
    EXPANSION,
    KERNEL_BACKEND,
    HamiltonianSchedule,
    PropagationResult,
    evaluate_schedule,
    pauli_rotation_step,
    propagate,
    propagate_converged,
)
from .errors import (
    ConsistencyError,
    ConvergenceError,
    DomainError,
    InvalidStateError,
)
from .state import (
    MAXIMALLY_MIXED,
    DensityMatrix,
    QubitOperator,
    coherence,
    commutator_norm,
    dephase,
    field_operator,
    gibbs_state,
    mean_energy,
    relative_entropy,
    trace_distance,
    von_neumann_entropy,
)

__version__ = "0.1.0"
