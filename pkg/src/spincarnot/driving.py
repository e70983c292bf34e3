"""Time-dependent Hamiltonian schedules and the unitary Bloch propagator.

The two adiabatic strokes share one form: the field magnitude interpolates
linearly in frequency while the field axis sweeps a quarter turn in the x-y
plane, H(t) = -(h*nu(t)/2)[cos(pi*t/2tau)*s_a + sin(pi*t/2tau)*s_b], with
(a, b) = (y, x) for compression and (x, y) for expansion.

Propagation composes exact constant-field rotations sampled at substep
midpoints (exponential midpoint rule, 2nd order), with step doubling for
convergence control.  The inner loop lives in a compiled extension when
available; a pure-Python twin is selected otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import HBAR_PEV_MS, PLANCK_PEV_MS
from .errors import ConvergenceError, DomainError
from .state import DensityMatrix, QubitOperator, trace_distance

try:
    from . import _kernel as _kernel_mod
except ImportError:  # compiled extension not built
    from . import _kernel_py as _kernel_mod

KERNEL_BACKEND = _kernel_mod.BACKEND
_propagate_bloch = _kernel_mod.propagate_bloch

COMPRESSION = "compression"
EXPANSION = "expansion"
_KIND_CODE = {COMPRESSION: 0, EXPANSION: 1}

MIN_STEPS = 256
MAX_STEPS = 2**24


@dataclass(frozen=True)
class HamiltonianSchedule:
    """One adiabatic stroke: drive nu_start -> nu_end over tau ms."""

    kind: str
    nu_start: float
    nu_end: float
    tau: float

    def __post_init__(self):
        if self.kind not in _KIND_CODE:
            raise DomainError(f"unknown schedule kind {self.kind!r}")
        if self.nu_start <= 0.0 or self.nu_end <= 0.0:
            raise DomainError("schedule frequencies must be positive")
        if self.tau <= 0.0:
            raise DomainError("schedule duration must be positive")


@dataclass(frozen=True)
class PropagationResult:
    final_state: DensityMatrix
    steps_used: int
    convergence_estimate: float


def evaluate_schedule(s: HamiltonianSchedule, t: float) -> QubitOperator:
    """Instantaneous Hamiltonian at time t in [0, tau]."""
    if t < 0.0 or t > s.tau:
        raise DomainError(f"t={t} outside [0, {s.tau}]")
    nu = s.nu_start + (s.nu_end - s.nu_start) * (t / s.tau)
    phi = 0.5 * math.pi * (t / s.tau)
    c = -0.5 * PLANCK_PEV_MS * nu
    if s.kind == COMPRESSION:
        return QubitOperator(cx=c * math.sin(phi), cy=c * math.cos(phi))
    return QubitOperator(cx=c * math.cos(phi), cy=c * math.sin(phi))


def pauli_rotation_step(
    H: QubitOperator, dt: float, rho: DensityMatrix
) -> DensityMatrix:
    """Exact evolution under constant H for time dt.

    The Bloch vector precesses about the field axis at angular rate 2r/hbar;
    the identity part c0 only shifts the global phase.
    """
    r = H.pauli_norm
    if r == 0.0:
        return rho
    nx, ny, nz = H.cx / r, H.cy / r, H.cz / r
    alpha = 2.0 * r * dt / HBAR_PEV_MS
    ca, sa = math.cos(alpha), math.sin(alpha)
    dot = (1.0 - ca) * (nx * rho.rx + ny * rho.ry + nz * rho.rz)
    return DensityMatrix(
        rho.rx * ca + (ny * rho.rz - nz * rho.ry) * sa + nx * dot,
        rho.ry * ca + (nz * rho.rx - nx * rho.rz) * sa + ny * dot,
        rho.rz * ca + (nx * rho.ry - ny * rho.rx) * sa + nz * dot,
    )


def propagate(
    s: HamiltonianSchedule, rho0: DensityMatrix, n_steps: int
) -> DensityMatrix:
    """Fixed-step propagation over the whole schedule."""
    if n_steps < 1:
        raise DomainError("n_steps must be >= 1")
    rx, ry, rz = _propagate_bloch(
        _KIND_CODE[s.kind], s.nu_start, s.nu_end, s.tau,
        rho0.rx, rho0.ry, rho0.rz, n_steps,
    )
    return DensityMatrix(rx, ry, rz)


def propagate_converged(
    s: HamiltonianSchedule, rho0: DensityMatrix, tol: float
) -> PropagationResult:
    """Double the step count until successive refinements agree within tol."""
    if not (0.0 < tol < 1.0):
        raise DomainError(f"tolerance must be in (0, 1), got {tol}")
    n = MIN_STEPS
    coarse = propagate(s, rho0, n)
    while n < MAX_STEPS:
        n *= 2
        fine = propagate(s, rho0, n)
        est = trace_distance(coarse, fine)
        if est < tol:
            return PropagationResult(fine, n, est)
        coarse = fine
    raise ConvergenceError(
        f"no convergence to {tol} within {MAX_STEPS} steps (tau={s.tau} ms)"
    )
