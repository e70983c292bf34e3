"""Six-stroke irreversible Carnot cycle on a driven spin-1/2.

Stroke order: A->B (isothermal, hot, y axis), B->C' (unitary compression),
C'->C (relaxation with the cold bath), C->D (isothermal, cold, x axis),
D->A' (unitary expansion), A'->A (relaxation with the hot bath).

Sign conventions: q > 0 means heat absorbed by the spin; work > 0 means net
work extracted over the cycle (per stroke w = dU - q, so w > 0 is work done
on the spin).  Isothermal and relaxation strokes are endpoint maps: their
heats depend only on the terminal states, no intermediate dynamics is
resolved.  The frequency corners obey nu_C = (T_L/T_H) nu_B and
nu_A = (T_H/T_L) nu_D, which makes the spin spectrum scale invariant between
the hot and cold branches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .driving import (
    COMPRESSION,
    EXPANSION,
    HamiltonianSchedule,
    propagate_converged,
)
from .errors import ConsistencyError, DomainError
from .state import (
    DensityMatrix,
    QubitOperator,
    coherence,
    dephase,
    field_operator,
    gibbs_state,
    mean_energy,
    relative_entropy,
    von_neumann_entropy,
)

ENGINE = "engine"
NON_ENGINE = "non_engine"

# tolerance of the friction identity T * S(rho'||rho) == -q_relax (peV)
FRICTION_IDENTITY_TOL = 1e-8


@dataclass(frozen=True)
class CycleParams:
    """All cycle inputs; nu_C and nu_A are derived, never supplied."""

    nu_B: float = 3.6
    nu_D: float = 2.0
    T_L: float = 6.6
    T_H: float = 16.5
    tau: float = 1.0
    tol: float = 1e-10

    def __post_init__(self):
        if not (self.T_H > self.T_L > 0.0):
            raise DomainError(
                f"need T_H > T_L > 0, got T_H={self.T_H}, T_L={self.T_L}"
            )
        if self.nu_B <= 0.0 or self.nu_D <= 0.0:
            raise DomainError("frequencies must be positive")
        if self.tau <= 0.0:
            raise DomainError("tau must be positive")
        if not (0.0 < self.tol < 1.0):
            raise DomainError("tol must be in (0, 1)")

    @property
    def nu_C(self) -> float:
        return (self.T_L / self.T_H) * self.nu_B

    @property
    def nu_A(self) -> float:
        return (self.T_H / self.T_L) * self.nu_D

    @property
    def eta_carnot(self) -> float:
        return 1.0 - self.T_L / self.T_H


@dataclass(frozen=True)
class StrokeRecord:
    label: str
    q: float
    w: float
    state_in: DensityMatrix
    state_out: DensityMatrix
    h_in: QubitOperator
    h_out: QubitOperator

    @property
    def delta_u(self) -> float:
        return mean_energy(self.h_out, self.state_out) - mean_energy(
            self.h_in, self.state_in
        )


@dataclass
class CycleReport:
    params: CycleParams
    strokes: dict[str, StrokeRecord] = field(default_factory=dict)
    q_in: float = 0.0
    q_out: float = 0.0
    work: float = 0.0
    eta: float | None = None
    eta_carnot: float = 0.0
    lag: float | None = None
    fric_comp: float = 0.0
    fric_exp: float = 0.0
    srel_c: float = 0.0
    srel_a: float = 0.0
    coh_c: float = 0.0
    pop_c: float = 0.0
    coh_a: float = 0.0
    pop_a: float = 0.0
    mode: str = NON_ENGINE


def run_isothermal(
    T: float, nu_start: float, nu_end: float, axis: str, label: str = "iso"
) -> StrokeRecord:
    """Quasi-static isothermal stroke: endpoints are Gibbs states, q = T*dS."""
    if T <= 0.0:
        raise DomainError("temperature must be positive")
    if nu_start <= 0.0 or nu_end <= 0.0:
        raise DomainError("frequencies must be positive")
    h_in = field_operator(nu_start, axis)
    h_out = field_operator(nu_end, axis)
    rho_in = gibbs_state(h_in, T)
    rho_out = gibbs_state(h_out, T)
    q = T * (von_neumann_entropy(rho_out) - von_neumann_entropy(rho_in))
    du = mean_energy(h_out, rho_out) - mean_energy(h_in, rho_in)
    return StrokeRecord(label, q, du - q, rho_in, rho_out, h_in, h_out)


def run_adiabatic(
    s: HamiltonianSchedule, rho0: DensityMatrix, tol: float, label: str = "adia"
) -> StrokeRecord:
    """Unitary driven stroke: q = 0, work is the full energy change."""
    from .driving import evaluate_schedule

    h_in = evaluate_schedule(s, 0.0)
    h_out = evaluate_schedule(s, s.tau)
    result = propagate_converged(s, rho0, tol)
    rho_out = result.final_state
    du = mean_energy(h_out, rho_out) - mean_energy(h_in, rho0)
    return StrokeRecord(label, 0.0, du, rho0, rho_out, h_in, h_out)


def run_relaxation(
    rho_prime: DensityMatrix, H: QubitOperator, T: float, label: str = "relax"
) -> StrokeRecord:
    """Isochoric thermalization: the state snaps to Gibbs, only heat flows."""
    if T <= 0.0:
        raise DomainError("temperature must be positive")
    rho_eq = gibbs_state(H, T)
    q = mean_energy(H, rho_eq) - mean_energy(H, rho_prime)
    return StrokeRecord(label, q, 0.0, rho_prime, rho_eq, H, H)


def friction(report: CycleReport) -> tuple[float, float]:
    """Inner friction of each unitary stroke, T * S(rho'||rho) in peV.

    Recomputes the relative-entropy side and asserts it matches the
    relaxation heat; a violation signals an integrator or entropy bug.
    """
    p = report.params
    fric_comp = p.T_L * report.srel_c
    fric_exp = p.T_H * report.srel_a
    for name, fr, q in (
        ("compression", fric_comp, report.strokes["CpC"].q),
        ("expansion", fric_exp, report.strokes["ApA"].q),
    ):
        if abs(fr + q) > FRICTION_IDENTITY_TOL:
            raise ConsistencyError(
                f"friction identity violated for {name}: "
                f"T*S_rel={fr!r} vs -q_relax={-q!r}"
            )
    return fric_comp, fric_exp


def efficiency_lag(report: CycleReport) -> float | None:
    """Efficiency shortfall T_L*(S_rel,C + S_rel,A)/q_in; None when q_in <= 0."""
    if report.q_in <= 0.0:
        return None
    return report.params.T_L * (report.srel_c + report.srel_a) / report.q_in


def decompose_friction(report: CycleReport) -> tuple[float, float, float, float]:
    """Split each relaxation's relative entropy into coherence + population parts."""
    out = []
    for key in ("CpC", "ApA"):
        stroke = report.strokes[key]
        rho_prime, h, rho_eq = stroke.state_in, stroke.h_in, stroke.state_out
        coh = coherence(rho_prime, h)
        pop = relative_entropy(dephase(rho_prime, h), rho_eq)
        out.extend((coh, pop))
    coh_c, pop_c, coh_a, pop_a = out
    return coh_c, pop_c, coh_a, pop_a


def run_cycle(p: CycleParams) -> CycleReport:
    """Execute A->B->C'->C->D->A'->A and assemble all cycle observables."""
    report = CycleReport(params=p, eta_carnot=p.eta_carnot)

    ab = run_isothermal(p.T_H, p.nu_A, p.nu_B, "y", "AB")
    comp = HamiltonianSchedule(COMPRESSION, p.nu_B, p.nu_C, p.tau)
    bcp = run_adiabatic(comp, ab.state_out, p.tol, "BCp")
    h_c = field_operator(p.nu_C, "x")
    cpc = run_relaxation(bcp.state_out, h_c, p.T_L, "CpC")
    cd = run_isothermal(p.T_L, p.nu_C, p.nu_D, "x", "CD")
    expn = HamiltonianSchedule(EXPANSION, p.nu_D, p.nu_A, p.tau)
    dap = run_adiabatic(expn, cd.state_out, p.tol, "DAp")
    h_a = field_operator(p.nu_A, "y")
    apa = run_relaxation(dap.state_out, h_a, p.T_H, "ApA")

    for s in (ab, bcp, cpc, cd, dap, apa):
        report.strokes[s.label] = s

    report.q_in = apa.q + ab.q
    report.q_out = cpc.q + cd.q
    report.work = report.q_in + report.q_out
    if report.q_in > 0.0:
        report.eta = 1.0 + report.q_out / report.q_in

    report.srel_c = relative_entropy(bcp.state_out, cpc.state_out)
    report.srel_a = relative_entropy(dap.state_out, apa.state_out)
    report.fric_comp, report.fric_exp = friction(report)
    report.lag = efficiency_lag(report)
    report.coh_c, report.pop_c, report.coh_a, report.pop_a = decompose_friction(
        report
    )

    if report.work > 0.0 and report.q_in > 0.0 and report.q_out < 0.0:
        report.mode = ENGINE
    return report


def check_scale_invariance(
    gaps_hot: list[float],
    gaps_cold: list[float],
    T_H: float,
    T_L: float,
    tol: float = 1e-12,
) -> tuple[bool, str | None]:
    """Verify every hot/cold gap ratio equals T_H/T_L within tol.

    Returns (True, None) on pass, (False, reason) naming the first violating
    index otherwise.
    """
    if len(gaps_hot) != len(gaps_cold):
        raise DomainError("gap lists must have equal length")
    if not gaps_hot:
        raise DomainError("gap lists must be non-empty")
    if any(g <= 0.0 for g in gaps_hot) or any(g <= 0.0 for g in gaps_cold):
        raise DomainError("all gaps must be positive")
    if not (T_H > 0.0 and T_L > 0.0):
        raise DomainError("temperatures must be positive")
    lam = T_H / T_L
    for k, (gh, gc) in enumerate(zip(gaps_hot, gaps_cold)):
        ratio = gh / gc
        if not math.isclose(ratio, lam, rel_tol=tol, abs_tol=tol):
            return False, (
                f"gap ratio {ratio} at index {k} differs from T_H/T_L = {lam}"
            )
    return True, None
