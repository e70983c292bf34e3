"""Algebra of 2x2 Hermitian operators and qubit density matrices.

Operators are stored in the Pauli basis, O = c0*I + cx*sx + cy*sy + cz*sz,
and states as Bloch vectors, rho = (I + r.sigma)/2.  Hermiticity and unit
trace then hold by construction and every operation below has a closed form.
Entropies are in nats (k_B = 1), energies in peV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidStateError

# Bloch norms in (1, 1 + POSITIVITY_TOL] are renormalized to 1 (integrator
# roundoff); anything larger is rejected.
POSITIVITY_TOL = 1e-12

# sigma with Bloch norm above this is treated as singular in relative_entropy.
FULL_RANK_TOL = 1e-12


@dataclass(frozen=True)
class QubitOperator:
    """Hermitian 2x2 operator c0*I + cx*sx + cy*sy + cz*sz (coefficients in peV)."""

    c0: float = 0.0
    cx: float = 0.0
    cy: float = 0.0
    cz: float = 0.0

    def __post_init__(self):
        for v in (self.c0, self.cx, self.cy, self.cz):
            if not math.isfinite(v):
                raise DomainError("operator coefficients must be finite")

    @property
    def pauli_norm(self) -> float:
        """Half the energy gap: r with eigenvalues c0 +/- r."""
        return math.sqrt(self.cx**2 + self.cy**2 + self.cz**2)

    def eigenvalues(self) -> tuple[float, float]:
        r = self.pauli_norm
        return (self.c0 - r, self.c0 + r)

    def axis(self) -> tuple[float, float, float]:
        """Unit vector along the Pauli part; undefined for degenerate operators."""
        r = self.pauli_norm
        if r == 0.0:
            raise DomainError("degenerate operator has no field axis")
        return (self.cx / r, self.cy / r, self.cz / r)


def field_operator(nu_khz: float, axis: str) -> QubitOperator:
    """The stroke-endpoint Hamiltonian -(h*nu/2) sigma_axis."""
    from .constants import PLANCK_PEV_MS

    c = -0.5 * PLANCK_PEV_MS * nu_khz
    if axis == "x":
        return QubitOperator(cx=c)
    if axis == "y":
        return QubitOperator(cy=c)
    if axis == "z":
        return QubitOperator(cz=c)
    raise DomainError(f"unknown axis {axis!r}")


@dataclass(frozen=True)
class DensityMatrix:
    """Qubit state (I + rx*sx + ry*sy + rz*sz)/2 with Bloch norm <= 1."""

    rx: float = 0.0
    ry: float = 0.0
    rz: float = 0.0

    def __post_init__(self):
        n = math.sqrt(self.rx**2 + self.ry**2 + self.rz**2)
        if not math.isfinite(n) or n > 1.0 + POSITIVITY_TOL:
            raise InvalidStateError(f"Bloch norm {n} violates positivity")
        if n > 1.0:
            scale = 1.0 / n
            object.__setattr__(self, "rx", self.rx * scale)
            object.__setattr__(self, "ry", self.ry * scale)
            object.__setattr__(self, "rz", self.rz * scale)

    @property
    def r0(self) -> float:
        return 0.5

    @property
    def bloch_norm(self) -> float:
        return math.sqrt(self.rx**2 + self.ry**2 + self.rz**2)

    def purity(self) -> float:
        """tr(rho^2) = (1 + |r|^2)/2."""
        return 0.5 * (1.0 + self.bloch_norm**2)


MAXIMALLY_MIXED = DensityMatrix(0.0, 0.0, 0.0)


def gibbs_state(H: QubitOperator, T: float) -> DensityMatrix:
    """Thermal state exp(-H/T)/Z: Bloch vector -tanh(r/T) along the field axis."""
    if T <= 0.0 or not math.isfinite(T):
        raise DomainError(f"temperature must be positive, got {T}")
    r = H.pauli_norm
    if r == 0.0:
        return MAXIMALLY_MIXED
    m = -math.tanh(r / T) / r
    return DensityMatrix(m * H.cx, m * H.cy, m * H.cz)


def mean_energy(H: QubitOperator, rho: DensityMatrix) -> float:
    """tr(H rho) in peV."""
    return H.c0 + H.cx * rho.rx + H.cy * rho.ry + H.cz * rho.rz


def _binary_entropy(p: float) -> float:
    q = 1.0 - p
    s = 0.0
    if p > 0.0:
        s -= p * math.log(p)
    if q > 0.0:
        s -= q * math.log(q)
    return s


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-tr(rho ln rho) in nats; eigenvalues are (1 +/- |r|)/2."""
    return _binary_entropy(0.5 * (1.0 + rho.bloch_norm))


def _log_sigma_coeffs(sigma: DensityMatrix) -> tuple[float, float]:
    """ln(sigma) = a0*I + a1*(s_hat . sigma_vec); returns (a0, a1/|s| applied later)."""
    s = sigma.bloch_norm
    lp = math.log(0.5 * (1.0 + s))
    lm = math.log(0.5 * (1.0 - s))
    return 0.5 * (lp + lm), 0.5 * (lp - lm)


def relative_entropy(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """S(rho||sigma) = tr(rho(ln rho - ln sigma)) in nats; sigma must be full rank."""
    s = sigma.bloch_norm
    if s > 1.0 - FULL_RANK_TOL:
        raise DomainError("sigma is (near-)singular; relative entropy diverges")
    a0, a1 = _log_sigma_coeffs(sigma)
    if s > 0.0:
        overlap = (rho.rx * sigma.rx + rho.ry * sigma.ry + rho.rz * sigma.rz) / s
    else:
        overlap = 0.0
    # tr(rho ln rho) = -S(rho); tr(rho ln sigma) = a0 + a1 * (r . s_hat)
    val = -von_neumann_entropy(rho) - (a0 + a1 * overlap)
    # exact non-negativity can be lost to roundoff near rho == sigma
    return max(val, 0.0)


def dephase(rho: DensityMatrix, H: QubitOperator) -> DensityMatrix:
    """Projection onto H's eigenbasis: keep the Bloch component along the field axis."""
    ax, ay, az = H.axis()
    dot = rho.rx * ax + rho.ry * ay + rho.rz * az
    return DensityMatrix(dot * ax, dot * ay, dot * az)


def coherence(rho: DensityMatrix, H: QubitOperator) -> float:
    """Relative entropy of coherence in H's eigenbasis: S(dephase(rho)) - S(rho)."""
    val = von_neumann_entropy(dephase(rho, H)) - von_neumann_entropy(rho)
    return max(val, 0.0)


def trace_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """(1/2)||a - b||_1 = half the Euclidean Bloch distance."""
    return 0.5 * math.sqrt(
        (a.rx - b.rx) ** 2 + (a.ry - b.ry) ** 2 + (a.rz - b.rz) ** 2
    )


def commutator_norm(A: QubitOperator, B: QubitOperator) -> float:
    """Frobenius norm of [A, B] = 2i (a x b).sigma_vec."""
    cx = A.cy * B.cz - A.cz * B.cy
    cy = A.cz * B.cx - A.cx * B.cz
    cz = A.cx * B.cy - A.cy * B.cx
    return 2.0 * math.sqrt(2.0) * math.sqrt(cx**2 + cy**2 + cz**2)
