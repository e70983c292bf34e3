# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot loop: midpoint-sampled exact Bloch rotations for the driven spin.

Mirrors _kernel_py.propagate_bloch; keep the two implementations in sync.
"""

from libc.math cimport sin, cos, M_PI

BACKEND = "cython"


def propagate_bloch(int kind, double nu_start, double nu_end, double tau,
                    double rx, double ry, double rz, long n_steps):
    """Compose n_steps exact rotations under the midpoint Hamiltonian.

    kind 0: compression axis (sin(phi), cos(phi), 0); kind 1: expansion axis
    (cos(phi), sin(phi), 0), phi = pi*t/(2*tau).  The field is -(h*nu/2) along
    that axis, so each substep rotates the Bloch vector about +axis by
    -2*pi*nu*dt.
    """
    cdef double dt = tau / n_steps
    cdef double t, nu, phi, ax, ay, alpha, ca, sa, dot, nx, ny, nz
    cdef long k
    for k in range(n_steps):
        t = (k + 0.5) * dt
        nu = nu_start + (nu_end - nu_start) * (t / tau)
        phi = 0.5 * M_PI * (t / tau)
        if kind == 0:
            ax = sin(phi)
            ay = cos(phi)
        else:
            ax = cos(phi)
            ay = sin(phi)
        alpha = -2.0 * M_PI * nu * dt
        ca = cos(alpha)
        sa = sin(alpha)
        dot = (1.0 - ca) * (ax * rx + ay * ry)
        # Rodrigues rotation about (ax, ay, 0)
        nx = rx * ca + (ay * rz) * sa + ax * dot
        ny = ry * ca + (-ax * rz) * sa + ay * dot
        nz = rz * ca + (ax * ry - ay * rx) * sa
        rx = nx
        ry = ny
        rz = nz
    return rx, ry, rz
