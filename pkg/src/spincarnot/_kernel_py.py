"""Pure-Python fallback for the propagation hot loop.

Same algorithm as _kernel.pyx; used when the compiled extension is absent.
"""

import math

BACKEND = "python"


def propagate_bloch(kind, nu_start, nu_end, tau, rx, ry, rz, n_steps):
    dt = tau / n_steps
    dnu = nu_end - nu_start
    for k in range(n_steps):
        t = (k + 0.5) * dt
        nu = nu_start + dnu * (t / tau)
        phi = 0.5 * math.pi * (t / tau)
        if kind == 0:
            ax = math.sin(phi)
            ay = math.cos(phi)
        else:
            ax = math.cos(phi)
            ay = math.sin(phi)
        alpha = -2.0 * math.pi * nu * dt
        ca = math.cos(alpha)
        sa = math.sin(alpha)
        dot = (1.0 - ca) * (ax * rx + ay * ry)
        rx, ry, rz = (
            rx * ca + (ay * rz) * sa + ax * dot,
            ry * ca + (-ax * rz) * sa + ay * dot,
            rz * ca + (ax * ry - ay * rx) * sa,
        )
    return rx, ry, rz
