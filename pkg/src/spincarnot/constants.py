"""Physical constants in the peV / kHz / ms unit system.

Energies are in peV, frequencies in kHz and times in ms, so that h*nu is
directly an energy in peV.  Temperatures are quoted in peV with k_B = 1.
"""

import math

# Planck constant: 4.135667696e-15 eV*s = 4.135667696 peV*ms
PLANCK_PEV_MS = 4.135667696
HBAR_PEV_MS = PLANCK_PEV_MS / (2.0 * math.pi)
K_BOLTZMANN = 1.0
