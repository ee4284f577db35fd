"""
Quantum dynamics: amplitudes that cancel
========================================

Same double-slit wiring as the bullet demo, but each edge now carries a
complex amplitude whose squared modulus is the bullet probability.
Probabilities only add; amplitudes can subtract.
"""

import numpy as np

from ketsim import RegimeSystem, evolve, modulus_squared
from ketsim.experiments import BULLET_MATRIX, PHOTON_MATRIX

# Edge by edge, |amplitude|^2 reproduces the bullet weights exactly.
print("max |amplitude|^2 difference from the bullet wall:",
      np.max(np.abs(modulus_squared(PHOTON_MATRIX) - BULLET_MATRIX)))

# Two clicks forward from the source.
wall = RegimeSystem("quantum", PHOTON_MATRIX, mode="unchecked")
amp = evolve(wall, np.eye(8)[0].astype(complex), 2)
prob = amp.real**2 + amp.imag**2

print("\namplitudes and detection probabilities after two clicks:")
for i in range(8):
    bar = "#" * int(round(prob[i] * 24))
    print(f"detector {i}: amp {amp[i]:+.3f}  prob {prob[i]:0.4f} {bar}")

# Detector 5 hears both slits, with amplitudes
#   (1/sqrt 2)(1 - i)/sqrt 6   and   (1/sqrt 2)(-1 + i)/sqrt 6,
# which are negatives of each other.  The middle of the screen goes
# dark precisely because two routes reach it.
print("\nroute A to detector 5:", PHOTON_MATRIX[1, 0] * PHOTON_MATRIX[5, 1])
print("route B to detector 5:", PHOTON_MATRIX[2, 0] * PHOTON_MATRIX[5, 2])
print("sum:", PHOTON_MATRIX[1, 0] * PHOTON_MATRIX[5, 1]
      + PHOTON_MATRIX[2, 0] * PHOTON_MATRIX[5, 2])

# Blocking one slit removes the cancellation: zero out the column that
# feeds slit 2 and detector 5 lights up again.
one_slit = PHOTON_MATRIX.copy()
one_slit[2, 0] = 0
blocked = RegimeSystem("quantum", one_slit, mode="unchecked")
amp1 = evolve(blocked, np.eye(8)[0].astype(complex), 2)
print("\nwith slit 2 blocked, detector 5 probability:",
      round(abs(amp1[5]) ** 2, 4))
