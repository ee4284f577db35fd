"""
Stochastic dynamics: probability flowing through a graph
========================================================

Replace marble counts with probabilities and 0/1 edges with fractional
weights.  A doubly stochastic matrix (rows and columns both sum to 1)
moves a distribution one click forward while keeping it a distribution.
"""

import numpy as np

from ketsim import RegimeSystem, evolve, validate
from ketsim.experiments import BULLET_MATRIX, STOCHASTIC_MATRIX

# A three-vertex walk.  Column j lists where vertex j's probability goes.
print("transition matrix:")
print(STOCHASTIC_MATRIX)
print("violations against the doubly stochastic rules:",
      validate(STOCHASTIC_MATRIX, "stochastic") or "none")

walk = RegimeSystem("stochastic", STOCHASTIC_MATRIX)
start = np.array([1 / 6, 1 / 6, 2 / 3])
for k in range(4):
    state = evolve(walk, start, k)
    print(f"time {k}: {np.round(state, 6)}  (sum {state.sum():.12f})")

# The double-slit wall, bullet edition.  A source feeds two slits with
# probability 1/2 each; each slit sprays three detectors with
# probability 1/3.  Detectors absorb whatever arrives.
print("\nbullets through a double slit:")
print("violations:", len(validate(BULLET_MATRIX, "stochastic")),
      "(the wall only pushes probability forward, so we run unchecked)")

wall = RegimeSystem("stochastic", BULLET_MATRIX, mode="unchecked")
hit = evolve(wall, np.eye(8)[0], 2)
for i, p in enumerate(hit):
    bar = "#" * int(round(p * 24))
    print(f"detector {i}: {p:0.4f} {bar}")

# Both slits feed detector 5, so it collects 1/6 + 1/6 = 1/3: with
# ordinary probabilities the middle of the screen is the brightest.
