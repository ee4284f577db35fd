"""
One query to tell constant from balanced
========================================

A function f from one bit to one bit is either constant (both outputs
equal) or balanced (outputs differ).  Classically, deciding which takes
two evaluations.  Wrapping f in a reversible oracle and querying it in
superposition decides it in one.
"""

import numpy as np

from ketsim import BINARY_FUNCTIONS, first_attempt, oracle_matrix, run_deutsch

# The four possible functions, as (f(0), f(1)) pairs.
for name, f in BINARY_FUNCTIONS.items():
    print(f"{name}: f(0)={f.f0} f(1)={f.f1}  ({f.classification})")

# The oracle for f maps |x, y> to |x, y XOR f(x)>: a permutation of the
# four basis states, hence reversible even when f itself is not.
print("\noracle matrix for 'not':")
print(oracle_matrix(BINARY_FUNCTIONS["not"]).matrix)

# Querying in superposition alone is not enough: the answer comes out
# scrambled across both wires.
print("\nnaive superposed query, oracle 'not':",
      np.round(first_attempt(BINARY_FUNCTIONS["not"]), 6))

# The working recipe prepares |01>, applies a hadamard to each wire,
# queries once, and applies a hadamard to the top wire.  The function
# value lands in the phase, and the final hadamard converts that phase
# difference into a readable bit.
for name in BINARY_FUNCTIONS:
    run = run_deutsch(BINARY_FUNCTIONS[name])
    p0, p1 = run.top_distribution
    print(f"\noracle {name}:")
    for t, snap in enumerate(run.snapshots):
        print(f"  stage {t}: {np.round(snap, 6)}")
    print(f"  top wire reads 0 with p={p0:.0f}, 1 with p={p1:.0f}"
          f"  -> {run.classification}")
