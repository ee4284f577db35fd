"""
Joint systems: tensor products and entanglement
===============================================

Two independent systems combine by tensor product: state indices pair
up as (first, second), and the joint transition matrix is the tensor
of the two parts.  Most joint states, however, do not factor back into
two independent pieces.
"""

import numpy as np

from ketsim import (
    RegimeSystem,
    compose_parallel,
    evolve,
    is_product_state,
    state_tensor,
)
from ketsim.experiments import PAIR_MATRIX, STOCHASTIC_MATRIX

# A three-vertex walker next to a two-state coin.
walker = RegimeSystem("stochastic", STOCHASTIC_MATRIX)
coin = RegimeSystem("stochastic", PAIR_MATRIX)
both = compose_parallel(walker, coin)
print("joint system dimension:", both.dim)
print("joint matrix entry [(0,b), (1,a)] =", both.matrix[1, 2],
      "= walker[0,1] x coin[1,0] =", STOCHASTIC_MATRIX[0, 1] * PAIR_MATRIX[1, 0])

# Evolving the joint start equals evolving the parts separately.
w0 = np.array([1 / 6, 1 / 6, 2 / 3])
c0 = np.array([0.5, 0.5])
joint = evolve(both, state_tensor(w0, c0), 1)
separate = state_tensor(evolve(walker, w0, 1), evolve(coin, c0, 1))
print("independent evolution agrees:", np.allclose(joint, separate, atol=1e-12))

# Quantum states of a two-qubit system: some factor, some cannot.
plus = np.array([1, 1]) / np.sqrt(2)
up = np.array([1, 0])

product = state_tensor(plus, up)
report = is_product_state(product, 2, 2)
print("\n(+) x (up) factors:", report.is_product)
print("  recovered first factor:", np.round(report.factor_a, 6))

bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
print("bell pair factors:", is_product_state(bell, 2, 2).is_product)

# The bell pair fails every attempted split: its 2x2 amplitude grid
# [[1,0],[0,1]]/sqrt 2 has rank two, and a product state always has
# rank one.  Whatever happens to one half is correlated with the other
# no matter how the two halves are separated.
grid = bell.reshape(2, 2)
print("bell amplitude grid determinant:", np.linalg.det(grid * np.sqrt(2)))
