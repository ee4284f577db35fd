"""
Deterministic dynamics: marbles hopping along a digraph
=======================================================

Six vertices, each with exactly one outgoing edge.  A pile of marbles
sits on every vertex, and one time click slides each pile along its
edge.  Nothing is created or lost, so the total count is conserved.
"""

import numpy as np

from ketsim import RegimeSystem, bool_mat_mul, evolve
from ketsim.experiments import MARBLE_MATRIX, MARBLE_START

# The matrix stores edges column-by-column: entry [i, j] is 1 when
# vertex j sends its marbles to vertex i.
print("adjacency matrix (columns = sources):")
print(MARBLE_MATRIX)

system = RegimeSystem("deterministic", MARBLE_MATRIX)

# One click: multiply the count vector by the matrix.
print("\ncounts at time 0: ", MARBLE_START)
after_one = evolve(system, MARBLE_START, 1)
print("counts at time 1: ", after_one)
print("total marbles stays", int(after_one.sum()))

# Vertices 0 and 1 have no incoming edges, so their piles drain into
# the 3-cycle {2, 4, 5} and circulate there forever; vertex 3 keeps
# its own pile on a self loop.
for k in (2, 3, 6):
    print(f"counts at time {k}: ", evolve(system, MARBLE_START, k))

# Squaring the matrix as a boolean matrix answers a different question:
# which vertex can reach which in exactly two clicks?
paths = bool_mat_mul(MARBLE_MATRIX, MARBLE_MATRIX)
print("\ntwo-click reachability:")
print(paths)
src, dst = 0, np.argmax(paths[:, 0])
print(f"marbles on vertex {src} land on vertex {dst} after two clicks")
