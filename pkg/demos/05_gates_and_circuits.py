"""
Gates and circuits: wiring small matrices into bigger ones
==========================================================

A gate is a matrix acting on wires of qubits.  Serial wiring is matrix
multiplication, parallel wiring is the tensor product, and a circuit is
a list of parallel layers folded together.
"""

import numpy as np

from ketsim import (
    Circuit,
    apply,
    circuit_matrix,
    collapse,
    ket_of_bits,
    random_source,
    sequential,
    standard_gate,
)

H = standard_gate("H")
NOT = standard_gate("NOT")
CNOT = standard_gate("CNOT")
AND = standard_gate("AND")

print("hadamard matrix:")
print(H.matrix)

# H undoes itself: two in a row make the identity.
print("H then H:")
print(np.round(sequential(H, H).matrix, 12))

# One hadamard per qubit puts |00> into an even superposition of all
# four basis states.
layer = Circuit(wires=2, layers=[[H, H]])
state = apply(circuit_matrix(layer), ket_of_bits("00"))
print("\n(H|H) on |00>:", np.round(state, 6))

# CNOT after the superposition entangles the pair.
entangler = Circuit(wires=2, layers=[[H, standard_gate("I")], [CNOT]])
bell = apply(circuit_matrix(entangler), ket_of_bits("00"))
print("H-then-CNOT on |00>:", np.round(bell, 6))

# Sampling the entangled state only ever returns 00 or 11.
rnd = random_source(9)
seen = [collapse(bell, rnd)[0] for _ in range(12)]
print("twelve collapses:", [format(i, "02b") for i in seen])

# Classical gates ride the same machinery.  AND maps two wires down to
# one, so circuits may narrow from layer to layer.
adder_front = Circuit(wires=2, layers=[[NOT, NOT], [AND]])
m = circuit_matrix(adder_front)
print("\n(NOT|NOT) then AND, as a truth table:")
for bits in ("00", "01", "10", "11"):
    out = apply(m, ket_of_bits(bits))
    print(f"  {bits} -> {int(np.argmax(out))}")
