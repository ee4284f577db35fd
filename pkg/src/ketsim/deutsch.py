"""One-query test deciding whether a one-bit function is constant or balanced.

A function f: {0,1} -> {0,1} is embedded reversibly as the two-wire
permutation gate |x,y> -> |x, y XOR f(x)>.  Querying it once on the
superposed input (H tensor H)|01> and applying a final Hadamard to the
top wire steers all amplitude onto top-wire value 0 when f is constant
and onto 1 when f is balanced, so a single measurement of the top wire
answers a question that classically needs two evaluations.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import as_state
from .gates import Gate, apply, identity, ket_of_bits, parallel, standard_gate

# Classification guard: the top-wire distribution is analytically a point
# mass, so the threshold only has to absorb float noise.
_POINT_MASS_MIN = 1 - 1e-6


@dataclass(frozen=True)
class BinaryFunction:
    """Lookup table of a function from one bit to one bit."""

    f0: int
    f1: int

    def __post_init__(self):
        if self.f0 not in (0, 1) or self.f1 not in (0, 1):
            raise ValueError(f"function values must be bits, got ({self.f0}, {self.f1})")

    def value(self, x: int) -> int:
        if x not in (0, 1):
            raise ValueError(f"input must be a bit, got {x}")
        return self.f0 if x == 0 else self.f1

    @property
    def classification(self) -> str:
        return "constant" if self.f0 == self.f1 else "balanced"


# The whole input space, keyed by the oracle names the CLI accepts.
BINARY_FUNCTIONS = {
    "const0": BinaryFunction(0, 0),
    "const1": BinaryFunction(1, 1),
    "id": BinaryFunction(0, 1),
    "not": BinaryFunction(1, 0),
}


def oracle_matrix(f: BinaryFunction) -> Gate:
    """Two-wire permutation gate sending |x,y> to |x, y XOR f(x)>.

    XOR-ing twice undoes itself, so every oracle is its own inverse.
    """
    m = np.zeros((4, 4))
    for x in (0, 1):
        for y in (0, 1):
            m[2 * x + (y ^ f.value(x)), 2 * x + y] = 1.0
    return Gate(f"oracle({f.f0},{f.f1})", m, 2, 2, quantum=True)


def first_attempt(f: BinaryFunction) -> np.ndarray:
    """Query the oracle on a superposed top wire only.

    Returns the oracle output for input (H tensor I)|00>, which is
    (|0,f(0)> + |1,f(1)>)/sqrt(2).  Measuring the top wire of this state
    gives 0 or 1 with equal probability regardless of f, so this attempt
    learns nothing.
    """
    spread_top = parallel(standard_gate("H"), identity(1))
    return apply(oracle_matrix(f), apply(spread_top, ket_of_bits("00")))


def second_attempt(f: BinaryFunction, x: int) -> np.ndarray:
    """Query the oracle with the bottom wire in the (|0>-|1>)/sqrt(2) state.

    Returns the oracle output for input (I tensor H)|x,1>, which equals
    (-1)^f(x) |x> tensor (|0>-|1>)/sqrt(2): the function value moves into
    a sign on the top wire while the bottom wire is left unchanged.
    """
    if x not in (0, 1):
        raise ValueError(f"input must be a bit, got {x}")
    spread_bottom = parallel(identity(1), standard_gate("H"))
    return apply(oracle_matrix(f), apply(spread_bottom, ket_of_bits(f"{x}1")))


def top_marginal(state) -> np.ndarray:
    """Measurement distribution of the top wire of a two-wire state."""
    v = as_state(state)
    if v.shape[0] != 4:
        raise ValueError(f"expected a two-wire state of dimension 4, got {v.shape[0]}")
    if np.iscomplexobj(v):
        w = v.real**2 + v.imag**2
    else:
        w = np.asarray(v, dtype=float) ** 2
    total = float(w.sum())
    if total == 0.0:
        raise ValueError("cannot measure the zero vector")
    return np.array([w[0] + w[1], w[2] + w[3]]) / total


@dataclass(frozen=True, eq=False)
class DeutschRun:
    """Full trace of one run: the state after each stage, plus the verdict.

    snapshots[0] is the prepared input |01>, [1] the state after the
    input Hadamards, [2] the state after the single oracle query, and
    [3] the final state after the top-wire Hadamard.
    """

    function: BinaryFunction
    snapshots: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    top_distribution: np.ndarray
    classification: str


def run_deutsch(f: BinaryFunction, apply_oracle=None) -> DeutschRun:
    """Decide constant versus balanced with a single oracle query.

    ``apply_oracle`` customizes how the oracle gate is applied (the
    default is plain gate application); instrumented callers can count
    invocations through it.
    """
    if apply_oracle is None:
        apply_oracle = apply
    h = standard_gate("H")
    wire = identity(1)

    prepared = ket_of_bits("01")
    superposed = apply(parallel(h, h), prepared)
    queried = apply_oracle(oracle_matrix(f), superposed)
    finished = apply(parallel(h, wire), queried)

    distribution = top_marginal(finished)
    verdict = "constant" if distribution[0] >= _POINT_MASS_MIN else "balanced"
    return DeutschRun(
        function=f,
        snapshots=(prepared, superposed, queried, finished),
        top_distribution=distribution,
        classification=verdict,
    )
