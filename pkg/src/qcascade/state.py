"""Pure-state model for one and two qubits.

States are normalized complex amplitude vectors over the computational
basis, indexed big-endian: index 0 is |0> / |00>, index 3 is |11>.
All values are immutable and all operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

NORM_TOL = 1e-9

IDENTITY_ORDER_1 = (0,)
IDENTITY_ORDER_2 = (0, 1)
SWAPPED_ORDER = (1, 0)


class StateError(ValueError):
    """Raised for invalid amplitude vectors or out-of-domain queries."""


def norm_squared(amps) -> float:
    """Sum of modulus-squared amplitudes of an arbitrary complex vector."""
    a = np.asarray(amps, dtype=complex)
    return float(np.sum(a.real**2 + a.imag**2))


def validate_normalization(amps) -> bool:
    """True iff the modulus-squared amplitudes sum to 1 within NORM_TOL."""
    return abs(norm_squared(amps) - 1.0) <= NORM_TOL


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Normalized pure state of 1 or 2 qubits.

    Construction rejects non-finite or unnormalized vectors instead of
    silently renormalizing; see the parser layer for an explicit
    renormalization path.
    """

    amps: np.ndarray

    def __init__(self, amps):
        a = np.array(amps, dtype=complex)
        if a.ndim != 1 or a.shape[0] not in (2, 4):
            raise StateError(f"amplitude vector must have length 2 or 4, got shape {a.shape}")
        if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
            raise StateError("amplitudes must be finite")
        if not validate_normalization(a):
            raise StateError(
                f"state is not normalized: sum of |amp|^2 = {norm_squared(a):.12g}"
            )
        a.setflags(write=False)
        object.__setattr__(self, "amps", a)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuantumState) and bool(
            np.array_equal(self.amps, other.amps)
        )

    def __hash__(self) -> int:
        return hash(self.amps.tobytes())

    @property
    def num_qubits(self) -> int:
        return 1 if self.amps.shape[0] == 2 else 2

    @classmethod
    def ket(cls, bits: str) -> "QuantumState":
        """Basis state from a bitstring, e.g. '0', '11'."""
        n = len(bits)
        if n not in (1, 2) or any(b not in "01" for b in bits):
            raise StateError(f"invalid basis label {bits!r}")
        a = np.zeros(2**n, dtype=complex)
        a[int(bits, 2)] = 1.0
        return cls(a)

    @classmethod
    def from_pairs(cls, pairs) -> "QuantumState":
        """Build from [[re, im], ...] pairs."""
        return cls([complex(re, im) for re, im in pairs])

    def to_pairs(self) -> list[list[float]]:
        return [[float(a.real), float(a.imag)] for a in self.amps]

    def allclose(self, other: "QuantumState", tol: float = 1e-12) -> bool:
        return self.num_qubits == other.num_qubits and bool(
            np.allclose(self.amps, other.amps, rtol=0, atol=tol)
        )


def probability(state: QuantumState, basis_index: int) -> float:
    """Measurement probability of one basis state (modulus squared)."""
    if not 0 <= basis_index < state.amps.shape[0]:
        raise StateError(f"basis index {basis_index} out of range for {state.num_qubits} qubit(s)")
    a = state.amps[basis_index]
    return float(a.real**2 + a.imag**2)


def _check_order(order, num_qubits: int) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(num_qubits)):
        raise StateError(f"order {order} is not a permutation of 0..{num_qubits - 1}")
    return order


def _bit_at(index: int, qubit: int) -> int:
    # big-endian: qubit 0 is the most significant bit of a 2-qubit label
    return (index >> (1 - qubit)) & 1


def marginal_probability(
    state: QuantumState, display_qubit: int, bit: int, order=IDENTITY_ORDER_2
) -> float:
    """Probability that one displayed qubit measures to `bit`.

    `order` maps display positions to physical qubits; the marginal sums
    the joint probabilities over the other qubit.
    """
    if state.num_qubits != 2:
        raise StateError("marginal_probability requires a 2-qubit state")
    if display_qubit not in (0, 1) or bit not in (0, 1):
        raise StateError("display_qubit and bit must be 0 or 1")
    order = _check_order(order, 2)
    physical = order[display_qubit]
    return float(
        sum(probability(state, i) for i in range(4) if _bit_at(i, physical) == bit)
    )


def conditional_probability(
    state: QuantumState,
    given_qubit: int,
    given_bit: int,
    target_qubit: int,
    target_bit: int,
) -> float | None:
    """P(target_qubit = target_bit | given_qubit = given_bit).

    Returns None (explicitly, never NaN) when the conditioning event has
    probability below 1e-12.
    """
    if state.num_qubits != 2:
        raise StateError("conditional_probability requires a 2-qubit state")
    if given_qubit == target_qubit:
        raise StateError("given and target qubits must be distinct")
    marginal = marginal_probability(state, given_qubit, given_bit)
    if marginal < 1e-12:
        return None
    joint = sum(
        probability(state, i)
        for i in range(4)
        if _bit_at(i, given_qubit) == given_bit and _bit_at(i, target_qubit) == target_bit
    )
    return float(joint / marginal)


def tensor_product(a: QuantumState, b: QuantumState) -> QuantumState:
    """Combine two single-qubit states into the 2-qubit product state."""
    if a.num_qubits != 1 or b.num_qubits != 1:
        raise StateError("tensor_product takes two single-qubit states")
    return QuantumState(np.kron(a.amps, b.amps))


def reorder_qubits(state: QuantumState, order) -> QuantumState:
    """Permute qubit labels; with order (1, 0) amplitude |b0 b1> moves to |b1 b0>."""
    if state.num_qubits != 2:
        raise StateError("reorder_qubits requires a 2-qubit state")
    order = _check_order(order, 2)
    if order == IDENTITY_ORDER_2:
        return state
    a = state.amps
    return QuantumState([a[0], a[2], a[1], a[3]])


def concurrence(state: QuantumState) -> float:
    """Pure-state entanglement measure 2|ad - bc|; 0 iff a product state."""
    if state.num_qubits != 2:
        raise StateError("concurrence requires a 2-qubit state")
    a = state.amps
    return float(2.0 * abs(a[0] * a[3] - a[1] * a[2]))
