import math

import numpy as np
import pytest

from qcascade.state import (
    IDENTITY_ORDER_2,
    SWAPPED_ORDER,
    QuantumState,
    StateError,
    concurrence,
    conditional_probability,
    marginal_probability,
    probability,
    reorder_qubits,
    tensor_product,
    validate_normalization,
)

S = 1 / math.sqrt(2)


def oracle_prob(amps, i):
    # independent modulus-squared computation, no package code
    z = complex(amps[i])
    return z.real * z.real + z.imag * z.imag


def random_state(rng, n):
    v = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return QuantumState(v / np.linalg.norm(v))


class TestProbability:
    def test_basis_state(self):
        assert probability(QuantumState([1, 0]), 0) == 1.0

    def test_uniform_two_qubit(self):
        s = QuantumState([0.5, 0.5, 0.5, 0.5])
        for i in range(4):
            assert probability(s, i) == pytest.approx(0.25, abs=1e-12)

    def test_complex_amplitude(self):
        s = QuantumState([0.6, 0.8j])
        # oracle: |0.6 + 0i|^2 = 0.36
        assert probability(s, 0) == pytest.approx(0.36, abs=1e-12)
        assert probability(s, 0) == pytest.approx(oracle_prob(s.amps, 0), abs=1e-15)

    def test_index_out_of_range(self):
        with pytest.raises(StateError):
            probability(QuantumState([1, 0]), 2)
        with pytest.raises(StateError):
            probability(QuantumState([1, 0]), -1)

    def test_matches_oracle_on_random_states(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            n = int(rng.integers(1, 3))
            s = random_state(rng, n)
            for i in range(2**n):
                assert probability(s, i) == pytest.approx(
                    oracle_prob(s.amps, i), abs=1e-12
                )

    def test_sum_is_one(self):
        rng = np.random.default_rng(8)
        for _ in range(200):
            s = random_state(rng, int(rng.integers(1, 3)))
            total = sum(probability(s, i) for i in range(len(s.amps)))
            assert abs(total - 1.0) <= 1e-9

    def test_global_phase_invariance(self):
        rng = np.random.default_rng(9)
        for _ in range(100):
            s = random_state(rng, 2)
            phi = rng.uniform(0, 2 * math.pi)
            rotated = QuantumState(s.amps * complex(math.cos(phi), math.sin(phi)))
            for i in range(4):
                assert abs(probability(rotated, i) - probability(s, i)) <= 1e-9


class TestNormalization:
    def test_basis(self):
        assert validate_normalization([1, 0])

    def test_balanced_complex(self):
        # 4 x |0.5 + 0.5i|^2 / 2 amps -> 0.25 each half; oracle: sum of modulus squares
        amps = [complex(0.5, 0.5), complex(0.5, 0.5)]
        assert sum(oracle_prob(amps, i) for i in range(2)) == pytest.approx(1.0)
        assert validate_normalization(amps)

    def test_unnormalized(self):
        assert not validate_normalization([1, 1])

    def test_constructor_rejects_unnormalized(self):
        with pytest.raises(StateError):
            QuantumState([1, 1])

    def test_constructor_rejects_nan(self):
        with pytest.raises(StateError):
            QuantumState([float("nan"), 0])

    def test_constructor_rejects_bad_length(self):
        with pytest.raises(StateError):
            QuantumState([1, 0, 0])

    def test_global_phase_preserved(self):
        s = QuantumState([-1, 0])
        assert s.amps[0] == -1  # not canonicalized


class TestMarginal:
    def test_first_qubit_one(self):
        s = QuantumState([0, 0, S, S])
        assert marginal_probability(s, 0, 1) == pytest.approx(1.0, abs=1e-9)

    def test_uniform(self):
        s = QuantumState([0.5, 0.5, 0.5, 0.5])
        for q in (0, 1):
            for b in (0, 1):
                assert marginal_probability(s, q, b) == pytest.approx(0.5, abs=1e-12)

    def test_brute_force_example(self):
        s = QuantumState([0.8, 0, 0, 0.6])
        # brute force: indices with first-qubit bit 0 are 0 and 1
        expected = oracle_prob(s.amps, 0) + oracle_prob(s.amps, 1)
        assert expected == pytest.approx(0.64)
        assert marginal_probability(s, 0, 0) == pytest.approx(0.64, abs=1e-12)

    def test_swapped_order(self):
        s = QuantumState([0, 1, 0, 0])  # |01>
        # displayed first qubit under (1,0) is physical qubit 1, which is 1
        assert marginal_probability(s, 0, 1, SWAPPED_ORDER) == pytest.approx(1.0)
        assert marginal_probability(s, 0, 1, IDENTITY_ORDER_2) == pytest.approx(0.0)

    def test_bits_sum_to_one(self):
        rng = np.random.default_rng(10)
        for _ in range(200):
            s = random_state(rng, 2)
            for q in (0, 1):
                total = marginal_probability(s, q, 0) + marginal_probability(s, q, 1)
                assert abs(total - 1.0) <= 1e-9

    def test_rejects_single_qubit(self):
        with pytest.raises(StateError):
            marginal_probability(QuantumState([1, 0]), 0, 0, (0,))


class TestConditional:
    def test_bell_state(self):
        bell = QuantumState([S, 0, 0, S])
        # brute force joint/marginal: P(q1=1, q0=1)=0.5, P(q0=1)=0.5
        assert conditional_probability(bell, 0, 1, 1, 1) == pytest.approx(1.0, abs=1e-12)

    def test_product_state_independence(self):
        s = tensor_product(QuantumState([S, S]), QuantumState([1, 0]))
        assert conditional_probability(s, 0, 1, 1, 0) == pytest.approx(1.0, abs=1e-12)

    def test_zero_probability_event_is_none(self):
        s = QuantumState([1, 0, 0, 0])
        assert conditional_probability(s, 0, 1, 1, 0) is None
        assert conditional_probability(s, 0, 1, 1, 1) is None

    def test_same_qubit_rejected(self):
        with pytest.raises(StateError):
            conditional_probability(QuantumState([1, 0, 0, 0]), 0, 0, 0, 0)


class TestTensorProduct:
    def test_zero_zero(self):
        s = tensor_product(QuantumState([1, 0]), QuantumState([1, 0]))
        assert np.allclose(s.amps, [1, 0, 0, 0])

    def test_hadamard_pair(self):
        h0 = QuantumState([S, S])
        s = tensor_product(h0, h0)
        assert np.allclose(s.amps, [0.5, 0.5, 0.5, 0.5], atol=1e-12)

    def test_one_zero(self):
        s = tensor_product(QuantumState([0, 1]), QuantumState([1, 0]))
        assert np.allclose(s.amps, [0, 0, 1, 0])

    def test_matches_elementwise_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            a = random_state(rng, 1)
            b = random_state(rng, 1)
            s = tensor_product(a, b)
            for i in range(2):
                for j in range(2):
                    assert s.amps[2 * i + j] == pytest.approx(
                        complex(a.amps[i]) * complex(b.amps[j]), abs=1e-15
                    )


class TestReorder:
    def test_bit_swap(self):
        s = QuantumState([0.5, 0.5j, -0.5, 0.5])
        r = reorder_qubits(s, SWAPPED_ORDER)
        assert np.allclose(r.amps, [0.5, -0.5, 0.5j, 0.5])

    def test_basis_move(self):
        assert np.allclose(
            reorder_qubits(QuantumState([0, 1, 0, 0]), SWAPPED_ORDER).amps, [0, 0, 1, 0]
        )

    def test_bell_symmetric(self):
        bell = QuantumState([S, 0, 0, S])
        assert reorder_qubits(bell, SWAPPED_ORDER).allclose(bell)

    def test_involution(self):
        rng = np.random.default_rng(12)
        for _ in range(200):
            s = random_state(rng, 2)
            twice = reorder_qubits(reorder_qubits(s, SWAPPED_ORDER), SWAPPED_ORDER)
            assert twice.allclose(s, tol=1e-12)

    def test_identity_order(self):
        s = QuantumState([0, 1, 0, 0])
        assert reorder_qubits(s, IDENTITY_ORDER_2).allclose(s)


class TestConcurrence:
    def test_product_states_are_zero(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            s = tensor_product(random_state(rng, 1), random_state(rng, 1))
            assert concurrence(s) < 1e-9

    def test_bell_state_is_one(self):
        bell = QuantumState([S, 0, 0, S])
        # oracle: 2|ad - bc| = 2 * |1/2 - 0| = 1
        a, b, c, d = (complex(x) for x in bell.amps)
        assert 2 * abs(a * d - b * c) == pytest.approx(1.0, abs=1e-12)
        assert concurrence(bell) == pytest.approx(1.0, abs=1e-9)

    def test_grover_final_state(self):
        assert concurrence(QuantumState([0, 0, 0, 1])) == pytest.approx(0.0)
