import numpy as np
import pytest
from hypothesis import given, settings
from numpy.testing import assert_allclose

from src.core.exceptions import ValidationError
from src.models.measurement import MeasuredEnsemble, MeasurementDirection, UnitaryParams, WeakStrength
from src.models.state import IDENTITY, CorrelationTriple, DensityMatrix, WernerParams
from src.services.correlations import binary_entropy
from src.services.measurement import (
    conditional_entropy,
    direction_from_unitary,
    direction_projectors,
    ensemble_distance,
    explicit_projective_ensemble,
    explicit_weak_ensemble,
    holevo_batch,
    holevo_of_ensemble,
    projective_ensemble,
    projectors_from_unitary,
    unitary_from_params,
    weak_ensemble,
    weak_operators,
)
from src.services.qstate import bell_diagonal, random_physical_triple, trace_distance, von_neumann_entropy
from tests.conftest import physical_triples, random_direction, random_unitary_params, strengths

X_AXIS = MeasurementDirection(1.0, 0.0, 0.0)
Z_AXIS = MeasurementDirection(0.0, 0.0, 1.0)


def assert_same_ensemble(first, second, tol):
    """Outcome-by-outcome comparison in the given order"""
    assert len(first) == len(second)
    for (p, rho), (q, sigma) in zip(first.outcomes, second.outcomes):
        assert abs(p - q) < 1e-12
        assert trace_distance(rho, sigma) < tol


class TestDirectionFromUnitary:
    @pytest.mark.parametrize(
        "params, expected",
        [
            ((1.0, 0.0, 0.0, 0.0), (0.0, 0.0, 1.0)),
            ((0.0, 1.0, 0.0, 0.0), (0.0, 0.0, -1.0)),
            ((np.sqrt(0.5), np.sqrt(0.5), 0.0, 0.0), (0.0, 1.0, 0.0)),
            ((np.sqrt(0.5), 0.0, -np.sqrt(0.5), 0.0), (1.0, 0.0, 0.0)),
        ],
    )
    def test_known_rotations(self, params, expected):
        z = direction_from_unitary(UnitaryParams(*params))
        assert_allclose(z.as_array(), expected, atol=1e-15)

    def test_unit_length(self, rng):
        for _ in range(1000):
            z = direction_from_unitary(random_unitary_params(rng))
            assert np.linalg.norm(z.as_array()) == pytest.approx(1.0, abs=1e-12)

    def test_projector_bloch_vector(self, rng):
        for _ in range(200):
            u = random_unitary_params(rng)
            b0, b1 = projectors_from_unitary(u)
            pi0, pi1 = direction_projectors(direction_from_unitary(u))
            assert_allclose(b0, pi0, atol=1e-12)
            assert_allclose(b1, pi1, atol=1e-12)

    def test_unitary_is_unitary(self, rng):
        v = unitary_from_params(random_unitary_params(rng))
        assert_allclose(v @ v.conj().T, IDENTITY, atol=1e-12)

    def test_rejects_unnormalized(self):
        with pytest.raises(ValidationError):
            UnitaryParams(1.0, 1.0, 0.0, 0.0)


class TestProjectiveEnsemble:
    def test_example(self):
        e = projective_ensemble(CorrelationTriple(0.5, 0.3, 0.1), X_AXIS)
        assert e.probabilities == (0.5, 0.5)
        assert_allclose(e.states[0].bloch_vector(), (0.5, 0.0, 0.0), atol=1e-15)
        assert_allclose(e.states[1].bloch_vector(), (-0.5, 0.0, 0.0), atol=1e-15)

    def test_matches_explicit_measurement(self, rng):
        for _ in range(1000):
            c = random_physical_triple(rng)
            u = random_unitary_params(rng)
            explicit = explicit_projective_ensemble(bell_diagonal(c), u)
            closed = projective_ensemble(c, direction_from_unitary(u))
            assert_same_ensemble(explicit, closed, 1e-10)

    def test_average_state_is_maximally_mixed(self, rng):
        e = projective_ensemble(random_physical_triple(rng), random_direction(rng))
        assert trace_distance(e.average_state(), DensityMatrix.maximally_mixed(2)) < 1e-14

    def test_singlet_outcomes_are_pure(self, rng):
        e = projective_ensemble(CorrelationTriple(-1, -1, -1), random_direction(rng))
        assert conditional_entropy(e) == pytest.approx(0.0, abs=1e-12)
        assert holevo_of_ensemble(e) == pytest.approx(1.0, abs=1e-12)

    def test_holevo_example(self):
        e = projective_ensemble(CorrelationTriple(0.9, 0.0, 0.0), X_AXIS)
        assert holevo_of_ensemble(e) == pytest.approx(1 - binary_entropy(0.95), abs=1e-12)
        assert holevo_of_ensemble(e) == pytest.approx(0.71360, abs=1e-5)


class TestWeakOperators:
    @given(strengths)
    def test_completeness(self, x):
        z = MeasurementDirection.normalized((0.3, -0.4, 0.5))
        plus, minus = weak_operators(WeakStrength(x), z)
        total = plus.conj().T @ plus + minus.conj().T @ minus
        assert_allclose(total, IDENTITY, atol=1e-12)

    def test_strong_limit_is_projective(self, rng):
        z = random_direction(rng)
        pi0, pi1 = direction_projectors(z)
        plus, minus = weak_operators(WeakStrength(20.0), z)
        assert_allclose(plus, pi1, atol=1e-8)
        assert_allclose(minus, pi0, atol=1e-8)

    def test_weak_limit_is_uninformative(self):
        plus, minus = weak_operators(WeakStrength(1e-9), Z_AXIS)
        assert_allclose(plus, IDENTITY / np.sqrt(2), atol=1e-8)
        assert_allclose(minus, IDENTITY / np.sqrt(2), atol=1e-8)

    def test_strength_must_be_positive(self):
        with pytest.raises(ValidationError):
            WeakStrength(0.0)
        with pytest.raises(ValidationError):
            WeakStrength(float("inf"))


class TestWeakEnsemble:
    def test_example(self):
        s = np.tanh(1.0)
        e = weak_ensemble(CorrelationTriple(0.5, 0.3, 0.1), Z_AXIS, WeakStrength(1.0))
        assert_allclose(e.states[0].bloch_vector(), (0.0, 0.0, -0.1 * s), atol=1e-15)
        assert_allclose(e.states[1].bloch_vector(), (0.0, 0.0, 0.1 * s), atol=1e-15)

    def test_matches_explicit_measurement(self, rng):
        for x in (0.1, 0.25, 1.0, 2.5, 5.0):
            for _ in range(100):
                c = random_physical_triple(rng)
                z = random_direction(rng)
                explicit = explicit_weak_ensemble(bell_diagonal(c), z, WeakStrength(x))
                closed = weak_ensemble(c, z, WeakStrength(x))
                assert_same_ensemble(explicit, closed, 1e-10)

    @settings(max_examples=50)
    @given(physical_triples)
    def test_strong_limit_matches_projective(self, c):
        weak = weak_ensemble(c, Z_AXIS, WeakStrength(20.0))
        strong = projective_ensemble(c, Z_AXIS)
        distance, probability_gap = ensemble_distance(weak, strong)
        assert distance < 1e-8
        assert probability_gap < 1e-12

    def test_werner_holevo(self, rng):
        x = WeakStrength(0.25)
        expected = 1 - binary_entropy((1 + 0.5 * np.tanh(0.25)) / 2)
        for _ in range(10):
            e = weak_ensemble(WernerParams(0.5).triple(), random_direction(rng), x)
            assert holevo_of_ensemble(e) == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(0.01085, abs=1e-4)

    def test_holevo_grows_with_strength(self, rng):
        c = random_physical_triple(rng)
        z = random_direction(rng)
        values = [holevo_of_ensemble(weak_ensemble(c, z, WeakStrength(x))) for x in (0.1, 0.5, 1.0, 3.0)]
        assert all(a <= b + 1e-12 for a, b in zip(values, values[1:]))


class TestHolevoOfEnsemble:
    def test_identical_states_carry_nothing(self):
        half = DensityMatrix.maximally_mixed(2)
        e = MeasuredEnsemble((0.5, 0.5), (half, half))
        assert holevo_of_ensemble(e) == pytest.approx(0.0, abs=1e-15)

    def test_split_into_average_and_conditional(self, rng):
        e = projective_ensemble(random_physical_triple(rng), random_direction(rng))
        expected = von_neumann_entropy(e.average_state()) - conditional_entropy(e)
        assert holevo_of_ensemble(e) == expected

    def test_batch_matches_single(self, rng):
        c = random_physical_triple(rng)
        directions = [random_direction(rng) for _ in range(20)]
        batch = holevo_batch(c, np.stack([z.as_array() for z in directions]))
        single = [holevo_of_ensemble(projective_ensemble(c, z)) for z in directions]
        assert_allclose(batch, single, atol=1e-12)

    def test_probabilities_must_sum_to_one(self):
        half = DensityMatrix.maximally_mixed(2)
        with pytest.raises(ValidationError):
            MeasuredEnsemble((0.5, 0.6), (half, half))
