import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclewalk.core.errors import ConsistencyError, DomainError
from cyclewalk.walk import (
    WalkConfig,
    WaveState,
    build_initial_state,
    build_unitary,
    distribution,
    evolve,
    probability_blocks,
    site_probability,
    step,
    trajectory_blocks,
    unitarity_defect,
)

from conftest import random_state

INV_SQRT2 = 1 / math.sqrt(2)

sizes = st.integers(min_value=3, max_value=15)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestInitialState:
    def test_canonical_start(self):
        state = build_initial_state(WalkConfig(3, 1.0))
        assert np.array_equal(state.amplitudes, np.array([1, 0, 0, 0, 0, 0], dtype=complex))
        assert state.time == 0

    def test_alpha_zero_puts_everything_in_right_chirality(self):
        state = build_initial_state(WalkConfig(5, 0.0))
        assert state.amplitudes[0] == 0
        assert state.amplitudes[1] == 1j
        assert np.all(state.amplitudes[2:] == 0)

    def test_symmetric_start(self):
        state = build_initial_state(WalkConfig(3, INV_SQRT2))
        assert state.amplitudes[0] == pytest.approx(INV_SQRT2)
        assert state.amplitudes[1] == pytest.approx(1j * INV_SQRT2)
        assert state.norm() == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize("alpha", [-0.1, 1.5])
    def test_alpha_out_of_range(self, alpha):
        with pytest.raises(DomainError):
            WalkConfig(5, alpha)

    @pytest.mark.parametrize("sites", [0, 1, 2])
    def test_too_few_sites(self, sites):
        with pytest.raises(DomainError):
            WalkConfig(sites, 1.0)

    def test_explicit_initial_state(self):
        start = random_state(4, seed=7)
        assert build_initial_state(WalkConfig(4, initial=start)) is start

    def test_explicit_state_size_mismatch(self):
        with pytest.raises(DomainError):
            WalkConfig(5, initial=random_state(4, seed=7))

    def test_unnormalized_state_rejected(self):
        with pytest.raises(ConsistencyError):
            WaveState(3, np.ones(6))

    def test_norm_checked_to_twelve_digits(self):
        amps = np.zeros(6, dtype=complex)
        amps[0] = math.sqrt(1 + 1e-10)
        with pytest.raises(ConsistencyError):
            WalkConfig(3, initial=WaveState(3, amps))
        amps[0] = math.sqrt(1 + 1e-14)
        assert WaveState(3, amps).norm() == pytest.approx(1.0, abs=1e-13)


class TestStep:
    def test_single_step_by_hand(self):
        state = step(build_initial_state(WalkConfig(3, 1.0)))
        expected = np.zeros(6, dtype=complex)
        expected[2 * 2] = INV_SQRT2  # L at site 2
        expected[2 * 1 + 1] = INV_SQRT2  # R at site 1
        assert np.allclose(state.amplitudes, expected, atol=1e-15)
        assert state.time == 1

    @settings(max_examples=100, deadline=None)
    @given(sites=sizes, seed=seeds)
    def test_norm_preserved(self, sites, seed):
        state = random_state(sites, seed)
        assert abs(step(state).norm() - state.norm()) < 1e-12

    @settings(max_examples=50, deadline=None)
    @given(sites=sizes, seed=seeds)
    def test_matches_matrix_product(self, sites, seed):
        state = random_state(sites, seed)
        direct = step(state).amplitudes
        via_matrix = build_unitary(sites) @ state.amplitudes
        assert np.max(np.abs(direct - via_matrix)) < 1e-12

    @pytest.mark.parametrize("sites", range(3, 10))
    def test_repeated_steps_match_matrix_powers(self, sites):
        matrix = build_unitary(sites)
        state = random_state(sites, seed=sites)
        vec = state.amplitudes.copy()
        for _ in range(50):
            state = step(state)
            vec = matrix @ vec
            assert np.max(np.abs(state.amplitudes - vec)) < 1e-12

    def test_step_is_deterministic(self):
        state = random_state(7, seed=3)
        assert np.array_equal(step(state).amplitudes, step(state).amplitudes)


class TestEvolve:
    def test_zero_steps_is_identity(self):
        state = random_state(5, seed=1)
        assert evolve(state, 0) is state

    def test_semigroup(self):
        state = random_state(6, seed=2)
        once = evolve(state, 37)
        twice = evolve(evolve(state, 15), 22)
        assert np.allclose(once.amplitudes, twice.amplitudes, atol=1e-13)
        assert once.time == twice.time == 37

    def test_negative_steps(self):
        with pytest.raises(DomainError):
            evolve(random_state(5, seed=1), -1)

    def test_long_run_norm(self):
        state = evolve(build_initial_state(WalkConfig(7, 0.3)), 100_000)
        assert abs(state.norm() ** 2 - 1.0) < 1e-12


class TestProbabilities:
    def test_all_mass_at_origin_initially(self):
        for alpha in (0.0, 0.4, 1.0):
            assert site_probability(build_initial_state(WalkConfig(5, alpha)), 0) == pytest.approx(1.0)

    def test_after_one_step(self):
        state = step(build_initial_state(WalkConfig(3, 1.0)))
        assert site_probability(state, 0) == pytest.approx(0.0, abs=1e-15)
        assert site_probability(state, 1) == pytest.approx(0.5)
        assert site_probability(state, 2) == pytest.approx(0.5)
        assert np.allclose(distribution(state).probs, [0, 0.5, 0.5])

    def test_site_out_of_range(self):
        with pytest.raises(DomainError):
            site_probability(random_state(4, seed=0), 4)

    @settings(max_examples=100, deadline=None)
    @given(sites=sizes, seed=seeds)
    def test_distribution_sums_to_one(self, sites, seed):
        probs = distribution(random_state(sites, seed)).probs
        assert abs(probs.sum() - 1.0) < 1e-12
        assert np.all(probs >= 0) and np.all(probs <= 1 + 1e-15)

    def test_every_step_normalized(self):
        state = build_initial_state(WalkConfig(9, 0.6))
        for _ in range(200):
            state = step(state)
            assert abs(distribution(state).total() - 1.0) < 1e-12


class TestUnitary:
    def test_entries_for_three_sites(self):
        matrix = build_unitary(3)
        assert matrix[0, 2] == pytest.approx(INV_SQRT2)  # (L,0) <- (L,1)
        assert matrix[0, 3] == pytest.approx(INV_SQRT2)  # (L,0) <- (R,1)
        assert matrix[1, 4] == pytest.approx(INV_SQRT2)  # (R,0) <- (L,2)
        assert matrix[1, 5] == pytest.approx(-INV_SQRT2)  # (R,0) <- (R,2)
        assert np.count_nonzero(matrix[0]) == 2
        assert np.count_nonzero(matrix[1]) == 2

    @pytest.mark.parametrize("sites", range(3, 42))
    def test_unitary(self, sites):
        assert unitarity_defect(build_unitary(sites)) < 1e-12

    def test_two_sites_rejected(self):
        with pytest.raises(DomainError):
            build_unitary(2)

    def test_returns_a_writable_copy(self):
        matrix = build_unitary(4)
        matrix[0, 0] = 5
        assert build_unitary(4)[0, 0] == 0


class TestTrajectory:
    @pytest.mark.parametrize("block", [1, 7, 64, 512])
    def test_blocks_match_direct_stepping(self, block):
        state = build_initial_state(WalkConfig(5, 0.8))
        rows = np.concatenate([amps for _, amps in trajectory_blocks(state, 3000, block)])
        assert rows.shape == (3000, 10)
        for t in (0, 1, 63, 64, 65, 999, 2999):
            target = evolve(state, t)
            assert np.max(np.abs(rows[t] - target.amplitudes)) < 1e-10

    def test_long_blocked_run_stays_close_to_stepping(self):
        state = build_initial_state(WalkConfig(7, 1.0))
        last = None
        for _, amps in trajectory_blocks(state, 10_000, 256):
            last = amps[-1]
        assert np.max(np.abs(last - evolve(state, 9_999).amplitudes)) < 1e-10

    def test_block_offsets_cover_all_steps(self):
        state = build_initial_state(WalkConfig(3, 1.0))
        seen = []
        for t0, probs in probability_blocks(state, 1000, 300):
            seen.extend(range(t0, t0 + probs.shape[0]))
        assert seen == list(range(1000))

    def test_probability_rows_are_normalized(self):
        state = build_initial_state(WalkConfig(11, 0.5))
        for _, probs in probability_blocks(state, 5000, 512):
            assert np.max(np.abs(probs.sum(axis=1) - 1.0)) < 1e-10

    def test_zero_steps_yields_nothing(self):
        assert list(trajectory_blocks(random_state(3, seed=0), 0)) == []
