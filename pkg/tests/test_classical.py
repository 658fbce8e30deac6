import math

import numpy as np
import pytest

from cyclewalk.classical import (
    ClassicalChain,
    classical_blocks,
    classical_empirical_sigma,
    classical_profile,
    classical_step,
    deviation_history,
    geometric_bound_fit,
    start_chain,
)
from cyclewalk.core.errors import DomainError
from cyclewalk.stats import empirical_sigma
from cyclewalk.walk import WalkConfig


class TestChain:
    def test_first_step_from_origin(self):
        chain = classical_step(start_chain(3))
        assert np.allclose(chain.dist, [0, 0.5, 0.5])
        assert chain.time == 1

    def test_uniform_is_stationary(self):
        chain = ClassicalChain(7, np.full(7, 1 / 7))
        assert np.allclose(classical_step(chain).dist, 1 / 7, atol=1e-16)

    def test_mass_conserved_over_long_run(self):
        for _, rows in classical_blocks(start_chain(5), 100_000):
            assert np.max(np.abs(rows.sum(axis=1) - 1.0)) < 1e-10
            assert np.all(rows >= 0)

    def test_blocks_match_direct_stepping(self):
        chain = start_chain(6, site=2)
        rows = np.concatenate([r for _, r in classical_blocks(chain, 700, 128)])
        current = chain
        for t in range(700):
            assert np.max(np.abs(rows[t] - current.dist)) < 1e-12
            current = classical_step(current)

    def test_negative_mass_rejected(self):
        with pytest.raises(DomainError):
            ClassicalChain(3, [1.2, -0.2, 0.0])

    def test_start_site_out_of_range(self):
        with pytest.raises(DomainError):
            start_chain(4, site=4)

    def test_distribution_read_only(self):
        chain = start_chain(3)
        with pytest.raises(ValueError):
            chain.dist[0] = 0.0


class TestClassicalSigma:
    def test_decays_for_five_sites(self):
        for n in range(5):
            assert classical_empirical_sigma(5, 10_000, n) < classical_empirical_sigma(5, 100, n)

    def test_order_of_magnitude_bound(self):
        steps = 10_000
        for n in range(5):
            assert classical_empirical_sigma(5, steps, n) < 10 / math.sqrt(steps)

    @pytest.mark.parametrize("sites", [3, 5, 7, 9])
    def test_monotone_over_decades(self, sites):
        values = [classical_profile(sites, steps) for steps in (1_000, 10_000, 100_000)]
        assert np.all(values[1] < values[0])
        assert np.all(values[2] < values[1])

    @pytest.mark.parametrize("sites", [4, 6, 8])
    def test_even_cycle_settles_on_parity_oscillation(self, sites):
        # mass alternates between even and odd sites, so P(n, t) swings by 1/N about the mean
        values = classical_profile(sites, 100_000)
        assert np.max(np.abs(values - 1.0 / sites)) < 1e-3

    def test_quantum_contrast(self):
        steps = 100_000
        quantum = [empirical_sigma(WalkConfig(5, 1.0), steps, n, mean="exact") for n in (0, 2)]
        classical = [classical_empirical_sigma(5, steps, n) for n in (0, 2)]
        assert quantum[1] / classical[1] > 100
        assert quantum[0] / classical[0] > 50

    def test_site_out_of_range(self):
        with pytest.raises(DomainError):
            classical_empirical_sigma(5, 100, 7)


class TestGeometricBound:
    @pytest.mark.parametrize("sites", range(3, 16, 2))
    def test_tail_decays_geometrically(self, sites):
        fit = geometric_bound_fit(sites)
        assert fit.slope < 0
        assert 0 < fit.a < 1
        assert fit.C > 0

    def test_history(self):
        history = deviation_history(5, 0, 3)
        assert history == pytest.approx([0.8, 0.2, 0.3])

    def test_bad_range(self):
        with pytest.raises(DomainError):
            geometric_bound_fit(5, t_range=(50, 10))
