"""Spin paramagnetism and quantized-level diamagnetism."""

import math

import numpy as np
import pytest

from oracles import density_oracle
from xfermi import (
    BOLTZMANN,
    EXCLUSIVE,
    STANDARD_FD,
    ExtrapolationError,
    LevelSumError,
    density,
    geometric_level_factor,
    landau_level_factor,
    landau_log_partition,
    landau_partition_ratio,
    landau_susceptibility,
    pauli_magnetization,
    pauli_populations,
    small_field_series_factor,
)


class TestPauliPopulations:
    def test_zero_field_is_symmetric(self):
        up, down = pauli_populations(-1.0, 0.0)
        assert up == down
        assert math.isclose(up, 0.5 * density(-1.0), rel_tol=1e-12)

    def test_dilute_populations_follow_boltzmann_weights(self):
        # each species sees its own shifted fugacity z e^{-+b}
        eta, b = -9.0, 0.4
        z = math.exp(eta)
        up, down = pauli_populations(eta, b)
        assert math.isclose(up, z * math.exp(-b), rel_tol=2e-4)
        assert math.isclose(down, z * math.exp(b), rel_tol=2e-4)

    def test_populations_against_dense_grid(self):
        eta, b = -3.0, 0.5
        for model in (EXCLUSIVE, STANDARD_FD):
            up, down = pauli_populations(eta, b, model)
            assert math.isclose(up, 0.5 * density_oracle(eta - b, model), rel_tol=1e-9)
            assert math.isclose(down, 0.5 * density_oracle(eta + b, model), rel_tol=1e-9)


class TestPauliMagnetization:
    def test_dilute_per_particle_is_tanh(self):
        eta = math.log(1e-4)
        for b in (0.1, 0.3, 1.0):
            for model in (EXCLUSIVE, STANDARD_FD, BOLTZMANN):
                result = pauli_magnetization(eta, b, model)
                assert math.isclose(result.per_particle, math.tanh(b), rel_tol=1e-3)

    def test_magnetization_is_odd_in_field(self):
        # reversing the field swaps the same two integrals, so exactly odd
        for eta in (-2.0, 0.5):
            for b in (0.2, 1.5):
                forward = pauli_magnetization(eta, b)
                backward = pauli_magnetization(eta, -b)
                assert backward.magnetization == -forward.magnetization

    def test_never_exceeds_saturation(self):
        for eta in (-4.0, 0.0, 3.0):
            for b in (0.1, 1.0, 5.0):
                result = pauli_magnetization(eta, b)
                assert abs(result.per_particle) < 1.0

    def test_models_agree_when_dilute(self):
        eta = math.log(1e-4)
        excl = pauli_magnetization(eta, 0.7, EXCLUSIVE).per_particle
        std = pauli_magnetization(eta, 0.7, STANDARD_FD).per_particle
        assert math.isclose(excl, std, rel_tol=1e-3)

    def test_strong_field_saturates(self):
        result = pauli_magnetization(0.0, 30.0)
        assert result.per_particle > 0.999


class TestLandauLevelSum:
    def test_linearized_sum_reproduces_geometric_factor(self):
        """The numeric level sum must land on 1/(2 sinh s)."""
        z = 1e-4
        for s in (0.5, 1.0, 2.0):
            numeric = landau_level_factor(z, s)
            assert math.isclose(numeric, geometric_level_factor(s), rel_tol=1e-10)

    def test_partition_ratio_dilute_value(self):
        # s/sinh(s) at s = 1
        ratio = landau_partition_ratio(1e-6, 1.0)
        assert math.isclose(ratio, 1.0 / math.sinh(1.0), rel_tol=1e-5)

    def test_ratio_approaches_one_at_zero_field(self):
        # the full route keeps an O(z) offset, so probe the linearized one
        ratio = landau_partition_ratio(1e-6, 1e-4, linearized=True)
        assert math.isclose(ratio, 1.0, rel_tol=1e-7)
        full = landau_partition_ratio(1e-6, 1e-4)
        assert math.isclose(full, 1.0 - 2e-6 / 2.0**2.5, rel_tol=1e-7)

    def test_small_field_series(self):
        assert small_field_series_factor(0.1) == 1.0 - 0.01 / 6.0
        gap = abs(landau_partition_ratio(1e-6, 0.1) - small_field_series_factor(0.1))
        assert gap < 3e-6

    def test_volume_scaling_is_linear(self):
        single = landau_log_partition(0.05, 0.3, volume_lambda3=1.0)
        doubled = landau_log_partition(0.05, 0.3, volume_lambda3=2.0)
        assert doubled == 2.0 * single

    def test_level_budget_enforced(self):
        # s = 0.05 needs hundreds of levels, far over a budget of 2
        with pytest.raises(LevelSumError):
            landau_log_partition(0.1, 0.05, max_levels=2)

    def test_validation(self):
        with pytest.raises(ValueError):
            landau_log_partition(0.0, 1.0)
        with pytest.raises(ValueError):
            landau_log_partition(0.1, -1.0)
        with pytest.raises(ValueError):
            landau_log_partition(0.1, 1.0, volume_lambda3=0.0)
        with pytest.raises(ValueError):
            geometric_level_factor(0.0)


class TestLandauSusceptibility:
    def test_dilute_limit_is_minus_one_third(self):
        for model in (EXCLUSIVE, STANDARD_FD):
            chi = landau_susceptibility(0.01, model)
            assert math.isclose(chi, -1.0 / 3.0, rel_tol=0.01)

    def test_classical_model_hits_limit_exactly(self):
        # no occupancy correction at linear order in z
        chi = landau_susceptibility(0.01, BOLTZMANN)
        assert math.isclose(chi, -1.0 / 3.0, rel_tol=1e-6)

    def test_response_is_diamagnetic(self):
        for n_lambda3 in (0.005, 0.02, 0.08):
            assert landau_susceptibility(n_lambda3, EXCLUSIVE) < 0.0

    def test_validation(self):
        with pytest.raises(ValueError):
            landau_susceptibility(0.0)
        with pytest.raises(ValueError):
            landau_susceptibility(0.01, s_values=(0.1,))
