import numpy as np
import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from tests.helpers import random_density
from tripurify.basis import genuine_basis_3
from tripurify.errors import DimensionError
from tripurify.models import CoefficientVector, WitnessPreset
from tripurify.qmat import DensityMatrix
from tripurify.witness import (
    WitnessSpec,
    preset,
    witness_expectation,
    witness_on_state,
    witness_report,
    witness_threshold,
)
from tripurify.wstates import concise_state, mixed_from_coeffs


class TestPresets:
    @pytest.mark.parametrize(
        "name, alpha, label",
        [
            (WitnessPreset.PAPER_W, 0.65, "GB1"),
            (WitnessPreset.STANDARD_W, 2 / 3, "GB1"),
            (WitnessPreset.GHZ, 0.75, "GB7"),
        ],
    )
    def test_values(self, name, alpha, label):
        w = preset(name)
        assert w.alpha == pytest.approx(alpha)
        assert w.target_label == label

    @pytest.mark.parametrize("alpha", [0.0, 1.0, -0.2])
    def test_alpha_must_be_inside_unit_interval(self, alpha):
        with pytest.raises(ValidationError):
            WitnessSpec(alpha=alpha, target_state=genuine_basis_3()[1])


class TestExpectation:
    def test_ghz_on_concise_half(self):
        value = witness_expectation(concise_state(0.5), preset(WitnessPreset.GHZ))
        assert value == pytest.approx(0.75 - 0.5 / 7, abs=1e-12)

    def test_w_on_its_target(self):
        w = preset(WitnessPreset.PAPER_W)
        assert witness_expectation(genuine_basis_3()[1].density(), w) == pytest.approx(
            0.65 - 1.0, abs=1e-12
        )

    @pytest.mark.parametrize("name", list(WitnessPreset))
    def test_on_maximally_mixed(self, name):
        w = preset(name)
        value = witness_expectation(DensityMatrix.maximally_mixed(3), w)
        assert value == pytest.approx(w.alpha - 1 / 8, abs=1e-12)

    def test_ghz_never_fires_on_the_concise_family(self):
        w = preset(WitnessPreset.GHZ)
        for c1 in np.linspace(0.4, 1.0, 100)[1:-1]:
            assert witness_expectation(concise_state(float(c1)), w) > 0

    @given(st.floats(min_value=0.0, max_value=1.0), st.integers(min_value=0, max_value=2**32 - 1))
    def test_linear_in_the_state(self, p, seed):
        a, b = random_density(seed, 3), concise_state(0.3)
        mix = DensityMatrix(p * a.entries + (1 - p) * b.entries, 3)
        w = preset(WitnessPreset.STANDARD_W)
        expected = p * witness_expectation(a, w) + (1 - p) * witness_expectation(b, w)
        assert witness_expectation(mix, w) == pytest.approx(expected, abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            witness_expectation(DensityMatrix.maximally_mixed(2), preset(WitnessPreset.GHZ))


class TestThresholds:
    @pytest.mark.parametrize(
        "name, expected", [(WitnessPreset.PAPER_W, 13 / 20), (WitnessPreset.STANDARD_W, 2 / 3)]
    )
    def test_w_thresholds(self, name, expected):
        assert witness_threshold(preset(name)) == pytest.approx(expected, abs=1e-10)

    def test_ghz_threshold_absent(self):
        assert witness_threshold(preset(WitnessPreset.GHZ)) is None


class TestReadings:
    def test_standard_w_detects_high_fidelity(self):
        reading = witness_on_state(concise_state(0.9), WitnessPreset.STANDARD_W)
        assert reading.detects
        assert reading.expectation == pytest.approx(2 / 3 - 0.9, abs=1e-12)

    @pytest.mark.parametrize("name", list(WitnessPreset))
    def test_gb1_gb4_mixture_is_not_detected(self, name):
        rho = mixed_from_coeffs(CoefficientVector.from_sparse({1: 0.5, 4: 0.5}))
        reading = witness_on_state(rho, name)
        assert reading.expectation >= 0
        assert not reading.detects

    def test_report_flags_threshold_disagreement(self):
        summary = witness_report(0.66)
        assert summary.c1 == 0.66
        assert [r.preset for r in summary.readings] == list(WitnessPreset)
        assert summary.thresholds_disagree
        assert "13/20" in summary.note and "2/3" in summary.note
        by_name = {r.preset: r for r in summary.readings}
        assert by_name[WitnessPreset.PAPER_W].detects
        assert not by_name[WitnessPreset.STANDARD_W].detects
