import pytest
from pydantic import ValidationError

from tripurify.errors import DimensionError

from tripurify.models import (
    BasisReport,
    CoefficientVector,
    ConciseMapPoint,
    EigencheckEntry,
    RecurrenceTrace,
)


class TestCoefficientVector:
    def test_uniform(self):
        c = CoefficientVector.uniform()
        assert len(c.c) == 8
        assert c.parties == 3
        assert CoefficientVector.uniform(16).parties == 4

    def test_concise(self):
        c = CoefficientVector.concise(0.3)
        assert c.c[0] == 0.3
        assert c.c[1:] == pytest.approx((0.1,) * 7)

    def test_from_sparse(self):
        c = CoefficientVector.from_sparse({1: 0.6, 4: 0.4})
        assert c.c == (0.6, 0.0, 0.0, 0.4, 0.0, 0.0, 0.0, 0.0)

    @pytest.mark.parametrize("label", [0, -1, 9])
    def test_from_sparse_rejects_labels_outside_the_basis(self, label):
        with pytest.raises(DimensionError, match="outside"):
            CoefficientVector.from_sparse({label: 1.0})

    @pytest.mark.parametrize(
        "values, message",
        [
            ((0.5, 0.5), "coefficient count"),
            ((1.5, -0.5) + (0.0,) * 6, "entries >= 0"),
            ((0.5,) * 8, "sum to 1"),
            ((float("nan"),) + (0.0,) * 7, "entries >= 0"),
        ],
    )
    def test_invalid_vectors(self, values, message):
        with pytest.raises(ValidationError, match=message):
            CoefficientVector(c=values)

    def test_validation_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            CoefficientVector(c=(1.0,))

    def test_frozen(self):
        c = CoefficientVector.uniform()
        with pytest.raises(ValidationError):
            c.c = (1.0,) + (0.0,) * 7


def test_concise_map_point_alias():
    point = ConciseMapPoint(f_in=1.0, f_out=1.0, p000=1 / 3, **{"yield": 1 / 6})
    assert point.yield_ == pytest.approx(1 / 6)
    assert "yield" in point.model_dump(by_alias=True)


def test_basis_report_passed_is_strict():
    report = BasisReport(
        qubit_count=3,
        size=8,
        max_offdiag_overlap=1e-12,
        max_norm_error=0.0,
        completeness_defect=0.0,
        tol=1e-12,
    )
    assert not report.passed


def test_eigencheck_entry():
    entry = EigencheckEntry(label="W", j123=3.75, j12=2.0, residual_123=0.0, residual_12=0.5)
    assert not entry.is_simultaneous_eigenvector(1e-12)


def test_empty_trace_final_fraction():
    assert RecurrenceTrace(f0=0.3, rounds=[], cumulative_yield=1.0).final_fraction == 0.3
