import pytest

from core.errors import ParameterError
from core.sumset import (
    SumsetSpec,
    h1_dimension,
    h1_length,
    s_alpha,
    s_alpha_vs_h1,
    sections_count,
    semigroup_bits,
    sumset_bits,
    sumset_count,
    sumset_size,
)


def test_spec_constants():
    spec = SumsetSpec(1, 3)
    assert spec.base == (0, 1, 9, 12, 16)
    assert spec.curve_degrees == (1, 9, 12, 16)
    assert spec.threshold == 10
    assert spec.zero_threshold == 8
    assert spec.constant == 8
    assert spec.length_bound == 61
    assert SumsetSpec(2, 3).constant == 16 + 16


def test_spec_rejects_nonpositive():
    with pytest.raises(ParameterError):
        SumsetSpec(0, 3)


def test_bitsets():
    assert sumset_bits([0, 1], 2) == 0b111
    assert sumset_size([0, 1, 2, 4], 2) == 8
    assert sumset_size([0, 1, 2, 4], 0) == 1
    assert semigroup_bits([3, 5], 10) == sum(1 << k for k in (0, 3, 5, 6, 8, 9, 10))
    with pytest.raises(ParameterError):
        sumset_bits([0, 1], -1)


def test_s_alpha_closed_form():
    spec = SumsetSpec(1, 3)
    assert s_alpha(spec, 0) == 10
    assert s_alpha(spec, 7) == 1
    assert s_alpha(spec, spec.zero_threshold) == 0
    assert s_alpha(spec, 40) == 0


@pytest.mark.parametrize("m,n", [(1, 3), (1, 4), (2, 3)])
def test_closed_formula_matches_oracle(m, n):
    spec = SumsetSpec(m, n)
    for alpha in range(spec.threshold, spec.threshold + 8):
        assert sumset_count(spec, alpha, "closed") == sumset_count(spec, alpha, "oracle")


def test_sumset_count_errors():
    spec = SumsetSpec(1, 3)
    with pytest.raises(ParameterError):
        sumset_count(spec, spec.threshold - 1, "closed")
    with pytest.raises(ParameterError):
        sumset_count(spec, 3, "guess")
    with pytest.raises(ParameterError):
        sumset_count(spec, -2)


def test_sections_and_h1_in_low_degree():
    spec = SumsetSpec(1, 3)
    assert sections_count(spec, 0) == 1
    assert h1_dimension(spec, 0) == 0
    assert h1_dimension(spec, -3) == 0
    assert sections_count(spec, 1) >= sumset_count(spec, 1)


def test_s_alpha_equals_h1_by_sections():
    report = s_alpha_vs_h1(1, 4, [13, 14, 15])
    assert [r.alpha for r in report.rows] == [13, 14, 15]
    assert all(r.equal for r in report.rows)
    assert report.to_dict()["method"] == "sections"


def test_unknown_h1_method():
    with pytest.raises(ParameterError):
        s_alpha_vs_h1(1, 3, [10], method="guess")


def test_h1_length_is_below_asymptotic_bound_for_small_n():
    assert h1_length(SumsetSpec(1, 3)) == 31
    assert h1_length(SumsetSpec(1, 4)) == 135
    report = s_alpha_vs_h1(1, 4, [13, 14, 15])
    assert report.total_length == 135
    assert report.verdict
    assert not report.meets_length_bound
    assert report.to_dict()["meets_length_bound"] is False
