import pytest

from core.errors import GradingError, ParameterError
from core.families import example21, example21_k_numerator
from core.hilbert import (
    HilbertSeries,
    codimension,
    count_standard_monomials,
    degree,
    dimension,
    hilbert_function,
    hilbert_numerator,
    series_from_resolution,
)
from core.homology import minimal_free_resolution
from core.ideals import Ideal, unit_ideal


def test_twisted_cubic_series(cubic):
    series = hilbert_numerator(cubic)
    assert series.terms() == {0: 1, 2: -3, 3: 2}
    assert series.dimension == 2
    assert series.degree == 3
    assert [hilbert_function(cubic, d) for d in range(6)] == [3 * d + 1 for d in range(6)]


def test_count_matches_series(cubic):
    for d in range(5):
        assert hilbert_function(cubic, d, method="count") == hilbert_function(cubic, d)


def test_resolution_and_leading_terms_agree(cubic):
    res = minimal_free_resolution(cubic)
    assert series_from_resolution(res) == hilbert_numerator(cubic)


def test_example21_k_series():
    K = example21().ideal("K")
    expected = HilbertSeries.from_terms(example21_k_numerator(), 4)
    assert hilbert_numerator(K) == expected
    assert dimension(K) == 2
    assert degree(K) == 10


def test_codimension_conventions(R):
    assert codimension(Ideal(R, ["x", "y"])) == 2
    assert codimension(unit_ideal(R)) == R.nvars + 1
    assert dimension(unit_ideal(R)) == -1


def test_series_algebra():
    a = HilbertSeries.from_terms({0: 1, 1: -1}, 2)
    assert a.reduced()[0] == HilbertSeries((1,), 1)
    assert a.reduced()[1] == 1
    assert a.shift(2).terms() == {2: 1, 3: -1}
    assert (a - a).is_zero()
    assert (a + a).coefficient(5) == 2
    assert str(HilbertSeries((1, 0, -1), 2)) == "1 - t^2 / (1-t)^2"


def test_count_standard_monomials_direct():
    # (x^2) en k[x,y]: en grado 3 quedan y^3 y x*y^2
    assert count_standard_monomials([(2, 0)], 2, 3) == 2


def test_bad_arguments(cubic, R):
    with pytest.raises(ParameterError):
        hilbert_function(cubic, -1)
    with pytest.raises(ParameterError):
        hilbert_function(cubic, 2, method="magic")
    with pytest.raises(GradingError):
        hilbert_numerator(Ideal(R, ["x^2 - y"]))
