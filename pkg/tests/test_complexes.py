import json

import pytest

from core.complexes import (
    GradedComplex,
    buchsbaum_eisenbud,
    check_composition_zero,
    evaluated_rank,
    matrix_rank,
    rank_certificate,
)
from core.errors import ParameterError, ShapeMismatchError
from core.families import cm_family, example21
from core.homology import GradedMatrix
from core.polynomial import RingContext


@pytest.fixture
def S():
    return RingContext.create("x y")


def koszul(S):
    phi1 = GradedMatrix(S, [["x", "y"]], [0], [1, 1])
    phi2 = GradedMatrix(S, [["-y"], ["x"]], [1, 1], [2])
    return GradedComplex([phi1, phi2])


def test_koszul_complex_is_exact(S):
    complex_ = koszul(S)
    assert complex_.length == 2
    assert complex_.twists() == [(0,), (1, 1), (2,)]
    assert check_composition_zero(complex_)
    report = buchsbaum_eisenbud(complex_)
    assert report.verdict
    assert [(p.rank, p.next_rank, p.module_rank) for p in report.positions] == [(1, 1, 2), (1, 0, 1)]
    assert [p.codimension for p in report.positions] == [2, 2]
    assert all(p.method == "hilbert" for p in report.positions)
    assert "veredicto: exacto" in report.to_text()


def test_low_codimension_is_detected(S):
    phi1 = GradedMatrix(S, [["x", "y"]], [0], [1, 1])
    phi2 = GradedMatrix(S, [["-x*y"], ["x^2"]], [1, 1], [3])
    complex_ = GradedComplex([phi1, phi2])
    assert check_composition_zero(complex_)
    report = buchsbaum_eisenbud(complex_)
    assert not report.verdict
    assert report.positions[1].codimension == 1
    assert not report.positions[1].codim_ok


def test_nonzero_composition(S):
    phi1 = GradedMatrix(S, [["x", "y"]], [0], [1, 1])
    phi2 = GradedMatrix(S, [["y"], ["x"]], [1, 1], [2])
    assert not check_composition_zero(GradedComplex([phi1, phi2]))


def test_shapes_are_validated(S):
    phi1 = GradedMatrix(S, [["x", "y"]], [0], [1, 1])
    phi2 = GradedMatrix(S, [["y"], ["x"]], [2, 2], [3])
    with pytest.raises(ShapeMismatchError):
        GradedComplex([phi1, phi2])
    with pytest.raises(ParameterError):
        GradedComplex([])


def test_rank_certificates(S):
    m = GradedMatrix(S, [["x", "y"], ["x", "y"]], [1, 1], [2, 2])
    assert rank_certificate(m) == (1, ((0,), (0,)))
    assert matrix_rank(GradedMatrix(S, [["x", 0], [0, "y"]], [0, 0], [1, 1])) == 2
    assert evaluated_rank(m, [1, 1]) == 1
    assert evaluated_rank(GradedMatrix(S, [["x", 0], [0, "y"]], [0, 0], [1, 1]), [1, 0]) == 1


def test_example21_complexes_are_resolutions():
    ex = example21()
    for name in ("J", "K"):
        complex_ = ex.complexes[name]
        assert check_composition_zero(complex_)
        assert buchsbaum_eisenbud(complex_).verdict


def test_gcd_witnesses_shortcut_codimension_two():
    family = cm_family(1, 1)
    complex_ = family.complexes["gamma"]
    assert check_composition_zero(complex_)
    report = buchsbaum_eisenbud(complex_, family.witnesses["gamma"])
    assert report.verdict
    assert report.positions[1].method == "gcd"


def test_report_serialization(S):
    data = json.loads(buchsbaum_eisenbud(koszul(S)).to_json())
    assert data["verdict"] is True
    assert data["positions"][0]["minor_witness"] == [[0], [0]]
    assert set(data["positions"][0]) >= {"k", "rank", "codimension", "method"}
