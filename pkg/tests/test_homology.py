import pytest

from core.errors import GradingError, ParameterError, RegcheckError, ShapeMismatchError
from core.families import EXAMPLE22_TWISTS, example21, example22
from core.hilbert import HilbertSeries, hilbert_numerator
from core.homology import (
    GradedMatrix,
    PresentedModule,
    depth_of_quotient,
    ext_cyclic,
    local_cohomology_dims,
    minimal_free_resolution,
    projective_dimension,
    regularity,
    socle_degrees,
    syzygies,
    torsion_submodule,
)
from core.ideals import Ideal
from core.polynomial import RingContext


@pytest.fixture
def S():
    return RingContext.create("x y")


def test_twisted_cubic_resolution(cubic):
    res = minimal_free_resolution(cubic)
    assert [m.twists for m in res.modules] == [(0,), (2, 2, 2), (3, 3)]
    assert res.is_complex()
    assert not res.has_unit_entries()
    table = res.betti()
    assert table.regularity == 1
    assert table.to_dict()["rows"] == {"0": {"0": 1}, "1": {"2": 3}, "2": {"3": 2}}
    assert regularity(cubic) == 2
    assert projective_dimension(cubic) == 2
    assert depth_of_quotient(cubic) == 2


def test_example21_regularities():
    ex = example21()
    for key in ("I", "J", "K"):
        assert regularity(ex.ideal(key)) == ex.expected[f"reg_{key}"]


def test_example22_betti_twists():
    res = minimal_free_resolution(example22().ideal("b"))
    assert tuple(tuple(sorted(m.twists)) for m in res.modules[1:]) == EXAMPLE22_TWISTS


def test_graded_matrix_checks_degrees(R):
    with pytest.raises(GradingError):
        GradedMatrix(R, [["x", "y^2"]], [0], [1, 1])
    with pytest.raises(ShapeMismatchError):
        GradedMatrix(R, [["x", "y"]], [0, 0], [1, 1])
    with pytest.raises(GradingError):
        GradedMatrix.row(R, [R.parse("x^2 - y")])


def test_syzygies_of_regular_sequence(S):
    syz = syzygies(GradedMatrix.row(S, [S.variable("x"), S.variable("y")]))
    assert syz.source.twists == (2,)
    assert GradedMatrix.row(S, [S.variable("x"), S.variable("y")]).compose(syz).is_zero()


def test_syzygies_of_injective_and_empty_maps(S):
    injective = syzygies(GradedMatrix.row(S, [S.variable("x")]))
    assert (injective.nrows, injective.ncols) == (1, 0)
    assert injective.target.twists == (1,)
    assert injective.source.twists == ()
    empty = syzygies(GradedMatrix(S, [[]], [0], []))
    assert (empty.nrows, empty.ncols) == (0, 0)
    assert empty.target.twists == () and empty.source.twists == ()
    res = minimal_free_resolution(Ideal(S, ["x"]))
    assert [m.twists for m in res.modules] == [(0,), (1,)]
    assert res.length == 1


def test_ext_of_cohen_macaulay_quotient(cubic):
    assert ext_cyclic(cubic, 1).is_zero()
    assert not ext_cyclic(cubic, 2).is_zero()
    assert ext_cyclic(cubic, 3).is_zero()
    with pytest.raises(ParameterError):
        ext_cyclic(cubic, 7)


def test_local_cohomology_of_a_line(S):
    # R/(x) = k[y]: H^1 vive en grados negativos con dimensión 1
    assert local_cohomology_dims(Ideal(S, ["x"]), 1, [-2, -1, 0, 1]) == [1, 1, 0, 0]
    assert local_cohomology_dims(Ideal(S, ["x"]), 0, [-1, 0, 1]) == [0, 0, 0]
    with pytest.raises(ParameterError):
        local_cohomology_dims(Ideal(S, ["x"]), 3, [0])


def test_socle_of_artinian_quotients(R):
    assert socle_degrees(PresentedModule.from_ideal(Ideal(R, ["x", "y", "z", "t"]))) == [0]
    assert socle_degrees(PresentedModule.from_ideal(Ideal(R, ["x^2", "y", "z", "t"]))) == [1]


def test_torsion_splits_off_embedded_point(S):
    module = PresentedModule.from_ideal(Ideal(S, ["x^2", "x*y"]))
    torsion, quotient = torsion_submodule(module, Ideal(S, ["x", "y"]))
    assert torsion.total_length() == 1
    assert torsion.hilbert_series() == HilbertSeries.from_terms({1: 1, 2: -2, 3: 1}, 2)
    assert quotient.hilbert_series() == hilbert_numerator(Ideal(S, ["x"]))


def test_module_lengths(R, cubic):
    assert PresentedModule.from_ideal(Ideal(R, ["x", "y", "z", "t"])).total_length() == 1
    with pytest.raises(RegcheckError):
        PresentedModule.from_ideal(cubic).total_length()
    assert PresentedModule.free(R, ()).total_length() == 0


def test_regularity_of_presented_module(cubic):
    module = PresentedModule.from_ideal(cubic)
    assert module.regularity() == 1
