from fractions import Fraction

import pytest

from core.errors import ContextMismatchError, ParameterError, ParseError
from core.polynomial import CoefficientField, MonomialOrder, RingContext


def test_canonical_text_is_grevlex_descending(R):
    f = R.parse("-x^2*t + y^2*z")
    assert f.to_text() == "y^2*z - x^2*t"
    assert R.parse(f.to_text()) == f


def test_arithmetic_over_q(R):
    x, y = R.variable("x"), R.variable("y")
    assert ((x + y) ** 2).to_text() == "x^2 + 2*x*y + y^2"
    assert R.parse("1/2*x + 1/2*x") == x
    assert (x * y - y * x).is_zero()
    assert R.parse("x^2 - y^2").divide_exact(x - y) == x + y


def test_coefficients_reduce_mod_p():
    F7 = RingContext.create("x y", 7)
    assert F7.parse("8*x") == F7.parse("x")
    assert F7.parse("7*x + y") == F7.parse("y")
    assert F7.parse("6*x").to_text() == "-x"


def test_degree_and_homogeneity(R):
    assert R.parse("x^3*t + y^4").degree == 4
    assert R.parse("x*z - y^2").is_homogeneous()
    assert not R.parse("x^2 - y").is_homogeneous()


def test_evaluate(R):
    f = R.parse("x*z - y^2")
    assert f.evaluate([1, 2, 3, 0]) == -1
    assert R.parse("1/3*x").evaluate([1, 0, 0, 0]) == Fraction(1, 3)


def test_mixing_rings_is_rejected(R):
    S = RingContext.create("x y")
    with pytest.raises(ContextMismatchError):
        R.variable("x") + S.variable("x")


def test_embed_by_variable_name(R):
    S = RingContext.create("y t")
    g = S.parse("y*t - t^2").embed(R)
    assert g == R.parse("y*t - t^2")
    with pytest.raises(ParameterError):
        R.parse("x*y").embed(S)


def test_parse_errors_carry_column(R):
    with pytest.raises(ParseError) as info:
        R.parse("x + * y")
    assert info.value.column is not None
    with pytest.raises(ParseError):
        R.parse("")
    with pytest.raises(ParseError):
        R.parse("w^2")


@pytest.mark.parametrize("text", ["grevlex", "lex", "elim:2", "weights:1,2,3,4"])
def test_order_names_survive_parse(text):
    assert str(MonomialOrder.parse(text)) == text


def test_invalid_order_and_field():
    with pytest.raises(ParameterError):
        MonomialOrder.parse("revlex")
    with pytest.raises(ParameterError):
        CoefficientField(4)


def test_lex_and_elimination_orders():
    lex = RingContext.create("x y z", order=MonomialOrder.lex())
    assert lex.parse("y^5 + x*z").to_text() == "x*z + y^5"
    elim = RingContext.create("s w x", order=MonomialOrder.elimination(1))
    assert elim.parse("x^4 + s").to_text() == "s + x^4"


def test_terms_are_stored_in_descending_order(R):
    f = R.parse("x + z^2 + y*z")
    assert list(f.term_dict) == [(0, 1, 1, 0), (0, 0, 2, 0), (1, 0, 0, 0)]
    assert [m.exponents for _, m in f.terms()] == list(f.term_dict)
    L = RingContext.create("x y z t", order=MonomialOrder.lex())
    g = L.parse("z^2 + y*z + x")
    assert list(g.term_dict) == [(1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)]
    assert list((f - R.variable("x")).term_dict) == [(0, 1, 1, 0), (0, 0, 2, 0)]
