import pytest

from core.errors import ContextMismatchError, GradingError, ParameterError
from core.ideals import (
    Ideal,
    eliminate,
    homogenize,
    ideal_product,
    ideal_sum,
    intersect,
    is_minimal_generator,
    is_nonzerodivisor,
    is_saturated,
    minors_ideal,
    monomial_curve_ideal,
    quotient,
    radical_membership,
    same_radical,
    saturate,
    saturate_with_steps,
    truncate_ideal,
    unit_ideal,
)
from core.polynomial import RingContext


@pytest.fixture
def S():
    return RingContext.create("x y")


def test_quotient_and_intersection(S):
    I = Ideal(S, ["x^2", "x*y"])
    assert quotient(I, Ideal(S, ["x"])) == Ideal(S, ["x", "y"])
    assert quotient(I, "y") == Ideal(S, ["x"])
    assert intersect(Ideal(S, ["x"]), Ideal(S, ["y"])) == Ideal(S, ["x*y"])


def test_saturation_counts_steps(S):
    I = Ideal(S, ["x^2", "x*y"])
    m = Ideal(S, ["x", "y"])
    J, steps = saturate_with_steps(I, m)
    assert J == Ideal(S, ["x"])
    assert steps >= 1
    assert saturate(J, m) == J
    assert is_saturated(J, m)
    assert not is_saturated(I, m)


def test_radicals(S):
    assert radical_membership("x", Ideal(S, ["x^3"]))
    assert not radical_membership("y", Ideal(S, ["x^3"]))
    assert same_radical(Ideal(S, ["x^2", "x*y^3"]), Ideal(S, ["x"]))
    assert not same_radical(Ideal(S, ["x*y"]), Ideal(S, ["x"]))


def test_nonzerodivisor(S):
    assert is_nonzerodivisor("y", Ideal(S, ["x^2"]))
    assert not is_nonzerodivisor("x", Ideal(S, ["x^2"]))


def test_twisted_cubic_three_ways(R, cubic):
    curve = monomial_curve_ideal((1, 2, 3), R.variables)
    curve = Ideal(R, [g.embed(R) for g in curve.generators])
    minors = minors_ideal([["x", "y", "z"], ["y", "z", "t"]], 2, R)
    assert curve == cubic
    assert minors == cubic
    assert sorted(f.degree for f in cubic.minimal_generators()) == [2, 2, 2]


def test_minors_from_text_and_mixed_entries(R):
    mixed = minors_ideal([[R.variable("x"), "y"], ["z", R.variable("t")]], 2, R)
    assert mixed == Ideal(R, ["x*t - y*z"])
    assert minors_ideal([["x", "y"]], 1, R) == Ideal(R, ["x", "y"])
    with pytest.raises(ParameterError):
        minors_ideal([["x", "y"], ["z", "t"]], 2)
    other = RingContext.create("a b")
    with pytest.raises(ContextMismatchError):
        minors_ideal([[other.variable("a"), "y"]], 1, R)


def test_elimination_gives_implicit_equation():
    P = RingContext.create("s w x y z")
    I = Ideal(P, ["x - s^2", "y - s*w", "z - w^2"])
    E = eliminate(I, ["s", "w"])
    assert E.ring.variables == ("x", "y", "z")
    assert E == Ideal(E.ring, ["x*z - y^2"])


def test_curve_degrees_must_increase():
    with pytest.raises(ParameterError):
        monomial_curve_ideal((2, 1))
    with pytest.raises(ParameterError):
        monomial_curve_ideal((1, 2), ["a", "b"])


def test_sum_product_and_unit(S):
    a, b = Ideal(S, ["x"]), Ideal(S, ["y"])
    assert ideal_sum(a, b) == Ideal(S, ["x", "y"])
    assert ideal_product(a, b) == Ideal(S, ["x*y"])
    assert unit_ideal(S).is_unit()
    assert Ideal(S, ["x + 1", "x"]).is_unit()
    assert Ideal(S, []).is_zero()


def test_homogenize_uses_full_basis():
    A = RingContext.create("x y")
    H = homogenize(Ideal(A, ["x^2 - y", "x^3 - x"]), "w")
    assert H.ring.variables == ("x", "y", "w")
    assert H.is_homogeneous()
    first = homogenize(Ideal(A, ["x - y^2"]), "w", position="first")
    assert first.ring.variables == ("w", "x", "y")
    with pytest.raises(ParameterError):
        homogenize(Ideal(A, ["x"]), "x")


def test_minimal_generators_and_truncation(R):
    I = Ideal(R, ["x^2", "x*y", "x^2*y", "z^5"], "I")
    assert is_minimal_generator("x*y", I)
    assert not is_minimal_generator("x^2*y", I)
    assert len(I.minimal_generators()) == 3
    assert truncate_ideal(I, 2) == Ideal(R, ["x^2", "x*y"])
    with pytest.raises(GradingError):
        Ideal(R, ["x^2 - y"]).minimal_generators()


def test_rings_must_agree(R, S):
    with pytest.raises(ContextMismatchError):
        quotient(Ideal(R, ["x"]), Ideal(S, ["x"]))
