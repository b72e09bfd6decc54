from core.groebner import ModuleElement, buchberger, ideal_membership, module_buchberger, normal_form
from core.polynomial import MonomialOrder, RingContext


def test_reduced_basis_adds_spolynomial():
    R = RingContext.create("x y z")
    basis = buchberger([R.parse("x*y"), R.parse("y^2 - x*z")])
    assert len(basis) == 3
    assert basis.contains(R.parse("x^2*z"))
    assert basis.contains(R.parse("y^3"))
    assert not basis.contains(R.variable("x"))


def test_basis_is_monic_and_reduced():
    R = RingContext.create("x y z")
    basis = buchberger([R.parse("2*x*y"), R.parse("3*y^2 - 3*x*z"), R.parse("x*y + y^2 - x*z")])
    elements = basis.elements
    assert all(g.leading_coefficient() == 1 for g in elements)
    assert [g.to_text() for g in elements] == [g.to_text() for g in buchberger(elements).elements]


def test_normal_form_is_canonical():
    R = RingContext.create("x y z")
    basis = buchberger([R.parse("x*y"), R.parse("y^2 - x*z")])
    assert normal_form(R.parse("y^2"), basis) == R.parse("x*z")
    assert normal_form(R.parse("x*y + z"), basis) == R.variable("z")


def test_membership_from_generators():
    R = RingContext.create("x y")
    assert ideal_membership(R.parse("x*y + x"), [R.variable("x")])
    assert not ideal_membership(R.variable("y"), [R.variable("x")])


def test_lex_basis_eliminates():
    R = RingContext.create("s x y", order=MonomialOrder.lex())
    basis = buchberger([R.parse("x - s^2"), R.parse("y - s^3")])
    free_of_s = [g for g in basis.elements if all(e[0] == 0 for e in g.term_dict)]
    assert R.parse("x^3 - y^2") in free_of_s


def test_unit_detection_mod_p():
    F5 = RingContext.create("x y", 5)
    basis = buchberger([F5.parse("x"), F5.parse("x + 5*y + 1")])
    assert basis.is_unit()


def test_module_membership_top_and_pot():
    R = RingContext.create("x y")
    x, y, one, zero = R.variable("x"), R.variable("y"), R.one(), R.zero()
    gens = [ModuleElement((x, one)), ModuleElement((y, zero))]
    for kind in ("top", "pot"):
        basis = module_buchberger(gens, kind)
        assert basis.contains(ModuleElement((x * y, y)))
        assert not basis.contains(ModuleElement((zero, one)))
