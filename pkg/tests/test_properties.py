import random

import pytest

from core.complexes import buchsbaum_eisenbud
from core.families import cm_family, example21, example22
from core.groebner import buchberger
from core.hilbert import hilbert_function, hilbert_numerator, series_from_resolution
from core.homology import PresentedModule, minimal_free_resolution, regularity, torsion_submodule
from core.ideals import Ideal, ideal_product, is_nonzerodivisor
from core.suites import run_suite, suite_checks, suite_names

EX21_IDEALS = ["I", "J", "K", "zJ"]


def _random_form(rng, ring, degree):
    f = ring.zero()
    for _ in range(3):
        exps = [0] * ring.nvars
        for _ in range(degree):
            exps[rng.randrange(ring.nvars)] += 1
        f = f + ring.monomial(exps, rng.randint(-5, 5))
    return f


def test_random_combinations_are_members(cubic):
    rng = random.Random(20240611)
    ring = cubic.ring
    for _ in range(10):
        f = ring.zero()
        for g in cubic.generators:
            f = f + _random_form(rng, ring, 2) * g
        assert cubic.contains(f)
        assert cubic.reduce(f + ring.variable("x") ** 3) == ring.variable("x") ** 3


def test_random_polynomial_ring_laws(R):
    rng = random.Random(7)
    for _ in range(10):
        a, b, c = (_random_form(rng, R, rng.randint(0, 3)) for _ in range(3))
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()


def test_reduced_basis_ignores_generator_order_and_scaling(cubic):
    rng = random.Random(314)
    for ideal in (cubic, example21().ideal("K")):
        ring = ideal.ring
        reference = sorted(g.to_text() for g in buchberger(list(ideal.generators)).elements)
        for _ in range(4):
            gens = list(ideal.generators)
            rng.shuffle(gens)
            gens = [ring.constant(rng.choice([-3, -1, 2, 5])) * g for g in gens]
            gens.append(gens[0] * _random_form(rng, ring, 1) + gens[-1])
            assert sorted(g.to_text() for g in buchberger(gens).elements) == reference


def test_regularity_shifts_by_degree_of_nonzerodivisor(cubic):
    rng = random.Random(2718)
    ex = example21()
    battery = [(cubic, (1, 2)), (ex.ideal("I"), (1,)), (ex.ideal("J"), (1,))]
    checked = 0
    for ideal, degrees in battery:
        ring = ideal.ring
        for _ in range(2):
            f = _random_form(rng, ring, rng.choice(degrees))
            if f.is_zero() or not is_nonzerodivisor(f, ideal):
                continue
            product = Ideal(ring, [f * g for g in ideal.generators])
            assert regularity(product) == f.degree + regularity(ideal)
            checked += 1
    assert checked >= 2


def test_removing_torsion_along_low_dimensional_primes_keeps_regularity_bound(R, cubic):
    rng = random.Random(1234)
    ideals = [
        Ideal(R, ["x^2", "x*y", "x*z"]),
        Ideal(R, ["x*z", "y*z"]),
        ideal_product(cubic, Ideal(R, ["x", "y", "z"])),
    ]
    primes = [["x", "y", "z"], ["y", "z", "t"], ["x", "z", "t"], ["x", "y", "z", "t"]]
    for ideal in ideals:
        module = PresentedModule.from_ideal(ideal)
        before = regularity(module)
        for gens in rng.sample(primes, 2):
            _, rest = torsion_submodule(module, Ideal(R, gens))
            after = regularity(rest)
            assert after is None or after <= before


def _displayed_complexes():
    ex21, ex22 = example21(), example22()
    yield ex21.complexes["J"], None, ex21.ideal("J")
    yield ex21.complexes["K"], None, ex21.ideal("K")
    yield ex22.complexes["b"], None, ex22.ideal("b")
    for m, n in ((1, 2), (2, 2)):
        fam = cm_family(m, n)
        yield fam.complexes["gamma"], fam.witnesses["gamma"], fam.ideal("image")


def test_exact_displayed_complexes_have_minimal_betti_numbers():
    for complex_, witnesses, ideal in _displayed_complexes():
        assert buchsbaum_eisenbud(complex_, witnesses).verdict
        res = minimal_free_resolution(ideal)
        assert [sorted(t) for t in complex_.twists()] == [sorted(m.twists) for m in res.modules]


@pytest.mark.parametrize("name", EX21_IDEALS)
def test_resolution_is_minimal_complex_with_right_series(name):
    ideal = example21().ideal(name)
    res = minimal_free_resolution(ideal)
    assert res.is_complex()
    assert not res.has_unit_entries()
    assert series_from_resolution(res) == hilbert_numerator(ideal)


@pytest.mark.parametrize("name", ["I", "K"])
def test_regularity_does_not_depend_on_characteristic(name):
    assert regularity(example21(101).ideal(name)) == regularity(example21().ideal(name))


def test_hilbert_function_methods_agree_on_curve():
    b = example22().ideal("b")
    for d in range(0, 9):
        assert hilbert_function(b, d, method="count") == hilbert_function(b, d)


def test_default_suites_exclude_slow():
    assert "ex35" not in suite_names()
    assert "ex35" in suite_names(include_slow=True)


def test_every_suite_builds_uniquely_named_checks():
    for name in ("ex21", "ex22", "appendix", "ex34", "ex35"):
        names = [check[0] for check in suite_checks(name)]
        assert len(names) == len(set(names))


def test_ex21_suite_passes():
    report = run_suite("ex21")
    assert report.passed, report.to_text()
    assert report.to_dict()["over_budget"] is False


def test_appendix_suite_passes():
    report = run_suite("appendix", jobs=2)
    assert report.passed, report.to_text()


@pytest.mark.slow
def test_ex35_suite_passes():
    report = run_suite("ex35")
    assert report.passed, report.to_text()
