import pytest

from core.complexes import buchsbaum_eisenbud, check_composition_zero
from core.errors import ParameterError
from core.families import (
    SURFACE_PARAMETRIZATIONS,
    cm_family,
    example21,
    example22,
    hilbert_identity_mismatches,
    p4_family,
    surface_ideal,
)
from core.hilbert import degree
from core.homology import minimal_free_resolution, regularity
from core.ideals import quotient, same_radical
from core.suites import suite_checks


def test_example21_colon_and_radical():
    ex = example21()
    I, J, K = ex.ideal("I"), ex.ideal("J"), ex.ideal("K")
    assert quotient(I, ex.ideal("line_zt")) == J
    assert same_radical(I, J)
    assert same_radical(J, K)
    assert not J.contains(ex.polynomials["new_generator"])
    assert regularity(ex.ideal("zJ")) == ex.expected["reg_zJ"]
    assert degree(K) == ex.expected["deg_K"]


def test_example22_generators_match_curve():
    ex = example22()
    assert ex.ideal("gamma") == ex.ideal("b")
    assert check_composition_zero(ex.complexes["b"])
    assert regularity(ex.ideal("b")) == ex.expected["reg_b"]


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (1, 3)])
def test_cm_family_closed_forms(m, n):
    fam = cm_family(m, n)
    assert regularity(fam.ideal("I")) == fam.expected["reg_I"]
    assert regularity(fam.ideal("image")) == fam.expected["reg_image"]
    assert degree(fam.ideal("image")) == fam.expected["deg_image"]
    assert regularity(fam.ideal("zI")) == fam.expected["reg_zI"]
    assert regularity(fam.ideal("zI_alt")) == fam.expected["reg_zI_alt"] == fam.expected["reg_zI"] - 1
    assert fam.ideal("image") == fam.ideal("curve_lines")


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2)])
def test_cm_family_complex_is_exact(m, n):
    fam = cm_family(m, n)
    complex_ = fam.complexes["gamma"]
    assert complex_.length == 3
    assert check_composition_zero(complex_)
    assert buchsbaum_eisenbud(complex_, fam.witnesses["gamma"]).verdict


def test_cm_family_with_one_step_block_has_no_phi():
    fam = cm_family(1, 1)
    assert "phi" not in fam.matrices
    assert fam.complexes["gamma"].length == 2


def test_cm_family_resolution_ranks():
    fam = cm_family(1, 2)
    res = minimal_free_resolution(fam.ideal("image"))
    assert [len(m.twists) for m in res.modules] == [1, 4, 4, 1]


def test_p4_family_hilbert_identity():
    fam = p4_family(1, 3)
    assert hilbert_identity_mismatches(fam, upto=20) == []
    assert quotient(fam.ideal("frakJ"), fam.ideal("colon_ideal")) == fam.ideal("J")
    assert degree(fam.ideal("curve")) == fam.expected["deg_curve"]


def test_parameter_validation():
    with pytest.raises(ParameterError):
        cm_family(0, 1)
    with pytest.raises(ParameterError):
        p4_family(1, 2)
    with pytest.raises(ParameterError):
        example21().ideal("nope")


def test_surface_validation():
    assert set(SURFACE_PARAMETRIZATIONS) == {"ex34", "ex35"}
    with pytest.raises(ParameterError):
        surface_ideal("ex99")
    with pytest.raises(ParameterError):
        surface_ideal("ex34", characteristic=7)


def test_surface_ex34_is_homogeneous():
    p = surface_ideal("ex34")
    assert p.name == "p"
    assert p.ring.variables == ("X0", "X1", "X2", "X3", "X4", "X5")
    assert p.ring.characteristic == 101
    assert p.is_homogeneous()


def test_alternative_z_ideals_are_checked_by_suites():
    assert set(cm_family(1, 3).expected) == {"reg_I", "reg_image", "deg_image", "reg_zI", "reg_zI_alt"}
    lemma24 = [name for name, _ in suite_checks("lemma24")]
    assert "lemma24.1_1.reg_zI_alt" in lemma24
    ex25 = [name for name, _ in suite_checks("ex25")]
    assert "ex25.1_3.reg_zJ_alt" in ex25
    fam = p4_family(1, 3)
    assert fam.expected["reg_zJ_alt"] == fam.expected["reg_zJ"] - 1
