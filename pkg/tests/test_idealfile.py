import pytest

from core.errors import GradingError, ParseError
from core.idealfile import bundle_text, infer_twists, load_ideal_file, parse_ideal_file
from core.ideals import Ideal

SAMPLE = """\
# cúbica y una matriz lineal
field: Fp 101
vars: x y z t
order: grevlex
C = x*z - y^2, x*t - y*z, y*t - z^2
M = [[x, y], [z, t]]
N = [[y^2, 0], [t, y^2]]
N.target = 5 6
N.source = 7 8
"""


def test_parse_sample():
    data = parse_ideal_file(SAMPLE)
    assert data.ring.variables == ("x", "y", "z", "t")
    assert data.ring.characteristic == 101
    assert data.ideal().name == "C"
    assert len(data.ideal("C").generators) == 3
    assert data.matrix("M").target.twists == (0, 0)
    assert data.matrix("M").source.twists == (1, 1)
    assert data.matrix("N").source.twists == (7, 8)


def test_overrides_and_defaults():
    assert parse_ideal_file(SAMPLE, characteristic=7).ring.characteristic == 7
    assert str(parse_ideal_file(SAMPLE, order="lex").ring.order) == "lex"
    plain = parse_ideal_file("vars: x y\nI = x^2, y", default_characteristic=3, default_order="lex")
    assert plain.ring.characteristic == 3
    assert str(plain.ring.order) == "lex"


def test_bundle_text_reparses(R, cubic):
    text = bundle_text(R, {"cubic": cubic})
    again = parse_ideal_file(text)
    assert again.ideal("cubic") == Ideal(again.ring, [g.to_text() for g in cubic.generators])


def test_errors_report_line_and_column():
    with pytest.raises(ParseError) as info:
        parse_ideal_file("vars: x y\nI = x, y + * x")
    assert info.value.line == 2
    assert info.value.column == 12
    with pytest.raises(ParseError) as info:
        parse_ideal_file("I = x")
    assert info.value.line == 1
    with pytest.raises(ParseError):
        parse_ideal_file("field: Fp 4\nvars: x\nI = x")
    with pytest.raises(ParseError):
        parse_ideal_file("vars: x y\nI = x\nI = y")
    with pytest.raises(ParseError):
        parse_ideal_file("vars: x y\nM = [[x, y], [x]]")
    with pytest.raises(ParseError):
        parse_ideal_file("vars: x y\nM = [[x, y^2], [y, x]]")


def test_infer_twists_anchors_components(R):
    p = R.parse
    target, source = infer_twists([[p("x"), R.zero()], [R.zero(), p("y^2")]])
    assert target == [0, 0]
    assert source == [1, 2]
    with pytest.raises(GradingError):
        infer_twists([[p("x"), p("y^2")], [p("y"), p("x")]])


def test_load_from_path(tmp_path):
    path = tmp_path / "cubic.ideal"
    path.write_text(SAMPLE, encoding="utf-8")
    assert load_ideal_file(path, characteristic=0).ring.characteristic == 0
