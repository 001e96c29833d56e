import pytest
from hypothesis import given

from skein4.laurent import HalfLaurent, q
from skein4.parse import ParseError, parse, parse_element
from skein4.skeinfree import SkeinElement, gen

from conftest import elements


def W(*names):
    return SkeinElement.word([gen(n) for n in names])


def test_examples():
    assert parse_element("t23*t12") == W("t23", "t12")
    e = parse_element("Q^2*t12*t23 + (Q^-2 - 1)*t13")
    assert e == W("t12", "t23").scale(HalfLaurent.monomial(2)) + W("t13").scale(HalfLaurent.monomial(-2) - 1)
    assert len(e) == 2
    assert parse_element("2*t1") == W("t1").scale(2)
    assert parse_element("t13^2") == W("t13", "t13")
    assert parse_element("Q^4*t0") == W("t0").scale(q ** 2)


def test_precedence_and_whitespace():
    assert parse_element("t1 + t2*t3^2") == W("t1") + W("t2", "t3", "t3")
    assert parse_element("(t1+t2)^2") == parse_element("t1*t1 + t1*t2 + t2*t1 + t2*t2")
    assert parse_element(" - t1 - (-2) * t2 ") == W("t2").scale(2) - W("t1")
    assert parse_element("(Q^2)^3") == SkeinElement.scalar(q ** 3)
    assert parse_element("t1234") == W("t0")


@pytest.mark.parametrize("src", ["t21", "t1 +", "t1**t2", "t13^-1", "t5", "(t1", "Q^"])
def test_errors(src):
    with pytest.raises(ParseError):
        parse(src)


def test_error_position():
    with pytest.raises(ParseError) as exc:
        parse("t1 + t21")
    assert exc.value.pos == 5


@given(elements)
def test_parse_render_round_trip(e):
    assert parse_element(e.render()) == e
