import pytest

from gxclean.errors import NonCentralCoefficient, NotIdempotent, ParseError, SizeCapExceeded
from gxclean.parsing import format_int_poly, parse_int_poly_literal, parse_poly_literal, parse_ring_spec
from gxclean.poly import int_poly


@pytest.mark.parametrize("text,order", [
    ("Zn 1", 1),
    ("Prod(Zn 2,Zn 2,Zn 2)", 8),
    ("  Mat 2 (Zn 2)  ", 16),
    ("GR (Zn 2) C3", 8),
    ("TPS (Zn 4) 2", 16),
    ("Quot (Tri 2 (Zn 2)) {2}", 4),
    ("Quot (Zn 6) {}", 6),
    ("Corner (Prod(Zn 2,Zn 3)) 3", 2),
    ("GR (Mat 2 (Zn 2)) C2", 256),
])
def test_ring_specs(text, order):
    R = parse_ring_spec(text)
    assert R.order == order
    assert parse_ring_spec(R.spec).order == order


def test_spec_round_trip_is_canonical():
    for text in ("Prod(Zn 2,Zn 3)", "Mat 2 (Zn 3)", "Tri 2 (Zn 4)", "GR (Zn 7) C3", "TPS (Zn 2) 2"):
        assert parse_ring_spec(text).spec == text


@pytest.mark.parametrize("text,position", [
    ("Zn 0", 3),
    ("Zn -2", 3),
    ("Foo 3", 0),
    ("Mat 2 Zn 2", 6),
    ("Corner (Zn 4) 7", 14),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as exc:
        parse_ring_spec(text)
    assert exc.value.position == position


def test_constructor_errors_propagate():
    with pytest.raises(NotIdempotent):
        parse_ring_spec("Corner (Zn 4) 2")
    with pytest.raises(SizeCapExceeded):
        parse_ring_spec("Mat 2 (Zn 4)", cap=100)


def test_poly_literals():
    R = parse_ring_spec("Zn 5")
    assert parse_poly_literal("poly[0,-2,1]", R) == int_poly(R, [0, -2, 1])
    assert parse_poly_literal("poly[ #4 , 0, 1 ]", R).coeffs == (4, 0, 1)
    assert parse_poly_literal("poly[]", R).is_zero
    with pytest.raises(ParseError):
        parse_poly_literal("[0,1]", R)
    with pytest.raises(ParseError):
        parse_poly_literal("poly[0,#9]", R)
    with pytest.raises(ParseError):
        parse_poly_literal("poly[0,x]", R)
    M = parse_ring_spec("Mat 2 (Zn 2)")
    with pytest.raises(NonCentralCoefficient):
        parse_poly_literal("poly[#1]", M)
    assert parse_poly_literal("poly[#9,1]", M).coeffs == (9, 9)


def test_int_poly_literals():
    assert parse_int_poly_literal("poly[0,1,1]") == [0, 1, 1]
    assert parse_int_poly_literal("poly[-3, 0, 12]") == [-3, 0, 12]
    with pytest.raises(ParseError):
        parse_int_poly_literal("poly[#1]")
    assert format_int_poly([0, 1, 1]) == "x^2 + x"
    assert format_int_poly([-1, 0, -2]) == "-2*x^2 - 1"
    assert format_int_poly([0]) == "0"
