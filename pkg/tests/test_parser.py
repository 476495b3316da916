import pytest

from symlie import ParseError, PolyRing, Polynomial, parse_polynomial, parse_scalar
from symlie.parser import format_polynomial
from symlie.poly import random_polynomial
from symlie.scalar import I, ONE, Scalar

R2 = PolyRing.of("x1", "x2")
R8 = PolyRing.of(*[f"x{k}" for k in range(1, 9)])


def test_expansion_of_products():
    p = parse_polynomial("(x1+x2)*x8 - (x3+x4)*x7", R8)
    expected = {
        (1, 0, 0, 0, 0, 0, 0, 1): ONE,
        (0, 1, 0, 0, 0, 0, 0, 1): ONE,
        (0, 0, 1, 0, 0, 0, 1, 0): -ONE,
        (0, 0, 0, 1, 0, 0, 1, 0): -ONE,
    }
    assert p.terms == expected


def test_zero_literal():
    assert not parse_polynomial("0", R2)


def test_square_expansion():
    # expand by hand: (x1 - x2)^2 = x1^2 - 2 x1 x2 + x2^2
    p = parse_polynomial("(x1 - x2)^2", R2)
    assert p == parse_polynomial("x1^2 - 2*x1*x2 + x2^2", R2)


def test_rational_and_imaginary_coefficients():
    from symlie.scalar import Q

    p = parse_polynomial("1/2*x1 + i*x2 - 3/4*i*x1", R2)
    assert p.coefficient((1, 0)) == Scalar(Q(1, 2), Q(-3, 4))
    assert p.coefficient((0, 1)) == I


def test_no_implicit_multiplication():
    with pytest.raises(ParseError):
        parse_polynomial("2x1", R2)
    with pytest.raises(ParseError):
        parse_polynomial("x1 x2", R2)


def test_power_binds_tighter_than_product():
    p = parse_polynomial("2*x1^2", R2)
    assert p.coefficient((2, 0)) == Scalar(2)


def test_error_positions():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x1 + (x2", R2)
    assert err.value.line == 1
    assert err.value.column == 9

    with pytest.raises(ParseError) as err:
        parse_polynomial("x1 +\n y9", R2)
    assert err.value.line == 2
    assert "undeclared" in err.value.message


def test_undeclared_identifier():
    with pytest.raises(ParseError, match="undeclared"):
        parse_polynomial("x1 + y1", R2)


def test_division_only_for_literals():
    with pytest.raises(ParseError):
        parse_polynomial("x1/2", R2)
    p = parse_polynomial("3/2", R2)
    assert p.coefficient((0, 0)) == Scalar.from_rational(3, 2)


def test_unary_minus_extension():
    assert parse_polynomial("-x1^2 + x2^2", R2) == parse_polynomial("x2^2 - x1^2", R2)
    assert parse_scalar("-i") == -I


def test_reserved_i():
    with pytest.raises(ValueError):
        PolyRing.of("i", "x1")
    # 'i' inside an expression is always the imaginary unit
    p = parse_polynomial("i^2", R2)
    assert p.coefficient((0, 0)) == -ONE


def test_print_parse_round_trip_cases():
    cases = [
        "0",
        "x1^2 + x1*x2 + x2^2",
        "-1*x1^2 + x2^2",
        "i*x1 - x2",
        "(1/2-3/4*i)*x1*x2 + 5",
    ]
    for text in cases:
        p = parse_polynomial(text, R2)
        assert parse_polynomial(format_polynomial(p), R2) == p


def test_print_parse_round_trip_random(rng):
    rings = [R2, PolyRing.of("a", "b", "c")]
    for ring in rings:
        for _ in range(50):
            p = random_polynomial(ring, rng, 4, 5)
            assert parse_polynomial(format_polynomial(p), ring) == p


def test_print_canonical_term_order():
    p = parse_polynomial("x2^2 + x1^2 + x1*x2", R2)
    assert format_polynomial(p) == "x1^2 + x1*x2 + x2^2"


def test_parse_scalar_rejects_variables():
    with pytest.raises(ParseError, match="undeclared"):
        parse_scalar("x1 + 2")
