import pytest
from hypothesis import given
from hypothesis import strategies as st

from symlie.scalar import I, ONE, Q, ZERO, Scalar

rationals = st.fractions(max_numerator=10**6, max_denominator=10**4)
scalars = st.builds(lambda a, b: Scalar(Q(a), Q(b)), rationals, rationals)


@given(scalars, scalars, scalars)
def test_field_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == ZERO


@given(scalars)
def test_multiplicative_inverse(a):
    if a:
        assert a * a.inverse() == ONE
        assert a / a == ONE
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


def test_imaginary_unit():
    assert I * I == -ONE
    assert (ONE + I) * (ONE - I) == Scalar(2)
    assert I.conjugate() == -I


def test_powers():
    x = Scalar(Q(2, 3), Q(1, 2))
    assert x ** 0 == ONE
    assert x ** 3 == x * x * x
    assert x ** -2 == (x * x).inverse()


@pytest.mark.parametrize(
    "scalar,text",
    [
        (Scalar(3), "3"),
        (Scalar(Q(-1, 2)), "-1/2"),
        (I, "i"),
        (-I, "-1*i"),
        (Scalar(0, Q(2, 3)), "2/3*i"),
        (Scalar(1, 1), "1+i"),
        (Scalar(1, -1), "1-i"),
        (Scalar(Q(1, 2), Q(-3, 4)), "1/2-3/4*i"),
    ],
)
def test_string_forms(scalar, text):
    assert str(scalar) == text


def test_string_forms_reparse():
    from symlie.parser import parse_scalar

    for s in [Scalar(3), Scalar(Q(-5, 7), Q(2, 9)), -I, Scalar(0, Q(-4, 3)), ZERO]:
        assert parse_scalar(str(s)) == s


def test_ground_type_parity():
    # the two rational backends must agree arithmetically
    from fractions import Fraction

    pairs = [(3, 4), (-6, 8), (0, 1), (7, 1), (-22, 7)]
    for n, d in pairs:
        assert Q(n, d) == Fraction(n, d)
        assert str(Q(n, d)) == str(Fraction(n, d))
