from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diffmix.poly import (MAX_INDEX, DiffPoly, IndexOverflowError, ParseError, Term, add, degree,
                          eord, format_poly, mul, parse, scale, shift)

from strategies import polys, shifts, terms


def T(*idx):
    return Term.from_indices(*idx)


@pytest.mark.parametrize("t,expected", [(T(0, 1), 2), (T(), 0), (T(0, 0, 3), 3)])
def test_degree(t, expected):
    assert degree(t) == expected


@pytest.mark.parametrize("t,expected", [(T(2, 4), 2), (T(5), 0), (T(0, 0, 3), 3), (T(), 0)])
def test_eord(t, expected):
    assert eord(t) == expected


def test_term_canonical_form():
    t = Term({3: 1, 0: 2, 7: 0})
    assert t.items == ((0, 2), (3, 1))
    assert t == T(3, 0, 0)
    assert str(t) == "y0^2*y3"
    assert Term().is_one() and str(Term()) == "1"


def test_shift_examples():
    a1 = parse("y0*y1 + y2*y4")
    assert shift(a1, 1) == parse("y1*y2 + y3*y5")
    assert shift(a1, 0) == a1


def test_ring_examples():
    p = parse("y0*y1")
    assert add(p, scale(-1, p)).is_zero()
    assert mul(parse("y0 + y2"), parse("y1 + y4")) == parse("y0*y1 + y0*y4 + y1*y2 + y2*y4")
    assert scale(Fraction(1, 2), parse("2*y0^2")) == parse("y0^2")


def test_parse_examples():
    assert parse("y0*y1 + y2*y4") == DiffPoly({T(0, 1): 1, T(2, 4): 1})
    assert parse("0").is_zero()
    p = parse("3/2*y1^2 - y0")
    assert dict(p.terms()) == {T(1, 1): Fraction(3, 2), T(0): Fraction(-1)}


def test_format_order_and_signs():
    p = parse("y10*y18 + y5*y9")
    assert format_poly(p) == "y5*y9 + y10*y18"
    assert format_poly(parse("-y0 + 3/2*y1^2 - 7")) == "-7 - y0 + 3/2*y1^2"
    assert format_poly(DiffPoly.zero()) == "0"


@pytest.mark.parametrize("text,offset", [
    ("y0 +", 4), ("y0 ** y1", 4), ("3/0*y1", 2), ("x1", 0), ("y", 1), ("y0 y1", 3), ("", 0),
])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset


def test_parse_rejects_negative_index():
    with pytest.raises(ParseError, match="negative variable index"):
        parse("y-1")


def test_parse_whitespace_and_leading_sign():
    assert parse("  - 2 * y 3 ^ 2+y0 ") == parse("-2*y3^2 + y0")
    assert parse("+y1") == parse("y1")


def test_shift_overflow_is_checked():
    t = Term({MAX_INDEX - 1: 1})
    assert t.shift(1).order == MAX_INDEX
    with pytest.raises(IndexOverflowError):
        t.shift(2)
    with pytest.raises(IndexOverflowError):
        Term({MAX_INDEX + 1: 1})


def test_zero_coefficients_never_stored():
    p = DiffPoly([(T(0), 1), (T(0), -1), (T(1), 0)])
    assert p.is_zero() and len(p) == 0


@given(polys())
def test_renormalizing_is_identity(p):
    assert DiffPoly(dict(p.terms())) == p
    assert all(c != 0 for _, c in p.terms())


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()
    assert p * 1 == p


@given(polys(), polys(), shifts)
def test_shift_is_ring_endomorphism(p, q, k):
    assert shift(p * q, k) == shift(p, k) * shift(q, k)
    assert shift(p + q, k) == shift(p, k) + shift(q, k)


@given(polys(), shifts, shifts)
def test_shift_composes(p, a, b):
    assert shift(shift(p, a), b) == shift(p, a + b)
    assert shift(p, 0) == p


@given(polys(), polys(), shifts)
def test_shift_injective(p, q, k):
    assert (shift(p, k) == shift(q, k)) == (p == q)


@given(terms(), shifts)
def test_eord_shift_invariant(t, k):
    assert eord(t.shift(k)) == eord(t)


@given(terms(), terms())
def test_degree_additive(s, t):
    assert degree(s * t) == degree(s) + degree(t)


@given(polys())
def test_round_trip(p):
    assert parse(format_poly(p)) == p


@given(st.text(alphabet="y0123456789+-*/^ ", max_size=20))
def test_parser_total(text):
    try:
        parse(text)
    except ParseError as exc:
        assert 0 <= exc.offset <= len(text)
    except IndexOverflowError:
        pass
