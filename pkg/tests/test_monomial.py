from __future__ import annotations

import pytest
from hypothesis import given

from reeskit.errors import EqualTerms, ExponentOverflow, InvalidParams, NotDivisible, ParseError, WrongVariable
from reeskit.monomial import (
    MAX_EXPONENT,
    Binomial,
    IdealParams,
    Monomial,
    cmp_block_order,
    divide,
    format_monomial,
    gcd,
    is_kernel_binomial,
    lcm,
    normalize,
    parse_binomial,
    parse_monomial,
    psi,
)

from conftest import EX1, TINY, m, monomials, params


def test_x_block_dominates():
    assert cmp_block_order(m("T1^7*X1"), m("T0^9*X2")) == 1
    assert m("X1") > m("T0^100*T1^100*X0")


def test_degrevlex_inside_x_block():
    assert cmp_block_order(m("X1^5"), m("T1^4*X0^3*X2^2")) == 1
    # X2 is the cheapest X variable, then X0
    assert m("X0") > m("X2")
    assert m("X1*X2") < m("X0^2")


def test_t_block_breaks_ties():
    assert m("T1*X1") > m("T0*X1")
    assert m("T0^2*X0") > m("T1*X0")


def test_reflexive():
    s = m("T0^3*X1^2")
    assert cmp_block_order(s, s) == 0


@given(monomials, monomials)
def test_total_and_antisymmetric(a, b):
    assert cmp_block_order(a, b) == -cmp_block_order(b, a)
    assert (cmp_block_order(a, b) == 0) == (a == b)


@given(monomials, monomials, monomials)
def test_multiplicative(a, b, c):
    assert cmp_block_order(a, b) == cmp_block_order(a * c, b * c)


@given(monomials, monomials, monomials)
def test_transitive(a, b, c):
    x, y, z = sorted([a, b, c])
    assert x <= y <= z and x <= z


@given(monomials)
def test_one_is_minimum(a):
    assert Monomial.one() <= a


def test_lcm_gcd_examples():
    assert lcm(m("T0^6*X1"), m("T1*X1^2")) == m("T0^6*T1*X1^2")
    s = m("T0*X2^3")
    assert gcd(s, s) == s
    with pytest.raises(NotDivisible):
        divide(m("T0^3*X2"), m("T0^4"))


@given(monomials, monomials)
def test_lcm_times_gcd(a, b):
    assert lcm(a, b) * gcd(a, b) == a * b
    assert divide(lcm(a, b), a) * a == lcm(a, b)


def test_format_and_parse():
    assert format_monomial((0, 0, 0, 0, 0)) == "1"
    assert str(m("T0^6*T1*X1^2")) == "T0^6*T1*X1^2"
    assert parse_monomial("1") == Monomial.one()
    assert parse_monomial(" T0 ^ 2 * X1 ") == Monomial(2, 0, 0, 1, 0)


@given(monomials)
def test_parse_round_trip(a):
    assert parse_monomial(str(a)) == a


def test_parse_errors_report_position():
    with pytest.raises(ParseError) as e:
        parse_monomial("T0^*X1")
    assert e.value.position == 3
    with pytest.raises(ParseError) as e:
        parse_monomial("T0 X1")
    assert e.value.position == 3
    with pytest.raises(ParseError):
        parse_monomial("Y1")
    with pytest.raises(WrongVariable):
        parse_monomial("T0*X1", allowed=("T0", "T1"))


def test_overflow_and_validation():
    with pytest.raises(ExponentOverflow):
        Monomial(MAX_EXPONENT + 1)
    with pytest.raises(ValueError):
        Monomial(-1)
    with pytest.raises(TypeError):
        Monomial.from_exponents((1.5, 0, 0, 0, 0))


def test_psi_examples():
    assert psi(m("X1^5"), EX1) == m("T0^45*T1^30")
    assert psi(m("T0^3"), EX1) == m("T0^3")
    assert psi(m("X0*X2"), TINY) == m("T0^2*T1^2")


@given(params(), monomials, monomials)
def test_psi_is_a_homomorphism(p, a, b):
    assert psi(a * b, p) == psi(a, p) * psi(b, p)


def test_kernel_membership():
    assert is_kernel_binomial(parse_binomial("X1^5 - T1^4*X0^3*X2^2"), EX1)
    assert is_kernel_binomial(parse_binomial("T1^6*X0 - T0^6*X1"), EX1)
    assert not is_kernel_binomial(normalize(m("X1"), m("X0")), EX1)


def test_normalize():
    b = normalize(m("T1^6*X0"), m("T0^6*X1"))
    assert (b.lead, b.tail) == (m("T0^6*X1"), m("T1^6*X0"))
    assert normalize(m("X1^5"), m("T1^4*X0^3*X2^2")).lead == m("X1^5")
    with pytest.raises(EqualTerms):
        normalize(m("X1"), m("X1"))
    with pytest.raises(ValueError):
        Binomial(m("X0"), m("X1"))


def test_params_validation():
    with pytest.raises(InvalidParams):
        IdealParams(5, 5, 0, 2)
    with pytest.raises(InvalidParams):
        IdealParams(5, 5, 5, 2)
    assert EX1.mirrored() == IdealParams(13, 15, 6, 9)
    assert str(EX1) == "(15,13,9,6)"
