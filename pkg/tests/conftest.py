from __future__ import annotations

from hypothesis import strategies as st

from reeskit.monomial import IdealParams, Monomial

EX1 = IdealParams(15, 13, 9, 6)
EX2 = IdealParams(21, 21, 6, 15)
TINY = IdealParams(2, 2, 1, 1)


@st.composite
def params(draw, dmax: int = 40):
    d1 = draw(st.integers(2, dmax))
    d2 = draw(st.integers(2, dmax))
    u1 = draw(st.integers(1, d1 - 1))
    u2 = draw(st.integers(1, d2 - 1))
    return IdealParams(d1, d2, u1, u2)


exponent = st.integers(0, 12)
monomials = st.builds(Monomial, exponent, exponent, exponent, exponent, exponent)


def m(text: str) -> Monomial:
    return Monomial.parse(text)
